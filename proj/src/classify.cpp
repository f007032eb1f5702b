#include "snideal/classify.hpp"

#include <algorithm>

#include "snideal/errors.hpp"

namespace snideal {

const char* predicate_name(Predicate p) {
  switch (p) {
    case Predicate::Prime: return "prime";
    case Predicate::Primary: return "primary";
    case Predicate::RIdeal: return "r-ideal";
    case Predicate::NIdeal: return "n-ideal";
  }
  return "?";
}

const char* skind_name(SKind k) {
  switch (k) {
    case SKind::SPrime: return "S-prime";
    case SKind::SPrimary: return "S-primary";
    case SKind::SN: return "S-n";
  }
  return "?";
}

Classifier::Classifier(RingPtr r) : r_(std::move(r)), pi_(&r_->principal_ideals()) {
  members_.assign(pi_->representative.size(), ElementSet(r_->order()));
  for (Elem x = 0; x < r_->order(); ++x) members_[pi_->class_of[x]].insert(x);
}

Classifier::Profile& Classifier::profile(const ElementSet& ideal) {
  auto it = profiles_.find(ideal);
  if (it != profiles_.end()) return *it->second;
  auto p = std::make_unique<Profile>();
  p->colon.reserve(pi_->representative.size());
  for (Elem rep : pi_->representative) p->colon.push_back(colon_set(*r_, ideal, rep));
  return *profiles_.emplace(ideal, std::move(p)).first->second;
}

const ElementSet& Classifier::colon(const ElementSet& ideal, Elem x) {
  return profile(ideal).colon[pi_->class_of[x]];
}

const ElementSet& Classifier::radical(const ElementSet& ideal) {
  Profile& p = profile(ideal);
  if (!p.radical) p.radical = radical_set(*r_, ideal);
  return *p.radical;
}

bool Classifier::class_ok(const Profile& ip, const ElementSet& active,
                          const ElementSet& allowed) const {
  for (std::size_t k = 0; k < members_.size(); ++k)
    if (!ip.colon[k].is_subset_of(allowed) && members_[k].intersects(active)) return false;
  return true;
}

std::optional<std::pair<Elem, Elem>> Classifier::least_failure(const Profile& ip,
                                                               const ElementSet& active,
                                                               const ElementSet& allowed) const {
  for (Elem a = active.first(); a < active.universe(); a = active.next(a + 1)) {
    ElementSet bad = ip.colon[pi_->class_of[a]];
    bad.subtract(allowed);
    if (!bad.empty()) return std::make_pair(a, bad.first());
  }
  return std::nullopt;
}

Verdict Classifier::absolute(Predicate p, const ElementSet& ideal) {
  if (ideal.contains(r_->one()))
    throw PreconditionViolated(std::string(predicate_name(p)) + " test requires a proper ideal");
  const Profile& ip = profile(ideal);
  ElementSet active(r_->order()), allowed = ideal;
  switch (p) {
    case Predicate::Prime: active = ideal.complement(); break;
    case Predicate::Primary:
      active = ideal.complement();
      allowed = radical(ideal);
      break;
    case Predicate::RIdeal: active = r_->zero_divisor_set().complement(); break;
    case Predicate::NIdeal: active = r_->nilradical_set().complement(); break;
  }
  Verdict v;
  v.witnesses = ElementSet(r_->order());
  v.counterexample = least_failure(ip, active, allowed);
  v.holds = !v.counterexample;
  return v;
}

bool Classifier::holds(Predicate p, const ElementSet& ideal) { return absolute(p, ideal).holds; }

std::pair<ElementSet, ElementSet> Classifier::bounds(SKind k, const ElementSet& ideal,
                                                     std::uint32_t cls) {
  const ElementSet& ic = profile(ideal).colon[cls];
  switch (k) {
    case SKind::SN: return {profile(r_->nilradical_set()).colon[cls].complement(), ic};
    case SKind::SPrime: return {ic.complement(), ic};
    case SKind::SPrimary: {
      ElementSet act = ic.complement();
      ElementSet rad = radical(ideal);
      return {std::move(act), profile(rad).colon[cls]};
    }
  }
  return {};
}

Verdict Classifier::run_relative(SKind k, const ElementSet& ideal, const ElementSet& s,
                                 bool stop_early) {
  if (s.intersects(ideal))
    throw NotDisjoint("S meets the ideal; " + std::string(skind_name(k)) + " is undefined");
  Verdict v;
  v.witnesses = ElementSet(r_->order());
  std::vector<std::int8_t> by_class(members_.size(), -1);
  for (Elem x = s.first(); x < s.universe(); x = s.next(x + 1)) {
    auto c = pi_->class_of[x];
    if (by_class[c] < 0) {
      auto [active, allowed] = bounds(k, ideal, c);
      by_class[c] = class_ok(profile(ideal), active, allowed) ? 1 : 0;
    }
    if (by_class[c]) {
      v.witnesses.insert(x);
      if (stop_early) break;
    }
  }
  v.holds = !v.witnesses.empty();
  if (v.holds || stop_early) return v;

  // A pair refuting the implication for every s at once.
  ElementSet active = ElementSet::full(r_->order());
  ElementSet allowed(r_->order());
  for (std::uint32_t c = 0; c < by_class.size(); ++c) {
    if (by_class[c] < 0) continue;
    auto [act, all] = bounds(k, ideal, c);
    active &= act;
    allowed |= all;
  }
  v.counterexample = least_failure(profile(ideal), active, allowed);
  return v;
}

Verdict Classifier::relative(SKind k, const ElementSet& ideal, const ElementSet& s) {
  return run_relative(k, ideal, s, false);
}

bool Classifier::holds(SKind k, const ElementSet& ideal, const ElementSet& s) {
  return run_relative(k, ideal, s, true).holds;
}

Verdict is_prime(const Ideal& i) { return Classifier(i.ring).absolute(Predicate::Prime, i.elements); }
Verdict is_primary(const Ideal& i) {
  return Classifier(i.ring).absolute(Predicate::Primary, i.elements);
}
Verdict is_r_ideal(const Ideal& i) {
  return Classifier(i.ring).absolute(Predicate::RIdeal, i.elements);
}
Verdict is_n_ideal(const Ideal& i) {
  return Classifier(i.ring).absolute(Predicate::NIdeal, i.elements);
}

Verdict s_witnesses(SKind k, const Ideal& i, const MultSet& s) {
  require_same_ring(*i.ring, *s.ring);
  return Classifier(i.ring).relative(k, i.elements, s.elements);
}

Classification classify_ideal(const Ideal& i, const MultSet& s) {
  require_same_ring(*i.ring, *s.ring);
  if (!i.is_proper()) throw PreconditionViolated("classification requires a proper ideal");
  Classifier c(i.ring);
  const FiniteRing& r = *i.ring;
  Classification out;
  out.ideal = i;
  out.mult = s;
  out.disjoint = !s.elements.intersects(i.elements);
  out.prime = c.absolute(Predicate::Prime, i.elements);
  out.primary = c.absolute(Predicate::Primary, i.elements);
  out.r_ideal = c.absolute(Predicate::RIdeal, i.elements);
  out.n_ideal = c.absolute(Predicate::NIdeal, i.elements);
  out.radical = ideal_from_set(i.ring, c.radical(i.elements));
  out.nil_annihilators = ElementSet(r.order());
  s.elements.for_each([&](Elem x) {
    if (scale_set(r, x, i.elements).is_subset_of(r.nilradical_set())) out.nil_annihilators.insert(x);
  });
  if (out.disjoint) {
    out.s_prime = c.relative(SKind::SPrime, i.elements, s.elements);
    out.s_primary = c.relative(SKind::SPrimary, i.elements, s.elements);
    out.s_n = c.relative(SKind::SN, i.elements, s.elements);
    out.s_n->witnesses.for_each([&](Elem w) {
      out.witness_colons.emplace_back(w, ideal_from_set(i.ring, c.colon(i.elements, w)));
    });
  }
  return out;
}

std::vector<Ideal> all_s_n_ideals(Classifier& c, const std::vector<Ideal>& ideals,
                                  const MultSet& s) {
  std::vector<Ideal> out;
  for (const auto& i : ideals)
    if (!s.elements.intersects(i.elements) && c.holds(SKind::SN, i.elements, s.elements))
      out.push_back(i);
  return out;
}

std::vector<Ideal> all_s_n_ideals(const RingPtr& r, const MultSet& s) {
  require_same_ring(*r, *s.ring);
  Classifier c(r);
  return all_s_n_ideals(c, all_ideals(r), s);
}

std::vector<Ideal> maximal_members(const std::vector<Ideal>& ideals) {
  std::vector<Ideal> out;
  for (const auto& i : ideals) {
    bool maximal = std::none_of(ideals.begin(), ideals.end(), [&](const Ideal& j) {
      return !(j.elements == i.elements) && i.elements.is_subset_of(j.elements);
    });
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<Ideal> maximal_s_n_ideals(const RingPtr& r, const MultSet& s) {
  return maximal_members(all_s_n_ideals(r, s));
}

const char* regime_name(ZnRegime r) { return r == ZnRegime::None ? "NONE" : "ALL_DISJOINT"; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

ZnFastResult zn_fast_classify(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
  if (n < 2) throw InvalidSpec("zn_fast_classify requires n >= 2");
  if (primes.empty()) throw InvalidSpec("the prime set P must be nonempty");
  const auto factors = prime_factors(n);
  std::vector<std::uint64_t> p_set = primes;
  std::sort(p_set.begin(), p_set.end());
  p_set.erase(std::unique(p_set.begin(), p_set.end()), p_set.end());
  for (auto p : p_set) {
    if (p < 2 || prime_factors(p) != std::vector<std::uint64_t>{p})
      throw InvalidSpec(std::to_string(p) + " is not prime");
    if (n % p) throw InvalidSpec(std::to_string(p) + " does not divide " + std::to_string(n));
  }
  const std::size_t k = factors.size(), m = p_set.size();
  ZnFastResult res;
  if (m + 1 != k) return res;

  res.regime = ZnRegime::AllDisjoint;
  // <d> meets S exactly when every prime factor of d lies in P.
  for (std::uint64_t d = n;; --d) {
    if (n % d == 0) {
      bool outside = false;
      for (auto q : prime_factors(d))
        outside = outside || !std::binary_search(p_set.begin(), p_set.end(), q);
      if (outside) res.generators.push_back(d == n ? 0 : d);
    }
    if (d == 1) break;
  }
  return res;
}

}  // namespace snideal
