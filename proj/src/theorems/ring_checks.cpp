// Checks that quantify over one ring at a time: (R, I, S) triples and
// (R, S) pairs drawn from the ring corpus.

#include <algorithm>
#include <unordered_map>

#include "internal.hpp"
#include "snideal/errors.hpp"

namespace snideal::detail {

namespace {

constexpr const char* kCollapsed = "collapsed-regime";

struct Triple {
  RingData& d;
  Ideal i;
  MultSet s;
  bool in_units;
};

Triple resolve_triple(Workspace& ws, const Instance& inst) {
  RingData& d = ws.data(inst.ring);
  Ideal i = ws.ideal(d.ring, inst.ideals.at(0));
  MultSet s = ws.mult(d.ring, inst.mults.at(0));
  if (!i.is_proper()) throw PreconditionViolated("instance ideal is not proper");
  if (s.elements.intersects(i.elements)) throw NotDisjoint("instance multiplicative set meets the ideal");
  const bool in_units = s.elements.is_subset_of(d.units);
  return {d, std::move(i), std::move(s), in_units};
}

struct Pair {
  RingData& d;
  MultSet s;
  bool in_units;
};

Pair resolve_pair(Workspace& ws, const Instance& inst) {
  RingData& d = ws.data(inst.ring);
  MultSet s = ws.mult(d.ring, inst.mults.at(0));
  const bool in_units = s.elements.is_subset_of(d.units);
  return {d, std::move(s), in_units};
}

Instance make(const std::string& check, const RingSpec& spec, std::vector<std::vector<Elem>> ideals,
              std::vector<std::vector<Elem>> mults, std::string part = {}) {
  Instance inst;
  inst.check = check;
  inst.part = std::move(part);
  inst.ring = spec;
  inst.ideals = std::move(ideals);
  inst.mults = std::move(mults);
  return inst;
}

/// (R, I, S) with I proper and disjoint from S, over corpus rings of order at
/// most `max_order`.
void each_triple(Workspace& ws, const std::string& check, std::uint64_t max_order, bool units_only,
                 const Emit& emit) {
  for (const auto& spec : ws.ring_corpus()) {
    RingData& d = ws.data(spec);
    if (d.ring->order() > max_order) continue;
    for (std::size_t k = 0; k < d.mults().size(); ++k) {
      const auto& s = d.mults()[k].elements;
      if (units_only && !s.is_subset_of(d.units)) continue;
      d.for_disjoint(s, [&](const Ideal& i) { emit(make(check, spec, {i.generators}, {d.seed(k)})); });
    }
  }
}

/// (R, S) over corpus rings of order at most `max_order`.
void each_pair(Workspace& ws, const std::string& check, std::uint64_t max_order, bool units_only,
               const Emit& emit) {
  for (const auto& spec : ws.ring_corpus()) {
    RingData& d = ws.data(spec);
    if (d.ring->order() > max_order) continue;
    for (std::size_t k = 0; k < d.mults().size(); ++k) {
      if (units_only && !d.mults()[k].elements.is_subset_of(d.units)) continue;
      emit(make(check, spec, {}, {d.seed(k)}));
    }
  }
}

constexpr std::uint64_t kAny = ~std::uint64_t{0};

std::string el(Elem x) { return std::to_string(x); }

Outcome tagged(Outcome o, bool collapsed) {
  if (collapsed) o.tag(kCollapsed);
  return o;
}

/// Some s in S with (I:s) equal to the nilradical.
bool colon_hits_nil(RingData& d, const ElementSet& i, const ElementSet& s) {
  bool found = false;
  s.for_each([&](Elem x) { found = found || d.cls->colon(i, x) == d.nil; });
  return found;
}

// T-P1 -------------------------------------------------------------------------

Outcome eval_p1(Workspace& ws, const Instance& inst) {
  auto [d, i, s, in_units] = resolve_triple(ws, inst);
  Claims c;
  auto v = d.cls->relative(SKind::SN, i.elements, s.elements);
  v.witnesses.for_each([&](Elem w) {
    c.require(scale_set(*d.ring, w, i.elements).is_subset_of(d.nil),
              "S-element " + el(w) + " does not send I into the nilradical");
  });
  if (in_units && v.holds) c.require(i.elements.is_subset_of(d.nil), "S in U(R), I S-n, but I not nil");
  if (i.elements == d.nil)
    c.require(v.holds == d.cls->holds(SKind::SPrime, i.elements, s.elements),
              "nilradical: S-n and S-prime disagree");
  if (i.is_zero() && in_units)
    c.require(v.holds == d.n_ideal(i.elements), "zero ideal, S in U(R): S-n and n-ideal disagree");
  return tagged(c.outcome(), in_units);
}

// T-CHAR -----------------------------------------------------------------------

/// Elements s of S satisfying the ideal-pair form: JK inside I forces
/// sJ inside the nilradical or sK inside I.
ElementSet ideal_pair_form(RingData& d, const ElementSet& i, const ElementSet& s) {
  const auto& prod = d.products();
  const std::size_t n = d.ideals.size();
  std::vector<char> inside(n);
  for (std::size_t k = 0; k < n; ++k) inside[k] = d.ideals[k].elements.is_subset_of(i);
  const auto& cls = d.ring->principal_ideals().class_of;
  std::unordered_map<std::uint32_t, bool> by_class;
  ElementSet out(d.ring->order());
  s.for_each([&](Elem x) {
    auto [it, fresh] = by_class.emplace(cls[x], true);
    if (fresh) {
      const ElementSet& nil_colon = d.cls->colon(d.nil, x);
      const ElementSet& i_colon = d.cls->colon(i, x);
      std::vector<std::size_t> left, right;
      for (std::size_t k = 0; k < n; ++k) {
        if (!d.ideals[k].elements.is_subset_of(nil_colon)) left.push_back(k);
        if (!d.ideals[k].elements.is_subset_of(i_colon)) right.push_back(k);
      }
      for (std::size_t a : left) {
        for (std::size_t b : right)
          if (inside[prod[a * n + b]]) {
            it->second = false;
            break;
          }
        if (!it->second) break;
      }
    }
    if (it->second) out.insert(x);
  });
  return out;
}

Outcome eval_char(Workspace& ws, const Instance& inst) {
  auto [d, i, s, in_units] = resolve_triple(ws, inst);
  Claims c;
  auto v = d.cls->relative(SKind::SN, i.elements, s.elements);
  auto form = ideal_pair_form(d, i.elements, s.elements);
  c.require(form == v.witnesses, "element-pair and ideal-pair S-elements differ");
  return c.outcome();
}

// T-CHAR2 ----------------------------------------------------------------------

struct TernaryForms {
  bool elements = true;
  bool ideals = true;
};

/// Ternary forms for one s: a1 a2 a3 in I (resp. I1 I2 I3 inside I) forces
/// some s a_j into the nilradical or some s a_k into I.
TernaryForms ternary_forms(RingData& d, const ElementSet& i, Elem x) {
  TernaryForms f;
  const ElementSet& nil_colon = d.cls->colon(d.nil, x);
  const ElementSet& i_colon = d.cls->colon(i, x);
  const auto& reps = d.ring->principal_ideals().representative;
  std::vector<Elem> free;
  for (Elem r : reps)
    if (!nil_colon.contains(r) && !i_colon.contains(r)) free.push_back(r);
  const FiniteRing& R = *d.ring;
  for (std::size_t a = 0; a < free.size() && f.elements; ++a)
    for (std::size_t b = a; b < free.size() && f.elements; ++b) {
      Elem ab = R.mul(free[a], free[b]);
      for (std::size_t c = b; c < free.size(); ++c)
        if (i.contains(R.mul(ab, free[c]))) {
          f.elements = false;
          break;
        }
    }
  const auto& prod = d.products();
  const std::size_t n = d.ideals.size();
  std::vector<std::size_t> loose;
  for (std::size_t k = 0; k < n; ++k)
    if (!d.ideals[k].elements.is_subset_of(nil_colon) && !d.ideals[k].elements.is_subset_of(i_colon))
      loose.push_back(k);
  for (std::size_t a = 0; a < loose.size() && f.ideals; ++a)
    for (std::size_t b = a; b < loose.size() && f.ideals; ++b) {
      std::size_t ab = prod[loose[a] * n + loose[b]];
      for (std::size_t c = b; c < loose.size(); ++c)
        if (d.ideals[prod[ab * n + loose[c]]].elements.is_subset_of(i)) {
          f.ideals = false;
          break;
        }
    }
  return f;
}

Outcome eval_char2(Workspace& ws, const Instance& inst) {
  auto [d, i, s, in_units] = resolve_triple(ws, inst);
  if (!d.sn(d.nil, s.elements)) return Outcome::skip("hypothesis fails: nilradical not S-n");
  const bool one = d.sn(i.elements, s.elements);
  auto witnesses = d.cls->relative(SKind::SN, i.elements, s.elements).witnesses;
  // The binary form is the definition; an s good for n = 2 and n = 3 at once
  // exists exactly when I is S-n.
  bool elem3 = false, ideal3 = false, elem23 = false, ideal23 = false;
  const auto& cls = d.ring->principal_ideals().class_of;
  std::unordered_map<std::uint32_t, TernaryForms> seen;
  s.elements.for_each([&](Elem x) {
    auto it = seen.find(cls[x]);
    if (it == seen.end()) it = seen.emplace(cls[x], ternary_forms(d, i.elements, x)).first;
    elem3 = elem3 || it->second.elements;
    ideal3 = ideal3 || it->second.ideals;
    elem23 = elem23 || (it->second.elements && witnesses.contains(x));
    ideal23 = ideal23 || (it->second.ideals && witnesses.contains(x));
  });
  Claims c;
  c.require(one == elem23, "S-n differs from the element form for n = 2, 3");
  c.require(one == ideal23, "S-n differs from the ideal form for n = 2, 3");
  c.require(!one || (elem3 && ideal3), "S-n but a ternary form fails for every s");
  return c.outcome();
}

// T-COLON ----------------------------------------------------------------------

Outcome eval_colon(Workspace& ws, const Instance& inst) {
  auto [d, i, s, in_units] = resolve_triple(ws, inst);
  Claims c;
  auto v = d.cls->relative(SKind::SN, i.elements, s.elements);
  s.elements.for_each([&](Elem x) {
    const ElementSet col = d.cls->colon(i.elements, x);
    const bool col_n = d.n_ideal(col);
    if (col_n) c.require(v.witnesses.contains(x), "(I:" + el(x) + ") is an n-ideal but I fails with that s");
    if (!v.witnesses.contains(x)) return;
    const ElementSet nil_col = d.cls->colon(d.nil, x);
    if (d.n_ideal(nil_col))
      c.require(col_n, "(nil:" + el(x) + ") n-ideal and s an S-element, yet (I:s) not n-ideal");
    if (in_units) c.require(col_n, "S in U(R), S-element " + el(x) + " with (I:s) not n-ideal");
  });
  return tagged(c.outcome(), in_units);
}

// T-REG ------------------------------------------------------------------------

Outcome eval_reg(Workspace& ws, const Instance& inst) {
  auto [d, i, s, in_units] = resolve_triple(ws, inst);
  if (!in_units) return Outcome::skip("hypothesis fails: S not within U(R)");
  if (!d.cls->holds(SKind::SPrime, i.elements, s.elements))
    return Outcome::skip("hypothesis fails: I not S-prime");
  Claims c;
  c.require(d.sn(i.elements, s.elements) == colon_hits_nil(d, i.elements, s.elements),
            "S-prime I: S-n differs from (I:s) = nilradical for some s");
  return tagged(c.outcome(), true);
}

// T-UN -------------------------------------------------------------------------

Outcome eval_un_replication(Workspace& ws, const Instance& inst) {
  auto [d, s, in_units] = resolve_pair(ws, inst);
  auto sn = all_s_n_ideals(*d.cls, d.ideals, s);
  std::vector<std::vector<Elem>> got;
  for (const auto& i : sn) got.push_back(i.to_vector());
  std::size_t n_ideals = 0;
  for (auto k : d.proper()) n_ideals += d.n_ideal(d.ideals[k].elements);
  Claims c;
  c.require(got == std::vector<std::vector<Elem>>{{0}, {0, 2, 4}}, "S-n ideals of Z_6 are not <0>, <2>");
  c.require(n_ideals == 0, "Z_6 has a proper n-ideal");
  Outcome o = c.outcome();
  o.note = std::string("Z_6, S = {1,3}: S-n ideals <0>, <2>; proper n-ideals: ") +
           std::to_string(n_ideals) + (o.status == Outcome::Status::Pass ? " (matches)" : " (MISMATCH)");
  return o;
}

Outcome eval_un(Workspace& ws, const Instance& inst) {
  if (inst.part == "replication") return eval_un_replication(ws, inst);
  auto [d, s, in_units] = resolve_pair(ws, inst);
  if (!in_units) return Outcome::skip("hypothesis fails: S not within U(R)");
  bool all_sn = true, all_n = true;
  for (auto k : d.proper()) {
    all_sn = all_sn && d.sn(d.ideals[k].elements, s.elements);
    all_n = all_n && d.n_ideal(d.ideals[k].elements);
  }
  const bool un = ring_predicates(*d.ring).is_un_ring;
  Claims c;
  c.require(all_sn == all_n, "every proper ideal S-n differs from every proper ideal n");
  c.require(all_n == un, "every proper ideal n differs from UN-ring");
  return tagged(c.outcome(), true);
}

// T-INTEG ----------------------------------------------------------------------

Outcome eval_integ(Workspace& ws, const Instance& inst) {
  auto [d, s, in_units] = resolve_pair(ws, inst);
  if (!in_units) return Outcome::skip("hypothesis fails: S not within U(R)");
  Claims c;
  if (is_reduced(*d.ring)) {
    bool both = false;
    for (auto k : d.proper())
      both = both || (d.cls->holds(SKind::SPrime, d.ideals[k].elements, s.elements) &&
                      d.sn(d.ideals[k].elements, s.elements));
    c.require(is_integral_domain(*d.ring) == both, "reduced R: domain differs from S-prime and S-n ideal");
  }
  const auto p = ring_predicates(*d.ring);
  c.require(p.is_field == (p.is_von_neumann_regular && d.sn(zero_ideal(d.ring).elements, s.elements)),
            "field differs from VNR with 0 S-n");
  return tagged(c.outcome(), true);
}

// T-ZN / T-ZNGEN ---------------------------------------------------------------

Outcome eval_zn(Workspace& ws, const Instance& inst) {
  RingData& d = ws.data(inst.ring);
  const std::uint64_t n = d.ring->modulus();
  if (!n) throw PreconditionViolated("Z_n check on a ring that is not Z_n");
  const auto primes = inst.ctx.at("primes").get<std::vector<std::uint64_t>>();
  std::vector<Elem> seed;
  for (auto p : primes) seed.push_back(static_cast<Elem>(p % n));
  MultSet s = multset_close(d.ring, seed);
  std::vector<std::uint64_t> brute;
  for (const auto& i : all_s_n_ideals(*d.cls, d.ideals, s)) brute.push_back(i.generators.at(0));
  const auto fast = zn_fast_classify(n, primes);
  // Regimes as stated, from the number of distinct primes of n (k) and of P (m).
  const std::size_t k = prime_factors(n).size(), m = primes.size();
  std::vector<std::uint64_t> expected;
  if (m + 1 == k)
    for (const auto& i : d.ideals)
      if (!i.elements.intersects(s.elements)) expected.push_back(i.generators.at(0));
  Claims c;
  c.require(brute == fast.generators, "brute force differs from the factorization prediction");
  c.require(brute == expected, "brute force differs from the stated regime");
  return c.outcome();
}

void gen_zn(Workspace& ws, const Emit& emit, bool subsets) {
  const auto& corpus = ws.corpus();
  for (std::uint64_t n = std::max<std::uint64_t>(2, corpus.zn_min); n <= corpus.zn_max; ++n) {
    const auto primes = prime_factors(n);
    const std::uint64_t masks = std::uint64_t{1} << primes.size();
    for (std::uint64_t mask = 1; mask < masks; ++mask) {
      std::vector<std::uint64_t> chosen;
      for (std::size_t b = 0; b < primes.size(); ++b)
        if (mask >> b & 1) chosen.push_back(primes[b]);
      if (!subsets && chosen.size() != 1) continue;
      Instance inst = make(subsets ? "T-ZNGEN" : "T-ZN", RingSpec::zn(n), {}, {});
      inst.ctx["primes"] = chosen;
      emit(inst);
    }
  }
}

// T-MAX ------------------------------------------------------------------------

Outcome eval_max(Workspace& ws, const Instance& inst) {
  auto [d, s, in_units] = resolve_pair(ws, inst);
  if (!in_units) return Outcome::skip("hypothesis fails: S not within U(R)");
  Claims c;
  for (const auto& i : maximal_members(all_s_n_ideals(*d.cls, d.ideals, s))) {
    c.require(d.cls->holds(SKind::SPrime, i.elements, s.elements), "maximal S-n ideal not S-prime");
    c.require(colon_hits_nil(d, i.elements, s.elements), "maximal S-n ideal: no (I:s) = nilradical");
  }
  return tagged(c.outcome(), true);
}

// T-PROD -----------------------------------------------------------------------

Outcome eval_prod(Workspace& ws, const Instance& inst) {
  auto [d, i, s, in_units] = resolve_triple(ws, inst);
  if (!d.sn(i.elements, s.elements)) return Outcome::skip("hypothesis fails: I not S-n");
  const auto& prod = d.products();
  const auto& meet = d.intersections();
  const std::size_t n = d.ideals.size();
  const std::size_t a = d.index_of(i.elements);
  Claims c;
  for (std::size_t b = 0; b < n; ++b) {
    if (!d.ideals[b].elements.intersects(s.elements)) continue;
    c.require(d.sn(d.ideals[prod[a * n + b]].elements, s.elements), "IJ not S-n for J meeting S");
    c.require(d.sn(d.ideals[meet[a * n + b]].elements, s.elements), "I meet J not S-n for J meeting S");
  }
  return c.outcome();
}

// T-FAM ------------------------------------------------------------------------

Outcome eval_fam(Workspace& ws, const Instance& inst) {
  auto [d, s, in_units] = resolve_pair(ws, inst);
  const auto& meet = d.intersections();
  const std::size_t n = d.ideals.size();
  std::vector<char> good(n), meets(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& e = d.ideals[k].elements;
    meets[k] = e.intersects(s.elements);
    good[k] = !e.contains(d.ring->one()) && !meets[k] && d.sn(e, s.elements);
  }
  const auto& proper = d.proper();
  Claims c;
  auto family = [&](const std::vector<std::size_t>& f) {
    std::size_t all = f[0];
    for (std::size_t k = 1; k < f.size(); ++k) all = meet[all * n + f[k]];
    bool every = std::all_of(f.begin(), f.end(), [&](std::size_t k) { return good[k]; });
    if (every) c.require(good[all], "intersection of S-n ideals not S-n");
    const std::size_t subsets = std::size_t{1} << f.size();
    for (std::size_t omega = 1; omega + 1 < subsets; ++omega) {
      std::size_t part = d.ideals.size();
      bool rest = true;
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (omega >> k & 1)
          part = part == d.ideals.size() ? f[k] : meet[part * n + f[k]];
        else
          rest = rest && good[f[k]];
      }
      if (rest && meets[part]) c.require(good[all], "intersection with a part meeting S not S-n");
    }
  };
  for (std::size_t a = 0; a < proper.size(); ++a)
    for (std::size_t b = a + 1; b < proper.size(); ++b) {
      family({proper[a], proper[b]});
      for (std::size_t e = b + 1; e < proper.size(); ++e) family({proper[a], proper[b], proper[e]});
    }
  return c.outcome();
}

// T-SUBSET ---------------------------------------------------------------------

bool cofactor(const FiniteRing& r, const ElementSet& small, const ElementSet& big) {
  bool ok = true;
  big.for_each([&](Elem t) {
    if (!ok) return;
    bool found = false;
    for (Elem u = big.first(); u < big.universe() && !found; u = big.next(u + 1))
      found = small.contains(r.mul(t, u));
    ok = found;
  });
  return ok;
}

Outcome eval_subset_replication(Workspace& ws, const Instance& inst) {
  RingData& d = ws.data(inst.ring);
  Ideal i = ws.ideal(d.ring, inst.ideals.at(0));
  MultSet big = ws.mult(d.ring, inst.mults.at(0)), small = ws.mult(d.ring, inst.mults.at(1));
  Claims c;
  const bool big_sn = d.sn(i.elements, big.elements), small_sn = d.sn(i.elements, small.elements);
  c.require(big_sn, "<4> is not {1,3,9}-n");
  c.require(!small_sn, "<4> is {1}-n");
  c.require(!cofactor(*d.ring, small.elements, big.elements), "cofactor property holds for {1} in {1,3,9}");
  Outcome o = c.outcome();
  o.note = std::string("Z_12, <4>: {1,3,9}-n ") + (big_sn ? "yes" : "no") + ", {1}-n " +
           (small_sn ? "yes" : "no") + "; the converse needs the cofactor property";
  return o;
}

Outcome eval_subset(Workspace& ws, const Instance& inst) {
  if (inst.part == "replication") return eval_subset_replication(ws, inst);
  RingData& d = ws.data(inst.ring);
  MultSet s = ws.mult(d.ring, inst.mults.at(0)), t = ws.mult(d.ring, inst.mults.at(1));
  if (!s.elements.is_subset_of(t.elements)) throw PreconditionViolated("S is not inside T");
  const bool cof = cofactor(*d.ring, s.elements, t.elements);
  Claims c;
  d.for_disjoint(t.elements, [&](const Ideal& i) {
    const bool ss = d.sn(i.elements, s.elements), tt = d.sn(i.elements, t.elements);
    c.require(!ss || tt, "S-n but not T-n for S inside T");
    if (cof) c.require(!tt || ss, "cofactor property holds, T-n but not S-n");
  });
  Outcome o = c.outcome();
  if (cof) o.tag("cofactor");
  return o;
}

void gen_subset(Workspace& ws, const Emit& emit) {
  {
    Instance rep = make("T-SUBSET", RingSpec::zn(12), {{4}}, {{3}, {}}, "replication");
    emit(rep);
  }
  for (const auto& spec : ws.ring_corpus()) {
    RingData& d = ws.data(spec);
    if (d.ring->order() > ws.corpus().sweep_base_max) continue;
    const auto& ms = d.mults();
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = 0; b < ms.size(); ++b)
        if (a != b && ms[a].elements.is_subset_of(ms[b].elements) && !ms[b].contains(d.ring->zero()))
          emit(make("T-SUBSET", spec, {}, {d.seed(a), d.seed(b)}));
  }
}

// T-SAT ------------------------------------------------------------------------

Outcome eval_sat(Workspace& ws, const Instance& inst) {
  auto [d, i, s, in_units] = resolve_triple(ws, inst);
  const ElementSet& sat = d.saturation(s.elements);
  Claims c;
  c.require(!sat.intersects(i.elements), "saturation meets I");
  c.require(d.sn(i.elements, s.elements) == d.sn(i.elements, sat), "S-n differs from S*-n");
  return c.outcome();
}

// T-SUM ------------------------------------------------------------------------

Outcome eval_sum(Workspace& ws, const Instance& inst) {
  auto [d, s, in_units] = resolve_pair(ws, inst);
  if (!in_units) return Outcome::skip("hypothesis fails: S not within U(R)");
  std::vector<std::uint32_t> good;
  for (auto k : d.proper())
    if (d.sn(d.ideals[k].elements, s.elements)) good.push_back(k);
  Claims c;
  for (auto k : good) c.require(d.superfluous(k), "S-n ideal not superfluous");
  for (std::size_t a = 0; a < good.size(); ++a)
    for (std::size_t b = a + 1; b < good.size(); ++b) {
      auto sum = sum_set(*d.ring, d.ideals[good[a]].elements, d.ideals[good[b]].elements);
      c.require(!sum.contains(d.ring->one()) && d.sn(sum, s.elements), "sum of S-n ideals not S-n");
    }
  return tagged(c.outcome(), true);
}

// Worked examples --------------------------------------------------------------

Outcome eval_examples(Workspace& ws, const Instance& inst) {
  RingData& d = ws.data(inst.ring);
  MultSet s = ws.mult(d.ring, inst.mults.at(0));
  Claims c;
  Outcome o;
  if (inst.part == "z12-four") {
    Ideal i = ws.ideal(d.ring, inst.ideals.at(0));
    auto v = d.cls->relative(SKind::SN, i.elements, s.elements);
    auto n = is_n_ideal(i);
    c.require(v.holds && v.witnesses.contains(3), "<4> not S-n with witness 3");
    c.require(!n.holds, "<4> is an n-ideal");
    c.require(n.counterexample == std::make_pair(Elem{2}, Elem{2}), "n-ideal counterexample is not (2,2)");
    o = c.outcome();
    o.note = "Z_12, <4>, S = {1,3,9}: S-n yes, witnesses " + show(v.witnesses.to_vector()) +
             "; n-ideal no" +
             (n.counterexample ? ", counterexample (" + el(n.counterexample->first) + "," +
                                     el(n.counterexample->second) + ")"
                               : "");
  } else if (inst.part == "z12-two") {
    Ideal i = ws.ideal(d.ring, inst.ideals.at(0));
    c.require(is_prime(i).holds, "<2> not prime");
    c.require(d.cls->holds(SKind::SPrime, i.elements, s.elements), "<2> not S-prime");
    c.require(d.sn(i.elements, s.elements), "<2> not S-n");
    bool colon_is_i = true;
    s.elements.for_each([&](Elem x) { colon_is_i = colon_is_i && d.cls->colon(i.elements, x) == i.elements; });
    c.require(colon_is_i, "(I:s) differs from I for some s");
    c.require(i.elements != d.nil && d.nil.to_vector() == std::vector<Elem>{0, 6}, "nilradical is not <6>");
    o = c.outcome();
    o.note = "Z_12, <2>, S = {1,3,9}: prime, S-prime, S-n; (I:s) = I != nilradical {0,6} for all s";
  } else if (inst.part == "z6") {
    return eval_un_replication(ws, inst);
  } else {
    throw PreconditionViolated("unknown example: " + inst.part);
  }
  if (o.status != Outcome::Status::Pass) o.note += " (MISMATCH)";
  return o;
}

void gen_examples(Workspace&, const Emit& emit) {
  emit(make("EXAMPLES", RingSpec::zn(12), {{4}}, {{3}}, "z12-four"));
  emit(make("EXAMPLES", RingSpec::zn(12), {{2}}, {{3}}, "z12-two"));
  emit(make("EXAMPLES", RingSpec::zn(6), {}, {{3}}, "z6"));
}

}  // namespace

void add_ring_checks(std::vector<CheckDef>& out) {
  const auto triples = [](std::string id, bool units_only, std::uint64_t CorpusSpec::*cap) {
    return [id, units_only, cap](Workspace& ws, const Emit& emit) {
      each_triple(ws, id, cap ? ws.corpus().*cap : kAny, units_only, emit);
    };
  };
  const auto pairs = [](std::string id, bool units_only, std::uint64_t CorpusSpec::*cap) {
    return [id, units_only, cap](Workspace& ws, const Emit& emit) {
      each_pair(ws, id, cap ? ws.corpus().*cap : kAny, units_only, emit);
    };
  };
  out.push_back({"T-P1", "S-n ideals are annihilated into the nilradical by an S-element",
                 triples("T-P1", false, nullptr), eval_p1});
  out.push_back({"T-CHAR", "element-pair and ideal-pair forms agree",
                 triples("T-CHAR", false, &CorpusSpec::ideal_pair_max), eval_char});
  out.push_back({"T-CHAR2", "ternary element and ideal forms when the nilradical is S-n",
                 triples("T-CHAR2", false, &CorpusSpec::triple_max), eval_char2});
  out.push_back({"T-COLON", "colon ideals (I:s) and S-n ideals", triples("T-COLON", false, nullptr),
                 eval_colon});
  out.push_back({"T-REG", "S in U(R), I S-prime: S-n iff (I:s) is the nilradical",
                 triples("T-REG", true, nullptr), eval_reg});
  out.push_back({"T-UN", "S in U(R): all S-n iff all n iff UN-ring",
                 [](Workspace& ws, const Emit& emit) {
                   emit(make("T-UN", RingSpec::zn(6), {}, {{3}}, "replication"));
                   each_pair(ws, "T-UN", kAny, true, emit);
                 },
                 eval_un});
  out.push_back({"T-INTEG", "S in U(R): domain and field criteria", pairs("T-INTEG", true, nullptr),
                 eval_integ});
  out.push_back({"T-ZN", "S_p-n ideals of Z_n by factorization",
                 [](Workspace& ws, const Emit& emit) { gen_zn(ws, emit, false); }, eval_zn});
  out.push_back({"T-ZNGEN", "S_P-n ideals of Z_n for prime subsets P",
                 [](Workspace& ws, const Emit& emit) { gen_zn(ws, emit, true); }, eval_zn});
  out.push_back({"T-MAX", "S in U(R): maximal S-n ideals are S-prime", pairs("T-MAX", true, nullptr),
                 eval_max});
  out.push_back({"T-PROD", "IJ and I meet J are S-n when J meets S",
                 triples("T-PROD", false, &CorpusSpec::ideal_pair_max), eval_prod});
  out.push_back({"T-FAM", "intersections of families of size 2 and 3",
                 pairs("T-FAM", false, &CorpusSpec::ideal_pair_max), eval_fam});
  out.push_back({"T-SUBSET", "S inside T with cofactors: T-n implies S-n", gen_subset, eval_subset});
  out.push_back({"T-SAT", "S-n iff S*-n", triples("T-SAT", false, nullptr), eval_sat});
  out.push_back({"T-SUM", "S in U(R): S-n ideals are superfluous and closed under sums",
                 pairs("T-SUM", true, &CorpusSpec::ideal_pair_max), eval_sum});
  out.push_back({"EXAMPLES", "worked examples on Z_12 and Z_6", gen_examples, eval_examples});
}

}  // namespace snideal::detail
