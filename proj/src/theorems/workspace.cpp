#include <algorithm>
#include <numeric>

#include "internal.hpp"
#include "snideal/errors.hpp"

namespace snideal::detail {

namespace {

std::vector<MultSet> policy_mults(const RingPtr& r, const CorpusSpec& c) {
  std::vector<MultSet> out;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](MultSet m) {
    if (seen.emplace(m.elements, out.size()).second) out.push_back(std::move(m));
  };
  if (c.singleton_seeds)
    for (Elem x = 0; x < r->order(); ++x) add(multset_close(r, {x}));
  else
    add(multset_close(r, {}));
  if (c.unit_set) add(unit_multset(r));
  if (c.nilpotent_set) {
    MultSet u = unit_multset(r);
    auto seed = multset_generators(*r, u.elements);
    seed.push_back(r->zero());
    add(multset_close(r, seed));
  }
  std::sort(out.begin(), out.end(),
            [](const MultSet& a, const MultSet& b) { return canonical_less(a.elements, b.elements); });
  return out;
}

std::string key_of(const RingSpec& s) { return s.canonical(); }

}  // namespace

RingData::RingData(RingPtr r, const CorpusSpec& c)
    : ring(std::move(r)),
      cls(std::make_unique<Classifier>(ring)),
      ideals(all_ideals(ring)),
      nil(ring->nilradical_set()),
      units(ring->unit_set()),
      corpus_(&c) {
  for (std::uint32_t k = 0; k < ideals.size(); ++k) {
    index_.emplace(ideals[k].elements, k);
    if (ideals[k].generators.empty())
      ideals[k].generators = minimal_generators(*ring, ideals[k].elements);
    if (!c.principal_only || ideals[k].generators.size() <= 1) policy.push_back(k);
    if (ideals[k].is_proper()) proper_.push_back(k);
  }
}

const std::vector<MultSet>& RingData::mults() {
  if (!mults_) {
    mults_ = policy_mults(ring, *corpus_);
    for (const auto& m : *mults_) seeds_.push_back(seed_of(m));
  }
  return *mults_;
}

std::vector<std::size_t> RingData::unit_mults() {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < mults().size(); ++k)
    if ((*mults_)[k].elements.is_subset_of(units)) out.push_back(k);
  return out;
}

const ElementSet& RingData::saturation(const ElementSet& s) {
  auto it = saturations_.find(s);
  if (it == saturations_.end())
    it = saturations_.emplace(s, snideal::saturation(multset_from_set(ring, s)).elements).first;
  return it->second;
}

bool RingData::superfluous(std::uint32_t k) {
  if (superfluous_.empty()) superfluous_.assign(ideals.size(), -1);
  if (superfluous_[k] < 0) superfluous_[k] = is_superfluous(ideals[k]).holds ? 1 : 0;
  return superfluous_[k] == 1;
}

const std::vector<std::uint32_t>& RingData::proper() { return proper_; }

std::uint32_t RingData::index_of(const ElementSet& ideal) const {
  auto it = index_.find(ideal);
  if (it == index_.end()) throw PreconditionViolated("set is not an ideal of " + ring->name());
  return it->second;
}

const std::vector<std::uint32_t>& RingData::products() {
  if (products_.empty()) {
    const std::size_t n = ideals.size();
    products_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        auto p = index_of(product_set(*ring, ideals[a].elements, ideals[b].elements));
        products_[a * n + b] = products_[b * n + a] = p;
      }
  }
  return products_;
}

const std::vector<std::uint32_t>& RingData::intersections() {
  if (intersections_.empty()) {
    const std::size_t n = ideals.size();
    intersections_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        ElementSet both = ideals[a].elements;
        both &= ideals[b].elements;
        intersections_[a * n + b] = intersections_[b * n + a] = index_of(both);
      }
  }
  return intersections_;
}

RingData& Workspace::data(const RingPtr& r) {
  auto it = by_id_.find(r->id());
  if (it != by_id_.end()) return *it->second;
  return *by_id_.emplace(r->id(), std::make_unique<RingData>(r, corpus_)).first->second;
}

RingData& Workspace::data(const RingSpec& spec) {
  const std::string key = key_of(spec);
  if (auto it = by_spec_.find(key); it != by_spec_.end()) return *it->second;
  RingPtr r;
  switch (spec.kind) {
    case RingSpec::Kind::Zn: r = build_ring(spec); break;
    case RingSpec::Kind::Product:
      r = spec.parts.size() == 2 ? product(spec.parts[0], spec.parts[1]).ring : build_ring(spec);
      break;
    case RingSpec::Kind::Quotient: r = quotient(spec.parts.at(0), spec.elems).ring; break;
    case RingSpec::Kind::Localization: r = localization(spec.parts.at(0), spec.elems).ring; break;
    case RingSpec::Kind::Idealization: r = idealization(spec.parts.at(0), *spec.module).ring; break;
    case RingSpec::Kind::Amalgamation:
      r = amalgamation({spec.parts.at(0), spec.parts.at(1), *spec.hom, spec.elems}).ring;
      break;
  }
  RingData& d = data(r);
  by_spec_.emplace(key, &d);
  return d;
}

RingData& Workspace::product(const RingSpec& left, const RingSpec& right) {
  const std::string key = key_of(left) + "|" + key_of(right);
  if (auto it = products_.find(key); it != products_.end()) return *it->second;
  RingData& d = data(product_ring(data(left).ring, data(right).ring));
  products_.emplace(key, &d);
  return d;
}

const Quotient& Workspace::quotient(const RingSpec& base, const std::vector<Elem>& gens) {
  const std::string key = key_of(base) + "/" + show(gens);
  auto& slot = quotients_[key];
  if (!slot) slot = std::make_unique<Quotient>(quotient_ring(ideal_generate(data(base).ring, gens)));
  return *slot;
}

const Localization& Workspace::localization(const RingSpec& base, const std::vector<Elem>& seed) {
  const std::string key = key_of(base) + "@" + show(seed);
  auto& slot = localizations_[key];
  if (!slot) slot = std::make_unique<Localization>(localize(multset_close(data(base).ring, seed)));
  return *slot;
}

const Idealization& Workspace::idealization(const RingSpec& base, const ModuleSpec& m) {
  const std::string key = key_of(base) + "(+)" + m.to_json().dump();
  auto& slot = idealizations_[key];
  if (!slot) slot = std::make_unique<Idealization>(idealize(data(base).ring, m));
  return *slot;
}

const Amalgamation& Workspace::amalgamation(const AmalgamationRecipe& a) {
  const std::string key =
      key_of(a.base) + ">" + key_of(a.target) + ":" + a.hom.to_json().dump() + show(a.ideal);
  auto& slot = amalgamations_[key];
  if (!slot) {
    auto& target = data(a.target);
    auto f = hom_from_spec(data(a.base).ring, target.ring, a.hom);
    slot = std::make_unique<Amalgamation>(amalgamate(f, ideal_generate(target.ring, a.ideal)));
  }
  return *slot;
}

Ideal Workspace::ideal(const RingPtr& r, const std::vector<Elem>& gens) const {
  return ideal_generate(r, gens);
}

MultSet Workspace::mult(const RingPtr& r, const std::vector<Elem>& seed) const {
  return multset_close(r, seed);
}

// Corpus recipes --------------------------------------------------------------

const std::vector<std::pair<std::uint64_t, std::uint64_t>>& Workspace::product_pairs() {
  if (!pairs_) {
    pairs_.emplace();
    for (std::uint64_t a = 2; a * a <= corpus_.product_max; ++a)
      for (std::uint64_t b = a; a * b <= corpus_.product_max; ++b) pairs_->emplace_back(a, b);
  }
  return *pairs_;
}

const std::vector<RingSpec>& Workspace::base_rings() {
  if (!base_) {
    base_.emplace();
    for (std::uint64_t n = std::max<std::uint64_t>(2, corpus_.zn_min); n <= corpus_.zn_max; ++n)
      base_->push_back(RingSpec::zn(n));
    for (auto [a, b] : product_pairs())
      base_->push_back(RingSpec::product({RingSpec::zn(a), RingSpec::zn(b)}));
  }
  return *base_;
}

const std::vector<IdealizationRecipe>& Workspace::idealizations() {
  if (idealization_recipes_) return *idealization_recipes_;
  idealization_recipes_.emplace();
  auto& out = *idealization_recipes_;
  const std::uint64_t cap = corpus_.idealization_max;
  for (std::uint64_t n = std::max<std::uint64_t>(2, corpus_.zn_min); n <= corpus_.zn_max; ++n) {
    if (n * n <= cap) out.push_back({RingSpec::zn(n), ModuleSpec::self()});
    for (std::uint64_t m = 2; m <= n; ++m)
      if (n % m == 0 && n * m <= cap && m != n)
        out.push_back({RingSpec::zn(n), ModuleSpec::scalar({static_cast<std::uint32_t>(m)})});
    for (std::uint64_t m1 = 2; m1 <= n; ++m1)
      for (std::uint64_t m2 = m1; m2 <= n; ++m2)
        if (n % m1 == 0 && n % m2 == 0 && n * m1 * m2 <= cap)
          out.push_back({RingSpec::zn(n), ModuleSpec::scalar({static_cast<std::uint32_t>(m1),
                                                              static_cast<std::uint32_t>(m2)})});
  }
  for (auto [a, b] : product_pairs())
    if (a * b * a * b <= cap)
      out.push_back({RingSpec::product({RingSpec::zn(a), RingSpec::zn(b)}), ModuleSpec::self()});
  return out;
}

const std::vector<AmalgamationRecipe>& Workspace::amalgamations() {
  if (amalgamation_recipes_) return *amalgamation_recipes_;
  amalgamation_recipes_.emplace();
  auto& out = *amalgamation_recipes_;
  const std::uint64_t cap = corpus_.amalgamation_max;
  HomSpec identity{HomSpec::Kind::Identity, {}};
  HomSpec reduce{HomSpec::Kind::Reduce, {}};
  auto along = [&](const RingSpec& base, const RingSpec& target, const HomSpec& h,
                   std::uint64_t base_order) {
    for (const auto& j : data(target).ideals)
      if (!j.is_zero() && base_order * j.size() <= cap)
        out.push_back({base, target, h, j.generators});
  };
  for (std::uint64_t n = std::max<std::uint64_t>(2, corpus_.zn_min); n <= corpus_.zn_max; ++n) {
    if (2 * n > cap) continue;
    along(RingSpec::zn(n), RingSpec::zn(n), identity, n);
    for (std::uint64_t m = 2; m < n; ++m)
      if (n % m == 0) along(RingSpec::zn(n), RingSpec::zn(m), reduce, n);
  }
  for (auto [a, b] : product_pairs())
    if (a * b <= 16) {
      auto p = RingSpec::product({RingSpec::zn(a), RingSpec::zn(b)});
      along(p, p, identity, a * b);
    }
  return out;
}

const std::vector<RingSpec>& Workspace::ring_corpus() {
  if (corpus_rings_) return *corpus_rings_;
  std::vector<RingSpec> out = base_rings();
  const std::size_t base_count = out.size();
  for (std::size_t k = 0; k < base_count; ++k) {
    const RingSpec base = out[k];
    RingData& d = data(base);
    if (d.ring->order() <= corpus_.quotient_base_max)
      for (const auto& i : d.ideals)
        if (!i.is_zero() && i.is_proper()) out.push_back(RingSpec::quotient(base, i.generators));
    if (d.ring->order() <= corpus_.localization_base_max) {
      std::vector<ElementSet> kernels;
      for (const auto& s : d.mults()) {
        if (s.contains(d.ring->zero()) || s.seed.size() > 1) continue;
        const auto& loc = localization(base, s.seed);
        const auto& k = loc.canonical.kernel.elements;
        if (k.count() == 1 || std::find(kernels.begin(), kernels.end(), k) != kernels.end()) continue;
        kernels.push_back(k);
        out.push_back(RingSpec::localization(base, s.seed));
      }
    }
  }
  for (const auto& r : idealizations()) out.push_back(RingSpec::idealization(r.base, r.module));
  for (const auto& a : amalgamations())
    out.push_back(RingSpec::amalgamation(a.base, a.target, a.hom, a.ideal));
  for (const auto& e : corpus_.extra_rings) out.push_back(e);
  corpus_rings_ = std::move(out);
  return *corpus_rings_;
}

}  // namespace snideal::detail
