#include "snideal/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "snideal/errors.hpp"
#include "snideal/limits.hpp"

namespace snideal {

namespace {

// Exhaustive hom validation is quadratic; above this the constructions below
// are trusted (they are homomorphisms by definition).
constexpr std::size_t kValidatePairsMax = 4'000'000;

RingPtr checked_derived(RingSpec spec, std::size_t order, Elem zero, Elem one,
                        FiniteRing::BinaryFn add, FiniteRing::BinaryFn mul,
                        FiniteRing::UnaryFn neg) {
  auto r = FiniteRing::derived(std::move(spec), order, zero, one, std::move(add), std::move(mul),
                               std::move(neg));
  auto rep = verify_axioms(*r, limits().exhaustive_axiom_max, 100'000);
  if (!rep.ok) throw PreconditionViolated("construction is not a commutative ring: " + rep.failure);
  return r;
}

RingHom build_hom(const RingPtr& source, const RingPtr& target, std::vector<Elem> map,
                  bool validate) {
  const FiniteRing& a = *source;
  const FiniteRing& b = *target;
  if (map.size() != a.order())
    throw PreconditionViolated("hom table has " + std::to_string(map.size()) +
                               " entries, source has " + std::to_string(a.order()));
  for (Elem y : map)
    if (!b.valid(y)) throw PreconditionViolated("hom value " + std::to_string(y) + " out of range");
  if (map[a.zero()] != b.zero()) throw PreconditionViolated("hom does not send 0 to 0");
  if (map[a.one()] != b.one()) throw PreconditionViolated("hom does not send 1 to 1");
  if (validate) {
    for (Elem x = 0; x < a.order(); ++x)
      for (Elem y = x; y < a.order(); ++y) {
        if (map[a.add(x, y)] != b.add(map[x], map[y]))
          throw PreconditionViolated("hom fails additivity at (" + std::to_string(x) + ", " +
                                     std::to_string(y) + ")");
        if (map[a.mul(x, y)] != b.mul(map[x], map[y]))
          throw PreconditionViolated("hom fails multiplicativity at (" + std::to_string(x) +
                                     ", " + std::to_string(y) + ")");
      }
  }
  ElementSet ker(a.order()), image(b.order());
  for (Elem x = 0; x < a.order(); ++x) {
    if (map[x] == b.zero()) ker.insert(x);
    image.insert(map[x]);
  }
  RingHom f{source, target, std::move(map), ideal_from_set(source, std::move(ker)), false};
  f.surjective = image.is_full();
  return f;
}

RingHom trusted_hom(const RingPtr& source, const RingPtr& target, std::vector<Elem> map) {
  bool small = source->order() * source->order() <= kValidatePairsMax;
  return build_hom(source, target, std::move(map), small);
}

std::vector<Elem> ideal_gens(const Ideal& i) {
  return i.generators.empty() ? minimal_generators(*i.ring, i.elements) : i.generators;
}

std::vector<Elem> mult_gens(const MultSet& s) {
  return s.seed.empty() ? multset_generators(*s.ring, s.elements) : s.seed;
}

}  // namespace

RingHom make_hom(const RingPtr& source, const RingPtr& target, std::vector<Elem> map) {
  return build_hom(source, target, std::move(map), true);
}

RingHom identity_hom(const RingPtr& r) {
  std::vector<Elem> map(r->order());
  std::iota(map.begin(), map.end(), Elem{0});
  return trusted_hom(r, r, std::move(map));
}

RingHom hom_from_spec(const RingPtr& source, const RingPtr& target, const HomSpec& spec) {
  std::vector<Elem> map;
  switch (spec.kind) {
    case HomSpec::Kind::Identity:
      if (source->order() != target->order())
        throw PreconditionViolated("identity hom needs rings of equal order");
      map.resize(source->order());
      std::iota(map.begin(), map.end(), Elem{0});
      break;
    case HomSpec::Kind::Reduce: {
      std::uint64_t n = source->modulus(), m = target->modulus();
      if (!n || !m || n % m)
        throw PreconditionViolated("reduce hom needs Z_n -> Z_m with m dividing n");
      for (std::uint64_t x = 0; x < n; ++x) map.push_back(static_cast<Elem>(x % m));
      break;
    }
    case HomSpec::Kind::Table: map = spec.table; break;
  }
  return make_hom(source, target, std::move(map));
}

HomSpec hom_spec_of(const RingHom& f) {
  HomSpec h;
  bool identity = f.source->spec() == f.target->spec();
  for (Elem x = 0; identity && x < f.map.size(); ++x) identity = f.map[x] == x;
  if (identity) return h;
  if (std::uint64_t m = f.target->modulus(); m && f.source->modulus()) {
    bool reduce = true;
    for (Elem x = 0; reduce && x < f.map.size(); ++x) reduce = f.map[x] == x % m;
    if (reduce) {
      h.kind = HomSpec::Kind::Reduce;
      return h;
    }
  }
  h.kind = HomSpec::Kind::Table;
  h.table = f.map;
  return h;
}

HomImage hom_image_ideal(const RingHom& f, const Ideal& i) {
  require_same_ring(*f.source, *i.ring);
  if (!f.surjective) throw PreconditionViolated("image of an ideal needs a surjective hom");
  ElementSet img(f.target->order());
  i.elements.for_each([&](Elem x) { img.insert(f.map[x]); });
  return {ideal_from_set(f.target, std::move(img)), f.kernel.elements.is_subset_of(i.elements)};
}

Ideal hom_preimage_ideal(const RingHom& f, const Ideal& j) {
  require_same_ring(*f.target, *j.ring);
  ElementSet pre(f.source->order());
  for (Elem x = 0; x < f.source->order(); ++x)
    if (j.elements.contains(f.map[x])) pre.insert(x);
  return ideal_from_set(f.source, std::move(pre));
}

MultSet hom_image_multset(const RingHom& f, const MultSet& s) {
  require_same_ring(*f.source, *s.ring);
  ElementSet img(f.target->order());
  s.elements.for_each([&](Elem x) { img.insert(f.map[x]); });
  std::vector<Elem> seed;
  for (Elem x : s.seed) seed.push_back(f.map[x]);
  return MultSet{f.target, std::move(img), std::move(seed)};
}

std::vector<Elem> multset_generators(const FiniteRing& r, const ElementSet& s) {
  std::vector<Elem> gens;
  ElementSet span(r.order());
  span.insert(r.one());
  for (Elem x = s.first(); x < s.universe() && !(span == s); x = s.next(x + 1)) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    // Re-close: multiply everything reached so far by the new generator.
    std::vector<Elem> frontier = span.to_vector();
    while (!frontier.empty()) {
      Elem y = frontier.back();
      frontier.pop_back();
      for (Elem g : gens) {
        Elem z = r.mul(y, g);
        if (!span.contains(z)) {
          span.insert(z);
          frontier.push_back(z);
        }
      }
    }
  }
  return gens;
}

// Quotient ------------------------------------------------------------------

Quotient quotient_ring(const Ideal& i) {
  if (!i.is_proper()) throw PreconditionViolated("quotient by the whole ring");
  const RingPtr& parent = i.ring;
  const std::size_t n = parent->order();

  struct Data {
    RingPtr parent;
    std::vector<Elem> rep;       // coset -> least member
    std::vector<Elem> coset_of;  // element -> coset
  };
  auto d = std::make_shared<Data>();
  d->parent = parent;
  d->coset_of.assign(n, UINT32_MAX);
  const auto members = i.to_vector();
  for (Elem x = 0; x < n; ++x) {
    if (d->coset_of[x] != UINT32_MAX) continue;
    auto idx = static_cast<Elem>(d->rep.size());
    d->rep.push_back(x);
    for (Elem m : members) d->coset_of[parent->add(x, m)] = idx;
  }

  auto spec = RingSpec::quotient(parent->spec(), ideal_gens(i));
  auto ring = checked_derived(
      std::move(spec), d->rep.size(), d->coset_of[parent->zero()], d->coset_of[parent->one()],
      [d](Elem a, Elem b) { return d->coset_of[d->parent->add(d->rep[a], d->rep[b])]; },
      [d](Elem a, Elem b) { return d->coset_of[d->parent->mul(d->rep[a], d->rep[b])]; },
      [d](Elem a) { return d->coset_of[d->parent->neg(d->rep[a])]; });
  auto proj = trusted_hom(parent, ring, d->coset_of);
  return Quotient{ring, std::move(proj), i};
}

// Product -------------------------------------------------------------------

RingPtr product_ring(const RingPtr& left, const RingPtr& right) {
  return FiniteRing::product({left, right});
}

ElementSet cross_set(const FiniteRing& product, const ElementSet& left, const ElementSet& right) {
  if (product.factors().size() != 2) throw PreconditionViolated("cross_set needs a two-factor product");
  const std::size_t w = product.factors()[0]->order();
  ElementSet out(product.order());
  right.for_each([&](Elem y) { left.for_each([&](Elem x) { out.insert(static_cast<Elem>(x + w * y)); }); });
  return out;
}

Ideal product_ideal(const RingPtr& product, const Ideal& left, const Ideal& right) {
  require_same_ring(*product->factors().at(0), *left.ring);
  require_same_ring(*product->factors().at(1), *right.ring);
  return ideal_from_set(product, cross_set(*product, left.elements, right.elements));
}

MultSet product_multset(const RingPtr& product, const MultSet& left, const MultSet& right) {
  require_same_ring(*product->factors().at(0), *left.ring);
  require_same_ring(*product->factors().at(1), *right.ring);
  return multset_from_set(product, cross_set(*product, left.elements, right.elements));
}

// Localization --------------------------------------------------------------

Elem Localization::fraction(Elem numerator, Elem denominator) const {
  const FiniteRing& r = *canonical.source;
  if (!r.valid(numerator) || !mult.contains(denominator))
    throw PreconditionViolated("fraction needs a numerator in R and a denominator in S");
  Elem x = r.mul(numerator, (*inverse_mod_kernel)[denominator]);
  return (*index_of_coset)[(*coset_rep)[x]];
}

Ideal Localization::extend(const Ideal& i) const {
  require_same_ring(*canonical.source, *i.ring);
  return ideal_from_set(ring, fractions_over(i.elements));
}

Ideal Localization::contract(const Ideal& e) const { return hom_preimage_ideal(canonical, e); }

ElementSet Localization::fractions_over(const ElementSet& numerators) const {
  ElementSet out(ring->order());
  numerators.for_each([&](Elem a) { mult.elements.for_each([&](Elem t) { out.insert(fraction(a, t)); }); });
  return out;
}

Localization localize(const MultSet& s) {
  const RingPtr& base = s.ring;
  const FiniteRing& r = *base;
  const std::size_t n = r.order();
  if (s.contains(r.zero()))
    throw DegenerateLocalization("localizing at a set containing 0 gives the zero ring");

  // K = {x : u x = 0 for some u in S}; r/s ~ x/1 exactly when r - x s lies in K.
  ElementSet kernel(n);
  std::vector<Elem> row(n);
  s.elements.for_each([&](Elem u) {
    r.mul_row(u, row);
    for (Elem x = 0; x < n; ++x)
      if (row[x] == r.zero()) kernel.insert(x);
  });
  const auto kmembers = kernel.to_vector();
  auto coset_rep = std::make_shared<std::vector<Elem>>(n, UINT32_MAX);
  for (Elem x = 0; x < n; ++x) {
    if ((*coset_rep)[x] != UINT32_MAX) continue;
    for (Elem k : kmembers) (*coset_rep)[r.add(x, k)] = x;
  }
  // Every s in S is invertible modulo K in a finite ring.
  auto inverse = std::make_shared<std::vector<Elem>>(n, UINT32_MAX);
  s.elements.for_each([&](Elem u) {
    r.mul_row(u, row);
    for (Elem y = 0; y < n; ++y)
      if ((*coset_rep)[row[y]] == (*coset_rep)[r.one()]) {
        (*inverse)[u] = y;
        break;
      }
    if ((*inverse)[u] == UINT32_MAX)
      throw PreconditionViolated("denominator " + std::to_string(u) + " not invertible");
  });

  auto index_of = std::make_shared<std::vector<Elem>>(n, UINT32_MAX);
  std::vector<std::pair<Elem, Elem>> fractions;
  std::vector<Elem> keys;
  const auto dens = s.to_vector();
  for (Elem num = 0; num < n; ++num)
    for (Elem den : dens) {
      Elem key = (*coset_rep)[r.mul(num, (*inverse)[den])];
      if ((*index_of)[key] != UINT32_MAX) continue;
      (*index_of)[key] = static_cast<Elem>(fractions.size());
      fractions.emplace_back(num, den);
      keys.push_back(key);
    }

  struct Data {
    RingPtr base;
    std::vector<Elem> keys;
    std::shared_ptr<const std::vector<Elem>> rep, index;
  };
  auto d = std::make_shared<Data>(Data{base, keys, coset_rep, index_of});
  auto lookup = [d](Elem x) { return (*d->index)[(*d->rep)[x]]; };
  auto spec = RingSpec::localization(r.spec(), mult_gens(s));
  auto ring = checked_derived(
      std::move(spec), keys.size(), lookup(r.zero()), lookup(r.one()),
      [d, lookup](Elem a, Elem b) { return lookup(d->base->add(d->keys[a], d->keys[b])); },
      [d, lookup](Elem a, Elem b) { return lookup(d->base->mul(d->keys[a], d->keys[b])); },
      [d, lookup](Elem a) { return lookup(d->base->neg(d->keys[a])); });

  std::vector<Elem> map(n);
  for (Elem x = 0; x < n; ++x) map[x] = lookup(x);
  Localization loc{ring, trusted_hom(base, ring, std::move(map)), s, std::move(fractions),
                   inverse, index_of, coset_rep};
  return loc;
}

ExtendContract extend_contract(const Ideal& i, const MultSet& s, const MultSet& t) {
  require_same_ring(*i.ring, *t.ring);
  require_same_ring(*s.ring, *t.ring);
  if (!s.elements.is_subset_of(t.elements)) throw PreconditionViolated("S must be contained in T");
  if (t.elements.intersects(i.elements)) throw NotDisjoint("I meets T");
  Localization loc = localize(t);
  Ideal e = loc.extend(i);
  Ideal c = loc.contract(e);
  return {std::move(loc), std::move(e), std::move(c)};
}

// Idealization --------------------------------------------------------------

std::shared_ptr<const Module> Module::build(const RingPtr& r, const ModuleSpec& spec) {
  std::shared_ptr<Module> m(new Module);
  m->spec_ = spec;
  m->ring_ = r;
  const std::size_t n = r->order();
  if (spec.kind == ModuleSpec::Kind::Self) {
    m->order_ = n;
    m->add_.resize(n * n);
    m->act_.resize(n * n);
    m->neg_.resize(n);
    for (Elem a = 0; a < n; ++a) {
      m->neg_[a] = r->neg(a);
      for (Elem b = 0; b < n; ++b) {
        m->add_[a * n + b] = r->add(a, b);
        m->act_[a * n + b] = r->mul(a, b);
      }
    }
    // R acting on itself: zero is r->zero(), which is index 0 for every
    // construction in this library.
    if (r->zero() != 0) throw PreconditionViolated("module over a ring whose zero is not index 0");
    return m;
  }

  std::size_t order = 1;
  for (auto g : spec.group) {
    if (g == 0) throw InvalidSpec("module group orders must be positive");
    order *= g;
    if (order > limits().table_order_cap) throw CapExceeded("module too large");
  }
  m->order_ = order;
  const auto& grp = spec.group;
  auto digits = [&](Elem x) {
    std::vector<Elem> d(grp.size());
    for (std::size_t i = 0; i < grp.size(); ++i) {
      d[i] = x % grp[i];
      x /= grp[i];
    }
    return d;
  };
  auto undigits = [&](const std::vector<Elem>& d) {
    Elem x = 0, w = 1;
    for (std::size_t i = 0; i < grp.size(); ++i) {
      x += d[i] * w;
      w *= grp[i];
    }
    return x;
  };
  m->add_.resize(order * order);
  m->neg_.resize(order);
  for (Elem a = 0; a < order; ++a) {
    auto da = digits(a);
    std::vector<Elem> dn(grp.size());
    for (std::size_t i = 0; i < grp.size(); ++i) dn[i] = (grp[i] - da[i]) % grp[i];
    m->neg_[a] = undigits(dn);
    for (Elem b = 0; b < order; ++b) {
      auto db = digits(b);
      for (std::size_t i = 0; i < grp.size(); ++i) db[i] = (da[i] + db[i]) % grp[i];
      m->add_[a * order + b] = undigits(db);
    }
  }
  m->act_.resize(n * order);
  if (spec.scalar_action) {
    std::uint64_t modulus = r->modulus();
    if (!modulus) throw InvalidSpec("scalar module action needs a Z_n base ring");
    for (auto g : grp)
      if (modulus % g) throw InvalidSpec("scalar action needs every group order to divide n");
    for (Elem x = 0; x < n; ++x)
      for (Elem a = 0; a < order; ++a) {
        auto da = digits(a);
        for (std::size_t i = 0; i < grp.size(); ++i)
          da[i] = static_cast<Elem>((std::uint64_t{x} % grp[i]) * da[i] % grp[i]);
        m->act_[x * order + a] = undigits(da);
      }
  } else {
    if (spec.action.size() != n) throw InvalidSpec("module action table needs one row per ring element");
    for (Elem x = 0; x < n; ++x) {
      if (spec.action[x].size() != order) throw InvalidSpec("module action row has wrong length");
      for (Elem a = 0; a < order; ++a) {
        if (spec.action[x][a] >= order) throw InvalidSpec("module action value out of range");
        m->act_[x * order + a] = spec.action[x][a];
      }
    }
  }

  for (Elem a = 0; a < order; ++a)
    if (m->act(r->one(), a) != a) throw PreconditionViolated("module action is not unital");
  for (Elem x = 0; x < n; ++x)
    for (Elem a = 0; a < order; ++a) {
      for (Elem b = 0; b < order; ++b)
        if (m->act(x, m->add(a, b)) != m->add(m->act(x, a), m->act(x, b)))
          throw PreconditionViolated("module action is not additive in the module");
      for (Elem y = 0; y < n; ++y) {
        if (m->act(r->add(x, y), a) != m->add(m->act(x, a), m->act(y, a)))
          throw PreconditionViolated("module action is not additive in the ring");
        if (m->act(r->mul(x, y), a) != m->act(x, m->act(y, a)))
          throw PreconditionViolated("module action is not associative");
      }
    }
  return m;
}

bool Module::is_submodule(const ElementSet& s) const {
  if (s.universe() != order_ || !s.contains(zero())) return false;
  const auto xs = s.to_vector();
  for (Elem a : xs) {
    for (Elem b : xs)
      if (!s.contains(add(a, b))) return false;
    for (Elem r = 0; r < ring_->order(); ++r)
      if (!s.contains(act(r, a))) return false;
  }
  return true;
}

ElementSet Module::closure_sum(const ElementSet& a, const ElementSet& b) const {
  ElementSet out = a;
  const auto as = a.to_vector();
  b.for_each([&](Elem y) {
    if (out.contains(y)) return;
    for (Elem x : as) out.insert(add(x, y));
  });
  return out;
}

std::vector<ElementSet> Module::all_submodules() const {
  if (order_ > limits().enumeration_cap) throw CapExceeded("submodule enumeration cap exceeded");
  std::vector<ElementSet> cyclic, found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem m = 0; m < order_; ++m) {
    ElementSet s(order_);
    for (Elem r = 0; r < ring_->order(); ++r) s.insert(act(r, m));
    if (seen.insert(s).second) {
      cyclic.push_back(s);
      found.push_back(s);
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& c : cyclic) {
      if (c.is_subset_of(found[i])) continue;
      ElementSet s = closure_sum(found[i], c);
      if (seen.insert(s).second) found.push_back(std::move(s));
    }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    return canonical_less(a, b);
  });
  return found;
}

ElementSet Module::ideal_times_module(const ElementSet& ideal) const {
  ElementSet out(order_);
  out.insert(zero());
  ideal.for_each([&](Elem r) {
    for (Elem m = 0; m < order_; ++m) out.insert(act(r, m));
  });
  // The products are closed under the action; close them under addition.
  bool grew = true;
  while (grew) {
    grew = false;
    const auto xs = out.to_vector();
    for (Elem a : xs)
      for (Elem b : xs)
        if (!out.contains(add(a, b))) {
          out.insert(add(a, b));
          grew = true;
        }
  }
  return out;
}

ElementSet Idealization::plus_set(const ElementSet& a, const ElementSet& b) const {
  ElementSet out(ring->order());
  a.for_each([&](Elem r) { b.for_each([&](Elem m) { out.insert(pair(r, m)); }); });
  return out;
}

Ideal Idealization::ideal_plus(const Ideal& i, const ElementSet& n) const {
  require_same_ring(*base, *i.ring);
  if (!module->is_submodule(n)) throw PreconditionViolated("N is not a submodule of M");
  bool ok = true;
  i.elements.for_each([&](Elem r) {
    for (Elem m = 0; ok && m < module->order(); ++m) ok = n.contains(module->act(r, m));
  });
  if (!ok) throw PreconditionViolated("I(+)N is an ideal only when IM is contained in N");
  return ideal_from_set(ring, plus_set(i.elements, n));
}

MultSet Idealization::plus_zero(const MultSet& s) const {
  require_same_ring(*base, *s.ring);
  ElementSet zero(module->order());
  zero.insert(module->zero());
  return multset_from_set(ring, plus_set(s.elements, zero));
}

MultSet Idealization::plus_module(const MultSet& s) const {
  require_same_ring(*base, *s.ring);
  return multset_from_set(ring, plus_set(s.elements, ElementSet::full(module->order())));
}

Idealization idealize(const RingPtr& r, const ModuleSpec& ms) {
  auto mod = Module::build(r, ms);
  const std::size_t mo = mod->order();
  if (r->order() * mo > limits().table_order_cap) throw CapExceeded("idealization too large");
  struct Data {
    RingPtr base;
    std::shared_ptr<const Module> mod;
  };
  auto d = std::make_shared<Data>(Data{r, mod});
  auto split = [mo](Elem x) { return std::pair<Elem, Elem>(x / mo, x % mo); };
  auto join = [mo](Elem a, Elem m) { return static_cast<Elem>(a * mo + m); };
  auto ring = checked_derived(
      RingSpec::idealization(r->spec(), ms), r->order() * mo, join(r->zero(), 0),
      join(r->one(), 0),
      [d, split, join](Elem x, Elem y) {
        auto [a, m] = split(x);
        auto [b, n] = split(y);
        return join(d->base->add(a, b), d->mod->add(m, n));
      },
      [d, split, join](Elem x, Elem y) {
        auto [a, m] = split(x);
        auto [b, n] = split(y);
        return join(d->base->mul(a, b), d->mod->add(d->mod->act(a, n), d->mod->act(b, m)));
      },
      [d, split, join](Elem x) {
        auto [a, m] = split(x);
        return join(d->base->neg(a), d->mod->neg(m));
      });
  return Idealization{ring, r, mod};
}

// Amalgamation --------------------------------------------------------------

Elem Amalgamation::index_of(Elem r, Elem x) const {
  auto v = (*index)[std::size_t{r} * target()->order() + x];
  return v < 0 ? static_cast<Elem>(ring->order()) : static_cast<Elem>(v);
}

Ideal Amalgamation::lift_ideal(const Ideal& i) const {
  require_same_ring(*base(), *i.ring);
  ElementSet out(ring->order());
  for (Elem k = 0; k < pairs.size(); ++k)
    if (i.contains(pairs[k].first)) out.insert(k);
  return ideal_from_set(ring, std::move(out));
}

Ideal Amalgamation::kbar(const Ideal& k) const {
  require_same_ring(*target(), *k.ring);
  ElementSet out(ring->order());
  for (Elem e = 0; e < pairs.size(); ++e)
    if (k.contains(pairs[e].second)) out.insert(e);
  return ideal_from_set(ring, std::move(out));
}

MultSet Amalgamation::lift_multset(const MultSet& s) const {
  require_same_ring(*base(), *s.ring);
  ElementSet out(ring->order());
  for (Elem k = 0; k < pairs.size(); ++k)
    if (s.contains(pairs[k].first)) out.insert(k);
  return multset_from_set(ring, std::move(out));
}

MultSet Amalgamation::diagonal(const MultSet& s) const {
  require_same_ring(*base(), *s.ring);
  ElementSet out(ring->order());
  s.elements.for_each([&](Elem x) { out.insert(index_of(x, f(x))); });
  return multset_from_set(ring, std::move(out));
}

MultSet Amalgamation::tbar(const MultSet& t) const {
  require_same_ring(*target(), *t.ring);
  ElementSet out(ring->order());
  for (Elem k = 0; k < pairs.size(); ++k)
    if (t.contains(pairs[k].second)) out.insert(k);
  return multset_from_set(ring, std::move(out));
}

MultSet Amalgamation::s_times_fs(const MultSet& s) const {
  require_same_ring(*base(), *s.ring);
  ElementSet fs(target()->order());
  s.elements.for_each([&](Elem x) { fs.insert(f(x)); });
  ElementSet out(ring->order());
  for (Elem k = 0; k < pairs.size(); ++k)
    if (s.contains(pairs[k].first) && fs.contains(pairs[k].second)) out.insert(k);
  return multset_from_set(ring, std::move(out));
}

RingHom Amalgamation::projection() const {
  std::vector<Elem> map(pairs.size());
  for (Elem k = 0; k < pairs.size(); ++k) map[k] = pairs[k].first;
  return trusted_hom(ring, base(), std::move(map));
}

RingHom Amalgamation::inclusion(const RingPtr& product) const {
  if (product->factors().size() != 2) throw PreconditionViolated("inclusion needs base x target");
  require_same_ring(*product->factors()[0], *base());
  require_same_ring(*product->factors()[1], *target());
  std::vector<Elem> map(pairs.size());
  const std::size_t w = base()->order();
  for (Elem k = 0; k < pairs.size(); ++k)
    map[k] = static_cast<Elem>(pairs[k].first + w * pairs[k].second);
  return make_hom(ring, product, std::move(map));
}

Amalgamation amalgamate(const RingHom& f, const Ideal& j) {
  require_same_ring(*f.target, *j.ring);
  const FiniteRing& a = *f.source;
  const FiniteRing& b = *f.target;
  if (a.order() * j.size() > limits().table_order_cap) throw CapExceeded("amalgamation too large");

  std::vector<std::pair<Elem, Elem>> pairs;
  auto index = std::make_shared<std::vector<std::int64_t>>(a.order() * b.order(), -1);
  const auto js = j.to_vector();
  for (Elem r = 0; r < a.order(); ++r) {
    std::vector<Elem> second;
    for (Elem x : js) second.push_back(b.add(f(r), x));
    std::sort(second.begin(), second.end());
    for (Elem x : second) {
      (*index)[std::size_t{r} * b.order() + x] = static_cast<std::int64_t>(pairs.size());
      pairs.emplace_back(r, x);
    }
  }

  struct Data {
    RingPtr a, b;
    std::vector<std::pair<Elem, Elem>> pairs;
    std::shared_ptr<const std::vector<std::int64_t>> index;
    Elem at(Elem r, Elem x) const {
      return static_cast<Elem>((*index)[std::size_t{r} * b->order() + x]);
    }
  };
  auto d = std::make_shared<Data>(Data{f.source, f.target, pairs, index});
  auto spec = RingSpec::amalgamation(a.spec(), b.spec(), hom_spec_of(f), ideal_gens(j));
  auto ring = checked_derived(
      std::move(spec), pairs.size(), d->at(a.zero(), b.zero()), d->at(a.one(), b.one()),
      [d](Elem x, Elem y) {
        const auto& [r, u] = d->pairs[x];
        const auto& [s, v] = d->pairs[y];
        return d->at(d->a->add(r, s), d->b->add(u, v));
      },
      [d](Elem x, Elem y) {
        const auto& [r, u] = d->pairs[x];
        const auto& [s, v] = d->pairs[y];
        return d->at(d->a->mul(r, s), d->b->mul(u, v));
      },
      [d](Elem x) {
        const auto& [r, u] = d->pairs[x];
        return d->at(d->a->neg(r), d->b->neg(u));
      });
  return Amalgamation{ring, f, j, std::move(pairs), index};
}

}  // namespace snideal
