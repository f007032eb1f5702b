#include "snideal/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "snideal/errors.hpp"
#include "snideal/limits.hpp"

namespace snideal {

namespace {

void check_elems(const FiniteRing& r, std::span<const Elem> xs) {
  for (Elem x : xs)
    if (!r.valid(x))
      throw IndexOutOfRange("element " + std::to_string(x) + " out of range for " + r.name());
}

ElementSet principal_set(const FiniteRing& r, Elem g) {
  if (r.modulus()) {
    std::uint64_t n = r.modulus();
    std::uint64_t d = std::gcd<std::uint64_t, std::uint64_t>(g, n);
    ElementSet s(n);
    for (std::uint64_t x = 0; x < n; x += d) s.insert(static_cast<Elem>(x));
    return s;
  }
  std::vector<Elem> row(r.order());
  r.mul_row(g, row);
  return ElementSet::from(r.order(), row);
}

void sort_canonical(std::vector<Ideal>& v) {
  std::sort(v.begin(), v.end(),
            [](const Ideal& a, const Ideal& b) { return canonical_less(a.elements, b.elements); });
}

}  // namespace

void require_same_ring(const FiniteRing& a, const FiniteRing& b) {
  if (a.id() != b.id())
    throw RingMismatch("operands belong to different rings (" + a.name() + ", " + b.name() + ")");
}

ElementSet sum_set(const FiniteRing& r, const ElementSet& a, const ElementSet& b) {
  // Walk b, adding a whole coset of a for each element not yet covered.
  ElementSet out = a;
  const auto as = a.to_vector();
  b.for_each([&](Elem y) {
    if (out.contains(y)) return;
    for (Elem x : as) out.insert(r.add(x, y));
  });
  return out;
}

ElementSet product_set(const FiniteRing& r, const ElementSet& a, const ElementSet& b) {
  ElementSet out(r.order());
  out.insert(r.zero());
  const auto bs = b.to_vector();
  a.for_each([&](Elem x) {
    ElementSet term(r.order());
    for (Elem y : bs) term.insert(r.mul(x, y));
    // x*B is additively closed when B is an ideal, so summing terms suffices.
    out = sum_set(r, out, term);
  });
  return out;
}

ElementSet scale_set(const FiniteRing& r, Elem s, const ElementSet& a) {
  ElementSet out(r.order());
  a.for_each([&](Elem x) { out.insert(r.mul(s, x)); });
  return out;
}

Ideal ideal_generate(const RingPtr& r, std::span<const Elem> gens) {
  check_elems(*r, gens);
  ElementSet s(r->order());
  s.insert(r->zero());
  for (Elem g : gens) {
    if (s.contains(g)) continue;
    s = sum_set(*r, s, principal_set(*r, g));
  }
  return Ideal{r, std::move(s), std::vector<Elem>(gens.begin(), gens.end())};
}

Ideal ideal_from_set(const RingPtr& r, ElementSet elements) {
  return Ideal{r, std::move(elements), {}};
}

Ideal zero_ideal(const RingPtr& r) { return ideal_generate(r, {}); }
Ideal unit_ideal(const RingPtr& r) { return Ideal{r, ElementSet::full(r->order()), {r->one()}}; }
Ideal nilradical(const RingPtr& r) { return ideal_from_set(r, r->nilradical_set()); }

bool is_ideal_set(const FiniteRing& r, const ElementSet& s) {
  if (s.universe() != r.order() || !s.contains(r.zero())) return false;
  const auto xs = s.to_vector();
  for (Elem a : xs)
    for (Elem b : xs)
      if (!s.contains(r.add(a, b))) return false;
  for (Elem a : xs)
    for (Elem x = 0; x < r.order(); ++x)
      if (!s.contains(r.mul(a, x))) return false;
  return true;
}

bool is_multiplicative_set(const FiniteRing& r, const ElementSet& s) {
  if (s.universe() != r.order() || !s.contains(r.one())) return false;
  const auto xs = s.to_vector();
  for (Elem a : xs)
    for (Elem b : xs)
      if (!s.contains(r.mul(a, b))) return false;
  return true;
}

std::vector<Ideal> all_ideals_generic(const RingPtr& r) {
  if (r->order() > limits().enumeration_cap)
    throw CapExceeded("ideal enumeration: order " + std::to_string(r->order()) +
                      " exceeds cap " + std::to_string(limits().enumeration_cap));
  const auto& pi = r->principal_ideals();
  std::vector<ElementSet> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (const auto& p : pi.ideal)
    if (seen.insert(p).second) found.push_back(p);
  // Every ideal is a finite sum of principal ideals.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& p : pi.ideal) {
      if (p.is_subset_of(found[i])) continue;
      ElementSet s = sum_set(*r, found[i], p);
      if (seen.insert(s).second) found.push_back(std::move(s));
    }
  }
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(ideal_from_set(r, std::move(s)));
  sort_canonical(out);
  for (auto& i : out) i.generators = minimal_generators(*r, i.elements);
  return out;
}

std::vector<Ideal> all_ideals(const RingPtr& r) {
  if (std::uint64_t n = r->modulus()) {
    std::vector<Ideal> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      ElementSet s(n);
      for (std::uint64_t x = 0; x < n; x += d) s.insert(static_cast<Elem>(x));
      out.push_back(Ideal{r, std::move(s), {static_cast<Elem>(d % n)}});
    }
    sort_canonical(out);
    return out;
  }
  return all_ideals_generic(r);
}

ElementSet radical_set(const FiniteRing& r, const ElementSet& i) {
  ElementSet out(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    Elem y = x;
    bool in = i.contains(y);
    for (std::size_t reach = 1; !in && reach < r.order(); reach *= 2) {
      y = r.mul(y, y);
      in = i.contains(y);
    }
    if (in) out.insert(x);
  }
  return out;
}

Ideal radical(const Ideal& i) { return ideal_from_set(i.ring, radical_set(*i.ring, i.elements)); }

ElementSet colon_set(const FiniteRing& r, const ElementSet& i, Elem s) {
  ElementSet out(r.order());
  std::vector<Elem> row(r.order());
  r.mul_row(s, row);
  for (Elem x = 0; x < r.order(); ++x)
    if (i.contains(row[x])) out.insert(x);
  return out;
}

Ideal colon(const Ideal& i, Elem s) {
  check_elems(*i.ring, std::span<const Elem>(&s, 1));
  return ideal_from_set(i.ring, colon_set(*i.ring, i.elements, s));
}

Ideal colon(const Ideal& i, const Ideal& j) {
  require_same_ring(*i.ring, *j.ring);
  ElementSet out = ElementSet::full(i.ring->order());
  for (Elem g : minimal_generators(*j.ring, j.elements)) out &= colon_set(*i.ring, i.elements, g);
  return ideal_from_set(i.ring, std::move(out));
}

Ideal ideal_arith(IdealOp op, const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring, *b.ring);
  const FiniteRing& r = *a.ring;
  switch (op) {
    case IdealOp::Sum: return ideal_from_set(a.ring, sum_set(r, a.elements, b.elements));
    case IdealOp::Intersect: return ideal_from_set(a.ring, a.elements & b.elements);
    case IdealOp::Product: {
      const auto ga = minimal_generators(r, a.elements);
      const auto gb = minimal_generators(r, b.elements);
      std::vector<Elem> gens;
      for (Elem x : ga)
        for (Elem y : gb) gens.push_back(r.mul(x, y));
      Ideal out = ideal_generate(a.ring, gens);
      out.generators.clear();
      return out;
    }
  }
  return a;
}

SuperfluousResult is_superfluous(const Ideal& i) {
  if (!i.is_proper()) throw PreconditionViolated("is_superfluous requires a proper ideal");
  SuperfluousResult res;
  for (const auto& j : all_ideals(i.ring)) {
    if (!j.is_proper()) continue;
    if (sum_set(*i.ring, i.elements, j.elements).is_full()) {
      res.holds = false;
      res.witness = j;
      break;
    }
  }
  return res;
}

MultSet multset_close(const RingPtr& r, std::span<const Elem> seed) {
  check_elems(*r, seed);
  ElementSet s(r->order());
  s.insert(r->one());
  std::vector<Elem> frontier{r->one()};
  std::vector<Elem> gens(seed.begin(), seed.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Elem g : gens)
    if (!s.contains(g)) {
      s.insert(g);
      frontier.push_back(g);
    }
  // Closing under multiplication by the seed reaches every finite product.
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    for (Elem g : gens) {
      Elem y = r->mul(x, g);
      if (!s.contains(y)) {
        s.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return MultSet{r, std::move(s), std::vector<Elem>(seed.begin(), seed.end())};
}

MultSet multset_from_set(const RingPtr& r, ElementSet elements) {
  return MultSet{r, std::move(elements), {}};
}

MultSet unit_multset(const RingPtr& r) { return multset_from_set(r, r->unit_set()); }

MultSet saturation(const MultSet& s) {
  const FiniteRing& r = *s.ring;
  ElementSet out(r.order());
  std::vector<Elem> row(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    r.mul_row(x, row);
    for (Elem y : row)
      if (s.elements.contains(y)) {
        out.insert(x);
        break;
      }
  }
  return MultSet{s.ring, std::move(out), s.seed};
}

bool is_disjoint(const MultSet& s, const Ideal& i) {
  require_same_ring(*s.ring, *i.ring);
  return !s.elements.intersects(i.elements);
}

std::vector<Elem> minimal_generators(const FiniteRing& r, const ElementSet& ideal) {
  std::vector<Elem> gens;
  ElementSet span(r.order());
  span.insert(r.zero());
  for (Elem x = ideal.first(); x < ideal.universe() && !(span == ideal); x = ideal.next(x + 1)) {
    if (span.contains(x)) continue;
    span = sum_set(r, span, principal_set(r, x));
    gens.push_back(x);
  }
  // Drop generators made redundant by later ones.
  for (std::size_t k = gens.size(); k-- > 0;) {
    ElementSet rest(r.order());
    rest.insert(r.zero());
    for (std::size_t m = 0; m < gens.size(); ++m)
      if (m != k) rest = sum_set(r, rest, principal_set(r, gens[m]));
    if (rest == ideal) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return gens;
}

json ideal_to_json(const Ideal& i) {
  auto gens = i.generators.empty() ? minimal_generators(*i.ring, i.elements) : i.generators;
  return json{{"ring", i.ring->spec().to_json()}, {"gens", gens}, {"elements", i.to_vector()}};
}

json multset_to_json(const MultSet& s) {
  return json{{"ring", s.ring->spec().to_json()}, {"seed", s.seed}, {"elements", s.to_vector()}};
}

}  // namespace snideal
