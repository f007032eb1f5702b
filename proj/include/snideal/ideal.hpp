#pragma once

#include <optional>
#include <span>
#include <vector>

#include "snideal/element_set.hpp"
#include "snideal/ring.hpp"

namespace snideal {

/// An ideal of a finite ring, stored as its element set.
struct Ideal {
  RingPtr ring;
  ElementSet elements;
  /// Provenance; empty when the ideal was built from a set.
  std::vector<Elem> generators;

  bool contains(Elem x) const { return elements.contains(x); }
  bool is_proper() const { return !elements.contains(ring->one()); }
  bool is_zero() const { return elements.count() == 1; }
  std::size_t size() const { return elements.count(); }
  std::vector<Elem> to_vector() const { return elements.to_vector(); }

  /// Same ring and same elements; generators are ignored.
  bool operator==(const Ideal& o) const {
    return ring->id() == o.ring->id() && elements == o.elements;
  }
};

/// A multiplicatively closed subset containing 1. May contain 0.
struct MultSet {
  RingPtr ring;
  ElementSet elements;
  std::vector<Elem> seed;

  bool contains(Elem x) const { return elements.contains(x); }
  std::size_t size() const { return elements.count(); }
  std::vector<Elem> to_vector() const { return elements.to_vector(); }
  bool operator==(const MultSet& o) const {
    return ring->id() == o.ring->id() && elements == o.elements;
  }
};

Ideal ideal_generate(const RingPtr& r, std::span<const Elem> gens);
inline Ideal ideal_generate(const RingPtr& r, std::initializer_list<Elem> gens) {
  return ideal_generate(r, std::span<const Elem>(gens.begin(), gens.size()));
}
/// Wraps a set already known to be an ideal (no closure check).
Ideal ideal_from_set(const RingPtr& r, ElementSet elements);
Ideal zero_ideal(const RingPtr& r);
Ideal unit_ideal(const RingPtr& r);
Ideal nilradical(const RingPtr& r);

/// True when `s` is closed under addition and multiplication by R, and contains 0.
bool is_ideal_set(const FiniteRing& r, const ElementSet& s);
/// True when `s` contains 1 and is closed under multiplication.
bool is_multiplicative_set(const FiniteRing& r, const ElementSet& s);

/// Every ideal exactly once, sorted canonically (size, then elements).
/// Z_n uses its divisors; other rings close principal ideals under sums.
std::vector<Ideal> all_ideals(const RingPtr& r);
/// The generic enumeration, regardless of ring kind.
std::vector<Ideal> all_ideals_generic(const RingPtr& r);

Ideal radical(const Ideal& i);
ElementSet radical_set(const FiniteRing& r, const ElementSet& i);
/// (I : s) = {x : s x in I}.
Ideal colon(const Ideal& i, Elem s);
ElementSet colon_set(const FiniteRing& r, const ElementSet& i, Elem s);
/// (I : J) = {x : x J subset of I}.
Ideal colon(const Ideal& i, const Ideal& j);

enum class IdealOp { Sum, Product, Intersect };
Ideal ideal_arith(IdealOp op, const Ideal& a, const Ideal& b);
inline Ideal ideal_sum(const Ideal& a, const Ideal& b) { return ideal_arith(IdealOp::Sum, a, b); }
inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  return ideal_arith(IdealOp::Product, a, b);
}
inline Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  return ideal_arith(IdealOp::Intersect, a, b);
}
ElementSet sum_set(const FiniteRing& r, const ElementSet& a, const ElementSet& b);
ElementSet product_set(const FiniteRing& r, const ElementSet& a, const ElementSet& b);
/// s * A = {s a : a in A}.
ElementSet scale_set(const FiniteRing& r, Elem s, const ElementSet& a);

struct SuperfluousResult {
  bool holds = true;
  /// A proper J with I + J = R when holds is false (least in canonical order).
  std::optional<Ideal> witness;
};
SuperfluousResult is_superfluous(const Ideal& i);

MultSet multset_close(const RingPtr& r, std::span<const Elem> seed);
inline MultSet multset_close(const RingPtr& r, std::initializer_list<Elem> seed) {
  return multset_close(r, std::span<const Elem>(seed.begin(), seed.size()));
}
/// Wraps a set already known to be multiplicatively closed.
MultSet multset_from_set(const RingPtr& r, ElementSet elements);
MultSet unit_multset(const RingPtr& r);
/// S* = {x : x y in S for some y}.
MultSet saturation(const MultSet& s);
bool is_disjoint(const MultSet& s, const Ideal& i);

/// A short generating list for an ideal (greedy, by element index).
std::vector<Elem> minimal_generators(const FiniteRing& r, const ElementSet& ideal);

/// {"ring": spec, "gens": [...], "elements": [...]}
json ideal_to_json(const Ideal& i);
/// {"ring": spec, "seed": [...], "elements": [...]}
json multset_to_json(const MultSet& s);

void require_same_ring(const FiniteRing& a, const FiniteRing& b);

}  // namespace snideal
