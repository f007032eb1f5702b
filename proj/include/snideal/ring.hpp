#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snideal/element_set.hpp"
#include "snideal/spec.hpp"

namespace snideal {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Per-element classification.
struct ElementClass {
  bool is_unit = false;
  bool is_nilpotent = false;
  bool is_zero_divisor = false;
  bool is_regular = false;
  /// Least k >= 1 with x^k = 0; 0 when x is not nilpotent.
  std::uint32_t nilpotency_index = 0;
};

struct RingPredicates {
  bool is_field = false;
  bool is_von_neumann_regular = false;
  bool is_un_ring = false;
};

/// Partition of the elements by the principal ideal they generate.
/// Elements with the same principal ideal have the same colon (I : x)
/// for every ideal I.
struct PrincipalIdeals {
  std::vector<std::uint32_t> class_of;    // element -> class id
  std::vector<Elem> representative;       // least element of each class
  std::vector<ElementSet> ideal;          // <representative>
};

/// A finite commutative ring with identity on the indices 0..order()-1.
///
/// Arithmetic is either formula-backed (Z_n, products) or supplied by a
/// construction, in which case it is tabulated when the order is at most
/// limits().dense_table_max. Arithmetic members do not range-check their
/// arguments; use elem_arith() for checked access. Rings are immutable once
/// built; lazy caches are filled once under std::call_once.
class FiniteRing {
 public:
  using BinaryFn = std::function<Elem(Elem, Elem)>;
  using UnaryFn = std::function<Elem(Elem)>;

  /// Z_n; element index = residue.
  static RingPtr modular(std::uint64_t n);
  /// Direct product; index mixed-radix little-endian in the factor indices.
  static RingPtr product(std::vector<RingPtr> factors);
  /// Ring whose arithmetic is given by a construction.
  static RingPtr derived(RingSpec spec, std::size_t order, Elem zero, Elem one,
                         BinaryFn add, BinaryFn mul, UnaryFn neg);

  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  std::uint64_t id() const { return id_; }
  const RingSpec& spec() const { return spec_; }
  std::string name() const { return spec_.describe(); }
  std::size_t order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  bool is_formula_backed() const { return formula_backed_; }
  /// Modulus when this ring is Z_n, otherwise 0.
  std::uint64_t modulus() const { return kind_ == Kind::Modular ? n_ : 0; }
  const std::vector<RingPtr>& factors() const { return factors_; }

  Elem add(Elem a, Elem b) const {
    switch (kind_) {
      case Kind::Modular: {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Elem>(s >= n_ ? s - n_ : s);
      }
      case Kind::Table: return add_tab_[std::size_t{a} * order_ + b];
      default: return add_slow(a, b);
    }
  }
  Elem mul(Elem a, Elem b) const {
    switch (kind_) {
      case Kind::Modular: return static_cast<Elem>(std::uint64_t{a} * b % n_);
      case Kind::Table: return mul_tab_[std::size_t{a} * order_ + b];
      default: return mul_slow(a, b);
    }
  }
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// out[b] = a * b for every element b; out.size() must equal order().
  void mul_row(Elem a, std::span<Elem> out) const;

  /// Product-ring helpers (only for rings built by product()).
  std::vector<Elem> components(Elem x) const;
  Elem compose(std::span<const Elem> parts) const;

  bool is_nilpotent(Elem x) const;
  const ElementSet& nilradical_set() const;
  const ElementSet& unit_set() const;
  const ElementSet& zero_divisor_set() const;
  const PrincipalIdeals& principal_ideals() const;

  bool valid(Elem x) const { return x < order_; }

 private:
  enum class Kind { Modular, Product, Table, Computed };

  FiniteRing() = default;
  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;

  std::uint64_t id_ = 0;
  RingSpec spec_;
  Kind kind_ = Kind::Modular;
  std::size_t order_ = 0;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::uint64_t n_ = 0;
  bool formula_backed_ = false;

  std::vector<RingPtr> factors_;
  std::vector<std::size_t> strides_;

  std::vector<std::uint16_t> add_tab_, mul_tab_, neg_tab_;
  BinaryFn add_fn_, mul_fn_;
  UnaryFn neg_fn_;

  mutable std::once_flag nil_once_, unit_once_, zd_once_, principal_once_;
  mutable ElementSet nil_, units_, zero_divisors_;
  mutable PrincipalIdeals principal_;
};

enum class ArithOp { Add, Mul, Neg, Pow };

/// Range-checked arithmetic. `b` is the second operand for Add/Mul and the
/// exponent for Pow; ignored for Neg.
Elem elem_arith(const FiniteRing& r, ArithOp op, Elem a, std::uint64_t b = 0);

ElementClass element_class(const FiniteRing& r, Elem x);
RingPredicates ring_predicates(const FiniteRing& r);
bool is_reduced(const FiniteRing& r);
/// No nonzero zero-divisors.
bool is_integral_domain(const FiniteRing& r);

struct AxiomReport {
  bool ok = true;
  bool exhaustive = true;
  std::size_t triples_checked = 0;
  std::string failure;
};

/// Commutative-ring axioms, exhaustively when order() <= exhaustive_limit,
/// otherwise on `samples` pseudo-random triples (fixed seed).
AxiomReport verify_axioms(const FiniteRing& r, std::size_t exhaustive_limit = 4096,
                          std::size_t samples = 100'000);

/// Builds the ring described by `spec`, recursing into constructions.
/// Throws InvalidSpec, CapExceeded or PreconditionViolated.
RingPtr build_ring(const RingSpec& spec);

}  // namespace snideal
