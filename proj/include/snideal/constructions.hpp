#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "snideal/ideal.hpp"

namespace snideal {

/// A unital ring homomorphism, validated on every pair at construction.
struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> map;
  Ideal kernel;
  bool surjective = false;

  Elem operator()(Elem x) const { return map[x]; }
};

/// Throws PreconditionViolated when `map` is not a unital ring homomorphism.
RingHom make_hom(const RingPtr& source, const RingPtr& target, std::vector<Elem> map);
RingHom hom_from_spec(const RingPtr& source, const RingPtr& target, const HomSpec& spec);
RingHom identity_hom(const RingPtr& r);
/// "identity", "reduce" or an explicit table, whichever describes f.
HomSpec hom_spec_of(const RingHom& f);

struct HomImage {
  Ideal ideal;
  /// Ker(f) is contained in the source ideal.
  bool kernel_contained = false;
};
/// f(I); requires f surjective (PreconditionViolated otherwise).
HomImage hom_image_ideal(const RingHom& f, const Ideal& i);
Ideal hom_preimage_ideal(const RingHom& f, const Ideal& j);
MultSet hom_image_multset(const RingHom& f, const MultSet& s);

/// Small multiplicative generating set (greedy, by element index).
std::vector<Elem> multset_generators(const FiniteRing& r, const ElementSet& s);

struct Quotient {
  RingPtr ring;
  RingHom projection;
  Ideal ideal;

  MultSet push(const MultSet& s) const { return hom_image_multset(projection, s); }
  /// J/I for J containing I.
  Ideal push(const Ideal& j) const { return hom_image_ideal(projection, j).ideal; }
};
/// R/I with cosets indexed by their least member. Requires I proper.
Quotient quotient_ring(const Ideal& i);

/// R x R' with the left factor varying fastest.
RingPtr product_ring(const RingPtr& left, const RingPtr& right);
/// A x B inside a two-factor product ring, for ideals or multiplicative sets.
ElementSet cross_set(const FiniteRing& product, const ElementSet& left, const ElementSet& right);
Ideal product_ideal(const RingPtr& product, const Ideal& left, const Ideal& right);
MultSet product_multset(const RingPtr& product, const MultSet& left, const MultSet& right);

/// S^-1 R as classes of formal fractions r/s under
/// r/s ~ r'/s' iff u (r s' - r' s) = 0 for some u in S.
/// Elements are ordered by the least (numerator, denominator) of their class.
struct Localization {
  RingPtr ring;
  RingHom canonical;  // r -> r/1
  MultSet mult;
  /// Least (numerator, denominator) of each element's class.
  std::vector<std::pair<Elem, Elem>> fractions;

  /// The element r/d; d must lie in mult.
  Elem fraction(Elem numerator, Elem denominator) const;
  /// T^-1 I, the ideal generated by the i/1.
  Ideal extend(const Ideal& i) const;
  /// Preimage of an ideal of the localization under r -> r/1.
  Ideal contract(const Ideal& e) const;
  /// {a/t : a in A, t in mult}, for A an ideal or multiplicative set.
  ElementSet fractions_over(const ElementSet& numerators) const;

  std::shared_ptr<const std::vector<Elem>> inverse_mod_kernel;  // per denominator
  std::shared_ptr<const std::vector<Elem>> index_of_coset;      // by coset least member
  std::shared_ptr<const std::vector<Elem>> coset_rep;           // element -> least coset member
};
/// Throws DegenerateLocalization when 0 lies in S.
Localization localize(const MultSet& s);

struct ExtendContract {
  Localization loc;
  Ideal extended;
  Ideal contracted;
};
/// Localizes at T; requires S within T and I disjoint from T.
ExtendContract extend_contract(const Ideal& i, const MultSet& s, const MultSet& t);

/// A finite module over a finite ring, with validated action.
class Module {
 public:
  static std::shared_ptr<const Module> build(const RingPtr& r, const ModuleSpec& spec);

  const ModuleSpec& spec() const { return spec_; }
  std::size_t order() const { return order_; }
  Elem zero() const { return 0; }
  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem act(Elem r, Elem m) const { return act_[r * order_ + m]; }

  bool is_submodule(const ElementSet& n) const;
  /// Every submodule, sorted canonically.
  std::vector<ElementSet> all_submodules() const;
  /// I M.
  ElementSet ideal_times_module(const ElementSet& ideal) const;

 private:
  Module() = default;
  ElementSet closure_sum(const ElementSet& a, const ElementSet& b) const;

  ModuleSpec spec_;
  RingPtr ring_;
  std::size_t order_ = 0;
  std::vector<Elem> add_, neg_, act_;
};

/// R(+)M; element (r, m) has index r |M| + m.
struct Idealization {
  RingPtr ring;
  RingPtr base;
  std::shared_ptr<const Module> module;

  Elem pair(Elem r, Elem m) const { return static_cast<Elem>(r * module->order() + m); }
  Elem first(Elem x) const { return static_cast<Elem>(x / module->order()); }
  Elem second(Elem x) const { return static_cast<Elem>(x % module->order()); }

  /// I(+)N; requires N a submodule and I M within N.
  Ideal ideal_plus(const Ideal& i, const ElementSet& n) const;
  MultSet plus_zero(const MultSet& s) const;
  MultSet plus_module(const MultSet& s) const;
  /// A(+)B as a raw set.
  ElementSet plus_set(const ElementSet& a, const ElementSet& b) const;
};
Idealization idealize(const RingPtr& r, const ModuleSpec& m);

/// R |x|^f J = {(r, f(r) + j)}, ordered by (r, second coordinate).
struct Amalgamation {
  RingPtr ring;
  RingHom f;
  Ideal j;
  std::vector<std::pair<Elem, Elem>> pairs;
  std::shared_ptr<const std::vector<std::int64_t>> index;  // r |R'| + x -> element or -1

  const RingPtr& base() const { return f.source; }
  const RingPtr& target() const { return f.target; }
  /// Element (r, x), or ring->order() when (r, x) is not in the ring.
  Elem index_of(Elem r, Elem x) const;

  /// I |x|^f J.
  Ideal lift_ideal(const Ideal& i) const;
  /// K-bar^f = {(a, f(a) + j) : f(a) + j in K}, K an ideal of the target.
  Ideal kbar(const Ideal& k) const;
  /// S |x|^f J.
  MultSet lift_multset(const MultSet& s) const;
  /// W = {(s, f(s))}.
  MultSet diagonal(const MultSet& s) const;
  /// T-bar^f, T a multiplicative set of the target.
  MultSet tbar(const MultSet& t) const;
  /// (S x f(S)) intersected with the ring.
  MultSet s_times_fs(const MultSet& s) const;
  /// (r, x) -> r; surjective.
  RingHom projection() const;
  /// Inclusion into base x target, which must be product_ring(base, target).
  RingHom inclusion(const RingPtr& product) const;
};
Amalgamation amalgamate(const RingHom& f, const Ideal& j);

}  // namespace snideal
