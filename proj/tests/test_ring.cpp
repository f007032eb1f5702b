#include <gtest/gtest.h>

#include "oracle.hpp"
#include "snideal/errors.hpp"
#include "snideal/ideal.hpp"
#include "snideal/ring.hpp"

using namespace snideal;

TEST(Ring, BuildBasics) {
  auto z12 = build_ring(RingSpec::zn(12));
  EXPECT_EQ(z12->order(), 12u);
  EXPECT_EQ(z12->one(), 1u);
  auto prod = build_ring(RingSpec::product({RingSpec::zn(12), RingSpec::zn(4)}));
  EXPECT_EQ(prod->order(), 48u);
  auto quo = build_ring(RingSpec::quotient(RingSpec::zn(12), {4}));
  EXPECT_EQ(quo->order(), 4u);
}

TEST(Ring, BuildErrors) {
  EXPECT_THROW(build_ring(RingSpec::zn(1)), InvalidSpec);
  EXPECT_THROW(build_ring(RingSpec::zn(2'000'000)), CapExceeded);
  EXPECT_THROW(build_ring(RingSpec::quotient(RingSpec::zn(12), {1})), PreconditionViolated);
  EXPECT_THROW(RingSpec::parse("{\"zn\": 1}"), InvalidSpec);
  EXPECT_THROW(RingSpec::parse("not json"), InvalidSpec);
  EXPECT_THROW(RingSpec::parse("{\"torus\": 3}"), InvalidSpec);
}

TEST(Ring, ElemArith) {
  auto r = FiniteRing::modular(12);
  EXPECT_EQ(elem_arith(*r, ArithOp::Mul, 3, 9), 3u);
  EXPECT_EQ(elem_arith(*r, ArithOp::Pow, 6, 2), 0u);
  EXPECT_EQ(elem_arith(*r, ArithOp::Add, 7, 5), 0u);
  EXPECT_EQ(elem_arith(*r, ArithOp::Pow, 7, 0), 1u);
  EXPECT_EQ(elem_arith(*r, ArithOp::Neg, 5), 7u);
  EXPECT_THROW(elem_arith(*r, ArithOp::Add, 12, 0), IndexOutOfRange);
  EXPECT_THROW(elem_arith(*r, ArithOp::Mul, 0, 99), IndexOutOfRange);
}

TEST(Ring, ElementClass) {
  auto r = FiniteRing::modular(12);
  auto c5 = element_class(*r, 5);
  EXPECT_TRUE(c5.is_unit);
  EXPECT_TRUE(c5.is_regular);
  EXPECT_FALSE(c5.is_nilpotent);
  auto c6 = element_class(*r, 6);
  EXPECT_TRUE(c6.is_nilpotent);
  EXPECT_EQ(c6.nilpotency_index, 2u);
  EXPECT_TRUE(c6.is_zero_divisor);
  auto z6 = FiniteRing::modular(6);
  auto c3 = element_class(*z6, 3);
  EXPECT_TRUE(c3.is_zero_divisor);
  EXPECT_FALSE(c3.is_nilpotent);
  EXPECT_FALSE(c3.is_unit);
  EXPECT_THROW(element_class(*r, 12), IndexOutOfRange);
}

TEST(Ring, Nilradical) {
  EXPECT_EQ(nilradical(FiniteRing::modular(12)).to_vector(), (std::vector<Elem>{0, 6}));
  EXPECT_EQ(nilradical(FiniteRing::modular(6)).to_vector(), (std::vector<Elem>{0}));
  EXPECT_EQ(nilradical(FiniteRing::modular(8)).to_vector(), (std::vector<Elem>{0, 2, 4, 6}));
}

TEST(Ring, Predicates) {
  auto p5 = ring_predicates(*FiniteRing::modular(5));
  EXPECT_TRUE(p5.is_field && p5.is_von_neumann_regular && p5.is_un_ring);
  auto p6 = ring_predicates(*FiniteRing::modular(6));
  EXPECT_FALSE(p6.is_field);
  EXPECT_TRUE(p6.is_von_neumann_regular);
  EXPECT_FALSE(p6.is_un_ring);
  auto p8 = ring_predicates(*FiniteRing::modular(8));
  EXPECT_FALSE(p8.is_field);
  EXPECT_FALSE(p8.is_von_neumann_regular);
  EXPECT_TRUE(p8.is_un_ring);
}

TEST(Ring, SpecRoundTrip) {
  const char* texts[] = {
      R"({"zn":12})",
      R"({"product":[{"zn":12},{"zn":4}]})",
      R"({"quotient":{"gens":[4],"of":{"zn":12}}})",
      R"({"localization":{"of":{"zn":12},"seed":[3]}})",
      R"({"idealization":{"module":{"self":true},"of":{"zn":4}}})",
      R"({"idealization":{"module":{"action":"scalar","group":[2]},"of":{"zn":4}}})",
      R"({"amalgamation":{"base":{"zn":8},"hom":"reduce","ideal":[2],"target":{"zn":4}}})",
  };
  for (const char* t : texts) {
    auto spec = RingSpec::parse(t);
    EXPECT_EQ(spec.canonical(), t);
    EXPECT_EQ(RingSpec::from_json(spec.to_json()), spec);
    auto r = build_ring(spec);
    EXPECT_EQ(r->spec(), spec) << t;
  }
}

// Property: arithmetic of every small ring family satisfies the axioms and the
// element-class invariants, checked against the brute-force oracle.
TEST(RingProperty, AxiomsAndClasses) {
  std::vector<RingSpec> specs;
  for (std::uint64_t n = 2; n <= 40; ++n) specs.push_back(RingSpec::zn(n));
  specs.push_back(RingSpec::product({RingSpec::zn(2), RingSpec::zn(2), RingSpec::zn(3)}));
  specs.push_back(RingSpec::product({RingSpec::zn(4), RingSpec::zn(6)}));
  specs.push_back(RingSpec::quotient(RingSpec::product({RingSpec::zn(4), RingSpec::zn(6)}), {2}));
  specs.push_back(RingSpec::localization(RingSpec::zn(24), {3}));
  for (const auto& spec : specs) {
    auto r = build_ring(spec);
    auto rep = verify_axioms(*r);
    ASSERT_TRUE(rep.ok) << r->name() << ": " << rep.failure;
    EXPECT_TRUE(rep.exhaustive);
    EXPECT_TRUE(is_ideal_set(*r, r->nilradical_set()));
    for (Elem x = 0; x < r->order(); ++x) {
      auto c = element_class(*r, x);
      EXPECT_EQ(c.is_regular, !c.is_zero_divisor);
      EXPECT_EQ(c.is_unit, c.is_regular) << "finite rings: regular iff unit";
      EXPECT_EQ(c.is_nilpotent, oracle::nilpotent(*r, x));
      EXPECT_EQ(c.is_zero_divisor, oracle::zero_divisor(*r, x));
    }
    auto p = ring_predicates(*r);
    if (p.is_field) EXPECT_TRUE(p.is_von_neumann_regular && p.is_un_ring);
  }
}

TEST(RingProperty, SampledAxiomsAboveLimit) {
  auto r = FiniteRing::modular(5000);
  auto rep = verify_axioms(*r, 4096, 100'000);
  EXPECT_TRUE(rep.ok);
  EXPECT_FALSE(rep.exhaustive);
  EXPECT_GE(rep.triples_checked, 100'000u);
}

TEST(RingProperty, PrincipalPartitionMatchesGeneric) {
  // The Z_n shortcut must give the same partition as multiplying out.
  for (std::uint64_t n : {12u, 30u, 64u, 97u}) {
    auto fast = FiniteRing::modular(n);
    auto slow = build_ring(RingSpec::quotient(RingSpec::zn(n), {0}));
    const auto& a = fast->principal_ideals();
    const auto& b = slow->principal_ideals();
    ASSERT_EQ(a.representative, b.representative);
    EXPECT_EQ(a.class_of, b.class_of);
    for (std::size_t k = 0; k < a.ideal.size(); ++k)
      EXPECT_EQ(a.ideal[k].to_vector(), b.ideal[k].to_vector());
  }
}
