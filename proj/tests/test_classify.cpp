#include <gtest/gtest.h>

#include "oracle.hpp"
#include "snideal/classify.hpp"
#include "snideal/errors.hpp"

using namespace snideal;
using V = std::vector<Elem>;

namespace {

RingPtr z(std::uint64_t n) { return FiniteRing::modular(n); }

std::vector<V> as_lists(const std::vector<Ideal>& v) {
  std::vector<V> out;
  for (const auto& i : v) out.push_back(i.to_vector());
  return out;
}

}  // namespace

TEST(Classify, AbsolutePredicates) {
  auto r = z(12);
  EXPECT_TRUE(is_prime(ideal_generate(r, {2})).holds);
  auto n4 = is_n_ideal(ideal_generate(r, {4}));
  EXPECT_FALSE(n4.holds);
  ASSERT_TRUE(n4.counterexample);
  EXPECT_EQ(*n4.counterexample, std::make_pair(Elem{2}, Elem{2}));
  EXPECT_FALSE(is_n_ideal(ideal_generate(z(6), {2})).holds);
  EXPECT_TRUE(is_primary(ideal_generate(r, {4})).holds);
  EXPECT_THROW(is_prime(unit_ideal(r)), PreconditionViolated);
  // r-ideal: zero divisors of Z_12 are exactly the non-units, so <4> passes
  // (a must be a unit); <0> too.
  EXPECT_TRUE(is_r_ideal(ideal_generate(r, {4})).holds);
}

TEST(Classify, SWitnesses) {
  auto r = z(12);
  auto s = multset_close(r, {3});
  auto v = s_witnesses(SKind::SN, ideal_generate(r, {4}), s);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.witnesses.to_vector(), (V{3, 9}));
  auto v2 = s_witnesses(SKind::SN, ideal_generate(r, {2}), s);
  EXPECT_TRUE(v2.holds);
  EXPECT_TRUE(v2.witnesses.contains(3));
  EXPECT_TRUE(s_witnesses(SKind::SN, ideal_generate(r, {6}), s).holds);
  EXPECT_THROW(s_witnesses(SKind::SN, ideal_generate(r, {4}), multset_close(r, {2})), NotDisjoint);
}

TEST(Classify, ClassifyIdeal) {
  auto r = z(12);
  auto s = multset_close(r, {3});
  auto c = classify_ideal(ideal_generate(r, {4}), s);
  EXPECT_TRUE(c.s_n->holds);
  EXPECT_FALSE(c.n_ideal.holds);
  EXPECT_FALSE(c.s_prime->holds);
  EXPECT_TRUE(c.primary.holds);
  EXPECT_EQ(c.nil_annihilators.to_vector(), (V{3, 9}));
  ASSERT_EQ(c.witness_colons.size(), 2u);
  EXPECT_EQ(c.witness_colons[0].second.to_vector(), (V{0, 4, 8}));

  auto two = classify_ideal(ideal_generate(r, {2}), s);
  EXPECT_TRUE(two.prime.holds && two.s_prime->holds && two.s_n->holds);

  auto z7 = z(7);
  auto f = classify_ideal(zero_ideal(z7), multset_close(z7, {}));
  EXPECT_TRUE(f.prime.holds);
  EXPECT_TRUE(f.n_ideal.holds);
}

TEST(Classify, AllAndMaximal) {
  auto r = z(12);
  EXPECT_EQ(as_lists(all_s_n_ideals(r, multset_close(r, {3}))),
            (std::vector<V>{{0}, {0, 6}, {0, 4, 8}, {0, 2, 4, 6, 8, 10}}));
  auto z30 = z(30), z8 = z(8), z6 = z(6);
  EXPECT_TRUE(all_s_n_ideals(z30, multset_close(z30, {2})).empty());
  EXPECT_TRUE(all_s_n_ideals(z8, multset_close(z8, {2})).empty());
  EXPECT_EQ(as_lists(maximal_s_n_ideals(r, multset_close(r, {3}))),
            (std::vector<V>{{0, 2, 4, 6, 8, 10}}));
  EXPECT_EQ(as_lists(maximal_s_n_ideals(z6, multset_close(z6, {3}))),
            (std::vector<V>{{0, 2, 4}}));
  EXPECT_TRUE(maximal_s_n_ideals(z30, multset_close(z30, {2})).empty());
}

TEST(Classify, ZnFast) {
  auto a = zn_fast_classify(12, {3});
  EXPECT_EQ(a.regime, ZnRegime::AllDisjoint);
  EXPECT_EQ(a.generators, (std::vector<std::uint64_t>{0, 6, 4, 2}));
  EXPECT_EQ(zn_fast_classify(8, {2}).regime, ZnRegime::None);
  EXPECT_EQ(zn_fast_classify(30, {2, 3}).regime, ZnRegime::AllDisjoint);
  EXPECT_EQ(zn_fast_classify(30, {2}).regime, ZnRegime::None);
  EXPECT_EQ(zn_fast_classify(12, {2}).generators, (std::vector<std::uint64_t>{0, 6, 3}));
  EXPECT_THROW(zn_fast_classify(12, {}), InvalidSpec);
  EXPECT_THROW(zn_fast_classify(12, {5}), InvalidSpec);
  EXPECT_THROW(zn_fast_classify(12, {4}), InvalidSpec);
}

// Witness sets and counterexamples agree with the definitional oracle on
// every ideal and every singleton-generated S of several small rings.
TEST(ClassifyProperty, EngineMatchesOracle) {
  std::vector<RingSpec> specs = {RingSpec::zn(12), RingSpec::zn(16), RingSpec::zn(18),
                                 RingSpec::zn(30),
                                 RingSpec::product({RingSpec::zn(4), RingSpec::zn(6)}),
                                 RingSpec::idealization(RingSpec::zn(4), ModuleSpec::self())};
  const std::pair<SKind, oracle::Kind> kinds[] = {{SKind::SN, oracle::Kind::SN},
                                                  {SKind::SPrime, oracle::Kind::SPrime},
                                                  {SKind::SPrimary, oracle::Kind::SPrimary}};
  for (const auto& spec : specs) {
    auto r = build_ring(spec);
    Classifier c(r);
    auto ideals = all_ideals(r);
    for (const auto& i : ideals) {
      if (!i.is_proper()) continue;
      auto iset = oracle::to_set(i.elements);
      EXPECT_EQ(c.absolute(Predicate::NIdeal, i.elements).holds, oracle::n_ideal(*r, iset));
      EXPECT_EQ(c.absolute(Predicate::Prime, i.elements).holds, oracle::prime(*r, iset));
      for (Elem x = 0; x < r->order(); ++x) {
        auto s = multset_close(r, {x});
        if (s.elements.intersects(i.elements)) continue;
        auto sset = oracle::to_set(s.elements);
        for (auto [k, ok] : kinds) {
          auto v = c.relative(k, i.elements, s.elements);
          auto expected = oracle::witnesses(*r, iset, ok, sset);
          ASSERT_EQ(oracle::to_set(v.witnesses), expected) << r->name() << " I=" << i.generators[0];
          EXPECT_EQ(v.holds, !expected.empty());
          if (v.counterexample) {
            auto [a, b] = *v.counterexample;
            EXPECT_TRUE(iset.count(r->mul(a, b)));
          }
        }
        // n-ideal implies S-n; S-n implies S-primary.
        bool sn = c.holds(SKind::SN, i.elements, s.elements);
        if (c.holds(Predicate::NIdeal, i.elements)) EXPECT_TRUE(sn);
        if (sn) EXPECT_TRUE(c.holds(SKind::SPrimary, i.elements, s.elements));
        if (s.elements.is_subset_of(r->unit_set()))
          EXPECT_EQ(sn, c.holds(Predicate::NIdeal, i.elements));
      }
    }
  }
}

// A reported counterexample refutes the implication for every s in S.
TEST(ClassifyProperty, CounterexamplesRefuteEveryS) {
  for (std::uint64_t n : {8u, 12u, 24u, 36u}) {
    auto r = z(n);
    auto nil = r->nilradical_set();
    for (const auto& i : all_ideals(r)) {
      if (!i.is_proper()) continue;
      for (Elem x = 0; x < n; ++x) {
        auto s = multset_close(r, {x});
        if (s.elements.intersects(i.elements)) continue;
        auto v = s_witnesses(SKind::SN, i, s);
        if (!v.counterexample) continue;
        auto [a, b] = *v.counterexample;
        ASSERT_TRUE(i.contains(r->mul(a, b)));
        s.elements.for_each([&](Elem t) {
          EXPECT_FALSE(nil.contains(r->mul(t, a)));
          EXPECT_FALSE(i.contains(r->mul(t, b)));
        });
      }
    }
  }
}

TEST(ClassifyProperty, ZnFastAgreesSmall) {
  for (std::uint64_t n = 2; n <= 300; ++n) {
    auto r = z(n);
    auto primes = prime_factors(n);
    for (std::uint64_t mask = 1; mask < (1u << primes.size()); ++mask) {
      std::vector<std::uint64_t> p;
      std::vector<Elem> seed;
      for (std::size_t k = 0; k < primes.size(); ++k)
        if (mask >> k & 1) {
          p.push_back(primes[k]);
          seed.push_back(static_cast<Elem>(primes[k] % n));
        }
      auto fast = zn_fast_classify(n, p);
      auto brute = all_s_n_ideals(r, multset_close(r, seed));
      std::vector<std::uint64_t> got;
      for (const auto& i : brute) got.push_back(i.generators.at(0));
      ASSERT_EQ(got, fast.generators) << "n=" << n << " mask=" << mask;
    }
  }
}
