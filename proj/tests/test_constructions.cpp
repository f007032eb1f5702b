#include <gtest/gtest.h>

#include "snideal/classify.hpp"
#include "snideal/constructions.hpp"
#include "snideal/errors.hpp"

using namespace snideal;
using V = std::vector<Elem>;

namespace {

RingPtr z(std::uint64_t n) { return FiniteRing::modular(n); }

bool iso_sizes(const FiniteRing& a, const FiniteRing& b) {
  return a.order() == b.order() && a.unit_set().count() == b.unit_set().count() &&
         a.nilradical_set().count() == b.nilradical_set().count();
}

RingHom reduce(const RingPtr& a, const RingPtr& b) {
  return hom_from_spec(a, b, HomSpec::from_json("reduce"));
}

}  // namespace

TEST(Quotient, Examples) {
  auto r = z(12);
  auto q = quotient_ring(ideal_generate(r, {4}));
  EXPECT_EQ(q.ring->order(), 4u);
  EXPECT_EQ(q.push(multset_close(r, {3})).to_vector(), (V{1, 3}));
  EXPECT_TRUE(iso_sizes(*quotient_ring(zero_ideal(r)).ring, *r));
  EXPECT_EQ(quotient_ring(ideal_generate(r, {6})).ring->order(), 6u);
  EXPECT_THROW(quotient_ring(unit_ideal(r)), PreconditionViolated);
  EXPECT_EQ(q.projection.kernel, ideal_generate(r, {4}));
}

TEST(Product, Examples) {
  auto a = z(12), b = z(4);
  auto p = product_ring(a, b);
  EXPECT_EQ(p->order(), 48u);
  auto s = multset_close(a, {3});
  auto s2 = multset_from_set(b, ElementSet(4, {0, 1, 2}));
  ASSERT_TRUE(is_multiplicative_set(*b, s2.elements));
  auto i = product_ideal(p, ideal_generate(a, {4}), unit_ideal(b));
  EXPECT_TRUE(is_ideal_set(*p, i.elements));
  EXPECT_TRUE(s_witnesses(SKind::SN, i, product_multset(p, s, s2)).holds);

  auto cross = product_ideal(p, ideal_generate(a, {4}), ideal_generate(b, {2}));
  auto t = multset_close(b, {3});
  EXPECT_FALSE(s_witnesses(SKind::SN, cross, product_multset(p, s, t)).holds);
}

TEST(Localization, Examples) {
  auto r = z(12);
  auto loc = localize(multset_close(r, {3}));
  EXPECT_EQ(loc.ring->order(), 4u);
  EXPECT_EQ(loc.canonical.kernel, ideal_generate(r, {4}));
  auto z6 = z(6);
  EXPECT_EQ(localize(multset_close(z6, {3})).ring->order(), 2u);
  auto same = localize(multset_close(r, {}));
  EXPECT_TRUE(iso_sizes(*same.ring, *r));
  EXPECT_THROW(localize(multset_close(r, {6})), DegenerateLocalization);
  EXPECT_EQ(build_ring(RingSpec::localization(RingSpec::zn(12), {3}))->order(), 4u);
}

TEST(Localization, ExtendContract) {
  auto r = z(12);
  auto s = multset_close(r, {3});
  auto i4 = ideal_generate(r, {4});
  auto ec = extend_contract(i4, s, s);
  EXPECT_TRUE(ec.extended.is_zero());
  EXPECT_EQ(ec.contracted, colon(i4, 3));
  EXPECT_EQ(ec.contracted, i4);
  EXPECT_TRUE(is_n_ideal(ec.extended).holds);
  auto i2 = ideal_generate(r, {2});
  EXPECT_EQ(extend_contract(i2, s, s).contracted, i2);
  auto one = multset_close(r, {});
  EXPECT_EQ(extend_contract(i4, one, one).contracted, i4);
  EXPECT_THROW(extend_contract(i4, multset_close(r, {2}), multset_close(r, {2})), NotDisjoint);
}

TEST(Idealization, Examples) {
  auto r = z(12);
  auto id = idealize(r, ModuleSpec::self());
  EXPECT_EQ(id.ring->order(), 144u);
  auto nil = id.ring->nilradical_set();
  EXPECT_EQ(nil.count(), 24u);
  EXPECT_EQ(nil, id.plus_set(r->nilradical_set(), ElementSet::full(12)));
  auto s = multset_close(r, {3});
  auto lifted = id.ideal_plus(ideal_generate(r, {4}), ElementSet::full(12));
  EXPECT_TRUE(s_witnesses(SKind::SN, lifted, id.plus_zero(s)).holds);
  EXPECT_EQ(idealize(z(4), ModuleSpec::scalar({2})).ring->order(), 8u);
  // <2>(+)0 fails IM within N: 2 * 1 = 2 is not in 0.
  EXPECT_THROW(id.ideal_plus(ideal_generate(r, {2}), ElementSet(12, {0})), PreconditionViolated);
  EXPECT_THROW(idealize(z(4), ModuleSpec::scalar({3})), InvalidSpec);
  std::vector<std::vector<Elem>> bad(4, std::vector<Elem>{0, 0});
  EXPECT_THROW(idealize(z(4), ModuleSpec::table({2}, bad)), PreconditionViolated);
}

TEST(Hom, Examples) {
  auto z8 = z(8), z4 = z(4);
  auto f = reduce(z8, z4);
  EXPECT_EQ(f.kernel, ideal_generate(z8, {4}));
  EXPECT_TRUE(f.surjective);
  auto id = identity_hom(z(12));
  EXPECT_TRUE(id.kernel.is_zero());
  EXPECT_THROW(make_hom(z4, z8, V{0, 1, 2, 3}), PreconditionViolated);
  EXPECT_THROW(hom_image_ideal(make_hom(z(3), z(3), V{0, 1, 2}), zero_ideal(z(3))), RingMismatch);
}

TEST(Amalgamation, Examples) {
  auto z8 = z(8), z4 = z(4);
  auto a = amalgamate(reduce(z8, z4), ideal_generate(z4, {2}));
  EXPECT_EQ(a.ring->order(), 16u);
  auto lifted = a.lift_ideal(ideal_generate(z8, {2}));
  EXPECT_TRUE(is_n_ideal(ideal_generate(z8, {2})).holds);
  EXPECT_TRUE(is_n_ideal(lifted).holds);
  EXPECT_EQ(a.ring->nilradical_set(), a.lift_ideal(nilradical(z8)).elements);

  auto z5 = z(5);
  auto dup0 = amalgamate(identity_hom(z5), zero_ideal(z5));
  EXPECT_TRUE(iso_sizes(*dup0.ring, *z5));
  auto z6 = z(6);
  auto dup = amalgamate(identity_hom(z6), ideal_generate(z6, {3}));
  EXPECT_EQ(dup.ring->order(), 12u);
  auto spec = RingSpec::parse(
      R"({"amalgamation":{"base":{"zn":6},"target":{"zn":6},"hom":"identity","ideal":[3]}})");
  EXPECT_EQ(build_ring(spec)->order(), 12u);
}

// Property: every construction yields a ring, lifted sets are closed, and the
// nilradical formulas hold.
TEST(ConstructionProperty, LiftsAndNilradicals) {
  for (std::uint64_t n : {4u, 6u, 8u, 12u}) {
    auto r = z(n);
    auto ideals = all_ideals(r);
    for (const auto& ms : {ModuleSpec::self(), ModuleSpec::scalar({2})}) {
      auto id = idealize(r, ms);
      ASSERT_TRUE(verify_axioms(*id.ring).ok);
      auto full = ElementSet::full(id.module->order());
      EXPECT_EQ(id.ring->nilradical_set(), id.plus_set(r->nilradical_set(), full));
      for (const auto& i : ideals)
        for (const auto& sub : id.module->all_submodules()) {
          if (!id.module->ideal_times_module(i.elements).is_subset_of(sub)) continue;
          EXPECT_TRUE(is_ideal_set(*id.ring, id.ideal_plus(i, sub).elements));
        }
      for (Elem x = 0; x < n; ++x) {
        auto s = multset_close(r, {x});
        EXPECT_TRUE(is_multiplicative_set(*id.ring, id.plus_zero(s).elements));
        EXPECT_TRUE(is_multiplicative_set(*id.ring, id.plus_module(s).elements));
      }
    }
    for (const auto& j : ideals) {
      auto a = amalgamate(identity_hom(r), j);
      ASSERT_TRUE(verify_axioms(*a.ring).ok);
      EXPECT_EQ(a.ring->order(), n * j.size());
      if (j.elements.is_subset_of(r->nilradical_set()))
        EXPECT_EQ(a.ring->nilradical_set(), a.lift_ideal(nilradical(r)).elements);
      for (const auto& i : ideals) {
        EXPECT_TRUE(is_ideal_set(*a.ring, a.lift_ideal(i).elements));
        EXPECT_TRUE(is_ideal_set(*a.ring, a.kbar(i).elements));
      }
      for (Elem x = 0; x < n; ++x) {
        auto s = multset_close(r, {x});
        for (const auto& m : {a.lift_multset(s), a.diagonal(s), a.tbar(s), a.s_times_fs(s)})
          EXPECT_TRUE(is_multiplicative_set(*a.ring, m.elements));
      }
      auto prod = product_ring(r, r);
      EXPECT_NO_THROW(a.inclusion(prod));
      EXPECT_TRUE(a.projection().surjective);
    }
  }
}

TEST(ConstructionProperty, LocalizationMatchesFractionEquivalence) {
  for (std::uint64_t n : {12u, 18u, 20u, 24u}) {
    auto r = z(n);
    for (Elem x = 1; x < n; ++x) {
      auto s = multset_close(r, {x});
      if (s.contains(0)) continue;
      auto loc = localize(s);
      auto sv = s.to_vector();
      // r/a ~ r'/b iff u(r b - r' a) = 0 for some u in S.
      for (Elem p = 0; p < n; ++p)
        for (Elem a : sv)
          for (Elem q = 0; q < n; q += 1)
            for (Elem b : {sv.front(), sv.back()}) {
              Elem diff = r->sub(r->mul(p, b), r->mul(q, a));
              bool equiv = false;
              for (Elem u : sv) equiv = equiv || r->mul(u, diff) == 0;
              ASSERT_EQ(equiv, loc.fraction(p, a) == loc.fraction(q, b)) << n << " S=<" << x << ">";
            }
      for (Elem u : sv) EXPECT_TRUE(loc.ring->unit_set().contains(loc.canonical(u)));
      ElementSet ker(n);
      for (Elem y = 0; y < n; ++y)
        for (Elem u : sv)
          if (r->mul(u, y) == 0) ker.insert(y);
      EXPECT_EQ(loc.canonical.kernel.elements, ker);
      // Each element's stored fraction is the least pair of its class.
      for (Elem k = 0; k < loc.ring->order(); ++k) {
        auto [num, den] = loc.fractions[k];
        EXPECT_EQ(loc.fraction(num, den), k);
        for (Elem p = 0; p < num; ++p)
          for (Elem a : sv) EXPECT_NE(loc.fraction(p, a), k);
      }
    }
  }
}

TEST(ConstructionProperty, HomImagePreimage) {
  for (auto [n, m] : {std::pair{12u, 4u}, {12u, 6u}, {8u, 2u}, {30u, 10u}}) {
    auto a = z(n), b = z(m);
    auto f = reduce(a, b);
    for (const auto& j : all_ideals(b)) {
      auto pre = hom_preimage_ideal(f, j);
      EXPECT_TRUE(is_ideal_set(*a, pre.elements));
      EXPECT_TRUE(f.kernel.elements.is_subset_of(pre.elements));
      auto back = hom_image_ideal(f, pre);
      EXPECT_EQ(back.ideal, j);
      EXPECT_TRUE(back.kernel_contained);
    }
  }
}
