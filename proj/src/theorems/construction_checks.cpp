// Checks that move S-n ideals through a construction: localization,
// homomorphisms and quotients, products, idealization and amalgamation.
// Also the construction validation pass.

#include <algorithm>

#include "internal.hpp"
#include "snideal/errors.hpp"

namespace snideal::detail {

namespace {

// Amalgamation subrings are tested inside base x target only up to this order.
constexpr std::uint64_t kSubringProductMax = 1024;

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

ElementSet full(std::size_t n) { return ElementSet::full(n); }

/// Base rings used by the construction sweeps.
std::vector<RingSpec> sweep_bases(Workspace& ws) {
  std::vector<RingSpec> out;
  for (const auto& spec : ws.base_rings())
    if (ws.data(spec).ring->order() <= ws.corpus().sweep_base_max) out.push_back(spec);
  return out;
}

AmalgamationRecipe recipe_of(const RingSpec& spec) {
  if (spec.kind != RingSpec::Kind::Amalgamation) throw PreconditionViolated("not an amalgamation");
  return {spec.parts.at(0), spec.parts.at(1), *spec.hom, spec.elems};
}

RingSpec spec_of(const AmalgamationRecipe& a) {
  return RingSpec::amalgamation(a.base, a.target, a.hom, a.ideal);
}

const Idealization& idealization_of(Workspace& ws, const RingSpec& spec) {
  if (spec.kind != RingSpec::Kind::Idealization) throw PreconditionViolated("not an idealization");
  return ws.idealization(spec.parts.at(0), *spec.module);
}

// T-LOC ------------------------------------------------------------------------

void gen_loc(Workspace& ws, const Emit& emit) {
  for (const auto& spec : sweep_bases(ws)) {
    RingData& d = ws.data(spec);
    const auto& ms = d.mults();
    for (std::size_t t = 0; t < ms.size(); ++t) {
      if (ms[t].contains(d.ring->zero())) continue;
      for (std::size_t s = 0; s < ms.size(); ++s) {
        if (!ms[s].elements.is_subset_of(ms[t].elements)) continue;
        d.for_disjoint(ms[t].elements, [&](const Ideal& i) {
          if (d.sn(i.elements, ms[s].elements))
            emit(make("T-LOC", spec, {i.generators}, {d.seed(s), d.seed(t)}, s == t ? "S=T" : ""));
        });
      }
    }
  }
}

Outcome eval_loc(Workspace& ws, const Instance& inst) {
  RingData& d = ws.data(inst.ring);
  Ideal i = ws.ideal(d.ring, inst.ideals.at(0));
  MultSet s = ws.mult(d.ring, inst.mults.at(0)), t = ws.mult(d.ring, inst.mults.at(1));
  if (!s.elements.is_subset_of(t.elements)) throw PreconditionViolated("S is not inside T");
  if (t.elements.intersects(i.elements)) throw NotDisjoint("T meets I");
  if (!d.sn(i.elements, s.elements)) return Outcome::skip("hypothesis fails: I not S-n");
  const Localization& loc = ws.localization(inst.ring, inst.mults.at(1));
  RingData& ld = ws.data(loc.ring);
  const Ideal ext = loc.extend(i);
  const Ideal back = loc.contract(ext);
  const ElementSet ts = loc.fractions_over(s.elements);
  Claims c;
  c.require(ext.is_proper() && !ext.elements.intersects(ts), "T^-1 I not proper or meets T^-1 S");
  c.require(ld.sn(ext.elements, ts), "T^-1 I is not T^-1 S-n");
  d.cls->relative(SKind::SN, i.elements, s.elements).witnesses.for_each([&](Elem u) {
    c.require(back.elements == d.cls->colon(i.elements, u),
              "contraction differs from (I:" + std::to_string(u) + ") for an S-element");
  });
  if (s.elements == t.elements) c.require(ld.n_ideal(ext.elements), "S^-1 I is not an n-ideal");
  return c.outcome();
}

// T-LOC-IFF --------------------------------------------------------------------

void gen_loc_iff(Workspace& ws, const Emit& emit) {
  for (const auto& spec : sweep_bases(ws)) {
    RingData& d = ws.data(spec);
    for (std::size_t k = 0; k < d.mults().size(); ++k) {
      const auto& s = d.mults()[k];
      if (s.contains(d.ring->zero())) continue;
      d.for_disjoint(s.elements,
                     [&](const Ideal& i) { emit(make("T-LOC-IFF", spec, {i.generators}, {d.seed(k)})); });
    }
  }
}

Outcome eval_loc_iff(Workspace& ws, const Instance& inst) {
  RingData& d = ws.data(inst.ring);
  Ideal i = ws.ideal(d.ring, inst.ideals.at(0));
  MultSet s = ws.mult(d.ring, inst.mults.at(0));
  if (s.elements.intersects(i.elements)) throw NotDisjoint("S meets I");
  const Localization& loc = ws.localization(inst.ring, inst.mults.at(0));
  RingData& ld = ws.data(loc.ring);
  const Ideal ext = loc.extend(i);
  const ElementSet back = loc.contract(ext).elements;
  const ElementSet nil_back = loc.contract(loc.extend(ideal_from_set(d.ring, d.nil))).elements;
  bool colon_i = false, colon_nil = false;
  s.elements.for_each([&](Elem x) {
    colon_i = colon_i || d.cls->colon(i.elements, x) == back;
    colon_nil = colon_nil || d.cls->colon(d.nil, x) == nil_back;
  });
  const bool right = ld.n_ideal(ext.elements) && colon_i && colon_nil;
  Claims c;
  c.require(d.sn(i.elements, s.elements) == right, "S-n differs from the three localization conditions");
  return c.outcome();
}

// T-HOM ------------------------------------------------------------------------

// Surjections are the projections R -> R/K for every proper nonzero K.
void gen_by_quotient(Workspace& ws, const Emit& emit, const std::string& check, bool disjoint_only) {
  for (const auto& spec : sweep_bases(ws)) {
    RingData& d = ws.data(spec);
    for (auto k : d.proper()) {
      const Ideal& kernel = d.ideals[k];
      if (kernel.is_zero()) continue;
      for (std::size_t m = 0; m < d.mults().size(); ++m) {
        if (disjoint_only && d.mults()[m].elements.intersects(kernel.elements)) continue;
        emit(make(check, spec, {kernel.generators}, {d.seed(m)}));
      }
    }
  }
}

Outcome eval_hom(Workspace& ws, const Instance& inst) {
  RingData& d = ws.data(inst.ring);
  MultSet s = ws.mult(d.ring, inst.mults.at(0));
  const Quotient& q = ws.quotient(inst.ring, inst.ideals.at(0));
  RingData& qd = ws.data(q.ring);
  const RingHom& f = q.projection;
  const ElementSet fs = hom_image_multset(f, s).elements;
  Claims c;
  for (const auto& i : d.ideals) {
    if (!f.kernel.elements.is_subset_of(i.elements) || !d.sn(i.elements, s.elements)) continue;
    const ElementSet img = hom_image_ideal(f, i).ideal.elements;
    c.require(qd.sn(img, fs), "f(I) is not f(S)-n");
  }
  const bool kernel_nil = f.kernel.elements.is_subset_of(d.nil);
  if (kernel_nil)
    for (const auto& j : qd.ideals) {
      if (!qd.sn(j.elements, fs)) continue;
      c.require(d.sn(hom_preimage_ideal(f, j).elements, s.elements), "preimage of an f(S)-n ideal not S-n");
    }
  Outcome o = c.outcome();
  if (kernel_nil) o.tag("kernel-nil");
  return o;
}

// T-QUOT -----------------------------------------------------------------------

Outcome eval_quot_subring(Workspace& ws, const Instance& inst) {
  const auto recipe = recipe_of(inst.ring);
  const Amalgamation& a = ws.amalgamation(recipe);
  RingData& ad = ws.data(inst.ring);
  RingData& pd = ws.product(recipe.base, recipe.target);
  MultSet s = ws.mult(ad.ring, inst.mults.at(0));
  const RingHom incl = a.inclusion(pd.ring);
  const ElementSet is = hom_image_multset(incl, s).elements;
  Claims c;
  for (const auto& big : pd.ideals) {
    if (!pd.sn(big.elements, is)) continue;
    c.require(ad.sn(hom_preimage_ideal(incl, big).elements, s.elements), "I' meet R is not S-n");
  }
  return c.outcome();
}

Outcome eval_quot(Workspace& ws, const Instance& inst) {
  if (inst.part == "subring") return eval_quot_subring(ws, inst);
  RingData& d = ws.data(inst.ring);
  Ideal modulus = ws.ideal(d.ring, inst.ideals.at(0));
  MultSet s = ws.mult(d.ring, inst.mults.at(0));
  if (s.elements.intersects(modulus.elements)) throw NotDisjoint("S meets the ideal divided out");
  const Quotient& q = ws.quotient(inst.ring, inst.ideals.at(0));
  RingData& qd = ws.data(q.ring);
  const ElementSet bar_s = q.push(s).elements;
  const bool nil_modulus = modulus.elements.is_subset_of(d.nil);
  Claims c;
  for (const auto& j : d.ideals) {
    if (!modulus.elements.is_subset_of(j.elements) || !j.is_proper()) continue;
    const bool up = d.sn(j.elements, s.elements);
    const bool down = qd.sn(q.push(j).elements, bar_s);
    if (up) c.require(down, "J S-n but J/I not S-bar-n");
    if (nil_modulus) c.require(!down || up, "I nil, J/I S-bar-n but J not S-n");
  }
  Outcome o = c.outcome();
  if (nil_modulus) o.tag("modulus-nil");
  return o;
}

void gen_quot(Workspace& ws, const Emit& emit) {
  gen_by_quotient(ws, emit, "T-QUOT", true);
  for (const auto& recipe : ws.amalgamations()) {
    RingData& base = ws.data(recipe.base);
    RingData& target = ws.data(recipe.target);
    if (base.ring->order() * target.ring->order() > kSubringProductMax) continue;
    const RingSpec spec = spec_of(recipe);
    RingData& ad = ws.data(spec);
    for (std::size_t m = 0; m < ad.mults().size(); ++m)
      emit(make("T-QUOT", spec, {}, {ad.seed(m)}, "subring"));
  }
}

// Products ---------------------------------------------------------------------

struct ProductCase {
  RingData& left;
  RingData& right;
  RingData& both;
  MultSet s, s2;
  ElementSet cross_s;
};

ProductCase resolve_product(Workspace& ws, const Instance& inst) {
  if (inst.ring.kind != RingSpec::Kind::Product || inst.ring.parts.size() != 2)
    throw PreconditionViolated("not a two-factor product");
  RingData& l = ws.data(inst.ring.parts[0]);
  RingData& r = ws.data(inst.ring.parts[1]);
  RingData& p = ws.product(inst.ring.parts[0], inst.ring.parts[1]);
  MultSet s = ws.mult(l.ring, inst.mults.at(0)), s2 = ws.mult(r.ring, inst.mults.at(1));
  ElementSet cross = cross_set(*p.ring, s.elements, s2.elements);
  return {l, r, p, std::move(s), std::move(s2), std::move(cross)};
}

void gen_product(Workspace& ws, const Emit& emit, const std::string& check) {
  for (auto [a, b] : ws.product_pairs()) {
    if (a * b > ws.corpus().sweep_base_max) continue;
    const RingSpec la = RingSpec::zn(a), rb = RingSpec::zn(b);
    RingData& l = ws.data(la);
    RingData& r = ws.data(rb);
    const RingSpec spec = RingSpec::product({la, rb});
    for (std::size_t m = 0; m < l.mults().size(); ++m)
      for (std::size_t m2 = 0; m2 < r.mults().size(); ++m2)
        emit(make(check, spec, {}, {l.seed(m), r.seed(m2)}));
  }
}

Outcome eval_cart_replication(Workspace& ws, const Instance& inst) {
  auto pc = resolve_product(ws, inst);
  Ideal i = ws.ideal(pc.left.ring, inst.ideals.at(0));
  const ElementSet ir = cross_set(*pc.both.ring, i.elements, full(pc.right.ring->order()));
  const bool holds = pc.both.sn(ir, pc.cross_s);
  // (2,1) sits at 2 + 12 * 1 with the left factor varying fastest.
  const Elem x = static_cast<Elem>(2 + pc.left.ring->order() * 1);
  const FiniteRing& p = *pc.both.ring;
  bool blocked = ir.contains(p.mul(x, x));
  pc.cross_s.for_each([&](Elem sigma) {
    const Elem y = p.mul(sigma, x);
    blocked = blocked && !ir.contains(y) && !pc.both.nil.contains(y);
  });
  Claims c;
  c.require(pc.left.sn(i.elements, pc.s.elements), "<4> is not S-n in Z_12");
  c.require(!holds, "I x R' is (S x S')-n");
  c.require(blocked, "(2,1)(2,1) does not witness the failure");
  Outcome o = c.outcome();
  o.note = std::string("Z_12 x Z_12, S = S' = {1,3,9}, I = <4>: I x R' is ") + (holds ? "" : "NOT ") +
           "(S x S')-n; (2,1)(2,1) in I x R' with no (s,s')(2,1) in I x R' or the nilradical: " +
           (blocked ? "confirmed" : "not confirmed");
  return o;
}

Outcome eval_cart(Workspace& ws, const Instance& inst) {
  if (inst.part == "replication") return eval_cart_replication(ws, inst);
  auto pc = resolve_product(ws, inst);
  const bool zero_left = pc.s.contains(pc.left.ring->zero());
  const bool zero_right = pc.s2.contains(pc.right.ring->zero());
  const ElementSet all_left = full(pc.left.ring->order()), all_right = full(pc.right.ring->order());
  Claims c;
  for (auto k : pc.left.proper()) {
    const auto& i = pc.left.ideals[k].elements;
    const bool lhs = pc.both.sn(cross_set(*pc.both.ring, i, all_right), pc.cross_s);
    c.require(lhs == (pc.left.sn(i, pc.s.elements) && zero_right), "I x R' differs from the iff");
  }
  for (auto k : pc.right.proper()) {
    const auto& i = pc.right.ideals[k].elements;
    const bool lhs = pc.both.sn(cross_set(*pc.both.ring, all_left, i), pc.cross_s);
    c.require(lhs == (pc.right.sn(i, pc.s2.elements) && zero_left), "R x I' differs from the iff");
  }
  return c.outcome();
}

Outcome eval_cross_neg(Workspace& ws, const Instance& inst) {
  auto pc = resolve_product(ws, inst);
  Claims c;
  std::size_t pairs = 0;
  pc.left.for_disjoint(pc.s.elements, [&](const Ideal& i) {
    pc.right.for_disjoint(pc.s2.elements, [&](const Ideal& i2) {
      ++pairs;
      c.require(!pc.both.sn(cross_set(*pc.both.ring, i.elements, i2.elements), pc.cross_s),
                "I x I' is (S x S')-n with both factors disjoint");
    });
  });
  if (!pairs) return Outcome::skip("no proper ideal pair disjoint from S and S'");
  return c.outcome();
}

Outcome eval_cross_pos(Workspace& ws, const Instance& inst) {
  auto pc = resolve_product(ws, inst);
  const bool zero_left = pc.s.contains(pc.left.ring->zero());
  const bool zero_right = pc.s2.contains(pc.right.ring->zero());
  if (!zero_left && !zero_right) return Outcome::skip("hypothesis fails: neither S nor S' meets the nilradical");
  Claims c;
  for (auto a : pc.left.proper())
    for (auto b : pc.right.proper()) {
      const auto& i = pc.left.ideals[a].elements;
      const auto& i2 = pc.right.ideals[b].elements;
      const bool first = pc.left.sn(i, pc.s.elements) && zero_right;
      const bool second = pc.right.sn(i2, pc.s2.elements) && zero_left;
      if (first || second)
        c.require(pc.both.sn(cross_set(*pc.both.ring, i, i2), pc.cross_s),
                  "a sufficient condition holds but I x I' is not (S x S')-n");
    }
  return c.outcome();
}

// Idealization -----------------------------------------------------------------

void gen_idealization(Workspace& ws, const Emit& emit, const std::string& check, bool radical_part) {
  for (const auto& r : ws.idealizations()) {
    const RingSpec spec = RingSpec::idealization(r.base, r.module);
    RingData& base = ws.data(r.base);
    ws.data(spec);
    if (radical_part) emit(make(check, spec, {}, {}, "radical"));
    for (std::size_t m = 0; m < base.mults().size(); ++m) emit(make(check, spec, {}, {base.seed(m)}));
  }
}

Outcome eval_idl_radical(Workspace& ws, const Instance& inst) {
  const Idealization& id = idealization_of(ws, inst.ring);
  RingData& base = ws.data(inst.ring.parts.at(0));
  RingData& big = ws.data(inst.ring);
  const ElementSet all_m = full(id.module->order());
  Claims c;
  c.require(big.nil == id.plus_set(base.nil, all_m), "nilradical of R(+)M differs from nil(+)M");
  for (const auto& n : id.module->all_submodules())
    for (const auto& i : base.ideals) {
      if (!id.module->ideal_times_module(i.elements).is_subset_of(n)) continue;
      const Ideal plus = id.ideal_plus(i, n);
      c.require(big.cls->radical(plus.elements) == id.plus_set(base.cls->radical(i.elements), all_m),
                "radical of I(+)N differs from rad(I)(+)M");
    }
  return c.outcome();
}

Outcome eval_idl(Workspace& ws, const Instance& inst) {
  if (inst.part == "radical") return eval_idl_radical(ws, inst);
  const Idealization& id = idealization_of(ws, inst.ring);
  RingData& base = ws.data(inst.ring.parts.at(0));
  RingData& big = ws.data(inst.ring);
  MultSet s = ws.mult(base.ring, inst.mults.at(0));
  const ElementSet sm = id.plus_module(s).elements;
  Claims c;
  for (const auto& n : id.module->all_submodules())
    for (auto k : base.proper()) {
      const Ideal& i = base.ideals[k];
      if (!id.module->ideal_times_module(i.elements).is_subset_of(n)) continue;
      if (big.sn(id.ideal_plus(i, n).elements, sm))
        c.require(base.sn(i.elements, s.elements), "I(+)N is S(+)M-n but I is not S-n");
    }
  return c.outcome();
}

Outcome eval_id(Workspace& ws, const Instance& inst) {
  const Idealization& id = idealization_of(ws, inst.ring);
  RingData& base = ws.data(inst.ring.parts.at(0));
  RingData& big = ws.data(inst.ring);
  MultSet s = ws.mult(base.ring, inst.mults.at(0));
  const ElementSet s0 = id.plus_zero(s).elements, sm = id.plus_module(s).elements;
  const ElementSet all_m = full(id.module->order());
  Claims c;
  base.for_disjoint(s.elements, [&](const Ideal& i) {
    const ElementSet plus = id.ideal_plus(i, all_m).elements;
    const bool one = base.sn(i.elements, s.elements), two = big.sn(plus, s0), three = big.sn(plus, sm);
    c.require(one == two && two == three, "I S-n, I(+)M S(+)0-n and I(+)M S(+)M-n disagree");
  });
  return c.outcome();
}

// Amalgamation -----------------------------------------------------------------

struct AmalgamationCase {
  const Amalgamation& a;
  RingData& base;
  RingData& target;
  RingData& big;
  bool j_nil;
  bool kernel_nil;
};

AmalgamationCase resolve_amalgamation(Workspace& ws, const Instance& inst) {
  const auto recipe = recipe_of(inst.ring);
  const Amalgamation& a = ws.amalgamation(recipe);
  RingData& base = ws.data(recipe.base);
  RingData& target = ws.data(recipe.target);
  RingData& big = ws.data(inst.ring);
  return {a, base, target, big, a.j.elements.is_subset_of(target.nil),
          a.f.kernel.elements.is_subset_of(base.nil)};
}

void gen_amalgamation(Workspace& ws, const Emit& emit, const std::string& check, bool target_mults) {
  for (const auto& recipe : ws.amalgamations()) {
    const RingSpec spec = spec_of(recipe);
    ws.data(spec);
    RingData& side = ws.data(target_mults ? recipe.target : recipe.base);
    for (std::size_t m = 0; m < side.mults().size(); ++m) emit(make(check, spec, {}, {side.seed(m)}));
  }
}

Outcome eval_ama(Workspace& ws, const Instance& inst) {
  auto ac = resolve_amalgamation(ws, inst);
  MultSet s = ws.mult(ac.base.ring, inst.mults.at(0));
  const ElementSet w = ac.a.diagonal(s).elements, sj = ac.a.lift_multset(s).elements;
  Claims c;
  std::vector<ElementSet> lifted_good;
  ac.base.for_disjoint(s.elements, [&](const Ideal& i) {
    const ElementSet lifted = ac.a.lift_ideal(i).elements;
    const bool one = ac.big.sn(lifted, w), two = ac.big.sn(lifted, sj), three = ac.base.sn(i.elements, s.elements);
    c.require(!one || two, "I x J is W-n but not (S x J)-n");
    c.require(!two || three, "I x J is (S x J)-n but I is not S-n");
    if (ac.j_nil) c.require(one == three, "J nil, yet the three statements disagree");
    if (three) lifted_good.push_back(lifted);
  });
  if (ac.j_nil) {
    // Ideals containing 0 x J that are (S x J)-n are exactly the lifts of S-n ideals.
    const ElementSet zero_j = ac.a.lift_ideal(zero_ideal(ac.base.ring)).elements;
    std::vector<ElementSet> found;
    for (const auto& k : ac.big.ideals)
      if (zero_j.is_subset_of(k.elements) && ac.big.sn(k.elements, sj)) found.push_back(k.elements);
    auto by_order = [](const ElementSet& x, const ElementSet& y) { return canonical_less(x, y); };
    std::sort(found.begin(), found.end(), by_order);
    std::sort(lifted_good.begin(), lifted_good.end(), by_order);
    c.require(found == lifted_good, "(S x J)-n ideals over 0 x J are not the lifts of S-n ideals");
  }
  Outcome o = c.outcome();
  if (ac.j_nil) o.tag("J-nil");
  return o;
}

Outcome eval_ama2(Workspace& ws, const Instance& inst) {
  auto ac = resolve_amalgamation(ws, inst);
  MultSet t = ws.mult(ac.target.ring, inst.mults.at(0));
  const ElementSet tb = ac.a.tbar(t).elements;
  const bool both = ac.j_nil && ac.kernel_nil;
  Claims c;
  for (auto k : ac.target.proper()) {
    const Ideal& kk = ac.target.ideals[k];
    const ElementSet kb = ac.a.kbar(kk).elements;
    c.require(kk.elements.intersects(t.elements) == kb.intersects(tb), "T meets K iff T-bar meets K-bar fails");
    if (kk.elements.intersects(t.elements)) continue;
    const bool lhs = ac.big.sn(kb, tb), rhs = ac.target.sn(kk.elements, t.elements);
    c.require(!lhs || rhs, "K-bar is T-bar-n but K is not T-n");
    if (both) c.require(lhs == rhs, "J nil and Ker f nil, yet K-bar and K disagree");
  }
  Outcome o = c.outcome();
  if (both) o.tag("J-nil-and-kernel-nil");
  return o;
}

Outcome eval_ama_cors(Workspace& ws, const Instance& inst) {
  auto ac = resolve_amalgamation(ws, inst);
  MultSet s = ws.mult(ac.base.ring, inst.mults.at(0));
  const MultSet t = hom_image_multset(ac.a.f, s);
  const ElementSet st = ac.a.s_times_fs(s).elements, tb = ac.a.tbar(t).elements;
  const bool both = ac.j_nil && ac.kernel_nil;
  const bool duplication = inst.ring.hom->kind == HomSpec::Kind::Identity;
  Claims c;
  ac.target.for_disjoint(t.elements, [&](const Ideal& kk) {
    const ElementSet kb = ac.a.kbar(kk).elements;
    const bool one = ac.big.sn(kb, st), two = ac.big.sn(kb, tb), three = ac.target.sn(kk.elements, t.elements);
    c.require(!one || two, "K-bar is (S x f(S))-n but not T-bar-n");
    c.require(!two || three, "K-bar is T-bar-n but K is not f(S)-n");
    if (both) c.require(one == three, "J nil and Ker f nil, yet the three statements disagree");
  });
  // S = {1}: the n-ideal special case.
  if (s.elements.count() == 1) {
    for (auto k : ac.base.proper()) {
      const bool up = ac.big.n_ideal(ac.a.lift_ideal(ac.base.ideals[k]).elements);
      const bool down = ac.base.n_ideal(ac.base.ideals[k].elements);
      c.require(!up || down, "I x J is an n-ideal but I is not");
      if (ac.j_nil) c.require(up == down, "J nil, yet I x J and I disagree on n-ideal");
    }
    for (auto k : ac.target.proper()) {
      const bool up = ac.big.n_ideal(ac.a.kbar(ac.target.ideals[k]).elements);
      const bool down = ac.target.n_ideal(ac.target.ideals[k].elements);
      c.require(!up || down, "K-bar is an n-ideal but K is not");
      if (both) c.require(up == down, "J nil and Ker f nil, yet K-bar and K disagree on n-ideal");
    }
  }
  Outcome o = c.outcome();
  if (duplication) o.tag("duplication");
  if (s.elements.count() == 1) o.tag("S={1}");
  return o;
}

// Construction validation ------------------------------------------------------

const char* kind_name(RingSpec::Kind k) {
  switch (k) {
    case RingSpec::Kind::Zn: return "zn";
    case RingSpec::Kind::Product: return "product";
    case RingSpec::Kind::Quotient: return "quotient";
    case RingSpec::Kind::Localization: return "localization";
    case RingSpec::Kind::Idealization: return "idealization";
    case RingSpec::Kind::Amalgamation: return "amalgamation";
  }
  return "?";
}

void gen_valid(Workspace& ws, const Emit& emit) {
  for (const auto& spec : ws.ring_corpus())
    if (spec.kind != RingSpec::Kind::Zn) emit(make("C-VALID", spec, {}, {}, kind_name(spec.kind)));
}

Outcome eval_valid(Workspace& ws, const Instance& inst) {
  RingData& d = ws.data(inst.ring);
  const FiniteRing& r = *d.ring;
  Claims c;
  const auto axioms = verify_axioms(r, r.order(), 0);
  c.require(axioms.ok && axioms.exhaustive, "ring axioms: " + axioms.failure);
  auto ideal_ok = [&](const FiniteRing& ring, const ElementSet& e, const std::string& what) {
    c.require(is_ideal_set(ring, e), what + " is not an ideal");
  };
  auto mult_ok = [&](const FiniteRing& ring, const ElementSet& e, const std::string& what) {
    c.require(is_multiplicative_set(ring, e), what + " is not multiplicatively closed");
  };
  const RingSpec& spec = inst.ring;
  switch (spec.kind) {
    case RingSpec::Kind::Zn: break;
    case RingSpec::Kind::Product: {
      if (spec.parts.size() != 2) break;
      RingData& l = ws.data(spec.parts[0]);
      RingData& rt = ws.data(spec.parts[1]);
      for (const auto& i : l.ideals)
        for (const auto& j : rt.ideals) ideal_ok(r, cross_set(r, i.elements, j.elements), "I x I'");
      for (const auto& s : l.mults())
        for (const auto& t : rt.mults()) mult_ok(r, cross_set(r, s.elements, t.elements), "S x S'");
      c.require(d.nil == cross_set(r, l.nil, rt.nil), "nilradical of a product is not the product");
      break;
    }
    case RingSpec::Kind::Quotient: {
      const Quotient& q = ws.quotient(spec.parts.at(0), spec.elems);
      RingData& b = ws.data(spec.parts.at(0));
      for (const auto& j : b.ideals)
        if (q.ideal.elements.is_subset_of(j.elements)) ideal_ok(r, q.push(j).elements, "J/I");
      for (const auto& s : b.mults()) mult_ok(r, q.push(s).elements, "S-bar");
      break;
    }
    case RingSpec::Kind::Localization: {
      const Localization& loc = ws.localization(spec.parts.at(0), spec.elems);
      RingData& b = ws.data(spec.parts.at(0));
      for (const auto& i : b.ideals) ideal_ok(r, loc.extend(i).elements, "T^-1 I");
      for (const auto& s : b.mults())
        if (s.elements.is_subset_of(loc.mult.elements)) mult_ok(r, loc.fractions_over(s.elements), "T^-1 S");
      break;
    }
    case RingSpec::Kind::Idealization: {
      const Idealization& id = idealization_of(ws, spec);
      RingData& b = ws.data(spec.parts.at(0));
      for (const auto& n : id.module->all_submodules())
        for (const auto& i : b.ideals)
          if (id.module->ideal_times_module(i.elements).is_subset_of(n))
            ideal_ok(r, id.ideal_plus(i, n).elements, "I(+)N");
      for (const auto& s : b.mults()) {
        mult_ok(r, id.plus_zero(s).elements, "S(+)0");
        mult_ok(r, id.plus_module(s).elements, "S(+)M");
      }
      c.require(d.nil == id.plus_set(b.nil, full(id.module->order())), "nilradical of R(+)M is not nil(+)M");
      break;
    }
    case RingSpec::Kind::Amalgamation: {
      auto ac = resolve_amalgamation(ws, inst);
      for (const auto& i : ac.base.ideals) ideal_ok(r, ac.a.lift_ideal(i).elements, "I x J");
      for (const auto& k : ac.target.ideals) ideal_ok(r, ac.a.kbar(k).elements, "K-bar");
      for (const auto& s : ac.base.mults()) {
        mult_ok(r, ac.a.lift_multset(s).elements, "S x J");
        mult_ok(r, ac.a.diagonal(s).elements, "W");
        mult_ok(r, ac.a.s_times_fs(s).elements, "S x f(S)");
      }
      for (const auto& t : ac.target.mults()) mult_ok(r, ac.a.tbar(t).elements, "T-bar");
      if (ac.j_nil)
        c.require(d.nil == ac.a.lift_ideal(ideal_from_set(ac.base.ring, ac.base.nil)).elements,
                  "J nil, yet the nilradical is not nil x J");
      break;
    }
  }
  return c.outcome();
}

}  // namespace

void add_construction_checks(std::vector<CheckDef>& out) {
  out.push_back({"T-LOC", "localization carries S-n ideals to T^-1 S-n ideals", gen_loc, eval_loc});
  out.push_back({"T-LOC-IFF", "S-n iff the three localization conditions", gen_loc_iff, eval_loc_iff});
  out.push_back({"T-HOM", "images and preimages under surjections",
                 [](Workspace& ws, const Emit& emit) { gen_by_quotient(ws, emit, "T-HOM", false); }, eval_hom});
  out.push_back({"T-QUOT", "quotients J/I and intersections with subrings", gen_quot, eval_quot});
  out.push_back({"T-CART", "I x R' and R x I' in products",
                 [](Workspace& ws, const Emit& emit) {
                   emit(make("T-CART", RingSpec::product({RingSpec::zn(12), RingSpec::zn(12)}), {{4}},
                             {{3}, {3}}, "replication"));
                   gen_product(ws, emit, "T-CART");
                 },
                 eval_cart});
  out.push_back({"T-CROSS-NEG", "I x I' is never (S x S')-n with both factors disjoint",
                 [](Workspace& ws, const Emit& emit) { gen_product(ws, emit, "T-CROSS-NEG"); }, eval_cross_neg});
  out.push_back({"T-CROSS-POS", "sufficient conditions for I x I'",
                 [](Workspace& ws, const Emit& emit) { gen_product(ws, emit, "T-CROSS-POS"); }, eval_cross_pos});
  out.push_back({"T-IDL", "I(+)N S(+)M-n implies I S-n; radicals of I(+)N",
                 [](Workspace& ws, const Emit& emit) { gen_idealization(ws, emit, "T-IDL", true); }, eval_idl});
  out.push_back({"T-ID", "I S-n iff I(+)M S(+)0-n iff I(+)M S(+)M-n",
                 [](Workspace& ws, const Emit& emit) { gen_idealization(ws, emit, "T-ID", false); }, eval_id});
  out.push_back({"T-AMA", "W-n, (S x J)-n and S-n for lifted ideals",
                 [](Workspace& ws, const Emit& emit) { gen_amalgamation(ws, emit, "T-AMA", false); }, eval_ama});
  out.push_back({"T-AMA2", "K-bar T-bar-n and K T-n",
                 [](Workspace& ws, const Emit& emit) { gen_amalgamation(ws, emit, "T-AMA2", true); }, eval_ama2});
  out.push_back({"T-AMA-CORS", "S x f(S), T-bar and f(S) for K-bar; the n-ideal case",
                 [](Workspace& ws, const Emit& emit) { gen_amalgamation(ws, emit, "T-AMA-CORS", false); },
                 eval_ama_cors});
  out.push_back({"C-VALID", "construction axioms, closure and nilradical formulas", gen_valid, eval_valid});
}

}  // namespace snideal::detail
