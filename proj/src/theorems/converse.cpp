// Searches for finite witnesses of converses that fail in general.

#include <algorithm>

#include "internal.hpp"
#include "snideal/errors.hpp"

namespace snideal::detail {

namespace {

Instance make(const std::string& check, const RingSpec& spec, std::vector<std::vector<Elem>> mults,
              std::string part = {}) {
  Instance inst;
  inst.check = check;
  inst.part = std::move(part);
  inst.ring = spec;
  inst.mults = std::move(mults);
  return inst;
}

// SUBSET-CONVERSE: S inside T, I T-n but not S-n ---------------------------------

Outcome eval_subset_converse(Workspace& ws, const Instance& inst) {
  RingData& d = ws.data(inst.ring);
  MultSet s = ws.mult(d.ring, inst.mults.at(0)), t = ws.mult(d.ring, inst.mults.at(1));
  if (!s.elements.is_subset_of(t.elements)) throw PreconditionViolated("S is not inside T");
  std::vector<std::string> found;
  d.for_disjoint(t.elements, [&](const Ideal& i) {
    if (!d.sn(i.elements, t.elements) || d.sn(i.elements, s.elements)) return;
    const std::string g = show(i.generators);
    found.push_back("<" + g.substr(1, g.size() - 2) + ">");
  });
  if (found.empty()) return Outcome::pass();
  std::string list;
  for (const auto& f : found) list += (list.empty() ? "" : ", ") + f;
  Outcome o = Outcome::witness("T-n but not S-n: " + list + "; S = " + show(s.to_vector()) +
                               ", T = " + show(t.to_vector()));
  if (inst.part == "fixed") {
    const bool four = std::find(found.begin(), found.end(), "<4>") != found.end();
    o.note = std::string("Z_12, <4>: {1,3,9}-n but not {1}-n: ") + (four ? "confirmed" : "NOT confirmed");
  }
  return o;
}

void gen_subset_converse(Workspace& ws, const Emit& emit) {
  emit(make("SUBSET-CONVERSE", RingSpec::zn(12), {{}, {3}}, "fixed"));
  for (const auto& spec : ws.ring_corpus()) {
    RingData& d = ws.data(spec);
    if (d.ring->order() > ws.corpus().sweep_base_max) continue;
    const auto& ms = d.mults();
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = 0; b < ms.size(); ++b)
        if (a != b && ms[a].elements.is_subset_of(ms[b].elements) && !ms[b].contains(d.ring->zero()))
          emit(make("SUBSET-CONVERSE", spec, {d.seed(a), d.seed(b)}));
  }
}

// IDEALIZ-CONVERSE: I S-n but I(+)N not S(+)M-n ----------------------------------

Outcome eval_idealiz_converse(Workspace& ws, const Instance& inst) {
  if (inst.ring.kind != RingSpec::Kind::Idealization) throw PreconditionViolated("not an idealization");
  const Idealization& id = ws.idealization(inst.ring.parts.at(0), *inst.ring.module);
  RingData& base = ws.data(inst.ring.parts.at(0));
  RingData& big = ws.data(inst.ring);
  MultSet s = ws.mult(base.ring, inst.mults.at(0));
  const ElementSet sm = id.plus_module(s).elements;
  for (const auto& n : id.module->all_submodules()) {
    std::string found;
    base.for_disjoint(s.elements, [&](const Ideal& i) {
      if (!found.empty() || !id.module->ideal_times_module(i.elements).is_subset_of(n)) return;
      if (base.sn(i.elements, s.elements) && !big.sn(id.ideal_plus(i, n).elements, sm))
        found = "I = " + show(i.to_vector()) + " is S-n but I(+)N is not S(+)M-n, N = " + show(n.to_vector());
    });
    if (!found.empty()) return Outcome::witness(found);
  }
  return Outcome::pass();
}

// AMA-NONEQUIV: J not nil and a converse of the amalgamation chains fails ---------

Outcome eval_ama_nonequiv(Workspace& ws, const Instance& inst) {
  if (inst.ring.kind != RingSpec::Kind::Amalgamation) throw PreconditionViolated("not an amalgamation");
  const AmalgamationRecipe recipe{inst.ring.parts.at(0), inst.ring.parts.at(1), *inst.ring.hom, inst.ring.elems};
  const Amalgamation& a = ws.amalgamation(recipe);
  RingData& base = ws.data(recipe.base);
  RingData& target = ws.data(recipe.target);
  RingData& big = ws.data(inst.ring);
  MultSet s = ws.mult(base.ring, inst.mults.at(0));
  const MultSet t = hom_image_multset(a.f, s);
  const ElementSet sj = a.lift_multset(s).elements, tb = a.tbar(t).elements;
  std::string found;
  base.for_disjoint(s.elements, [&](const Ideal& i) {
    if (found.empty() && base.sn(i.elements, s.elements) && !big.sn(a.lift_ideal(i).elements, sj))
      found = "I = " + show(i.to_vector()) + " is S-n but its lift is not (S x J)-n";
  });
  target.for_disjoint(t.elements, [&](const Ideal& k) {
    if (found.empty() && target.sn(k.elements, t.elements) && !big.sn(a.kbar(k).elements, tb))
      found = "K = " + show(k.to_vector()) + " is f(S)-n but K-bar is not T-bar-n";
  });
  Outcome o = found.empty() ? Outcome::pass() : Outcome::witness(found + ", S = " + show(s.to_vector()));
  if (inst.part == "z6")
    o.note = inst.ring.describe() + ", S = " + show(s.to_vector()) + ": " +
             (found.empty() ? std::string("no witness") : "witness: " + o.detail);
  return o;
}

void gen_ama_nonequiv(Workspace& ws, const Emit& emit) {
  for (const auto& recipe : ws.amalgamations()) {
    const RingSpec spec = RingSpec::amalgamation(recipe.base, recipe.target, recipe.hom, recipe.ideal);
    const Amalgamation& a = ws.amalgamation(recipe);
    RingData& target = ws.data(recipe.target);
    if (a.j.elements.is_subset_of(target.nil)) continue;
    ws.data(spec);
    RingData& base = ws.data(recipe.base);
    const bool z6 = recipe.base == RingSpec::zn(6) && recipe.target == RingSpec::zn(6) &&
                    recipe.hom.kind == HomSpec::Kind::Identity && a.j.elements.count() == 2 &&
                    a.j.contains(3);
    for (std::size_t m = 0; m < base.mults().size(); ++m)
      emit(make("AMA-NONEQUIV", spec, {base.seed(m)}, z6 ? "z6" : ""));
  }
}

}  // namespace

void add_converse_searches(std::vector<CheckDef>& out) {
  out.push_back({"SUBSET-CONVERSE", "S inside T: T-n without S-n", gen_subset_converse, eval_subset_converse});
  out.push_back({"IDEALIZ-CONVERSE", "I S-n without I(+)N S(+)M-n",
                 [](Workspace& ws, const Emit& emit) {
                   for (const auto& r : ws.idealizations()) {
                     const RingSpec spec = RingSpec::idealization(r.base, r.module);
                     ws.data(spec);
                     RingData& base = ws.data(r.base);
                     for (std::size_t m = 0; m < base.mults().size(); ++m)
                       emit(make("IDEALIZ-CONVERSE", spec, {base.seed(m)}));
                   }
                 },
                 eval_idealiz_converse});
  out.push_back({"AMA-NONEQUIV", "J not nil: S-n without the amalgamated form", gen_ama_nonequiv,
                 eval_ama_nonequiv});
}

}  // namespace snideal::detail
