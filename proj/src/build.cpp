#include "snideal/constructions.hpp"
#include "snideal/errors.hpp"
#include "snideal/ring.hpp"

namespace snideal {

namespace {

void check_indices(const FiniteRing& r, const std::vector<Elem>& xs, const char* what) {
  for (Elem x : xs)
    if (!r.valid(x))
      throw InvalidSpec(std::string(what) + " element " + std::to_string(x) + " out of range for " +
                        r.name());
}

}  // namespace

RingPtr build_ring(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::Zn:
      if (spec.n < 2) throw InvalidSpec("zn requires n >= 2");
      return FiniteRing::modular(spec.n);
    case RingSpec::Kind::Product: {
      if (spec.parts.empty()) throw InvalidSpec("product requires at least one factor");
      std::vector<RingPtr> factors;
      for (const auto& p : spec.parts) factors.push_back(build_ring(p));
      return FiniteRing::product(std::move(factors));
    }
    case RingSpec::Kind::Quotient: {
      auto parent = build_ring(spec.parts.at(0));
      check_indices(*parent, spec.elems, "quotient generator");
      return quotient_ring(ideal_generate(parent, spec.elems)).ring;
    }
    case RingSpec::Kind::Localization: {
      auto parent = build_ring(spec.parts.at(0));
      check_indices(*parent, spec.elems, "localization seed");
      return localize(multset_close(parent, spec.elems)).ring;
    }
    case RingSpec::Kind::Idealization:
      return idealize(build_ring(spec.parts.at(0)), *spec.module).ring;
    case RingSpec::Kind::Amalgamation: {
      auto base = build_ring(spec.parts.at(0));
      auto target = build_ring(spec.parts.at(1));
      check_indices(*target, spec.elems, "amalgamation ideal");
      auto f = hom_from_spec(base, target, *spec.hom);
      return amalgamate(f, ideal_generate(target, spec.elems)).ring;
    }
  }
  throw InvalidSpec("unknown ring kind");
}

}  // namespace snideal
