#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "snideal/element_set.hpp"

namespace snideal {

using json = nlohmann::json;

/// Description of an R-module used by idealization.
///
/// JSON forms:
///   {"self": true}                          M = R acting on itself
///   {"group": [m1, ..., mt], "action": "scalar"}
///                                           Z_{m1} x ... x Z_{mt}, the base
///                                           ring (a Z_n) acting through its
///                                           residue; needs every m_i | n
///   {"group": [...], "action": [[...], ...]}
///                                           explicit table, action[r][m]
/// Module elements of a cyclic group are indexed mixed-radix little-endian.
struct ModuleSpec {
  enum class Kind { Self, Cyclic };

  Kind kind = Kind::Self;
  std::vector<std::uint32_t> group;
  bool scalar_action = false;
  std::vector<std::vector<Elem>> action;

  static ModuleSpec self() { return {}; }
  static ModuleSpec scalar(std::vector<std::uint32_t> group);
  static ModuleSpec table(std::vector<std::uint32_t> group,
                          std::vector<std::vector<Elem>> action);

  json to_json() const;
  static ModuleSpec from_json(const json& j);
  bool operator==(const ModuleSpec&) const = default;
};

/// Description of a ring homomorphism used by amalgamation.
///
/// JSON forms: an element table [f(0), f(1), ...], "identity", or "reduce"
/// (Z_n -> Z_m, x -> x mod m, for m | n).
struct HomSpec {
  enum class Kind { Table, Identity, Reduce };

  Kind kind = Kind::Identity;
  std::vector<Elem> table;

  json to_json() const;
  static HomSpec from_json(const json& j);
  bool operator==(const HomSpec&) const = default;
};

/// Construction recipe for a finite ring.
///
/// JSON grammar:
///   {"zn": 12}
///   {"product": [spec, spec, ...]}
///   {"quotient": {"of": spec, "gens": [4]}}
///   {"localization": {"of": spec, "seed": [3]}}
///   {"idealization": {"of": spec, "module": module}}
///   {"amalgamation": {"base": spec, "target": spec, "hom": hom,
///                     "ideal": [gens in target]}}
struct RingSpec {
  enum class Kind { Zn, Product, Quotient, Localization, Idealization, Amalgamation };

  Kind kind = Kind::Zn;
  std::uint64_t n = 0;
  // Product: factors. Quotient, Localization, Idealization: {of}.
  // Amalgamation: {base, target}.
  std::vector<RingSpec> parts;
  // Quotient: ideal generators. Localization: seed of S. Amalgamation:
  // generators of J in the target.
  std::vector<Elem> elems;
  std::optional<ModuleSpec> module;
  std::optional<HomSpec> hom;

  static RingSpec zn(std::uint64_t n);
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec quotient(RingSpec of, std::vector<Elem> gens);
  static RingSpec localization(RingSpec of, std::vector<Elem> seed);
  static RingSpec idealization(RingSpec of, ModuleSpec module);
  static RingSpec amalgamation(RingSpec base, RingSpec target, HomSpec hom,
                               std::vector<Elem> ideal_gens);

  json to_json() const;
  static RingSpec from_json(const json& j);
  static RingSpec parse(const std::string& text);

  /// Compact JSON text; equal specs give equal strings.
  std::string canonical() const;
  /// Short human-readable name, e.g. "Z_12 x Z_4" or "Z_12/<4>".
  std::string describe() const;

  bool operator==(const RingSpec&) const = default;
};

}  // namespace snideal
