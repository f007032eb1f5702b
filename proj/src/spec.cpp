#include "snideal/spec.hpp"

#include <sstream>

#include "snideal/errors.hpp"

namespace snideal {

namespace {

std::vector<Elem> elem_list(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidSpec(std::string(what) + " must be an array of element indices");
  std::vector<Elem> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw InvalidSpec(std::string(what) + " entries must be non-negative integers");
    out.push_back(v.get<Elem>());
  }
  return out;
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw InvalidSpec(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::string join(const std::vector<Elem>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

}  // namespace

ModuleSpec ModuleSpec::scalar(std::vector<std::uint32_t> group) {
  ModuleSpec m;
  m.kind = Kind::Cyclic;
  m.group = std::move(group);
  m.scalar_action = true;
  return m;
}

ModuleSpec ModuleSpec::table(std::vector<std::uint32_t> group,
                             std::vector<std::vector<Elem>> action) {
  ModuleSpec m;
  m.kind = Kind::Cyclic;
  m.group = std::move(group);
  m.action = std::move(action);
  return m;
}

json ModuleSpec::to_json() const {
  if (kind == Kind::Self) return json{{"self", true}};
  json j{{"group", group}};
  if (scalar_action)
    j["action"] = "scalar";
  else
    j["action"] = action;
  return j;
}

ModuleSpec ModuleSpec::from_json(const json& j) {
  if (!j.is_object()) throw InvalidSpec("module spec must be an object");
  if (j.contains("self")) {
    if (j.at("self") != true) throw InvalidSpec("module \"self\" must be true");
    return self();
  }
  const json& g = field(j, "group");
  if (!g.is_array() || g.empty()) throw InvalidSpec("module group must be a non-empty array");
  std::vector<std::uint32_t> group;
  for (const auto& v : g) {
    if (!v.is_number_integer() || v.get<long long>() < 1)
      throw InvalidSpec("module group orders must be positive integers");
    group.push_back(v.get<std::uint32_t>());
  }
  const json& a = field(j, "action");
  if (a.is_string()) {
    if (a != "scalar") throw InvalidSpec("unknown module action \"" + a.get<std::string>() + "\"");
    return scalar(std::move(group));
  }
  if (!a.is_array()) throw InvalidSpec("module action must be \"scalar\" or a table");
  std::vector<std::vector<Elem>> table;
  for (const auto& row : a) table.push_back(elem_list(row, "module action row"));
  return ModuleSpec::table(std::move(group), std::move(table));
}

json HomSpec::to_json() const {
  switch (kind) {
    case Kind::Identity: return "identity";
    case Kind::Reduce: return "reduce";
    case Kind::Table: return table;
  }
  return nullptr;
}

HomSpec HomSpec::from_json(const json& j) {
  HomSpec h;
  if (j.is_string()) {
    if (j == "identity")
      h.kind = Kind::Identity;
    else if (j == "reduce")
      h.kind = Kind::Reduce;
    else
      throw InvalidSpec("unknown hom \"" + j.get<std::string>() + "\"");
    return h;
  }
  h.kind = Kind::Table;
  h.table = elem_list(j, "hom table");
  return h;
}

RingSpec RingSpec::zn(std::uint64_t n) {
  RingSpec s;
  s.kind = Kind::Zn;
  s.n = n;
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  RingSpec s;
  s.kind = Kind::Product;
  s.parts = std::move(factors);
  return s;
}

RingSpec RingSpec::quotient(RingSpec of, std::vector<Elem> gens) {
  RingSpec s;
  s.kind = Kind::Quotient;
  s.parts.push_back(std::move(of));
  s.elems = std::move(gens);
  return s;
}

RingSpec RingSpec::localization(RingSpec of, std::vector<Elem> seed) {
  RingSpec s;
  s.kind = Kind::Localization;
  s.parts.push_back(std::move(of));
  s.elems = std::move(seed);
  return s;
}

RingSpec RingSpec::idealization(RingSpec of, ModuleSpec module) {
  RingSpec s;
  s.kind = Kind::Idealization;
  s.parts.push_back(std::move(of));
  s.module = std::move(module);
  return s;
}

RingSpec RingSpec::amalgamation(RingSpec base, RingSpec target, HomSpec hom,
                                std::vector<Elem> ideal_gens) {
  RingSpec s;
  s.kind = Kind::Amalgamation;
  s.parts.push_back(std::move(base));
  s.parts.push_back(std::move(target));
  s.hom = std::move(hom);
  s.elems = std::move(ideal_gens);
  return s;
}

json RingSpec::to_json() const {
  switch (kind) {
    case Kind::Zn:
      return json{{"zn", n}};
    case Kind::Product: {
      json arr = json::array();
      for (const auto& p : parts) arr.push_back(p.to_json());
      return json{{"product", arr}};
    }
    case Kind::Quotient:
      return json{{"quotient", {{"of", parts.at(0).to_json()}, {"gens", elems}}}};
    case Kind::Localization:
      return json{{"localization", {{"of", parts.at(0).to_json()}, {"seed", elems}}}};
    case Kind::Idealization:
      return json{{"idealization", {{"of", parts.at(0).to_json()}, {"module", module->to_json()}}}};
    case Kind::Amalgamation:
      return json{{"amalgamation",
                   {{"base", parts.at(0).to_json()},
                    {"target", parts.at(1).to_json()},
                    {"hom", hom->to_json()},
                    {"ideal", elems}}}};
  }
  return nullptr;
}

RingSpec RingSpec::from_json(const json& j) {
  if (!j.is_object() || j.size() != 1)
    throw InvalidSpec("ring spec must be an object with exactly one key");
  const std::string key = j.begin().key();
  const json& body = j.begin().value();
  if (key == "zn") {
    if (!body.is_number_integer() || body.get<long long>() < 2)
      throw InvalidSpec("zn requires an integer n >= 2");
    return zn(body.get<std::uint64_t>());
  }
  if (key == "product") {
    if (!body.is_array() || body.empty()) throw InvalidSpec("product requires a non-empty array");
    std::vector<RingSpec> factors;
    for (const auto& f : body) factors.push_back(from_json(f));
    return product(std::move(factors));
  }
  if (key == "quotient")
    return quotient(from_json(field(body, "of")), elem_list(field(body, "gens"), "gens"));
  if (key == "localization")
    return localization(from_json(field(body, "of")), elem_list(field(body, "seed"), "seed"));
  if (key == "idealization")
    return idealization(from_json(field(body, "of")), ModuleSpec::from_json(field(body, "module")));
  if (key == "amalgamation")
    return amalgamation(from_json(field(body, "base")), from_json(field(body, "target")),
                        HomSpec::from_json(field(body, "hom")),
                        elem_list(field(body, "ideal"), "ideal"));
  throw InvalidSpec("unknown ring kind \"" + key + "\"");
}

RingSpec RingSpec::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidSpec(std::string("ring spec is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

std::string RingSpec::canonical() const { return to_json().dump(); }

std::string RingSpec::describe() const {
  switch (kind) {
    case Kind::Zn:
      return "Z_" + std::to_string(n);
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        bool nested = parts[i].kind != Kind::Zn;
        out += (i ? " x " : "");
        out += nested ? "(" + parts[i].describe() + ")" : parts[i].describe();
      }
      return out;
    }
    case Kind::Quotient:
      return "(" + parts[0].describe() + ")/<" + join(elems) + ">";
    case Kind::Localization:
      return "S^-1(" + parts[0].describe() + "), S=<" + join(elems) + ">";
    case Kind::Idealization: {
      std::string m = "M";
      if (module->kind == ModuleSpec::Kind::Self) {
        m = "self";
      } else {
        m.clear();
        for (std::size_t i = 0; i < module->group.size(); ++i)
          m += (i ? "xZ_" : "Z_") + std::to_string(module->group[i]);
      }
      return "(" + parts[0].describe() + ")(+)" + m;
    }
    case Kind::Amalgamation:
      return "(" + parts[0].describe() + ") |x|^f <" + join(elems) + "> in (" +
             parts[1].describe() + ")";
  }
  return "?";
}

}  // namespace snideal
