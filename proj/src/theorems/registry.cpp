#include <algorithm>
#include <chrono>
#include <sstream>

#include "internal.hpp"
#include "snideal/errors.hpp"

namespace snideal {

namespace {

constexpr std::size_t kWitnessesKept = 5;

template <class T>
void read_field(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

json CorpusSpec::to_json() const {
  json extra = json::array();
  for (const auto& r : extra_rings) extra.push_back(r.to_json());
  return json{{"zn_min", zn_min},
              {"zn_max", zn_max},
              {"product_max", product_max},
              {"quotient_base_max", quotient_base_max},
              {"localization_base_max", localization_base_max},
              {"idealization_max", idealization_max},
              {"amalgamation_max", amalgamation_max},
              {"extra_rings", extra},
              {"singleton_seeds", singleton_seeds},
              {"unit_set", unit_set},
              {"nilpotent_set", nilpotent_set},
              {"principal_only", principal_only},
              {"ideal_pair_max", ideal_pair_max},
              {"triple_max", triple_max},
              {"sweep_base_max", sweep_base_max}};
}

CorpusSpec CorpusSpec::from_json(const json& j) {
  if (!j.is_object()) throw InvalidSpec("corpus spec must be a JSON object");
  CorpusSpec c;
  const json known = c.to_json();
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.contains(it.key())) throw InvalidSpec("unknown corpus field: " + it.key());
  try {
    read_field(j, "zn_min", c.zn_min);
    read_field(j, "zn_max", c.zn_max);
    read_field(j, "product_max", c.product_max);
    read_field(j, "quotient_base_max", c.quotient_base_max);
    read_field(j, "localization_base_max", c.localization_base_max);
    read_field(j, "idealization_max", c.idealization_max);
    read_field(j, "amalgamation_max", c.amalgamation_max);
    read_field(j, "singleton_seeds", c.singleton_seeds);
    read_field(j, "unit_set", c.unit_set);
    read_field(j, "nilpotent_set", c.nilpotent_set);
    read_field(j, "principal_only", c.principal_only);
    read_field(j, "ideal_pair_max", c.ideal_pair_max);
    read_field(j, "triple_max", c.triple_max);
    read_field(j, "sweep_base_max", c.sweep_base_max);
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("bad corpus field: ") + e.what());
  }
  if (j.contains("extra_rings"))
    for (const auto& r : j.at("extra_rings")) c.extra_rings.push_back(RingSpec::from_json(r));
  return c;
}

std::string CheckReport::to_text() const {
  std::ostringstream o;
  o << "== " << id << ": " << title << "\n";
  o << "instances: " << instances << "\n";
  o << "violations: " << violations.size() << "\n";
  for (const auto& [why, n] : skipped) o << "skipped: " << n << " (" << why << ")\n";
  for (const auto& [tag, n] : tags) o << "tagged " << tag << ": " << n << "\n";
  for (const auto& line : notes) o << "note: " << line << "\n";
  if (witness_count || !witnesses.empty()) o << "witnesses found: " << witness_count << "\n";
  for (const auto& w : witnesses) o << "  witness " << w.instance.dump() << " -- " << w.detail << "\n";
  for (const auto& v : violations) o << "  VIOLATION " << v.instance.dump() << " -- " << v.detail << "\n";
  o << "status: " << (ok() ? "PASS" : "FAIL") << "\n";
  return o.str();
}

json CheckReport::to_json(bool with_elapsed) const {
  auto records = [](const std::vector<InstanceRecord>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back({{"instance", r.instance}, {"detail", r.detail}});
    return a;
  };
  json j{{"id", id},
         {"title", title},
         {"instances", instances},
         {"violations", records(violations)},
         {"skipped", skipped},
         {"tags", tags},
         {"notes", notes},
         {"witnesses", records(witnesses)},
         {"witness_count", witness_count},
         {"ok", ok()},
         {"schema", "snideal.check-report/1"}};
  if (with_elapsed) j["elapsed_seconds"] = elapsed_seconds;
  return j;
}

namespace detail {

std::string show(const std::vector<Elem>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

std::vector<Elem> gens_of(const Ideal& i) {
  return i.generators.empty() ? minimal_generators(*i.ring, i.elements) : i.generators;
}

std::vector<Elem> seed_of(const MultSet& s) {
  return s.seed.empty() ? multset_generators(*s.ring, s.elements) : s.seed;
}

json Instance::to_json() const {
  return json{{"check", check}, {"part", part}, {"ring", ring.to_json()},
              {"ctx", ctx},     {"ideals", ideals}, {"mults", mults}};
}

Instance Instance::from_json(const json& j) {
  try {
    Instance inst;
    inst.check = j.at("check").get<std::string>();
    inst.part = j.value("part", "");
    inst.ring = RingSpec::from_json(j.at("ring"));
    inst.ctx = j.value("ctx", json::object());
    inst.ideals = j.value("ideals", std::vector<std::vector<Elem>>{});
    inst.mults = j.value("mults", std::vector<std::vector<Elem>>{});
    return inst;
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("bad instance: ") + e.what());
  }
}

const std::vector<CheckDef>& check_table() {
  static const std::vector<CheckDef> table = [] {
    std::vector<CheckDef> t;
    add_ring_checks(t);
    add_construction_checks(t);
    add_converse_searches(t);
    return t;
  }();
  return table;
}

const CheckDef* find_check(const std::string& id) {
  for (const auto& c : check_table())
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

void record(CheckReport& rep, const Instance& inst, const Outcome& out) {
  if (!out.note.empty()) rep.notes.push_back(out.note);
  switch (out.status) {
    case Outcome::Status::Pass:
      ++rep.instances;
      break;
    case Outcome::Status::Violation:
      ++rep.instances;
      rep.violations.push_back({inst.to_json(), out.detail});
      break;
    case Outcome::Status::Skip:
      ++rep.skipped[out.detail];
      return;
    case Outcome::Status::Witness:
      ++rep.instances;
      if (rep.witnesses.size() < kWitnessesKept) rep.witnesses.push_back({inst.to_json(), out.detail});
      ++rep.witness_count;
      break;
  }
  for (const auto& t : out.tags) ++rep.tags[t];
}

CheckReport run_def(const CheckDef& def, Workspace& ws) {
  CheckReport rep;
  rep.id = def.id;
  rep.title = def.title;
  const auto start = std::chrono::steady_clock::now();
  def.generate(ws, [&](const Instance& inst) {
    Outcome out;
    try {
      out = def.evaluate(ws, inst);
    } catch (const Error& e) {
      out = Outcome::fail(std::string("evaluation error: ") + e.what());
    }
    record(rep, inst, out);
  });
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

CheckReport run_def(const CheckDef& def, const CorpusSpec& corpus) {
  Workspace ws(corpus);
  return run_def(def, ws);
}

bool is_converse(const std::string& id) {
  return std::find(kConverseClaims.begin(), kConverseClaims.end(), id) != kConverseClaims.end();
}

void finish_converse(CheckReport& rep) {
  if (rep.witness_count == 0) rep.notes.push_back("none found in corpus");
}

}  // namespace

}  // namespace detail

const std::vector<std::string> kConverseClaims = {"SUBSET-CONVERSE", "IDEALIZ-CONVERSE",
                                                  "AMA-NONEQUIV"};

std::vector<CheckInfo> registry() {
  std::vector<CheckInfo> out;
  for (const auto& c : detail::check_table())
    if (c.id.rfind("T-", 0) == 0) out.push_back({c.id, c.title});
  return out;
}

bool is_check_id(const std::string& id) {
  return id.rfind("T-", 0) == 0 && detail::find_check(id) != nullptr;
}

CheckReport run_check(const std::string& id, const CorpusSpec& corpus) {
  if (!is_check_id(id)) throw InvalidSpec("unknown check id: " + id);
  return detail::run_def(*detail::find_check(id), corpus);
}

std::string replay(const json& instance) {
  auto inst = detail::Instance::from_json(instance);
  const auto* def = detail::find_check(inst.check);
  if (!def) throw InvalidSpec("unknown check id: " + inst.check);
  detail::Workspace ws(CorpusSpec{});
  detail::Outcome out;
  try {
    out = def->evaluate(ws, inst);
  } catch (const Error& e) {
    out = detail::Outcome::fail(std::string("evaluation error: ") + e.what());
  }
  switch (out.status) {
    case detail::Outcome::Status::Pass: return "pass";
    case detail::Outcome::Status::Violation: return "violation: " + out.detail;
    case detail::Outcome::Status::Skip: return "skip: " + out.detail;
    case detail::Outcome::Status::Witness: return "witness: " + out.detail;
  }
  return "pass";
}

CheckReport replicate_examples() { return detail::run_def(*detail::find_check("EXAMPLES"), CorpusSpec{}); }

CheckReport converse_counterexample_search(const std::string& claim, const CorpusSpec& corpus) {
  if (!detail::is_converse(claim)) throw InvalidSpec("unknown converse claim: " + claim);
  auto rep = detail::run_def(*detail::find_check(claim), corpus);
  detail::finish_converse(rep);
  return rep;
}

CheckReport validate_constructions(const CorpusSpec& corpus) {
  return detail::run_def(*detail::find_check("C-VALID"), corpus);
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& c : registry()) out.push_back(c.id);
  out.push_back("C-VALID");
  out.push_back("EXAMPLES");
  for (const auto& c : kConverseClaims) out.push_back(c);
  return out;
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& ids, const CorpusSpec& corpus) {
  for (const auto& id : ids)
    if (!detail::find_check(id)) throw InvalidSpec("unknown check id: " + id);
  detail::Workspace ws(corpus);
  std::vector<CheckReport> out;
  for (const auto& id : ids) {
    out.push_back(detail::run_def(*detail::find_check(id), ws));
    if (detail::is_converse(id)) detail::finish_converse(out.back());
  }
  return out;
}

}  // namespace snideal
