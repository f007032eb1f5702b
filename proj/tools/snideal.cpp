// Command-line front end: ring summaries, ideal classification, Z_n tables
// and the theorem registry.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "snideal/classify.hpp"
#include "snideal/errors.hpp"
#include "snideal/limits.hpp"
#include "snideal/theorems.hpp"

using namespace snideal;

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kBadInput = 2;
constexpr int kNotDisjoint = 3;

std::string braces(const std::vector<Elem>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

std::string braces(const ElementSet& e) { return braces(e.to_vector()); }

std::string angle(const std::vector<Elem>& gens) {
  std::string s = "<";
  for (std::size_t k = 0; k < gens.size(); ++k) s += (k ? "," : "") + std::to_string(gens[k]);
  return s + ">";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot read " + path);
  std::ostringstream o;
  o << in.rdbuf();
  return o.str();
}

/// Ring selection shared by `ring` and `classify`.
struct RingArgs {
  std::uint64_t zn = 0;
  std::string spec_file;
  std::string spec_json;

  void add(CLI::App* app) {
    auto* a = app->add_option("--zn", zn, "Z_n for this n");
    auto* b = app->add_option("--spec", spec_file, "ring spec JSON file");
    auto* c = app->add_option("--spec-json", spec_json, "ring spec as inline JSON");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  RingPtr build() const {
    if (zn) return build_ring(RingSpec::zn(zn));
    if (!spec_file.empty()) return build_ring(RingSpec::parse(read_file(spec_file)));
    if (!spec_json.empty()) return build_ring(RingSpec::parse(spec_json));
    throw InvalidSpec("give one of --zn, --spec, --spec-json");
  }
};

void check_elements(const FiniteRing& r, const std::vector<Elem>& v, const char* what) {
  for (Elem x : v)
    if (!r.valid(x)) throw InvalidSpec(std::string(what) + " element " + std::to_string(x) + " is outside the ring");
}

// ring -------------------------------------------------------------------------

int cmd_ring(const RingArgs& args, const std::string& format, bool list_ideals) {
  RingPtr r = args.build();
  const auto p = ring_predicates(*r);
  const bool reduced = is_reduced(*r), domain = is_integral_domain(*r);
  const auto ideals = list_ideals ? all_ideals(r) : std::vector<Ideal>{};
  if (format == "json") {
    json j{{"schema", "snideal.ring/1"},
           {"spec", r->spec().to_json()},
           {"name", r->name()},
           {"order", r->order()},
           {"units", r->unit_set().to_vector()},
           {"nilradical", r->nilradical_set().to_vector()},
           {"zero_divisors", r->zero_divisor_set().to_vector()},
           {"predicates",
            {{"field", p.is_field},
             {"von_neumann_regular", p.is_von_neumann_regular},
             {"un_ring", p.is_un_ring},
             {"reduced", reduced},
             {"integral_domain", domain}}}};
    if (list_ideals) {
      json a = json::array();
      for (const auto& i : ideals) a.push_back(ideal_to_json(i));
      j["ideals"] = a;
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "ring: " << r->name() << "\n"
            << "order: " << r->order() << "\n"
            << "units: " << braces(r->unit_set()) << "\n"
            << "nilradical: " << braces(r->nilradical_set()) << "\n"
            << "zero divisors: " << braces(r->zero_divisor_set()) << "\n"
            << "field: " << std::boolalpha << p.is_field << "\n"
            << "von Neumann regular: " << p.is_von_neumann_regular << "\n"
            << "UN-ring: " << p.is_un_ring << "\n"
            << "reduced: " << reduced << "\n"
            << "integral domain: " << domain << "\n";
  for (const auto& i : ideals)
    std::cout << "ideal " << angle(i.generators.empty() ? minimal_generators(*r, i.elements) : i.generators)
              << " = " << braces(i.elements) << "\n";
  return kOk;
}

// classify ---------------------------------------------------------------------

std::string verdict_text(const Verdict& v, bool relative) {
  std::string s = yes(v.holds);
  if (relative && v.holds) {
    const std::string w = braces(v.witnesses);
    s += " (witnesses " + w.substr(1, w.size() - 2) + ")";
  }
  if (!v.holds && v.counterexample)
    s += " (counterexample (" + std::to_string(v.counterexample->first) + "," +
         std::to_string(v.counterexample->second) + ")" + (relative ? " for every s" : "") + ")";
  return s;
}

json verdict_json(const Verdict& v) {
  json j{{"holds", v.holds}, {"witnesses", v.witnesses.to_vector()}};
  j["counterexample"] = v.counterexample ? json::array({v.counterexample->first, v.counterexample->second}) : json();
  return j;
}

int cmd_classify(const RingArgs& args, const std::vector<Elem>& gens, const std::vector<Elem>& seed,
                 const std::string& format) {
  RingPtr r = args.build();
  check_elements(*r, gens, "ideal");
  check_elements(*r, seed, "mult");
  const Ideal i = ideal_generate(r, gens);
  const MultSet s = multset_close(r, seed);
  if (!i.is_proper()) throw InvalidSpec("the ideal is the whole ring");
  const Classification c = classify_ideal(i, s);
  std::vector<std::pair<Elem, ElementSet>> colons;
  if (c.disjoint) s.elements.for_each([&](Elem x) { colons.emplace_back(x, colon_set(*r, i.elements, x)); });

  if (format == "json") {
    json j{{"schema", "snideal.classification/1"},
           {"ring", r->spec().to_json()},
           {"ideal", ideal_to_json(i)},
           {"mult", multset_to_json(s)},
           {"disjoint", c.disjoint},
           {"radical", c.radical.to_vector()},
           {"nilradical", r->nilradical_set().to_vector()},
           {"prime", verdict_json(c.prime)},
           {"primary", verdict_json(c.primary)},
           {"r_ideal", verdict_json(c.r_ideal)},
           {"n_ideal", verdict_json(c.n_ideal)}};
    if (c.disjoint) {
      j["s_prime"] = verdict_json(*c.s_prime);
      j["s_primary"] = verdict_json(*c.s_primary);
      j["s_n"] = verdict_json(*c.s_n);
      j["nil_annihilators"] = c.nil_annihilators.to_vector();
      json col = json::array();
      for (const auto& [x, e] : colons) col.push_back({{"s", x}, {"colon", e.to_vector()}});
      j["colons"] = col;
    }
    std::cout << j.dump(2) << "\n";
    return c.disjoint ? kOk : kNotDisjoint;
  }

  std::cout << "ring: " << r->name() << "\n"
            << "ideal: " << angle(gens) << " = " << braces(i.elements) << "\n"
            << "S: " << braces(s.elements) << "\n"
            << "radical: " << braces(c.radical.elements) << "\n"
            << "nilradical: " << braces(r->nilradical_set()) << "\n"
            << "prime: " << verdict_text(c.prime, false) << "\n"
            << "primary: " << verdict_text(c.primary, false) << "\n"
            << "r-ideal: " << verdict_text(c.r_ideal, false) << "\n"
            << "n-ideal: " << verdict_text(c.n_ideal, false) << "\n";
  if (!c.disjoint) {
    ElementSet meet = s.elements;
    meet &= i.elements;
    std::cout << "S-relative: undefined, S meets the ideal at " << braces(meet) << "\n";
    return kNotDisjoint;
  }
  std::cout << "S-prime: " << verdict_text(*c.s_prime, true) << "\n"
            << "S-primary: " << verdict_text(*c.s_primary, true) << "\n"
            << "S-n-ideal: " << verdict_text(*c.s_n, true) << "\n"
            << "s with sI in nilradical: " << braces(c.nil_annihilators) << "\n";
  for (const auto& [x, e] : colons) {
    std::cout << "(I:" << x << ") = " << braces(e);
    if (e == i.elements) std::cout << " = I";
    if (e == r->nilradical_set()) std::cout << " = nilradical";
    std::cout << "\n";
  }
  return kOk;
}

// table ------------------------------------------------------------------------

struct TableRow {
  std::uint64_t n;
  std::vector<std::uint64_t> primes;
  ZnFastResult fast;
  std::optional<bool> agrees;
};

std::string ideal_list(const std::vector<std::uint64_t>& gens) {
  std::string s;
  for (std::size_t k = 0; k < gens.size(); ++k) s += (k ? ", " : "") + ("<" + std::to_string(gens[k]) + ">");
  return s.empty() ? "-" : s;
}

std::string prime_set(const std::vector<std::uint64_t>& p) {
  std::string s = "{";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s + "}";
}

std::vector<std::vector<std::uint64_t>> cofactor_sets(std::uint64_t n, bool single) {
  const auto primes = prime_factors(n);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    std::vector<std::uint64_t> p;
    for (std::size_t b = 0; b < primes.size(); ++b)
      if (mask >> b & 1) p.push_back(primes[b]);
    if (!single || p.size() == 1) out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

bool brute_agrees(std::uint64_t n, const std::vector<std::uint64_t>& primes, const ZnFastResult& fast) {
  RingPtr r = build_ring(RingSpec::zn(n));
  std::vector<Elem> seed;
  for (auto p : primes) seed.push_back(static_cast<Elem>(p % n));
  std::vector<std::uint64_t> brute;
  for (const auto& i : all_s_n_ideals(r, multset_close(r, seed))) brute.push_back(i.generators.at(0));
  return brute == fast.generators;
}

int cmd_table(std::uint64_t min_n, std::uint64_t max_n, bool single, bool verify, const std::string& format) {
  if (min_n < 2 || max_n < min_n) throw InvalidSpec("need 2 <= min-n <= max-n");
  if (max_n > limits().formula_order_cap) throw CapExceeded("max-n exceeds the order cap");
  std::vector<TableRow> rows;
  for (std::uint64_t n = min_n; n <= max_n; ++n)
    for (const auto& p : cofactor_sets(n, single)) {
      TableRow row{n, p, zn_fast_classify(n, p), std::nullopt};
      if (verify) row.agrees = brute_agrees(n, p, row.fast);
      rows.push_back(std::move(row));
    }
  bool all_agree = true;
  for (const auto& row : rows) all_agree = all_agree && row.agrees.value_or(true);

  if (format == "json") {
    json a = json::array();
    for (const auto& row : rows) {
      json j{{"n", row.n}, {"primes", row.primes}, {"regime", regime_name(row.fast.regime)},
             {"s_n_ideals", row.fast.generators}};
      if (row.agrees) j["brute_force_agrees"] = *row.agrees;
      a.push_back(j);
    }
    std::cout << json{{"schema", "snideal.zn-table/1"}, {"rows", a}}.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,P,regime,s_n_ideals" << (verify ? ",agrees" : "") << "\n";
    for (const auto& row : rows) {
      std::string gens;
      for (std::size_t k = 0; k < row.fast.generators.size(); ++k)
        gens += (k ? " " : "") + std::to_string(row.fast.generators[k]);
      std::cout << row.n << ",\"" << prime_set(row.primes) << "\"," << regime_name(row.fast.regime) << ","
                << gens;
      if (row.agrees) std::cout << "," << yes(*row.agrees);
      std::cout << "\n";
    }
  } else if (format == "text") {
    for (const auto& row : rows) {
      std::cout << "n=" << row.n << " P=" << prime_set(row.primes) << ": " << regime_name(row.fast.regime)
                << " " << ideal_list(row.fast.generators);
      if (row.agrees) std::cout << " [brute force " << (*row.agrees ? "agrees" : "DISAGREES") << "]";
      std::cout << "\n";
    }
  } else {
    std::cout << "| n | P | regime | S_P-n-ideals |" << (verify ? " brute force |" : "") << "\n"
              << "|---|---|---|---|" << (verify ? "---|" : "") << "\n";
    for (const auto& row : rows) {
      std::cout << "| " << row.n << " | " << prime_set(row.primes) << " | " << regime_name(row.fast.regime)
                << " | " << ideal_list(row.fast.generators) << " |";
      if (row.agrees) std::cout << " " << (*row.agrees ? "agrees" : "DISAGREES") << " |";
      std::cout << "\n";
    }
  }
  return all_agree ? kOk : kViolations;
}

// verify -----------------------------------------------------------------------

int cmd_verify(std::vector<std::string> ids, bool examples, const std::string& corpus_file, std::uint64_t max_n,
               const std::string& replay_file, const std::string& format, bool timing) {
  if (!replay_file.empty()) {
    const std::string out = replay(json::parse(read_file(replay_file)));
    std::cout << out << "\n";
    return out.rfind("violation", 0) == 0 ? kViolations : kOk;
  }
  CorpusSpec corpus;
  if (!corpus_file.empty()) corpus = CorpusSpec::from_json(json::parse(read_file(corpus_file)));
  if (max_n) corpus.zn_max = max_n;
  if (examples) ids.push_back("EXAMPLES");
  std::vector<std::string> expanded;
  const auto known = suite_ids();
  for (const auto& id : ids) {
    if (id == "all") {
      expanded.insert(expanded.end(), known.begin(), known.end());
    } else if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw InvalidSpec("unknown check id: " + id);
    } else {
      expanded.push_back(id);
    }
  }
  if (expanded.empty()) throw InvalidSpec("nothing to verify; give check ids, all, or --examples");

  const auto reports = run_suite(expanded, corpus);
  std::size_t instances = 0, violations = 0;
  for (const auto& r : reports) {
    instances += r.instances;
    violations += r.violations.size();
    if (timing) std::cerr << r.id << ": " << r.elapsed_seconds << " s\n";
  }
  if (format == "json") {
    json a = json::array();
    for (const auto& r : reports) a.push_back(r.to_json(timing));
    std::cout << json{{"schema", "snideal.verify/1"},
                      {"corpus", corpus.to_json()},
                      {"reports", a},
                      {"instances", instances},
                      {"violations", violations}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.to_text() << "\n";
    std::cout << "checks: " << reports.size() << ", instances: " << instances << ", violations: " << violations
              << "\n";
  }
  return violations ? kViolations : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative rings and S-n-ideals"};
  app.require_subcommand(1);

  RingArgs ring_args, classify_args;
  std::string ring_format = "text", classify_format = "text", table_format = "markdown", verify_format = "text";
  bool list_ideals = false;
  auto* ring = app.add_subcommand("ring", "summarize a ring");
  ring_args.add(ring);
  ring->add_flag("--ideals", list_ideals, "list every ideal");
  ring->add_option("--format", ring_format)->check(CLI::IsMember({"text", "json"}));

  std::vector<Elem> gens{0}, seed;
  auto* classify = app.add_subcommand("classify", "classify an ideal relative to a multiplicative set");
  classify_args.add(classify);
  classify->add_option("--ideal", gens, "ideal generators")->delimiter(',');
  classify->add_option("--mult", seed, "generators of S (S = {1} when omitted)")->delimiter(',');
  classify->add_option("--format", classify_format)->check(CLI::IsMember({"text", "json"}));

  std::uint64_t table_n = 0, table_min = 2, table_max = 0;
  bool single = false, all_cofactors = false, table_verify = false;
  auto* table = app.add_subcommand("table", "S_P-n-ideals of Z_n from the factorization of n");
  table->add_option("--n", table_n, "a single n");
  table->add_option("--min-n", table_min, "range start (default 2)");
  table->add_option("--max-n", table_max, "range end");
  auto* single_flag = table->add_flag("--single-primes", single, "only P = {p}");
  table->add_flag("--all-prime-cofactors", all_cofactors, "every nonempty P (the default)")->excludes(single_flag);
  table->add_flag("--verify", table_verify, "add a brute-force agreement column");
  table->add_option("--format", table_format)->check(CLI::IsMember({"markdown", "text", "csv", "json"}));

  std::vector<std::string> ids, checks;
  std::string corpus_file, replay_file;
  std::uint64_t verify_max_n = 0;
  bool examples = false, timing = false;
  auto* verify = app.add_subcommand("verify", "run theorem checks");
  verify->add_option("ids", ids, "check ids, or all");
  verify->add_option("--check", checks, "check id (repeatable)");
  verify->add_flag("--examples", examples, "the worked examples");
  verify->add_option("--corpus", corpus_file, "corpus spec JSON file");
  verify->add_option("--max-n", verify_max_n, "largest Z_n in the corpus");
  verify->add_option("--replay", replay_file, "re-evaluate one serialized instance");
  verify->add_flag("--timing", timing, "per-check timings on stderr; elapsed times in JSON");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*ring) return cmd_ring(ring_args, ring_format, list_ideals);
    if (*classify) return cmd_classify(classify_args, gens, seed, classify_format);
    if (*table) {
      if (table_n) return cmd_table(table_n, table_n, single, table_verify, table_format);
      if (!table_max) throw InvalidSpec("give --n or --max-n");
      return cmd_table(table_min, table_max, single, table_verify, table_format);
    }
    if (*verify) {
      ids.insert(ids.end(), checks.begin(), checks.end());
      return cmd_verify(ids, examples, corpus_file, verify_max_n, replay_file, verify_format, timing);
    }
  } catch (const NotDisjoint& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotDisjoint;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
