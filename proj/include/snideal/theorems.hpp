#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "snideal/spec.hpp"

namespace snideal {

/// Which finite instances the theorem checks run over. Generation is
/// deterministic and uses no randomness.
struct CorpusSpec {
  // Z_n for zn_min <= n <= zn_max.
  std::uint64_t zn_min = 2;
  std::uint64_t zn_max = 60;
  // Z_a x Z_b with 2 <= a <= b and a b <= product_max (0 disables).
  std::uint64_t product_max = 144;
  // Quotients and localizations of the rings above whose order is at most
  // these bounds.
  std::uint64_t quotient_base_max = 72;
  std::uint64_t localization_base_max = 72;
  // Idealizations and amalgamations up to this order.
  std::uint64_t idealization_max = 256;
  std::uint64_t amalgamation_max = 256;
  // Extra rings appended to the ring-level corpus.
  std::vector<RingSpec> extra_rings;

  // Multiplicative sets: closures of single elements, U(R), and U(R) with 0.
  bool singleton_seeds = true;
  bool unit_set = true;
  bool nilpotent_set = true;
  // Ideals: every ideal, or only principal ones.
  bool principal_only = false;

  // Per-check order caps for the quantifications over ideal tuples.
  std::uint64_t ideal_pair_max = 144;
  std::uint64_t triple_max = 64;
  // Construction-level sweeps (localization, products, homomorphisms) use
  // base rings up to this order.
  std::uint64_t sweep_base_max = 72;

  json to_json() const;
  static CorpusSpec from_json(const json& j);
};

/// One instance that a check looked at, as replayable JSON.
struct InstanceRecord {
  json instance;
  std::string detail;
};

struct CheckReport {
  std::string id;
  std::string title;
  /// Instances whose hypotheses held and whose claim was evaluated.
  std::size_t instances = 0;
  std::vector<InstanceRecord> violations;
  /// Skipped instances, counted by reason.
  std::map<std::string, std::size_t> skipped;
  /// Instance tags such as "collapsed-regime", counted.
  std::map<std::string, std::size_t> tags;
  /// Fixed replications and search outcomes, one line each.
  std::vector<std::string> notes;
  /// Converse searches: the first few witnesses and the total found.
  std::vector<InstanceRecord> witnesses;
  std::size_t witness_count = 0;
  double elapsed_seconds = 0;

  bool ok() const { return violations.empty(); }
  /// Deterministic; never includes the elapsed time.
  std::string to_text() const;
  json to_json(bool with_elapsed = false) const;
};

struct CheckInfo {
  std::string id;
  std::string title;
};

/// Every registry check, in run order.
std::vector<CheckInfo> registry();
bool is_check_id(const std::string& id);

/// Throws InvalidSpec for an unknown id.
CheckReport run_check(const std::string& id, const CorpusSpec& corpus = {});

/// Re-evaluates a serialized instance from scratch. Returns "pass",
/// "violation: ...", "skip: ..." or "witness: ...".
std::string replay(const json& instance);

/// The fixed worked examples on Z_12 and Z_6.
CheckReport replicate_examples();

/// Converse claims that fail over infinite rings; searches the finite corpus
/// for witnesses.
extern const std::vector<std::string> kConverseClaims;
CheckReport converse_counterexample_search(const std::string& claim,
                                           const CorpusSpec& corpus = {});

/// Ring-axiom, closure and nilradical-formula validation of every
/// construction in the corpus.
CheckReport validate_constructions(const CorpusSpec& corpus = {});

/// Registry checks, then "C-VALID", "EXAMPLES" and the converse claims.
std::vector<std::string> suite_ids();

/// Runs any mix of the ids above against one shared instance cache. Reports
/// match the ones the single-check entry points give.
std::vector<CheckReport> run_suite(const std::vector<std::string>& ids, const CorpusSpec& corpus = {});

}  // namespace snideal
