#pragma once

// Shared plumbing of the theorem registry: the instance cache, corpus
// recipes, and the check table.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "snideal/classify.hpp"
#include "snideal/constructions.hpp"
#include "snideal/theorems.hpp"

namespace snideal::detail {

/// Everything the checks need about one ring, computed once.
struct RingData {
  RingPtr ring;
  std::unique_ptr<Classifier> cls;
  std::vector<Ideal> ideals;          // every ideal, canonical order
  std::vector<std::uint32_t> policy;  // positions of the corpus ideals
  ElementSet nil, units;

  RingData(RingPtr r, const CorpusSpec& c);

  /// Corpus multiplicative sets, canonical order, with a seed for each.
  const std::vector<MultSet>& mults();
  const std::vector<Elem>& seed(std::size_t k) {
    mults();
    return seeds_[k];
  }
  /// Multiplicative sets inside U(R).
  std::vector<std::size_t> unit_mults();
  const ElementSet& saturation(const ElementSet& s);
  bool superfluous(std::uint32_t ideal);
  /// Proper ideals, by position.
  const std::vector<std::uint32_t>& proper();

  std::uint32_t index_of(const ElementSet& ideal) const;
  bool has_ideal(const ElementSet& s) const { return index_.count(s) != 0; }
  /// products()[a * count + b] = index of ideals[a] ideals[b].
  const std::vector<std::uint32_t>& products();
  const std::vector<std::uint32_t>& intersections();
  /// False when i meets s, since S-n ideals are disjoint from S.
  bool sn(const ElementSet& i, const ElementSet& s) {
    return !i.intersects(s) && cls->holds(SKind::SN, i, s);
  }
  bool n_ideal(const ElementSet& i) { return cls->holds(Predicate::NIdeal, i); }
  /// Every proper ideal disjoint from s.
  template <class F>
  void for_disjoint(const ElementSet& s, F&& f) const {
    for (std::uint32_t k : policy)
      if (!ideals[k].elements.contains(ring->one()) && !ideals[k].elements.intersects(s)) f(ideals[k]);
  }

 private:
  const CorpusSpec* corpus_;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> index_;
  std::vector<std::uint32_t> products_, intersections_, proper_;
  std::optional<std::vector<MultSet>> mults_;
  std::vector<std::vector<Elem>> seeds_;
  std::unordered_map<ElementSet, ElementSet, ElementSetHash> saturations_;
  std::vector<std::int8_t> superfluous_;
};

struct IdealizationRecipe {
  RingSpec base;
  ModuleSpec module;
};

struct AmalgamationRecipe {
  RingSpec base;
  RingSpec target;
  HomSpec hom;
  std::vector<Elem> ideal;
};

/// Caches rings and constructions by canonical description so that every
/// instance of a check shares one copy.
class Workspace {
 public:
  explicit Workspace(CorpusSpec c) : corpus_(std::move(c)) {}

  const CorpusSpec& corpus() const { return corpus_; }

  RingData& data(const RingSpec& spec);
  RingData& data(const RingPtr& r);
  /// Product of two corpus rings, built from the cached factors.
  RingData& product(const RingSpec& left, const RingSpec& right);
  const Quotient& quotient(const RingSpec& base, const std::vector<Elem>& gens);
  const Localization& localization(const RingSpec& base, const std::vector<Elem>& seed);
  const Idealization& idealization(const RingSpec& base, const ModuleSpec& m);
  const Amalgamation& amalgamation(const AmalgamationRecipe& a);

  Ideal ideal(const RingPtr& r, const std::vector<Elem>& gens) const;
  MultSet mult(const RingPtr& r, const std::vector<Elem>& seed) const;

  // Corpus recipes, memoized.
  const std::vector<RingSpec>& base_rings();
  const std::vector<RingSpec>& ring_corpus();
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& product_pairs();
  const std::vector<IdealizationRecipe>& idealizations();
  const std::vector<AmalgamationRecipe>& amalgamations();

 private:
  CorpusSpec corpus_;
  std::map<std::string, RingData*> by_spec_;
  std::unordered_map<std::uint64_t, std::unique_ptr<RingData>> by_id_;
  std::map<std::string, std::unique_ptr<Quotient>> quotients_;
  std::map<std::string, std::unique_ptr<Localization>> localizations_;
  std::map<std::string, std::unique_ptr<Idealization>> idealizations_;
  std::map<std::string, std::unique_ptr<Amalgamation>> amalgamations_;
  std::map<std::string, RingData*> products_;
  std::optional<std::vector<RingSpec>> base_, corpus_rings_;
  std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>> pairs_;
  std::optional<std::vector<IdealizationRecipe>> idealization_recipes_;
  std::optional<std::vector<AmalgamationRecipe>> amalgamation_recipes_;
};

/// A single evaluation of a check, replayable from its JSON form. Ideals and
/// multiplicative sets are stored as generators; which ring each belongs to
/// is fixed by the check and part.
struct Instance {
  std::string check;
  std::string part;
  RingSpec ring;
  json ctx = json::object();
  std::vector<std::vector<Elem>> ideals;
  std::vector<std::vector<Elem>> mults;

  json to_json() const;
  static Instance from_json(const json& j);
};

struct Outcome {
  enum class Status { Pass, Violation, Skip, Witness };
  Status status = Status::Pass;
  std::string detail;
  std::vector<std::string> tags;
  /// A line for the report's notes (fixed replications).
  std::string note;

  static Outcome pass() { return {}; }
  static Outcome skip(std::string why) { return {Status::Skip, std::move(why), {}, {}}; }
  static Outcome fail(std::string why) { return {Status::Violation, std::move(why), {}, {}}; }
  static Outcome witness(std::string what) { return {Status::Witness, std::move(what), {}, {}}; }
  Outcome& tag(std::string t) {
    tags.push_back(std::move(t));
    return *this;
  }
};

/// Accumulates sub-claim failures inside one evaluation.
struct Claims {
  std::string failed;
  void require(bool ok, const std::string& what) {
    if (!ok && failed.empty()) failed = what;
  }
  Outcome outcome() const { return failed.empty() ? Outcome::pass() : Outcome::fail(failed); }
};

using Emit = std::function<void(const Instance&)>;

struct CheckDef {
  std::string id;
  std::string title;
  std::function<void(Workspace&, const Emit&)> generate;
  std::function<Outcome(Workspace&, const Instance&)> evaluate;
};

const std::vector<CheckDef>& check_table();
const CheckDef* find_check(const std::string& id);

// Check groups, registered by check_table().
void add_ring_checks(std::vector<CheckDef>& out);
void add_construction_checks(std::vector<CheckDef>& out);
void add_converse_searches(std::vector<CheckDef>& out);

/// Generators of an ideal / multiplicative set, for serialization.
std::vector<Elem> gens_of(const Ideal& i);
std::vector<Elem> seed_of(const MultSet& s);
std::string show(const std::vector<Elem>& v);

}  // namespace snideal::detail
