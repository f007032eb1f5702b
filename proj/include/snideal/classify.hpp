#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "snideal/ideal.hpp"

namespace snideal {

/// Predicates that ignore S.
enum class Predicate { Prime, Primary, RIdeal, NIdeal };
/// Predicates relative to a multiplicative set, with one fixed s for all pairs.
enum class SKind { SPrime, SPrimary, SN };

const char* predicate_name(Predicate p);
const char* skind_name(SKind k);

struct Verdict {
  bool holds = false;
  /// S-relative kinds: every s in S that works. Empty for absolute predicates.
  ElementSet witnesses;
  /// Lexicographically least (a, b) refuting the implication; for S-relative
  /// kinds it refutes it for every s in S at once, and may be absent even
  /// when no witness exists.
  std::optional<std::pair<Elem, Elem>> counterexample;
};

/// Pair-scan engine with per-ideal colon caches for one ring.
///
/// For a fixed s every predicate has the shape "a in active(s) implies
/// (I:a) within allowed(s)". (I:a) depends only on the principal ideal <a>,
/// so a scan touches one colon set per principal class.
class Classifier {
 public:
  explicit Classifier(RingPtr r);

  const RingPtr& ring() const { return r_; }

  Verdict absolute(Predicate p, const ElementSet& ideal);
  /// Throws NotDisjoint when S meets the ideal.
  Verdict relative(SKind k, const ElementSet& ideal, const ElementSet& s);
  /// holds only, stopping at the first witness.
  bool holds(SKind k, const ElementSet& ideal, const ElementSet& s);
  bool holds(Predicate p, const ElementSet& ideal);

  /// (I : x), cached per principal class of x.
  const ElementSet& colon(const ElementSet& ideal, Elem x);
  const ElementSet& radical(const ElementSet& ideal);

 private:
  struct Profile {
    std::vector<ElementSet> colon;  // by principal class
    std::optional<ElementSet> radical;
  };
  Profile& profile(const ElementSet& ideal);
  bool class_ok(const Profile& ip, const ElementSet& active, const ElementSet& allowed) const;
  std::optional<std::pair<Elem, Elem>> least_failure(const Profile& ip, const ElementSet& active,
                                                     const ElementSet& allowed) const;
  std::pair<ElementSet, ElementSet> bounds(SKind k, const ElementSet& ideal, std::uint32_t cls);
  Verdict run_relative(SKind k, const ElementSet& ideal, const ElementSet& s, bool stop_early);

  RingPtr r_;
  const PrincipalIdeals* pi_;
  std::vector<ElementSet> members_;  // elements of each principal class
  std::unordered_map<ElementSet, std::unique_ptr<Profile>, ElementSetHash> profiles_;
};

Verdict is_prime(const Ideal& i);
Verdict is_primary(const Ideal& i);
Verdict is_r_ideal(const Ideal& i);
Verdict is_n_ideal(const Ideal& i);
Verdict s_witnesses(SKind k, const Ideal& i, const MultSet& s);

struct Classification {
  Ideal ideal;
  MultSet mult;
  bool disjoint = false;
  Verdict prime, primary, r_ideal, n_ideal;
  /// Absent when S meets I.
  std::optional<Verdict> s_prime, s_primary, s_n;
  Ideal radical;
  /// Every s in S with s I inside the nilradical.
  ElementSet nil_annihilators;
  /// (I : s) for each S-n witness s, in element order.
  std::vector<std::pair<Elem, Ideal>> witness_colons;
};
Classification classify_ideal(const Ideal& i, const MultSet& s);

/// All ideals disjoint from S that are S-n, in canonical order.
std::vector<Ideal> all_s_n_ideals(const RingPtr& r, const MultSet& s);
std::vector<Ideal> all_s_n_ideals(Classifier& c, const std::vector<Ideal>& ideals,
                                  const MultSet& s);
/// The inclusion-maximal members of all_s_n_ideals.
std::vector<Ideal> maximal_s_n_ideals(const RingPtr& r, const MultSet& s);
std::vector<Ideal> maximal_members(const std::vector<Ideal>& ideals);

enum class ZnRegime { None, AllDisjoint };
const char* regime_name(ZnRegime r);

struct ZnFastResult {
  ZnRegime regime = ZnRegime::None;
  /// Generators d of the predicted S-n-ideals <d> of Z_n (0 for the zero
  /// ideal), in canonical ideal order. Empty for None.
  std::vector<std::uint64_t> generators;
};

/// Predicts the S-n-ideals of Z_n for S generated by the primes in P using
/// only the factorization of n.
ZnFastResult zn_fast_classify(std::uint64_t n, const std::vector<std::uint64_t>& primes);

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace snideal
