#pragma once

// Test-side brute force, written straight from the definitions and sharing no
// code with the library's scan engine.

#include <set>
#include <vector>

#include "snideal/ring.hpp"

namespace oracle {

using snideal::Elem;
using snideal::FiniteRing;

inline std::set<Elem> to_set(const snideal::ElementSet& s) {
  auto v = s.to_vector();
  return {v.begin(), v.end()};
}

inline bool nilpotent(const FiniteRing& r, Elem x) {
  Elem y = x;
  for (std::size_t k = 0; k <= r.order(); ++k) {
    if (y == r.zero()) return true;
    y = r.mul(y, x);
  }
  return false;
}

inline std::set<Elem> radical(const FiniteRing& r, const std::set<Elem>& i) {
  std::set<Elem> out;
  for (Elem x = 0; x < r.order(); ++x) {
    Elem y = x;
    for (std::size_t k = 0; k <= r.order(); ++k) {
      if (i.count(y)) {
        out.insert(x);
        break;
      }
      y = r.mul(y, x);
    }
  }
  return out;
}

inline bool zero_divisor(const FiniteRing& r, Elem x) {
  for (Elem y = 0; y < r.order(); ++y)
    if (y != r.zero() && r.mul(x, y) == r.zero()) return true;
  return false;
}

enum class Kind { SPrime, SPrimary, SN };

/// Does s satisfy the defining implication for every pair (a, b)?
inline bool s_element(const FiniteRing& r, const std::set<Elem>& i, Kind k, Elem s) {
  std::set<Elem> nil = radical(r, {r.zero()});
  std::set<Elem> rad = radical(r, i);
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b) {
      if (!i.count(r.mul(a, b))) continue;
      Elem sa = r.mul(s, a), sb = r.mul(s, b);
      switch (k) {
        case Kind::SN:
          if (!nil.count(sa) && !i.count(sb)) return false;
          break;
        case Kind::SPrime:
          if (!i.count(sa) && !i.count(sb)) return false;
          break;
        case Kind::SPrimary:
          if (!i.count(sa) && !rad.count(sb)) return false;
          break;
      }
    }
  return true;
}

inline std::set<Elem> witnesses(const FiniteRing& r, const std::set<Elem>& i, Kind k,
                                const std::set<Elem>& s) {
  std::set<Elem> out;
  for (Elem x : s)
    if (s_element(r, i, k, x)) out.insert(x);
  return out;
}

inline bool n_ideal(const FiniteRing& r, const std::set<Elem>& i) {
  if (i.count(r.one())) return false;
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b)
      if (i.count(r.mul(a, b)) && !nilpotent(r, a) && !i.count(b)) return false;
  return true;
}

inline bool prime(const FiniteRing& r, const std::set<Elem>& i) {
  if (i.count(r.one())) return false;
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b)
      if (i.count(r.mul(a, b)) && !i.count(a) && !i.count(b)) return false;
  return true;
}

/// Every additive subgroup closed under multiplication, by brute force over
/// subsets; only for tiny rings.
inline std::vector<std::set<Elem>> ideals_by_subsets(const FiniteRing& r) {
  std::vector<std::set<Elem>> out;
  const std::size_t n = r.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & (std::uint64_t{1} << r.zero()))) continue;
    auto in = [&](Elem x) { return (mask >> x) & 1u; };
    bool ok = true;
    for (Elem a = 0; ok && a < n; ++a) {
      if (!in(a)) continue;
      for (Elem b = 0; ok && b < n; ++b) {
        if (in(b) && !in(r.add(a, b))) ok = false;
        if (!in(r.mul(a, b))) ok = false;
      }
    }
    if (!ok) continue;
    std::set<Elem> s;
    for (Elem x = 0; x < n; ++x)
      if (in(x)) s.insert(x);
    out.push_back(s);
  }
  return out;
}

}  // namespace oracle
