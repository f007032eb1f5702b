#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace snideal {

/// Index of a ring (or module) element, 0..order-1.
using Elem = std::uint32_t;

/// Dense bitset over the elements 0..universe-1 of a finite structure.
///
/// Ideals, multiplicative sets, colon sets and radicals are all stored this
/// way; membership tests dominate every predicate in the library.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Elem> members)
      : ElementSet(universe) {
    for (Elem x : members) insert(x);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  template <class Range>
  static ElementSet from(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto x : members) s.insert(static_cast<Elem>(x));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Elem x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  bool is_full() const { return count() == universe_; }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& subtract(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  ElementSet complement() const {
    ElementSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  /// Least member, or universe() when empty.
  Elem first() const { return next(0); }
  /// Least member >= from, or universe() when none.
  Elem next(Elem from) const {
    std::size_t wi = from >> 6;
    if (wi >= words_.size()) return static_cast<Elem>(universe_);
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<Elem>(wi * 64 + std::countr_zero(w));
      if (++wi == words_.size()) return static_cast<Elem>(universe_);
      w = words_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<Elem>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Elem> to_vector() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem x) { out.push_back(x); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = universe_ * 0x9E3779B97F4A7C15ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001B3ull + (h >> 29);
    return h;
  }

  bool operator==(const ElementSet& o) const = default;

  /// Canonical order: by size, then by the sorted member list.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    Elem x = a.first(), y = b.first();
    while (x < a.universe_ && y < b.universe_) {
      if (x != y) return x < y;
      x = a.next(x + 1);
      y = b.next(y + 1);
    }
    return false;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim() {
    if (universe_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace snideal
