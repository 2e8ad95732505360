#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace alexandroff {

// A subset of {0, ..., universe-1} stored as a packed bit vector.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<std::size_t> members) : ElementSet(universe) {
    for (auto m : members) insert(m);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  /// Builds a set over a universe of at most 64 elements from a bit mask.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
    ElementSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const { return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1u); }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  /// Complement relative to the universe.
  ElementSet complement() const {
    ElementSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  /// Low 64 bits; only meaningful when universe() <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Numeric comparison of the bit masks (element 0 is the least significant bit).
  friend bool mask_less(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

  /// Canonical order: cardinality first, then mask order.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return mask_less(a, b);
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h = (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ull + (h >> 17);
    return h;
  }

 private:
  void trim() {
    if (universe_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace alexandroff
