#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alexandroff/element_set.hpp"

namespace alexandroff {

using Pair = std::pair<std::size_t, std::size_t>;

/// A finite reflexive, transitive relation on labelled elements.
///
/// The relation is stored as per-element up-sets and down-sets, so `leq`,
/// `up` and `down` are constant-time lookups.
class Preorder {
 public:
  Preorder() = default;

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].contains(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b) && !leq(b, a); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// {b : a <= b}
  const ElementSet& up(std::size_t a) const { return up_[a]; }
  /// {b : b <= a}
  const ElementSet& down(std::size_t a) const { return down_[a]; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet::full(size()); }

  bool is_antisymmetric() const;

  /// Builds a preorder from a relation given as up-sets (up[a] = {b : a <= b}).
  /// Throws RelationError unless the relation is reflexive and transitive.
  static Preorder from_up_sets(std::vector<std::string> names, std::vector<ElementSet> up);

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 protected:
  Preorder(std::vector<std::string> names, std::vector<ElementSet> up);

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// A Preorder that is also antisymmetric.
class Poset : public Preorder {
 public:
  Poset() = default;

  /// Throws RelationError when `p` is not antisymmetric.
  static Poset from_preorder(Preorder p);

  /// Builds a poset from a relation matrix given as up-sets. The relation is
  /// checked for reflexivity, transitivity and antisymmetry.
  static Poset from_up_sets(std::vector<std::string> names, std::vector<ElementSet> up);

 private:
  explicit Poset(Preorder p) : Preorder(std::move(p)) {}
};

/// Least reflexive-transitive relation on n elements containing `pairs`.
/// Names default to "0", "1", ...; throws PreconditionError on an index >= n.
Preorder saturate(std::span<const Pair> pairs, std::size_t n, std::vector<std::string> names = {});

/// Saturates and requires antisymmetry.
Poset make_poset(std::span<const Pair> pairs, std::size_t n, std::vector<std::string> names = {});

struct Skeleton {
  Poset poset;
  std::vector<std::size_t> class_of;  // element -> class index
  std::vector<std::vector<std::size_t>> members;  // class -> elements
};

/// Collapses x ~ y (x <= y and y <= x). Classes are numbered in order of their
/// least element; each class is labelled with the label of that element.
Skeleton skeleton(const Preorder& p);

ElementSet up_closure(const Preorder& p, const ElementSet& a);
ElementSet down_closure(const Preorder& p, const ElementSet& a);
bool is_upset(const Preorder& p, const ElementSet& a);
bool is_downset(const Preorder& p, const ElementSet& a);

/// Elements of `a` with nothing strictly above them inside `a`.
ElementSet maximal(const Poset& p, const ElementSet& a);
ElementSet minimal(const Poset& p, const ElementSet& a);

/// Maximum antichain size (Dilworth, via bipartite matching).
std::size_t width(const Poset& p);
/// Number of elements in a longest chain; 0 for the empty poset.
std::size_t height(const Poset& p);
/// A longest chain, listed bottom to top.
std::vector<std::size_t> longest_chain(const Poset& p);
bool is_chain(const Poset& p);
bool is_antichain(const Poset& p);

/// Returns the upset U = up_closure(A) of S, after checking that A is an upset
/// of the order induced on T; the trace U ∩ T = A is verified before return.
ElementSet upset_extension(const Poset& s, const ElementSet& t, const ElementSet& a);

/// Induced suborder on the listed elements (in that order).
Poset induced(const Poset& p, std::span<const std::size_t> elements);
Poset dual(const Poset& p);

/// Covering pairs (a, b): a < b with nothing strictly between.
std::vector<Pair> covers(const Poset& p);

/// Graphviz rendering of the Hasse diagram (transitive reduction).
std::string hasse_dot(const Poset& p, std::string_view graph_name = "poset");

/// Calls `visit` once per upset of p. Stops and returns false as soon as more
/// than `cap` upsets have been produced; returns true on completion.
bool for_each_upset(const Poset& p, std::size_t cap, const std::function<void(const ElementSet&)>& visit);

/// Number of antichains of p, or nullopt once the count exceeds `cap`.
std::optional<std::size_t> count_antichains(const Poset& p, std::size_t cap);

struct EmbeddingResult {
  std::optional<std::vector<std::size_t>> map;  // pattern element -> host element
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;

  explicit operator bool() const { return map.has_value(); }
};

/// Searches for an induced-order embedding f of `pattern` into `host`:
/// f injective and u <= v iff f(u) <= f(v). Backtracking with up/down-set
/// size pruning; gives up after `budget` search nodes.
EmbeddingResult embeds_subposet(const Poset& pattern, const Poset& host, std::uint64_t budget = 10'000'000);

/// True iff `map` is injective and satisfies the iff condition.
bool is_order_embedding(const Poset& pattern, const Poset& host, std::span<const std::size_t> map);

}  // namespace alexandroff
