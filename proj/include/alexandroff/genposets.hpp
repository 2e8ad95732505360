#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alexandroff/order.hpp"

namespace alexandroff {

/// Elements of a lazily presented poset are identified by text keys whose
/// encoding is chosen per family (decimal integers for chains and
/// antichains, digit strings for trees, ...).
using Key = std::string;

/// Structural facts a family asserts about the full (possibly infinite)
/// poset. They are trusted, not computed; verdicts cite the one they used.
struct DeclaredFacts {
  std::optional<std::size_t> width_bound;   // no antichain larger than this
  std::optional<std::size_t> height_bound;  // no chain longer than this
  std::optional<bool> is_artinian;
  std::optional<bool> is_noetherian;
  /// Every witness the split oracle returns has no common upper bound in
  /// the full poset.
  bool splitting_complete = false;
};

/// base < left, base < right, and (when the family declares
/// splitting_complete) nothing lies above both left and right.
struct SplitWitness {
  Key base, left, right;
  friend bool operator==(const SplitWitness&, const SplitWitness&) = default;
};

/// A possibly infinite poset given by oracles. Implementations must be pure:
/// every method is a function of its arguments only.
class GenPoset {
 public:
  virtual ~GenPoset() = default;

  /// Text that `parse_family` maps back to an equivalent family.
  virtual std::string descriptor() const = 0;
  virtual bool accepts(const Key& k) const = 0;
  /// Defined on accepted keys.
  virtual bool leq(const Key& a, const Key& b) const = 0;
  /// A finite set of keys, nested in `rank` and exhausting the poset in the
  /// limit. What a rank means is family specific.
  virtual std::vector<Key> elements_up_to(std::size_t rank) const = 0;
  virtual DeclaredFacts facts() const { return {}; }

  virtual std::optional<std::size_t> finite_size() const { return std::nullopt; }

  virtual bool has_splitting() const { return false; }
  /// Raw oracle answer; use `split` for a checked answer.
  virtual std::optional<SplitWitness> split_oracle(const Key&) const { return std::nullopt; }
  /// A key where construction of combs can start.
  virtual std::optional<Key> split_root() const { return std::nullopt; }
};

using GenPosetPtr = std::shared_ptr<const GenPoset>;

// Builtin catalogue. Rank conventions:
//   omega, omega_dual, infinite_antichain: keys "0".."r"
//   binary/k-ary trees: strings of length <= r
//   comb: x_i has rank i, y_i has rank i+1
//   comb_of_combs: sum of entries plus number of dots <= r
//   finite: every element at every rank
//   sums: union of the components' rank-r elements

GenPosetPtr omega();
GenPosetPtr omega_dual();
GenPosetPtr infinite_antichain();
/// The infinite binary tree: binary strings under the prefix order.
/// split(s) = (s, s0, s1).
GenPosetPtr binary_tree();
/// Strings over the first k symbols of 0-9a-z under the prefix order;
/// throws PreconditionError unless 1 <= k <= 36.
GenPosetPtr kary_tree(long k);
/// Spine x0 < x1 < ... with one tooth y_i > x_i per spine point.
GenPosetPtr comb();
/// Combs rooted at every tooth of a comb, recursively. Keys are
/// dot-separated spine positions, e.g. "2.0.1".
GenPosetPtr comb_of_combs();
GenPosetPtr finite(Poset p, std::string descriptor = "finite");
GenPosetPtr disjoint_sum(std::vector<GenPosetPtr> parts);
/// parts[0] below parts[1] below ...
GenPosetPtr ordinal_sum(std::vector<GenPosetPtr> parts);

/// Catalogue lookup by name: omega, omega_dual, infinite_antichain, t2,
/// kary_tree (needs k), comb, comb_of_combs. ParseError on unknown names.
GenPosetPtr builtin(std::string_view name, std::optional<long> k = std::nullopt);

/// Family descriptors: t2 | omega | omega-dual | antichain | kary:K | comb |
/// combs | file:PATH | disjoint(D,D,...) | ordinal(D,D,...).
GenPosetPtr parse_family(std::string_view descriptor);

/// Largest truncation materialized as a Poset.
inline constexpr std::size_t kMaxTruncation = 4096;

/// The induced order on elements_up_to(rank), keys as labels. Throws
/// PresentationError if the oracle breaks the poset axioms on it.
Poset truncate(const GenPoset& g, std::size_t rank, std::size_t max_elements = kMaxTruncation);

/// Checked oracle call: nullopt when the oracle declines at x, the witness
/// after local verification otherwise (PresentationError on a bad witness).
std::optional<SplitWitness> split(const GenPoset& g, const Key& x);

struct RefuteLimits {
  std::size_t max_rank = 64;
  std::size_t max_elements = 1024;
};

/// A strictly ascending chain of budget+1 keys found in some truncation, or
/// nullopt. Each step takes a key first enumerated at a later rank than the
/// previous one. A nullopt is inconclusive, never a proof. Budget 0 asks for
/// no step and always yields nullopt.
std::optional<std::vector<Key>> refute_noetherian(const GenPoset& g, std::size_t budget, RefuteLimits limits = {});
/// A strictly descending chain of budget+1 keys, listed top first.
std::optional<std::vector<Key>> refute_artinian(const GenPoset& g, std::size_t budget, RefuteLimits limits = {});

}  // namespace alexandroff
