#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "alexandroff/element_set.hpp"
#include "alexandroff/lattice.hpp"
#include "alexandroff/order.hpp"

namespace alexandroff {

/// Frames of 2^20 or more elements are refused by default.
inline constexpr std::size_t kDefaultFrameCap = (std::size_t{1} << 20) - 1;
/// Largest frame for which `UpsetFrame::lattice()` materializes n×n tables.
inline constexpr std::size_t kDefaultLatticeTableCap = 4096;

/// The frame Op S of all upsets of a finite poset S, ordered by inclusion.
///
/// Elements are listed canonically: by cardinality, then by mask order
/// (element 0 of S is the least significant bit). Index 0 is the empty upset
/// and the last index is S itself.
class UpsetFrame {
 public:
  /// Throws GuardExceeded when S has more than `cap` upsets.
  static UpsetFrame build(const Poset& base, std::size_t cap = kDefaultFrameCap);

  const Poset& base() const { return base_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ElementSet>& elements() const { return elements_; }
  const ElementSet& element(Element e) const { return elements_[e]; }

  Element bottom() const { return 0; }
  Element top() const { return static_cast<Element>(size() - 1); }

  /// Throws PreconditionError when `s` is not an upset of the base.
  Element index_of(const ElementSet& s) const;
  /// The principal upset ↑x.
  Element principal(std::size_t x) const { return index_of(base_.up(x)); }

  bool leq(Element a, Element b) const { return elements_[a].is_subset_of(elements_[b]); }
  Element meet(Element a, Element b) const { return index_of(elements_[a] & elements_[b]); }
  Element join(Element a, Element b) const { return index_of(elements_[a] | elements_[b]); }
  Element implies(Element a, Element b) const;

  /// "{a,b}" using base labels in index order.
  std::string label(Element e) const;

  /// Table-backed lattice view; throws GuardExceeded above `max_elements`.
  FiniteLattice lattice(std::size_t max_elements = kDefaultLatticeTableCap) const;

  /// One line per element: "<index>: {labels}".
  std::string dump() const;
  std::string hasse_dot() const;

 private:
  Poset base_;
  std::vector<ElementSet> elements_;
  std::unordered_map<ElementSet, Element, ElementSetHash> index_;
};

/// Largest upset W with W ∩ U ⊆ V, i.e. S \ ↓(U \ V).
ElementSet heyting_implication(const Poset& s, const ElementSet& u, const ElementSet& v);

std::vector<Element> join_irreducibles(const UpsetFrame& f);

/// Prime filters separate elements: for all a ≰ b some prime filter contains
/// a and not b. Throws NotDistributive on non-distributive input.
bool is_spatial_finite(const FiniteLattice& l);

}  // namespace alexandroff
