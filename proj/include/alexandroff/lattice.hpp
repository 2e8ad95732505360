#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "alexandroff/element_set.hpp"
#include "alexandroff/order.hpp"

namespace alexandroff {

/// Index of an element of a FiniteLattice.
using Element = std::uint32_t;

/// A finite bounded lattice with precomputed meet and join tables.
///
/// Lattices built with `from_order` are checked to be lattices and their
/// distributivity is computed (every join-irreducible must be join-prime).
/// Heyting implication is available only on distributive lattices.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// `up[a]` lists every b with a <= b. Throws RelationError if the order is
  /// not a partial order or some pair lacks a meet or a join.
  static FiniteLattice from_order(std::vector<std::string> names, std::vector<ElementSet> up);

  /// Trusted constructor for lattices whose operations are known in closed
  /// form. `implication` may be empty, in which case it is computed on demand.
  static FiniteLattice from_tables(std::vector<std::string> names, std::vector<ElementSet> up, std::vector<Element> meet,
                                   std::vector<Element> join, std::vector<Element> implication, bool distributive);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element a) const { return names_[a]; }

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element a, Element b) const { return up_[a].contains(b); }
  const ElementSet& up(Element a) const { return up_[a]; }
  const ElementSet& down(Element a) const { return down_[a]; }

  Element meet(Element a, Element b) const { return meet_[index(a, b)]; }
  Element join(Element a, Element b) const { return join_[index(a, b)]; }

  /// Largest x with x ∧ a <= b. Throws NotDistributive on non-distributive lattices.
  Element implies(Element a, Element b) const;

  bool is_distributive() const { return distributive_; }
  /// Throws NotDistributive naming `context` when the lattice is not distributive.
  void require_distributive(std::string_view context) const;

  /// Join of an arbitrary family (bottom for the empty family).
  Element join_all(const ElementSet& family) const;
  Element meet_all(const ElementSet& family) const;

  Poset as_poset() const;

 private:
  std::size_t index(Element a, Element b) const { return static_cast<std::size_t>(a) * names_.size() + b; }
  void finish();

  std::vector<std::string> names_;
  std::vector<ElementSet> up_, down_;
  std::vector<Element> meet_, join_, implication_;
  Element bottom_ = 0, top_ = 0;
  bool distributive_ = false;
};

/// Non-bottom elements that are not the join of two strictly smaller elements.
std::vector<Element> join_irreducibles(const FiniteLattice& l);

/// Every element has a complement.
bool is_boolean(const FiniteLattice& l);

/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) over all triples. Cubic; used as an
/// independent check of the join-prime test run on construction.
bool is_distributive_by_triples(const FiniteLattice& l);

/// The five-element modular, non-distributive lattice M3.
FiniteLattice diamond_m3();

}  // namespace alexandroff
