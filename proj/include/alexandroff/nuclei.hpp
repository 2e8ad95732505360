#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alexandroff/element_set.hpp"
#include "alexandroff/lattice.hpp"

namespace alexandroff {

/// A self-map j of a finite frame, stored as a table over element indices.
/// Values returned by the library are always verified nuclei: inflationary,
/// idempotent and meet-preserving.
struct Nucleus {
  std::vector<Element> table;

  Element operator()(Element a) const { return table[a]; }
  friend auto operator<=>(const Nucleus&, const Nucleus&) = default;
};

enum class NucleusAxiom { Inflationary, Idempotent, MeetPreserving };
std::string_view to_string(NucleusAxiom axiom);

struct NucleusCheck {
  std::optional<NucleusAxiom> violated;  // first failing axiom, in declaration order
  Element a = 0, b = 0;                  // witness; b only matters for MeetPreserving

  bool ok() const { return !violated; }
  explicit operator bool() const { return ok(); }
  std::string describe(const FiniteLattice& l) const;
};

/// Evaluates the three axioms. Throws PreconditionError unless `table` has
/// one in-range entry per element.
NucleusCheck check_nucleus(const FiniteLattice& l, std::span<const Element> table);

struct NucleusLimits {
  std::size_t max_frame = 256;           // frame elements for fixpoint-set enumeration
  std::size_t max_nuclei = std::size_t{1} << 16;
  std::size_t map_filter_max_frame = 8;  // second method only runs up to this size
};

// A fixpoint set F ⊆ L of a nucleus contains the top, is closed under binary
// meets, and is closed under x → s for every x in L and s in F.

/// Names the first closure condition `f` fails, or nullopt when it is a fixpoint set.
std::optional<std::string> fixpoint_set_violation(const FiniteLattice& l, const ElementSet& f);
/// Least fixpoint set containing `seed`.
ElementSet fixpoint_closure(const FiniteLattice& l, const ElementSet& seed);

/// j(a) = least element of F above a. Throws PreconditionError unless F is a fixpoint set.
Nucleus nucleus_from_fixpoints(const FiniteLattice& l, const ElementSet& f);
ElementSet fixpoints(const FiniteLattice& l, const Nucleus& j);

/// All nuclei, realized from every fixpoint set (enumerated in lectic order by
/// NextClosure). Sorted by table.
std::vector<Nucleus> nuclei_by_fixpoint_sets(const FiniteLattice& l, const NucleusLimits& limits = {});
/// All nuclei, by filtering every monotone self-map through check_nucleus.
/// Sorted by table. Throws GuardExceeded above limits.map_filter_max_frame.
std::vector<Nucleus> nuclei_by_map_filter(const FiniteLattice& l, const NucleusLimits& limits = {});

Nucleus identity_nucleus(const FiniteLattice& l);
Nucleus top_nucleus(const FiniteLattice& l);
/// x ↦ a ∨ x
Nucleus closed_nucleus(const FiniteLattice& l, Element a);
/// x ↦ a → x
Nucleus open_nucleus(const FiniteLattice& l, Element a);

/// Pointwise order.
bool nucleus_leq(const FiniteLattice& l, const Nucleus& j, const Nucleus& k);
Nucleus assembly_meet(const FiniteLattice& l, const Nucleus& j, const Nucleus& k);
/// Least nucleus above j and k: each a is pushed through a ↦ j(k(a)) until it
/// stabilizes. More than |L| steps is an InternalError.
Nucleus assembly_join(const FiniteLattice& l, const Nucleus& j, const Nucleus& k);

/// The assembly N(L): every nucleus of a finite frame, ordered pointwise.
class Assembly {
 public:
  const FiniteLattice& frame() const { return frame_; }
  std::size_t size() const { return nuclei_.size(); }
  const std::vector<Nucleus>& nuclei() const { return nuclei_; }
  const Nucleus& operator[](std::size_t i) const { return nuclei_[i]; }

  std::optional<std::size_t> index_of(const Nucleus& j) const;
  std::size_t identity_index() const;
  std::size_t top_index() const;

  bool leq(std::size_t i, std::size_t k) const { return nucleus_leq(frame_, nuclei_[i], nuclei_[k]); }
  std::size_t meet(std::size_t i, std::size_t k) const;
  /// Computed by iteration and checked to be the least upper bound among all nuclei.
  std::size_t join(std::size_t i, std::size_t k) const;

  /// True when the map-filter method ran and agreed with the fixpoint-set method.
  bool cross_checked() const { return cross_checked_; }

  /// The assembly as a FiniteLattice (elements named j0, j1, ...).
  FiniteLattice lattice(std::size_t max_elements = 1024) const;

  /// One line per nucleus: "j<i>: <image of element 0> <image of element 1> ...".
  std::string dump() const;
  std::string hasse_dot() const;

 private:
  friend Assembly enumerate_nuclei(const FiniteLattice&, const NucleusLimits&);

  FiniteLattice frame_;
  std::vector<Nucleus> nuclei_;
  bool cross_checked_ = false;
};

/// Enumerates N(L) by fixpoint sets and, for frames small enough, cross-checks
/// against the map filter; disagreement throws InternalError.
Assembly enumerate_nuclei(const FiniteLattice& l, const NucleusLimits& limits = {});

}  // namespace alexandroff
