#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alexandroff/element_set.hpp"
#include "alexandroff/frames.hpp"
#include "alexandroff/lattice.hpp"
#include "alexandroff/nuclei.hpp"
#include "alexandroff/order.hpp"

namespace alexandroff {

/// Largest spectrum on which subset-quantified definitions (nuclear subsets,
/// the duality check) are evaluated literally.
inline constexpr std::size_t kMaxLiteralSpectrum = 12;
/// Largest lattice on which the brute-force prime filter search runs.
inline constexpr std::size_t kMaxBruteForcePrimeFilters = 20;

/// The prime filters of a finite distributive lattice, ordered by inclusion.
///
/// Points are numbered in the order of the join-irreducibles generating them
/// (point i is ↑j_i) and named p0, p1, ...
class Spectrum {
 public:
  std::size_t size() const { return points_.size(); }
  std::size_t lattice_size() const { return eta_.size(); }

  /// Point i as a set of lattice elements.
  const ElementSet& point(std::size_t i) const { return points_[i]; }
  const std::vector<ElementSet>& points() const { return points_; }
  const Poset& order() const { return order_; }

  /// η(a) = {x : a ∈ x}, a set of points.
  const ElementSet& eta(Element a) const { return eta_[a]; }

  std::optional<std::size_t> index_of(const ElementSet& filter) const;

 private:
  friend Spectrum prime_filters(const FiniteLattice&);

  std::vector<ElementSet> points_;
  Poset order_;
  std::vector<ElementSet> eta_;
};

bool is_prime_filter(const FiniteLattice& l, const ElementSet& f);

/// Every prime filter, found by testing all 2^|L| subsets. Canonical order.
/// Throws GuardExceeded above kMaxBruteForcePrimeFilters elements.
std::vector<ElementSet> prime_filters_brute_force(const FiniteLattice& l);

/// Prime filters as principal filters of join-irreducibles; cross-checked
/// against the brute force for |L| <= 16. Throws NotDistributive.
Spectrum prime_filters(const FiniteLattice& l);

/// ε(s) = {U ∈ Op S : s ∈ U}, returned as the point index of each s.
/// Throws InternalError if some ε(s) is not a point of `x`.
std::vector<std::size_t> epsilon(const UpsetFrame& frame, const Spectrum& x);

/// ε is a bijection onto the spectrum with s <= t iff ε(s) ⊆ ε(t).
bool epsilon_is_order_isomorphism(const UpsetFrame& frame, const Spectrum& x);

/// The patch topology on a finite spectrum, generated by the basis
/// {η(a) \ η(b)}. Works on spectra of at most 64 points.
class PriestleyTopology {
 public:
  explicit PriestleyTopology(const Spectrum& x);

  std::size_t points() const { return n_; }
  const std::vector<std::uint64_t>& basis() const { return basis_; }

  bool is_open(std::uint64_t set) const;
  bool is_closed(std::uint64_t set) const { return is_open(~set & full_); }
  bool is_clopen(std::uint64_t set) const { return is_open(set) && is_closed(set); }

 private:
  std::size_t n_ = 0;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> basis_;
};

/// F is closed and ↓(F ∩ U) is clopen for every clopen U.
bool is_nuclear(const Spectrum& x, const PriestleyTopology& top, const ElementSet& f);
/// All nuclear subsets in mask order. Throws GuardExceeded above kMaxLiteralSpectrum points.
std::vector<ElementSet> nuclear_subsets(const Spectrum& x);
/// Y = {x : {x} is nuclear}.
ElementSet nuclear_points(const Spectrum& x);

struct MaxCriterionResult {
  bool spatial = true;
  std::optional<ElementSet> witness;  // a clopen downset with max U ∩ Y = ∅
  std::size_t downsets_checked = 0;
};

/// max U ∩ Y ≠ ∅ for every nonempty clopen downset U of the spectrum.
MaxCriterionResult spatiality_via_max(const Spectrum& x);

/// Every nonempty closed subspace (downset) has an isolated point.
bool is_scattered(const Poset& p);
/// Every nonempty closed subspace has a weakly isolated point.
bool is_weakly_scattered(const Poset& p);

/// {U \ V : U, V upsets}, deduplicated, canonical order.
std::vector<ElementSet> front_basis(const Poset& p);

/// j_F(a) = largest b with η(b) ∩ F ⊆ η(a) ∩ F.
Nucleus nucleus_of_nuclear_set(const FiniteLattice& l, const Spectrum& x, const ElementSet& f);

struct DualityReport {
  std::size_t frame_size = 0;
  std::size_t spectrum_size = 0;
  std::size_t nuclear_subset_count = 0;
  std::size_t nucleus_count = 0;
  std::vector<std::pair<ElementSet, std::size_t>> table;  // nuclear set -> assembly index
  bool bijective = false;
  bool order_reversing = false;
  std::string failure;  // first witness when a check fails

  bool ok() const { return bijective && order_reversing && failure.empty(); }
  /// Stable text document: counts, bijection table, verdicts.
  std::string to_text() const;
};

/// Builds F ↦ j_F over all nuclear subsets and checks that it is an
/// order-reversing bijection onto the enumerated assembly.
DualityReport duality_check(const FiniteLattice& l, const NucleusLimits& limits = {});

}  // namespace alexandroff
