#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "alexandroff/error.hpp"
#include "alexandroff/genposets.hpp"
#include "alexandroff/order.hpp"

namespace alexandroff {

// Addresses of the depth-d binary tree are binary strings of length <= d,
// stored in heap order: "", "0", "1", "00", "01", ...

std::size_t t2_address_count(std::size_t depth);
std::string t2_address(std::size_t heap_index);
std::size_t t2_heap_index(std::string_view address);
std::vector<std::string> t2_addresses(std::size_t depth);

/// The depth-d binary tree as a finite poset in heap order; the root is
/// labelled "ε", every other node by its address.
Poset binary_tree_poset(std::size_t depth);

/// Spine x0 < x1 < ... < xn with teeth y0..y(n-1).
struct CombCertificate {
  std::string family;
  std::vector<Key> spine;
  std::vector<Key> teeth;

  std::size_t length() const { return teeth.size(); }
  friend bool operator==(const CombCertificate&, const CombCertificate&) = default;
};

/// keys[i] is the image of t2_address(i).
struct T2Certificate {
  std::string family;
  std::size_t depth = 0;
  std::vector<Key> keys;

  const Key& at(std::string_view address) const { return keys.at(t2_heap_index(address)); }
  friend bool operator==(const T2Certificate&, const T2Certificate&) = default;
};

/// The split oracle declined during a construction.
class SplitDeclined : public Error {
 public:
  SplitDeclined(const std::string& what, std::string address, std::size_t step)
      : Error(what), address_(std::move(address)), step_(step) {}
  /// Tree address (or spine position "x<k>" for combs) of the declining base.
  const std::string& address() const { return address_; }
  std::size_t step() const { return step_; }

 private:
  std::string address_;
  std::size_t step_;
};

struct CheckResult {
  bool ok = true;
  std::string reason;  // first violation, empty when ok
  std::optional<std::pair<std::string, std::string>> witness;

  explicit operator bool() const { return ok; }
};

/// x(k+1), y(k) = left, right of split(x(k)). Invariants verified before
/// return; PresentationError if they fail, SplitDeclined naming k if the oracle
/// declines.
CombCertificate build_comb(const GenPoset& g, const Key& x0, std::size_t n);
CheckResult verify_comb(const CombCertificate& c, const GenPoset& g);

/// Recursive combs: the comb from an address supplies its 0-branch, each tooth
/// roots the comb of its 1-branch. Sibling sub-combs are checked pairwise
/// disjoint and the finished map passes verify_t2.
T2Certificate build_t2(const GenPoset& g, const Key& root, std::size_t depth);

/// Injectivity and u prefix-of v iff map(u) <= map(v) over all pairs.
/// PreconditionError on keys the family rejects or a malformed key table.
CheckResult verify_t2(const T2Certificate& c, const GenPoset& g);

struct T2SearchResult {
  std::optional<T2Certificate> certificate;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

/// Backtracking search for an induced copy of the depth-d tree inside p.
T2SearchResult search_t2(const Poset& p, std::size_t depth, std::uint64_t budget = 10'000'000,
                         std::string family = "finite");

// Certificate text documents:
//   certificate t2|comb
//   family <descriptor>
//   depth <d>
//   "<address>" -> "<key>"      one line per point
// Comb addresses are x0, y0, x1, y1, ..., xn. Quotes and backslashes inside
// keys are backslash-escaped, as are newlines (\n).

using Certificate = std::variant<T2Certificate, CombCertificate>;

std::string to_text(const T2Certificate& c);
std::string to_text(const CombCertificate& c);
std::string to_text(const Certificate& c);
/// ParseError with a line number on malformed documents.
Certificate parse_certificate(std::string_view text);

struct CertificateCheck {
  Certificate certificate;
  bool canonical = false;  // re-serializes to the exact input bytes
  CheckResult result;

  bool ok() const { return canonical && result.ok; }
};

/// Parses, checks the byte-exact round trip, and verifies against `family`
/// (the certificate's own descriptor when absent).
CertificateCheck check_certificate(std::string_view text, const GenPoset* family = nullptr);

enum class Verdict { Spatial, NotSpatial, Unknown };
std::string to_string(Verdict v);

struct FiniteCarrier {
  std::size_t size = 0;
};
struct WidthBound {
  std::size_t k = 0;
};
struct HeightBound {
  std::size_t k = 0;
};
struct NoetherianFact {};
struct BudgetExhausted {
  std::size_t certificate_depth = 0;
  std::uint64_t search_budget = 0;
  std::string reason;
  std::optional<T2Certificate> partial;
};

using Evidence = std::variant<FiniteCarrier, WidthBound, HeightBound, NoetherianFact, T2Certificate, BudgetExhausted>;

struct SpatialityVerdict {
  std::string family;
  Verdict verdict = Verdict::Unknown;
  Evidence evidence;
  std::string provenance;

  std::string evidence_kind() const;
  std::string to_text() const;
};

struct VerdictOptions {
  std::size_t certificate_depth = 5;
  std::uint64_t search_budget = 1'000'000;
  /// Truncation rank searched for a partial certificate when no split oracle applies.
  std::size_t probe_rank = 4;
};

SpatialityVerdict verdict(const GenPoset& g, const VerdictOptions& options = {});
/// Verdict of the skeleton, as a finite family.
SpatialityVerdict verdict(const Preorder& p, const VerdictOptions& options = {});

}  // namespace alexandroff
