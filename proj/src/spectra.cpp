#include "alexandroff/spectra.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "alexandroff/error.hpp"

namespace alexandroff {

namespace {

std::uint64_t to_mask(const ElementSet& s) {
  if (s.universe() > 64) throw PreconditionError("set over more than 64 points");
  return s.mask();
}

void require_literal_size(const Spectrum& x, const char* what) {
  if (x.size() > kMaxLiteralSpectrum)
    throw GuardExceeded(std::string(what) + " on a spectrum of " + std::to_string(x.size()) + " points", kMaxLiteralSpectrum);
}

std::vector<std::uint64_t> down_masks(const Spectrum& x) {
  std::vector<std::uint64_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = to_mask(x.order().down(i));
  return out;
}

std::uint64_t down_of(std::uint64_t set, const std::vector<std::uint64_t>& down) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; set; ++i, set >>= 1)
    if (set & 1u) out |= down[i];
  return out;
}

// Every clopen subset of the spectrum, found by testing all of them.
std::vector<std::uint64_t> clopen_sets(const Spectrum& x, const PriestleyTopology& top) {
  std::vector<std::uint64_t> out;
  const std::uint64_t count = std::uint64_t{1} << x.size();
  for (std::uint64_t u = 0; u < count; ++u)
    if (top.is_clopen(u)) out.push_back(u);
  return out;
}

bool nuclear_given(const PriestleyTopology& top, const std::vector<std::uint64_t>& clopens, const std::vector<std::uint64_t>& down,
                   std::uint64_t f) {
  if (!top.is_closed(f)) return false;
  for (auto u : clopens)
    if (!top.is_clopen(down_of(f & u, down))) return false;
  return true;
}

std::vector<ElementSet> all_upsets(const Poset& p) {
  std::vector<ElementSet> out;
  if (!for_each_upset(p, kDefaultLatticeTableCap, [&](const ElementSet& u) { out.push_back(u); }))
    throw GuardExceeded("poset has too many upsets for literal topology checks", kDefaultLatticeTableCap);
  return out;
}

}  // namespace

std::optional<std::size_t> Spectrum::index_of(const ElementSet& filter) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == filter) return i;
  return std::nullopt;
}

bool is_prime_filter(const FiniteLattice& l, const ElementSet& f) {
  if (f.universe() != l.size() || f.empty() || f.contains(l.bottom())) return false;
  auto members = f.members();
  for (auto a : members)
    if (!l.up(static_cast<Element>(a)).is_subset_of(f)) return false;
  for (auto a : members)
    for (auto b : members)
      if (!f.contains(l.meet(static_cast<Element>(a), static_cast<Element>(b)))) return false;
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = a; b < l.size(); ++b)
      if (f.contains(l.join(a, b)) && !f.contains(a) && !f.contains(b)) return false;
  return true;
}

std::vector<ElementSet> prime_filters_brute_force(const FiniteLattice& l) {
  const std::size_t n = l.size();
  if (n > kMaxBruteForcePrimeFilters)
    throw GuardExceeded("brute-force prime filter search on " + std::to_string(n) + " elements", kMaxBruteForcePrimeFilters);
  std::vector<std::uint64_t> up(n);
  for (Element a = 0; a < n; ++a) up[a] = l.up(a).mask();
  std::vector<ElementSet> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < count; ++m) {
    bool up_closed = true;
    for (std::size_t a = 0; a < n && up_closed; ++a)
      if ((m >> a) & 1u) up_closed = (up[a] & ~m) == 0;
    if (!up_closed) continue;
    ElementSet f = ElementSet::from_mask(n, m);
    if (is_prime_filter(l, f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  return out;
}

Spectrum prime_filters(const FiniteLattice& l) {
  l.require_distributive("prime filter enumeration");
  Spectrum x;
  for (Element j : join_irreducibles(l)) {
    if (!is_prime_filter(l, l.up(j))) throw InternalError("principal filter of join-irreducible " + l.name(j) + " is not prime");
    x.points_.push_back(l.up(j));
  }
  if (l.size() <= 16) {
    auto a = x.points_, b = prime_filters_brute_force(l);
    std::sort(a.begin(), a.end(), [](const ElementSet& p, const ElementSet& q) { return canonical_less(p, q); });
    if (a != b) throw InternalError("prime filters from join-irreducibles disagree with the brute-force search");
  }
  const std::size_t n = x.points_.size();
  std::vector<std::string> names(n);
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = "p" + std::to_string(i);
    for (std::size_t k = 0; k < n; ++k)
      if (x.points_[i].is_subset_of(x.points_[k])) up[i].insert(k);
  }
  x.order_ = Poset::from_up_sets(std::move(names), std::move(up));
  x.eta_.assign(l.size(), ElementSet(n));
  for (Element a = 0; a < l.size(); ++a)
    for (std::size_t i = 0; i < n; ++i)
      if (x.points_[i].contains(a)) x.eta_[a].insert(i);
  return x;
}

std::vector<std::size_t> epsilon(const UpsetFrame& frame, const Spectrum& x) {
  if (frame.size() != x.lattice_size()) throw PreconditionError("spectrum does not belong to this frame");
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < frame.base().size(); ++s) {
    ElementSet filter(frame.size());
    for (Element u = 0; u < frame.size(); ++u)
      if (frame.element(u).contains(s)) filter.insert(u);
    auto idx = x.index_of(filter);
    if (!idx) throw InternalError("epsilon(" + frame.base().name(s) + ") is not a point of the spectrum");
    out.push_back(*idx);
  }
  return out;
}

bool epsilon_is_order_isomorphism(const UpsetFrame& frame, const Spectrum& x) {
  auto eps = epsilon(frame, x);
  const Poset& s = frame.base();
  if (eps.size() != x.size()) return false;
  std::vector<char> hit(x.size(), 0);
  for (auto p : eps) {
    if (hit[p]) return false;
    hit[p] = 1;
  }
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (s.leq(a, b) != x.point(eps[a]).is_subset_of(x.point(eps[b]))) return false;
  return true;
}

PriestleyTopology::PriestleyTopology(const Spectrum& x) : n_(x.size()) {
  if (n_ > 64) throw GuardExceeded("Priestley topology on " + std::to_string(n_) + " points", 64);
  full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  std::unordered_set<std::uint64_t> seen;
  for (Element a = 0; a < x.lattice_size(); ++a)
    for (Element b = 0; b < x.lattice_size(); ++b) {
      std::uint64_t diff = to_mask(x.eta(a)) & ~to_mask(x.eta(b));
      if (diff && seen.insert(diff).second) basis_.push_back(diff);
    }
  std::sort(basis_.begin(), basis_.end());
}

bool PriestleyTopology::is_open(std::uint64_t set) const {
  std::uint64_t covered = 0;
  for (auto b : basis_)
    if ((b & ~set) == 0) covered |= b;
  return covered == set;
}

bool is_nuclear(const Spectrum& x, const PriestleyTopology& top, const ElementSet& f) {
  require_literal_size(x, "nuclearity check");
  return nuclear_given(top, clopen_sets(x, top), down_masks(x), to_mask(f));
}

std::vector<ElementSet> nuclear_subsets(const Spectrum& x) {
  require_literal_size(x, "nuclear subset enumeration");
  PriestleyTopology top(x);
  auto clopens = clopen_sets(x, top);
  auto down = down_masks(x);
  std::vector<ElementSet> out;
  const std::uint64_t count = std::uint64_t{1} << x.size();
  for (std::uint64_t f = 0; f < count; ++f)
    if (nuclear_given(top, clopens, down, f)) out.push_back(ElementSet::from_mask(x.size(), f));
  return out;
}

ElementSet nuclear_points(const Spectrum& x) {
  require_literal_size(x, "nuclear point search");
  PriestleyTopology top(x);
  auto clopens = clopen_sets(x, top);
  auto down = down_masks(x);
  ElementSet y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (nuclear_given(top, clopens, down, std::uint64_t{1} << i)) y.insert(i);
  return y;
}

MaxCriterionResult spatiality_via_max(const Spectrum& x) {
  require_literal_size(x, "spatiality criterion");
  PriestleyTopology top(x);
  const ElementSet y = nuclear_points(x);
  MaxCriterionResult r;
  const std::uint64_t count = std::uint64_t{1} << x.size();
  for (std::uint64_t u = 1; u < count; ++u) {
    ElementSet set = ElementSet::from_mask(x.size(), u);
    if (!is_downset(x.order(), set) || !top.is_clopen(u)) continue;
    ++r.downsets_checked;
    if (!maximal(x.order(), set).intersects(y)) {
      r.spatial = false;
      r.witness = set;
      return r;
    }
  }
  return r;
}

bool is_scattered(const Poset& p) {
  const auto opens = all_upsets(p);
  const auto closed = all_upsets(dual(p));  // downsets of p
  for (const auto& t : closed) {
    if (t.empty()) continue;
    bool has_isolated = false;
    t.for_each([&](std::size_t x) {
      for (const auto& u : opens) {
        if (has_isolated) return;
        ElementSet trace = u & t;
        if (trace.count() == 1 && trace.contains(x)) has_isolated = true;
      }
    });
    if (!has_isolated) return false;
  }
  return true;
}

bool is_weakly_scattered(const Poset& p) {
  const auto opens = all_upsets(p);
  const auto closed = all_upsets(dual(p));
  for (const auto& t : closed) {
    if (t.empty()) continue;
    bool has_weakly_isolated = false;
    t.for_each([&](std::size_t x) {
      // The closure of {x} in an Alexandroff space is ↓x.
      const ElementSet closure_x = p.down(x) & t;
      for (const auto& u : opens) {
        if (has_weakly_isolated) return;
        ElementSet trace = u & t;
        if (trace.contains(x) && trace.is_subset_of(closure_x)) has_weakly_isolated = true;
      }
    });
    if (!has_weakly_isolated) return false;
  }
  return true;
}

std::vector<ElementSet> front_basis(const Poset& p) {
  const auto opens = all_upsets(p);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> out;
  for (const auto& u : opens)
    for (const auto& v : opens) {
      ElementSet d = u - v;
      if (seen.insert(d).second) out.push_back(std::move(d));
    }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  return out;
}

Nucleus nucleus_of_nuclear_set(const FiniteLattice& l, const Spectrum& x, const ElementSet& f) {
  Nucleus j;
  j.table.resize(l.size());
  for (Element a = 0; a < l.size(); ++a) {
    const ElementSet target = x.eta(a) & f;
    ElementSet candidates(l.size());
    for (Element b = 0; b < l.size(); ++b)
      if ((x.eta(b) & f).is_subset_of(target)) candidates.insert(b);
    Element best = l.join_all(candidates);
    if (!(x.eta(best) & f).is_subset_of(target))
      throw InternalError("no largest element with trace inside eta(" + l.name(a) + ") on the nuclear set");
    j.table[a] = best;
  }
  return j;
}

DualityReport duality_check(const FiniteLattice& l, const NucleusLimits& limits) {
  DualityReport r;
  Spectrum x = prime_filters(l);
  require_literal_size(x, "duality check");
  Assembly assembly = enumerate_nuclei(l, limits);
  auto sets = nuclear_subsets(x);
  r.frame_size = l.size();
  r.spectrum_size = x.size();
  r.nuclear_subset_count = sets.size();
  r.nucleus_count = assembly.size();

  auto describe = [&](const ElementSet& f) {
    std::string s = "{";
    bool first = true;
    f.for_each([&](std::size_t i) {
      s += (first ? "" : ",") + x.order().name(i);
      first = false;
    });
    return s + "}";
  };

  std::vector<char> hit(assembly.size(), 0);
  bool injective = true;
  for (const auto& f : sets) {
    Nucleus j = nucleus_of_nuclear_set(l, x, f);
    if (auto c = check_nucleus(l, j.table); !c) {
      r.failure = "j_F for F = " + describe(f) + " " + c.describe(l);
      return r;
    }
    auto idx = assembly.index_of(j);
    if (!idx) {
      r.failure = "j_F for F = " + describe(f) + " is missing from the enumerated assembly";
      return r;
    }
    if (hit[*idx]) {
      injective = false;
      if (r.failure.empty()) r.failure = "two nuclear sets map to j" + std::to_string(*idx) + ", second is " + describe(f);
    }
    hit[*idx] = 1;
    r.table.emplace_back(f, *idx);
  }
  r.bijective = injective && sets.size() == assembly.size();
  if (!r.bijective && r.failure.empty())
    r.failure = std::to_string(sets.size()) + " nuclear sets but " + std::to_string(assembly.size()) + " nuclei";

  r.order_reversing = true;
  for (const auto& [f, jf] : r.table)
    for (const auto& [g, jg] : r.table)
      if (f.is_subset_of(g) != assembly.leq(jg, jf)) {
        r.order_reversing = false;
        if (r.failure.empty()) r.failure = "order reversal fails for F = " + describe(f) + ", G = " + describe(g);
        return r;
      }
  return r;
}

std::string DualityReport::to_text() const {
  std::ostringstream os;
  os << "frame elements: " << frame_size << "\n";
  os << "spectrum points: " << spectrum_size << "\n";
  os << "nuclear subsets: " << nuclear_subset_count << "\n";
  os << "nuclei: " << nucleus_count << "\n";
  os << "bijective: " << (bijective ? "yes" : "no") << "\n";
  os << "order-reversing: " << (order_reversing ? "yes" : "no") << "\n";
  os << "table:\n";
  for (const auto& [f, j] : table) {
    os << "  {";
    bool first = true;
    f.for_each([&](std::size_t i) {
      os << (first ? "" : ",") << "p" << i;
      first = false;
    });
    os << "} -> j" << j << "\n";
  }
  if (!failure.empty()) os << "failure: " << failure << "\n";
  os << "verdict: " << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

bool is_spatial_finite(const FiniteLattice& l) {
  l.require_distributive("spatiality test");
  Spectrum x = prime_filters(l);
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b) {
      if (l.leq(a, b)) continue;
      bool separated = false;
      for (std::size_t p = 0; p < x.size() && !separated; ++p)
        separated = x.point(p).contains(a) && !x.point(p).contains(b);
      if (!separated) return false;
    }
  return true;
}

}  // namespace alexandroff
