#include "alexandroff/lattice.hpp"

#include <optional>

#include "alexandroff/error.hpp"

namespace alexandroff {

namespace {

// The greatest element of `lower` (a down-closed set of lower bounds), i.e.
// the one whose own down-set is all of `lower`.
std::optional<Element> greatest_of(const ElementSet& bounds, const std::vector<ElementSet>& cone) {
  const std::size_t want = bounds.count();
  std::optional<Element> found;
  bounds.for_each([&](std::size_t g) {
    if (!found && cone[g].count() == want) found = static_cast<Element>(g);
  });
  return found;
}

}  // namespace

FiniteLattice FiniteLattice::from_order(std::vector<std::string> names, std::vector<ElementSet> up) {
  Poset order = Poset::from_up_sets(names, up);
  const std::size_t n = order.size();
  if (n == 0) throw RelationError("a bounded lattice needs at least one element");
  FiniteLattice l;
  l.names_ = std::move(names);
  l.up_ = std::move(up);
  l.down_.resize(n);
  for (std::size_t a = 0; a < n; ++a) l.down_[a] = order.down(a);
  l.meet_.resize(n * n);
  l.join_.resize(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      auto m = greatest_of(l.down_[a] & l.down_[b], l.down_);
      auto j = greatest_of(l.up_[a] & l.up_[b], l.up_);
      if (!m) throw RelationError("not a lattice: " + l.names_[a] + " and " + l.names_[b] + " have no meet");
      if (!j) throw RelationError("not a lattice: " + l.names_[a] + " and " + l.names_[b] + " have no join");
      l.meet_[l.index(a, b)] = l.meet_[l.index(b, a)] = *m;
      l.join_[l.index(a, b)] = l.join_[l.index(b, a)] = *j;
    }
  }
  l.finish();
  // Finite lattices are distributive iff every join-irreducible is join-prime.
  l.distributive_ = true;
  for (Element j : join_irreducibles(l)) {
    for (Element a = 0; a < n && l.distributive_; ++a)
      for (Element b = a; b < n && l.distributive_; ++b)
        if (l.leq(j, l.join(a, b)) && !l.leq(j, a) && !l.leq(j, b)) l.distributive_ = false;
  }
  return l;
}

FiniteLattice FiniteLattice::from_tables(std::vector<std::string> names, std::vector<ElementSet> up, std::vector<Element> meet,
                                         std::vector<Element> join, std::vector<Element> implication, bool distributive) {
  const std::size_t n = names.size();
  if (up.size() != n || meet.size() != n * n || join.size() != n * n || !(implication.empty() || implication.size() == n * n))
    throw PreconditionError("lattice tables have inconsistent sizes");
  FiniteLattice l;
  l.names_ = std::move(names);
  l.up_ = std::move(up);
  l.down_.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) l.up_[a].for_each([&](std::size_t b) { l.down_[b].insert(a); });
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  l.implication_ = std::move(implication);
  l.distributive_ = distributive;
  l.finish();
  return l;
}

void FiniteLattice::finish() {
  const std::size_t n = size();
  bottom_ = top_ = 0;
  for (Element a = 0; a < n; ++a) {
    if (up_[a].count() == n) bottom_ = a;
    if (down_[a].count() == n) top_ = a;
  }
}

Element FiniteLattice::implies(Element a, Element b) const {
  if (!implication_.empty()) return implication_[index(a, b)];
  require_distributive("Heyting implication");
  Element best = bottom_;
  for (Element x = 0; x < size(); ++x)
    if (leq(meet(x, a), b)) best = join(best, x);
  return best;
}

void FiniteLattice::require_distributive(std::string_view context) const {
  if (!distributive_) throw NotDistributive(std::string(context) + " requires a distributive lattice");
}

Element FiniteLattice::join_all(const ElementSet& family) const {
  Element acc = bottom_;
  family.for_each([&](std::size_t x) { acc = join(acc, static_cast<Element>(x)); });
  return acc;
}

Element FiniteLattice::meet_all(const ElementSet& family) const {
  Element acc = top_;
  family.for_each([&](std::size_t x) { acc = meet(acc, static_cast<Element>(x)); });
  return acc;
}

Poset FiniteLattice::as_poset() const { return Poset::from_up_sets(names_, up_); }

std::vector<Element> join_irreducibles(const FiniteLattice& l) {
  // In a finite lattice x is join-irreducible iff the join of everything
  // strictly below it is strictly below it.
  std::vector<Element> out;
  for (Element x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    ElementSet below = l.down(x);
    below.erase(x);
    if (l.join_all(below) != x) out.push_back(x);
  }
  return out;
}

bool is_boolean(const FiniteLattice& l) {
  for (Element x = 0; x < l.size(); ++x) {
    bool complemented = false;
    for (Element y = 0; y < l.size() && !complemented; ++y)
      complemented = l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
    if (!complemented) return false;
  }
  return true;
}

bool is_distributive_by_triples(const FiniteLattice& l) {
  const Element n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

FiniteLattice diamond_m3() {
  // 0 < a, b, c < 1
  std::vector<std::string> names{"0", "a", "b", "c", "1"};
  std::vector<ElementSet> up{ElementSet(5, {0, 1, 2, 3, 4}), ElementSet(5, {1, 4}), ElementSet(5, {2, 4}),
                             ElementSet(5, {3, 4}), ElementSet(5, {4})};
  return FiniteLattice::from_order(std::move(names), std::move(up));
}

}  // namespace alexandroff
