#include "alexandroff/frames.hpp"

#include <algorithm>
#include <sstream>

#include "alexandroff/error.hpp"

namespace alexandroff {

UpsetFrame UpsetFrame::build(const Poset& base, std::size_t cap) {
  auto antichains = count_antichains(base, cap);
  if (!antichains)
    throw GuardExceeded("poset with " + std::to_string(base.size()) + " elements has more upsets than the frame size guard allows",
                        cap);

  UpsetFrame f;
  f.base_ = base;
  f.elements_.reserve(*antichains);
  bool complete = for_each_upset(base, cap, [&](const ElementSet& u) { f.elements_.push_back(u); });
  if (!complete) throw GuardExceeded("upset enumeration exceeded the frame size guard", cap);
  // Upsets correspond to their antichains of minimal elements.
  if (f.elements_.size() != *antichains)
    throw InternalError("upset count " + std::to_string(f.elements_.size()) + " differs from antichain count " +
                        std::to_string(*antichains));
  std::sort(f.elements_.begin(), f.elements_.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  f.index_.reserve(f.elements_.size());
  for (Element i = 0; i < f.elements_.size(); ++i) f.index_.emplace(f.elements_[i], i);
  return f;
}

Element UpsetFrame::index_of(const ElementSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw PreconditionError("set is not an upset of the base poset");
  return it->second;
}

Element UpsetFrame::implies(Element a, Element b) const {
  return index_of(heyting_implication(base_, elements_[a], elements_[b]));
}

std::string UpsetFrame::label(Element e) const {
  std::string out = "{";
  bool first = true;
  elements_[e].for_each([&](std::size_t x) {
    if (!first) out += ",";
    out += base_.name(x);
    first = false;
  });
  return out + "}";
}

FiniteLattice UpsetFrame::lattice(std::size_t max_elements) const {
  const std::size_t n = size();
  if (n > max_elements) throw GuardExceeded("frame with " + std::to_string(n) + " elements is too large for lattice tables", max_elements);
  std::vector<std::string> names(n);
  std::vector<ElementSet> up(n, ElementSet(n));
  std::vector<Element> meet_t(n * n), join_t(n * n), imp_t(n * n);
  for (Element a = 0; a < n; ++a) {
    names[a] = label(a);
    for (Element b = 0; b < n; ++b) {
      if (leq(a, b)) up[a].insert(b);
      meet_t[a * n + b] = meet(a, b);
      join_t[a * n + b] = join(a, b);
      imp_t[a * n + b] = implies(a, b);
    }
  }
  return FiniteLattice::from_tables(std::move(names), std::move(up), std::move(meet_t), std::move(join_t), std::move(imp_t), true);
}

std::string UpsetFrame::dump() const {
  std::ostringstream os;
  for (Element e = 0; e < size(); ++e) os << e << ": " << label(e) << "\n";
  return os.str();
}

std::string UpsetFrame::hasse_dot() const {
  // Covers in a lattice of upsets add exactly one point.
  std::ostringstream os;
  os << "digraph \"frame\" {\n  rankdir=BT;\n";
  for (Element e = 0; e < size(); ++e) os << "  n" << e << " [label=\"" << label(e) << "\"];\n";
  for (Element a = 0; a < size(); ++a) {
    ElementSet outside = elements_[a].complement();
    outside.for_each([&](std::size_t x) {
      ElementSet bigger = elements_[a];
      bigger.insert(x);
      auto it = index_.find(bigger);
      if (it != index_.end()) os << "  n" << a << " -> n" << it->second << ";\n";
    });
  }
  os << "}\n";
  return os.str();
}

ElementSet heyting_implication(const Poset& s, const ElementSet& u, const ElementSet& v) {
  return down_closure(s, u - v).complement();
}

std::vector<Element> join_irreducibles(const UpsetFrame& f) {
  std::vector<Element> out;
  for (Element x = 1; x < f.size(); ++x) {
    // Join of all strictly smaller upsets.
    ElementSet below(f.base().size());
    for (Element y = 0; y < f.size(); ++y)
      if (y != x && f.leq(y, x)) below |= f.element(y);
    if (below != f.element(x)) out.push_back(x);
  }
  return out;
}

}  // namespace alexandroff
