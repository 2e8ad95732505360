#include "alexandroff/nuclei.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "alexandroff/error.hpp"

namespace alexandroff {

std::string_view to_string(NucleusAxiom axiom) {
  switch (axiom) {
    case NucleusAxiom::Inflationary: return "inflationary";
    case NucleusAxiom::Idempotent: return "idempotent";
    case NucleusAxiom::MeetPreserving: return "meet-preserving";
  }
  return "?";
}

std::string NucleusCheck::describe(const FiniteLattice& l) const {
  if (ok()) return "nucleus";
  std::string out = "violates " + std::string(to_string(*violated)) + " at a=" + l.name(a);
  if (*violated == NucleusAxiom::MeetPreserving) out += ", b=" + l.name(b);
  return out;
}

NucleusCheck check_nucleus(const FiniteLattice& l, std::span<const Element> table) {
  const std::size_t n = l.size();
  if (table.size() != n)
    throw PreconditionError("nucleus table has " + std::to_string(table.size()) + " entries for a frame of " + std::to_string(n));
  for (Element t : table)
    if (t >= n) throw PreconditionError("nucleus table entry " + std::to_string(t) + " is not a frame element");

  NucleusCheck c;
  for (Element a = 0; a < n; ++a)
    if (!l.leq(a, table[a])) {
      c.violated = NucleusAxiom::Inflationary;
      c.a = a;
      return c;
    }
  for (Element a = 0; a < n; ++a)
    if (table[table[a]] != table[a]) {
      c.violated = NucleusAxiom::Idempotent;
      c.a = a;
      return c;
    }
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (table[l.meet(a, b)] != l.meet(table[a], table[b])) {
        c.violated = NucleusAxiom::MeetPreserving;
        c.a = a;
        c.b = b;
        return c;
      }
  return c;
}

namespace {

std::vector<Element> implication_table(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a * n + b] = l.implies(a, b);
  return t;
}

ElementSet closure_with(const FiniteLattice& l, const std::vector<Element>& imp, ElementSet s) {
  const std::size_t n = l.size();
  std::vector<Element> queue;
  if (!s.contains(l.top())) s.insert(l.top());
  s.for_each([&](std::size_t x) { queue.push_back(static_cast<Element>(x)); });
  auto add = [&](Element x) {
    if (!s.contains(x)) {
      s.insert(x);
      queue.push_back(x);
    }
  };
  while (!queue.empty()) {
    Element x = queue.back();
    queue.pop_back();
    for (auto y : s.members()) add(l.meet(x, static_cast<Element>(y)));
    for (Element a = 0; a < n; ++a) add(imp[a * n + x]);
  }
  return s;
}

Nucleus least_fixpoint_above(const FiniteLattice& l, const ElementSet& f) {
  Nucleus j;
  j.table.resize(l.size());
  for (Element a = 0; a < l.size(); ++a) j.table[a] = l.meet_all(f & l.up(a));
  return j;
}

void require_frame(const FiniteLattice& l, const NucleusLimits& limits) {
  l.require_distributive("nucleus enumeration");
  if (l.size() > limits.max_frame)
    throw GuardExceeded("frame with " + std::to_string(l.size()) + " elements is too large for nucleus enumeration",
                        limits.max_frame);
}

}  // namespace

std::optional<std::string> fixpoint_set_violation(const FiniteLattice& l, const ElementSet& f) {
  if (f.universe() != l.size()) return "set is over the wrong universe";
  if (!f.contains(l.top())) return "does not contain the top element";
  auto members = f.members();
  for (auto a : members)
    for (auto b : members)
      if (!f.contains(l.meet(static_cast<Element>(a), static_cast<Element>(b))))
        return "not closed under meet: " + l.name(static_cast<Element>(a)) + " ∧ " + l.name(static_cast<Element>(b));
  for (Element x = 0; x < l.size(); ++x)
    for (auto s : members)
      if (!f.contains(l.implies(x, static_cast<Element>(s))))
        return "not closed under implication: " + l.name(x) + " → " + l.name(static_cast<Element>(s));
  return std::nullopt;
}

ElementSet fixpoint_closure(const FiniteLattice& l, const ElementSet& seed) {
  l.require_distributive("fixpoint closure");
  return closure_with(l, implication_table(l), seed);
}

Nucleus nucleus_from_fixpoints(const FiniteLattice& l, const ElementSet& f) {
  l.require_distributive("nucleus_from_fixpoints");
  if (auto why = fixpoint_set_violation(l, f)) throw PreconditionError("not a fixpoint set: " + *why);
  Nucleus j = least_fixpoint_above(l, f);
  if (auto c = check_nucleus(l, j.table); !c) throw InternalError("fixpoint set realized a non-nucleus: " + c.describe(l));
  return j;
}

ElementSet fixpoints(const FiniteLattice& l, const Nucleus& j) {
  ElementSet out(l.size());
  for (Element a = 0; a < l.size(); ++a)
    if (j(a) == a) out.insert(a);
  return out;
}

std::vector<Nucleus> nuclei_by_fixpoint_sets(const FiniteLattice& l, const NucleusLimits& limits) {
  require_frame(l, limits);
  const std::size_t n = l.size();
  const auto imp = implication_table(l);
  std::vector<Nucleus> out;

  auto emit = [&](const ElementSet& f) {
    if (out.size() >= limits.max_nuclei)
      throw GuardExceeded("frame has more nuclei than the nucleus count guard allows", limits.max_nuclei);
    Nucleus j = least_fixpoint_above(l, f);
    if (auto c = check_nucleus(l, j.table); !c) throw InternalError("fixpoint set realized a non-nucleus: " + c.describe(l));
    out.push_back(std::move(j));
  };

  // NextClosure: visit every closed set exactly once, in lectic order.
  ElementSet a = closure_with(l, imp, ElementSet(n));
  emit(a);
  const ElementSet full = ElementSet::full(n);
  while (a != full) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (a.contains(i)) {
        a.erase(i);
        continue;
      }
      ElementSet seed = a;
      seed.insert(i);
      ElementSet b = closure_with(l, imp, seed);
      bool canonical = true;
      for (std::size_t k = 0; k < i && canonical; ++k) canonical = b.contains(k) == a.contains(k);
      if (canonical) {
        a = std::move(b);
        emit(a);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw InternalError("NextClosure stalled before reaching the full set");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Nucleus> nuclei_by_map_filter(const FiniteLattice& l, const NucleusLimits& limits) {
  const std::size_t n = l.size();
  if (n > limits.map_filter_max_frame)
    throw GuardExceeded("frame with " + std::to_string(n) + " elements is too large for the map filter", limits.map_filter_max_frame);
  std::vector<Nucleus> out;
  std::vector<Element> table(n);
  std::function<void(Element)> assign = [&](Element a) {
    if (a == n) {
      if (check_nucleus(l, table)) out.push_back(Nucleus{table});
      return;
    }
    for (Element v = 0; v < n; ++v) {
      if (!l.leq(a, v)) continue;
      bool viable = true;
      for (Element b = 0; b < a && viable; ++b) {
        if (l.leq(a, b) && !l.leq(v, table[b])) viable = false;
        if (l.leq(b, a) && !l.leq(table[b], v)) viable = false;
        if (table[b] == a && v != a) viable = false;
        Element m = l.meet(a, b);
        if (m < a && table[m] != l.meet(v, table[b])) viable = false;
      }
      if (!viable) continue;
      table[a] = v;
      assign(a + 1);
    }
  };
  assign(0);
  std::sort(out.begin(), out.end());
  return out;
}

Nucleus identity_nucleus(const FiniteLattice& l) {
  Nucleus j;
  j.table.resize(l.size());
  for (Element a = 0; a < l.size(); ++a) j.table[a] = a;
  return j;
}

Nucleus top_nucleus(const FiniteLattice& l) { return Nucleus{std::vector<Element>(l.size(), l.top())}; }

Nucleus closed_nucleus(const FiniteLattice& l, Element a) {
  Nucleus j;
  j.table.resize(l.size());
  for (Element x = 0; x < l.size(); ++x) j.table[x] = l.join(a, x);
  return j;
}

Nucleus open_nucleus(const FiniteLattice& l, Element a) {
  Nucleus j;
  j.table.resize(l.size());
  for (Element x = 0; x < l.size(); ++x) j.table[x] = l.implies(a, x);
  return j;
}

bool nucleus_leq(const FiniteLattice& l, const Nucleus& j, const Nucleus& k) {
  for (Element a = 0; a < l.size(); ++a)
    if (!l.leq(j(a), k(a))) return false;
  return true;
}

Nucleus assembly_meet(const FiniteLattice& l, const Nucleus& j, const Nucleus& k) {
  Nucleus m;
  m.table.resize(l.size());
  for (Element a = 0; a < l.size(); ++a) m.table[a] = l.meet(j(a), k(a));
  return m;
}

Nucleus assembly_join(const FiniteLattice& l, const Nucleus& j, const Nucleus& k) {
  const std::size_t n = l.size();
  Nucleus out;
  out.table.resize(n);
  for (Element a = 0; a < n; ++a) {
    Element x = a;
    std::size_t steps = 0;
    for (;;) {
      Element y = j(k(x));
      if (y == x) break;
      if (++steps > n) throw InternalError("nucleus join iteration did not stabilize within |L| steps");
      x = y;
    }
    out.table[a] = x;
  }
  if (auto c = check_nucleus(l, out.table); !c) throw InternalError("nucleus join is not a nucleus: " + c.describe(l));
  return out;
}

std::optional<std::size_t> Assembly::index_of(const Nucleus& j) const {
  auto it = std::lower_bound(nuclei_.begin(), nuclei_.end(), j);
  if (it == nuclei_.end() || *it != j) return std::nullopt;
  return static_cast<std::size_t>(it - nuclei_.begin());
}

std::size_t Assembly::identity_index() const { return *index_of(identity_nucleus(frame_)); }
std::size_t Assembly::top_index() const { return *index_of(top_nucleus(frame_)); }

std::size_t Assembly::meet(std::size_t i, std::size_t k) const {
  auto idx = index_of(assembly_meet(frame_, nuclei_[i], nuclei_[k]));
  if (!idx) throw InternalError("pointwise meet of nuclei is missing from the assembly");
  return *idx;
}

std::size_t Assembly::join(std::size_t i, std::size_t k) const {
  auto idx = index_of(assembly_join(frame_, nuclei_[i], nuclei_[k]));
  if (!idx) throw InternalError("join of nuclei is missing from the assembly");
  if (!leq(i, *idx) || !leq(k, *idx)) throw InternalError("join of nuclei is not an upper bound");
  for (std::size_t u = 0; u < size(); ++u)
    if (leq(i, u) && leq(k, u) && !leq(*idx, u)) throw InternalError("join of nuclei is not the least upper bound");
  return *idx;
}

FiniteLattice Assembly::lattice(std::size_t max_elements) const {
  const std::size_t n = size();
  if (n > max_elements) throw GuardExceeded("assembly with " + std::to_string(n) + " nuclei is too large for lattice tables", max_elements);
  std::vector<std::string> names(n);
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = "j" + std::to_string(i);
    for (std::size_t k = 0; k < n; ++k)
      if (leq(i, k)) up[i].insert(k);
  }
  return FiniteLattice::from_order(std::move(names), std::move(up));
}

std::string Assembly::dump() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < size(); ++i) {
    os << "j" << i << ":";
    for (Element v : nuclei_[i].table) os << ' ' << v;
    os << "\n";
  }
  return os.str();
}

std::string Assembly::hasse_dot() const {
  std::vector<std::string> names(size());
  std::vector<ElementSet> up(size(), ElementSet(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    names[i] = "j" + std::to_string(i);
    for (std::size_t k = 0; k < size(); ++k)
      if (leq(i, k)) up[i].insert(k);
  }
  return alexandroff::hasse_dot(Poset::from_up_sets(std::move(names), std::move(up)), "assembly");
}

Assembly enumerate_nuclei(const FiniteLattice& l, const NucleusLimits& limits) {
  Assembly out;
  out.frame_ = l;
  out.nuclei_ = nuclei_by_fixpoint_sets(l, limits);
  if (l.size() <= limits.map_filter_max_frame) {
    auto filtered = nuclei_by_map_filter(l, limits);
    if (filtered != out.nuclei_)
      throw InternalError("nucleus enumeration methods disagree: " + std::to_string(out.nuclei_.size()) + " by fixpoint sets, " +
                          std::to_string(filtered.size()) + " by map filter");
    out.cross_checked_ = true;
  }
  return out;
}

}  // namespace alexandroff
