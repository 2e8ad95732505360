#include "alexandroff/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "alexandroff/error.hpp"

namespace alexandroff {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return names;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Preorder::Preorder(std::vector<std::string> names, std::vector<ElementSet> up)
    : names_(std::move(names)), up_(std::move(up)) {
  const std::size_t n = names_.size();
  down_.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) up_[a].for_each([&](std::size_t b) { down_[b].insert(a); });
}

Preorder Preorder::from_up_sets(std::vector<std::string> names, std::vector<ElementSet> up) {
  const std::size_t n = names.size();
  if (up.size() != n) throw RelationError("relation has " + std::to_string(up.size()) + " rows for " + std::to_string(n) + " elements");
  for (std::size_t a = 0; a < n; ++a) {
    if (up[a].universe() != n) throw RelationError("relation row " + std::to_string(a) + " has the wrong universe");
    if (!up[a].contains(a)) throw RelationError("relation is not reflexive at " + names[a]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = true;
    up[a].for_each([&](std::size_t b) { ok = ok && up[b].is_subset_of(up[a]); });
    if (!ok) throw RelationError("relation is not transitive at " + names[a]);
  }
  return Preorder(std::move(names), std::move(up));
}

std::optional<std::size_t> Preorder::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == label) return i;
  return std::nullopt;
}

bool Preorder::is_antisymmetric() const {
  for (std::size_t a = 0; a < size(); ++a) {
    ElementSet both = up_[a] & down_[a];
    if (both.count() != 1) return false;
  }
  return true;
}

Poset Poset::from_preorder(Preorder p) {
  for (std::size_t a = 0; a < p.size(); ++a) {
    ElementSet both = p.up(a) & p.down(a);
    both.erase(a);
    if (!both.empty())
      throw RelationError("relation is not antisymmetric: " + p.name(a) + " and " + p.name(both.members().front()) +
                          " are mutually related");
  }
  return Poset(std::move(p));
}

Poset Poset::from_up_sets(std::vector<std::string> names, std::vector<ElementSet> up) {
  return from_preorder(Preorder::from_up_sets(std::move(names), std::move(up)));
}

Preorder saturate(std::span<const Pair> pairs, std::size_t n, std::vector<std::string> names) {
  if (names.empty()) names = default_names(n);
  if (names.size() != n) throw PreconditionError("expected " + std::to_string(n) + " names, got " + std::to_string(names.size()));
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) up[a].insert(a);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n)
      throw PreconditionError("pair (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range for " + std::to_string(n) +
                              " elements");
    up[a].insert(b);
  }
  // Warshall on rows: if a <= k then a inherits everything above k.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (up[a].contains(k)) up[a] |= up[k];
  return Preorder::from_up_sets(std::move(names), std::move(up));
}

Poset make_poset(std::span<const Pair> pairs, std::size_t n, std::vector<std::string> names) {
  return Poset::from_preorder(saturate(pairs, n, std::move(names)));
}

Skeleton skeleton(const Preorder& p) {
  const std::size_t n = p.size();
  Skeleton out;
  out.class_of.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (out.class_of[a] != n) continue;
    std::size_t cls = out.members.size();
    out.members.emplace_back();
    (p.up(a) & p.down(a)).for_each([&](std::size_t b) {
      out.class_of[b] = cls;
      out.members.back().push_back(b);
    });
  }
  const std::size_t m = out.members.size();
  std::vector<std::string> names(m);
  std::vector<ElementSet> up(m, ElementSet(m));
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t rep = out.members[c].front();
    names[c] = p.name(rep);
    p.up(rep).for_each([&](std::size_t b) { up[c].insert(out.class_of[b]); });
  }
  out.poset = Poset::from_up_sets(std::move(names), std::move(up));
  return out;
}

ElementSet up_closure(const Preorder& p, const ElementSet& a) {
  ElementSet out(p.size());
  a.for_each([&](std::size_t x) { out |= p.up(x); });
  return out;
}

ElementSet down_closure(const Preorder& p, const ElementSet& a) {
  ElementSet out(p.size());
  a.for_each([&](std::size_t x) { out |= p.down(x); });
  return out;
}

bool is_upset(const Preorder& p, const ElementSet& a) { return up_closure(p, a) == a; }
bool is_downset(const Preorder& p, const ElementSet& a) { return down_closure(p, a) == a; }

ElementSet maximal(const Poset& p, const ElementSet& a) {
  ElementSet out(p.size());
  a.for_each([&](std::size_t x) {
    if ((p.up(x) & a).count() == 1) out.insert(x);
  });
  return out;
}

ElementSet minimal(const Poset& p, const ElementSet& a) {
  ElementSet out(p.size());
  a.for_each([&](std::size_t x) {
    if ((p.down(x) & a).count() == 1) out.insert(x);
  });
  return out;
}

namespace {

// Kuhn's augmenting paths on the strict-order bipartite graph.
std::size_t strict_order_matching(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> match_right(n, n);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    bool found = false;
    p.up(u).for_each([&](std::size_t v) {
      if (found || v == u || seen[v]) return;
      seen[v] = 1;
      if (match_right[v] == n || augment(match_right[v])) {
        match_right[v] = u;
        found = true;
      }
    });
    return found;
  };
  std::size_t matched = 0;
  for (std::size_t u = 0; u < n; ++u) {
    seen.assign(n, 0);
    if (augment(u)) ++matched;
  }
  return matched;
}

// Elements sorted so that a < b implies a comes first.
std::vector<std::size_t> linear_extension(const Poset& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) below[i] = p.down(i).count();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return order;
}

}  // namespace

std::size_t width(const Poset& p) { return p.size() - strict_order_matching(p); }

std::vector<std::size_t> longest_chain(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return {};
  std::vector<std::size_t> best(n, 1), prev(n, n);
  auto order = linear_extension(p);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t b = order[i];
    for (std::size_t j = 0; j < i; ++j) {
      std::size_t a = order[j];
      if (p.less(a, b) && best[a] + 1 > best[b]) {
        best[b] = best[a] + 1;
        prev[b] = a;
      }
    }
  }
  std::size_t top = static_cast<std::size_t>(std::max_element(best.begin(), best.end()) - best.begin());
  std::vector<std::size_t> chain;
  for (std::size_t x = top; x != n; x = prev[x]) chain.push_back(x);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::size_t height(const Poset& p) { return longest_chain(p).size(); }

bool is_chain(const Poset& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    if ((p.up(a) | p.down(a)).count() != p.size()) return false;
  return true;
}

bool is_antichain(const Poset& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    if (p.up(a).count() != 1) return false;
  return true;
}

ElementSet upset_extension(const Poset& s, const ElementSet& t, const ElementSet& a) {
  if (!a.is_subset_of(t)) throw PreconditionError("upset_extension: A is not a subset of T");
  bool up_closed = true;
  a.for_each([&](std::size_t x) { up_closed = up_closed && (s.up(x) & t).is_subset_of(a); });
  if (!up_closed) throw PreconditionError("upset_extension: A is not an upset of the order induced on T");
  ElementSet u = up_closure(s, a);
  if ((u & t) != a) throw InternalError("upset_extension: trace of the extension differs from A");
  return u;
}

Poset induced(const Poset& p, std::span<const std::size_t> elements) {
  const std::size_t m = elements.size();
  std::vector<std::string> names(m);
  std::vector<ElementSet> up(m, ElementSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = p.name(elements[i]);
    for (std::size_t j = 0; j < m; ++j)
      if (p.leq(elements[i], elements[j])) up[i].insert(j);
  }
  return Poset::from_up_sets(std::move(names), std::move(up));
}

Poset dual(const Poset& p) {
  std::vector<ElementSet> up(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) up[a] = p.down(a);
  return Poset::from_up_sets(p.names(), std::move(up));
}

std::vector<Pair> covers(const Poset& p) {
  std::vector<Pair> out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    ElementSet above = p.up(a);
    above.erase(a);
    // b covers a iff b is minimal in the strict up-set of a.
    minimal(p, above).for_each([&](std::size_t b) { out.emplace_back(a, b); });
  }
  return out;
}

std::string hasse_dot(const Poset& p, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(graph_name) << "\" {\n  rankdir=BT;\n";
  for (std::size_t a = 0; a < p.size(); ++a) os << "  n" << a << " [label=\"" << dot_escape(p.name(a)) << "\"];\n";
  for (auto [a, b] : covers(p)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

bool for_each_upset(const Poset& p, std::size_t cap, const std::function<void(const ElementSet&)>& visit) {
  const std::size_t n = p.size();
  std::size_t produced = 0;
  // Including x forces up(x) in, excluding x forces down(x) out; the two never
  // clash on an undetermined x, so every leaf is a distinct upset.
  std::function<bool(const ElementSet&, const ElementSet&)> rec = [&](const ElementSet& in, const ElementSet& out) {
    ElementSet decided = in | out;
    std::size_t x = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!decided.contains(i)) {
        x = i;
        break;
      }
    if (x == n) {
      if (++produced > cap) return false;
      visit(in);
      return true;
    }
    return rec(in | p.up(x), out) && rec(in, out | p.down(x));
  };
  return rec(ElementSet(n), ElementSet(n));
}

std::optional<std::size_t> count_antichains(const Poset& p, std::size_t cap) {
  std::size_t total = 0;
  std::function<bool(const ElementSet&)> rec = [&](const ElementSet& candidates) {
    if (candidates.empty()) return ++total <= cap;
    std::size_t x = candidates.members().front();
    ElementSet without = candidates;
    without.erase(x);
    if (!rec(without)) return false;
    return rec(without - p.up(x) - p.down(x));
  };
  if (!rec(p.full_set())) return std::nullopt;
  return total;
}

bool is_order_embedding(const Poset& pattern, const Poset& host, std::span<const std::size_t> map) {
  if (map.size() != pattern.size()) return false;
  for (std::size_t u = 0; u < map.size(); ++u) {
    if (map[u] >= host.size()) return false;
    for (std::size_t v = 0; v < map.size(); ++v) {
      if (u != v && map[u] == map[v]) return false;
      if (pattern.leq(u, v) != host.leq(map[u], map[v])) return false;
    }
  }
  return true;
}

EmbeddingResult embeds_subposet(const Poset& pattern, const Poset& host, std::uint64_t budget) {
  const std::size_t np = pattern.size(), nh = host.size();
  EmbeddingResult result;
  if (np > nh) return result;

  auto degree = [](const Poset& p, std::size_t a) { return p.up(a).count() + p.down(a).count(); };

  // Visit pattern elements most-constrained first: each next element has the
  // most comparabilities with those already placed, ties broken by degree.
  std::vector<std::size_t> order;
  std::vector<char> placed(np, 0);
  for (std::size_t step = 0; step < np; ++step) {
    std::size_t best = np;
    std::size_t best_links = 0, best_deg = 0;
    for (std::size_t u = 0; u < np; ++u) {
      if (placed[u]) continue;
      std::size_t links = 0;
      for (auto w : order) links += pattern.comparable(u, w);
      std::size_t d = degree(pattern, u);
      if (best == np || links > best_links || (links == best_links && d > best_deg)) {
        best = u;
        best_links = links;
        best_deg = d;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  std::vector<std::size_t> up_p(np), down_p(np), up_h(nh), down_h(nh);
  for (std::size_t u = 0; u < np; ++u) up_p[u] = pattern.up(u).count(), down_p[u] = pattern.down(u).count();
  for (std::size_t h = 0; h < nh; ++h) up_h[h] = host.up(h).count(), down_h[h] = host.down(h).count();

  std::vector<std::size_t> image(np, nh);
  std::vector<char> used(nh, 0);
  bool out_of_budget = false;

  std::function<bool(std::size_t)> place = [&](std::size_t depth) {
    if (depth == np) return true;
    std::size_t u = order[depth];
    for (std::size_t h = 0; h < nh; ++h) {
      if (used[h] || up_h[h] < up_p[u] || down_h[h] < down_p[u]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        std::size_t w = order[k];
        consistent = pattern.leq(u, w) == host.leq(h, image[w]) && pattern.leq(w, u) == host.leq(image[w], h);
      }
      if (!consistent) continue;
      if (++result.nodes > budget) {
        out_of_budget = true;
        return false;
      }
      image[u] = h;
      used[h] = 1;
      if (place(depth + 1)) return true;
      used[h] = 0;
      if (out_of_budget) return false;
    }
    return false;
  };

  if (place(0)) {
    if (!is_order_embedding(pattern, host, image)) throw InternalError("embeds_subposet produced an invalid embedding");
    result.map = std::move(image);
  }
  result.budget_exhausted = out_of_budget;
  return result;
}

}  // namespace alexandroff
