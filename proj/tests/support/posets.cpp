#include "posets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace testing {

using alexandroff::ElementSet;
using alexandroff::Pair;

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

namespace {

Poset from_masks(const std::vector<Mask>& up) {
  const std::size_t n = up.size();
  std::vector<ElementSet> sets(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (up[a] >> b & 1) sets[a].insert(b);
  return Poset::from_up_sets(letters(n), std::move(sets));
}

// Relation as an n*n bit string under a relabelling; the minimum over all
// permutations identifies the isomorphism class.
std::uint64_t encode(const std::vector<Mask>& up, const std::vector<std::size_t>& perm) {
  const std::size_t n = up.size();
  std::uint64_t code = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) code = code << 1 | (up[perm[a]] >> perm[b] & 1);
  return code;
}

std::uint64_t canonical_code(const std::vector<Mask>& up) {
  std::vector<std::size_t> perm(up.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, encode(up, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Poset> all_posets(std::size_t n) {
  if (n > 6) throw std::invalid_argument("all_posets: n must be at most 6");
  // Every finite poset has a natural labelling, so it suffices to close
  // relations that only relate i to larger j.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Poset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<Mask> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = Mask{1} << i;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (bits >> s & 1) up[slots[s].first] |= Mask{1} << slots[s].second;
    // Only transitive relations are kept; closures are reached from themselves.
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if ((up[a] >> b & 1) && (up[b] & ~up[a])) transitive = false;
    if (!transitive) continue;
    if (seen.insert(canonical_code(up)).second) out.push_back(from_masks(up));
  }
  return out;
}

std::vector<Poset> all_posets_up_to(std::size_t max_n) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& p : all_posets(n)) out.push_back(std::move(p));
  return out;
}

Poset chain(std::size_t n) {
  std::vector<Mask> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<Mask>(((std::uint64_t{1} << n) - 1) & ~((std::uint64_t{1} << i) - 1));
  return from_masks(up);
}

Poset antichain(std::size_t n) {
  std::vector<Mask> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = Mask{1} << i;
  return from_masks(up);
}

Poset v_poset() {
  std::vector<ElementSet> up{ElementSet(3, {0, 1, 2}), ElementSet(3, {1}), ElementSet(3, {2})};
  return Poset::from_up_sets({"r", "a", "b"}, std::move(up));
}

Poset random_poset(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(perm[i], perm[j]);
  return alexandroff::make_poset(pairs, n, letters(n));
}

Preorder random_preorder(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && edge(rng)) pairs.emplace_back(i, j);
  return alexandroff::saturate(pairs, n, letters(n));
}

std::vector<Mask> up_masks(const Preorder& p) {
  std::vector<Mask> up(p.size(), 0);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b)) up[a] |= Mask{1} << b;
  return up;
}

namespace oracle {

bool is_upset(const std::vector<Mask>& up, Mask s) {
  for (std::size_t a = 0; a < up.size(); ++a)
    if ((s >> a & 1) && (up[a] & ~s)) return false;
  return true;
}

Mask down_closure(const std::vector<Mask>& up, Mask s) {
  Mask out = 0;
  for (std::size_t a = 0; a < up.size(); ++a)
    if (up[a] & s) out |= Mask{1} << a;
  return out;
}

std::vector<Mask> upsets(const Preorder& p) {
  auto up = up_masks(p);
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << p.size()); ++s)
    if (is_upset(up, s)) out.push_back(s);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  return out;
}

Mask heyting(const Preorder& p, Mask u, Mask v) {
  Mask best = 0;
  for (Mask w : upsets(p))
    if ((w & u & ~v) == 0) best |= w;
  return best;
}

std::size_t width(const Preorder& p) {
  std::size_t best = 0;
  const std::size_t n = p.size();
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool anti = true;
    for (std::size_t a = 0; a < n && anti; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && (s >> a & 1) && (s >> b & 1) && p.leq(a, b)) anti = false;
    if (anti) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

std::size_t height(const Preorder& p) {
  std::size_t best = 0;
  const std::size_t n = p.size();
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool chain = true;
    for (std::size_t a = 0; a < n && chain; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if ((s >> a & 1) && (s >> b & 1) && !p.leq(a, b) && !p.leq(b, a)) chain = false;
    if (chain) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

bool embeds(const Poset& pattern, const Poset& host) {
  const std::size_t k = pattern.size(), n = host.size();
  if (k > n) return false;
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), 0);
  // Every injection is the first k entries of some permutation.
  do {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (pattern.leq(a, b) != host.leq(image[a], image[b])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

std::size_t SetLattice::index(Mask s) const {
  auto it = std::find(sets.begin(), sets.end(), s);
  if (it == sets.end()) throw std::logic_error("set is not in the lattice");
  return static_cast<std::size_t>(it - sets.begin());
}

std::vector<std::vector<std::size_t>> nuclei(const SetLattice& l) {
  const std::size_t n = l.sets.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> table(n);
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) meet[a][b] = l.meet(a, b);
  auto fill = [&](auto&& self, std::size_t a) -> void {
    if (a == n) {
      for (std::size_t x = 0; x < n; ++x)
        if (table[table[x]] != table[x]) return;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (table[meet[x][y]] != meet[table[x]][table[y]]) return;
      out.push_back(table);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!l.leq(a, v)) continue;
      table[a] = v;
      self(self, a + 1);
    }
  };
  fill(fill, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> prime_filters(const SetLattice& l) {
  const std::size_t n = l.sets.size();
  if (n > 22) throw std::invalid_argument("prime_filters oracle: lattice too large");
  std::size_t bottom = 0, top = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (l.sets[a] == 0) bottom = a;
    if (std::popcount(l.sets[a]) > std::popcount(l.sets[top])) top = a;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
    auto in = [&](std::size_t a) { return (f >> a & 1) != 0; };
    if (!in(top) || in(bottom)) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (in(a) && l.leq(a, b) && !in(b)) ok = false;
        if (in(a) && in(b) && !in(l.meet(a, b))) ok = false;
        if (in(l.join(a, b)) && !in(a) && !in(b)) ok = false;
      }
    if (ok) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> classes(const Preorder& p) {
  std::vector<std::size_t> class_of(p.size());
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < p.size(); ++a) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](std::size_t r) { return p.leq(a, r) && p.leq(r, a); });
    if (it == reps.end()) {
      class_of[a] = reps.size();
      reps.push_back(a);
    } else {
      class_of[a] = static_cast<std::size_t>(it - reps.begin());
    }
  }
  return class_of;
}

}  // namespace oracle

}  // namespace testing
