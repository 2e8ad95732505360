#include "alexandroff/genposets.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "alexandroff/error.hpp"
#include "alexandroff/io.hpp"

namespace alexandroff {

namespace {

constexpr std::string_view kSymbols = "0123456789abcdefghijklmnopqrstuvwxyz";

std::optional<std::size_t> parse_natural(std::string_view s) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return std::nullopt;
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<Key> naturals_up_to(std::size_t rank) {
  std::vector<Key> out;
  for (std::size_t i = 0; i <= rank; ++i) out.push_back(std::to_string(i));
  return out;
}

// omega, its dual, and the antichain share the key space {"0", "1", ...}.
class IntegerFamily final : public GenPoset {
 public:
  enum class Shape { Omega, OmegaDual, Antichain };
  explicit IntegerFamily(Shape s) : shape_(s) {}

  std::string descriptor() const override {
    switch (shape_) {
      case Shape::Omega: return "omega";
      case Shape::OmegaDual: return "omega-dual";
      case Shape::Antichain: return "antichain";
    }
    return "";
  }
  bool accepts(const Key& k) const override { return parse_natural(k).has_value(); }
  bool leq(const Key& a, const Key& b) const override {
    auto x = *parse_natural(a), y = *parse_natural(b);
    switch (shape_) {
      case Shape::Omega: return x <= y;
      case Shape::OmegaDual: return x >= y;
      case Shape::Antichain: return x == y;
    }
    return false;
  }
  std::vector<Key> elements_up_to(std::size_t rank) const override { return naturals_up_to(rank); }
  DeclaredFacts facts() const override {
    DeclaredFacts f;
    switch (shape_) {
      case Shape::Omega:
        f.width_bound = 1;
        f.is_artinian = true;
        f.is_noetherian = false;
        break;
      case Shape::OmegaDual:
        f.width_bound = 1;
        f.is_artinian = false;
        f.is_noetherian = true;
        break;
      case Shape::Antichain:
        f.height_bound = 1;
        f.is_artinian = true;
        f.is_noetherian = true;
        break;
    }
    return f;
  }

 private:
  Shape shape_;
};

class TreeFamily final : public GenPoset {
 public:
  TreeFamily(std::size_t k, std::string descriptor) : k_(k), descriptor_(std::move(descriptor)) {}

  std::string descriptor() const override { return descriptor_; }
  bool accepts(const Key& s) const override {
    return std::all_of(s.begin(), s.end(), [&](char c) {
      auto pos = kSymbols.find(c);
      return pos != std::string_view::npos && pos < k_;
    });
  }
  bool leq(const Key& a, const Key& b) const override { return a.size() <= b.size() && b.compare(0, a.size(), a) == 0; }
  std::vector<Key> elements_up_to(std::size_t rank) const override {
    std::vector<Key> out{""};
    for (std::size_t level = 0, begin = 0; level < rank; ++level) {
      std::size_t end = out.size();
      if ((end - begin) * k_ + end > kMaxTruncation * 64)
        throw GuardExceeded("tree truncation at rank " + std::to_string(rank) + " is too large", kMaxTruncation * 64);
      for (std::size_t i = begin; i < end; ++i)
        for (std::size_t c = 0; c < k_; ++c) out.push_back(out[i] + kSymbols[c]);
      begin = end;
    }
    return out;
  }
  DeclaredFacts facts() const override {
    DeclaredFacts f;
    f.is_artinian = true;
    f.is_noetherian = false;
    if (k_ == 1) f.width_bound = 1;
    f.splitting_complete = k_ >= 2;
    return f;
  }
  bool has_splitting() const override { return k_ >= 2; }
  std::optional<SplitWitness> split_oracle(const Key& s) const override {
    if (k_ < 2) return std::nullopt;
    return SplitWitness{s, s + '0', s + '1'};
  }
  std::optional<Key> split_root() const override {
    if (k_ < 2) return std::nullopt;
    return Key{};
  }

 private:
  std::size_t k_;
  std::string descriptor_;
};

class CombFamily final : public GenPoset {
 public:
  std::string descriptor() const override { return "comb"; }
  bool accepts(const Key& k) const override { return decode(k).has_value(); }
  bool leq(const Key& a, const Key& b) const override {
    auto [ta, ia] = *decode(a);
    auto [tb, ib] = *decode(b);
    if (!ta && !tb) return ia <= ib;   // spine-spine
    if (!ta && tb) return ia <= ib;    // x_i <= y_j iff i <= j
    if (ta && tb) return ia == ib;     // teeth are pairwise incomparable
    return false;                      // nothing above a tooth on the spine
  }
  std::vector<Key> elements_up_to(std::size_t rank) const override {
    std::vector<Key> out;
    for (std::size_t i = 0; i <= rank; ++i) {
      out.push_back("x" + std::to_string(i));
      if (i >= 1) out.push_back("y" + std::to_string(i - 1));
    }
    return out;
  }
  DeclaredFacts facts() const override {
    DeclaredFacts f;
    f.is_artinian = true;
    f.is_noetherian = false;
    f.splitting_complete = true;
    return f;
  }
  bool has_splitting() const override { return true; }
  std::optional<SplitWitness> split_oracle(const Key& k) const override {
    auto [tooth, i] = *decode(k);
    if (tooth) return std::nullopt;
    return SplitWitness{k, "x" + std::to_string(i + 1), "y" + std::to_string(i)};
  }
  std::optional<Key> split_root() const override { return Key{"x0"}; }

 private:
  // (is_tooth, index)
  static std::optional<std::pair<bool, std::size_t>> decode(const Key& k) {
    if (k.size() < 2 || (k[0] != 'x' && k[0] != 'y')) return std::nullopt;
    auto i = parse_natural(std::string_view(k).substr(1));
    if (!i) return std::nullopt;
    return std::make_pair(k[0] == 'y', *i);
  }
};

class CombOfCombsFamily final : public GenPoset {
 public:
  std::string descriptor() const override { return "combs"; }
  bool accepts(const Key& k) const override { return decode(k).has_value(); }
  bool leq(const Key& a, const Key& b) const override {
    auto p = *decode(a), q = *decode(b);
    if (p.size() > q.size()) return false;
    const std::size_t last = p.size() - 1;
    for (std::size_t i = 0; i < last; ++i)
      if (p[i] != q[i]) return false;
    return p[last] <= q[last];
  }
  std::vector<Key> elements_up_to(std::size_t rank) const override {
    std::vector<Key> out;
    std::function<void(const std::string&, std::size_t)> walk = [&](const std::string& prefix, std::size_t budget) {
      for (std::size_t m = 0; m <= budget; ++m) {
        std::string key = prefix + std::to_string(m);
        out.push_back(key);
        if (out.size() > kMaxTruncation * 64)
          throw GuardExceeded("comb-of-combs truncation at rank " + std::to_string(rank) + " is too large", kMaxTruncation * 64);
        if (budget >= m + 1) walk(key + ".", budget - m - 1);
      }
    };
    walk("", rank);
    return out;
  }
  DeclaredFacts facts() const override {
    DeclaredFacts f;
    f.is_artinian = true;
    f.is_noetherian = false;
    f.splitting_complete = true;
    return f;
  }
  bool has_splitting() const override { return true; }
  std::optional<SplitWitness> split_oracle(const Key& k) const override {
    auto p = *decode(k);
    auto next = p;
    ++next.back();
    return SplitWitness{k, encode(next), k + ".0"};
  }
  std::optional<Key> split_root() const override { return Key{"0"}; }

 private:
  static std::optional<std::vector<std::size_t>> decode(std::string_view k) {
    std::vector<std::size_t> out;
    while (true) {
      auto dot = k.find('.');
      auto v = parse_natural(k.substr(0, dot));
      if (!v) return std::nullopt;
      out.push_back(*v);
      if (dot == std::string_view::npos) break;
      k.remove_prefix(dot + 1);
    }
    return out;
  }
  static std::string encode(const std::vector<std::size_t>& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "." : "") + std::to_string(p[i]);
    return out;
  }
};

class FiniteFamily final : public GenPoset {
 public:
  FiniteFamily(Poset p, std::string descriptor) : poset_(std::move(p)), descriptor_(std::move(descriptor)) {
    for (std::size_t i = 0; i < poset_.size(); ++i) index_.emplace(poset_.name(i), i);
  }
  std::string descriptor() const override { return descriptor_; }
  bool accepts(const Key& k) const override { return index_.count(k) > 0; }
  bool leq(const Key& a, const Key& b) const override { return poset_.leq(index_.at(a), index_.at(b)); }
  std::vector<Key> elements_up_to(std::size_t) const override { return poset_.names(); }
  DeclaredFacts facts() const override {
    DeclaredFacts f;
    f.width_bound = width(poset_);
    f.height_bound = height(poset_);
    f.is_artinian = true;
    f.is_noetherian = true;
    return f;
  }
  std::optional<std::size_t> finite_size() const override { return poset_.size(); }

 private:
  Poset poset_;
  std::string descriptor_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Keys of sums are "<component>:<component key>".
class SumFamily final : public GenPoset {
 public:
  SumFamily(std::vector<GenPosetPtr> parts, bool ordinal) : parts_(std::move(parts)), ordinal_(ordinal) {
    if (parts_.empty()) throw PreconditionError("a sum needs at least one component");
  }

  std::string descriptor() const override {
    std::string out = ordinal_ ? "ordinal(" : "disjoint(";
    for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + parts_[i]->descriptor();
    return out + ")";
  }
  bool accepts(const Key& k) const override {
    auto d = decode(k);
    return d && parts_[d->first]->accepts(d->second);
  }
  bool leq(const Key& a, const Key& b) const override {
    auto x = *decode(a), y = *decode(b);
    if (x.first == y.first) return parts_[x.first]->leq(x.second, y.second);
    return ordinal_ && x.first < y.first;
  }
  std::vector<Key> elements_up_to(std::size_t rank) const override {
    std::vector<Key> out;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (auto& k : parts_[i]->elements_up_to(rank)) out.push_back(encode(i, k));
    return out;
  }
  DeclaredFacts facts() const override {
    DeclaredFacts f;
    std::vector<DeclaredFacts> fs;
    for (auto& p : parts_) fs.push_back(p->facts());
    auto all = [&](auto pred) { return std::all_of(fs.begin(), fs.end(), pred); };
    if (all([](const DeclaredFacts& d) { return d.width_bound.has_value(); })) {
      std::size_t w = 0;
      for (auto& d : fs) w = ordinal_ ? std::max(w, *d.width_bound) : w + *d.width_bound;
      f.width_bound = w;
    }
    if (all([](const DeclaredFacts& d) { return d.height_bound.has_value(); })) {
      std::size_t h = 0;
      for (auto& d : fs) h = ordinal_ ? h + *d.height_bound : std::max(h, *d.height_bound);
      f.height_bound = h;
    }
    auto fold = [&](std::optional<bool> DeclaredFacts::*field) -> std::optional<bool> {
      bool any_false = false, all_true = true;
      for (auto& d : fs) {
        if ((d.*field).has_value() && !*(d.*field)) any_false = true;
        if (!(d.*field).value_or(false)) all_true = false;
      }
      if (any_false) return false;
      if (all_true) return true;
      return std::nullopt;
    };
    f.is_artinian = fold(&DeclaredFacts::is_artinian);
    f.is_noetherian = fold(&DeclaredFacts::is_noetherian);
    // In an ordinal sum only the top component keeps its splits valid:
    // everything in a later component lies above both branches.
    if (ordinal_) {
      f.splitting_complete = fs.back().splitting_complete;
    } else {
      f.splitting_complete = has_splitting();
      for (std::size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i]->has_splitting() && !fs[i].splitting_complete) f.splitting_complete = false;
    }
    return f;
  }
  std::optional<std::size_t> finite_size() const override {
    std::size_t n = 0;
    for (auto& p : parts_) {
      auto s = p->finite_size();
      if (!s) return std::nullopt;
      n += *s;
    }
    return n;
  }
  bool has_splitting() const override {
    if (ordinal_) return parts_.back()->has_splitting();
    return std::any_of(parts_.begin(), parts_.end(), [](const GenPosetPtr& p) { return p->has_splitting(); });
  }
  std::optional<SplitWitness> split_oracle(const Key& k) const override {
    auto [i, inner] = *decode(k);
    if (ordinal_ && i + 1 != parts_.size()) return std::nullopt;
    auto w = parts_[i]->split_oracle(inner);
    if (!w) return std::nullopt;
    return SplitWitness{encode(i, w->base), encode(i, w->left), encode(i, w->right)};
  }
  std::optional<Key> split_root() const override {
    if (ordinal_) {
      auto r = parts_.back()->split_root();
      if (!r) return std::nullopt;
      return encode(parts_.size() - 1, *r);
    }
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i]->has_splitting())
        if (auto r = parts_[i]->split_root()) return encode(i, *r);
    return std::nullopt;
  }

 private:
  static Key encode(std::size_t i, const Key& k) { return std::to_string(i) + ":" + k; }
  std::optional<std::pair<std::size_t, Key>> decode(const Key& k) const {
    auto colon = k.find(':');
    if (colon == Key::npos) return std::nullopt;
    auto i = parse_natural(std::string_view(k).substr(0, colon));
    if (!i || *i >= parts_.size()) return std::nullopt;
    return std::make_pair(*i, k.substr(colon + 1));
  }

  std::vector<GenPosetPtr> parts_;
  bool ordinal_;
};

// Splits "a,b(c,d),e" at top-level commas.
std::vector<std::string_view> split_arguments(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in family descriptor");
    if (s[i] == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in family descriptor");
  out.push_back(s.substr(start));
  return out;
}

// Follows elements as they first appear with growing rank, extending the
// chain whenever a newcomer from a later rank than the current end lies
// strictly beyond it. One step per rank, so finite families never refute.
std::optional<std::vector<Key>> find_chain(const GenPoset& g, std::size_t budget, RefuteLimits limits, bool ascending) {
  if (budget == 0) return std::nullopt;
  std::vector<Key> chain;
  std::size_t end_rank = 0;
  std::unordered_set<Key> seen;
  for (std::size_t r = 0; r <= limits.max_rank; ++r) {
    std::vector<Key> keys;
    try {
      keys = g.elements_up_to(r);
    } catch (const GuardExceeded&) {
      return std::nullopt;
    }
    if (keys.size() > limits.max_elements) return std::nullopt;
    for (auto& k : keys) {
      if (!seen.insert(k).second) continue;
      if (chain.empty()) {
        chain.push_back(k);
        end_rank = r;
        continue;
      }
      if (r == end_rank) continue;
      const Key& end = chain.back();
      bool beyond = ascending ? g.leq(end, k) && !g.leq(k, end) : g.leq(k, end) && !g.leq(end, k);
      if (beyond) {
        chain.push_back(k);
        end_rank = r;
      }
      if (chain.size() == budget + 1) return chain;
    }
    if (chain.size() >= budget + 1) return chain;
  }
  return std::nullopt;
}

}  // namespace

GenPosetPtr omega() { return std::make_shared<IntegerFamily>(IntegerFamily::Shape::Omega); }
GenPosetPtr omega_dual() { return std::make_shared<IntegerFamily>(IntegerFamily::Shape::OmegaDual); }
GenPosetPtr infinite_antichain() { return std::make_shared<IntegerFamily>(IntegerFamily::Shape::Antichain); }
GenPosetPtr binary_tree() { return std::make_shared<TreeFamily>(2, "t2"); }

GenPosetPtr kary_tree(long k) {
  if (k < 1 || k > static_cast<long>(kSymbols.size()))
    throw PreconditionError("tree arity must be between 1 and 36, got " + std::to_string(k));
  return std::make_shared<TreeFamily>(static_cast<std::size_t>(k), "kary:" + std::to_string(k));
}

GenPosetPtr comb() { return std::make_shared<CombFamily>(); }
GenPosetPtr comb_of_combs() { return std::make_shared<CombOfCombsFamily>(); }
GenPosetPtr finite(Poset p, std::string descriptor) { return std::make_shared<FiniteFamily>(std::move(p), std::move(descriptor)); }
GenPosetPtr disjoint_sum(std::vector<GenPosetPtr> parts) { return std::make_shared<SumFamily>(std::move(parts), false); }
GenPosetPtr ordinal_sum(std::vector<GenPosetPtr> parts) { return std::make_shared<SumFamily>(std::move(parts), true); }

GenPosetPtr builtin(std::string_view name, std::optional<long> k) {
  if (name == "omega") return omega();
  if (name == "omega_dual") return omega_dual();
  if (name == "infinite_antichain") return infinite_antichain();
  if (name == "t2") return binary_tree();
  if (name == "kary_tree") {
    if (!k) throw PreconditionError("kary_tree needs an arity");
    return kary_tree(*k);
  }
  if (name == "comb") return comb();
  if (name == "comb_of_combs") return comb_of_combs();
  throw ParseError("unknown family '" + std::string(name) + "'");
}

GenPosetPtr parse_family(std::string_view d) {
  if (d == "t2") return binary_tree();
  if (d == "omega") return omega();
  if (d == "omega-dual") return omega_dual();
  if (d == "antichain") return infinite_antichain();
  if (d == "comb") return comb();
  if (d == "combs") return comb_of_combs();
  if (d.starts_with("kary:")) {
    auto s = d.substr(5);
    long k = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw ParseError("bad arity in '" + std::string(d) + "'");
    return kary_tree(k);
  }
  if (d.starts_with("file:")) {
    auto path = d.substr(5);
    return finite(load_poset(std::string(path)), std::string(d));
  }
  for (std::string_view head : {std::string_view("disjoint("), std::string_view("ordinal(")}) {
    if (d.starts_with(head)) {
      if (!d.ends_with(")")) throw ParseError("missing ')' in '" + std::string(d) + "'");
      std::vector<GenPosetPtr> parts;
      for (auto arg : split_arguments(d.substr(head.size(), d.size() - head.size() - 1))) parts.push_back(parse_family(arg));
      return head == "ordinal(" ? ordinal_sum(std::move(parts)) : disjoint_sum(std::move(parts));
    }
  }
  throw ParseError("unknown family '" + std::string(d) + "'");
}

Poset truncate(const GenPoset& g, std::size_t rank, std::size_t max_elements) {
  auto keys = g.elements_up_to(rank);
  const std::size_t n = keys.size();
  if (n > max_elements) throw GuardExceeded("truncation at rank " + std::to_string(rank) + " has " + std::to_string(n) + " elements", max_elements);
  std::unordered_set<std::string> seen;
  for (auto& k : keys) {
    if (!seen.insert(k).second) throw PresentationError("key '" + k + "' is enumerated twice");
    if (!g.accepts(k)) throw PresentationError("enumerated key '" + k + "' is rejected by the family");
  }
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.leq(keys[a], keys[b])) up[a].insert(b);
  try {
    return Poset::from_up_sets(std::move(keys), std::move(up));
  } catch (const RelationError& e) {
    throw PresentationError(g.descriptor() + " at rank " + std::to_string(rank) + ": " + e.what());
  }
}

std::optional<SplitWitness> split(const GenPoset& g, const Key& x) {
  if (!g.accepts(x)) throw PreconditionError("key '" + x + "' does not belong to " + g.descriptor());
  auto w = g.split_oracle(x);
  if (!w) return std::nullopt;
  auto bad = [&](const std::string& why) {
    return PresentationError("split witness at '" + x + "' in " + g.descriptor() + ": " + why);
  };
  if (w->base != x) throw bad("base differs from the queried key");
  if (!g.accepts(w->left) || !g.accepts(w->right)) throw bad("branch key rejected by the family");
  if (w->left == w->right) throw bad("branches coincide");
  if (!g.leq(x, w->left) || g.leq(w->left, x)) throw bad("left branch is not strictly above the base");
  if (!g.leq(x, w->right) || g.leq(w->right, x)) throw bad("right branch is not strictly above the base");
  if (g.leq(w->left, w->right) || g.leq(w->right, w->left)) throw bad("branches are comparable");
  return w;
}

std::optional<std::vector<Key>> refute_noetherian(const GenPoset& g, std::size_t budget, RefuteLimits limits) {
  return find_chain(g, budget, limits, true);
}

std::optional<std::vector<Key>> refute_artinian(const GenPoset& g, std::size_t budget, RefuteLimits limits) {
  return find_chain(g, budget, limits, false);
}

}  // namespace alexandroff
