#include "alexandroff/t2detect.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace alexandroff {

namespace {

constexpr std::size_t kMaxTreeDepth = 20;

bool is_prefix(std::string_view u, std::string_view v) { return u.size() <= v.size() && v.substr(0, u.size()) == u; }

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

void require_accepted(const GenPoset& g, const Key& k) {
  if (!g.accepts(k)) throw PreconditionError("key '" + k + "' does not belong to " + g.descriptor());
}

CheckResult failure(std::string reason, std::string a, std::string b) {
  return CheckResult{false, std::move(reason), std::make_pair(std::move(a), std::move(b))};
}

std::string show_address(std::string_view a) { return a.empty() ? "ε" : std::string(a); }

// Comb of length n from x0, reporting a decline by its spine step.
CombCertificate grow_comb(const GenPoset& g, const Key& x0, std::size_t n) {
  require_accepted(g, x0);
  CombCertificate c{g.descriptor(), {x0}, {}};
  for (std::size_t k = 0; k < n; ++k) {
    auto w = split(g, c.spine.back());
    if (!w)
      throw SplitDeclined("split declined at x" + std::to_string(k) + " = '" + c.spine.back() + "' in " + g.descriptor(),
                          "x" + std::to_string(k), k);
    c.spine.push_back(w->left);
    c.teeth.push_back(w->right);
  }
  return c;
}

struct TreeBuilder {
  const GenPoset& g;
  std::vector<Key> keys;

  // Fills the subtree at `address` with `remaining` further levels and
  // returns its keys.
  std::vector<Key> grow(const std::string& address, const Key& root, std::size_t remaining) {
    CombCertificate c;
    try {
      c = grow_comb(g, root, remaining);
    } catch (const SplitDeclined& e) {
      std::string at = address + std::string(e.step(), '0');
      throw SplitDeclined("split declined at address " + show_address(at) + " ('" + root + "' spine step " +
                              std::to_string(e.step()) + ") in " + g.descriptor(),
                          at, e.step());
    }
    std::vector<Key> all;
    std::string spine_address = address;
    for (std::size_t k = 0; k <= remaining; ++k) {
      keys[t2_heap_index(spine_address)] = c.spine[k];
      all.push_back(c.spine[k]);
      spine_address += '0';
    }
    std::vector<std::vector<Key>> subcombs;
    for (std::size_t k = 0; k < remaining; ++k) {
      std::string tooth = address + std::string(k, '0') + '1';
      subcombs.push_back(grow(tooth, c.teeth[k], remaining - k - 1));
    }
    for (std::size_t i = 0; i < subcombs.size(); ++i) {
      std::unordered_set<Key> mine(subcombs[i].begin(), subcombs[i].end());
      for (std::size_t j = i + 1; j < subcombs.size(); ++j)
        for (auto& k : subcombs[j])
          if (mine.count(k))
            throw PresentationError("combs rooted at teeth y" + std::to_string(i) + " and y" + std::to_string(j) +
                                    " of address " + show_address(address) + " share '" + k + "'");
      all.insert(all.end(), subcombs[i].begin(), subcombs[i].end());
    }
    return all;
  }
};

std::size_t parse_count(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || (s.size() > 1 && s[0] == '0'))
    throw ParseError("expected a non-negative integer, got '" + std::string(s) + "'", line);
  return v;
}

// Reads a quoted string at the start of `s`, advancing past it.
std::string unquote(std::string_view& s, std::size_t line) {
  if (s.empty() || s[0] != '"') throw ParseError("expected '\"'", line);
  std::string out;
  std::size_t i = 1;
  for (; i < s.size() && s[i] != '"'; ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i == s.size()) break;
    switch (s[i]) {
      case '"': out += '"'; break;
      case '\\': out += '\\'; break;
      case 'n': out += '\n'; break;
      default: throw ParseError(std::string("unknown escape '\\") + s[i] + "'", line);
    }
  }
  if (i >= s.size()) throw ParseError("unterminated string", line);
  s.remove_prefix(i + 1);
  return out;
}

std::string expect_field(std::string_view line, std::string_view field, std::size_t number) {
  std::string head = std::string(field) + " ";
  if (!line.starts_with(head) || line.size() == head.size())
    throw ParseError("expected '" + std::string(field) + " <value>'", number);
  return std::string(line.substr(head.size()));
}

std::string comb_address(std::size_t slot) { return (slot % 2 ? "y" : "x") + std::to_string(slot / 2); }

struct Kinds {
  std::string operator()(const FiniteCarrier&) const { return "FiniteCarrier"; }
  std::string operator()(const WidthBound&) const { return "WidthBound"; }
  std::string operator()(const HeightBound&) const { return "HeightBound"; }
  std::string operator()(const NoetherianFact&) const { return "NoetherianFact"; }
  std::string operator()(const T2Certificate&) const { return "T2Certificate"; }
  std::string operator()(const BudgetExhausted&) const { return "BudgetExhausted"; }
};

}  // namespace

std::size_t t2_address_count(std::size_t depth) {
  if (depth > kMaxTreeDepth) throw GuardExceeded("tree depth " + std::to_string(depth) + " is too large", kMaxTreeDepth);
  return (std::size_t{2} << depth) - 1;
}

std::string t2_address(std::size_t heap_index) {
  const std::size_t len = std::bit_width(heap_index + 1) - 1;
  const std::size_t value = heap_index + 1 - (std::size_t{1} << len);
  std::string out(len, '0');
  for (std::size_t i = 0; i < len; ++i)
    if (value >> (len - 1 - i) & 1) out[i] = '1';
  return out;
}

std::size_t t2_heap_index(std::string_view address) {
  if (address.size() > kMaxTreeDepth) throw PreconditionError("address '" + std::string(address) + "' is too long");
  std::size_t value = 0;
  for (char c : address) {
    if (c != '0' && c != '1') throw PreconditionError("address '" + std::string(address) + "' is not a binary string");
    value = value * 2 + (c == '1');
  }
  return (std::size_t{1} << address.size()) - 1 + value;
}

std::vector<std::string> t2_addresses(std::size_t depth) {
  std::vector<std::string> out;
  const std::size_t n = t2_address_count(depth);
  for (std::size_t i = 0; i < n; ++i) out.push_back(t2_address(i));
  return out;
}

Poset binary_tree_poset(std::size_t depth) {
  auto addresses = t2_addresses(depth);
  const std::size_t n = addresses.size();
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (is_prefix(addresses[a], addresses[b])) up[a].insert(b);
  addresses[0] = "ε";
  return Poset::from_up_sets(std::move(addresses), std::move(up));
}

CombCertificate build_comb(const GenPoset& g, const Key& x0, std::size_t n) {
  auto c = grow_comb(g, x0, n);
  if (auto check = verify_comb(c, g); !check) throw PresentationError("comb from '" + x0 + "': " + check.reason);
  return c;
}

CheckResult verify_comb(const CombCertificate& c, const GenPoset& g) {
  if (c.spine.size() != c.teeth.size() + 1) throw PreconditionError("a comb has one more spine point than teeth");
  for (auto& k : c.spine) require_accepted(g, k);
  for (auto& k : c.teeth) require_accepted(g, k);
  auto less = [&](const Key& a, const Key& b) { return g.leq(a, b) && !g.leq(b, a); };
  auto comparable = [&](const Key& a, const Key& b) { return g.leq(a, b) || g.leq(b, a); };
  const std::size_t n = c.teeth.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!less(c.spine[i], c.spine[i + 1]))
      return failure("spine is not strictly increasing at x" + std::to_string(i), "x" + std::to_string(i),
                     "x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i)
    if (!less(c.spine[i], c.teeth[i]))
      return failure("tooth y" + std::to_string(i) + " is not strictly above x" + std::to_string(i),
                     "x" + std::to_string(i), "y" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (comparable(c.teeth[i], c.teeth[j]))
        return failure("teeth y" + std::to_string(i) + " and y" + std::to_string(j) + " are comparable",
                       "y" + std::to_string(i), "y" + std::to_string(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (comparable(c.teeth[i], c.spine[j]))
        return failure("tooth y" + std::to_string(i) + " is comparable with x" + std::to_string(j),
                       "y" + std::to_string(i), "x" + std::to_string(j));
  return {};
}

T2Certificate build_t2(const GenPoset& g, const Key& root, std::size_t depth) {
  TreeBuilder builder{g, std::vector<Key>(t2_address_count(depth))};
  builder.grow("", root, depth);
  T2Certificate c{g.descriptor(), depth, std::move(builder.keys)};
  if (auto check = verify_t2(c, g); !check) throw PresentationError("tree from '" + root + "': " + check.reason);
  return c;
}

CheckResult verify_t2(const T2Certificate& c, const GenPoset& g) {
  if (c.keys.size() != t2_address_count(c.depth))
    throw PreconditionError("a depth " + std::to_string(c.depth) + " certificate needs " +
                            std::to_string(t2_address_count(c.depth)) + " keys, got " + std::to_string(c.keys.size()));
  for (auto& k : c.keys) require_accepted(g, k);
  const auto addresses = t2_addresses(c.depth);
  std::unordered_map<Key, std::size_t> first;
  for (std::size_t i = 0; i < c.keys.size(); ++i) {
    auto [it, fresh] = first.emplace(c.keys[i], i);
    if (!fresh)
      return failure("addresses " + show_address(addresses[it->second]) + " and " + show_address(addresses[i]) +
                         " both map to '" + c.keys[i] + "'",
                     addresses[it->second], addresses[i]);
  }
  for (std::size_t i = 0; i < c.keys.size(); ++i)
    for (std::size_t j = 0; j < c.keys.size(); ++j) {
      if (i == j) continue;
      bool tree = is_prefix(addresses[i], addresses[j]);
      bool poset = g.leq(c.keys[i], c.keys[j]);
      if (tree != poset)
        return failure(show_address(addresses[i]) + (tree ? " is below " : " is not below ") + show_address(addresses[j]) +
                           " in the tree but '" + c.keys[i] + (poset ? "' <= '" : "' is not <= '") + c.keys[j] + "'",
                       addresses[i], addresses[j]);
    }
  return {};
}

T2SearchResult search_t2(const Poset& p, std::size_t depth, std::uint64_t budget, std::string family) {
  auto found = embeds_subposet(binary_tree_poset(depth), p, budget);
  T2SearchResult out;
  out.budget_exhausted = found.budget_exhausted;
  out.nodes = found.nodes;
  if (!found.map) return out;
  T2Certificate c{std::move(family), depth, {}};
  for (auto i : *found.map) c.keys.push_back(p.name(i));
  auto host = finite(p);
  if (auto check = verify_t2(c, *host); !check) throw InternalError("search produced a bad embedding: " + check.reason);
  out.certificate = std::move(c);
  return out;
}

std::string to_text(const T2Certificate& c) {
  std::string out = "certificate t2\nfamily " + c.family + "\ndepth " + std::to_string(c.depth) + "\n";
  for (std::size_t i = 0; i < c.keys.size(); ++i) out += quote(t2_address(i)) + " -> " + quote(c.keys[i]) + "\n";
  return out;
}

std::string to_text(const CombCertificate& c) {
  std::string out = "certificate comb\nfamily " + c.family + "\ndepth " + std::to_string(c.length()) + "\n";
  for (std::size_t slot = 0; slot < 2 * c.teeth.size() + 1; ++slot) {
    const Key& k = slot % 2 ? c.teeth[slot / 2] : c.spine[slot / 2];
    out += quote(comb_address(slot)) + " -> " + quote(k) + "\n";
  }
  return out;
}

std::string to_text(const Certificate& c) {
  return std::visit([](const auto& x) { return to_text(x); }, c);
}

Certificate parse_certificate(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("empty certificate", 1);
  const std::string kind = expect_field(lines[0], "certificate", 1);
  if (kind != "t2" && kind != "comb") throw ParseError("unknown certificate kind '" + kind + "'", 1);
  if (lines.size() < 3) throw ParseError("certificate header is incomplete", lines.size() + 1);
  const std::string family = expect_field(lines[1], "family", 2);
  const std::size_t depth = parse_count(expect_field(lines[2], "depth", 3), 3);

  std::unordered_map<std::string, Key> entries;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    std::string_view rest = lines[i];
    const std::size_t number = i + 1;
    auto address = unquote(rest, number);
    if (!rest.starts_with(" -> ")) throw ParseError("expected ' -> '", number);
    rest.remove_prefix(4);
    auto key = unquote(rest, number);
    if (!rest.empty()) throw ParseError("trailing text after key", number);
    if (!entries.emplace(address, std::move(key)).second) throw ParseError("address '" + address + "' repeated", number);
  }
  auto take = [&](const std::string& address) {
    auto it = entries.find(address);
    if (it == entries.end()) throw ParseError("address '" + address + "' missing", lines.size() + 1);
    return std::move(it->second);
  };

  if (kind == "t2") {
    if (depth > kMaxTreeDepth) throw ParseError("depth " + std::to_string(depth) + " is too large", 3);
    T2Certificate c{family, depth, {}};
    for (auto& a : t2_addresses(depth)) c.keys.push_back(take(a));
    if (entries.size() != c.keys.size()) throw ParseError("addresses beyond the certificate depth", lines.size());
    return c;
  }
  if (entries.size() != 2 * depth + 1) throw ParseError("a comb of depth " + std::to_string(depth) + " needs " +
                                                        std::to_string(2 * depth + 1) + " points", lines.size());
  CombCertificate c{family, {}, {}};
  for (std::size_t slot = 0; slot < 2 * depth + 1; ++slot)
    (slot % 2 ? c.teeth : c.spine).push_back(take(comb_address(slot)));
  return c;
}

CertificateCheck check_certificate(std::string_view text, const GenPoset* family) {
  CertificateCheck out{parse_certificate(text), false, {}};
  out.canonical = to_text(out.certificate) == text;
  GenPosetPtr owned;
  if (!family) {
    owned = parse_family(std::visit([](const auto& c) { return c.family; }, out.certificate));
    family = owned.get();
  }
  try {
    if (auto* t = std::get_if<T2Certificate>(&out.certificate))
      out.result = verify_t2(*t, *family);
    else
      out.result = verify_comb(std::get<CombCertificate>(out.certificate), *family);
  } catch (const PreconditionError& e) {
    out.result = CheckResult{false, e.what(), std::nullopt};
  }
  if (!out.canonical && out.result.ok) out.result.reason = "document is not in canonical form";
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Spatial: return "Spatial";
    case Verdict::NotSpatial: return "NotSpatial";
    case Verdict::Unknown: return "Unknown";
  }
  return "";
}

std::string SpatialityVerdict::evidence_kind() const { return std::visit(Kinds{}, evidence); }

std::string SpatialityVerdict::to_text() const {
  std::ostringstream out;
  out << "family: " << family << "\n";
  out << "verdict: " << to_string(verdict) << "\n";
  out << "evidence: " << evidence_kind();
  if (auto* e = std::get_if<FiniteCarrier>(&evidence)) out << " " << e->size << " elements";
  if (auto* e = std::get_if<WidthBound>(&evidence)) out << " " << e->k;
  if (auto* e = std::get_if<HeightBound>(&evidence)) out << " " << e->k;
  if (auto* e = std::get_if<T2Certificate>(&evidence)) out << " depth " << e->depth << " (" << e->keys.size() << " points)";
  if (auto* e = std::get_if<BudgetExhausted>(&evidence)) {
    out << " certificate-depth " << e->certificate_depth << " search-budget " << e->search_budget << "\n";
    out << "reason: " << e->reason;
    if (e->partial) out << "\npartial: depth " << e->partial->depth << " (" << e->partial->keys.size() << " points)";
  }
  out << "\nprovenance: " << provenance << "\n";
  return out.str();
}

SpatialityVerdict verdict(const GenPoset& g, const VerdictOptions& options) {
  SpatialityVerdict v;
  v.family = g.descriptor();
  if (auto n = g.finite_size()) {
    v.verdict = Verdict::Spatial;
    v.evidence = FiniteCarrier{*n};
    v.provenance = "finite carrier of " + std::to_string(*n) + " elements cannot contain the infinite binary tree";
    return v;
  }
  const DeclaredFacts facts = g.facts();
  if (facts.width_bound) {
    v.verdict = Verdict::Spatial;
    v.evidence = WidthBound{*facts.width_bound};
    v.provenance = "declared width bound " + std::to_string(*facts.width_bound) + ": no infinite antichains";
    return v;
  }
  if (facts.height_bound) {
    v.verdict = Verdict::Spatial;
    v.evidence = HeightBound{*facts.height_bound};
    v.provenance = "declared height bound " + std::to_string(*facts.height_bound) +
                   ": the infinite binary tree has chains of every finite length";
    return v;
  }
  if (facts.is_noetherian.value_or(false)) {
    v.verdict = Verdict::Spatial;
    v.evidence = NoetherianFact{};
    v.provenance = "declared noetherian: the assembly is boolean, hence spatial";
    return v;
  }

  const std::size_t depth = options.certificate_depth;
  BudgetExhausted unknown{depth, options.search_budget, "", std::nullopt};
  v.verdict = Verdict::Unknown;

  if (g.has_splitting()) {
    auto root = g.split_root();
    if (!root) {
      unknown.reason = "split oracle offers no root";
      v.evidence = unknown;
      v.provenance = "split oracle of " + v.family;
      return v;
    }
    try {
      auto cert = build_t2(g, *root, depth);
      auto check = check_certificate(to_text(cert), &g);
      if (!check.ok()) throw InternalError("certificate fails after serialization: " + check.result.reason);
      if (facts.splitting_complete) {
        v.verdict = Verdict::NotSpatial;
        v.evidence = std::move(cert);
        v.provenance = "split oracle with declared splitting completeness; combs from root '" + *root +
                       "' reached depth " + std::to_string(depth) + "; certificate re-verified from serialized form";
        return v;
      }
      unknown.reason = "depth reached but splitting completeness is not declared";
      unknown.partial = std::move(cert);
    } catch (const SplitDeclined& e) {
      unknown.reason = e.what();
      for (std::size_t d = depth; d-- > 0 && !unknown.partial;) {
        try {
          unknown.partial = build_t2(g, *root, d);
        } catch (const SplitDeclined&) {
        }
      }
    }
    v.evidence = std::move(unknown);
    v.provenance = "split oracle of " + v.family + " from root '" + *root + "'";
    return v;
  }

  unknown.reason = "no declared fact or split oracle applies";
  v.provenance = "search of the rank " + std::to_string(options.probe_rank) + " truncation";
  try {
    Poset shadow = truncate(g, options.probe_rank);
    auto found = search_t2(shadow, std::min(depth, options.probe_rank), options.search_budget, v.family);
    unknown.partial = std::move(found.certificate);
    if (found.budget_exhausted) unknown.reason += "; truncation search ran out of budget";
  } catch (const GuardExceeded& e) {
    unknown.reason += std::string("; truncation skipped: ") + e.what();
  }
  v.evidence = std::move(unknown);
  return v;
}

SpatialityVerdict verdict(const Preorder& p, const VerdictOptions& options) {
  return verdict(*finite(skeleton(p).poset, "skeleton"), options);
}

}  // namespace alexandroff
