#include "alexandroff/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "alexandroff/error.hpp"

namespace alexandroff {

namespace {

using json = nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

std::vector<Pair> read_pairs(const json& arr, const std::unordered_map<std::string, std::size_t>& index, const char* field) {
  if (!arr.is_array()) throw ParseError(std::string("field '") + field + "' must be a list of label pairs");
  std::vector<Pair> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& p = arr[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw ParseError(std::string("entry ") + std::to_string(i) + " of '" + field + "' is not a pair of labels");
    auto a = index.find(p[0].get<std::string>());
    auto b = index.find(p[1].get<std::string>());
    if (a == index.end()) throw ParseError("unknown label '" + p[0].get<std::string>() + "' in '" + field + "'");
    if (b == index.end()) throw ParseError("unknown label '" + p[1].get<std::string>() + "' in '" + field + "'");
    out.emplace_back(a->second, b->second);
  }
  return out;
}

}  // namespace

OrderDocument parse_order_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw ParseError("top level must be an object", 1);
  if (!doc.contains("elements")) throw ParseError("missing field 'elements'");
  const auto& elements = doc["elements"];
  if (!elements.is_array()) throw ParseError("field 'elements' must be a list of labels");

  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& e : elements) {
    if (!e.is_string()) throw ParseError("element labels must be strings");
    auto label = e.get<std::string>();
    if (label.empty()) throw ParseError("element labels must be non-empty");
    if (!index.emplace(label, names.size()).second) throw ParseError("duplicate element label '" + label + "'");
    names.push_back(std::move(label));
  }

  const bool has_covers = doc.contains("covers"), has_le = doc.contains("le");
  if (has_covers && has_le) throw ParseError("a document may carry 'covers' or 'le', not both");
  if (!has_covers && !has_le) throw ParseError("missing field 'covers' or 'le'");
  for (const auto& [key, _] : doc.items())
    if (key != "elements" && key != "covers" && key != "le") throw ParseError("unknown field '" + key + "'");

  OrderDocument out;
  std::vector<Pair> pairs;
  if (has_le) {
    out.kind = RelationKind::Le;
    pairs = read_pairs(doc["le"], index, "le");
  } else {
    out.kind = RelationKind::Covers;
    pairs = read_pairs(doc["covers"], index, "covers");
  }
  const std::size_t n = names.size();
  out.order = saturate(pairs, n, std::move(names));
  if (out.kind == RelationKind::Covers && !out.order.is_antisymmetric())
    throw RelationError("'covers' contains a cycle, so it is not the Hasse relation of a poset");
  return out;
}

OrderDocument load_order_document(const std::filesystem::path& path) { return parse_order_document(read_text_file(path)); }

Poset parse_poset(std::string_view text) { return Poset::from_preorder(parse_order_document(text).order); }
Poset load_poset(const std::filesystem::path& path) { return parse_poset(read_text_file(path)); }

std::string poset_to_json(const Poset& p) {
  auto cs = covers(p);
  std::sort(cs.begin(), cs.end());
  std::string out = "{\n  \"elements\": " + json(p.names()).dump() + ",\n  \"covers\": [";
  for (std::size_t i = 0; i < cs.size(); ++i)
    out += (i ? ", " : "") + json::array({p.name(cs[i].first), p.name(cs[i].second)}).dump();
  return out + "]\n}\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace alexandroff
