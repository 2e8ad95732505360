#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "alexandroff/order.hpp"

namespace alexandroff {

// Poset / preorder documents are JSON objects:
//
//   { "elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"]] }
//   { "elements": ["a", "b"],      "le":     [["a", "b"], ["b", "a"]] }
//
// `covers` is read as the Hasse relation of a poset (its closure must be
// antisymmetric); `le` is any relation and is saturated to a preorder.
// A document must carry exactly one of the two.

enum class RelationKind { Covers, Le };

struct OrderDocument {
  Preorder order;
  RelationKind kind = RelationKind::Covers;
};

/// Throws ParseError (with a line number where one is known) on malformed
/// input and RelationError when `covers` closes up to a non-poset.
OrderDocument parse_order_document(std::string_view text);
OrderDocument load_order_document(const std::filesystem::path& path);

/// Parses and requires a poset; RelationError otherwise.
Poset parse_poset(std::string_view text);
Poset load_poset(const std::filesystem::path& path);

/// Canonical serialization: labels in index order, `covers` sorted by index.
std::string poset_to_json(const Poset& p);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace alexandroff
