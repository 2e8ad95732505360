#include <doctest.h>

#include <filesystem>

#include "alexandroff/error.hpp"
#include "alexandroff/genposets.hpp"
#include "alexandroff/io.hpp"
#include "alexandroff/t2detect.hpp"
#include "posets.hpp"

using namespace alexandroff;
using namespace testing;

namespace {

GenPosetPtr chain_family() { return finite(chain(3), "chain3"); }

std::vector<GenPosetPtr> catalogue() {
  return {omega(),
          omega_dual(),
          infinite_antichain(),
          binary_tree(),
          kary_tree(1),
          kary_tree(3),
          comb(),
          comb_of_combs(),
          finite(v_poset(), "v"),
          disjoint_sum({omega(), binary_tree()}),
          ordinal_sum({infinite_antichain(), omega()}),
          ordinal_sum({chain_family(), comb()})};
}

class Everything : public GenPoset {
 public:
  std::string descriptor() const override { return "everything"; }
  bool accepts(const Key&) const override { return true; }
  bool leq(const Key&, const Key&) const override { return true; }
  std::vector<Key> elements_up_to(std::size_t rank) const override {
    std::vector<Key> out;
    for (std::size_t i = 0; i <= rank; ++i) out.push_back(std::to_string(i));
    return out;
  }
};

// Omega with a split oracle that lies about strictness.
class LyingSplit : public GenPoset {
 public:
  std::string descriptor() const override { return "lying"; }
  bool accepts(const Key& k) const override { return omega()->accepts(k); }
  bool leq(const Key& a, const Key& b) const override { return omega()->leq(a, b); }
  std::vector<Key> elements_up_to(std::size_t rank) const override { return omega()->elements_up_to(rank); }
  bool has_splitting() const override { return true; }
  std::optional<SplitWitness> split_oracle(const Key& k) const override {
    return SplitWitness{k, k, std::to_string(std::stoul(k) + 1)};
  }
};

}  // namespace

TEST_CASE("builtin examples") {
  auto w = omega();
  CHECK(w->leq("3", "10"));
  CHECK_FALSE(w->leq("10", "3"));
  auto f = w->facts();
  CHECK(f.width_bound == std::optional<std::size_t>{1});
  CHECK(f.is_artinian == std::optional<bool>{true});
  CHECK(f.is_noetherian == std::optional<bool>{false});

  auto t = builtin("t2");
  CHECK(t->leq("0", "011"));
  CHECK_FALSE(t->leq("0", "10"));
  CHECK(t->facts().splitting_complete);

  CHECK(infinite_antichain()->facts().height_bound == std::optional<std::size_t>{1});
  CHECK(builtin("kary_tree", 3)->descriptor() == "kary:3");
  CHECK_THROWS_AS(builtin("nonsense"), ParseError);
  CHECK_THROWS_AS(kary_tree(0), PreconditionError);
  CHECK_THROWS_AS(kary_tree(37), PreconditionError);
}

TEST_CASE("truncation examples") {
  auto t = truncate(*binary_tree(), 2);
  CHECK(t.size() == 7);
  CHECK(height(t) == 3);
  CHECK(width(t) == 4);

  auto w = truncate(*omega(), 4);
  CHECK(w.size() == 5);
  CHECK(is_chain(w));

  auto a = truncate(*infinite_antichain(), 3);
  CHECK(a.size() == 4);
  CHECK(is_antichain(a));

  CHECK_THROWS_AS(truncate(*binary_tree(), 12, 100), GuardExceeded);
  CHECK_THROWS_AS(truncate(Everything(), 2), PresentationError);
}

TEST_CASE("truncations are nested posets") {
  for (const auto& g : catalogue()) {
    CAPTURE(g->descriptor());
    for (std::size_t r = 0; r < 5; ++r) {
      auto small = truncate(*g, r);
      auto big = truncate(*g, r + 1);
      CHECK(small.is_antisymmetric());
      for (std::size_t i = 0; i < small.size(); ++i) {
        auto bi = big.index_of(small.name(i));
        REQUIRE(bi.has_value());
        for (std::size_t j = 0; j < small.size(); ++j) {
          auto bj = big.index_of(small.name(j));
          CHECK(small.leq(i, j) == big.leq(*bi, *bj));
          CHECK(small.leq(i, j) == g->leq(small.name(i), small.name(j)));
        }
      }
    }
  }
}

TEST_CASE("binary tree truncation matches the internal tree") {
  for (std::size_t d = 0; d <= 5; ++d) {
    auto t = truncate(*binary_tree(), d);
    auto internal = binary_tree_poset(d);
    REQUIRE(t.size() == internal.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        CHECK(t.leq(i, j) == internal.leq(t2_heap_index(t.name(i)), t2_heap_index(t.name(j))));
  }
}

TEST_CASE("split examples") {
  auto w = split(*binary_tree(), "01");
  REQUIRE(w);
  CHECK(*w == SplitWitness{"01", "010", "011"});
  CHECK_FALSE(split(*omega(), "3"));
  auto k = split(*kary_tree(3), "");
  REQUIRE(k);
  CHECK(*k == SplitWitness{"", "0", "1"});
  CHECK(*split(*comb(), "x0") == SplitWitness{"x0", "x1", "y0"});
  CHECK_FALSE(split(*comb(), "y2"));
  CHECK_THROWS_AS(split(LyingSplit(), "2"), PresentationError);
}

TEST_CASE("complete splits have no common upper bound in truncations") {
  std::vector<std::pair<GenPosetPtr, std::size_t>> families{
      {binary_tree(), 6}, {kary_tree(3), 4}, {comb(), 10}, {comb_of_combs(), 6}};
  for (auto& [g, rank] : families) {
    CAPTURE(g->descriptor());
    REQUIRE(g->facts().splitting_complete);
    auto keys = g->elements_up_to(rank);
    std::size_t witnesses = 0;
    for (const auto& x : keys) {
      auto w = split(*g, x);
      if (!w) continue;
      ++witnesses;
      CHECK(g->leq(x, w->left));
      CHECK(g->leq(x, w->right));
      CHECK(w->left != w->right);
      for (const auto& z : keys) CHECK_FALSE((g->leq(w->left, z) && g->leq(w->right, z)));
    }
    CHECK(witnesses > 0);
  }
}

TEST_CASE("refutation examples") {
  auto up = refute_noetherian(*omega(), 10);
  REQUIRE(up);
  std::vector<Key> expected;
  for (int i = 0; i <= 10; ++i) expected.push_back(std::to_string(i));
  CHECK(*up == expected);

  CHECK_FALSE(refute_artinian(*omega(), 1));
  CHECK_FALSE(refute_artinian(*omega(), 5));

  auto down = refute_artinian(*omega_dual(), 5);
  REQUIRE(down);
  CHECK(down->size() == 6);
  for (std::size_t i = 0; i + 1 < down->size(); ++i) {
    CHECK(omega_dual()->leq((*down)[i + 1], (*down)[i]));
    CHECK_FALSE(omega_dual()->leq((*down)[i], (*down)[i + 1]));
  }
  CHECK_FALSE(refute_noetherian(*infinite_antichain(), 1));
  CHECK(refute_noetherian(*binary_tree(), 6));
}

TEST_CASE("declared facts are never refuted") {
  for (const auto& g : catalogue()) {
    CAPTURE(g->descriptor());
    auto f = g->facts();
    for (std::size_t budget = 0; budget <= 50; ++budget) {
      if (f.is_noetherian == std::optional<bool>{true}) CHECK_FALSE(refute_noetherian(*g, budget));
      if (f.is_artinian == std::optional<bool>{true}) CHECK_FALSE(refute_artinian(*g, budget));
    }
    for (std::size_t r = 0; r <= 4; ++r) {
      auto t = truncate(*g, r);
      if (f.width_bound) CHECK(width(t) <= *f.width_bound);
      if (f.height_bound) CHECK(height(t) <= *f.height_bound);
    }
  }
}

TEST_CASE("family descriptors") {
  CHECK(parse_family("t2")->descriptor() == "t2");
  CHECK(parse_family("omega-dual")->leq("5", "2"));
  CHECK(parse_family("kary:4")->accepts("3"));
  CHECK_FALSE(parse_family("kary:2")->accepts("2"));
  CHECK(parse_family("disjoint(omega,t2)")->descriptor() == "disjoint(omega,t2)");
  CHECK(parse_family("ordinal(antichain,omega)")->facts().width_bound == std::nullopt);
  CHECK_THROWS_AS(parse_family("kary:0"), Error);
  CHECK_THROWS_AS(parse_family("bogus"), ParseError);
  CHECK_THROWS_AS(parse_family("disjoint(omega"), ParseError);

  auto dir = std::filesystem::temp_directory_path() / "alexandroff_family_test";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "v.json", poset_to_json(v_poset()));
  auto g = parse_family("file:" + (dir / "v.json").string());
  CHECK(g->finite_size() == std::optional<std::size_t>{3});
  CHECK(g->leq("r", "a"));
  CHECK(truncate(*g, 0) == v_poset());
  std::filesystem::remove_all(dir);
}

TEST_CASE("round trip through descriptors") {
  for (const auto& g : catalogue()) {
    if (g->descriptor() == "v" || g->descriptor().find("chain3") != std::string::npos) continue;
    CAPTURE(g->descriptor());
    auto back = parse_family(g->descriptor());
    CHECK(back->descriptor() == g->descriptor());
    CHECK(truncate(*back, 3) == truncate(*g, 3));
  }
}
