#include <doctest.h>

#include <random>

#include "alexandroff/error.hpp"
#include "alexandroff/frames.hpp"
#include "alexandroff/nuclei.hpp"
#include "posets.hpp"

using namespace alexandroff;
using namespace testing;

namespace {

// Op of the 2-chain is the 3-chain 0 < m < 1 with indices 0, 1, 2.
FiniteLattice three_chain() { return UpsetFrame::build(chain(2)).lattice(); }

oracle::SetLattice set_lattice(const UpsetFrame& f) {
  oracle::SetLattice l;
  for (Element e = 0; e < f.size(); ++e) l.sets.push_back(static_cast<Mask>(f.element(e).mask()));
  return l;
}

std::vector<std::vector<std::size_t>> tables(const std::vector<Nucleus>& ns) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& j : ns) out.emplace_back(j.table.begin(), j.table.end());
  return out;
}

ElementSet fixpoint_mask(std::size_t n, std::initializer_list<std::size_t> m) { return ElementSet(n, m); }

}  // namespace

TEST_CASE("axiom checks") {
  auto l = three_chain();
  CHECK(check_nucleus(l, identity_nucleus(l).table).ok());
  CHECK(check_nucleus(l, top_nucleus(l).table).ok());

  std::vector<Element> skip{1, 2, 2};
  auto r = check_nucleus(l, skip);
  REQUIRE(r.violated);
  CHECK(*r.violated == NucleusAxiom::Idempotent);
  CHECK(r.a == 0);

  std::vector<Element> shrink{0, 0, 2};
  CHECK(*check_nucleus(l, shrink).violated == NucleusAxiom::Inflationary);

  std::vector<Element> short_table{0, 1};
  CHECK_THROWS_AS(check_nucleus(l, short_table), PreconditionError);
  std::vector<Element> out_of_range{0, 1, 7};
  CHECK_THROWS_AS(check_nucleus(l, out_of_range), PreconditionError);

  // On the V frame, x -> x ∪ {a} when x ≠ ∅ and ∅ otherwise fails only meet preservation.
  auto f = UpsetFrame::build(v_poset());
  auto vl = f.lattice();
  std::vector<Element> t{0, 1, 3, 3, 4};
  auto m = check_nucleus(vl, t);
  REQUIRE(m.violated);
  CHECK(*m.violated == NucleusAxiom::MeetPreserving);
}

TEST_CASE("nucleus enumeration examples") {
  auto one = UpsetFrame::build(chain(1)).lattice();
  auto a1 = enumerate_nuclei(one);
  CHECK(a1.size() == 2);
  CHECK(a1.cross_checked());

  auto l = three_chain();
  auto a = enumerate_nuclei(l);
  REQUIRE(a.size() == 4);
  std::vector<ElementSet> fixed;
  for (auto& j : a.nuclei()) fixed.push_back(fixpoints(l, j));
  for (auto expected : {fixpoint_mask(3, {2}), fixpoint_mask(3, {1, 2}), fixpoint_mask(3, {0, 2}), fixpoint_mask(3, {0, 1, 2})})
    CHECK(std::find(fixed.begin(), fixed.end(), expected) != fixed.end());

  CHECK(enumerate_nuclei(UpsetFrame::build(v_poset()).lattice()).size() == 8);
}

TEST_CASE("nuclei match the exhaustive map oracle") {
  for (const auto& p : all_posets_up_to(3)) {
    auto f = UpsetFrame::build(p);
    auto l = f.lattice();
    auto expected = oracle::nuclei(set_lattice(f));
    CHECK(tables(nuclei_by_fixpoint_sets(l)) == expected);
    CHECK(tables(nuclei_by_map_filter(l)) == expected);
  }
}

TEST_CASE("both enumeration methods agree on frames up to 32 elements") {
  NucleusLimits wide;
  wide.map_filter_max_frame = 32;
  std::size_t compared = 0;
  for (const auto& p : all_posets_up_to(5)) {
    auto f = UpsetFrame::build(p);
    if (f.size() > 32) continue;
    auto l = f.lattice();
    CHECK(nuclei_by_fixpoint_sets(l) == nuclei_by_map_filter(l, wide));
    ++compared;
  }
  CHECK(compared > 50);
}

TEST_CASE("map filter guard") {
  auto l = UpsetFrame::build(antichain(4)).lattice();
  CHECK_THROWS_AS(nuclei_by_map_filter(l), GuardExceeded);
  NucleusLimits tight;
  tight.max_frame = 8;
  CHECK_THROWS_AS(enumerate_nuclei(l, tight), GuardExceeded);
}

TEST_CASE("fixpoint sets") {
  auto l = three_chain();
  CHECK(nucleus_from_fixpoints(l, fixpoint_mask(3, {2})) == top_nucleus(l));
  CHECK(nucleus_from_fixpoints(l, ElementSet::full(3)) == identity_nucleus(l));
  CHECK(nucleus_from_fixpoints(l, fixpoint_mask(3, {1, 2})).table == std::vector<Element>{1, 1, 2});
  CHECK_THROWS_AS(nucleus_from_fixpoints(l, fixpoint_mask(3, {0, 1})), PreconditionError);
  CHECK(fixpoint_set_violation(l, fixpoint_mask(3, {0, 1})).has_value());
  CHECK_FALSE(fixpoint_set_violation(l, fixpoint_mask(3, {0, 2})).has_value());

  for (const auto& p : all_posets_up_to(4)) {
    auto fl = UpsetFrame::build(p).lattice();
    auto assembly = enumerate_nuclei(fl);
    for (auto& j : assembly.nuclei()) {
      auto fs = fixpoints(fl, j);
      CHECK_FALSE(fixpoint_set_violation(fl, fs).has_value());
      CHECK(nucleus_from_fixpoints(fl, fs) == j);
      CHECK(fixpoints(fl, nucleus_from_fixpoints(fl, fs)) == fs);
      CHECK(fixpoint_closure(fl, fs) == fs);
    }
  }
}

TEST_CASE("assembly meet and join examples") {
  auto l = three_chain();
  auto a = enumerate_nuclei(l);
  for (auto& j : a.nuclei()) {
    CHECK(assembly_join(l, identity_nucleus(l), j) == j);
    CHECK(assembly_meet(l, top_nucleus(l), j) == j);
  }
  auto j01 = nucleus_from_fixpoints(l, fixpoint_mask(3, {0, 2}));
  auto jm1 = nucleus_from_fixpoints(l, fixpoint_mask(3, {1, 2}));
  CHECK(assembly_join(l, j01, jm1) == top_nucleus(l));
  CHECK(assembly_meet(l, j01, jm1) == identity_nucleus(l));
}

TEST_CASE("closed and open nuclei") {
  auto l = three_chain();
  CHECK(closed_nucleus(l, l.bottom()) == identity_nucleus(l));
  CHECK(open_nucleus(l, l.top()) == identity_nucleus(l));
  CHECK(closed_nucleus(l, 1).table == std::vector<Element>{1, 1, 2});
  for (const auto& p : all_posets_up_to(4)) {
    auto fl = UpsetFrame::build(p).lattice();
    for (Element x = 0; x < fl.size(); ++x) {
      CHECK(check_nucleus(fl, closed_nucleus(fl, x).table).ok());
      CHECK(check_nucleus(fl, open_nucleus(fl, x).table).ok());
    }
  }
}

TEST_CASE("assembly structure") {
  for (const auto& p : all_posets_up_to(4)) {
    auto fl = UpsetFrame::build(p).lattice();
    auto a = enumerate_nuclei(fl);
    CHECK(a.size() == (std::size_t{1} << p.size()));
    CHECK(a[a.identity_index()] == identity_nucleus(fl));
    CHECK(a[a.top_index()] == top_nucleus(fl));
    CHECK(std::is_sorted(a.nuclei().begin(), a.nuclei().end()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < a.size(); ++k) {
        // Order reverses inclusion of fixpoint sets.
        CHECK(a.leq(i, k) == fixpoints(fl, a[k]).is_subset_of(fixpoints(fl, a[i])));
        auto m = a.meet(i, k);
        CHECK(a[m] == assembly_meet(fl, a[i], a[k]));
        auto j = a.join(i, k);
        CHECK(a.leq(i, j));
        CHECK(a.leq(k, j));
        for (std::size_t u = 0; u < a.size(); ++u)
          if (a.leq(i, u) && a.leq(k, u)) CHECK(a.leq(j, u));
      }
  }
}

TEST_CASE("assembly is boolean and spatial for finite posets") {
  for (const auto& p : all_posets_up_to(4)) {
    auto al = enumerate_nuclei(UpsetFrame::build(p).lattice()).lattice();
    CHECK(is_boolean(al));
    CHECK(is_spatial_finite(al));
  }
}

TEST_CASE("assembly dump and diagram") {
  auto a = enumerate_nuclei(three_chain());
  CHECK(a.dump() == "j0: 0 1 2\nj1: 0 2 2\nj2: 1 1 2\nj3: 2 2 2\n");
  CHECK(a.hasse_dot().find("digraph") == 0);
}
