#include <doctest.h>

#include <random>

#include "alexandroff/error.hpp"
#include "alexandroff/frames.hpp"
#include "alexandroff/nuclei.hpp"
#include "alexandroff/spectra.hpp"
#include "posets.hpp"

using namespace alexandroff;
using namespace testing;

namespace {

oracle::SetLattice set_lattice(const UpsetFrame& f) {
  oracle::SetLattice l;
  for (Element e = 0; e < f.size(); ++e) l.sets.push_back(static_cast<Mask>(f.element(e).mask()));
  return l;
}

std::vector<std::uint64_t> masks(const std::vector<ElementSet>& sets) {
  std::vector<std::uint64_t> out;
  for (auto& s : sets) out.push_back(s.mask());
  std::sort(out.begin(), out.end());
  return out;
}

Element by_mask(const UpsetFrame& f, Mask m) { return f.index_of(ElementSet::from_mask(f.base().size(), m)); }

}  // namespace

TEST_CASE("prime filter examples") {
  auto two = UpsetFrame::build(chain(2));
  CHECK(prime_filters(two.lattice()).size() == 2);

  auto v = UpsetFrame::build(v_poset());
  auto x = prime_filters(v.lattice());
  REQUIRE(x.size() == 3);
  // {V}, {{a},{a,b},V}, {{b},{a,b},V} over the frame indices 0:{} 1:{a} 2:{b} 3:{a,b} 4:V
  std::vector<std::uint64_t> expected{0b10000, 0b11010, 0b11100};
  std::sort(expected.begin(), expected.end());
  CHECK(masks(x.points()) == expected);

  auto one = UpsetFrame::build(chain(1)).lattice();
  auto single = prime_filters(one);
  REQUIRE(single.size() == 1);
  CHECK(single.point(0) == ElementSet(2, {1}));

  CHECK_THROWS_AS(prime_filters(diamond_m3()), NotDistributive);
}

TEST_CASE("prime filters agree with subset search") {
  for (const auto& p : all_posets_up_to(4)) {
    auto f = UpsetFrame::build(p);
    auto l = f.lattice();
    auto expected = oracle::prime_filters(set_lattice(f));
    std::sort(expected.begin(), expected.end());
    CHECK(masks(prime_filters(l).points()) == expected);
    CHECK(masks(prime_filters_brute_force(l)) == expected);
    auto x = prime_filters(l);
    for (const auto& pt : x.points()) CHECK(is_prime_filter(l, pt));
  }
}

TEST_CASE("eta is a lattice embedding") {
  auto v = UpsetFrame::build(v_poset());
  auto vl = v.lattice();
  auto vx = prime_filters(vl);
  auto eps = epsilon(v, vx);
  CHECK(vx.eta(vl.bottom()).empty());
  CHECK(vx.eta(vl.top()) == ElementSet::full(3));
  CHECK(vx.eta(by_mask(v, 0b010)) == ElementSet(3, {eps[1]}));

  for (const auto& p : all_posets_up_to(5)) {
    auto f = UpsetFrame::build(p);
    if (f.size() > 32) continue;
    auto l = f.lattice();
    auto x = prime_filters(l);
    for (Element a = 0; a < l.size(); ++a)
      for (Element b = 0; b < l.size(); ++b) {
        CHECK(x.eta(l.meet(a, b)) == (x.eta(a) & x.eta(b)));
        CHECK(x.eta(l.join(a, b)) == (x.eta(a) | x.eta(b)));
        CHECK(l.leq(a, b) == x.eta(a).is_subset_of(x.eta(b)));
        if (a != b) CHECK(x.eta(a) != x.eta(b));
      }
  }
}

TEST_CASE("epsilon examples") {
  auto two = UpsetFrame::build(chain(2));
  auto x = prime_filters(two.lattice());
  auto eps = epsilon(two, x);
  // Frame indices: 0 = {}, 1 = {b}, 2 = {a,b}.
  CHECK(x.point(eps[1]) == ElementSet(3, {1, 2}));
  CHECK(x.point(eps[0]) == ElementSet(3, {2}));

  auto one = UpsetFrame::build(chain(1));
  CHECK(epsilon(one, prime_filters(one.lattice())) == std::vector<std::size_t>{0});

  auto v = UpsetFrame::build(v_poset());
  CHECK(epsilon_is_order_isomorphism(v, prime_filters(v.lattice())));
}

TEST_CASE("epsilon is an order isomorphism") {
  std::mt19937 rng(37);
  std::vector<Poset> posets = all_posets_up_to(5);
  for (int i = 0; i < 30; ++i) posets.push_back(random_poset(rng, 1 + rng() % 8));
  for (const auto& p : posets) {
    auto f = UpsetFrame::build(p);
    auto x = prime_filters(f.lattice());
    REQUIRE(x.size() == p.size());
    auto eps = epsilon(f, x);
    for (std::size_t s = 0; s < p.size(); ++s) {
      // ε(s) = {U : s ∈ U}, evaluated directly.
      ElementSet direct(f.size());
      for (Element u = 0; u < f.size(); ++u)
        if (f.element(u).contains(s)) direct.insert(u);
      CHECK(x.point(eps[s]) == direct);
      for (std::size_t t = 0; t < p.size(); ++t) CHECK(p.leq(s, t) == x.order().leq(eps[s], eps[t]));
    }
    CHECK(epsilon_is_order_isomorphism(f, x));
  }
}

TEST_CASE("Priestley topology on a finite spectrum is discrete") {
  for (const auto& p : all_posets_up_to(4)) {
    auto x = prime_filters(UpsetFrame::build(p).lattice());
    PriestleyTopology top(x);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << x.size()); ++s) CHECK(top.is_clopen(s));
  }
}

TEST_CASE("nuclear subsets") {
  auto two = prime_filters(UpsetFrame::build(chain(2)).lattice());
  CHECK(nuclear_subsets(two).size() == 4);
  PriestleyTopology top(two);
  CHECK(is_nuclear(two, top, ElementSet(2)));
  CHECK(nuclear_subsets(prime_filters(UpsetFrame::build(v_poset()).lattice())).size() == 8);
  for (const auto& p : all_posets_up_to(4)) {
    auto x = prime_filters(UpsetFrame::build(p).lattice());
    CHECK(nuclear_subsets(x).size() == (std::size_t{1} << p.size()));
  }
}

TEST_CASE("nuclear points and the maximal point criterion") {
  auto three = prime_filters(UpsetFrame::build(chain(3)).lattice());
  CHECK(nuclear_points(three) == ElementSet::full(3));

  auto v = UpsetFrame::build(v_poset());
  auto vx = prime_filters(v.lattice());
  auto eps = epsilon(v, vx);
  CHECK(maximal(vx.order(), ElementSet::full(3)) == ElementSet(3, {eps[1], eps[2]}));
  CHECK(maximal(vx.order(), ElementSet::full(3)).is_subset_of(nuclear_points(vx)));

  for (const auto& p : all_posets_up_to(4)) {
    auto r = spatiality_via_max(prime_filters(UpsetFrame::build(p).lattice()));
    CHECK(r.spatial);
    CHECK_FALSE(r.witness);
    std::size_t nonempty_downsets = 0;
    for (auto& d : oracle::upsets(dual(p)))
      if (d) ++nonempty_downsets;
    CHECK(r.downsets_checked == nonempty_downsets);
  }
}

TEST_CASE("scattered and weakly scattered") {
  CHECK(is_scattered(chain(3)));
  CHECK(is_weakly_scattered(chain(3)));
  for (const auto& p : all_posets_up_to(5)) {
    CHECK(is_scattered(p));
    CHECK(is_weakly_scattered(p));
  }
}

TEST_CASE("front basis") {
  auto two = front_basis(chain(2));
  CHECK(std::find(two.begin(), two.end(), ElementSet(2, {0})) != two.end());
  CHECK(std::find(two.begin(), two.end(), ElementSet(2, {1})) != two.end());
  CHECK(front_basis(chain(1)) == std::vector<ElementSet>{ElementSet(1), ElementSet(1, {0})});
  for (const auto& p : all_posets_up_to(5)) {
    auto basis = front_basis(p);
    for (std::size_t x = 0; x < p.size(); ++x)
      CHECK(std::find(basis.begin(), basis.end(), ElementSet(p.size(), {x})) != basis.end());
  }
}

TEST_CASE("duality examples") {
  auto two = UpsetFrame::build(chain(2));
  auto l = two.lattice();
  auto x = prime_filters(l);
  auto eps = epsilon(two, x);
  CHECK(nucleus_of_nuclear_set(l, x, ElementSet(2)) == top_nucleus(l));
  CHECK(nucleus_of_nuclear_set(l, x, ElementSet::full(2)) == identity_nucleus(l));
  CHECK(nucleus_of_nuclear_set(l, x, ElementSet(2, {eps[0]})).table == std::vector<Element>{1, 1, 2});

  auto report = duality_check(l);
  CHECK(report.ok());
  CHECK(report.to_text() ==
        "frame elements: 3\n"
        "spectrum points: 2\n"
        "nuclear subsets: 4\n"
        "nuclei: 4\n"
        "bijective: yes\n"
        "order-reversing: yes\n"
        "table:\n"
        "  {} -> j3\n"
        "  {p0} -> j1\n"
        "  {p1} -> j2\n"
        "  {p0,p1} -> j0\n"
        "verdict: PASS\n");
}

TEST_CASE("duality holds for all posets of at most four elements") {
  for (const auto& p : all_posets_up_to(4)) {
    auto r = duality_check(UpsetFrame::build(p).lattice());
    CHECK(r.bijective);
    CHECK(r.order_reversing);
    CHECK(r.failure.empty());
    CHECK(r.nuclear_subset_count == (std::size_t{1} << p.size()));
  }
}

TEST_CASE("literal checks are guarded") {
  auto x = prime_filters(UpsetFrame::build(chain(13)).lattice());
  CHECK_THROWS_AS(nuclear_subsets(x), GuardExceeded);
}
