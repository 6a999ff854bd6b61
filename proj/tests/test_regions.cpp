#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexcount/regions.hpp"

using namespace hexcount;

namespace {

RegionSpec spec(RegionKind k, std::vector<long> p) { return RegionSpec{k, std::move(p)}; }

MarkSet nw_marks(RegionKind k, std::vector<long> p) {
  return marks(spec(k, std::move(p)), {Cut::northwestern});
}

MarkSet both_marks(RegionKind k, std::vector<long> p) {
  return marks(spec(k, std::move(p)), {Cut::northwestern, Cut::eastern});
}

}  // namespace

TEST_CASE("unit hexagon cells") {
  Region r = build_region(spec(RegionKind::hex, {1, 1, 1}));
  CHECK(r.size() == 6);
  CHECK(balance(r) == Balance{3, 3});
}

TEST_CASE("hexagon balance is ab+bc+ca on each side") {
  Region r = build_region(spec(RegionKind::hex, {2, 3, 4}));
  CHECK(balance(r) == Balance{26, 26});
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      for (long c = 0; c <= 3; ++c) {
        Balance bal = balance(build_region(spec(RegionKind::hex, {a, b, c})));
        CHECK(bal.up_count == a * b + b * c + c * a);
        CHECK(bal.up_count == bal.down_count);
      }
}

TEST_CASE("empty and degenerate regions") {
  Region empty = build_region(spec(RegionKind::hex, {0, 0, 0}));
  CHECK(empty.empty());
  CHECK(balance(empty) == Balance{0, 0});
  // H(1,0,1) degenerates to a single lozenge
  CHECK(build_region(spec(RegionKind::hex, {1, 0, 1})).size() == 2);
}

TEST_CASE("staircase regions stay balanced") {
  CHECK(balance(build_region(spec(RegionKind::h3, {5, 5, 5}))).up_count ==
        balance(build_region(spec(RegionKind::h3, {5, 5, 5}))).down_count);
  for (auto [a, b, c] : std::vector<std::array<long, 3>>{
           {3, 2, 4}, {2, 3, 4}, {4, 3, 2}, {3, 3, 3}}) {
    Balance bal = balance(build_region(spec(RegionKind::hd, {a, b, c})));
    CHECK(bal.up_count == bal.down_count);
  }
}

TEST_CASE("region cell counts after cuts") {
  // hd removes staircases of min(a,b) and min(a,c) steps: p(p-1)/2 lozenges each
  for (auto [a, b, c] : std::vector<std::array<long, 3>>{{5, 3, 8}, {3, 5, 8}}) {
    Region hex = build_region(spec(RegionKind::hex, {a, b, c}));
    Region hd = build_region(spec(RegionKind::hd, {a, b, c}));
    long p1 = std::min(a, b), p2 = std::min(a, c);
    CHECK(hd.size() == hex.size() - p1 * (p1 - 1) - p2 * (p2 - 1));
  }
}

TEST_CASE("domain violations are rejected with the constraint") {
  CHECK_THROWS_WITH_AS(build_region(spec(RegionKind::h1, {3, 2, 1})),
                       doctest::Contains("a <= b"), std::domain_error);
  CHECK_THROWS_WITH_AS(build_region(spec(RegionKind::ha, {3, 3, 3})),
                       doctest::Contains("b >= a+c-1"), std::domain_error);
  CHECK_THROWS_AS(build_region(spec(RegionKind::hn, {2, 1, 3})), std::domain_error);
  CHECK_THROWS_AS(build_region(spec(RegionKind::hex, {-1, 1, 1})), std::domain_error);
  CHECK_THROWS_AS(build_region(spec(RegionKind::r_dented, {2, 3, 5, 1})),
                  std::domain_error);  // l_1 > m
  CHECK_THROWS_AS(build_region(spec(RegionKind::r_dented, {2, 3, 1, 2})),
                  std::domain_error);  // not decreasing
  CHECK_THROWS_AS(RegionSpec::parse("nope", {1}), std::domain_error);
}

TEST_CASE("h1 northwestern marks number a") {
  for (long a = 1; a <= 4; ++a)
    for (long b = a; b <= 5; ++b) {
      MarkSet ms = nw_marks(RegionKind::h1, {a, b, 3});
      CHECK(static_cast<long>(ms.marks.size()) == a);
      Region r = build_region(spec(RegionKind::h1, {a, b, 3}));
      for (const LozengePos& p : ms.marks) CHECK(r.contains(p));
    }
}

TEST_CASE("hd marks count min(a,b) northwestern + min(a,c) eastern positions") {
  // hd(5,3,8): 3 northwestern + 5 eastern marked positions
  MarkSet ms = both_marks(RegionKind::hd, {5, 3, 8});
  CHECK(ms.marks.size() == 8);
  CHECK(nw_marks(RegionKind::hd, {5, 3, 8}).marks.size() == 3);
  MarkSet east = marks(spec(RegionKind::hd, {5, 3, 8}), {Cut::eastern});
  CHECK(east.marks.size() == 5);
}

TEST_CASE("hn marks sit on both zig-zags") {
  MarkSet ms = both_marks(RegionKind::hn, {6, 3, 2});
  CHECK(ms.marks.size() == 5);  // m + y
  CHECK(nw_marks(RegionKind::hn, {6, 3, 2}).marks.size() == 2);  // y
}

TEST_CASE("cut requests regions do not support are errors") {
  CHECK_THROWS_AS(nw_marks(RegionKind::hex, {2, 2, 2}), std::domain_error);
  CHECK_THROWS_AS(nw_marks(RegionKind::ho, {2, 3, 2}), std::domain_error);
  CHECK_THROWS_AS(both_marks(RegionKind::h1, {2, 3, 2}), std::domain_error);
}

TEST_CASE("mirror symmetry of hd") {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c) {
        Region lhs = build_region(spec(RegionKind::hd, {a, b, c}));
        Region rhs = build_region(spec(RegionKind::hd, {a, c, b}));
        CHECK(congruent_mirror(lhs, rhs));
      }
}

TEST_CASE("hexagon is invariant under cyclic parameter rotation") {
  for (auto [a, b, c] : std::vector<std::array<long, 3>>{{1, 2, 3}, {2, 2, 4}, {3, 1, 2}}) {
    Region r = build_region(spec(RegionKind::hex, {a, b, c}));
    CHECK(congruent_direct(r, build_region(spec(RegionKind::hex, {b, c, a}))));
    CHECK(congruent_direct(r, build_region(spec(RegionKind::hex, {c, a, b}))));
  }
}

TEST_CASE("h3(a,a,a) has 120-degree rotational symmetry") {
  for (long a = 1; a <= 4; ++a) {
    Region t = build_region(spec(RegionKind::h3, {a, a, a}));
    Region rot120 = rotated60(rotated60(t));
    CHECK(normalized(rot120) == normalized(t));
  }
}

TEST_CASE("region text round-trip") {
  Region r = build_region(spec(RegionKind::hn, {4, 2, 1}));
  CHECK(Region::from_text(r.to_text()) == r);
  CHECK_THROWS_AS(Region::from_text("1 2 x\n"), std::invalid_argument);
  MarkSet ms = both_marks(RegionKind::hn, {4, 2, 1});
  CHECK(!ms.to_text().empty());
}

TEST_CASE("lozenge positions") {
  LozengePos p = LozengePos::make(LozOrient::upright, 3, 5);
  CHECK(p.orient() == LozOrient::upright);
  CHECK(p.up_cell == TriCell{3, 5, Orient::up});
  CHECK(p.down_cell == TriCell{3, 4, Orient::down});
  LozengePos bad{TriCell{0, 0, Orient::up}, TriCell{5, 5, Orient::down}};
  CHECK_THROWS_AS(bad.orient(), std::invalid_argument);
}

TEST_CASE("spec names round-trip") {
  for (RegionKind k : {RegionKind::hex, RegionKind::h1, RegionKind::hd, RegionKind::ha,
                       RegionKind::ho, RegionKind::h3, RegionKind::hn,
                       RegionKind::r_dented})
    CHECK(kinds::from_name(kinds::name(k)) == k);
  CHECK(spec(RegionKind::hn, {6, 3, 2}).to_string() == "hn(6,3,2)");
}
