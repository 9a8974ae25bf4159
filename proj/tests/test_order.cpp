#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcat/order.hpp"

using namespace dcat;

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(PosetSpec(Kind::TypeA, {}, 0, 1), OrderError);
  CHECK_THROWS_AS(PosetSpec(Kind::TypeA, {"a", "a"}, 0, 1), OrderError);
  CHECK_THROWS_AS(PosetSpec(Kind::TypeA, {"a"}, 2, 1), OrderError);
  PosetSpec s(Kind::TypeA, {"u", "v"}, -3, 3);
  CHECK(s.t_count() == 2);
  CHECK(s.t_index("v") == 1);
  CHECK_THROWS_AS(s.t_index("w"), OrderError);
}

TEST_CASE("lexicographic order on L") {
  CHECK(LPoint{0, 5} < LPoint{1, -100});
  CHECK(LPoint{0, 5} < LPoint{0, 6});
  CHECK(successor(LPoint{0, 5}) == LPoint{0, 6});
  CHECK(predecessor(LPoint{1, 0}) == LPoint{1, -1});
  CHECK(step(LPoint{1, 0}, -3) == LPoint{1, -3});
}

TEST_CASE("D-order: Q1, Q2 are incomparable bottoms") {
  DPoint q1 = DPoint::q1(), q2 = DPoint::q2();
  DPoint a = DPoint::in({0, 0}), b = DPoint::in({0, 1});
  CHECK(leq(q1, q1));
  CHECK(leq(q1, a));
  CHECK(leq(q2, b));
  CHECK(!leq(q1, q2));
  CHECK(!leq(q2, q1));
  CHECK(!leq(a, q1));
  CHECK(leq(a, b));
  CHECK(!leq(b, a));
}

TEST_CASE("single-fiber truncation") {
  PosetSpec s(Kind::TypeA, {"t0"}, -4, 6);
  FinPoset p = truncate(s, {0, 0}, {0, 3}, 2);
  // margin 2 on both ends: z = -2 .. 5
  CHECK(p.size() == 8);
  CHECK(!p.has_q);
  CHECK(p.chain.front() == LPoint{0, -2});
  CHECK(p.chain.back() == LPoint{0, 5});
  CHECK(p.hasse.size() == 7);
  CHECK(p.vertex_of(LPoint{0, -2}) == 0);
  CHECK(p.vertex_of(LPoint{0, 3}) == 5);
  CHECK(!p.vertex_of(LPoint{0, 6}).has_value());
  CHECK(p.vleq(0, 7));
  CHECK(!p.vleq(7, 0));
  CHECK(is_forest(p));
}

TEST_CASE("truncation honors the z-window") {
  PosetSpec s(Kind::TypeA, {"t0"}, -4, 6);
  CHECK_THROWS_AS(truncate(s, {0, 0}, {0, 5}, 2), WindowExceeded);
  CHECK_THROWS_AS(truncate(s, {0, -3}, {0, 0}, 2), WindowExceeded);
  CHECK_THROWS_AS(truncate(s, {0, 1}, {0, 0}, 2), OrderError);
  CHECK_THROWS_AS(truncate(s, {0, 0}, {0, 1}, -1), OrderError);
  // the unchecked variant pads past the window
  FinPoset p = truncate_unchecked(s, {0, -4}, {0, 6}, 2);
  CHECK(p.chain.front() == LPoint{0, -6});
  CHECK(p.chain.back() == LPoint{0, 8});
}

TEST_CASE("multi-fiber truncation pads every seam") {
  PosetSpec s(Kind::TypeA, {"t0", "t1"}, -3, 3);
  FinPoset p = truncate(s, {0, 2}, {1, -2}, 2);
  // only the outer ends count against the window; each touched fiber is
  // padded by the margin so no class decomposition sees a seam boundary
  CHECK(p.chain.front() == LPoint{0, 0});
  CHECK(p.vertex_of(LPoint{0, 5}).has_value());   // fiber t0 runs to zhi+margin
  CHECK(p.vertex_of(LPoint{1, -5}).has_value());  // fiber t1 starts at zlo-margin
  CHECK(p.chain.back() == LPoint{1, 0});
  CHECK(p.size() == 12);
  CHECK(std::is_sorted(p.chain.begin(), p.chain.end()));
  CHECK(is_forest(p));
}

TEST_CASE("D truncation grafts the two sources onto the chain minimum") {
  PosetSpec s(Kind::TypeD, {"t0"}, -4, 6);
  FinPoset p = truncate(s, {0, 0}, {0, 1}, 2);
  CHECK(p.has_q);
  CHECK(p.chain_offset == 2);
  CHECK(p.size() == 2 + 6);
  CHECK(p.origin[0] == DPoint::q1());
  CHECK(p.origin[1] == DPoint::q2());
  CHECK(p.vertex_of(DPoint::q1()) == 0);
  CHECK(p.vertex_of(DPoint::q2()) == 1);
  CHECK(p.vertex_of(DPoint::in({0, -2})) == 2);
  REQUIRE(p.hasse.size() == 2 + 5);
  CHECK(p.hasse[0] == std::pair<int, int>{0, 2});
  CHECK(p.hasse[1] == std::pair<int, int>{1, 2});
  CHECK(p.vleq(0, 7));
  CHECK(!p.vleq(0, 1));
  CHECK(is_forest(p));
}

TEST_CASE("is_forest rejects a diamond") {
  FinPoset p;
  for (int i = 0; i < 4; ++i) p.origin.push_back(DPoint::in({0, i}));
  p.hasse = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  CHECK(!is_forest(p));
}
