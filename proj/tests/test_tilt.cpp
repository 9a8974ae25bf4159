#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcat/literal.hpp"
#include "dcat/tilt.hpp"

using namespace dcat;

namespace {

std::vector<std::string> lits(const PosetSpec& s, const TiltingSet& t) {
  std::vector<std::string> out;
  for (auto& e : t.elements) out.push_back(to_literal(s, e));
  return out;
}

}  // namespace

TEST_CASE("tilting set over a two-fiber A-order") {
  PosetSpec s(Kind::TypeA, {"t0", "t1"}, -3, 3);
  Model m(s);
  IndObj src{IndClass::A({1, 0}, {1, 0}), 0};
  TiltingSet t = tilting_set(m, src);
  CHECK(t.source == src);
  CHECK(t.shape == TiltShape::AShape);
  CHECK(!t.peripheral_pair);
  CHECK(lits(s, t) == std::vector<std::string>{
                          "A[(t1,0),(t1,0)]",
                          "A[(t1,-1),(t1,0)]",
                          "A[(t1,-2),(t1,0)]",
                          "A[(t1,-3),(t1,0)]",
                          "A[(t0,3),(t1,0)]",
                          "A[(t0,2),(t1,0)]",
                          "A[(t0,1),(t1,0)]",
                          "A[(t0,0),(t1,0)]",
                          "A[(t0,-1),(t1,0)]",
                          "A[(t0,-2),(t1,0)]",
                          "A[(t0,-3),(t1,0)]",
                          "A[(t1,1),(t1,2)]@1",
                          "A[(t1,1),(t1,1)]@1",
                      });
  // runs from the source up to tau(source)[1]
  CHECK(t.elements.front() == src);
  CHECK(t.elements.back() == IndObj{tau_cls(src.cls), 1});
  CHECK(is_partial_tilting(m, t.elements));

  CHECK(st_index(t, src) == 0);
  CHECK(st_index(t, IndObj{IndClass::A({0, 3}, {1, 0}), 0}) == 4);
  CHECK(!st_index(t, IndObj{IndClass::A({0, 0}, {0, 0}), 0}).has_value());
}

TEST_CASE("tilting set over a D-order ends with the incomparable pair") {
  PosetSpec s(Kind::TypeD, {"t0"}, -3, 3);
  Model m(s);
  IndObj src{IndClass::A({0, 0}, {0, 0}), 0};
  TiltingSet t = tilting_set(m, src);
  CHECK(t.shape == TiltShape::DShape);
  CHECK(lits(s, t) == std::vector<std::string>{
                          "A[(t0,0),(t0,0)]",
                          "A[(t0,-1),(t0,0)]",
                          "A[(t0,-2),(t0,0)]",
                          "A[(t0,-3),(t0,0)]",
                          "B[(t0,0),(t0,2)]",
                          "B[(t0,0),(t0,1)]",
                          "A1[(t0,0)]",
                          "A2[(t0,0)]",
                      });
  REQUIRE(t.peripheral_pair);
  CHECK(t.peripheral_pair->first == IndObj{IndClass::A1({0, 0}), 0});
  CHECK(t.peripheral_pair->second == IndObj{IndClass::A2({0, 0}), 0});
  CHECK(is_partial_tilting(m, t.elements));
  // the final two elements are mutually hom-orthogonal
  auto n = t.elements.size();
  CHECK(hom_dim(m, t.elements[n - 2], t.elements[n - 1]) == 0);
  CHECK(hom_dim(m, t.elements[n - 1], t.elements[n - 2]) == 0);
}

TEST_CASE("peripheral targets") {
  PosetSpec sd(Kind::TypeD, {"t0"}, -3, 3);
  Model md(sd);
  auto pt = peripheral_targets(md, IndObj{IndClass::A({0, 0}, {0, 0}), 0});
  REQUIRE(pt);
  CHECK(pt->first == IndObj{IndClass::A1({0, 0}), 0});
  CHECK(pt->second == IndObj{IndClass::A2({0, 0}), 0});
  PosetSpec sa(Kind::TypeA, {"t0"}, -3, 3);
  Model ma(sa);
  CHECK(!peripheral_targets(ma, IndObj{IndClass::A({0, 0}, {0, 0}), 0}));
}

TEST_CASE("source must be a quasi-simple") {
  PosetSpec s(Kind::TypeA, {"t0"}, -3, 3);
  Model m(s);
  CHECK_THROWS_AS(tilting_set(m, IndObj{IndClass::A({0, 0}, {0, 1}), 0}),
                  NotQuasiSimple);
}
