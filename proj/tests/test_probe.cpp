#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcat/literal.hpp"
#include "dcat/probe.hpp"

using namespace dcat;

namespace {

const PosetSpec SD(Kind::TypeD, {"t0"}, -4, 6);
const PosetSpec SA(Kind::TypeA, {"t0"}, -4, 6);
const PosetSpec SA2(Kind::TypeA, {"t0", "t1"}, -3, 3);

IndClass A(long a, long b) { return IndClass::A({0, a}, {0, b}); }
IndClass B(long a, long b) { return IndClass::B({0, a}, {0, b}); }
IndClass A1(long b) { return IndClass::A1({0, b}); }
IndClass A2(long b) { return IndClass::A2({0, b}); }
IndClass QS(long p) { return IndClass::A({0, p}, {0, p}); }

}  // namespace

TEST_CASE("probe sets of the four families") {
  Model ma(SA), md(SD), m2(SA2);
  using V = std::vector<IndObj>;
  // interval: one probe at each end, the left one a shift down
  CHECK(phi_o(ma, IndObj{A(0, 2), 0}) ==
        V{IndObj{QS(-1), -1}, IndObj{QS(2), 0}});
  CHECK(phi_o(md, IndObj{A(0, 2), 0}) ==
        V{IndObj{QS(-1), -1}, IndObj{QS(2), 0}});
  // lines: a single probe at the endpoint
  CHECK(phi_o(md, IndObj{A1(2), 0}) == V{IndObj{QS(2), 0}});
  CHECK(phi_o(md, IndObj{A2(2), 1}) == V{IndObj{QS(2), 1}});
  // doubled interval: both probes at the same shift
  CHECK(phi_o(md, IndObj{B(0, 2), 0}) == V{IndObj{QS(0), 0}, IndObj{QS(2), 0}});
  // two-fiber interval
  CHECK(phi_o(m2, IndObj{IndClass::A({0, 1}, {1, -1}), 0}) ==
        V{IndObj{IndClass::A({0, 0}, {0, 0}), -1},
          IndObj{IndClass::A({1, -1}, {1, -1}), 0}});
  // probes must stay in the window
  CHECK_THROWS_AS(phi_o(ma, IndObj{A(0, 2), -2}), WindowExceeded);
}

TEST_CASE("identify inverts the probe map") {
  Model ma(SA), md(SD);
  using V = std::vector<IndObj>;
  CHECK(identify(ma, phi_o(ma, IndObj{A(0, 2), 0})) == V{IndObj{A(0, 2), 0}});
  CHECK(identify(md, phi_o(md, IndObj{B(0, 2), 0})) == V{IndObj{B(0, 2), 0}});
  // the two lines share a probe set: a genuine two-element fiber
  CHECK(identify(md, phi_o(md, IndObj{A1(2), 0})) ==
        V{IndObj{A1(2), 0}, IndObj{A2(2), 0}});
  // the same singleton over A_L identifies nothing
  CHECK(identify(ma, V{IndObj{QS(2), 0}}).empty());
}

TEST_CASE("wings probing a component") {
  using C = ComponentId;
  CHECK(phi_c(C{C::Wing, 0, 0, 0}) ==
        std::vector<C>{C{C::Wing, 0, 0, -1}, C{C::Wing, 0, 0, 0}});
  CHECK(phi_c(C{C::BandA, 0, 1, 0}) ==
        std::vector<C>{C{C::Wing, 0, 0, -1}, C{C::Wing, 1, 0, 0}});
  CHECK(phi_c(C{C::DWing, 0, 0, 0}) == std::vector<C>{C{C::Wing, 0, 0, 0}});
}

TEST_CASE("cone reconstruction from probes") {
  Model ma(SA), md(SD);
  FieldChoice q;
  auto lit = [](const PosetSpec& s, const DObj& d) { return to_literal(s, d); };
  // triangle y -> M -> x -> y[1] recovered without linear algebra
  CHECK(lit(SA, cone_by_probing(ma, IndObj{A(-1, 1), 1}, IndObj{A(0, 3), 1})) ==
        "A[(t0,-1),(t0,3)]@1 + A[(t0,0),(t0,1)]@1");
  // degenerate almost split case: both summands from one fiber
  CHECK(lit(SA, cone_by_probing(ma, IndObj{A(0, 2), 0}, IndObj{A(1, 3), 0})) ==
        "A[(t0,0),(t0,3)] + A[(t0,1),(t0,2)]");
  CHECK(lit(SD, cone_by_probing(md, IndObj{B(0, 2), 0}, IndObj{B(1, 3), 0})) ==
        "B[(t0,0),(t0,3)] + B[(t0,1),(t0,2)]");
  // agreement with the oracle-backed cone
  auto pm = cone_by_probing(ma, IndObj{A(-1, 1), 1}, IndObj{A(0, 3), 1});
  auto cm = cone(ma, q, IndObj{A(-1, 1), 0}, IndObj{A(0, 3), 1});
  CHECK(pm == cm);
}

TEST_CASE("probing refuses out-of-contract inputs") {
  Model md(SD);
  // ZD-infinity peripherals are excluded by contract
  CHECK_THROWS_AS(cone_by_probing(md, IndObj{A1(0), 0}, IndObj{A2(1), 0}),
                  ModelError);
  // endpoints must sit at the same shift
  CHECK_THROWS_AS(
      cone_by_probing(md, IndObj{A(0, 2), 0}, IndObj{A(1, 3), 1}),
      ModelError);
  // zero hom: no triangle to reconstruct
  CHECK_THROWS_AS(
      cone_by_probing(md, IndObj{A(0, 1), 0}, IndObj{A(0, 3), 0}),
      ModelError);
}
