#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcat/literal.hpp"
#include "dcat/model.hpp"

using namespace dcat;

namespace {

const PosetSpec SD(Kind::TypeD, {"t0"}, -4, 6);
const PosetSpec SA(Kind::TypeA, {"t0"}, -4, 6);

IndClass A(long a, long b) { return IndClass::A({0, a}, {0, b}); }
IndClass B(long a, long b) { return IndClass::B({0, a}, {0, b}); }
IndClass A1(long b) { return IndClass::A1({0, b}); }
IndClass A2(long b) { return IndClass::A2({0, b}); }

}  // namespace

TEST_CASE("class validation") {
  CHECK_NOTHROW(validate(SD, A(0, 0)));
  CHECK_NOTHROW(validate(SD, B(0, 1)));
  CHECK_THROWS_AS(validate(SD, A(1, 0)), ModelError);    // i > j
  CHECK_THROWS_AS(validate(SD, B(1, 1)), ModelError);    // needs i < j
  CHECK_THROWS_AS(validate(SA, A1(0)), ModelError);      // no lines over A_L
  CHECK_THROWS_AS(validate(SA, B(0, 1)), ModelError);
  CHECK_THROWS_AS(validate(SA, IndClass::A({0, 0}, {1, 0})), ModelError);
}

TEST_CASE("window membership") {
  Model m(SA);
  CHECK(in_window(m, A(-4, 5)));
  CHECK(!in_window(m, A(-4, 6)));  // presentation needs j+1 inside
  CHECK(!in_window(m, A(-5, 0)));
  CHECK(in_window(m, IndObj{A(0, 0), 2}));
  CHECK(!in_window(m, IndObj{A(0, 0), 3}));
  Model d(SD);
  CHECK(in_window(d, B(-4, 5)));
  CHECK(!in_window(d, B(0, 6)));
}

TEST_CASE("heart hom dimensions (closed form)") {
  CHECK(hom_abelian(A(0, 3), A(-1, 2)) == 1);
  CHECK(hom_abelian(A(0, 3), A(1, 2)) == 0);
  CHECK(hom_abelian(A(0, 3), A1(2)) == 1);
  CHECK(hom_abelian(A(0, 3), A2(4)) == 0);
  CHECK(hom_abelian(A1(3), A(0, 2)) == 0);
  CHECK(hom_abelian(A1(3), A1(1)) == 1);
  CHECK(hom_abelian(A1(3), A2(1)) == 0);
  CHECK(hom_abelian(A1(3), B(0, 2)) == 1);
  CHECK(hom_abelian(A(0, 3), B(1, 2)) == 2);
  CHECK(hom_abelian(A(0, 3), B(1, 4)) == 1);
  CHECK(hom_abelian(B(1, 3), A(0, 2)) == 0);
  CHECK(hom_abelian(B(1, 3), A1(0)) == 1);
  CHECK(hom_abelian(B(3, 4), B(1, 2)) == 2);
  CHECK(hom_abelian(B(3, 4), B(1, 4)) == 1);
  CHECK(hom_abelian(B(3, 4), B(1, 5)) == 0);
}

TEST_CASE("translate and Serre functor") {
  CHECK(tau_cls(A(0, 2)) == A(1, 3));
  CHECK(tau_cls(B(0, 2)) == B(1, 3));
  CHECK(tau_cls(A1(0)) == A2(1));
  CHECK(tau_cls(A2(0)) == A1(1));
  CHECK(tau_inv_cls(tau_cls(A1(5))) == A1(5));
  CHECK(tau(IndObj{A(0, 2), 1}) == IndObj{A(1, 3), 1});
  CHECK(tau_inv(tau(IndObj{B(0, 2), -1})) == IndObj{B(0, 2), -1});
  CHECK(serre(IndObj{A(0, 2), 0}) == IndObj{A(1, 3), 1});
}

TEST_CASE("derived hom dimensions live in degrees 0 and 1") {
  Model m(SD);
  IndObj x{A(0, 1), 0};
  CHECK(hom_dim(m, x, IndObj{A(-1, 0), 0}) == 1);
  CHECK(hom_dim(m, x, IndObj{A(2, 3), 1}) == 1);  // Hom(y, tau x) = 1
  CHECK(hom_dim(m, x, IndObj{A(2, 3), 0}) == 0);
  CHECK(hom_dim(m, x, IndObj{A(-1, 0), 1}) == 0);
  CHECK(hom_dim(m, x, IndObj{A(-1, 0), 2}) == 0);
  CHECK(hom_dim(m, x, IndObj{A(-1, 0), -1}) == 0);
  CHECK(hom_dim(m, IndObj{A(0, 1), 2}, IndObj{A(-1, 0), 2}) == 1);
  // sum version
  DObj s = make_dobj({x, IndObj{A(0, 1), 0}});
  CHECK(hom_dim(s, make_dobj({IndObj{A(-1, 0), 0}}), m) == 2);
}

TEST_CASE("almost split middles") {
  CHECK(ar_middle(A(0, 2)) == std::vector<IndClass>{A(1, 2), A(0, 3)});
  CHECK(ar_middle(A(0, 0)) == std::vector<IndClass>{A(0, 1)});
  CHECK(ar_middle(A1(0)) == std::vector<IndClass>{B(0, 1)});
  CHECK(ar_middle(A2(0)) == std::vector<IndClass>{B(0, 1)});
  CHECK(ar_middle(B(0, 2)) == std::vector<IndClass>{B(1, 2), B(0, 3)});
  CHECK(ar_middle(B(0, 1)) == std::vector<IndClass>{A1(1), A2(1), B(0, 2)});
  CHECK(ar_middle(IndClass::A({0, 5}, {1, -5})) ==
        std::vector<IndClass>{IndClass::A({0, 6}, {1, -5}),
                              IndClass::A({0, 5}, {1, -4})});

  Model m(SA);
  Triangle t = ar_triangle(m, IndObj{A(0, 2), 0});
  CHECK(t.x == IndObj{A(1, 3), 0});
  CHECK(t.z == IndObj{A(0, 2), 0});
  CHECK(t.y == make_dobj({IndObj{A(1, 2), 0}, IndObj{A(0, 3), 0}}));
  CHECK_THROWS_AS(ar_triangle(m, IndObj{A(5, 5), 0}), WindowExceeded);
}

TEST_CASE("components and peripherality") {
  auto c1 = component_of(IndObj{A(0, 2), 1});
  CHECK(c1 == ComponentId{ComponentId::Wing, 0, 0, 1});
  CHECK(shape_of(c1) == "ZA_inf");
  auto c2 = component_of(IndObj{IndClass::A({0, 0}, {1, 2}), 0});
  CHECK(c2 == ComponentId{ComponentId::BandA, 0, 1, 0});
  CHECK(shape_of(c2) == "ZA_inf_inf");
  auto c3 = component_of(IndObj{B(0, 2), 0});
  CHECK(c3 == ComponentId{ComponentId::DWing, 0, 0, 0});
  CHECK(shape_of(c3) == "ZD_inf");
  CHECK(component_of(IndObj{A1(3), -1}) ==
        ComponentId{ComponentId::DWing, 0, 0, -1});

  CHECK(is_peripheral(IndObj{A(0, 0), 0}));
  CHECK(is_quasi_simple(IndObj{A(0, 0), 0}));
  CHECK(!is_peripheral(IndObj{A(0, 1), 0}));
  CHECK(is_peripheral(IndObj{A1(0), 0}));
  CHECK(!is_quasi_simple(IndObj{A1(0), 0}));  // peripheral but not in a wing
  CHECK(!is_peripheral(IndObj{B(0, 1), 0}));

  Model m(SA);
  // 10 quasi-simples per shift, shifts -2..2
  CHECK(quasi_simples(m).size() == 50);
}

TEST_CASE("mesh successors and sectional paths") {
  using V = std::vector<IndObj>;
  CHECK(mesh_successors(IndObj{A(0, 2), 0}) ==
        V{IndObj{A(-1, 2), 0}, IndObj{A(0, 1), 0}});
  CHECK(mesh_successors(IndObj{A(0, 0), 0}) == V{IndObj{A(-1, 0), 0}});
  CHECK(mesh_successors(IndObj{B(0, 1), 0}) ==
        V{IndObj{B(-1, 1), 0}, IndObj{A1(0), 0}, IndObj{A2(0), 0}});
  CHECK(mesh_successors(IndObj{A1(0), 0}) == V{IndObj{B(-1, 0), 0}});

  auto ps = sectional_paths(IndObj{A(0, 0), 0}, IndObj{A(-2, 0), 0});
  REQUIRE(ps.size() == 1);
  CHECK(ps[0] == V{IndObj{A(0, 0), 0}, IndObj{A(-1, 0), 0}, IndObj{A(-2, 0), 0}});
  CHECK(sectional_paths(IndObj{A(0, 0), 0}, IndObj{A(1, 1), 0}).empty());
}

TEST_CASE("wing quasi-factors") {
  CHECK(wing_quasi_factors(A(0, 2)) ==
        std::vector<IndClass>{A(0, 0), A(1, 1), A(2, 2)});
  CHECK(wing_quasi_factors(IndClass::A({0, 0}, {1, 0})).empty());
}

TEST_CASE("window enumeration is deterministic") {
  Model ma(SA), md(SD);
  auto wa = enumerate_window(ma);
  CHECK(wa.size() == 275);
  CHECK(enumerate_window(md).size() == 600);
  CHECK(std::is_sorted(wa.begin(), wa.end()));
  for (auto& x : wa) CHECK(in_window(ma, x));
}

TEST_CASE("partial tilting predicate") {
  Model m(SA);
  CHECK(is_partial_tilting(m, {IndObj{A(0, 0), 0}, IndObj{A(0, 1), 0}}));
  // same-shift pair with Ext(A(0,0), A(1,1)) = 1
  CHECK(!is_partial_tilting(m, {IndObj{A(0, 0), 0}, IndObj{A(1, 1), 0}}));
  // shifting the first summand moves that Ext into degree 0, which is allowed
  CHECK(is_partial_tilting(m, {IndObj{A(0, 0), -1}, IndObj{A(1, 1), 0}}));
  CHECK(!is_partial_tilting(m, {IndObj{A(0, 0), 0}, IndObj{A(0, 0), 1}}));
}

TEST_CASE("cones of canonical maps") {
  Model m(SA);
  FieldChoice q;
  auto lit = [&](const DObj& d) { return to_literal(SA, d); };
  CHECK(lit(cone(m, q, IndObj{A(-1, 1), 0}, IndObj{A(0, 3), 1})) ==
        "A[(t0,-1),(t0,3)]@1 + A[(t0,0),(t0,1)]@1");
  CHECK(lit(cone(m, q, IndObj{A(0, 3), 0}, IndObj{A(0, 1), 0})) ==
        "A[(t0,2),(t0,3)]@1");
  CHECK(lit(cone(m, q, IndObj{A(0, 1), 0}, IndObj{A(-1, 1), 0})) ==
        "A[(t0,-1),(t0,-1)]");
  CHECK(cone(m, q, IndObj{A(0, 1), 0}, IndObj{A(0, 1), 0}).is_zero());
  CHECK(lit(canonical_cone(m, q, IndObj{A(-1, 1), 0}, IndObj{A(0, 3), 1})) ==
        "A[(t0,-1),(t0,3)] + A[(t0,0),(t0,1)]");
  CHECK_THROWS_AS(cone(m, q, IndObj{A(0, 1), 0}, IndObj{A(2, 3), 0}), ZeroMap);
  Model d(SD);
  // Hom(A(0,3), B(1,2)) is two-dimensional: no canonical map
  CHECK_THROWS_AS(cone(d, q, IndObj{A(0, 3), 0}, IndObj{B(1, 2), 0}), NotUnique);
}

TEST_CASE("literal round trip") {
  CHECK(to_literal(SD, IndObj{B(0, 2), -1}) == "B[(t0,0),(t0,2)]@-1");
  CHECK(parse_ind(SD, "B[(t0,0),(t0,2)]@-1") == IndObj{B(0, 2), -1});
  CHECK(parse_ind(SD, "A1[(t0,4)]") == IndObj{A1(4), 0});
  CHECK(parse_dobj(SD, "0").is_zero());
  CHECK_THROWS_AS(parse_ind(SD, "A[(t9,0),(t0,2)]"), std::runtime_error);
  CHECK_THROWS_AS(parse_ind(SD, "C[(t0,0)]"), ParseError);
}
