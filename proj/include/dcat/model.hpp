// Symbolic model of the bounded derived category attached to A_L / D_L:
// indecomposable classes, hom dimensions, the translate tau, Serre functor,
// almost split triangles, AR components and sectional paths. Everything here
// is closed-form; the linear algebra oracle lives elsewhere and is used to
// certify these rules, never to implement them.
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "dcat/field.hpp"
#include "dcat/order.hpp"

namespace dcat {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// cone(x -> y) requested with dim Hom(x, y) == 0
struct ZeroMap : ModelError {
  using ModelError::ModelError;
};
// cone(x -> y) requested with dim Hom(x, y) >= 2 (no canonical choice)
struct NotUnique : ModelError {
  using ModelError::ModelError;
};

// The four families of indecomposables of the abelian heart:
//   IA  : interval module A_{i,j} on [i,j], i <= j
//   IA1 : line through Q1 supported on Q1 + (-inf, j]
//   IA2 : line through Q2 supported on Q2 + (-inf, j]
//   IB  : B_{i,j}, i < j: dim 2 on (-inf, i], dim 1 on (i, j] and at Q1, Q2
// IA1, IA2, IB exist only over D_L.
enum class Cls { IA, IA1, IA2, IB };

struct IndClass {
  Cls c = Cls::IA;
  LPoint i{};  // unused for IA1/IA2
  LPoint j{};

  friend bool operator==(const IndClass&, const IndClass&) = default;
  friend auto operator<=>(const IndClass&, const IndClass&) = default;

  static IndClass A(LPoint a, LPoint b) { return {Cls::IA, a, b}; }
  static IndClass A1(LPoint b) { return {Cls::IA1, {}, b}; }
  static IndClass A2(LPoint b) { return {Cls::IA2, {}, b}; }
  static IndClass B(LPoint a, LPoint b) { return {Cls::IB, a, b}; }
};

// Shifted indecomposable X[shift] of the derived category.
struct IndObj {
  IndClass cls;
  int shift = 0;
  friend bool operator==(const IndObj&, const IndObj&) = default;
  friend auto operator<=>(const IndObj&, const IndObj&) = default;
};

// Finite direct sum in canonical order (sorted, with multiplicity).
struct DObj {
  std::vector<IndObj> summands;
  bool is_zero() const { return summands.empty(); }
  friend bool operator==(const DObj&, const DObj&) = default;
};

DObj make_dobj(std::vector<IndObj> parts);            // sorts
DObj shift_dobj(const DObj& m, int by);

// x -> y -> z -> x[1]
struct Triangle {
  IndObj x;
  DObj y;
  IndObj z;
};

// AR components. Wing(t,n): A-classes inside one fiber (shape ZA_inf).
// BandA(t,t',n) t<t': A-classes spanning two fibers (ZA_inf_inf).
// BandB(t,t',n) t<t': B-classes spanning two fibers (ZA_inf_inf).
// DWing(t,n): B-classes inside fiber t together with its A1/A2 (ZD_inf).
struct ComponentId {
  enum Fam { Wing, BandA, BandB, DWing } fam = Wing;
  int t = 0, t2 = 0;  // t2 used by the band families
  int shift = 0;
  friend bool operator==(const ComponentId&, const ComponentId&) = default;
  friend auto operator<=>(const ComponentId&, const ComponentId&) = default;
};

std::string shape_of(const ComponentId& c);  // "ZA_inf" | "ZA_inf_inf" | "ZD_inf"

// Model = poset data + shift window + analysis knobs. sabotage_successor_ext
// deliberately breaks the Ext rule by one successor step; it exists so the
// verification suite can prove the oracle cross-check has teeth.
struct Model {
  PosetSpec spec;
  int shift_lo = -2, shift_hi = 2;
  int margin = 2;
  bool sabotage_successor_ext = false;

  Model() = default;
  explicit Model(PosetSpec s) : spec(std::move(s)) {}
};

// Structural validity of a class over the given spec (family allowed for the
// kind, i <= j / i < j, t indices inside T). Throws ModelError.
void validate(const PosetSpec& spec, const IndClass& x);

// In-window test: the class is valid, all points used by its minimal
// projective presentation lie inside the z-window, and (for IndObj) the
// shift lies inside the shift window.
bool in_window(const Model& m, const IndClass& x);
bool in_window(const Model& m, const IndObj& x);

// dim Hom in the abelian heart (certified against the oracle).
int hom_abelian(const IndClass& x, const IndClass& y);

// The translate: tau A_{i,j} = A_{i+1,j+1}, tau B_{i,j} = B_{i+1,j+1},
// tau A1_j = A2_{j+1}, tau A2_j = A1_{j+1}.
IndClass tau_cls(const IndClass& x);
IndClass tau_inv_cls(const IndClass& x);
IndObj tau(const IndObj& x);
IndObj tau_inv(const IndObj& x);
IndObj serre(const IndObj& x);  // tau . [1]

// dim Hom(x, y) in the derived category; nonzero only for relative shift 0
// (heart hom) or 1 (Ext via Hom(y, tau x)). Honors the sabotage flag.
int hom_dim(const Model& m, const IndObj& x, const IndObj& y);
int hom_dim(const DObj& x, const DObj& y, const Model& m);

// Middle term classes of the almost split triangle ending at z (same shift).
std::vector<IndClass> ar_middle(const IndClass& z);

// Almost split triangle tau z -> M -> z -> tau z [1]. Throws WindowExceeded
// when tau z or a middle summand falls outside the window.
Triangle ar_triangle(const Model& m, const IndObj& z);

ComponentId component_of(const IndObj& x);
bool is_peripheral(const IndObj& x);  // one middle summand in its AR triangle
bool is_quasi_simple(const IndObj& x);  // peripheral and in a wing
// every in-window quasi-simple (the A_{p,p}[n]), deterministically ordered
std::vector<IndObj> quasi_simples(const Model& m);

// Irreducible-map successors of x inside its component (same shift).
std::vector<IndObj> mesh_successors(const IndObj& x);

// All sectional paths x = p_0 -> ... -> p_k = y (irreducible steps, no step
// returning to the tau-translate of its predecessor). Used both for the
// unique-path lemma check and for hom-dim-1 transport along such paths.
std::vector<std::vector<IndObj>> sectional_paths(const IndObj& x,
                                                 const IndObj& y);

// Quasi-factor filtration data of an A-class V = A_{a,b} inside its wing:
// the quasi-simples A_{c,c}, c in [a,b] (same t only; multi-fiber classes
// have none in the wing sense).
std::vector<IndClass> wing_quasi_factors(const IndClass& v);

// Every in-window IndObj, deterministically ordered.
std::vector<IndObj> enumerate_window(const Model& m);

// No hom in either direction along nonzero relative shifts between distinct
// members, and no self-extensions: Hom(p, q[z]) = 0 for all z != 0.
bool is_partial_tilting(const Model& m, const std::vector<IndObj>& s);

// Cone of the unique-up-to-scalar nonzero map x -> y, computed by realizing
// both objects on a margin-padded truncation and decomposing the result.
// Throws ZeroMap / NotUnique. Requires relative shift 0 or 1.
DObj cone(const Model& m, const FieldChoice& k, const IndObj& x,
          const IndObj& y);

// E(x, y) = cone(eval: x tensor Hom(x,y) -> y)[-1]; defined for hom_dim >= 1.
DObj canonical_cone(const Model& m, const FieldChoice& k, const IndObj& x,
                    const IndObj& y);

}  // namespace dcat
