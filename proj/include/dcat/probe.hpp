// Probing: identifying objects and components by the quasi-simples mapping
// nonzero into them, and reconstructing extension middle terms purely from
// probe bookkeeping. Independent of the linear-algebra oracle by design.
#pragma once

#include <vector>

#include "dcat/model.hpp"

namespace dcat {

// The probe calculus cannot decide; callers fall back to the oracle cone.
struct Ambiguous : ModelError {
  using ModelError::ModelError;
};

// Quasi-simples S with Hom(S, x) != 0, sorted. Throws WindowExceeded when a
// probe falls outside the window.
std::vector<IndObj> phi_o(const Model& m, const IndObj& x);

// Wings mapping nonzero into the component, sorted.
std::vector<ComponentId> phi_c(const ComponentId& c);

// All objects whose probe set equals the given one (0, 1 or 2 objects).
std::vector<IndObj> identify(const Model& m, const std::vector<IndObj>& probes);

// Middle term M of the triangle y -> M -> x -> y[1], for same-shift x, y
// with dim Hom(x, y[1]) = 1 and neither endpoint a ZD-infinity peripheral.
// Throws Ambiguous when probe data cannot decide.
DObj cone_by_probing(const Model& m, const IndObj& x, const IndObj& y);

}  // namespace dcat
