// Tilting sets grown from a quasi-simple source: the window restriction of
// {X : Hom(S, X) != 0} (with the peripheral-target condition over D_L),
// ordered by the hom-order x <= y iff Hom(x, y) != 0.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dcat/model.hpp"

namespace dcat {

struct NotQuasiSimple : ModelError {
  using ModelError::ModelError;
};

enum class TiltShape { AShape, DShape };

struct TiltingSet {
  IndObj source;
  std::vector<IndObj> elements;  // ascending in the hom-order
  TiltShape shape = TiltShape::AShape;
  std::optional<std::pair<IndObj, IndObj>> peripheral_pair;
};

// The two peripheral objects of the ZD-infinity component the source maps
// to: (A1_j, A2_j) at the source's shift over D_L, none over A_L.
std::optional<std::pair<IndObj, IndObj>> peripheral_targets(const Model& m,
                                                            const IndObj& s);

// Window restriction of the tilting set of s, sorted ascending by the
// hom-order. AShape runs from s up to tau(s)[1]; DShape ends with the
// incomparable peripheral pair (A1 listed before A2). Postcondition: the
// elements form a partial tilting set.
TiltingSet tilting_set(const Model& m, const IndObj& s);

// Position of x in the hom-order, or nullopt when absent.
std::optional<std::size_t> st_index(const TiltingSet& t, const IndObj& x);

}  // namespace dcat
