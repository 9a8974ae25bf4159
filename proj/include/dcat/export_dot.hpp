// AR component export: the window-restricted mesh of a component as a DOT
// digraph (solid irreducible-map arrows, dashed tau edges) or as JSON.
#pragma once

#include <string>
#include <vector>

#include "dcat/model.hpp"

namespace dcat {

// "Wing(t0,0)", "BandA(t0,t1,-1)", "BandB(t0,t1,0)", "DWing(t0,1)".
ComponentId parse_component(const PosetSpec& spec, const std::string& s);
std::string component_literal(const PosetSpec& spec, const ComponentId& c);

// Window objects lying in the component, deterministically ordered.
// Throws ModelError when the component is not realized in the window.
std::vector<IndObj> component_objects(const Model& m, const ComponentId& c);

std::string export_dot(const Model& m, const ComponentId& c);
std::string export_json(const Model& m, const ComponentId& c);

}  // namespace dcat
