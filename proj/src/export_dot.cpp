#include "dcat/export_dot.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "dcat/literal.hpp"

namespace dcat {

namespace {

const char* fam_name(ComponentId::Fam f) {
  switch (f) {
    case ComponentId::Wing:
      return "Wing";
    case ComponentId::BandA:
      return "BandA";
    case ComponentId::BandB:
      return "BandB";
    case ComponentId::DWing:
      return "DWing";
  }
  return "";
}

}  // namespace

ComponentId parse_component(const PosetSpec& spec, const std::string& s) {
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw ModelError("bad component literal: " + s);
  std::string fam = s.substr(0, open);
  std::string args = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string> parts;
  std::istringstream ss(args);
  std::string part;
  while (std::getline(ss, part, ',')) {
    while (!part.empty() && part.front() == ' ') part.erase(part.begin());
    while (!part.empty() && part.back() == ' ') part.pop_back();
    parts.push_back(part);
  }
  ComponentId c;
  bool band = fam == "BandA" || fam == "BandB";
  if (fam == "Wing")
    c.fam = ComponentId::Wing;
  else if (fam == "BandA")
    c.fam = ComponentId::BandA;
  else if (fam == "BandB")
    c.fam = ComponentId::BandB;
  else if (fam == "DWing")
    c.fam = ComponentId::DWing;
  else
    throw ModelError("unknown component family: " + fam);
  if (parts.size() != (band ? 3u : 2u))
    throw ModelError("bad component arity: " + s);
  try {
    c.t = spec.t_index(parts[0]);
    if (band) c.t2 = spec.t_index(parts[1]);
    c.shift = std::stoi(parts.back());
  } catch (const OrderError& e) {
    throw ModelError(e.what());
  } catch (const std::exception&) {
    throw ModelError("bad component shift: " + s);
  }
  if (band && c.t >= c.t2)
    throw ModelError("band component needs t < t', got " + s);
  if (c.fam == ComponentId::DWing && spec.kind != Kind::TypeD)
    throw ModelError("DWing component over an A-kind order");
  return c;
}

std::string component_literal(const PosetSpec& spec, const ComponentId& c) {
  std::string s = std::string(fam_name(c.fam)) + "(" + spec.t_labels[c.t];
  if (c.fam == ComponentId::BandA || c.fam == ComponentId::BandB)
    s += "," + spec.t_labels[c.t2];
  s += "," + std::to_string(c.shift) + ")";
  return s;
}

std::vector<IndObj> component_objects(const Model& m, const ComponentId& c) {
  std::vector<IndObj> out;
  for (auto& x : enumerate_window(m))
    if (component_of(x) == c) out.push_back(x);
  if (out.empty())
    throw ModelError("component not realized in window: " +
                     component_literal(m.spec, c));
  return out;
}

namespace {

struct MeshData {
  std::vector<IndObj> verts;
  std::vector<std::pair<size_t, size_t>> arrows;  // irreducible maps
  std::vector<std::pair<size_t, size_t>> taus;    // x -> tau x
};

MeshData mesh_data(const Model& m, const ComponentId& c) {
  MeshData d;
  d.verts = component_objects(m, c);
  auto idx = [&](const IndObj& x) -> long {
    auto it = std::lower_bound(d.verts.begin(), d.verts.end(), x);
    if (it == d.verts.end() || !(*it == x)) return -1;
    return it - d.verts.begin();
  };
  for (size_t i = 0; i < d.verts.size(); ++i) {
    for (auto& s : mesh_successors(d.verts[i])) {
      long j = idx(s);
      if (j >= 0) d.arrows.push_back({i, (size_t)j});
    }
    long j = idx(tau(d.verts[i]));
    if (j >= 0) d.taus.push_back({i, (size_t)j});
  }
  return d;
}

}  // namespace

std::string export_dot(const Model& m, const ComponentId& c) {
  MeshData d = mesh_data(m, c);
  std::ostringstream out;
  out << "digraph \"" << component_literal(m.spec, c) << "\" {\n";
  out << "  rankdir=LR;\n  node [shape=plaintext];\n";
  for (size_t i = 0; i < d.verts.size(); ++i)
    out << "  n" << i << " [label=\"" << to_literal(m.spec, d.verts[i])
        << "\"];\n";
  for (auto& [a, b] : d.arrows) out << "  n" << a << " -> n" << b << ";\n";
  for (auto& [a, b] : d.taus)
    out << "  n" << a << " -> n" << b
        << " [style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const Model& m, const ComponentId& c) {
  MeshData d = mesh_data(m, c);
  nlohmann::json j;
  j["component"] = component_literal(m.spec, c);
  j["shape"] = shape_of(c);
  auto verts = nlohmann::json::array();
  for (auto& v : d.verts) verts.push_back(to_literal(m.spec, v));
  j["vertices"] = verts;
  auto arrows = nlohmann::json::array();
  for (auto& [a, b] : d.arrows)
    arrows.push_back({{"from", a}, {"to", b}});
  j["arrows"] = arrows;
  auto taus = nlohmann::json::array();
  for (auto& [a, b] : d.taus) taus.push_back({{"from", a}, {"to", b}});
  j["tau"] = taus;
  return j.dump(2) + "\n";
}

}  // namespace dcat
