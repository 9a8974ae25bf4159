#include "dcat/model.hpp"

#include <algorithm>
#include <functional>

#include "dcat/oracle.hpp"

namespace dcat {

DObj make_dobj(std::vector<IndObj> parts) {
  std::sort(parts.begin(), parts.end());
  return DObj{std::move(parts)};
}

DObj shift_dobj(const DObj& m, int by) {
  DObj out = m;
  for (auto& s : out.summands) s.shift += by;
  return out;
}

std::string shape_of(const ComponentId& c) {
  switch (c.fam) {
    case ComponentId::Wing:
      return "ZA_inf";
    case ComponentId::BandA:
    case ComponentId::BandB:
      return "ZA_inf_inf";
    case ComponentId::DWing:
      return "ZD_inf";
  }
  return {};
}

void validate(const PosetSpec& spec, const IndClass& x) {
  auto chk = [&](LPoint p) {
    if (p.t < 0 || p.t >= spec.t_count())
      throw ModelError("t index out of range");
  };
  switch (x.c) {
    case Cls::IA:
      chk(x.i);
      chk(x.j);
      if (!(x.i <= x.j)) throw ModelError("A class needs i <= j");
      break;
    case Cls::IA1:
    case Cls::IA2:
      if (spec.kind != Kind::TypeD)
        throw ModelError("A1/A2 classes need kind D");
      chk(x.j);
      break;
    case Cls::IB:
      if (spec.kind != Kind::TypeD) throw ModelError("B classes need kind D");
      chk(x.i);
      chk(x.j);
      if (!(x.i < x.j)) throw ModelError("B class needs i < j");
      break;
  }
}

bool in_window(const Model& m, const IndClass& x) {
  validate(m.spec, x);
  auto zin = [&](long z) { return z >= m.spec.zlo && z <= m.spec.zhi; };
  switch (x.c) {
    case Cls::IA:
      return zin(x.i.z) && zin(x.j.z) && zin(x.j.z + 1);
    case Cls::IA1:
    case Cls::IA2:
      return zin(x.j.z) && zin(x.j.z + 1);
    case Cls::IB:
      return zin(x.i.z) && zin(x.i.z + 1) && zin(x.j.z) && zin(x.j.z + 1);
  }
  return false;
}

bool in_window(const Model& m, const IndObj& x) {
  return in_window(m, x.cls) && x.shift >= m.shift_lo && x.shift <= m.shift_hi;
}

int hom_abelian(const IndClass& x, const IndClass& y) {
  switch (x.c) {
    case Cls::IA: {
      const LPoint a = x.i, b = x.j;
      if (y.c == Cls::IA)
        return (y.i <= a && a <= y.j && y.j <= b) ? 1 : 0;
      if (y.c == Cls::IA1 || y.c == Cls::IA2)
        return (a <= y.j && y.j <= b) ? 1 : 0;
      const LPoint c = y.i, d = y.j;  // B target
      if (a <= c) {
        if (b >= d) return 2;
        if (b >= c) return 1;
        return 0;
      }
      return (a <= d && d <= b) ? 1 : 0;
    }
    case Cls::IA1:
    case Cls::IA2: {
      const LPoint b = x.j;
      if (y.c == Cls::IA) return 0;
      if (y.c == Cls::IA1 || y.c == Cls::IA2)
        return (y.c == x.c && y.j <= b) ? 1 : 0;
      return (b >= y.j) ? 1 : 0;  // B target
    }
    case Cls::IB: {
      const LPoint a = x.i, b = x.j;
      if (y.c == Cls::IA) return 0;
      if (y.c == Cls::IA1 || y.c == Cls::IA2) return (y.j <= a) ? 1 : 0;
      const LPoint c = y.i, d = y.j;  // B target
      if (a < c) return 0;
      if (a == c) return (b >= d) ? 1 : 0;
      if (a >= d) return 2;
      return (d <= b) ? 1 : 0;
    }
  }
  return 0;
}

IndClass tau_cls(const IndClass& x) {
  switch (x.c) {
    case Cls::IA:
      return IndClass::A(successor(x.i), successor(x.j));
    case Cls::IB:
      return IndClass::B(successor(x.i), successor(x.j));
    case Cls::IA1:
      return IndClass::A2(successor(x.j));
    case Cls::IA2:
      return IndClass::A1(successor(x.j));
  }
  return x;
}

IndClass tau_inv_cls(const IndClass& x) {
  switch (x.c) {
    case Cls::IA:
      return IndClass::A(predecessor(x.i), predecessor(x.j));
    case Cls::IB:
      return IndClass::B(predecessor(x.i), predecessor(x.j));
    case Cls::IA1:
      return IndClass::A2(predecessor(x.j));
    case Cls::IA2:
      return IndClass::A1(predecessor(x.j));
  }
  return x;
}

IndObj tau(const IndObj& x) { return {tau_cls(x.cls), x.shift}; }
IndObj tau_inv(const IndObj& x) { return {tau_inv_cls(x.cls), x.shift}; }
IndObj serre(const IndObj& x) { return {tau_cls(x.cls), x.shift + 1}; }

int hom_dim(const Model& m, const IndObj& x, const IndObj& y) {
  if (!in_window(m, x) || !in_window(m, y))
    throw WindowExceeded("hom_dim operand outside window");
  int rel = y.shift - x.shift;
  if (rel == 0) return hom_abelian(x.cls, y.cls);
  if (rel == 1) {
    IndClass t = tau_cls(x.cls);
    if (m.sabotage_successor_ext) t = tau_cls(t);  // deliberately wrong
    return hom_abelian(y.cls, t);  // Serre duality: Ext(x,y) = Hom(y, tau x)
  }
  return 0;
}

int hom_dim(const DObj& x, const DObj& y, const Model& m) {
  int s = 0;
  for (auto& p : x.summands)
    for (auto& q : y.summands) s += hom_dim(m, p, q);
  return s;
}

std::vector<IndClass> ar_middle(const IndClass& z) {
  switch (z.c) {
    case Cls::IA: {
      std::vector<IndClass> out;
      if (z.i < z.j) out.push_back(IndClass::A(successor(z.i), z.j));
      out.push_back(IndClass::A(z.i, successor(z.j)));
      return out;
    }
    case Cls::IA1:
    case Cls::IA2:
      return {IndClass::B(z.j, successor(z.j))};
    case Cls::IB: {
      if (z.j == successor(z.i))
        return {IndClass::A1(successor(z.i)), IndClass::A2(successor(z.i)),
                IndClass::B(z.i, successor(z.j))};
      return {IndClass::B(successor(z.i), z.j), IndClass::B(z.i, successor(z.j))};
    }
  }
  return {};
}

Triangle ar_triangle(const Model& m, const IndObj& z) {
  if (!in_window(m, z)) throw WindowExceeded("ar_triangle: z outside window");
  IndObj tz = tau(z);
  if (!in_window(m, tz))
    throw WindowExceeded("ar_triangle: tau z outside window");
  std::vector<IndObj> mid;
  for (auto& c : ar_middle(z.cls)) {
    IndObj o{c, z.shift};
    if (!in_window(m, o))
      throw WindowExceeded("ar_triangle: middle term outside window");
    mid.push_back(o);
  }
  return Triangle{tz, make_dobj(std::move(mid)), z};
}

ComponentId component_of(const IndObj& x) {
  ComponentId c;
  c.shift = x.shift;
  switch (x.cls.c) {
    case Cls::IA:
      if (x.cls.i.t == x.cls.j.t) {
        c.fam = ComponentId::Wing;
        c.t = x.cls.i.t;
      } else {
        c.fam = ComponentId::BandA;
        c.t = x.cls.i.t;
        c.t2 = x.cls.j.t;
      }
      break;
    case Cls::IA1:
    case Cls::IA2:
      c.fam = ComponentId::DWing;
      c.t = x.cls.j.t;
      break;
    case Cls::IB:
      if (x.cls.i.t == x.cls.j.t) {
        c.fam = ComponentId::DWing;
        c.t = x.cls.i.t;
      } else {
        c.fam = ComponentId::BandB;
        c.t = x.cls.i.t;
        c.t2 = x.cls.j.t;
      }
      break;
  }
  return c;
}

bool is_peripheral(const IndObj& x) { return ar_middle(x.cls).size() == 1; }

bool is_quasi_simple(const IndObj& x) {
  return x.cls.c == Cls::IA && x.cls.i == x.cls.j;
}

std::vector<IndObj> quasi_simples(const Model& m) {
  std::vector<IndObj> out;
  for (int s = m.shift_lo; s <= m.shift_hi; ++s)
    for (int t = 0; t < m.spec.t_count(); ++t)
      for (long z = m.spec.zlo; z + 1 <= m.spec.zhi; ++z)
        out.push_back({IndClass::A({t, z}, {t, z}), s});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndObj> mesh_successors(const IndObj& x) {
  std::vector<IndClass> cls;
  switch (x.cls.c) {
    case Cls::IA:
      cls.push_back(IndClass::A(predecessor(x.cls.i), x.cls.j));
      if (x.cls.i <= predecessor(x.cls.j))
        cls.push_back(IndClass::A(x.cls.i, predecessor(x.cls.j)));
      break;
    case Cls::IA1:
    case Cls::IA2:
      cls.push_back(IndClass::B(predecessor(x.cls.j), x.cls.j));
      break;
    case Cls::IB:
      cls.push_back(IndClass::B(predecessor(x.cls.i), x.cls.j));
      if (x.cls.i < predecessor(x.cls.j))
        cls.push_back(IndClass::B(x.cls.i, predecessor(x.cls.j)));
      if (x.cls.j == successor(x.cls.i)) {
        cls.push_back(IndClass::A1(x.cls.i));
        cls.push_back(IndClass::A2(x.cls.i));
      }
      break;
  }
  std::vector<IndObj> out;
  for (auto& c : cls) out.push_back({c, x.shift});
  return out;
}

namespace {
long mesh_key_point(LPoint p) { return (long)p.t * 1000000L + p.z; }
long mesh_key(const IndClass& c) {
  switch (c.c) {
    case Cls::IA:
    case Cls::IB:
      return mesh_key_point(c.i) + mesh_key_point(c.j);
    case Cls::IA1:
    case Cls::IA2:
      return 2 * mesh_key_point(c.j);
  }
  return 0;
}
}  // namespace

std::vector<std::vector<IndObj>> sectional_paths(const IndObj& x,
                                                 const IndObj& y) {
  std::vector<std::vector<IndObj>> found;
  if (x.shift != y.shift) return found;
  if (!(component_of(x) == component_of(y))) return found;
  long target = mesh_key(y.cls);
  std::vector<IndObj> path{x};
  std::function<void()> dfs = [&]() {
    const IndObj& cur = path.back();
    if (cur == y) {
      found.push_back(path);
      return;
    }
    if (mesh_key(cur.cls) <= target) return;  // every step decreases the key
    for (auto& nxt : mesh_successors(cur)) {
      // sectional condition: no step onto the translate of the predecessor
      if (path.size() >= 2 &&
          tau_cls(nxt.cls) == path[path.size() - 2].cls)
        continue;
      path.push_back(nxt);
      dfs();
      path.pop_back();
    }
  };
  dfs();
  return found;
}

std::vector<IndClass> wing_quasi_factors(const IndClass& v) {
  std::vector<IndClass> out;
  if (v.c != Cls::IA || v.i.t != v.j.t) return out;
  for (long z = v.i.z; z <= v.j.z; ++z)
    out.push_back(IndClass::A({v.i.t, z}, {v.i.t, z}));
  return out;
}

std::vector<IndObj> enumerate_window(const Model& m) {
  std::vector<IndObj> out;
  const PosetSpec& sp = m.spec;
  std::vector<LPoint> pts;
  for (int t = 0; t < sp.t_count(); ++t)
    for (long z = sp.zlo; z <= sp.zhi; ++z) pts.push_back({t, z});
  for (int s = m.shift_lo; s <= m.shift_hi; ++s) {
    for (auto& i : pts)
      for (auto& j : pts) {
        if (!(i <= j) || j.z + 1 > sp.zhi) continue;
        out.push_back({IndClass::A(i, j), s});
      }
    if (sp.kind == Kind::TypeD) {
      for (auto& j : pts) {
        if (j.z + 1 > sp.zhi) continue;
        out.push_back({IndClass::A1(j), s});
        out.push_back({IndClass::A2(j), s});
      }
      for (auto& i : pts)
        for (auto& j : pts) {
          if (!(i < j) || i.z + 1 > sp.zhi || j.z + 1 > sp.zhi) continue;
          out.push_back({IndClass::B(i, j), s});
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_partial_tilting(const Model& m, const std::vector<IndObj>& s) {
  for (auto& p : s)
    for (auto& q : s) {
      int z0 = p.shift - q.shift;  // Hom(p, q[z0]) lands in the heart
      if (z0 != 0 && hom_abelian(p.cls, q.cls) != 0) return false;
      if (z0 + 1 != 0 && hom_abelian(q.cls, tau_cls(p.cls)) != 0) return false;
    }
  return true;
}

DObj cone(const Model& m, const FieldChoice& k, const IndObj& x,
          const IndObj& y) {
  int h = hom_dim(m, x, y);
  if (h == 0) throw ZeroMap("cone: hom space is zero");
  if (h >= 2) throw NotUnique("cone: hom space has dimension >= 2");
  int rel = y.shift - x.shift;
  std::vector<IndObj> parts;
  if (rel == 0) {
    auto oc = o_cone_eval(k, m.spec, x.cls, y.cls, m.margin);
    for (auto& c : oc.coker) parts.push_back({c, y.shift});
    for (auto& c : oc.ker) parts.push_back({c, y.shift + 1});
  } else {
    // rel == 1: the cone of x -> y is the middle term of the extension,
    // placed at y's shift
    auto mid = o_ext_middle(k, m.spec, x.cls, y.cls, m.margin);
    for (auto& c : mid) parts.push_back({c, y.shift});
  }
  return make_dobj(std::move(parts));
}

DObj canonical_cone(const Model& m, const FieldChoice& k, const IndObj& x,
                    const IndObj& y) {
  int h = hom_dim(m, x, y);
  if (h == 0) throw ZeroMap("canonical_cone: hom space is zero");
  int rel = y.shift - x.shift;
  std::vector<IndObj> parts;
  if (rel == 0) {
    auto oc = o_cone_eval(k, m.spec, x.cls, y.cls, m.margin);
    for (auto& c : oc.coker) parts.push_back({c, y.shift - 1});
    for (auto& c : oc.ker) parts.push_back({c, y.shift});
  } else {
    auto mid = o_ext_middle(k, m.spec, x.cls, y.cls, m.margin);
    for (auto& c : mid) parts.push_back({c, y.shift - 1});
  }
  DObj e = make_dobj(std::move(parts));
  std::vector<IndObj> check = e.summands;
  check.push_back(x);
  if (!is_partial_tilting(m, check))
    throw ModelError("canonical_cone: partial-tilting postcondition failed");
  return e;
}

}  // namespace dcat
