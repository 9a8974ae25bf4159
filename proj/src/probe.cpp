#include "dcat/probe.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dcat {

namespace {

// Hom dimension from the closed-form rules without window policing; the
// probe calculus reasons about probes that may sit one step outside the
// configured shift window.
int raw_hom(const IndObj& a, const IndObj& b) {
  int rel = b.shift - a.shift;
  if (rel == 0) return hom_abelian(a.cls, b.cls);
  if (rel == 1) return hom_abelian(b.cls, tau_cls(a.cls));
  return 0;
}

IndObj qs(LPoint p, int shift) {
  return {IndClass::A(p, p), shift};
}

}  // namespace

std::vector<IndObj> phi_o(const Model& m, const IndObj& x) {
  if (!in_window(m, x)) throw WindowExceeded("phi_o: object outside window");
  std::vector<IndObj> out;
  switch (x.cls.c) {
    case Cls::IA:
      out.push_back(qs(x.cls.j, x.shift));
      out.push_back(qs(predecessor(x.cls.i), x.shift - 1));
      break;
    case Cls::IA1:
    case Cls::IA2:
      out.push_back(qs(x.cls.j, x.shift));
      break;
    case Cls::IB:
      out.push_back(qs(x.cls.i, x.shift));
      out.push_back(qs(x.cls.j, x.shift));
      break;
  }
  for (auto& s : out)
    if (!in_window(m, s))
      throw WindowExceeded("phi_o: probe outside window");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ComponentId> phi_c(const ComponentId& c) {
  std::vector<ComponentId> out;
  auto wing = [](int t, int n) {
    ComponentId w;
    w.fam = ComponentId::Wing;
    w.t = t;
    w.shift = n;
    return w;
  };
  switch (c.fam) {
    case ComponentId::Wing:
      out = {wing(c.t, c.shift - 1), wing(c.t, c.shift)};
      break;
    case ComponentId::BandA:
      out = {wing(c.t2, c.shift), wing(c.t, c.shift - 1)};
      break;
    case ComponentId::BandB:
      out = {wing(c.t, c.shift), wing(c.t2, c.shift)};
      break;
    case ComponentId::DWing:
      out = {wing(c.t, c.shift)};
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndObj> identify(const Model& m,
                             const std::vector<IndObj>& probes) {
  std::vector<IndObj> out;
  for (auto& s : probes)
    if (!is_quasi_simple(s)) return out;
  auto sorted = probes;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() == 1) {
    if (m.spec.kind == Kind::TypeD) {
      LPoint d = sorted[0].cls.j;
      out.push_back({IndClass::A1(d), sorted[0].shift});
      out.push_back({IndClass::A2(d), sorted[0].shift});
    }
  } else if (sorted.size() == 2) {
    const IndObj &s0 = sorted[0], &s1 = sorted[1];
    if (s0.shift == s1.shift && !(s0.cls.j == s1.cls.j)) {
      if (m.spec.kind == Kind::TypeD) {
        LPoint lo = std::min(s0.cls.j, s1.cls.j);
        LPoint hi = std::max(s0.cls.j, s1.cls.j);
        out.push_back({IndClass::B(lo, hi), s0.shift});
      }
    } else if (s0.shift + 1 == s1.shift) {
      // s0 = A_{a-1,a-1}[m-1], s1 = A_{b,b}[m]
      LPoint a = successor(s0.cls.j), b = s1.cls.j;
      if (a <= b) out.push_back({IndClass::A(a, b), s1.shift});
    } else if (s1.shift + 1 == s0.shift) {
      LPoint a = successor(s1.cls.j), b = s0.cls.j;
      if (a <= b) out.push_back({IndClass::A(a, b), s0.shift});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DObj cone_by_probing(const Model& m, const IndObj& x, const IndObj& y) {
  if (x.shift != y.shift)
    throw ModelError("cone_by_probing: endpoints at different shifts");
  if (x.cls.c == Cls::IA1 || x.cls.c == Cls::IA2 || y.cls.c == Cls::IA1 ||
      y.cls.c == Cls::IA2)
    throw ModelError("cone_by_probing: ZD-infinity peripheral endpoint");
  IndObj y1{y.cls, y.shift + 1};
  if (raw_hom(x, y1) != 1)
    throw ModelError("cone_by_probing: needs dim Hom(x, y[1]) = 1");
  auto px = phi_o(m, x), py = phi_o(m, y);
  // cancellation against the connecting maps of the triangle
  std::vector<IndObj> survivors;
  for (auto& s : px)
    if (raw_hom(s, y1) == 0) survivors.push_back(s);
  IndObj xm1{x.cls, x.shift - 1};
  for (auto& s : py)
    if (raw_hom(s, xm1) == 0) survivors.push_back(s);
  std::sort(survivors.begin(), survivors.end());
  if (survivors.empty()) throw Ambiguous("cone_by_probing: no survivors");

  // resolve every partition of the survivors into probe blocks of size <= 2;
  // each block yields candidate summand readings, and only readings passing
  // the structural filters survive:
  //   - every summand receives a nonzero map from y and maps nonzero to x,
  //   - the split reading (summands exactly {x, y}) is rejected because the
  //     connecting map is nonzero.
  std::set<std::vector<IndObj>> outcomes;
  std::vector<IndObj> split{x, y};
  std::sort(split.begin(), split.end());
  auto filtered = [&](const std::vector<IndObj>& zs) {
    for (auto& z : zs)
      if (raw_hom(y, z) == 0 || raw_hom(z, x) == 0) return false;
    return true;
  };
  int n = (int)survivors.size();
  std::vector<bool> used(n, false);
  std::vector<IndObj> summands;
  std::function<void()> recurse = [&]() {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      auto sorted = summands;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != split) outcomes.insert(sorted);
      return;
    }
    used[first] = true;
    // lone probe: its fiber is a peripheral pair; try each member
    for (auto& cand : identify(m, {survivors[first]})) {
      if (!filtered({cand})) continue;
      summands.push_back(cand);
      recurse();
      summands.pop_back();
    }
    // paired with a later survivor
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      const IndObj &a = survivors[first], &b = survivors[j];
      if (a == b) {
        if (m.spec.kind == Kind::TypeD) {
          std::vector<IndObj> pair{{IndClass::A1(a.cls.j), a.shift},
                                   {IndClass::A2(a.cls.j), a.shift}};
          if (filtered(pair)) {
            summands.insert(summands.end(), pair.begin(), pair.end());
            recurse();
            summands.pop_back();
            summands.pop_back();
          }
        }
      } else {
        auto ids = identify(m, {a, b});
        if (ids.size() == 1 && filtered({ids[0]})) {
          summands.push_back(ids[0]);
          recurse();
          summands.pop_back();
        }
      }
      used[j] = false;
    }
    used[first] = false;
  };
  recurse();
  if (outcomes.size() != 1)
    throw Ambiguous("cone_by_probing: probe data does not decide");
  return make_dobj(std::vector<IndObj>(*outcomes.begin()));
}

}  // namespace dcat
