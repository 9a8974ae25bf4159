#include "dcat/tilt.hpp"

#include <algorithm>

namespace dcat {

std::optional<std::pair<IndObj, IndObj>> peripheral_targets(const Model& m,
                                                            const IndObj& s) {
  if (!is_quasi_simple(s))
    throw NotQuasiSimple("peripheral_targets: source is not quasi-simple");
  if (m.spec.kind != Kind::TypeD) return std::nullopt;
  LPoint j = s.cls.j;
  return std::make_pair(IndObj{IndClass::A1(j), s.shift},
                        IndObj{IndClass::A2(j), s.shift});
}

TiltingSet tilting_set(const Model& m, const IndObj& s) {
  if (!is_quasi_simple(s))
    throw NotQuasiSimple("tilting_set: source is not quasi-simple");
  if (!in_window(m, s))
    throw WindowExceeded("tilting_set: source outside window");
  auto per = peripheral_targets(m, s);
  if (per) {
    if (!in_window(m, per->first) || !in_window(m, per->second))
      throw WindowExceeded("tilting_set: peripheral pair outside window");
  } else {
    if (!in_window(m, serre(s)))
      throw WindowExceeded("tilting_set: top element outside window");
  }

  std::vector<IndObj> elems;
  for (auto& x : enumerate_window(m)) {
    if (hom_dim(m, s, x) < 1) continue;
    if (per && hom_dim(m, x, per->first) < 1 && hom_dim(m, x, per->second) < 1)
      continue;
    elems.push_back(x);
  }

  // hom-order; the only incomparable pair (DShape peripherals) falls back to
  // the canonical class order, so A1 lists before A2
  std::sort(elems.begin(), elems.end(),
            [&](const IndObj& a, const IndObj& b) {
              bool ab = hom_dim(m, a, b) >= 1;
              bool ba = hom_dim(m, b, a) >= 1;
              if (ab != ba) return ab;
              return a < b;
            });

  TiltingSet t;
  t.source = s;
  t.elements = std::move(elems);
  std::size_t n = t.elements.size();
  if (n >= 2) {
    const IndObj &u = t.elements[n - 2], &v = t.elements[n - 1];
    if (hom_dim(m, u, v) == 0 && hom_dim(m, v, u) == 0) {
      t.shape = TiltShape::DShape;
      t.peripheral_pair = std::make_pair(u, v);
    }
  }
  if (t.elements.empty() || t.elements.front() != s)
    throw ModelError("tilting_set: source is not the minimum");
  if (!is_partial_tilting(m, t.elements))
    throw ModelError("tilting_set: result is not partial tilting");
  return t;
}

std::optional<std::size_t> st_index(const TiltingSet& t, const IndObj& x) {
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    if (t.elements[i] == x) return i;
  return std::nullopt;
}

}  // namespace dcat
