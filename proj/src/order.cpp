#include "dcat/order.hpp"

#include <algorithm>
#include <set>

namespace dcat {

PosetSpec::PosetSpec(Kind k, std::vector<std::string> labels, long lo, long hi)
    : kind(k), t_labels(std::move(labels)), zlo(lo), zhi(hi) {
  if (t_labels.empty()) throw OrderError("t_labels must be nonempty");
  std::set<std::string> seen(t_labels.begin(), t_labels.end());
  if (seen.size() != t_labels.size())
    throw OrderError("duplicate t_labels rejected");
  if (zlo > zhi) throw OrderError("z_window lo must be <= hi");
}

int PosetSpec::t_index(const std::string& lbl) const {
  for (int i = 0; i < (int)t_labels.size(); ++i)
    if (t_labels[i] == lbl) return i;
  throw OrderError("unknown t label: " + lbl);
}

bool leq(const DPoint& a, const DPoint& b) {
  if (a.tag == DPoint::In && b.tag == DPoint::In) return a.p <= b.p;
  if (a.tag != DPoint::In) return a.tag == b.tag || b.tag == DPoint::In;
  return false;  // In <= Q never holds
}

std::optional<int> FinPoset::vertex_of(LPoint p) const {
  auto it = std::lower_bound(chain.begin(), chain.end(), p);
  if (it == chain.end() || !(*it == p)) return std::nullopt;
  return chain_offset + (int)(it - chain.begin());
}

std::optional<int> FinPoset::vertex_of(const DPoint& d) const {
  if (d.tag == DPoint::Q1) return has_q ? std::optional<int>(0) : std::nullopt;
  if (d.tag == DPoint::Q2) return has_q ? std::optional<int>(1) : std::nullopt;
  return vertex_of(d.p);
}

bool FinPoset::vleq(int u, int v) const { return leq(origin[u], origin[v]); }

bool is_forest(const FinPoset& p) {
  // every interval [i,j] of the transitive closure must be totally ordered
  int n = p.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (auto [u, v] : p.hasse) le[u][v] = true;
  for (int k = 0; k < n; ++k)  // transitive closure
    for (int i = 0; i < n; ++i)
      if (le[i][k])
        for (int j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  // antisymmetry / acyclicity
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i]) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!le[i][j]) continue;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (!(le[i][x] && le[x][j] && le[i][y] && le[y][j])) continue;
          if (!le[x][y] && !le[y][x]) return false;
        }
    }
  return true;
}

static FinPoset build(const PosetSpec& spec, LPoint lo, LPoint hi, int margin,
                      bool checked) {
  if (!(lo <= hi)) throw OrderError("support_lo must be <= support_hi");
  if (margin < 0) throw OrderError("margin must be >= 0");
  FinPoset out;
  if (checked && (lo.z - margin < spec.zlo || hi.z + margin > spec.zhi))
    throw WindowExceeded("margin extension leaves z_window");
  // every touched fiber is padded by the margin at both of its ends; the
  // seam padding keeps class decompositions faithful when a support crosses
  // fibers (one successor step never lands exactly on a segment boundary)
  for (int t = lo.t; t <= hi.t; ++t) {
    long a = (t == lo.t) ? lo.z - margin : spec.zlo - margin;
    long b = (t == hi.t) ? hi.z + margin : spec.zhi + margin;
    for (long z = a; z <= b; ++z) out.chain.push_back({t, z});
  }
  out.has_q = (spec.kind == Kind::TypeD);
  if (out.has_q) {
    out.origin.push_back(DPoint::q1());
    out.origin.push_back(DPoint::q2());
    out.chain_offset = 2;
  }
  for (LPoint p : out.chain) out.origin.push_back(DPoint::in(p));
  if (out.has_q && !out.chain.empty()) {
    out.hasse.push_back({0, out.chain_offset});
    out.hasse.push_back({1, out.chain_offset});
  }
  for (int i = 0; i + 1 < (int)out.chain.size(); ++i)
    out.hasse.push_back({out.chain_offset + i, out.chain_offset + i + 1});
  return out;
}

FinPoset truncate(const PosetSpec& spec, LPoint lo, LPoint hi, int margin) {
  return build(spec, lo, hi, margin, true);
}

FinPoset truncate_unchecked(const PosetSpec& spec, LPoint lo, LPoint hi,
                            int margin) {
  return build(spec, lo, hi, margin, false);
}

}  // namespace dcat
