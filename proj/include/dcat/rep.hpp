// Explicit representations of truncated posets over an exact field: the
// ground-truth layer. Hom spaces are solved as intertwiner systems, Ext via
// the Euler form (tree quivers are hereditary), the translate via minimal
// projective presentation -> transpose -> dual, and Krull-Schmidt
// decomposition via hom-count fingerprinting against a catalog.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dcat/matrix.hpp"
#include "dcat/model.hpp"
#include "dcat/order.hpp"

namespace dcat {

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PosetMismatch : OracleError {
  using OracleError::OracleError;
};
struct SupportExceedsTruncation : OracleError {
  using OracleError::OracleError;
};
struct NotAnIntertwiner : OracleError {
  using OracleError::OracleError;
};
struct NotInCatalog : OracleError {
  using OracleError::OracleError;
};
struct MarginTooSmall : OracleError {
  using OracleError::OracleError;
};
struct ZeroRepresentation : OracleError {
  using OracleError::OracleError;
};

template <class F>
struct Rep {
  const FinPoset* P = nullptr;
  std::vector<int> dim;            // per vertex
  std::vector<Mat<F>> edge;        // per hasse arrow u->v: dim[v] x dim[u]

  int total_dim() const {
    int s = 0;
    for (int d : dim) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }
};

// A map of representations: one matrix per vertex.
template <class F>
struct RepMap {
  std::vector<Mat<F>> at;  // dim_target[v] x dim_source[v]
};

template <class F>
Rep<F> zero_rep(const F& f, const FinPoset& P) {
  Rep<F> r;
  r.P = &P;
  r.dim.assign(P.size(), 0);
  for (auto [u, v] : P.hasse) r.edge.push_back(Mat<F>(f, 0, 0));
  return r;
}

template <class F>
bool is_intertwiner(const F& f, const Rep<F>& m, const Rep<F>& n,
                    const RepMap<F>& g) {
  if (m.P != n.P) return false;
  for (int a = 0; a < (int)m.P->hasse.size(); ++a) {
    auto [u, v] = m.P->hasse[a];
    auto lhs = mul(f, g.at[v], m.edge[a]);
    auto rhs = mul(f, n.edge[a], g.at[u]);
    for (size_t i = 0; i < lhs.a.size(); ++i)
      if (!f.is_zero(f.sub(lhs.a[i], rhs.a[i]))) return false;
  }
  return true;
}

// Basis of the intertwiner space Hom(m, n).
template <class F>
std::vector<RepMap<F>> hom_space(const F& f, const Rep<F>& m, const Rep<F>& n) {
  if (m.P != n.P) throw PosetMismatch("hom_space: different posets");
  const FinPoset& P = *m.P;
  // unknowns: entries of f_v, column-major per vertex
  std::vector<int> off(P.size() + 1, 0);
  for (int v = 0; v < P.size(); ++v)
    off[v + 1] = off[v] + n.dim[v] * m.dim[v];
  int unknowns = off[P.size()];
  int rows = 0;
  for (auto [u, v] : P.hasse) rows += n.dim[v] * m.dim[u];
  Mat<F> sys(f, rows, unknowns);
  int r0 = 0;
  for (int a = 0; a < (int)P.hasse.size(); ++a) {
    auto [u, v] = P.hasse[a];
    // constraint f_v * m_a - n_a * f_u = 0, entry (i, j): i < n.dim[v], j < m.dim[u]
    for (int i = 0; i < n.dim[v]; ++i)
      for (int j = 0; j < m.dim[u]; ++j) {
        int row = r0 + i * m.dim[u] + j;
        for (int k = 0; k < m.dim[v]; ++k)  // f_v[i][k] * m_a[k][j]
          sys.at(row, off[v] + i * m.dim[v] + k) =
              f.add(sys.at(row, off[v] + i * m.dim[v] + k), m.edge[a].at(k, j));
        for (int k = 0; k < n.dim[u]; ++k)  // - n_a[i][k] * f_u[k][j]
          sys.at(row, off[u] + k * m.dim[u] + j) =
              f.sub(sys.at(row, off[u] + k * m.dim[u] + j), n.edge[a].at(i, k));
      }
    r0 += n.dim[v] * m.dim[u];
  }
  Mat<F> ns = nullspace(f, sys);
  std::vector<RepMap<F>> basis;
  for (int c = 0; c < ns.cols; ++c) {
    RepMap<F> g;
    for (int v = 0; v < P.size(); ++v) {
      Mat<F> fv(f, n.dim[v], m.dim[v]);
      for (int i = 0; i < n.dim[v]; ++i)
        for (int j = 0; j < m.dim[v]; ++j)
          fv.at(i, j) = ns.at(off[v] + i * m.dim[v] + j, c);
      g.at.push_back(std::move(fv));
    }
    basis.push_back(std::move(g));
  }
  return basis;
}

template <class F>
int hom_dim_oracle(const F& f, const Rep<F>& m, const Rep<F>& n) {
  return (int)hom_space(f, m, n).size();
}

inline long euler_form(const FinPoset& P, const std::vector<int>& d,
                       const std::vector<int>& e) {
  if ((int)d.size() != P.size() || (int)e.size() != P.size())
    throw OracleError("euler_form: dimension vector size mismatch");
  long s = 0;
  for (int v = 0; v < P.size(); ++v) s += (long)d[v] * e[v];
  for (auto [u, v] : P.hasse) s -= (long)d[u] * e[v];
  return s;
}

template <class F>
int ext1_dim_oracle(const F& f, const Rep<F>& m, const Rep<F>& n) {
  long e = hom_dim_oracle(f, m, n) - euler_form(*m.P, m.dim, n.dim);
  if (e < 0) throw OracleError("negative ext1: not a tree quiver situation");
  return (int)e;
}

template <class F>
int end_dim(const F& f, const Rep<F>& m) {
  if (m.is_zero()) throw ZeroRepresentation("end_dim of the zero rep");
  return hom_dim_oracle(f, m, m);
}

// The explicit representation of a symbolic class on a truncation. Infinite
// left tails (A1/A2/B families) clip at the truncation bottom; that is
// faithful because all their behavior below any finite point is constant.
// strict additionally demands the presentation points (j+1, and i+1 for B)
// inside the truncation, which is the faithfulness precondition for hom/ext
// computations against this class.
template <class F>
Rep<F> realize(const F& f, const FinPoset& P, const IndClass& x,
               bool strict = true) {
  Rep<F> r = zero_rep(f, P);
  auto need = [&](LPoint p) {
    auto v = P.vertex_of(p);
    if (!v) throw SupportExceedsTruncation("point outside truncation");
    return *v;
  };
  int n = (int)P.chain.size();
  int co = P.chain_offset;
  switch (x.c) {
    case Cls::IA: {
      int vi = need(x.i), vj = need(x.j);
      if (strict) (void)need(successor(x.j));
      for (int v = vi; v <= vj; ++v) r.dim[v] = 1;
      break;
    }
    case Cls::IA1:
    case Cls::IA2: {
      if (!P.has_q) throw SupportExceedsTruncation("Q points absent");
      int vj = need(x.j);
      if (strict) (void)need(successor(x.j));
      r.dim[x.c == Cls::IA1 ? 0 : 1] = 1;
      for (int v = co; v <= vj; ++v) r.dim[v] = 1;
      break;
    }
    case Cls::IB: {
      if (!P.has_q) throw SupportExceedsTruncation("Q points absent");
      int vi = need(x.i), vj = need(x.j);
      if (strict) {
        (void)need(successor(x.i));
        (void)need(successor(x.j));
      }
      r.dim[0] = r.dim[1] = 1;
      for (int v = co; v <= vi; ++v) r.dim[v] = 2;
      for (int v = vi + 1; v <= vj; ++v) r.dim[v] = 1;
      break;
    }
  }
  // transition matrices: identity wherever both ends have equal dim, the
  // B collapse step [1 1], and the Q entries e1 / e2.
  for (int a = 0; a < (int)P.hasse.size(); ++a) {
    auto [u, v] = P.hasse[a];
    Mat<F> e(f, r.dim[v], r.dim[u]);
    if (r.dim[u] > 0 && r.dim[v] > 0) {
      if (x.c == Cls::IB && u < co && n > 0) {
        // Q1 -> chain min as first coordinate, Q2 as second
        e.at(u == 0 ? 0 : 1, 0) = f.one();
      } else if (r.dim[u] == 2 && r.dim[v] == 1) {
        e.at(0, 0) = f.one();
        e.at(0, 1) = f.one();
      } else {
        for (int k = 0; k < std::min(r.dim[u], r.dim[v]); ++k)
          e.at(k, k) = f.one();
      }
    }
    r.edge[a] = std::move(e);
  }
  return r;
}

// Standard projective at a vertex: constant line on the up-set.
template <class F>
Rep<F> proj_at(const F& f, const FinPoset& P, int v) {
  Rep<F> r = zero_rep(f, P);
  for (int w = 0; w < P.size(); ++w)
    if (P.vleq(v, w)) r.dim[w] = 1;
  for (int a = 0; a < (int)P.hasse.size(); ++a) {
    auto [s, t] = P.hasse[a];
    Mat<F> e(f, r.dim[t], r.dim[s]);
    if (r.dim[s] && r.dim[t]) e.at(0, 0) = f.one();
    r.edge[a] = std::move(e);
  }
  return r;
}

template <class F>
Rep<F> direct_sum(const F& f, const std::vector<const Rep<F>*>& parts,
                  const FinPoset& P) {
  Rep<F> r = zero_rep(f, P);
  for (auto* m : parts) {
    if (m->P != &P) throw PosetMismatch("direct_sum: different posets");
    for (int v = 0; v < P.size(); ++v) r.dim[v] += m->dim[v];
  }
  for (int a = 0; a < (int)P.hasse.size(); ++a) {
    auto [u, v] = P.hasse[a];
    Mat<F> e(f, r.dim[v], r.dim[u]);
    int ru = 0, rv = 0;
    for (auto* m : parts) {
      for (int i = 0; i < m->dim[v]; ++i)
        for (int j = 0; j < m->dim[u]; ++j)
          e.at(rv + i, ru + j) = m->edge[a].at(i, j);
      ru += m->dim[u];
      rv += m->dim[v];
    }
    r.edge[a] = std::move(e);
  }
  return r;
}

// Composite transition matrix of m along the unique path u -> ... -> v.
template <class F>
Mat<F> transition(const F& f, const Rep<F>& m, int u, int v) {
  const FinPoset& P = *m.P;
  if (u == v) return Mat<F>::identity(f, m.dim[u]);
  // out-degree is <= 1 on truncation trees; walk forward
  Mat<F> acc = Mat<F>::identity(f, m.dim[u]);
  int cur = u;
  while (cur != v) {
    int next = -1, arrow = -1;
    for (int a = 0; a < (int)P.hasse.size(); ++a)
      if (P.hasse[a].first == cur) {
        next = P.hasse[a].second;
        arrow = a;
        break;
      }
    if (next < 0) throw OracleError("transition: no path");
    acc = mul(f, m.edge[arrow], acc);
    cur = next;
  }
  return acc;
}

// Vertexwise kernel with induced maps; also returns the inclusion.
template <class F>
std::pair<Rep<F>, RepMap<F>> kernel(const F& f, const Rep<F>& m,
                                    const Rep<F>& n, const RepMap<F>& g) {
  (void)n;
  const FinPoset& P = *m.P;
  Rep<F> K = zero_rep(f, P);
  RepMap<F> incl;
  std::vector<Mat<F>> basis;
  for (int v = 0; v < P.size(); ++v) {
    Mat<F> B = nullspace(f, g.at[v]);
    K.dim[v] = B.cols;
    basis.push_back(B);
  }
  for (int a = 0; a < (int)P.hasse.size(); ++a) {
    auto [u, v] = P.hasse[a];
    auto img = mul(f, m.edge[a], basis[u]);
    auto sol = solve(f, basis[v], img);
    if (!sol) throw OracleError("kernel: image not in kernel");
    K.edge[a] = *sol;
  }
  incl.at = std::move(basis);
  return {std::move(K), std::move(incl)};
}

// Vertexwise cokernel with induced maps; also returns the projection.
template <class F>
std::pair<Rep<F>, RepMap<F>> cokernel(const F& f, const Rep<F>& m,
                                      const Rep<F>& n, const RepMap<F>& g) {
  const FinPoset& P = *m.P;
  Rep<F> C = zero_rep(f, P);
  RepMap<F> proj;
  std::vector<Mat<F>> sections;  // complement columns inside n(v)
  for (int v = 0; v < P.size(); ++v) {
    // pick identity columns completing the column space of g_v
    Mat<F> aug = hstack(f, g.at[v], Mat<F>::identity(f, n.dim[v]));
    auto piv = rref(f, aug);
    std::vector<int> compl_cols;
    for (int c : piv)
      if (c >= g.at[v].cols) compl_cols.push_back(c - g.at[v].cols);
    C.dim[v] = (int)compl_cols.size();
    Mat<F> D(f, n.dim[v], C.dim[v]);
    for (int k = 0; k < C.dim[v]; ++k) D.at(compl_cols[k], k) = f.one();
    sections.push_back(D);
    // projection: coordinates w.r.t. [im g | D] restricted to the D block
    Mat<F> full = hstack(f, g.at[v], D);
    // full has full column rank onto n(v)? columns span; use least: solve
    // full * y = e_i for each i, take D-part
    auto sol = solve(f, full, Mat<F>::identity(f, n.dim[v]));
    if (!sol) throw OracleError("cokernel: basis completion failed");
    Mat<F> pv(f, C.dim[v], n.dim[v]);
    for (int i = 0; i < C.dim[v]; ++i)
      for (int j = 0; j < n.dim[v]; ++j)
        pv.at(i, j) = sol->at(g.at[v].cols + i, j);
    proj.at.push_back(std::move(pv));
  }
  for (int a = 0; a < (int)P.hasse.size(); ++a) {
    auto [u, v] = P.hasse[a];
    C.edge[a] = mul(f, proj.at[v], mul(f, n.edge[a], sections[u]));
  }
  return {std::move(C), std::move(proj)};
}

// Minimal projective presentation P1 -> P0 -> M -> 0.
template <class F>
struct Presentation {
  std::vector<int> p0;     // vertices of the P0 factors
  std::vector<int> p1;     // vertices of the P1 factors
  Mat<F> scalar;           // |p0| x |p1|, entry (i,j): component P_{p1[j]} -> P_{p0[i]}
  Rep<F> P0, P1;
  RepMap<F> alpha;         // P1 -> P0
  RepMap<F> pi;            // P0 -> M
};

// Generators of the top: per vertex, columns complementing the radical image.
template <class F>
std::vector<Mat<F>> top_generators(const F& f, const Rep<F>& m) {
  const FinPoset& P = *m.P;
  std::vector<Mat<F>> gens;
  for (int v = 0; v < P.size(); ++v) {
    int in_cols = 0;
    for (auto [u, w] : P.hasse)
      if (w == v) in_cols += m.dim[u];
    Mat<F> R(f, m.dim[v], in_cols);
    int c0 = 0;
    for (int a = 0; a < (int)P.hasse.size(); ++a) {
      auto [u, w] = P.hasse[a];
      if (w != v) continue;
      for (int i = 0; i < m.dim[v]; ++i)
        for (int j = 0; j < m.dim[u]; ++j)
          R.at(i, c0 + j) = m.edge[a].at(i, j);
      c0 += m.dim[u];
    }
    Mat<F> aug = hstack(f, R, Mat<F>::identity(f, m.dim[v]));
    auto piv = rref(f, aug);
    std::vector<int> compl_cols;
    for (int c : piv)
      if (c >= in_cols) compl_cols.push_back(c - in_cols);
    Mat<F> G(f, m.dim[v], (int)compl_cols.size());
    for (int k = 0; k < (int)compl_cols.size(); ++k)
      G.at(compl_cols[k], k) = f.one();
    gens.push_back(std::move(G));
  }
  return gens;
}

// Projective cover P(tops) -> M, returning factor vertices and the map.
template <class F>
std::tuple<std::vector<int>, Rep<F>, RepMap<F>> projective_cover(
    const F& f, const Rep<F>& m) {
  const FinPoset& P = *m.P;
  auto gens = top_generators(f, m);
  std::vector<int> factors;                 // vertex per factor
  std::vector<std::pair<int, int>> which;   // (vertex, column in gens[v])
  for (int v = 0; v < P.size(); ++v)
    for (int k = 0; k < gens[v].cols; ++k) {
      factors.push_back(v);
      which.push_back({v, k});
    }
  std::vector<Rep<F>> projs;
  projs.reserve(factors.size());
  for (int v : factors) projs.push_back(proj_at(f, P, v));
  std::vector<const Rep<F>*> ptrs;
  for (auto& p : projs) ptrs.push_back(&p);
  Rep<F> P0 = direct_sum(f, ptrs, P);
  RepMap<F> pi;
  for (int w = 0; w < P.size(); ++w) {
    Mat<F> pw(f, m.dim[w], P0.dim[w]);
    int col = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
      int v = factors[i];
      if (!P.vleq(v, w)) continue;  // this factor contributes no basis at w
      // image of the factor generator under transition then the chosen vector
      auto [gv, gk] = which[i];
      Mat<F> x(f, m.dim[gv], 1);
      for (int r = 0; r < m.dim[gv]; ++r) x.at(r, 0) = gens[gv].at(r, gk);
      auto y = mul(f, transition(f, m, v, w), x);
      for (int r = 0; r < m.dim[w]; ++r) pw.at(r, col) = y.at(r, 0);
      ++col;
    }
    pi.at.push_back(std::move(pw));
  }
  return {factors, std::move(P0), std::move(pi)};
}

template <class F>
Presentation<F> min_presentation(const F& f, const Rep<F>& m) {
  const FinPoset& P = *m.P;
  Presentation<F> pr;
  auto [p0v, P0, pi] = projective_cover(f, m);
  pr.p0 = p0v;
  pr.P0 = std::move(P0);
  pr.pi = std::move(pi);
  auto [K, incl] = kernel(f, pr.P0, m, pr.pi);
  auto [p1v, P1, piK] = projective_cover(f, K);
  pr.p1 = p1v;
  pr.P1 = std::move(P1);
  // alpha = incl . piK : P1 -> P0
  for (int v = 0; v < P.size(); ++v)
    pr.alpha.at.push_back(mul(f, incl.at[v], piK.at[v]));
  // scalar matrix: read off coordinates at each P1-factor generator vertex.
  // P0(w) basis is indexed by factors i with p0[i] <= w, in factor order.
  pr.scalar = Mat<F>(f, (int)pr.p0.size(), (int)pr.p1.size());
  for (size_t j = 0; j < pr.p1.size(); ++j) {
    int w = pr.p1[j];
    // column of the generator of factor j inside P1(w)
    int col = 0;
    for (size_t jj = 0; jj < j; ++jj)
      if (P.vleq(pr.p1[jj], w)) ++col;
    int row = 0;
    for (size_t i = 0; i < pr.p0.size(); ++i) {
      if (!P.vleq(pr.p0[i], w)) continue;
      pr.scalar.at((int)i, (int)j) = pr.alpha.at[w].at(row, col);
      ++row;
    }
  }
  return pr;
}

// Opposite poset (same vertex set, reversed arrows).
inline FinPoset opposite(const FinPoset& P) {
  FinPoset op = P;
  for (auto& [u, v] : op.hasse) std::swap(u, v);
  return op;
}

// Projective over the opposite poset at v: constant line on the original
// down-set of v.
template <class F>
Rep<F> op_proj_at(const F& f, const FinPoset& OP, const FinPoset& P, int v) {
  Rep<F> r = zero_rep(f, OP);
  for (int w = 0; w < P.size(); ++w)
    if (P.vleq(w, v)) r.dim[w] = 1;
  for (int a = 0; a < (int)OP.hasse.size(); ++a) {
    auto [s, t] = OP.hasse[a];
    Mat<F> e(f, r.dim[t], r.dim[s]);
    if (r.dim[s] && r.dim[t]) e.at(0, 0) = f.one();
    r.edge[a] = std::move(e);
  }
  return r;
}

// The Auslander-Reiten translate DTr via presentation, transpose over the
// opposite poset, and vector-space dual. Result lives over the same poset.
template <class F>
Rep<F> dtr_translate(const F& f, const Rep<F>& m, const FinPoset& storage_op,
                     Rep<F>* tr_out = nullptr) {
  const FinPoset& P = *m.P;
  if (m.is_zero()) throw ZeroRepresentation("dtr of the zero rep");
  Presentation<F> pr = min_presentation(f, m);
  const FinPoset& OP = storage_op;
  // beta: sum_i Pop_{p0[i]} -> sum_j Pop_{p1[j]} with the transposed scalars
  std::vector<Rep<F>> src_f, dst_f;
  for (int v : pr.p0) src_f.push_back(op_proj_at(f, OP, P, v));
  for (int v : pr.p1) dst_f.push_back(op_proj_at(f, OP, P, v));
  std::vector<const Rep<F>*> sp, dp;
  for (auto& r : src_f) sp.push_back(&r);
  for (auto& r : dst_f) dp.push_back(&r);
  Rep<F> S = direct_sum(f, sp, OP);
  Rep<F> D = direct_sum(f, dp, OP);
  RepMap<F> beta;
  for (int w = 0; w < P.size(); ++w) {
    Mat<F> bw(f, D.dim[w], S.dim[w]);
    int col = 0;
    for (size_t i = 0; i < pr.p0.size(); ++i) {
      if (!P.vleq(w, pr.p0[i])) continue;
      int row = 0;
      for (size_t j = 0; j < pr.p1.size(); ++j) {
        if (!P.vleq(w, pr.p1[j])) continue;
        // component Pop_{p0[i]} -> Pop_{p1[j]}: scalar(i,j) times canonical
        bw.at(row, col) = pr.scalar.at((int)i, (int)j);
        ++row;
      }
      ++col;
    }
    beta.at.push_back(std::move(bw));
  }
  auto [Tr, projq] = cokernel(f, S, D, beta);
  if (tr_out) *tr_out = Tr;
  // dual: same dims, arrows of P get the transposed opposite-arrow matrices.
  Rep<F> out = zero_rep(f, P);
  out.dim = Tr.dim;
  for (int a = 0; a < (int)P.hasse.size(); ++a)
    out.edge[a] = transpose(f, Tr.edge[a]);
  return out;
}

// Basis of Ext^1(X, Y) presented as maps P1 -> Y modulo those factoring
// through alpha, for a given presentation of X.
template <class F>
std::vector<std::vector<Mat<F>>> ext_classes(const F& f,
                                             const Presentation<F>& pr,
                                             const Rep<F>& y) {
  const FinPoset& P = *y.P;
  // Hom(P_w, Y) = Y(w); map Hom(P0, Y) -> Hom(P1, Y) by precomposition.
  std::vector<int> off0(pr.p0.size() + 1, 0), off1(pr.p1.size() + 1, 0);
  for (size_t i = 0; i < pr.p0.size(); ++i)
    off0[i + 1] = off0[i] + y.dim[pr.p0[i]];
  for (size_t j = 0; j < pr.p1.size(); ++j)
    off1[j + 1] = off1[j] + y.dim[pr.p1[j]];
  Mat<F> comp(f, off1.back(), off0.back());
  for (size_t j = 0; j < pr.p1.size(); ++j)
    for (size_t i = 0; i < pr.p0.size(); ++i) {
      if (!P.vleq(pr.p0[i], pr.p1[j])) continue;
      auto tr = mul(f, transition(f, y, pr.p0[i], pr.p1[j]),
                    Mat<F>::identity(f, y.dim[pr.p0[i]]));
      auto sc = pr.scalar.at((int)i, (int)j);
      for (int r = 0; r < y.dim[pr.p1[j]]; ++r)
        for (int c = 0; c < y.dim[pr.p0[i]]; ++c)
          comp.at(off1[j] + r, off0[i] + c) =
              f.add(comp.at(off1[j] + r, off0[i] + c), f.mul(sc, tr.at(r, c)));
    }
  // complement of the column space inside Hom(P1, Y)
  Mat<F> aug = hstack(f, comp, Mat<F>::identity(f, comp.rows));
  auto piv = rref(f, aug);
  std::vector<std::vector<Mat<F>>> classes;
  for (int c : piv) {
    if (c < comp.cols) continue;
    int idx = c - comp.cols;  // e_idx of Hom(P1, Y)
    std::vector<Mat<F>> g;    // per P1 factor: vector in Y(p1[j])
    for (size_t j = 0; j < pr.p1.size(); ++j) {
      Mat<F> gj(f, y.dim[pr.p1[j]], 1);
      if (idx >= off1[j] && idx < off1[j + 1])
        gj.at(idx - off1[j], 0) = f.one();
      g.push_back(std::move(gj));
    }
    classes.push_back(std::move(g));
  }
  return classes;
}

// Middle term of the extension of X by Y determined by the given classes:
// 0 -> Y^(h copies glued) ... concretely M = coker(P1 -> Y + P0) for one
// class, and the universal middle coker(P1^h -> Y + P0^h) in general.
// Returns the middle rep plus the maps Y -> M and M -> X.
template <class F>
struct MiddleData {
  Rep<F> M;
  RepMap<F> from_y;  // Y -> M
  RepMap<F> to_x;    // M -> X
};

template <class F>
MiddleData<F> middle_from_classes(
    const F& f, const Rep<F>& x, const Presentation<F>& pr, const Rep<F>& y,
    const std::vector<std::vector<Mat<F>>>& classes) {
  const FinPoset& P = *x.P;
  int h = (int)classes.size();
  // source: P1^h; target: Y + P0^h
  std::vector<Rep<F>> p1copies(h, pr.P1), p0copies(h, pr.P0);
  std::vector<const Rep<F>*> sp, tp;
  for (auto& r : p1copies) sp.push_back(&r);
  tp.push_back(&y);
  for (auto& r : p0copies) tp.push_back(&r);
  Rep<F> SRC = h ? direct_sum(f, sp, P) : zero_rep(f, P);
  Rep<F> TGT = direct_sum(f, tp, P);
  // the map (-g_k on the Y block, alpha on the k-th P0 block)
  RepMap<F> big;
  for (int w = 0; w < P.size(); ++w) {
    Mat<F> bw(f, TGT.dim[w], SRC.dim[w]);
    for (int k = 0; k < h; ++k) {
      int cof = k * pr.P1.dim[w];
      // -g_k: P1 -> Y evaluated at w: generator data extended by transitions
      // g_k is given per factor at its generator vertex; the full map at w:
      int col = 0;
      for (size_t j = 0; j < pr.p1.size(); ++j) {
        if (!P.vleq(pr.p1[j], w)) continue;
        // factor j contributes one basis column at w (value: transition of
        // the class vector from p1[j] to w)
        auto yv = mul(f, transition(f, y, pr.p1[j], w), classes[k][j]);
        for (int r = 0; r < y.dim[w]; ++r)
          bw.at(r, cof + col) = f.neg(yv.at(r, 0));
        ++col;
      }
      // alpha block into the k-th P0 copy
      int p0off = y.dim[w] + k * pr.P0.dim[w];
      for (int r = 0; r < pr.P0.dim[w]; ++r)
        for (int c = 0; c < pr.P1.dim[w]; ++c)
          bw.at(p0off + r, cof + c) = pr.alpha.at[w].at(r, c);
    }
    big.at.push_back(std::move(bw));
  }
  auto [M, q] = cokernel(f, SRC, TGT, big);
  MiddleData<F> out;
  out.M = std::move(M);
  // Y -> M: include then project
  for (int w = 0; w < P.size(); ++w) {
    Mat<F> inc(f, TGT.dim[w], y.dim[w]);
    for (int r = 0; r < y.dim[w]; ++r) inc.at(r, r) = f.one();
    out.from_y.at.push_back(mul(f, q.at[w], inc));
  }
  // M -> X: on TGT, kill Y and map each P0 copy by pi (sum over copies is
  // wrong for h > 1; the projection to X^h would be the honest codomain.
  // For the middle-term use cases (h = 1 AR middles; universal extension
  // checks use only M's isomorphism type) we expose the h = 1 map.)
  for (int w = 0; w < P.size(); ++w) {
    Mat<F> tox(f, x.dim[w], out.M.dim[w]);
    if (h >= 1) {
      // section of q at w: q has a right inverse on basis completion; build
      // via solve(q, id)
      auto sec = solve(f, q.at[w], Mat<F>::identity(f, out.M.dim[w]));
      if (sec) {
        Mat<F> proj0(f, pr.P0.dim[w], TGT.dim[w]);
        for (int r = 0; r < pr.P0.dim[w]; ++r)
          proj0.at(r, y.dim[w] + r) = f.one();
        tox = mul(f, pr.pi.at[w], mul(f, proj0, *sec));
      }
    }
    out.to_x.at.push_back(std::move(tox));
  }
  return out;
}

// dim Hom(c, m) read off the minimal projective presentation of the class
// as realized on m's truncation: the kernel of the induced map between
// generator fibers. Agrees with hom_dim_oracle on catalog classes but only
// costs a few small transition-matrix ranks.
template <class F>
long pres_hom_dim(const F& f, const FinPoset& P, const IndClass& c,
                  const Rep<F>& m) {
  int last = P.chain_offset + (int)P.chain.size() - 1;
  // chain-successor vertex carrying the relation, or -1 past the top
  auto rel_of = [&](LPoint p) -> int {
    auto v = P.vertex_of(p);
    if (!v) throw OracleError("pres_hom_dim: point outside truncation");
    return *v < last ? *v + 1 : -1;
  };
  if (c.c == Cls::IA) {
    auto va = P.vertex_of(c.i);
    if (!va) throw OracleError("pres_hom_dim: point outside truncation");
    int r = rel_of(c.j);
    if (r < 0) return m.dim[*va];
    return m.dim[*va] - rank(f, transition(f, m, *va, r));
  }
  if (c.c == Cls::IA1 || c.c == Cls::IA2) {
    int q = c.c == Cls::IA1 ? 0 : 1;
    int r = rel_of(c.j);
    if (r < 0) return m.dim[q];
    return m.dim[q] - rank(f, transition(f, m, q, r));
  }
  // IB: generators at Q1, Q2; relations (1,-1) above i and (1,0) above j
  int r1 = rel_of(c.i), r2 = rel_of(c.j);
  int c1 = m.dim[0], c2 = m.dim[1];
  int rows = (r1 >= 0 ? m.dim[r1] : 0) + (r2 >= 0 ? m.dim[r2] : 0);
  if (rows == 0) return c1 + c2;
  Mat<F> A(f, rows, c1 + c2);
  int ro = 0;
  if (r1 >= 0) {
    auto t1 = transition(f, m, 0, r1);
    auto t2 = transition(f, m, 1, r1);
    for (int i = 0; i < m.dim[r1]; ++i) {
      for (int j = 0; j < c1; ++j) A.at(ro + i, j) = t1.at(i, j);
      for (int j = 0; j < c2; ++j) A.at(ro + i, c1 + j) = f.neg(t2.at(i, j));
    }
    ro += m.dim[r1];
  }
  if (r2 >= 0) {
    auto t1 = transition(f, m, 0, r2);
    for (int i = 0; i < m.dim[r2]; ++i)
      for (int j = 0; j < c1; ++j) A.at(ro + i, j) = t1.at(i, j);
  }
  return (c1 + c2) - rank(f, A);
}

// Krull-Schmidt multiplicities of m against a catalog of candidate
// indecomposable classes, by hom-count fingerprinting with back-substitution
// along a linear extension of the hom-order. Throws NotInCatalog when no
// nonnegative integral solution reproduces m's dimension vector.
template <class F>
std::vector<int> decompose(const F& f, const Rep<F>& m,
                           const std::vector<IndClass>& catalog) {
  const FinPoset& P = *m.P;
  std::vector<int> mult(catalog.size(), 0);
  if (m.is_zero()) return mult;
  std::vector<int> cand;
  std::vector<long> b;
  for (size_t i = 0; i < catalog.size(); ++i) {
    long h = pres_hom_dim(f, P, catalog[i], m);
    if (h > 0) {
      cand.push_back((int)i);
      b.push_back(h);
    }
  }
  int k = (int)cand.size();
  std::vector<Rep<F>> cr;
  for (int i = 0; i < k; ++i) cr.push_back(realize(f, P, catalog[cand[i]], false));
  std::vector<std::vector<long>> H(k, std::vector<long>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      H[i][j] = pres_hom_dim(f, P, catalog[cand[i]], cr[j]);
  for (int i = 0; i < k; ++i)
    if (H[i][i] != 1)
      throw NotInCatalog("catalog entry with endomorphism ring != k");
  // topological order along edges i -> j when Hom(cand_i, cand_j) != 0
  std::vector<int> state(k, 0), order;
  std::function<void(int)> dfs = [&](int i) {
    state[i] = 1;
    for (int j = 0; j < k; ++j) {
      if (j == i || H[i][j] == 0) continue;
      if (state[j] == 1) throw NotInCatalog("hom-order cycle in catalog");
      if (state[j] == 0) dfs(j);
    }
    state[i] = 2;
    order.push_back(i);  // sinks first
  };
  for (int i = 0; i < k; ++i)
    if (state[i] == 0) dfs(i);
  std::vector<long> mu(k, 0);
  for (int oi = 0; oi < k; ++oi) {
    int i = order[oi];
    long v = b[i];
    for (int j = 0; j < k; ++j)
      if (j != i && H[i][j] > 0) v -= mu[j] * H[i][j];
    if (v < 0) throw NotInCatalog("negative multiplicity");
    mu[i] = v;
  }
  // dimension-vector cross-check
  std::vector<long> dims(m.dim.size(), 0);
  for (int i = 0; i < k; ++i)
    for (size_t v = 0; v < dims.size(); ++v)
      dims[v] += mu[i] * cr[i].dim[v];
  for (size_t v = 0; v < dims.size(); ++v)
    if (dims[v] != m.dim[v])
      throw NotInCatalog("dimension vector mismatch after fingerprinting");
  for (int i = 0; i < k; ++i) mult[cand[i]] = (int)mu[i];
  return mult;
}

}  // namespace dcat
