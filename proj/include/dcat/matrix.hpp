// Dense matrices over an explicit field context, with the handful of exact
// routines the oracle needs: rank, nullspace, solving, left sections.
#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

namespace dcat {

template <class F>
struct Mat {
  using E = typename F::Elt;
  int rows = 0, cols = 0;
  std::vector<E> a;  // row-major

  Mat() = default;
  Mat(const F& f, int r, int c) : rows(r), cols(c), a((size_t)r * c, f.zero()) {}

  E& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const E& at(int i, int j) const { return a[(size_t)i * cols + j]; }

  static Mat identity(const F& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
};

template <class F>
Mat<F> mul(const F& f, const Mat<F>& x, const Mat<F>& y) {
  assert(x.cols == y.rows);
  Mat<F> z(f, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (f.is_zero(x.at(i, k))) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = f.add(z.at(i, j), f.mul(x.at(i, k), y.at(k, j)));
    }
  return z;
}

template <class F>
Mat<F> add(const F& f, const Mat<F>& x, const Mat<F>& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat<F> z(f, x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = f.add(x.a[i], y.a[i]);
  return z;
}

template <class F>
Mat<F> scale(const F& f, const typename F::Elt& c, const Mat<F>& x) {
  Mat<F> z(f, x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = f.mul(c, x.a[i]);
  return z;
}

template <class F>
Mat<F> transpose(const F& f, const Mat<F>& x) {
  Mat<F> z(f, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

template <class F>
Mat<F> hstack(const F& f, const Mat<F>& x, const Mat<F>& y) {
  assert(x.rows == y.rows);
  Mat<F> z(f, x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
  }
  return z;
}

template <class F>
Mat<F> vstack(const F& f, const Mat<F>& x, const Mat<F>& y) {
  assert(x.cols == y.cols);
  Mat<F> z(f, x.rows + y.rows, x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(x.rows + i, j) = y.at(i, j);
  return z;
}

// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<int> rref(const F& f, Mat<F>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    auto inv = f.div(f.one(), m.at(r, c));
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = f.mul(inv, m.at(r, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      auto coef = m.at(i, c);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(coef, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(const F& f, Mat<F> m) {
  return (int)rref(f, m).size();
}

// Columns form a basis of {x : m x = 0}.
template <class F>
Mat<F> nullspace(const F& f, Mat<F> m) {
  auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<F> basis(f, m.cols, (int)free_cols.size());
  for (int k = 0; k < (int)free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, k) = f.one();
    for (int i = 0; i < (int)pivots.size(); ++i)
      basis.at(pivots[i], k) = f.neg(m.at(i, fc));
  }
  return basis;
}

// One solution of m x = b, or nullopt when inconsistent (b has many columns:
// solved jointly, column by column semantics).
template <class F>
std::optional<Mat<F>> solve(const F& f, const Mat<F>& m, const Mat<F>& b) {
  assert(m.rows == b.rows);
  Mat<F> aug = hstack(f, m, b);
  auto pivots = rref(f, aug);
  for (int c : pivots)
    if (c >= m.cols) return std::nullopt;  // inconsistent column
  Mat<F> x(f, m.cols, b.cols);
  for (int i = 0; i < (int)pivots.size(); ++i)
    for (int j = 0; j < b.cols; ++j) x.at(pivots[i], j) = aug.at(i, m.cols + j);
  return x;
}

// A left section s of an injective-on-columns map: rows of the result give
// coordinates with respect to the column space; requires full column rank.
// Returns s with s * m = identity(m.cols).
template <class F>
Mat<F> left_inverse(const F& f, const Mat<F>& m) {
  Mat<F> aug = hstack(f, m, Mat<F>::identity(f, m.rows));
  auto pivots = rref(f, aug);
  Mat<F> s(f, m.cols, m.rows);
  int found = 0;
  for (int i = 0; i < (int)pivots.size(); ++i) {
    if (pivots[i] >= m.cols) continue;
    for (int j = 0; j < m.rows; ++j) s.at(pivots[i], j) = aug.at(i, m.cols + j);
    ++found;
  }
  assert(found == m.cols && "left_inverse needs full column rank");
  return s;
}

}  // namespace dcat
