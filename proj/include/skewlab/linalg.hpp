#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "upoly.hpp"

namespace skewlab {

// Dense linear algebra over a field context F. Matrices are row-major
// vectors of rows.
namespace linalg {

template <class F>
using vec = std::vector<typename F::elem>;
template <class F>
using mat = std::vector<vec<F>>;

template <class F>
mat<F> zeros(const F& K, std::size_t rows, std::size_t cols) {
  return mat<F>(rows, vec<F>(cols, K.zero()));
}

template <class F>
mat<F> identity(const F& K, std::size_t n) {
  auto m = zeros(K, n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = K.one();
  return m;
}

template <class F>
mat<F> multiply(const F& K, const mat<F>& a, const mat<F>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  auto r = zeros(K, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (K.is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] = K.add(r[i][j], K.mul(a[i][l], b[l][j]));
    }
  return r;
}

template <class F>
vec<F> apply(const F& K, const mat<F>& a, const vec<F>& v) {
  vec<F> r(a.size(), K.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!K.is_zero(v[j])) r[i] = K.add(r[i], K.mul(a[i][j], v[j]));
  return r;
}

template <class F>
bool equal(const F& K, const mat<F>& a, const mat<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!K.eq(a[i][j], b[i][j])) return false;
  }
  return true;
}

// Reduces m to reduced row echelon form in place over the first `cols`
// columns and returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(const F& K, mat<F>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && K.is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const auto inv = K.inv(m[row][c]);
    for (auto& x : m[row]) x = K.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || K.is_zero(m[i][c])) continue;
      const auto f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j)
        if (!K.is_zero(m[row][j])) m[i][j] = K.sub(m[i][j], K.mul(f, m[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class F>
std::vector<std::size_t> rref(const F& K, mat<F>& m) {
  return rref(K, m, m.empty() ? 0 : m[0].size());
}

template <class F>
std::size_t rank(const F& K, mat<F> m) {
  return rref(K, m).size();
}

// Basis of {v : m v = 0} for a matrix with `cols` columns.
template <class F>
mat<F> kernel(const F& K, mat<F> m, std::size_t cols) {
  const auto pivots = rref(K, m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  mat<F> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    vec<F> v(cols, K.zero());
    v[free] = K.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = K.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// A solution of m v = rhs with free variables set to zero, if one exists.
template <class F>
std::optional<vec<F>> solve(const F& K, const mat<F>& m, const vec<F>& rhs, std::size_t cols) {
  mat<F> aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(cols, K.zero());
    aug[i].push_back(rhs[i]);
  }
  const auto pivots = rref(K, aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  vec<F> v(cols, K.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = aug[r][cols];
  return v;
}

template <class F>
std::optional<mat<F>> inverse(const F& K, const mat<F>& a) {
  const std::size_t n = a.size();
  mat<F> aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, K.zero());
    aug[i][n + i] = K.one();
  }
  const auto pivots = rref(K, aug, n);
  if (pivots.size() != n) return std::nullopt;
  mat<F> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = vec<F>(aug[i].begin() + n, aug[i].end());
  return inv;
}

template <class F>
mat<F> transpose(const F&, const mat<F>& a) {
  if (a.empty()) return {};
  mat<F> t(a[0].size(), vec<F>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Characteristic polynomial det(y I - a) by Hessenberg reduction, ascending.
template <class F>
upoly::poly<F> charpoly(const F& K, mat<F> h) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && K.is_zero(h[i][m - 1])) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const auto inv = K.inv(h[m][m - 1]);
    for (std::size_t k = m + 1; k < n; ++k) {
      if (K.is_zero(h[k][m - 1])) continue;
      const auto u = K.mul(h[k][m - 1], inv);
      for (std::size_t c = 0; c < n; ++c) h[k][c] = K.sub(h[k][c], K.mul(u, h[m][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][m] = K.add(h[r][m], K.mul(u, h[r][k]));
    }
  }
  std::vector<upoly::poly<F>> p(n + 1);
  p[0] = {K.one()};
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = upoly::mul(K, upoly::poly<F>{K.neg(h[m - 1][m - 1]), K.one()}, p[m - 1]);
    auto t = K.one();
    for (std::size_t i = 1; i < m; ++i) {
      t = K.mul(t, h[m - i][m - i - 1]);
      const auto c = K.mul(t, h[m - i - 1][m - 1]);
      p[m] = upoly::sub(K, p[m], upoly::scale(K, p[m - i - 1], c));
    }
  }
  return p[n];
}

// Minimal polynomial of a square matrix: the first linear dependence among
// I, a, a^2, ... flattened to vectors. Monic, ascending.
template <class F>
upoly::poly<F> minpoly(const F& K, const mat<F>& a) {
  const std::size_t n = a.size();
  std::vector<vec<F>> powers;
  mat<F> cur = identity(K, n);
  for (std::size_t k = 0; k <= n; ++k) {
    vec<F> flat;
    for (const auto& row : cur) flat.insert(flat.end(), row.begin(), row.end());
    powers.push_back(flat);
    // Columns are the flattened powers; look for a dependence.
    mat<F> sys(n * n, vec<F>(powers.size()));
    for (std::size_t r = 0; r < n * n; ++r)
      for (std::size_t c = 0; c < powers.size(); ++c) sys[r][c] = powers[c][r];
    const auto ker = kernel(K, sys, powers.size());
    if (!ker.empty()) {
      const auto& v = ker.front();
      return upoly::monic(K, upoly::poly<F>(v.begin(), v.end()));
    }
    cur = multiply(K, cur, a);
  }
  throw std::logic_error("minimal polynomial not found");
}

}  // namespace linalg

}  // namespace skewlab
