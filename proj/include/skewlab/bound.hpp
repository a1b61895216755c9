#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "skew_poly.hpp"
#include "upoly.hpp"

namespace skewlab {

// The minimal central left multiple F(y) of f together with the
// characteristic polynomial of A_f and the derived exponents.
template <class Field>
struct BoundReport {
  upoly::poly<Field> F;
  upoly::poly<Field> char_poly;
  std::size_t s = 0;
  // Set when char_poly = F^ell and ell divides n; then m = n / ell.
  std::optional<std::size_t> ell;
  std::optional<std::size_t> m;
};

// Companion matrix of a monic f: ones on the subdiagonal and -f_0, ...,
// -f_{h-1} in the last column.
template <class Field>
linalg::mat<Field> companion(const SkewPoly<Field>& f) {
  const Field& F = f.field();
  if (!f.is_monic() || f.length() < 2) throw std::invalid_argument("companion matrix needs a monic polynomial of positive degree");
  const std::size_t h = f.length() - 1;
  auto C = linalg::zeros(F, h, h);
  for (std::size_t i = 0; i + 1 < h; ++i) C[i + 1][i] = F.one();
  for (std::size_t i = 0; i < h; ++i) C[i][h - 1] = F.neg(f.coeffs()[i]);
  return C;
}

template <class Field>
linalg::mat<Field> sigma_matrix(const Field& F, linalg::mat<Field> a, long long k) {
  for (auto& row : a)
    for (auto& x : row) x = F.sigma(x, k);
  return a;
}

// A_f = C_f C_f^sigma ... C_f^{sigma^{n-1}}.
template <class Field>
linalg::mat<Field> companion_product(const SkewPoly<Field>& f) {
  const Field& F = f.field();
  const auto C = companion(f);
  auto A = C;
  for (unsigned i = 1; i < F.n(); ++i) A = linalg::multiply(F, A, sigma_matrix(F, C, i));
  return A;
}

template <class Field>
void require_bound_input(const SkewPoly<Field>& f) {
  const Field& F = f.field();
  if (f.is_zero() || f.length() < 2) throw std::invalid_argument("polynomial must have positive degree");
  if (!f.is_monic()) throw std::invalid_argument("polynomial must be monic");
  if (F.is_zero(f.coeffs()[0])) throw std::invalid_argument("constant coefficient must be nonzero");
}

template <class Field>
BoundReport<Field> bound(const SkewPoly<Field>& f) {
  require_bound_input(f);
  const Field& F = f.field();
  const auto A = companion_product(f);
  BoundReport<Field> rep;
  rep.F = linalg::minpoly(F, A);
  rep.char_poly = linalg::charpoly(F, A);
  for (const auto& c : rep.F)
    if (!F.in_base(c)) throw std::logic_error("bound has a coefficient outside the fixed field");
  for (const auto& c : rep.char_poly)
    if (!F.in_base(c)) throw std::logic_error("characteristic polynomial has a coefficient outside the fixed field");
  rep.s = rep.F.size() - 1;
  const std::size_t h = f.length() - 1;
  if (rep.s > 0 && h % rep.s == 0) {
    const std::size_t e = h / rep.s;
    if (F.n() % e == 0 && upoly::equal(F, rep.char_poly, upoly::pow(F, rep.F, static_cast<unsigned>(e)))) {
      rep.ell = e;
      rep.m = F.n() / e;
    }
  }
  return rep;
}

template <class Field>
typename Field::elem minus_one_power(const Field& F, std::size_t k) {
  return k % 2 ? F.neg(F.one()) : F.one();
}

// N(f_0) = (-1)^{s ell (n-1)} F_0^ell for irreducible f.
template <class Field>
bool norm_identity_holds(const SkewPoly<Field>& f, const BoundReport<Field>& rep) {
  if (!rep.ell) return false;
  const Field& F = f.field();
  const std::size_t ell = *rep.ell;
  const auto lhs = F.norm(f.coeffs()[0]);
  auto rhs = minus_one_power(F, rep.s * ell * (F.n() - 1));
  for (std::size_t i = 0; i < ell; ++i) rhs = F.mul(rhs, rep.F[0]);
  return F.eq(lhs, rhs);
}

// Over a finite field, f with f_0 != 0 is irreducible exactly when its bound
// is irreducible over K and has the same degree as f.
template <class Field>
bool is_irreducible_via_bound(const SkewPoly<Field>& f) {
  const auto rep = bound(f);
  const Field& F = f.field();
  return rep.s + 1 == f.length() && upoly::is_irreducible_by_trial(F, rep.F, F.base_elements());
}

// Exhaustive search for a monic right or left divisor of degree 1..deg/2.
template <class Field>
bool is_irreducible_exhaustive(const SkewPoly<Field>& f) {
  const Field& F = f.field();
  const std::size_t h = f.length() - 1;
  if (h == 0) return false;
  const auto elems = F.elements();
  for (std::size_t d = 1; d <= h / 2; ++d) {
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      std::vector<typename Field::elem> c(d + 1);
      for (std::size_t i = 0; i < d; ++i) c[i] = elems[idx[i]];
      c[d] = F.one();
      const SkewPoly<Field> g(F, c);
      if (right_divides(g, f) || left_divides(g, f)) return false;
      std::size_t pos = 0;
      while (pos < d && ++idx[pos] == elems.size()) idx[pos++] = 0;
      if (pos == d) break;
    }
  }
  return true;
}

}  // namespace skewlab
