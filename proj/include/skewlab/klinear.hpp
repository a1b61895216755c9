#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"

namespace skewlab {

// Linear systems whose unknowns lie in the fixed field K of sigma while the
// coefficients lie in L. Stacking the sigma-conjugates of every equation
// makes the row space sigma-stable, so its reduced echelon form and the
// resulting kernel basis have entries in K.
namespace klinear {

template <class L>
linalg::mat<L> conjugate_stack(const L& F, const linalg::mat<L>& m) {
  linalg::mat<L> out;
  out.reserve(m.size() * F.n());
  for (unsigned k = 0; k < F.n(); ++k)
    for (const auto& row : m) {
      linalg::vec<L> r;
      r.reserve(row.size());
      for (const auto& x : row) r.push_back(k == 0 ? x : F.sigma(x, k));
      out.push_back(std::move(r));
    }
  return out;
}

template <class L>
void require_fixed(const L& F, const linalg::vec<L>& v) {
  for (const auto& x : v)
    if (!F.in_base(x)) throw std::logic_error("descent produced a coefficient outside the fixed field");
}

// K-basis of {c in K^cols : m c = 0}.
template <class L>
linalg::mat<L> kernel(const L& F, const linalg::mat<L>& m, std::size_t cols) {
  auto basis = linalg::kernel(F, conjugate_stack(F, m), cols);
  for (const auto& v : basis) require_fixed(F, v);
  return basis;
}

// A solution c in K^cols of m c = rhs, if one exists.
template <class L>
std::optional<linalg::vec<L>> solve(const L& F, const linalg::mat<L>& m, const linalg::vec<L>& rhs,
                                     std::size_t cols) {
  linalg::mat<L> aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(cols, F.zero());
    aug[i].push_back(rhs[i]);
  }
  const auto stacked = conjugate_stack(F, aug);
  linalg::mat<L> sys;
  linalg::vec<L> b;
  for (const auto& row : stacked) {
    sys.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(cols));
    b.push_back(row[cols]);
  }
  auto sol = linalg::solve(F, sys, b, cols);
  if (sol) require_fixed(F, *sol);
  return sol;
}

}  // namespace klinear

}  // namespace skewlab
