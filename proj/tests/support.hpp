#pragma once

// Fixtures and independent oracles shared by the test suites. The oracles
// avoid the production code paths they are compared against: bounds by
// exhaustive search, ranks by counting kernels of linearized maps, and
// irreducibility by searching for linear factors.

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "skewlab/bound.hpp"
#include "skewlab/finite_field.hpp"
#include "skewlab/function_field.hpp"
#include "skewlab/quotient.hpp"
#include "skewlab/skew_poly.hpp"

namespace skewlab::testing {

using FF = FiniteField;
using FPoly = SkewPoly<FiniteField>;
using central = upoly::poly<FiniteField>;

// F_4 with w^2 = w + 1 and F_8 with w^3 = w + 1.
inline const FF& f4() {
  static const FF L(2, 1, 2, 1, {1, 1, 1});
  return L;
}
inline const FF& f8() {
  static const FF L(2, 1, 3, 1, {1, 1, 0, 1});
  return L;
}
inline const FF& f81() {
  static const FF L(3, 1, 4);
  return L;
}

inline FPoly poly(const FF& L, std::vector<FF::elem> c) { return FPoly(L, std::move(c)); }
inline FF::elem w(const FF& L) { return L.gen(); }
inline FF::elem c(const FF& L, long long v) { return L.from_int(v); }

// y - 1 as an ascending coefficient list.
inline central y_minus_one(const FF& L) { return {L.neg(L.one()), L.one()}; }

template <class Field, class Rng>
SkewPoly<Field> random_poly(const Field& L, std::size_t max_degree, Rng& rng) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  const std::size_t d = deg(rng);
  std::vector<typename Field::elem> c;
  for (std::size_t i = 0; i <= d; ++i) c.push_back(L.random(rng));
  return SkewPoly<Field>(L, std::move(c));
}

template <class Field, class Rng>
SkewPoly<Field> random_nonzero_poly(const Field& L, std::size_t max_degree, Rng& rng) {
  while (true) {
    auto p = random_poly(L, max_degree, rng);
    if (!p.is_zero()) return p;
  }
}

template <class Rng>
FPoly random_monic(const FF& L, std::size_t degree, Rng& rng) {
  std::vector<FF::elem> c;
  for (std::size_t i = 0; i < degree; ++i) c.push_back(L.random(rng));
  c.push_back(L.one());
  return FPoly(L, std::move(c));
}

// sigma^i(a) computed as a^(q^i), independent of the automorphism tables.
inline FF::elem sigma_by_power(const FF& L, FF::elem a, unsigned i) {
  if (L.sigma_exp() != 1) throw std::invalid_argument("sigma_by_power assumes sigma = q-Frobenius");
  return L.pow(a, static_cast<long long>(ipow(L.q(), i % L.n())));
}

// N_{L/K}(a) = a^((q^n - 1)/(q - 1)).
inline FF::elem norm_by_power(const FF& L, FF::elem a) {
  return L.pow(a, static_cast<long long>((L.size() - 1) / (L.q() - 1)));
}

// Multiplication that applies x a = sigma(a) x term by term.
inline FPoly naive_mul(const FPoly& f, const FPoly& g) {
  const FF& L = f.field();
  if (f.is_zero() || g.is_zero()) return FPoly(L);
  std::vector<FF::elem> out(f.length() + g.length() - 1, L.zero());
  for (std::size_t i = 0; i < f.length(); ++i)
    for (std::size_t j = 0; j < g.length(); ++j)
      out[i + j] = L.add(out[i + j], L.mul(f.coeff(i), sigma_by_power(L, g.coeff(j), static_cast<unsigned>(i))));
  return FPoly(L, std::move(out));
}

inline FPoly central_lift(const FF& L, const central& F) {
  std::vector<FF::elem> c(F.empty() ? 0 : (F.size() - 1) * L.n() + 1, L.zero());
  for (std::size_t i = 0; i < F.size(); ++i) c[i * L.n()] = F[i];
  return FPoly(L, std::move(c));
}

// Smallest-degree monic F over K with f right-dividing F(x^n), by exhaustive
// enumeration of the candidates.
inline central brute_force_bound(const FPoly& f) {
  const FF& L = f.field();
  const auto K = L.base_elements();
  const std::size_t h = f.length() - 1;
  for (std::size_t d = 1; d <= h * L.n(); ++d) {
    const std::uint64_t total = ipow(K.size(), static_cast<unsigned>(d));
    if (total > 2'000'000) throw std::runtime_error("brute-force bound search too large");
    for (std::uint64_t code = 0; code < total; ++code) {
      central F(d + 1, L.zero());
      std::uint64_t x = code;
      for (std::size_t i = 0; i < d; ++i) {
        F[i] = K[x % K.size()];
        x /= K.size();
      }
      F[d] = L.one();
      if (rem_right(central_lift(L, F), f).is_zero()) return F;
    }
  }
  throw std::runtime_error("no bound found");
}

// For F = y - 1 the quotient acts on L through v -> sum a_i sigma^i(v); the
// rank over K is n minus the K-dimension of the kernel of this map.
inline std::size_t linearized_rank(const FPoly& a) {
  const FF& L = a.field();
  std::uint64_t kernel = 0;
  for (const auto v : L.elements()) {
    FF::elem acc = L.zero();
    for (std::size_t i = 0; i < a.length(); ++i)
      acc = L.add(acc, L.mul(a.coeff(i), sigma_by_power(L, v, static_cast<unsigned>(i))));
    if (L.is_zero(acc)) ++kernel;
  }
  std::size_t dim = 0;
  while (kernel > 1) {
    if (kernel % L.q() != 0) throw std::logic_error("kernel size is not a power of q");
    kernel /= L.q();
    ++dim;
  }
  return L.n() - dim;
}

// Irreducibility for degree at most 3: a factorization must contain a monic
// linear right factor or a monic linear left factor.
inline bool irreducible_small(const FPoly& f) {
  const FF& L = f.field();
  const std::size_t h = f.length() - 1;
  if (h > 3) throw std::invalid_argument("irreducible_small handles degree at most 3");
  if (h <= 1) return h == 1;
  for (const auto a : L.elements()) {
    const FPoly lin(L, {a, L.one()});
    if (rem_right(f, lin).is_zero()) return false;
    if (h == 3 && left_divmod(f, lin).second.is_zero()) return false;
  }
  return true;
}

// Irreducibility over K of a polynomial of degree at most 3: no root in K.
inline bool k_irreducible_small(const FF& L, const central& F) {
  const std::size_t d = F.size() - 1;
  if (d > 3) throw std::invalid_argument("k_irreducible_small handles degree at most 3");
  if (d == 1) return true;
  for (const auto a : L.base_elements()) {
    FF::elem v = L.zero();
    for (std::size_t i = F.size(); i-- > 0;) v = L.add(L.mul(v, a), F[i]);
    if (L.is_zero(v)) return false;
  }
  return true;
}

template <class Rng>
FPoly random_irreducible(const FF& L, std::size_t degree, Rng& rng) {
  while (true) {
    auto f = random_monic(L, degree, rng);
    if (!L.is_zero(f.coeff(0)) && irreducible_small(f)) return f;
  }
}

// Nuclei by their defining associativity conditions, over all triples.
struct BruteNuclei {
  std::uint64_t Nl = 0, Nm = 0, Nr = 0, Z = 0;
};

template <class Mul>
BruteNuclei brute_force_nuclei(const std::vector<FPoly>& elems, Mul mul) {
  const std::size_t N = elems.size();
  std::vector<std::vector<FPoly>> table(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) table[i].push_back(mul(elems[i], elems[j]));
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return mul(table[a][b], elems[c]) == mul(elems[a], table[b][c]);
  };
  auto in_nucleus = [&](std::size_t z, int pos) {
    for (std::size_t u = 0; u < N; ++u)
      for (std::size_t v = 0; v < N; ++v) {
        const bool ok = pos == 0 ? assoc(z, u, v) : pos == 1 ? assoc(u, z, v) : assoc(u, v, z);
        if (!ok) return false;
      }
    return true;
  };
  BruteNuclei out;
  for (std::size_t z = 0; z < N; ++z) {
    const bool l = in_nucleus(z, 0), m = in_nucleus(z, 1), r = in_nucleus(z, 2);
    out.Nl += l;
    out.Nm += m;
    out.Nr += r;
    bool commutes = true;
    for (std::size_t u = 0; u < N && commutes; ++u) commutes = table[z][u] == table[u][z];
    out.Z += l && m && r && commutes;
  }
  return out;
}

}  // namespace skewlab::testing
