#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "finite_field.hpp"
#include "function_field.hpp"
#include "linalg.hpp"
#include "prime_field.hpp"
#include "quotient.hpp"
#include "skew_poly.hpp"
#include "upoly.hpp"

namespace skewlab {

namespace detail {

// F_p matrix of an F_p-linear map L -> L in the digit basis.
template <class Map>
linalg::mat<PrimeField> fp_matrix_of(const FiniteField& L, Map map) {
  const unsigned N = L.prime_degree();
  linalg::mat<PrimeField> m(N, linalg::vec<PrimeField>(N, 0));
  for (unsigned j = 0; j < N; ++j) {
    std::vector<std::uint32_t> d(N, 0);
    d[j] = 1;
    const auto img = L.digits(map(L.from_digits(d)));
    for (unsigned r = 0; r < N; ++r) m[r][j] = img[r];
  }
  return m;
}

}  // namespace detail

// (R/Rf, star_S): a * b = phi_S(a) b mod_r f where phi_S lifts the constant
// term c_0 = tau_eta(a_0) = a_0 - eta a_0^rho f_0 to a_0 + ... + eta a_0^rho f.
template <class Field>
class StarS {
 public:
  using elem = typename Field::elem;
  using aut = typename Field::aut;
  using poly = SkewPoly<Field>;

  StarS(const QuotientContext<Field>& ctx, elem eta, aut rho) : ctx_(&ctx), eta_(eta), rho_(rho) {
    const Field& L = ctx.field();
    f0_ = ctx.f().coeff(0);
    rho_is_identity_ = true;
    for (const auto& b : L.base_basis())
      if (!L.eq(L.apply(rho_, b), b)) rho_is_identity_ = false;
    if constexpr (std::is_same_v<Field, FiniteField>) {
      rho_is_identity_ = L.order(rho_) == 1;
      if (valid()) {
        auto inv = linalg::inverse(L.prime_field(), detail::fp_matrix_of(L, [&](elem a) { return tau(a); }));
        if (!inv) throw std::logic_error("tau_eta is not invertible");
        decode_ = std::move(*inv);
      }
    }
  }

  const QuotientContext<Field>& context() const { return *ctx_; }
  const Field& field() const { return ctx_->field(); }
  const poly& f() const { return ctx_->f(); }
  std::size_t degree() const { return ctx_->f().length() - 1; }
  const elem& eta() const { return eta_; }
  const aut& rho() const { return rho_; }

  // N_{L/K'}(eta f_0) != 1 with K' = Fix(rho) ∩ K.
  bool valid() const {
    const Field& L = field();
    if (L.is_zero(eta_)) return true;
    return !L.eq(base_norm_to_fixed(L, L.norm(L.mul(eta_, f0_)), rho_), L.one());
  }

  elem tau(const elem& a0) const {
    const Field& L = field();
    return L.sub(a0, L.mul(L.mul(eta_, L.apply(rho_, a0)), f0_));
  }

  elem decode_constant(const elem& c0) const {
    const Field& L = field();
    if (L.is_zero(eta_)) return c0;
    if constexpr (std::is_same_v<Field, FiniteField>) {
      const auto v = linalg::apply(L.prime_field(), decode_, L.digits(c0));
      return L.from_digits(v);
    } else {
      if (!rho_is_identity_) throw std::invalid_argument("constant decoding needs rho = id over an infinite field");
      return L.div(c0, L.sub(L.one(), L.mul(eta_, f0_)));
    }
  }

  poly phi(const poly& a) const {
    if (!valid()) throw std::invalid_argument("star_S parameters are invalid");
    const Field& L = field();
    if (L.is_zero(eta_)) return a;
    const auto a0 = decode_constant(a.coeff(0));
    return a + f().scale_left(L.mul(eta_, L.apply(rho_, a0)));
  }

  poly prepare(const poly& a) const { return phi(a); }
  poly apply(const poly& pre, const poly& b) const { return rem_right(pre * b, f()); }
  poly mul(const poly& a, const poly& b) const { return apply(prepare(a), b); }

 private:
  const QuotientContext<Field>* ctx_;
  elem eta_;
  aut rho_;
  elem f0_{};
  bool rho_is_identity_ = false;
  linalg::mat<PrimeField> decode_;
};

// z(y) with z(y) y^s = 1 mod F(y), lifted to Z = z(x^n) x^{sn-1}. Z is
// reduced modulo the two-sided F(x^n) so that x Z - 1 lies in R F(x^n) and
// left multiplication by x Z fixes every residue mod Rf.
template <class Field>
SkewPoly<Field> inverse_of_x(const QuotientContext<Field>& ctx) {
  const Field& L = ctx.field();
  upoly::poly<Field> ys(ctx.s() + 1, L.zero());
  ys.back() = L.one();
  const auto z = upoly::inverse_mod(L, ys, ctx.F());
  const auto Z = ctx.reduce(central_to_skew(L, z) * SkewPoly<Field>::x_power(L, ctx.s() * L.n() - 1));
  if (ctx.reduce(SkewPoly<Field>::x_power(L, 1) * Z) != SkewPoly<Field>::constant(L, L.one()))
    throw std::logic_error("z(x^n) x^{ns} is not 1 modulo F(x^n)");
  return Z;
}

// a *_{S'} b = phi_S(a) Z b mod_r f. For deg f >= 2 the unit is x; the
// identity a *_{S'} b = a *_S (Z b mod_r f) relates it to star_S.
template <class Field>
class StarSPrime {
 public:
  using elem = typename Field::elem;
  using poly = SkewPoly<Field>;

  explicit StarSPrime(StarS<Field> base) : base_(std::move(base)), Z_(inverse_of_x(base_.context())) {}

  const StarS<Field>& base() const { return base_; }
  const Field& field() const { return base_.field(); }
  const poly& f() const { return base_.f(); }
  std::size_t degree() const { return base_.degree(); }
  const poly& Z() const { return Z_; }
  bool valid() const { return base_.valid(); }

  poly prepare(const poly& a) const { return base_.phi(a) * Z_; }
  poly apply(const poly& pre, const poly& b) const { return rem_right(pre * b, f()); }
  poly mul(const poly& a, const poly& b) const { return apply(prepare(a), b); }

 private:
  StarS<Field> base_;
  poly Z_;
};

// a *_D b = (a - (gamma/f_0) a_0'' f) b mod_r f with a_0 = a_0' + gamma a_0''
// split along the basis {1, gamma} of L over L' = Fix(sigma^{n/2}).
template <class Field>
class StarD {
 public:
  using elem = typename Field::elem;
  using poly = SkewPoly<Field>;

  StarD(const QuotientContext<Field>& ctx, elem gamma) : ctx_(&ctx), gamma_(gamma) {
    const Field& L = ctx.field();
    if (L.n() % 2 != 0) throw std::invalid_argument("D-family needs n even");
    f0_ = ctx.f().coeff(0);
    const auto d = L.sub(gamma_, L.sigma(gamma_, L.n() / 2));
    if (L.is_zero(d)) throw std::invalid_argument("gamma lies in the index-2 subfield");
    denom_inv_ = L.inv(d);
  }

  const QuotientContext<Field>& context() const { return *ctx_; }
  const Field& field() const { return ctx_->field(); }
  const poly& f() const { return ctx_->f(); }
  std::size_t degree() const { return ctx_->f().length() - 1; }
  const elem& gamma() const { return gamma_; }

  // gamma/f_0 outside L' and N(gamma) a non-square in K.
  bool valid() const {
    const Field& L = field();
    return !in_half_field(L, L.div(gamma_, f0_)) && !L.is_square_in_base(L.norm(gamma_));
  }

  std::pair<elem, elem> split(const elem& a) const {
    const Field& L = field();
    const auto a2 = L.mul(L.sub(a, L.sigma(a, L.n() / 2)), denom_inv_);
    return {L.sub(a, L.mul(gamma_, a2)), a2};
  }

  poly prepare(const poly& a) const {
    const Field& L = field();
    const auto a2 = split(a.coeff(0)).second;
    return a - f().scale_left(L.mul(L.div(gamma_, f0_), a2));
  }
  poly apply(const poly& pre, const poly& b) const { return rem_right(pre * b, f()); }
  poly mul(const poly& a, const poly& b) const { return apply(prepare(a), b); }

 private:
  const QuotientContext<Field>* ctx_;
  elem gamma_;
  elem f0_{};
  elem denom_inv_{};
};

// Closed-form product on L' ⊕ L' for s = 1, F = y - 1, f = x - 1, with
// gamma sigma(gamma) = u + v gamma.
struct HKParams {
  const FiniteField* L = nullptr;
  FiniteField::elem gamma{}, u{}, v{};
};

inline HKParams make_hk_params(const FiniteField& L, FiniteField::elem gamma) {
  const unsigned t = L.n() / 2;
  const auto d = L.sub(gamma, L.sigma(gamma, t));
  if (L.is_zero(d)) throw std::invalid_argument("gamma lies in the index-2 subfield");
  const auto g = L.mul(gamma, L.sigma(gamma, 1));
  const auto v = L.div(L.sub(g, L.sigma(g, t)), d);
  const auto u = L.sub(g, L.mul(gamma, v));
  HKParams p{&L, gamma, u, v};
  if (!in_half_field(L, u) || !in_half_field(L, v) || !L.eq(L.add(u, L.mul(v, gamma)), g))
    throw std::logic_error("gamma^(sigma+1) does not decompose over the index-2 subfield");
  return p;
}

using HKPair = std::pair<FiniteField::elem, FiniteField::elem>;

inline HKPair hk_mul(const HKPair& c, const HKPair& d, const HKParams& p) {
  const FiniteField& L = *p.L;
  const auto sd0 = L.sigma(d.first, 1), sd1 = L.sigma(d.second, 1);
  return {L.add(L.mul(c.first, d.first), L.mul(L.mul(c.second, sd1), p.u)),
          L.add(L.add(L.mul(c.first, d.second), L.mul(c.second, sd0)), L.mul(L.mul(c.second, sd1), p.v))};
}

inline HKPair hk_split(const HKParams& p, FiniteField::elem a) {
  const FiniteField& L = *p.L;
  const unsigned t = L.n() / 2;
  const auto a1 = L.div(L.sub(a, L.sigma(a, t)), L.sub(p.gamma, L.sigma(p.gamma, t)));
  return {L.sub(a, L.mul(p.gamma, a1)), a1};
}

inline FiniteField::elem hk_join(const HKParams& p, const HKPair& c) {
  return p.L->add(c.first, p.L->mul(p.gamma, c.second));
}

// Elements of R/Rf for a finite L, indexed in base |L| with the constant
// coefficient as the most significant digit.
class QuotientSpace {
 public:
  QuotientSpace(const FiniteField& L, std::size_t degree) : L_(&L), h_(degree) {
    order_ = 1;
    for (std::size_t i = 0; i < h_; ++i) {
      if (order_ > std::numeric_limits<std::uint64_t>::max() / L.size()) throw std::overflow_error("algebra too large");
      order_ *= L.size();
    }
  }
  const FiniteField& field() const { return *L_; }
  std::size_t degree() const { return h_; }
  std::uint64_t order() const { return order_; }
  std::size_t fp_dimension() const { return h_ * L_->prime_degree(); }

  SkewPoly<FiniteField> element(std::uint64_t index) const {
    std::vector<FiniteField::elem> c(h_);
    for (std::size_t i = h_; i-- > 0;) {
      c[i] = L_->from_code(static_cast<std::uint32_t>(index % L_->size()));
      index /= L_->size();
    }
    return SkewPoly<FiniteField>(*L_, std::move(c));
  }

 private:
  const FiniteField* L_;
  std::size_t h_;
  std::uint64_t order_ = 0;
};

struct ZeroDivisorReport {
  bool found = false;
  std::uint64_t pairs = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness_index;
  std::optional<std::pair<std::string, std::string>> witness;
};

// Exhaustive scan of all pairs of nonzero elements, partitioned by the
// first operand. The reported witness is the first in enumeration order.
// The budget bounds the number of ordered pairs; the default admits 3^8 elements.
inline constexpr std::uint64_t kDefaultPairBudget = 6561ull * 6561ull;

template <class Algebra>
ZeroDivisorReport zero_divisor_scan(const QuotientSpace& space, const Algebra& alg, unsigned jobs = 1,
                                    std::uint64_t max_pairs = kDefaultPairBudget) {
  const std::uint64_t order = space.order();
  if (order > (1ull << 32) || order * order > max_pairs)
    throw BudgetExceeded("zero-divisor scan over " + std::to_string(order) + " elements exceeds the pair budget " +
                         std::to_string(max_pairs));
  jobs = std::max(1u, jobs);
  std::vector<SkewPoly<FiniteField>> elems;
  elems.reserve(order);
  for (std::uint64_t i = 0; i < order; ++i) elems.push_back(space.element(i));
  constexpr auto none = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> best(jobs, {none, none});
  std::vector<std::uint64_t> pairs(jobs, 0);
  auto worker = [&](unsigned w) {
    for (std::uint64_t a = 1 + w; a < order; a += jobs) {
      if (best[w].first != none) return;
      const auto pre = alg.prepare(elems[a]);
      for (std::uint64_t b = 1; b < order; ++b) {
        ++pairs[w];
        if (alg.apply(pre, elems[b]).is_zero()) {
          best[w] = {a, b};
          break;
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < jobs; ++w) threads.emplace_back(worker, w);
  worker(0);
  for (auto& t : threads) t.join();
  ZeroDivisorReport rep;
  for (auto p : pairs) rep.pairs += p;
  const auto first = *std::min_element(best.begin(), best.end());
  if (first.first != none) {
    rep.found = true;
    rep.witness_index = first;
    rep.witness = std::make_pair(elems[first.first].to_string(), elems[first.second].to_string());
  }
  return rep;
}

struct NucleiReport {
  std::uint64_t Nl = 0, Nm = 0, Nr = 0, Z = 0;
  bool unital = false;
  std::optional<std::string> unit;
  // True when the sizes were computed on a unital isotope.
  bool normalized = false;
};

namespace detail {

using fpmat = linalg::mat<PrimeField>;

inline linalg::vec<PrimeField> flatten(const fpmat& m) {
  linalg::vec<PrimeField> v;
  for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return v;
}

inline fpmat fp_add(const PrimeField& fp, fpmat a, const fpmat& b, std::uint32_t scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] = fp.add(a[i][j], fp.mul(scale, b[i][j]));
  return a;
}

// Dimension of {X in End : constraint(X) = 0} for a linear constraint,
// evaluated on the elementary matrices.
template <class Constraint>
std::size_t solution_dim(const PrimeField& fp, std::size_t d, Constraint constraint) {
  fpmat cols;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      fpmat E(d, linalg::vec<PrimeField>(d, 0));
      E[r][c] = 1;
      cols.push_back(constraint(E));
    }
  if (cols.empty() || cols[0].empty()) return d * d;
  return d * d - linalg::rank(fp, linalg::transpose(fp, cols));
}

}  // namespace detail

// Nuclei from the spread set {L_a} inside End_{F_p}(A):
// N_l = I_l(C), N_m = I_r(C), N_r = centraliser of C, Z = I_l(C) ∩ C(C).
// A non-unital algebra is first replaced by the unital isotope
// a o b = R_e^{-1}(a) * L_e^{-1}(b) for a nonzero e with invertible L_e, R_e.
template <class Algebra>
NucleiReport nuclei(const QuotientSpace& space, const Algebra& alg) {
  using detail::fpmat;
  const FiniteField& L = space.field();
  const PrimeField& fp = L.prime_field();
  const std::size_t h = space.degree();
  const std::size_t d = space.fp_dimension();
  const auto basis = fp_poly_basis(L, h);
  // prod[i][j] = coords(e_i * e_j)
  std::vector<std::vector<linalg::vec<PrimeField>>> prod(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto pre = alg.prepare(basis[i]);
    for (std::size_t j = 0; j < d; ++j) prod[i].push_back(fp_coords(L, alg.apply(pre, basis[j]), h));
  }
  auto left = [&](std::size_t i) {
    fpmat m(d, linalg::vec<PrimeField>(d, 0));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t r = 0; r < d; ++r) m[r][j] = prod[i][j][r];
    return m;
  };
  auto right = [&](std::size_t j) {
    fpmat m(d, linalg::vec<PrimeField>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t r = 0; r < d; ++r) m[r][i] = prod[i][j][r];
    return m;
  };
  std::vector<fpmat> Lm;
  for (std::size_t i = 0; i < d; ++i) Lm.push_back(left(i));
  const auto I = linalg::identity(fp, d);

  NucleiReport rep;
  // A unit e satisfies sum_i e_i L_{e_i} = I.
  {
    fpmat sys(d * d, linalg::vec<PrimeField>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      const auto v = detail::flatten(Lm[i]);
      for (std::size_t r = 0; r < d * d; ++r) sys[r][i] = v[r];
    }
    const auto sol = linalg::solve(fp, sys, detail::flatten(I), d);
    if (sol) {
      fpmat R(d, linalg::vec<PrimeField>(d, 0));
      for (std::size_t j = 0; j < d; ++j) R = detail::fp_add(fp, R, right(j), (*sol)[j]);
      if (linalg::equal(fp, R, I)) {
        rep.unital = true;
        rep.unit = from_fp_coords(L, *sol, h).to_string();
      }
    }
  }
  std::vector<fpmat> C = Lm;
  if (!rep.unital) {
    bool done = false;
    for (std::size_t k = 0; k < d && !done; ++k) {
      const auto Le_inv = linalg::inverse(fp, Lm[k]);
      const auto Re_inv = linalg::inverse(fp, right(k));
      if (!Le_inv || !Re_inv) continue;
      for (std::size_t i = 0; i < d; ++i) {
        fpmat acc(d, linalg::vec<PrimeField>(d, 0));
        for (std::size_t j = 0; j < d; ++j) acc = detail::fp_add(fp, acc, Lm[j], (*Re_inv)[j][i]);
        C[i] = linalg::multiply(fp, acc, *Le_inv);
      }
      done = true;
    }
    if (!done) throw std::invalid_argument("non-unital input not normalizable");
    rep.normalized = true;
  }

  fpmat G;
  for (const auto& c : C) G.push_back(detail::flatten(c));
  const auto H = linalg::kernel(fp, G, d * d);
  auto in_span_rows = [&](const fpmat& X, linalg::vec<PrimeField>& out) {
    const auto v = detail::flatten(X);
    for (const auto& hrow : H) {
      std::uint64_t s = 0;
      for (std::size_t r = 0; r < v.size(); ++r) s += static_cast<std::uint64_t>(hrow[r]) * v[r];
      out.push_back(static_cast<std::uint32_t>(s % fp.p()));
    }
  };
  auto idealiser = [&](bool on_left) {
    return [&, on_left](const fpmat& X) {
      linalg::vec<PrimeField> out;
      for (const auto& c : C) in_span_rows(on_left ? linalg::multiply(fp, X, c) : linalg::multiply(fp, c, X), out);
      return out;
    };
  };
  auto commutes = [&](const fpmat& X) {
    linalg::vec<PrimeField> out;
    for (const auto& c : C) {
      const auto v = detail::flatten(detail::fp_add(fp, linalg::multiply(fp, X, c), linalg::multiply(fp, c, X),
                                                    fp.neg(1)));
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  };
  const std::uint64_t p = L.p();
  auto size = [&](std::size_t dim) { return ipow(p, static_cast<unsigned>(dim)); };
  rep.Nl = size(detail::solution_dim(fp, d, idealiser(true)));
  rep.Nm = size(detail::solution_dim(fp, d, idealiser(false)));
  rep.Nr = size(detail::solution_dim(fp, d, commutes));
  rep.Z = size(detail::solution_dim(fp, d, [&](const fpmat& X) {
    auto a = idealiser(true)(X);
    const auto b = commutes(X);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }));
  return rep;
}

}  // namespace skewlab
