#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bound.hpp"
#include "finite_field.hpp"
#include "function_field.hpp"
#include "linalg.hpp"
#include "prime_field.hpp"
#include "quotient.hpp"
#include "skew_poly.hpp"

namespace skewlab {

enum class Family { S, D };

inline std::string family_name(Family f) { return f == Family::S ? "S" : "D"; }

// A member of the S-family (twist eta * a_0^rho * x^{sk ell}) or the
// D-family (split constant a_0' + gamma a_0'' x^{sk ell}) inside R/RF(x^n).
// For the D-family the field `param` is gamma and rho is unused.
template <class Field>
struct CodeSpec {
  Family family = Family::S;
  const QuotientContext<Field>* ctx = nullptr;
  std::size_t k = 1;
  typename Field::elem param{};
  typename Field::aut rho{};

  const Field& field() const { return ctx->field(); }
  std::size_t twist_degree() const { return ctx->s() * k * ctx->ell(); }
};

template <class Field>
void check_code_spec(const CodeSpec<Field>& spec) {
  if (spec.ctx == nullptr) throw std::invalid_argument("code spec has no quotient context");
  if (spec.k < 1 || spec.k >= spec.ctx->m()) throw std::invalid_argument("k must satisfy 1 <= k < m");
  if (spec.family == Family::D && spec.field().n() % 2 != 0) throw std::invalid_argument("D-family needs n even");
}

// Norm from K to K' = Fix(rho) ∩ K. Over the function field every
// automorphism used here fixes K = F_2(s) pointwise.
inline FiniteField::elem base_norm_to_fixed(const FiniteField& L, FiniteField::elem a, const FiniteField::aut& rho) {
  return L.norm_base_to_fixed(a, rho);
}
inline FunctionField::elem base_norm_to_fixed(const FunctionField&, const FunctionField::elem& a,
                                              const FunctionField::aut&) {
  return a;
}

// N_{L/K'}(eta) N_{K/K'}((-1)^{sk ell (n-1)} F_0^{k ell}) != 1.
template <class Field>
bool validate_s(const CodeSpec<Field>& spec) {
  check_code_spec(spec);
  const Field& L = spec.field();
  if (L.is_zero(spec.param)) return true;
  const std::size_t ske = spec.twist_degree();
  const auto nl = base_norm_to_fixed(L, L.norm(spec.param), spec.rho);
  auto c = minus_one_power(L, ske * (L.n() - 1));
  for (std::size_t i = 0; i < spec.k * spec.ctx->ell(); ++i) c = L.mul(c, spec.ctx->F()[0]);
  const auto nk = base_norm_to_fixed(L, c, spec.rho);
  return !L.eq(L.mul(nl, nk), L.one());
}

template <class Field>
bool in_half_field(const Field& L, const typename Field::elem& a) {
  return L.eq(L.sigma(a, L.n() / 2), a);
}

// gamma outside L' and (-1)^{sk ell} F_0^{k ell} N(gamma) a non-square in K.
template <class Field>
bool validate_d(const CodeSpec<Field>& spec) {
  check_code_spec(spec);
  const Field& L = spec.field();
  if (in_half_field(L, spec.param)) return false;
  auto c = minus_one_power(L, spec.twist_degree());
  for (std::size_t i = 0; i < spec.k * spec.ctx->ell(); ++i) c = L.mul(c, spec.ctx->F()[0]);
  c = L.mul(c, L.norm(spec.param));
  return !L.is_square_in_base(c);
}

template <class Field>
bool validate(const CodeSpec<Field>& spec) {
  return spec.family == Family::S ? validate_s(spec) : validate_d(spec);
}

// a_0 + ... + a_{ske-1} x^{ske-1} + eta a_0^rho x^{ske}
template <class Field>
SkewPoly<Field> s_codeword(const CodeSpec<Field>& spec, const std::vector<typename Field::elem>& a) {
  const Field& L = spec.field();
  const std::size_t ske = spec.twist_degree();
  if (a.size() != ske) throw std::invalid_argument("wrong number of S-family coefficients");
  std::vector<typename Field::elem> c = a;
  c.push_back(L.mul(spec.param, L.apply(spec.rho, a[0])));
  return SkewPoly<Field>(L, std::move(c));
}

// a_0' + a_1 x + ... + a_{ske-1} x^{ske-1} + gamma a_0'' x^{ske}
template <class Field>
SkewPoly<Field> d_codeword(const CodeSpec<Field>& spec, const typename Field::elem& a0p,
                           const typename Field::elem& a0pp, const std::vector<typename Field::elem>& rest) {
  const Field& L = spec.field();
  const std::size_t ske = spec.twist_degree();
  if (rest.size() + 1 != ske) throw std::invalid_argument("wrong number of D-family coefficients");
  std::vector<typename Field::elem> c;
  c.push_back(a0p);
  c.insert(c.end(), rest.begin(), rest.end());
  c.push_back(L.mul(spec.param, a0pp));
  return SkewPoly<Field>(L, std::move(c));
}

// Elements of the index-2 subfield L' = Fix(sigma^{n/2}), sorted by code.
inline std::vector<FiniteField::elem> half_field_elements(const FiniteField& L) {
  std::vector<FiniteField::elem> out;
  for (const auto& a : L.elements())
    if (in_half_field(L, a)) out.push_back(a);
  return out;
}

// Exhaustive enumeration of a finite code in lexicographic order of the
// coefficient vector (a_0, a_1, ...) for S and (a_0', a_0'', a_1, ...) for D.
class CodeEnumerator {
 public:
  explicit CodeEnumerator(const CodeSpec<FiniteField>& spec) : spec_(spec) {
    check_code_spec(spec);
    const FiniteField& L = spec.field();
    const std::size_t ske = spec.twist_degree();
    if (spec.family == Family::D) {
      half_ = half_field_elements(L);
      radix_.push_back(half_.size());
      radix_.push_back(half_.size());
      for (std::size_t i = 1; i < ske; ++i) radix_.push_back(L.size());
    } else {
      for (std::size_t i = 0; i < ske; ++i) radix_.push_back(L.size());
    }
    count_ = 1;
    for (auto r : radix_) {
      if (count_ > std::numeric_limits<std::uint64_t>::max() / r) throw std::overflow_error("code too large to count");
      count_ *= r;
    }
  }

  std::uint64_t count() const { return count_; }

  SkewPoly<FiniteField> at(std::uint64_t index) const {
    const FiniteField& L = spec_.field();
    std::vector<std::uint64_t> digit(radix_.size());
    for (std::size_t i = radix_.size(); i-- > 0;) {
      digit[i] = index % radix_[i];
      index /= radix_[i];
    }
    if (spec_.family == Family::S) {
      std::vector<FiniteField::elem> a;
      for (auto d : digit) a.push_back(L.from_code(static_cast<std::uint32_t>(d)));
      return s_codeword(spec_, a);
    }
    std::vector<FiniteField::elem> rest;
    for (std::size_t i = 2; i < digit.size(); ++i) rest.push_back(L.from_code(static_cast<std::uint32_t>(digit[i])));
    return d_codeword(spec_, half_[digit[0]], half_[digit[1]], rest);
  }

 private:
  CodeSpec<FiniteField> spec_;
  std::vector<FiniteField::elem> half_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t count_ = 0;
};

template <class Field, class Rng>
SkewPoly<Field> random_codeword(const CodeSpec<Field>& spec, Rng& rng) {
  const Field& L = spec.field();
  const std::size_t ske = spec.twist_degree();
  if (spec.family == Family::S) {
    std::vector<typename Field::elem> a;
    for (std::size_t i = 0; i < ske; ++i) a.push_back(L.random(rng));
    return s_codeword(spec, a);
  }
  // The trace b + sigma^{n/2}(b) lands in L'.
  auto half = [&]() {
    const auto b = L.random(rng);
    return L.add(b, L.sigma(b, L.n() / 2));
  };
  const auto a0p = half();
  const auto a0pp = half();
  std::vector<typename Field::elem> rest;
  for (std::size_t i = 1; i < ske; ++i) rest.push_back(L.random(rng));
  return d_codeword(spec, a0p, a0pp, rest);
}

struct MrdOptions {
  bool exhaustive = true;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  unsigned jobs = 1;
};

struct MrdReport {
  std::string mode;
  bool witnessed = false;
  std::size_t min_rank = 0;
  std::uint64_t checked = 0;
  std::optional<std::string> counterexample;
};

namespace detail {

// Ranks items [0, count) produced by `make` across workers, combining by
// min-reduction so the result does not depend on the number of workers.
template <class Field, class Make>
MrdReport rank_scan(const QuotientContext<Field>& ctx, std::uint64_t count, std::size_t target, unsigned jobs,
                    Make make) {
  jobs = std::max(1u, jobs);
  std::vector<std::size_t> min_rank(jobs, std::numeric_limits<std::size_t>::max());
  std::vector<std::uint64_t> first_bad(jobs, std::numeric_limits<std::uint64_t>::max());
  std::vector<std::uint64_t> checked(jobs, 0);
  auto worker = [&](unsigned w) {
    for (std::uint64_t i = w; i < count; i += jobs) {
      const auto c = make(i);
      if (c.is_zero()) continue;
      const std::size_t r = ctx.rank(c);
      ++checked[w];
      min_rank[w] = std::min(min_rank[w], r);
      if (r < target && i < first_bad[w]) first_bad[w] = i;
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < jobs; ++w) threads.emplace_back(worker, w);
  worker(0);
  for (auto& t : threads) t.join();
  MrdReport rep;
  rep.min_rank = *std::min_element(min_rank.begin(), min_rank.end());
  for (auto c : checked) rep.checked += c;
  const auto bad = *std::min_element(first_bad.begin(), first_bad.end());
  if (bad != std::numeric_limits<std::uint64_t>::max()) rep.counterexample = make(bad).to_string();
  if (rep.checked == 0) rep.min_rank = 0;
  rep.witnessed = rep.checked > 0 && !rep.counterexample;
  return rep;
}

}  // namespace detail

// Checks rank >= m - k + 1 on every nonzero codeword (exhaustive) or on a
// seeded sample (probabilistic evidence only).
inline MrdReport verify_mrd(const CodeSpec<FiniteField>& spec, const MrdOptions& opt) {
  const auto& ctx = *spec.ctx;
  const std::size_t target = ctx.m() - spec.k + 1;
  if (opt.exhaustive) {
    CodeEnumerator en(spec);
    if (en.count() > opt.budget)
      throw BudgetExceeded("exhaustive scan of " + std::to_string(en.count()) + " codewords exceeds budget " +
                           std::to_string(opt.budget));
    auto rep = detail::rank_scan(ctx, en.count(), target, opt.jobs, [&](std::uint64_t i) { return en.at(i); });
    rep.mode = "exhaustive";
    return rep;
  }
  std::mt19937_64 rng(opt.seed);
  std::vector<SkewPoly<FiniteField>> sample;
  for (std::uint64_t i = 0; i < opt.samples; ++i) sample.push_back(random_codeword(spec, rng));
  auto rep = detail::rank_scan(ctx, sample.size(), target, opt.jobs, [&](std::uint64_t i) { return sample[i]; });
  rep.mode = "sampled";
  return rep;
}

inline MrdReport verify_mrd(const CodeSpec<FunctionField>& spec, const MrdOptions& opt) {
  if (opt.exhaustive) throw std::invalid_argument("enumeration requested over an infinite field");
  const std::size_t target = spec.ctx->m() - spec.k + 1;
  std::mt19937_64 rng(opt.seed);
  std::vector<SkewPoly<FunctionField>> sample;
  for (std::uint64_t i = 0; i < opt.samples; ++i) sample.push_back(random_codeword(spec, rng));
  auto rep =
      detail::rank_scan(*spec.ctx, sample.size(), target, opt.jobs, [&](std::uint64_t i) { return sample[i]; });
  rep.mode = "sampled";
  return rep;
}

// F_p basis of the subfield of L fixed by sigma^k.
inline std::vector<FiniteField::elem> fp_fixed_basis(const FiniteField& L, unsigned k) {
  const PrimeField& fp = L.prime_field();
  const unsigned N = L.prime_degree();
  linalg::mat<PrimeField> m(N, linalg::vec<PrimeField>(N, 0));
  for (unsigned j = 0; j < N; ++j) {
    std::vector<std::uint32_t> d(N, 0);
    d[j] = 1;
    const auto b = L.from_digits(d);
    const auto diff = L.digits(L.sub(L.sigma(b, k), b));
    for (unsigned r = 0; r < N; ++r) m[r][j] = diff[r];
  }
  std::vector<FiniteField::elem> out;
  for (const auto& v : linalg::kernel(fp, m, N)) out.push_back(L.from_digits(v));
  return out;
}

inline std::vector<FiniteField::elem> fp_unit_basis(const FiniteField& L) {
  std::vector<FiniteField::elem> out;
  for (unsigned j = 0; j < L.prime_degree(); ++j) {
    std::vector<std::uint32_t> d(L.prime_degree(), 0);
    d[j] = 1;
    out.push_back(L.from_digits(d));
  }
  return out;
}

// F_p spanning set of a finite code.
inline std::vector<SkewPoly<FiniteField>> code_generators(const CodeSpec<FiniteField>& spec) {
  const FiniteField& L = spec.field();
  const std::size_t ske = spec.twist_degree();
  using P = SkewPoly<FiniteField>;
  std::vector<P> out;
  const auto basis = fp_unit_basis(L);
  if (spec.family == Family::S) {
    for (const auto& b : basis) {
      std::vector<FiniteField::elem> a(ske, L.zero());
      a[0] = b;
      out.push_back(s_codeword(spec, a));
    }
  } else {
    for (const auto& b : fp_fixed_basis(L, L.n() / 2)) {
      out.push_back(P::constant(L, b));
      out.push_back(P::monomial(L, L.mul(spec.param, b), ske));
    }
  }
  for (std::size_t i = 1; i < ske; ++i)
    for (const auto& b : basis) out.push_back(P::monomial(L, b, i));
  return out;
}

// An F_p-subspace of R_F = R/RF(x^n) given by a spanning set, with
// membership, idealiser, and centraliser computations as F_p kernels.
class FpSubspace {
 public:
  using poly = SkewPoly<FiniteField>;

  FpSubspace(const QuotientContext<FiniteField>& ctx, std::vector<poly> gens)
      : ctx_(&ctx), fp_(ctx.field().p()), len_(ctx.length()) {
    for (auto& g : gens) gens_.push_back(ctx.reduce(g));
    linalg::mat<PrimeField> G;
    for (const auto& g : gens_) G.push_back(coords(g));
    dim_ = linalg::rank(fp_, G);
    parity_ = linalg::kernel(fp_, G, width());
    basis_ = fp_poly_basis(ctx.field(), len_);
  }

  std::size_t width() const { return len_ * ctx_->field().prime_degree(); }
  std::size_t dim() const { return dim_; }
  const std::vector<poly>& generators() const { return gens_; }

  bool contains(const poly& a) const {
    const auto v = coords(ctx_->reduce(a));
    for (const auto& h : parity_)
      if (dot(h, v) != 0) return false;
    return true;
  }

  // dim {g in R_F : g C ⊆ C}
  std::size_t left_idealiser_dim() const { return kernel_dim(membership_rows(true)); }
  // dim {g in R_F : C g ⊆ C}
  std::size_t right_idealiser_dim() const { return kernel_dim(membership_rows(false)); }
  // dim {g in R_F : g c = c g for all c in C}
  std::size_t centraliser_dim() const { return kernel_dim(commutator_rows()); }
  std::size_t centre_dim() const {
    auto rows = membership_rows(true);
    auto more = commutator_rows();
    rows.insert(rows.end(), more.begin(), more.end());
    return kernel_dim(rows);
  }

 private:
  std::vector<std::uint32_t> coords(const poly& a) const { return fp_coords(ctx_->field(), a, len_); }
  std::uint32_t dot(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::uint64_t>(a[i]) * b[i];
    return static_cast<std::uint32_t>(s % fp_.p());
  }
  std::size_t kernel_dim(const linalg::mat<PrimeField>& rows) const {
    return basis_.size() - (rows.empty() ? 0 : linalg::rank(fp_, rows));
  }
  linalg::mat<PrimeField> membership_rows(bool left) const {
    linalg::mat<PrimeField> rows(gens_.size() * parity_.size(), linalg::vec<PrimeField>(basis_.size(), 0));
    for (std::size_t u = 0; u < basis_.size(); ++u)
      for (std::size_t b = 0; b < gens_.size(); ++b) {
        const auto v = coords(left ? ctx_->mul(basis_[u], gens_[b]) : ctx_->mul(gens_[b], basis_[u]));
        for (std::size_t h = 0; h < parity_.size(); ++h) rows[b * parity_.size() + h][u] = dot(parity_[h], v);
      }
    return rows;
  }
  linalg::mat<PrimeField> commutator_rows() const {
    const std::size_t w = width();
    linalg::mat<PrimeField> rows(gens_.size() * w, linalg::vec<PrimeField>(basis_.size(), 0));
    for (std::size_t u = 0; u < basis_.size(); ++u)
      for (std::size_t b = 0; b < gens_.size(); ++b) {
        const auto v = coords(ctx_->mul(basis_[u], gens_[b]) - ctx_->mul(gens_[b], basis_[u]));
        for (std::size_t r = 0; r < w; ++r) rows[b * w + r][u] = v[r];
      }
    return rows;
  }

  const QuotientContext<FiniteField>* ctx_;
  PrimeField fp_;
  std::size_t len_;
  std::vector<poly> gens_;
  std::size_t dim_ = 0;
  linalg::mat<PrimeField> parity_;
  std::vector<poly> basis_;
};

// Inverse of a unit u of R_F, solving g u = 1 (left L-linear in g).
inline std::optional<SkewPoly<FiniteField>> quotient_inverse(const QuotientContext<FiniteField>& ctx,
                                                             const SkewPoly<FiniteField>& u) {
  const FiniteField& L = ctx.field();
  const std::size_t len = ctx.length();
  linalg::mat<FiniteField> m(len, linalg::vec<FiniteField>(len, L.zero()));
  for (std::size_t i = 0; i < len; ++i) {
    const auto img = ctx.mul(SkewPoly<FiniteField>::x_power(L, i), u);
    for (std::size_t r = 0; r < len; ++r) m[r][i] = img.coeff(r);
  }
  linalg::vec<FiniteField> rhs(len, L.zero());
  rhs[0] = L.one();
  auto sol = linalg::solve(L, m, rhs, len);
  if (!sol) return std::nullopt;
  SkewPoly<FiniteField> g(L, std::move(*sol));
  if (ctx.mul(g, u) != SkewPoly<FiniteField>::constant(L, L.one())) return std::nullopt;
  return g;
}

struct NuclearSizes {
  std::uint64_t Il = 0, Ir = 0, C = 0, Z = 0;
};

struct NuclearReport {
  NuclearSizes computed;
  NuclearSizes expected;
  bool normalized = false;
  bool in_closed_form_range = true;
};

// Closed-form sizes predicted for the family.
inline NuclearSizes expected_nuclear_sizes(const CodeSpec<FiniteField>& spec) {
  const FiniteField& L = spec.field();
  const auto& ctx = *spec.ctx;
  const std::uint64_t p = L.p();
  const std::uint64_t qs = ipow(L.q(), static_cast<unsigned>(ctx.s()));
  NuclearSizes e;
  if (spec.family == Family::D) {
    e.Il = e.Ir = ipow(L.q(), L.n() / 2);
    e.C = qs;
    e.Z = L.q();
    return e;
  }
  if (L.is_zero(spec.param)) {
    e.Il = e.Ir = L.size();
    e.C = qs;
    e.Z = L.q();
    return e;
  }
  const unsigned N = L.prime_degree();
  e.Il = ipow(p, N / L.order(spec.rho));
  const auto comp = L.compose(L.inverse(spec.rho), L.sigma_aut(static_cast<long long>(spec.twist_degree())));
  e.Ir = ipow(p, N / L.order(comp));
  e.C = qs;
  e.Z = ipow(p, L.e() / L.order_on_base(spec.rho));
  return e;
}

inline NuclearReport nuclear_params(const CodeSpec<FiniteField>& spec, std::uint64_t search_limit = 100000) {
  check_code_spec(spec);
  const auto& ctx = *spec.ctx;
  const FiniteField& L = spec.field();
  const std::uint64_t p = L.p();
  NuclearReport rep;
  const std::size_t ske = spec.twist_degree();
  const std::size_t m = ctx.m();
  rep.in_closed_form_range = 2 * spec.k <= m && (spec.family == Family::S ? ske > 2 : ske >= 2);
  rep.expected = expected_nuclear_sizes(spec);

  FpSubspace code(ctx, code_generators(spec));
  rep.computed.Il = ipow(p, static_cast<unsigned>(code.left_idealiser_dim()));
  rep.computed.Ir = ipow(p, static_cast<unsigned>(code.right_idealiser_dim()));

  const auto one = SkewPoly<FiniteField>::constant(L, L.one());
  if (code.contains(one)) {
    rep.computed.C = ipow(p, static_cast<unsigned>(code.centraliser_dim()));
    rep.computed.Z = ipow(p, static_cast<unsigned>(code.centre_dim()));
    return rep;
  }
  CodeEnumerator en(spec);
  const std::uint64_t limit = std::min<std::uint64_t>(en.count(), search_limit);
  for (std::uint64_t i = 1; i < limit; ++i) {
    const auto u = en.at(i);
    if (ctx.rank(u) != m) continue;
    const auto inv = quotient_inverse(ctx, u);
    if (!inv) continue;
    std::vector<SkewPoly<FiniteField>> gens;
    for (const auto& g : code.generators()) gens.push_back(ctx.mul(*inv, g));
    FpSubspace normal(ctx, gens);
    rep.normalized = true;
    rep.computed.C = ipow(p, static_cast<unsigned>(normal.centraliser_dim()));
    rep.computed.Z = ipow(p, static_cast<unsigned>(normal.centre_dim()));
    return rep;
  }
  throw std::runtime_error("no invertible codeword found (cannot normalize)");
}

}  // namespace skewlab
