#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bound.hpp"
#include "finite_field.hpp"
#include "klinear.hpp"
#include "linalg.hpp"
#include "prime_field.hpp"
#include "skew_poly.hpp"
#include "upoly.hpp"

namespace skewlab {

// Searches monic polynomials of degree s in lexicographic order of their
// coefficient codes (c_0 varying fastest) for a right divisor of F(x^n).
inline SkewPoly<FiniteField> find_distinguished_divisor(const FiniteField& L, const SkewPoly<FiniteField>& Fxn,
                                                         std::size_t s) {
  const std::uint64_t total = ipow(L.size(), static_cast<unsigned>(s));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<FiniteField::elem> c(s + 1);
    std::uint64_t x = code;
    for (std::size_t i = 0; i < s; ++i) {
      c[i] = L.from_code(static_cast<std::uint32_t>(x % L.size()));
      x /= L.size();
    }
    c[s] = L.one();
    if (L.is_zero(c[0])) continue;
    SkewPoly<FiniteField> f(L, c);
    if (right_divides(f, Fxn)) return f;
  }
  throw std::logic_error("no right divisor of F(x^n) of the expected degree");
}

// The quotient R/R F(x^n) for F irreducible over K with F != y, together
// with a fixed irreducible right divisor f of F(x^n) of degree s*ell.
template <class Field>
class QuotientContext {
 public:
  using poly = SkewPoly<Field>;
  using central = upoly::poly<Field>;

  QuotientContext(const Field& L, central F, poly f, std::size_t ell)
      : L_(&L), F_(std::move(F)), f_(std::move(f)), Fxn_(L), ell_(ell) {
    upoly::trim(L, F_);
    if (F_.size() < 2 || !L.eq(F_.back(), L.one())) throw std::invalid_argument("F must be monic of positive degree");
    if (L.is_zero(F_[0])) throw std::invalid_argument("F must differ from y");
    for (const auto& c : F_)
      if (!L.in_base(c)) throw std::invalid_argument("F must have coefficients in the fixed field");
    s_ = F_.size() - 1;
    if (ell_ == 0 || L.n() % ell_ != 0) throw std::invalid_argument("ell must divide n");
    m_ = L.n() / ell_;
    Fxn_ = central_to_skew(L, F_);
    if (f_.length() != s_ * ell_ + 1) throw std::invalid_argument("f has the wrong degree");
    if (!right_divides(f_, Fxn_)) throw std::invalid_argument("f does not right-divide F(x^n)");
  }

  // Finite case: ell = 1 and f is found by search.
  static QuotientContext finite(const FiniteField& L, central F) {
    upoly::trim(L, F);
    if (F.size() < 2) throw std::invalid_argument("F must have positive degree");
    if (L.is_zero(F[0])) throw std::invalid_argument("F must differ from y");
    for (const auto& c : F)
      if (!L.in_base(c)) throw std::invalid_argument("F must have coefficients in the fixed field");
    if (!upoly::is_irreducible_by_trial(L, F, L.base_elements()))
      throw std::invalid_argument("F must be irreducible over the fixed field");
    const auto Fxn = central_to_skew(L, F);
    auto f = find_distinguished_divisor(L, Fxn, F.size() - 1);
    return QuotientContext(L, std::move(F), std::move(f), 1);
  }

  // Context from a given irreducible f, with F and ell read off its bound.
  static QuotientContext from_divisor(const Field& L, const poly& f) {
    const auto rep = bound(f);
    if (!rep.ell) throw std::invalid_argument("characteristic polynomial of A_f is not a power of the bound");
    return QuotientContext(L, rep.F, f, *rep.ell);
  }

  const Field& field() const { return *L_; }
  const central& F() const { return F_; }
  const poly& f() const { return f_; }
  const poly& Fxn() const { return Fxn_; }
  std::size_t s() const { return s_; }
  std::size_t ell() const { return ell_; }
  std::size_t m() const { return m_; }
  std::size_t n() const { return L_->n(); }
  // Number of coefficients of a canonical representative, n*s.
  std::size_t length() const { return n() * s_; }

  poly reduce(const poly& a) const { return rem_right(a, Fxn_); }
  poly mul(const poly& a, const poly& b) const { return reduce(a * b); }

  // rank(a) = m - deg gcrd(a, F(x^n)) / (s ell).
  std::size_t rank(const poly& a) const {
    const auto r = reduce(a);
    if (r.is_zero()) return 0;
    const auto g = gcrd(r, Fxn_);
    const std::size_t d = g.length() - 1;
    if (d % (s_ * ell_) != 0) throw std::logic_error("gcrd degree is not a multiple of s*ell");
    return m_ - d / (s_ * ell_);
  }

  // K-basis of the eigenring {g : deg g < deg f, f g = 0 mod_r f}.
  std::vector<poly> eigenring_basis() const {
    const Field& L = *L_;
    const auto beta = L.base_basis();
    const std::size_t h = f_.length() - 1, nb = beta.size();
    linalg::mat<Field> m(h, linalg::vec<Field>(h * nb, L.zero()));
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        const auto img = rem_right(f_ * poly::monomial(L, beta[j], i), f_);
        for (std::size_t r = 0; r < h; ++r) m[r][i * nb + j] = img.coeff(r);
      }
    std::vector<poly> out;
    for (const auto& v : klinear::kernel(L, m, h * nb)) {
      std::vector<typename Field::elem> c(h, L.zero());
      for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < nb; ++j) c[i] = L.add(c[i], L.mul(v[i * nb + j], beta[j]));
      out.emplace_back(L, std::move(c));
    }
    return out;
  }

 private:
  const Field* L_;
  central F_;
  poly f_;
  poly Fxn_;
  std::size_t s_ = 0, ell_ = 1, m_ = 0;
};

// F_p coordinates of a polynomial with fewer than len coefficients: the
// digits of each coefficient, concatenated.
inline std::vector<std::uint32_t> fp_coords(const FiniteField& L, const SkewPoly<FiniteField>& a, std::size_t len) {
  if (a.length() > len) throw std::invalid_argument("polynomial too long for coordinates");
  std::vector<std::uint32_t> out;
  out.reserve(len * L.prime_degree());
  for (std::size_t i = 0; i < len; ++i) {
    const auto d = L.digits(a.coeff(i));
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

inline SkewPoly<FiniteField> from_fp_coords(const FiniteField& L, const std::vector<std::uint32_t>& v,
                                            std::size_t len) {
  const std::size_t N = L.prime_degree();
  std::vector<FiniteField::elem> c(len);
  for (std::size_t i = 0; i < len; ++i)
    c[i] = L.from_digits(std::vector<std::uint32_t>(v.begin() + static_cast<std::ptrdiff_t>(i * N),
                                                    v.begin() + static_cast<std::ptrdiff_t>((i + 1) * N)));
  return SkewPoly<FiniteField>(L, std::move(c));
}

// F_p basis of the polynomials with len coefficients: w^j x^i.
inline std::vector<SkewPoly<FiniteField>> fp_poly_basis(const FiniteField& L, std::size_t len) {
  std::vector<SkewPoly<FiniteField>> out;
  for (std::size_t i = 0; i < len; ++i)
    for (unsigned j = 0; j < L.prime_degree(); ++j) {
      std::vector<std::uint32_t> d(L.prime_degree(), 0);
      d[j] = 1;
      out.push_back(SkewPoly<FiniteField>::monomial(L, L.from_digits(d), i));
    }
  return out;
}

// The eigenring E(f) as a field: elements are polynomials of degree below
// deg f, multiplied modulo f on the right.
class EigenField {
 public:
  using elem = SkewPoly<FiniteField>;

  explicit EigenField(const SkewPoly<FiniteField>& f) : f_(f) {}

  elem zero() const { return elem(f_.field()); }
  elem one() const { return elem::constant(f_.field(), f_.field().one()); }
  bool is_zero(const elem& a) const { return a.is_zero(); }
  bool eq(const elem& a, const elem& b) const { return a == b; }
  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return rem_right(a * b, f_); }
  // Solves g e = 1 mod_r f, which is left L-linear in g.
  elem inv(const elem& e) const {
    const FiniteField& L = f_.field();
    const std::size_t h = f_.length() - 1;
    linalg::mat<FiniteField> m(h, linalg::vec<FiniteField>(h, L.zero()));
    for (std::size_t i = 0; i < h; ++i) {
      const auto img = rem_right(SkewPoly<FiniteField>::x_power(L, i) * e, f_);
      for (std::size_t r = 0; r < h; ++r) m[r][i] = img.coeff(r);
    }
    linalg::vec<FiniteField> rhs(h, L.zero());
    rhs[0] = L.one();
    auto sol = linalg::solve(L, m, rhs, h);
    if (!sol) throw std::domain_error("element of the eigenring is not invertible");
    return elem(L, std::move(*sol));
  }
  std::string to_string(const elem& a) const { return a.to_string(); }

 private:
  SkewPoly<FiniteField> f_;
};

// Left multiplication on R/Rf as m x m matrices over E(f), which acts on the
// right. The E(f)-basis of R/Rf is chosen greedily among w^j x^i.
class MatrixRepresentation {
 public:
  using poly = SkewPoly<FiniteField>;

  explicit MatrixRepresentation(const QuotientContext<FiniteField>& ctx)
      : ctx_(&ctx), eig_(ctx.f()), fp_(ctx.field().p()) {
    const FiniteField& L = ctx.field();
    const std::size_t h = ctx.f().length() - 1;
    // F_p basis of E(f): K-basis times F_p basis of K.
    const auto eig_k = ctx.eigenring_basis();
    std::vector<FiniteField::elem> kbasis;
    const auto kgen = L.pow(L.primitive(), (L.size() - 1) / (L.q() - 1));
    auto cur = L.one();
    for (unsigned u = 0; u < L.e(); ++u) {
      kbasis.push_back(cur);
      cur = L.mul(cur, kgen);
    }
    for (const auto& e : eig_k)
      for (const auto& k : kbasis) eig_fp_.push_back(e.scale_left(k));
    // Greedy E(f)-basis of R/Rf.
    linalg::mat<PrimeField> span;
    for (const auto& cand : fp_poly_basis(L, h)) {
      if (basis_.size() == ctx.m()) break;
      auto trial = span;
      for (const auto& e : eig_fp_) trial.push_back(fp_coords(L, rem_right(cand * e, ctx.f()), h));
      if (linalg::rank(fp_, trial) == (basis_.size() + 1) * eig_fp_.size()) {
        span = std::move(trial);
        basis_.push_back(cand);
      }
    }
    if (basis_.size() != ctx.m()) throw std::logic_error("failed to build an E(f)-basis");
    auto inv = linalg::inverse(fp_, linalg::transpose(fp_, span));
    if (!inv) throw std::logic_error("E(f)-basis is singular");
    coords_inv_ = std::move(*inv);
  }

  const EigenField& eigenfield() const { return eig_; }
  const std::vector<poly>& basis() const { return basis_; }

  // Coordinates of u in R/Rf over the chosen basis.
  std::vector<poly> coordinates(const poly& u) const {
    const FiniteField& L = ctx_->field();
    const std::size_t h = ctx_->f().length() - 1, d = eig_fp_.size();
    const auto c = linalg::apply(fp_, coords_inv_, fp_coords(L, rem_right(u, ctx_->f()), h));
    std::vector<poly> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      poly e(L);
      for (std::size_t l = 0; l < d; ++l)
        if (c[k * d + l]) e += eig_fp_[l].scale_left(L.from_int(c[k * d + l]));
      out.push_back(e);
    }
    return out;
  }

  linalg::mat<EigenField> image(const poly& a) const {
    linalg::mat<EigenField> M(basis_.size(), linalg::vec<EigenField>(basis_.size(), eig_.zero()));
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const auto col = coordinates(a * basis_[k]);
      for (std::size_t i = 0; i < basis_.size(); ++i) M[i][k] = col[i];
    }
    return M;
  }

  std::size_t rank(const poly& a) const { return linalg::rank(eig_, image(a)); }

 private:
  const QuotientContext<FiniteField>* ctx_;
  EigenField eig_;
  PrimeField fp_;
  std::vector<poly> eig_fp_;
  std::vector<poly> basis_;
  linalg::mat<PrimeField> coords_inv_;
};

}  // namespace skewlab
