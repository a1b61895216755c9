#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "linalg.hpp"
#include "upoly.hpp"

namespace skewlab {

// True when s contains a '+' outside every pair of parentheses.
inline bool has_top_level_plus(const std::string& s) {
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) return true;
  }
  return false;
}

// Skew polynomials in x over a field context with x a = sigma(a) x.
// Coefficients are ascending and the leading coefficient is nonzero.
template <class Field>
class SkewPoly {
 public:
  using elem = typename Field::elem;

  explicit SkewPoly(const Field& F) : F_(&F) {}
  SkewPoly(const Field& F, std::vector<elem> c) : F_(&F), c_(std::move(c)) { trim(); }

  static SkewPoly constant(const Field& F, const elem& c) { return SkewPoly(F, {c}); }
  static SkewPoly monomial(const Field& F, const elem& c, std::size_t d) {
    std::vector<elem> v(d + 1, F.zero());
    v[d] = c;
    return SkewPoly(F, std::move(v));
  }
  static SkewPoly x_power(const Field& F, std::size_t d) { return monomial(F, F.one(), d); }

  const Field& field() const { return *F_; }
  const std::vector<elem>& coeffs() const { return c_; }
  elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F_->zero(); }
  Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
  // Number of stored coefficients, one more than the degree.
  std::size_t length() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && F_->eq(c_.back(), F_->one()); }
  elem lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero");
    return c_.back();
  }

  SkewPoly operator+(const SkewPoly& o) const {
    check(o);
    std::vector<elem> r = c_;
    if (r.size() < o.c_.size()) r.resize(o.c_.size(), F_->zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = F_->add(r[i], o.c_[i]);
    return SkewPoly(*F_, std::move(r));
  }
  SkewPoly operator-() const {
    std::vector<elem> r = c_;
    for (auto& x : r) x = F_->neg(x);
    return SkewPoly(*F_, std::move(r));
  }
  SkewPoly operator-(const SkewPoly& o) const { return *this + (-o); }
  SkewPoly operator*(const SkewPoly& o) const {
    check(o);
    if (c_.empty() || o.c_.empty()) return SkewPoly(*F_);
    std::vector<elem> r(c_.size() + o.c_.size() - 1, F_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (F_->is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        if (F_->is_zero(o.c_[j])) continue;
        r[i + j] = F_->add(r[i + j], F_->mul(c_[i], F_->sigma(o.c_[j], static_cast<long long>(i))));
      }
    }
    return SkewPoly(*F_, std::move(r));
  }
  SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
  SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }
  SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }

  // c * this
  SkewPoly scale_left(const elem& c) const {
    std::vector<elem> r = c_;
    for (auto& x : r) x = F_->mul(c, x);
    return SkewPoly(*F_, std::move(r));
  }
  // this * x^k
  SkewPoly shift(std::size_t k) const {
    if (c_.empty()) return *this;
    std::vector<elem> r(k, F_->zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return SkewPoly(*F_, std::move(r));
  }
  // Left multiple by the inverse leading coefficient.
  SkewPoly monic() const {
    if (c_.empty()) return *this;
    return scale_left(F_->inv(c_.back()));
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.F_->eq(a.c_[i], b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

  // Descending powers; coefficient 1 is omitted on non-constant terms.
  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (F_->is_zero(c_[i])) continue;
      if (!out.empty()) out += "+";
      const std::string c = F_->to_string(c_[i]);
      if (i == 0) {
        out += c;
        continue;
      }
      if (!F_->eq(c_[i], F_->one())) out += (has_top_level_plus(c) ? "(" + c + ")" : c) + "*";
      out += i == 1 ? var : var + "^" + std::to_string(i);
    }
    return out;
  }

  void check(const SkewPoly& o) const {
    if (F_ != o.F_ && !(*F_ == *o.F_)) throw ContextMismatch();
  }

 private:
  void trim() {
    while (!c_.empty() && F_->is_zero(c_.back())) c_.pop_back();
  }

  const Field* F_;
  std::vector<elem> c_;
};

// f = q g + r with deg r < deg g.
template <class Field>
std::pair<SkewPoly<Field>, SkewPoly<Field>> right_divmod(const SkewPoly<Field>& f, const SkewPoly<Field>& g) {
  f.check(g);
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const Field& F = f.field();
  const std::size_t dg = g.length() - 1;
  std::vector<typename Field::elem> r = f.coeffs();
  std::vector<typename Field::elem> q(r.size() > dg ? r.size() - dg : 0, F.zero());
  std::vector<typename Field::elem> shifted(g.length());
  while (!r.empty() && r.size() > dg) {
    const std::size_t d = r.size() - 1 - dg;
    // c x^d g has leading coefficient c sigma^d(g_lead).
    const auto c = F.div(r.back(), F.sigma(g.lead(), static_cast<long long>(d)));
    q[d] = c;
    for (std::size_t i = 0; i <= dg; ++i)
      if (!F.is_zero(g.coeffs()[i]))
        r[d + i] = F.sub(r[d + i], F.mul(c, F.sigma(g.coeffs()[i], static_cast<long long>(d))));
    r.pop_back();
    while (!r.empty() && F.is_zero(r.back())) r.pop_back();
  }
  return {SkewPoly<Field>(F, std::move(q)), SkewPoly<Field>(F, std::move(r))};
}

// f = g q + r with deg r < deg g.
template <class Field>
std::pair<SkewPoly<Field>, SkewPoly<Field>> left_divmod(const SkewPoly<Field>& f, const SkewPoly<Field>& g) {
  f.check(g);
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const Field& F = f.field();
  const std::size_t dg = g.length() - 1;
  std::vector<typename Field::elem> r = f.coeffs();
  std::vector<typename Field::elem> q(r.size() > dg ? r.size() - dg : 0, F.zero());
  const auto lead_inv = F.inv(g.lead());
  while (!r.empty() && r.size() > dg) {
    const std::size_t d = r.size() - 1 - dg;
    // g c x^d has leading coefficient g_lead sigma^dg(c).
    const auto c = F.sigma(F.mul(lead_inv, r.back()), -static_cast<long long>(dg));
    q[d] = c;
    for (std::size_t i = 0; i <= dg; ++i)
      if (!F.is_zero(g.coeffs()[i]))
        r[d + i] = F.sub(r[d + i], F.mul(g.coeffs()[i], F.sigma(c, static_cast<long long>(i))));
    r.pop_back();
    while (!r.empty() && F.is_zero(r.back())) r.pop_back();
  }
  return {SkewPoly<Field>(F, std::move(q)), SkewPoly<Field>(F, std::move(r))};
}

template <class Field>
SkewPoly<Field> rem_right(const SkewPoly<Field>& f, const SkewPoly<Field>& g) {
  return right_divmod(f, g).second;
}

template <class Field>
bool right_divides(const SkewPoly<Field>& g, const SkewPoly<Field>& f) {
  return rem_right(f, g).is_zero();
}

template <class Field>
bool left_divides(const SkewPoly<Field>& g, const SkewPoly<Field>& f) {
  return left_divmod(f, g).second.is_zero();
}

// Monic greatest common right divisor; gcrd(0, 0) = 0.
template <class Field>
SkewPoly<Field> gcrd(SkewPoly<Field> f, SkewPoly<Field> g) {
  while (!g.is_zero()) {
    auto r = rem_right(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

// Remainders x^i mod_r f for i = 0..count-1, each padded to deg f entries.
template <class Field>
std::vector<std::vector<typename Field::elem>> x_power_remainders(const SkewPoly<Field>& f, std::size_t count) {
  const Field& F = f.field();
  const std::size_t d = f.length() - 1;
  std::vector<std::vector<typename Field::elem>> out;
  const auto x = SkewPoly<Field>::x_power(F, 1);
  SkewPoly<Field> cur = rem_right(SkewPoly<Field>::x_power(F, 0), f);
  for (std::size_t i = 0; i < count; ++i) {
    auto v = cur.coeffs();
    v.resize(d, F.zero());
    out.push_back(std::move(v));
    // Rf is a left ideal, so x^{i+1} mod_r f is x (x^i mod_r f) mod_r f.
    cur = rem_right(x * cur, f);
  }
  return out;
}

// Monic least common left multiple, found as the lowest-degree monic h with
// h = 0 mod_r f and h = 0 mod_r g. Because h mod_r f is left L-linear in the
// coefficients of h, each candidate degree is a linear system over L.
template <class Field>
SkewPoly<Field> lclm(const SkewPoly<Field>& f, const SkewPoly<Field>& g) {
  f.check(g);
  if (f.is_zero() || g.is_zero()) throw std::domain_error("lclm of the zero polynomial");
  const Field& F = f.field();
  const std::size_t df = f.length() - 1, dg = g.length() - 1;
  if (df == 0) return g.monic();
  if (dg == 0) return f.monic();
  const auto rf = x_power_remainders(f, df + dg + 1);
  const auto rg = x_power_remainders(g, df + dg + 1);
  for (std::size_t d = std::max(df, dg); d <= df + dg; ++d) {
    linalg::mat<Field> m(df + dg, linalg::vec<Field>(d, F.zero()));
    linalg::vec<Field> rhs(df + dg);
    for (std::size_t row = 0; row < df; ++row) {
      for (std::size_t i = 0; i < d; ++i) m[row][i] = rf[i][row];
      rhs[row] = F.neg(rf[d][row]);
    }
    for (std::size_t row = 0; row < dg; ++row) {
      for (std::size_t i = 0; i < d; ++i) m[df + row][i] = rg[i][row];
      rhs[df + row] = F.neg(rg[d][row]);
    }
    auto sol = linalg::solve(F, m, rhs, d);
    if (sol) {
      sol->push_back(F.one());
      return SkewPoly<Field>(F, std::move(*sol));
    }
  }
  throw std::logic_error("lclm not found");
}

// G(x^n) for a commutative polynomial G with coefficients in the fixed field.
template <class Field>
SkewPoly<Field> central_to_skew(const Field& F, const upoly::poly<Field>& G) {
  const std::size_t n = F.n();
  std::vector<typename Field::elem> c(G.empty() ? 0 : (G.size() - 1) * n + 1, F.zero());
  for (std::size_t i = 0; i < G.size(); ++i) c[i * n] = G[i];
  return SkewPoly<Field>(F, std::move(c));
}

// Two-sided elements have the shape d * G(x^n) * x^m with G over the fixed
// field.
template <class Field>
bool is_two_sided(const SkewPoly<Field>& f) {
  if (f.is_zero()) return true;
  const Field& F = f.field();
  const auto h = f.monic();
  std::size_t m = 0;
  while (F.is_zero(h.coeffs()[m])) ++m;
  for (std::size_t i = m; i < h.length(); ++i) {
    const auto& c = h.coeffs()[i];
    if (F.is_zero(c)) continue;
    if ((i - m) % F.n() != 0 || !F.in_base(c)) return false;
  }
  return true;
}

}  // namespace skewlab
