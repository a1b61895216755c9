#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bound.hpp"
#include "function_field.hpp"
#include "skew_poly.hpp"
#include "upoly.hpp"

namespace skewlab {

// The explicit instance over L = F_{2^r}(t) with n = 2r:
//   f = x^2 + (t^2+1)/(t^2+t+1),  F(y) = y + ((t^2+1)/(t^2+t+1))^r,
//   g = x^2 + 1/t,                G(y) = y^2 + ((t^{2r}+1)/t^r) y + 1.
class FFInstance {
 public:
  using elem = FunctionField::elem;
  using poly = SkewPoly<FunctionField>;
  using central = upoly::poly<FunctionField>;

  static constexpr unsigned kMaxR = 9;

  explicit FFInstance(unsigned r, unsigned max_r = kMaxR) : L_(checked(r, max_r)), f_(L_), g_(L_) {
    const auto& L = L_;
    f0_ = L.make({1, 0, 1}, {1, 1, 1});
    f_ = poly(L, {f0_, L.zero(), L.one()});
    F_ = {L.pow(f0_, r), L.one()};
    g_ = poly(L, {L.make({1}, {0, 1}), L.zero(), L.one()});
    bpoly::poly num(2 * r + 1, 0), den(r + 1, 0);
    num[0] = num[2 * r] = 1;
    den[r] = 1;
    G_ = {L.one(), L.make(num, den), L.one()};
  }

  unsigned r() const { return L_.r(); }
  const FunctionField& field() const { return L_; }
  const elem& f0() const { return f0_; }
  const poly& f() const { return f_; }
  const central& F() const { return F_; }
  const poly& g() const { return g_; }
  const central& G() const { return G_; }

 private:
  static unsigned checked(unsigned r, unsigned max_r) {
    if (r % 2 == 0) throw std::invalid_argument("r must be odd");
    if (r < 3) throw std::invalid_argument("r must be at least 3");
    if (r > max_r) throw std::invalid_argument("r exceeds the cap " + std::to_string(max_r));
    return r;
  }

  FunctionField L_;
  elem f0_;
  poly f_, g_;
  central F_, G_;
};

namespace ff {

// Smallest d >= 1 with step^d fixing every test element, searched up to limit.
template <class Step>
std::optional<unsigned> order_on(const FunctionField& L, const std::vector<FunctionField::elem>& tests, Step step,
                                 unsigned limit) {
  std::vector<FunctionField::elem> cur = tests;
  for (unsigned d = 1; d <= limit; ++d) {
    bool fixed = true;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i] = step(cur[i]);
      if (!L.eq(cur[i], tests[i])) fixed = false;
    }
    if (fixed) return d;
  }
  return std::nullopt;
}

inline std::optional<unsigned> sigma_order(const FunctionField& L) {
  return order_on(L, {L.t(), L.alpha()}, [&](const FunctionField::elem& a) { return L.sigma(a); }, 4 * L.n());
}

inline std::optional<unsigned> tau_order(const FunctionField& L) {
  return order_on(L, {L.t(), L.alpha()}, [&](const FunctionField::elem& a) { return L.tau(a); }, 4 * L.n());
}

// sigma^{2r} fixes t a, and no proper divisor of 2r fixes both t and a.
inline bool verify_sigma_order(const FFInstance& inst) {
  const auto& L = inst.field();
  const auto ta = L.mul(L.t(), L.alpha());
  return L.eq(L.sigma(ta, L.n()), ta) && sigma_order(L) == L.n();
}

// sum_{i<r} f_0^i x^{n-2-2i}
inline SkewPoly<FunctionField> f_cofactor(const FFInstance& inst) {
  const auto& L = inst.field();
  const std::size_t n = L.n();
  std::vector<FunctionField::elem> c(n - 1, L.zero());
  for (std::size_t i = 0; i < inst.r(); ++i) c[n - 2 - 2 * i] = L.pow(inst.f0(), static_cast<long long>(i));
  return SkewPoly<FunctionField>(L, std::move(c));
}

// cofactor * f = F(x^n) exactly, and bound(f) = F with ell = 2, m = r.
inline bool verify_f_bound(const FFInstance& inst, const std::optional<SkewPoly<FunctionField>>& cofactor = {}) {
  const auto& L = inst.field();
  const auto Fxn = central_to_skew(L, inst.F());
  const auto q = cofactor ? *cofactor : f_cofactor(inst);
  if (q * inst.f() != Fxn) return false;
  const auto rep = bound(inst.f());
  return upoly::equal(L, rep.F, inst.F()) && rep.ell == 2u && rep.m == inst.r();
}

// g divides G(x^{2r}) on both sides, G(1) != 0, and bound(g) = G with
// ell = 1, m = 2r.
inline bool verify_g_bound(const FFInstance& inst) {
  const auto& L = inst.field();
  const auto Gxn = central_to_skew(L, inst.G());
  if (!right_divmod(Gxn, inst.g()).second.is_zero()) return false;
  if (!left_divmod(Gxn, inst.g()).second.is_zero()) return false;
  if (L.is_zero(upoly::eval(L, inst.G(), L.one()))) return false;
  const auto rep = bound(inst.g());
  return upoly::equal(L, rep.F, inst.G()) && rep.ell == 1u && rep.m == L.n();
}

// char(A_f) = F(y)^2 and char(A_g) = G(y).
inline bool verify_char_polys(const FFInstance& inst) {
  const auto& L = inst.field();
  const auto cf = linalg::charpoly(L, companion_product(inst.f()));
  const auto cg = linalg::charpoly(L, companion_product(inst.g()));
  return upoly::equal(L, cf, upoly::pow(L, inst.F(), 2)) && upoly::equal(L, cg, inst.G());
}

// Polynomial over F_2 in s = (t^2+1)/t equal to sum_i a_i t^{2i} / t^ell,
// for a palindromic a_0..a_ell with ell odd. Peels s^ell when a_0 = 1 and
// shifts down by two degrees otherwise.
inline std::vector<int> rewrite_in_sff(std::vector<int> a, unsigned ell) {
  if (ell % 2 == 0) throw std::invalid_argument("shape precondition violated: ell must be odd");
  if (a.size() != ell + 1) throw std::invalid_argument("shape precondition violated: expected ell+1 coefficients");
  for (auto& x : a) {
    if (x != 0 && x != 1) throw std::invalid_argument("shape precondition violated: coefficients must lie in F_2");
  }
  for (std::size_t i = 0; i <= ell; ++i)
    if (a[i] != a[ell - i]) throw std::invalid_argument("shape precondition violated: coefficients are not palindromic");
  std::vector<int> out(ell + 1, 0);
  std::size_t lo = 0;
  unsigned cur = ell;
  while (true) {
    // Remaining value: sum_{i=0}^{cur} a[lo+i] t^{2i} / t^cur.
    if (a[lo] == 1) {
      out[cur] ^= 1;
      // subtract (t^2+1)^cur, whose t^{2i} coefficient is binom(cur, i) mod 2
      for (unsigned i = 0; i <= cur; ++i)
        if ((i & cur) == i) a[lo + i] ^= 1;
    }
    if (cur == 1) break;
    ++lo;
    cur -= 2;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Coefficients a_0..a_ell with rt = sum a_i t^{2i} / t^ell.
inline std::vector<int> palindromic_coefficients(const FunctionField& L, const FunctionField::elem& rt, unsigned ell) {
  std::vector<int> a(ell + 1, 0);
  if (L.is_zero(rt)) return a;
  const auto& den = rt.den;
  std::size_t j = 0;
  while (j + 1 < den.size() && den[j] == 0) ++j;
  if (j + 1 != den.size() || den[j] != 1 || j > ell)
    throw std::invalid_argument("shape precondition violated: denominator is not a power of t dividing t^ell");
  const std::size_t shift = ell - j;
  for (std::size_t i = 0; i < rt.num.size(); ++i) {
    const auto c = rt.num[i];
    if (c == 0) continue;
    const std::size_t d = i + shift;
    if (c != 1 || d % 2 != 0 || d / 2 > ell)
      throw std::invalid_argument("shape precondition violated: numerator is not an even F_2 polynomial of degree <= 2 ell");
    a[d / 2] = 1;
  }
  return a;
}

inline std::vector<int> rewrite_in_sff(const FunctionField& L, const FunctionField::elem& rt, unsigned ell) {
  return rewrite_in_sff(palindromic_coefficients(L, rt, ell), ell);
}

inline FunctionField::elem substitute_sff(const FunctionField& L, const std::vector<int>& c) {
  FunctionField::elem acc = L.zero();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = L.mul(acc, L.s_ff());
    if (c[i]) acc = L.add(acc, L.one());
  }
  return acc;
}

inline std::string sff_to_string(const std::vector<int>& c) {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (!c[i]) continue;
    if (!out.empty()) out += "+";
    out += i == 0 ? "1" : (i == 1 ? "s" : "s^" + std::to_string(i));
  }
  return out;
}

// gamma/f_0 outside L' = Fix(theta) and N(gamma) a non-square in K. For the
// default gamma = 1+t also checks theta((t^2+t+1)/(t+1)) = gamma/(t f_0) and
// N(gamma) = (1+t)^{2r}/t^r.
inline bool verify_gamma_example(const FFInstance& inst, std::optional<FunctionField::elem> gamma_in = {}) {
  const auto& L = inst.field();
  const auto one_plus_t = L.add(L.one(), L.t());
  const auto gamma = gamma_in ? *gamma_in : one_plus_t;
  const auto q = L.div(gamma, inst.f0());
  if (L.eq(L.theta(q), q)) return false;
  if (L.eq(L.sigma(q, L.n() / 2), q)) return false;
  const auto N = L.norm(gamma);
  if (L.is_square_in_base(N)) return false;
  if (!gamma_in || L.eq(gamma, one_plus_t)) {
    if (!L.eq(q, L.make({1, 1, 1}, {1, 1}))) return false;
    if (!L.eq(L.theta(q), L.div(gamma, L.mul(L.t(), inst.f0())))) return false;
    const auto expected = L.div(L.pow(one_plus_t, 2 * inst.r()), L.pow(L.t(), inst.r()));
    if (!L.eq(N, expected)) return false;
  }
  return true;
}

// G(1) = (t^{2r}+1)/t^r rewritten in s has degree r.
inline bool verify_g_at_one(const FFInstance& inst) {
  const auto& L = inst.field();
  const auto v = upoly::eval(L, inst.G(), L.one());
  if (L.is_zero(v)) return false;
  const auto p = rewrite_in_sff(L, v, inst.r());
  return p.size() == inst.r() + 1 && L.eq(substitute_sff(L, p), v);
}

struct SuiteResult {
  unsigned r = 0;
  std::string check;
  bool pass = false;
  std::string detail;
};

inline const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names{"sigma-order", "f-bound", "g-bound", "char-poly", "g-at-one",
                                              "gamma-example"};
  return names;
}

inline std::vector<SuiteResult> run_suite(unsigned r, const std::optional<std::string>& only = {},
                                          unsigned max_r = FFInstance::kMaxR) {
  if (only) {
    const auto& names = suite_check_names();
    if (std::find(names.begin(), names.end(), *only) == names.end())
      throw std::invalid_argument("unknown check: " + *only);
  }
  FFInstance inst(r, max_r);
  std::vector<SuiteResult> out;
  auto run = [&](const std::string& name, auto fn) {
    if (only && *only != name) return;
    SuiteResult res{r, name, false, ""};
    try {
      res.pass = fn();
    } catch (const std::exception& e) {
      res.detail = e.what();
    }
    out.push_back(res);
  };
  run("sigma-order", [&] { return verify_sigma_order(inst); });
  run("f-bound", [&] { return verify_f_bound(inst); });
  run("g-bound", [&] { return verify_g_bound(inst); });
  run("char-poly", [&] { return verify_char_polys(inst); });
  run("g-at-one", [&] { return verify_g_at_one(inst); });
  run("gamma-example", [&] { return verify_gamma_example(inst); });
  return out;
}

}  // namespace ff

}  // namespace skewlab
