#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "common.hpp"
#include "prime_field.hpp"

namespace skewlab {

// F_{2^r} with elements stored as bit masks over the basis 1, a, ..., a^{r-1}.
class BinaryField {
 public:
  using elem = std::uint16_t;

  explicit BinaryField(unsigned r) : r_(r) {
    if (r == 0 || r > 15) throw std::invalid_argument("binary field degree out of range");
    PrimeField f2(2);
    const auto m = fp_poly::smallest_irreducible(r, f2);
    modulus_ = 0;
    for (unsigned i = 0; i <= r; ++i)
      if (m[i]) modulus_ |= (1u << i);
    size_ = 1u << r;
    exp_.assign(2 * size_, 0);
    log_.assign(size_, 0);
    // Find a primitive element.
    const auto factors = prime_factors(size_ - 1);
    elem g = 1;
    for (std::uint32_t c = 2; c < size_; ++c) {
      bool ok = true;
      for (auto l : factors)
        if (slow_pow(static_cast<elem>(c), (size_ - 1) / l) == 1) ok = false;
      if (ok) {
        g = static_cast<elem>(c);
        break;
      }
    }
    elem cur = 1;
    for (std::uint32_t i = 0; i < size_ - 1; ++i) {
      exp_[i] = cur;
      log_[cur] = i;
      cur = slow_mul(cur, g);
    }
    for (std::uint32_t i = size_ - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (size_ - 1)];
  }

  unsigned r() const { return r_; }
  std::uint32_t size() const { return size_; }
  elem mul(elem a, elem b) const {
    if (!a || !b) return 0;
    return exp_[log_[a] + log_[b]];
  }
  elem inv(elem a) const {
    if (!a) throw std::domain_error("division by zero");
    return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  }
  // a -> a^{2^k}
  elem frob(elem a, long long k) const {
    if (!a) return 0;
    long long kk = k % static_cast<long long>(r_);
    if (kk < 0) kk += r_;
    const std::uint64_t e = powmod(2, static_cast<std::uint64_t>(kk), size_ - 1);
    return exp_[static_cast<std::uint64_t>(log_[a]) * e % (size_ - 1)];
  }
  std::string to_string(elem a) const {
    if (!a) return "0";
    std::string out;
    for (unsigned i = r_; i-- > 0;) {
      if (!((a >> i) & 1)) continue;
      if (!out.empty()) out += "+";
      out += i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
    }
    return out;
  }

 private:
  elem slow_mul(elem a, elem b) const {
    std::uint32_t r = 0, x = a;
    for (unsigned i = 0; i < r_; ++i) {
      if ((b >> i) & 1) r ^= x;
      x <<= 1;
      if (x & (1u << r_)) x ^= modulus_;
    }
    return static_cast<elem>(r);
  }
  elem slow_pow(elem a, std::uint64_t e) const {
    elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  unsigned r_;
  std::uint32_t modulus_ = 0, size_ = 0;
  std::vector<elem> exp_;
  std::vector<std::uint32_t> log_;
};

// Polynomials in t over F_{2^r}, ascending and trimmed.
namespace bpoly {

using poly = std::vector<BinaryField::elem>;

inline void trim(poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline poly add(poly a, const poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
  trim(a);
  return a;
}
inline poly mul(const poly& a, const poly& b, const BinaryField& F) {
  if (a.empty() || b.empty()) return {};
  poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= F.mul(a[i], b[j]);
  }
  trim(r);
  return r;
}
inline poly scale(poly a, BinaryField::elem c, const BinaryField& F) {
  for (auto& x : a) x = F.mul(x, c);
  trim(a);
  return a;
}
inline void divmod(const poly& a, const poly& b, poly& q, poly& r, const BinaryField& F) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  const auto lead_inv = F.inv(b.back());
  while (r.size() >= b.size()) {
    const auto c = F.mul(r.back(), lead_inv);
    const std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] ^= F.mul(c, b[i]);
    trim(r);
  }
  trim(q);
}
inline poly monic(poly a, const BinaryField& F) {
  if (a.empty()) return a;
  return scale(a, F.inv(a.back()), F);
}
inline poly gcd(poly a, poly b, const BinaryField& F) {
  trim(a);
  trim(b);
  poly q, r;
  while (!b.empty()) {
    divmod(a, b, q, r, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}
inline poly exact_div(const poly& a, const poly& b, const BinaryField& F) {
  poly q, r;
  divmod(a, b, q, r, F);
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}
// t^deg * a(1/t) for deg >= deg a.
inline poly reverse(const poly& a, std::size_t deg) {
  poly r(deg + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[deg - i] = a[i];
  trim(r);
  return r;
}

}  // namespace bpoly

// The rational function field L = F_{2^r}(t), r odd and at least 3, with
// theta: t -> 1/t, tau the coefficient-wise Frobenius, and sigma = theta o tau
// of order n = 2r. The fixed field of sigma is K = F_2(s) with s = (t^2+1)/t.
class FunctionField {
 public:
  struct elem {
    bpoly::poly num;
    bpoly::poly den{1};
    friend bool operator==(const elem& a, const elem& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const elem& a, const elem& b) { return !(a == b); }
  };

  // tau^tau_pow followed by theta^theta_pow.
  struct aut {
    unsigned tau_pow = 0;
    unsigned theta_pow = 0;
  };

  explicit FunctionField(unsigned r) : F_(r), r_(r) {
    if (r < 3 || r % 2 == 0) throw std::invalid_argument("r must be odd and at least 3");
  }

  unsigned r() const { return r_; }
  unsigned n() const { return 2 * r_; }
  unsigned p() const { return 2; }
  bool is_finite() const { return false; }
  const BinaryField& coefficient_field() const { return F_; }

  elem zero() const { return {{}, {1}}; }
  elem one() const { return {{1}, {1}}; }
  elem t() const { return {{0, 1}, {1}}; }
  elem alpha() const { return r_ == 1 ? one() : elem{{2}, {1}}; }
  elem coefficient(BinaryField::elem c) const { return make({c}, {1}); }
  elem s_ff() const { return make({1, 0, 1}, {0, 1}); }
  elem from_int(long long v) const { return (v % 2 != 0) ? one() : zero(); }
  elem make(bpoly::poly num, bpoly::poly den) const {
    bpoly::trim(num);
    bpoly::trim(den);
    if (den.empty()) throw std::domain_error("division by zero");
    if (num.empty()) return zero();
    const auto g = bpoly::gcd(num, den, F_);
    if (g.size() > 1) {
      num = bpoly::exact_div(num, g, F_);
      den = bpoly::exact_div(den, g, F_);
    }
    const auto li = F_.inv(den.back());
    return {bpoly::scale(num, li, F_), bpoly::scale(den, li, F_)};
  }

  bool is_zero(const elem& a) const { return a.num.empty(); }
  bool eq(const elem& a, const elem& b) const { return a == b; }
  elem add(const elem& a, const elem& b) const {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (a.den == b.den) return make(bpoly::add(a.num, b.num), a.den);
    return make(bpoly::add(bpoly::mul(a.num, b.den, F_), bpoly::mul(b.num, a.den, F_)),
                bpoly::mul(a.den, b.den, F_));
  }
  elem neg(const elem& a) const { return a; }
  elem sub(const elem& a, const elem& b) const { return add(a, b); }
  elem mul(const elem& a, const elem& b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    return make(bpoly::mul(a.num, b.num, F_), bpoly::mul(a.den, b.den, F_));
  }
  elem inv(const elem& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    return make(a.den, a.num);
  }
  elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }
  elem pow(const elem& a, long long k) const {
    if (k < 0) return pow(inv(a), -k);
    elem r = one(), b = a;
    while (k) {
      if (k & 1) r = mul(r, b);
      b = mul(b, b);
      k >>= 1;
    }
    return r;
  }

  // Automorphisms.
  elem tau(const elem& a, long long k = 1) const {
    bpoly::poly num = a.num, den = a.den;
    for (auto& c : num) c = F_.frob(c, k);
    for (auto& c : den) c = F_.frob(c, k);
    return make(num, den);
  }
  elem theta(const elem& a) const {
    if (is_zero(a)) return a;
    const std::size_t dn = a.num.size() - 1, dd = a.den.size() - 1;
    bpoly::poly num = bpoly::reverse(a.num, dn), den = bpoly::reverse(a.den, dd);
    bpoly::poly tn(dd + 1, 0), td(dn + 1, 0);
    tn[dd] = 1;
    td[dn] = 1;
    return make(bpoly::mul(num, tn, F_), bpoly::mul(den, td, F_));
  }
  elem sigma(const elem& a, long long k = 1) const {
    long long kk = k % static_cast<long long>(n());
    if (kk < 0) kk += n();
    elem b = tau(a, kk);
    return kk % 2 ? theta(b) : b;
  }
  aut sigma_aut(long long k = 1) const {
    long long kk = k % static_cast<long long>(n());
    if (kk < 0) kk += n();
    return {static_cast<unsigned>(kk % r_), static_cast<unsigned>(kk % 2)};
  }
  elem apply(const aut& g, const elem& a) const {
    elem b = tau(a, g.tau_pow);
    return g.theta_pow % 2 ? theta(b) : b;
  }
  aut compose(const aut& a, const aut& b) const {
    return {(a.tau_pow + b.tau_pow) % r_, (a.theta_pow + b.theta_pow) % 2};
  }
  aut inverse(const aut& a) const { return {(r_ - a.tau_pow % r_) % r_, a.theta_pow % 2}; }
  unsigned order(const aut& a) const {
    const unsigned ot = r_ / std::gcd(r_, a.tau_pow % r_ == 0 ? r_ : a.tau_pow % r_);
    const unsigned oh = a.theta_pow % 2 ? 2 : 1;
    return std::lcm(ot, oh);
  }
  bool fixes(const aut& g, const elem& a) const { return apply(g, a) == a; }

  bool in_base(const elem& a) const { return sigma(a) == a; }
  elem norm(const elem& a) const {
    elem r = one(), cur = a;
    for (unsigned i = 0; i < n(); ++i) {
      r = mul(r, cur);
      cur = sigma(cur);
    }
    return r;
  }
  elem norm_to_fixed(const elem& a, const aut& g) const {
    elem acc = one(), cur = a;
    for (unsigned i = 0; i < order(g); ++i) {
      acc = mul(acc, cur);
      cur = apply(g, cur);
    }
    return acc;
  }
  // In characteristic 2, an element of K is a square in K exactly when it is
  // a square in L, which for a reduced fraction means numerator and
  // denominator have no odd-degree terms.
  bool is_square_in_base(const elem& a) const {
    if (!in_base(a)) throw std::invalid_argument("element is not in the base field");
    for (std::size_t i = 1; i < a.num.size(); i += 2)
      if (a.num[i]) return false;
    for (std::size_t i = 1; i < a.den.size(); i += 2)
      if (a.den[i]) return false;
    return true;
  }

  // A K-basis of L: a^i t^j for i < r, j < 2.
  std::vector<elem> base_basis() const {
    std::vector<elem> out;
    for (unsigned j = 0; j < 2; ++j)
      for (unsigned i = 0; i < r_; ++i) {
        bpoly::poly num(j + 1, 0);
        num[j] = static_cast<BinaryField::elem>(1u << i);
        out.push_back(make(num, {1}));
      }
    return out;
  }

  template <class Rng>
  elem random(Rng& rng, unsigned max_deg = 2) const {
    std::uniform_int_distribution<std::uint32_t> c(0, F_.size() - 1);
    std::uniform_int_distribution<unsigned> d(0, max_deg);
    bpoly::poly num(d(rng) + 1), den(d(rng) + 1);
    for (auto& x : num) x = static_cast<BinaryField::elem>(c(rng));
    for (auto& x : den) x = static_cast<BinaryField::elem>(c(rng));
    bpoly::trim(den);
    if (den.empty()) den = {1};
    return make(num, den);
  }

  std::string poly_to_string(const bpoly::poly& a) const {
    if (a.empty()) return "0";
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (!a[i]) continue;
      if (!out.empty()) out += "+";
      std::string c = F_.to_string(a[i]);
      const bool compound = c.find('+') != std::string::npos;
      if (i == 0) {
        out += c;
        continue;
      }
      if (c != "1") out += (compound ? "(" + c + ")" : c) + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out;
  }
  std::string to_string(const elem& a) const {
    const std::string num = poly_to_string(a.num);
    if (a.den.size() == 1) return num;
    auto wrap = [](const std::string& s) {
      return s.find('+') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num) + "/" + wrap(poly_to_string(a.den));
  }
  std::string describe() const { return "funcfield:r=" + std::to_string(r_); }

  friend bool operator==(const FunctionField& a, const FunctionField& b) { return a.r_ == b.r_; }

 private:
  BinaryField F_;
  unsigned r_;
};

}  // namespace skewlab
