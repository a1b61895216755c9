#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "common.hpp"
#include "prime_field.hpp"

namespace skewlab {

// The tower F_{q^n} / F_q with q = p^e, stored as a single extension
// F_p[w]/(M) of degree N = e*n. Elements are integer codes whose base-p
// digits are the coordinates on 1, w, ..., w^{N-1}. The generator sigma is
// a -> a^{q^j} with gcd(j, n) = 1, and its fixed field is K = F_q.
class FiniteField {
 public:
  struct elem {
    std::uint32_t v = 0;
    friend bool operator==(elem a, elem b) { return a.v == b.v; }
    friend bool operator!=(elem a, elem b) { return a.v != b.v; }
    friend bool operator<(elem a, elem b) { return a.v < b.v; }
  };

  // The automorphism a -> a^{p^h}.
  struct aut {
    unsigned h = 0;
  };

  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 20;

  FiniteField(unsigned p, unsigned e, unsigned n, unsigned sigma_exp = 1,
              std::vector<std::uint32_t> modulus = {})
      : fp_(p), p_(p), e_(e), n_(n), N_(e * n), j_(sigma_exp % (n == 0 ? 1 : n)) {
    if (e == 0 || n == 0) throw std::invalid_argument("field degrees must be positive");
    if (std::gcd(j_, n_) != 1) throw std::invalid_argument("sigma exponent must be coprime to n");
    const std::uint64_t Q = ipow(p, N_);
    if (Q > kMaxSize) throw std::invalid_argument("field too large for table arithmetic");
    Q_ = static_cast<std::uint32_t>(Q);
    q_ = static_cast<std::uint32_t>(ipow(p, e_));
    if (modulus.empty()) {
      modulus_ = fp_poly::smallest_irreducible(N_, fp_);
    } else {
      for (auto& c : modulus) c %= p;
      fp_poly::trim(modulus);
      if (modulus.size() != N_ + 1 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree e*n");
      if (!fp_poly::is_irreducible(modulus, fp_)) throw std::invalid_argument("modulus is not irreducible");
      modulus_ = modulus;
    }
    pw_.resize(N_ + 1);
    pw_[0] = 1;
    for (unsigned i = 1; i <= N_; ++i) pw_[i] = pw_[i - 1] * p_;
    build_tables();
  }

  // Parameters.
  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned n() const { return n_; }
  unsigned prime_degree() const { return N_; }
  unsigned sigma_exp() const { return j_; }
  std::uint32_t size() const { return Q_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  const PrimeField& prime_field() const { return fp_; }
  bool is_finite() const { return true; }

  // Constants and conversions.
  elem zero() const { return {0}; }
  elem one() const { return {1}; }
  elem gen() const { return N_ == 1 ? from_int(-static_cast<long long>(modulus_[0])) : elem{p_}; }
  elem from_int(long long v) const { return {fp_.from_int(v)}; }
  elem from_code(std::uint32_t c) const {
    if (c >= Q_) throw std::out_of_range("element code out of range");
    return {c};
  }
  std::uint32_t code(elem a) const { return a.v; }

  std::vector<std::uint32_t> digits(elem a) const {
    std::vector<std::uint32_t> d(N_);
    std::uint32_t c = a.v;
    for (unsigned i = 0; i < N_; ++i) {
      d[i] = c % p_;
      c /= p_;
    }
    return d;
  }
  elem from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t c = 0;
    for (unsigned i = 0; i < N_ && i < d.size(); ++i) c += (d[i] % p_) * pw_[i];
    return {c};
  }

  // Arithmetic.
  bool is_zero(elem a) const { return a.v == 0; }
  bool eq(elem a, elem b) const { return a.v == b.v; }
  elem add(elem a, elem b) const {
    if (p_ == 2) return {a.v ^ b.v};
    if (!add_table_.empty()) return {add_table_[static_cast<std::size_t>(a.v) * Q_ + b.v]};
    std::uint32_t r = 0, x = a.v, y = b.v;
    for (unsigned i = 0; i < N_; ++i) {
      r += ((x % p_ + y % p_) % p_) * pw_[i];
      x /= p_;
      y /= p_;
    }
    return {r};
  }
  elem neg(elem a) const { return {neg_table_[a.v]}; }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
  elem mul(elem a, elem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return {exp_[log_[a.v] + log_[b.v]]};
  }
  elem inv(elem a) const {
    if (a.v == 0) throw std::domain_error("division by zero");
    return {exp_[(Q_ - 1 - log_[a.v]) % (Q_ - 1)]};
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }
  elem pow(elem a, long long k) const {
    if (a.v == 0) {
      if (k < 0) throw std::domain_error("division by zero");
      return k == 0 ? one() : zero();
    }
    const long long order = Q_ - 1;
    long long r = (static_cast<long long>(log_[a.v]) * (k % order)) % order;
    if (r < 0) r += order;
    return {exp_[r]};
  }

  // A fixed primitive element and discrete logarithms for nonzero elements.
  elem primitive() const { return {exp_[1 % (Q_ - 1 == 0 ? 1 : Q_ - 1)]}; }
  std::uint32_t log(elem a) const {
    if (a.v == 0) throw std::domain_error("logarithm of zero");
    return log_[a.v];
  }

  // Automorphisms.
  elem frobenius(elem a, unsigned h) const {
    if (a.v == 0) return a;
    const std::uint64_t k = powmod(p_, h % N_, Q_ - 1);
    return {exp_[static_cast<std::uint64_t>(log_[a.v]) * k % (Q_ - 1)]};
  }
  elem sigma(elem a, long long k = 1) const {
    long long r = k % static_cast<long long>(n_);
    if (r < 0) r += n_;
    return {sigma_tables_[static_cast<std::size_t>(r)][a.v]};
  }
  aut sigma_aut(long long k = 1) const {
    long long r = k % static_cast<long long>(n_);
    if (r < 0) r += n_;
    return {static_cast<unsigned>((static_cast<unsigned long long>(e_) * j_ * r) % N_)};
  }
  aut make_aut(unsigned h) const { return {h % N_}; }
  elem apply(const aut& r, elem a) const { return frobenius(a, r.h); }
  aut compose(const aut& a, const aut& b) const { return {(a.h + b.h) % N_}; }
  aut inverse(const aut& a) const { return {(N_ - a.h % N_) % N_}; }
  unsigned order(const aut& a) const { return N_ / std::gcd(N_, a.h % N_ == 0 ? N_ : a.h % N_); }
  // Order of the restriction of an automorphism to K = F_q.
  unsigned order_on_base(const aut& a) const { return e_ / std::gcd(e_, a.h % e_ == 0 ? e_ : a.h % e_); }
  bool fixes(const aut& r, elem a) const { return apply(r, a) == a; }

  // Fixed field of sigma.
  bool in_base(elem a) const { return frobenius(a, e_) == a; }
  elem norm(elem a) const {
    elem r = one();
    for (unsigned i = 0; i < n_; ++i) r = mul(r, sigma(a, i));
    return r;
  }
  // Product over the orbit of a under the group generated by r.
  elem norm_to_fixed(elem a, const aut& r) const {
    elem acc = one(), cur = a;
    for (unsigned i = 0; i < order(r); ++i) {
      acc = mul(acc, cur);
      cur = apply(r, cur);
    }
    return acc;
  }
  // Norm from K down to the fixed field of r restricted to K.
  elem norm_base_to_fixed(elem a, const aut& r) const {
    elem acc = one(), cur = a;
    for (unsigned i = 0; i < order_on_base(r); ++i) {
      acc = mul(acc, cur);
      cur = apply(r, cur);
    }
    return acc;
  }
  bool is_square_in_base(elem a) const {
    if (!in_base(a)) throw std::invalid_argument("element is not in the base field");
    if (a.v == 0 || p_ == 2) return true;
    return pow(a, (q_ - 1) / 2) == one();
  }

  // A K-basis of L: 1, w, ..., w^{n-1}.
  std::vector<elem> base_basis() const {
    std::vector<elem> out;
    elem g = w_power_base(), cur = one();
    for (unsigned i = 0; i < n_; ++i) {
      out.push_back(cur);
      cur = mul(cur, g);
    }
    return out;
  }

  std::vector<elem> elements() const {
    std::vector<elem> out(Q_);
    for (std::uint32_t c = 0; c < Q_; ++c) out[c] = {c};
    return out;
  }
  std::vector<elem> base_elements() const {
    std::vector<elem> out;
    for (std::uint32_t c = 0; c < Q_; ++c)
      if (in_base({c})) out.push_back({c});
    return out;
  }

  template <class Rng>
  elem random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> d(0, Q_ - 1);
    return {d(rng)};
  }

  std::string to_string(elem a) const {
    if (a.v == 0) return "0";
    const auto d = digits(a);
    std::string out;
    for (unsigned i = N_; i-- > 0;) {
      if (d[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(d[i]);
      } else {
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += i == 1 ? "w" : "w^" + std::to_string(i);
      }
    }
    return out;
  }
  std::string describe() const {
    return "finite:p=" + std::to_string(p_) + ",e=" + std::to_string(e_) + ",n=" + std::to_string(n_);
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.n_ == b.n_ && a.j_ == b.j_ && a.modulus_ == b.modulus_;
  }

 private:
  // w generates L over F_p, hence over K.
  elem w_power_base() const { return N_ == 1 ? one() : elem{p_}; }

  std::vector<std::uint32_t> slow_mul(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b) const {
    auto r = fp_poly::mod(fp_poly::mul(a, b, fp_), modulus_, fp_);
    r.resize(N_, 0);
    return r;
  }

  void build_tables() {
    // Find a primitive element by testing orders.
    const std::uint64_t order = Q_ - 1;
    const auto factors = prime_factors(order);
    std::vector<std::uint32_t> g;
    bool found = (order == 1);
    if (found) g = digits({1});
    for (std::uint32_t c = 2; c < Q_ && !found; ++c) {
      auto cand = digits({c});
      bool ok = true;
      for (auto l : factors) {
        auto pw = fp_poly::powmod(cand, order / l, modulus_, fp_);
        pw.resize(N_, 0);
        if (pw == digits({1})) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = cand;
        found = true;
      }
    }
    if (N_ == 1 && Q_ == 2) g = digits({1});
    exp_.assign(2 * order + 1, 0);
    log_.assign(Q_, 0);
    std::vector<std::uint32_t> cur = digits({1});
    for (std::uint64_t i = 0; i < order; ++i) {
      const auto c = from_digits(cur).v;
      exp_[i] = c;
      log_[c] = static_cast<std::uint32_t>(i);
      cur = slow_mul(cur, g);
    }
    for (std::uint64_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];

    neg_table_.resize(Q_);
    for (std::uint32_t c = 0; c < Q_; ++c) {
      auto d = digits({c});
      for (auto& x : d) x = (p_ - x) % p_;
      neg_table_[c] = from_digits(d).v;
    }
    if (p_ != 2 && Q_ <= 1024) {
      add_table_.resize(static_cast<std::size_t>(Q_) * Q_);
      for (std::uint32_t a = 0; a < Q_; ++a) {
        const auto da = digits({a});
        for (std::uint32_t b = 0; b < Q_; ++b) {
          const auto db = digits({b});
          std::uint32_t r = 0;
          for (unsigned i = 0; i < N_; ++i) r += ((da[i] + db[i]) % p_) * pw_[i];
          add_table_[static_cast<std::size_t>(a) * Q_ + b] = r;
        }
      }
    }
    sigma_tables_.assign(n_, std::vector<std::uint32_t>(Q_));
    for (unsigned k = 0; k < n_; ++k) {
      const unsigned h = static_cast<unsigned>((static_cast<unsigned long long>(e_) * j_ * k) % N_);
      for (std::uint32_t c = 0; c < Q_; ++c) sigma_tables_[k][c] = frobenius({c}, h).v;
    }
  }

  PrimeField fp_;
  unsigned p_, e_, n_, N_, j_;
  std::uint32_t Q_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pw_;
  std::vector<std::uint32_t> exp_, log_, neg_table_, add_table_;
  std::vector<std::vector<std::uint32_t>> sigma_tables_;
};

}  // namespace skewlab
