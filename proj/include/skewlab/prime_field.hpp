#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "common.hpp"

namespace skewlab {

// The prime field F_p, used for coordinate linear algebra.
class PrimeField {
 public:
  using elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p), inv_(p, 0) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    for (std::uint32_t a = 1; a < p; ++a)
      for (std::uint32_t b = 1; b < p; ++b)
        if (static_cast<std::uint64_t>(a) * b % p == 1) {
          inv_[a] = b;
          break;
        }
  }

  std::uint32_t p() const { return p_; }
  elem zero() const { return 0; }
  elem one() const { return 1 % p_; }
  elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<elem>(r < 0 ? r + p_ : r);
  }
  bool is_zero(elem a) const { return a == 0; }
  bool eq(elem a, elem b) const { return a == b; }
  elem add(elem a, elem b) const { return (a + b) % p_; }
  elem sub(elem a, elem b) const { return (a + p_ - b) % p_; }
  elem neg(elem a) const { return (p_ - a) % p_; }
  elem mul(elem a, elem b) const { return static_cast<elem>(static_cast<std::uint64_t>(a) * b % p_); }
  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return inv_[a];
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }
  std::string to_string(elem a) const { return std::to_string(a); }

 private:
  std::uint32_t p_;
  std::vector<elem> inv_;
};

// Dense polynomials over F_p with ascending coefficients, used to build
// extension fields.
namespace fp_poly {

using poly = std::vector<std::uint32_t>;

inline void trim(poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline poly mod(poly a, const poly& m, const PrimeField& F) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const auto lead_inv = F.inv(m.back());
  while (a.size() > dm) {
    const auto c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    trim(a);
  }
  return a;
}

inline poly mul(const poly& a, const poly& b, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

inline poly sub(poly a, const poly& b, const PrimeField& F) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline poly gcd(poly a, poly b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    poly r = mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline poly powmod(poly base, std::uint64_t e, const poly& m, const PrimeField& F) {
  poly r{1};
  base = mod(base, m, F);
  while (e) {
    if (e & 1) r = mod(mul(r, base, F), m, F);
    base = mod(mul(base, base, F), m, F);
    e >>= 1;
  }
  return r;
}

// Ben-Or irreducibility test for a monic polynomial of positive degree.
inline bool is_irreducible(const poly& m, const PrimeField& F) {
  const std::size_t d = m.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  poly xp{0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    xp = powmod(xp, F.p(), m, F);
    poly g = gcd(m, sub(xp, poly{0, 1}, F), F);
    if (g.size() != 1) return false;
  }
  return true;
}

// Smallest monic irreducible polynomial of the given degree, ordering
// candidates by the integer whose base-p digits are c_0, c_1, ..., c_{d-1}.
inline poly smallest_irreducible(std::size_t degree, const PrimeField& F) {
  const std::uint64_t count = ipow(F.p(), static_cast<unsigned>(degree));
  for (std::uint64_t code = 0; code < count; ++code) {
    poly m(degree + 1, 0);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < degree; ++i) {
      m[i] = static_cast<std::uint32_t>(c % F.p());
      c /= F.p();
    }
    m[degree] = 1;
    if (is_irreducible(m, F)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace fp_poly

}  // namespace skewlab
