#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewlab {

// Raised for arithmetic on objects built over different field contexts.
class ContextMismatch : public std::invalid_argument {
 public:
  ContextMismatch() : std::invalid_argument("context mismatch") {}
};

// Raised when an exhaustive job would exceed the configured element budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Degree of a polynomial; the zero polynomial has degree minus infinity.
class Degree {
 public:
  Degree() = default;
  explicit Degree(std::size_t d) : value_(d) {}
  static Degree neg_inf() { return Degree(); }

  bool is_neg_inf() const { return !value_.has_value(); }
  std::size_t value() const {
    if (!value_) throw std::logic_error("degree of the zero polynomial");
    return *value_;
  }

  friend bool operator==(const Degree& a, const Degree& b) { return a.value_ == b.value_; }
  friend bool operator<(const Degree& a, const Degree& b) {
    if (!a.value_) return b.value_.has_value();
    if (!b.value_) return false;
    return *a.value_ < *b.value_;
  }
  friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
  friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
  friend bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }
  friend Degree operator+(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) return Degree();
    return Degree(*a.value_ + *b.value_);
  }

 private:
  std::optional<std::size_t> value_;
};

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("integer power overflow");
    r *= base;
  }
  return r;
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 r = 1 % mod, b = base % mod;
  while (exp) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Largest power of two dividing n (n > 0).
inline unsigned two_adic_valuation(std::uint64_t n) {
  unsigned v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

}  // namespace skewlab
