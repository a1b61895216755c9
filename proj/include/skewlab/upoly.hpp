#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "common.hpp"

namespace skewlab {

// Commutative polynomials in y with ascending coefficients over a field
// context F (any type with the usual zero/one/add/sub/mul/inv members).
namespace upoly {

template <class F>
using poly = std::vector<typename F::elem>;

template <class F>
void trim(const F& K, poly<F>& a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

template <class F>
Degree degree(const F& K, poly<F> a) {
  trim(K, a);
  return a.empty() ? Degree::neg_inf() : Degree(a.size() - 1);
}

template <class F>
poly<F> add(const F& K, poly<F> a, const poly<F>& b) {
  if (a.size() < b.size()) a.resize(b.size(), K.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = K.add(a[i], b[i]);
  trim(K, a);
  return a;
}

template <class F>
poly<F> sub(const F& K, poly<F> a, const poly<F>& b) {
  if (a.size() < b.size()) a.resize(b.size(), K.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = K.sub(a[i], b[i]);
  trim(K, a);
  return a;
}

template <class F>
poly<F> scale(const F& K, poly<F> a, const typename F::elem& c) {
  for (auto& x : a) x = K.mul(c, x);
  trim(K, a);
  return a;
}

template <class F>
poly<F> mul(const F& K, const poly<F>& a, const poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  poly<F> r(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (K.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
  trim(K, r);
  return r;
}

template <class F>
void divmod(const F& K, const poly<F>& a, poly<F> b, poly<F>& q, poly<F>& r) {
  trim(K, b);
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  r = a;
  trim(K, r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, K.zero());
  const auto li = K.inv(b.back());
  while (r.size() >= b.size()) {
    const auto c = K.mul(r.back(), li);
    const std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = K.sub(r[shift + i], K.mul(c, b[i]));
    r.pop_back();
    trim(K, r);
  }
  trim(K, q);
}

template <class F>
poly<F> mod(const F& K, const poly<F>& a, const poly<F>& b) {
  poly<F> q, r;
  divmod(K, a, b, q, r);
  return r;
}

template <class F>
poly<F> monic(const F& K, poly<F> a) {
  trim(K, a);
  if (a.empty()) return a;
  return scale(K, a, K.inv(a.back()));
}

template <class F>
poly<F> gcd(const F& K, poly<F> a, poly<F> b) {
  trim(K, a);
  trim(K, b);
  while (!b.empty()) {
    poly<F> r = mod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(K, a);
}

// Inverse of a modulo m, assuming gcd(a, m) = 1.
template <class F>
poly<F> inverse_mod(const F& K, const poly<F>& a, const poly<F>& m) {
  poly<F> r0 = m, r1 = mod(K, a, m), s0, s1{K.one()};
  trim(K, r1);
  while (!r1.empty()) {
    poly<F> q, r;
    divmod(K, r0, r1, q, r);
    poly<F> s2 = sub(K, s0, mul(K, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::domain_error("polynomial is not invertible modulo m");
  return mod(K, scale(K, s0, K.inv(r0[0])), m);
}

template <class F>
poly<F> pow(const F& K, poly<F> a, unsigned e) {
  poly<F> r{K.one()};
  while (e) {
    if (e & 1) r = mul(K, r, a);
    a = mul(K, a, a);
    e >>= 1;
  }
  return r;
}

template <class F>
typename F::elem eval(const F& K, const poly<F>& a, const typename F::elem& x) {
  auto r = K.zero();
  for (std::size_t i = a.size(); i-- > 0;) r = K.add(K.mul(r, x), a[i]);
  return r;
}

template <class F>
bool equal(const F& K, poly<F> a, poly<F> b) {
  trim(K, a);
  trim(K, b);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!K.eq(a[i], b[i])) return false;
  return true;
}

// Renders a polynomial in the given variable, descending powers.
template <class F>
std::string to_string(const F& K, poly<F> a, const std::string& var = "y") {
  trim(K, a);
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (K.is_zero(a[i])) continue;
    if (!out.empty()) out += "+";
    const std::string c = K.to_string(a[i]);
    if (i == 0) {
      out += c;
      continue;
    }
    if (!K.eq(a[i], K.one())) out += (c.find('+') != std::string::npos ? "(" + c + ")" : c) + "*";
    out += i == 1 ? var : var + "^" + std::to_string(i);
  }
  return out;
}

// Irreducibility over a finite base field given the list of its elements,
// by trial division with every monic polynomial of degree at most deg/2.
template <class F>
bool is_irreducible_by_trial(const F& K, poly<F> a, const std::vector<typename F::elem>& base) {
  trim(K, a);
  if (a.size() < 2) return false;
  const std::size_t d = a.size() - 1;
  if (d == 1) return true;
  const std::size_t b = base.size();
  for (std::size_t k = 1; k <= d / 2; ++k) {
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      poly<F> c(k + 1, K.zero());
      for (std::size_t i = 0; i < k; ++i) c[i] = base[idx[i]];
      c[k] = K.one();
      if (mod(K, a, c).empty()) return false;
      std::size_t pos = 0;
      while (pos < k && ++idx[pos] == b) idx[pos++] = 0;
      if (pos == k) break;
    }
  }
  return true;
}

}  // namespace upoly

}  // namespace skewlab
