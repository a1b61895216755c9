#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "codes.hpp"
#include "common.hpp"

namespace skewlab {

// Parameters as exponents of p: (size, left idealiser or nucleus, right
// idealiser or middle nucleus, centraliser or right nucleus, centre).
using ParamTuple = std::array<std::uint64_t, 5>;

struct NewnessEntry {
  std::string family;
  std::string verdict;  // "new", "known" or "undecided"
  std::string reason;
};

struct NewnessInput {
  Family family = Family::D;
  unsigned p = 3, e = 1, n = 4, s = 1, k = 1;
  bool eta_zero = false;
};

namespace detail {

inline std::uint64_t g2(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
inline std::uint64_t g3(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return std::gcd(std::gcd(a, b), c); }
inline std::uint64_t absdiff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

inline std::string tuple_string(unsigned p, const ParamTuple& t, bool has_centre = true) {
  std::ostringstream o;
  o << "(";
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) o << ",";
    if (i == 4 && !has_centre)
      o << "*";
    else
      o << p << "^" << t[i];
  }
  o << ")";
  return o.str();
}

inline bool matches(const ParamTuple& a, const ParamTuple& b, bool swap_middle, bool compare_centre = true) {
  ParamTuple c = b;
  if (swap_middle) std::swap(c[1], c[2]);
  for (std::size_t i = 0; i < (compare_centre ? 5u : 4u); ++i)
    if (a[i] != c[i]) return false;
  return true;
}

}  // namespace detail

// (q^{nsk}, q^t, q^t, q^s, q) for the D-family with n = 2t.
inline ParamTuple d_family_tuple(const NewnessInput& in) {
  const std::uint64_t e = in.e, t = in.n / 2;
  return {e * in.n * in.s * in.k, e * t, e * t, e * in.s, e};
}

// Comparison of a D-family code (k > 1) with the known MRD families in
// M_n(F_{q^s}) and their adjoints.
inline std::vector<NewnessEntry> compare_mrd_families(const NewnessInput& in) {
  using detail::g2;
  std::vector<NewnessEntry> out;
  const std::uint64_t e = in.e, n = in.n, s = in.s, k = in.k, t = n / 2;
  const ParamTuple D = d_family_tuple(in);

  // Families I, IV and V have an idealiser isomorphic to F_{q^{ns}}.
  const std::string ideal = "idealiser F_{q^" + std::to_string(n * s) + "} differs from F_{q^" + std::to_string(t) + "}";
  out.push_back({"Gabidulin", e * n * s == D[1] ? "undecided" : "new", ideal});
  out.push_back({"Csajbok-Marino-Polverino-Zullo", e * n * s == D[1] ? "undecided" : "new", ideal});
  out.push_back({"scattered-polynomial", e * n * s == D[1] ? "undecided" : "new", ideal});

  // AGTG: (p^{nkse}, p^{(nse,j)}, p^{(nse,kse-j)}, p^{se}, p^{(se,j)}), 0 <= j < ens.
  {
    std::optional<std::uint64_t> hit, ideal_hit;
    for (std::uint64_t j = 0; j < e * n * s; ++j) {
      const ParamTuple A{n * k * s * e, g2(n * s * e, j), g2(n * s * e, detail::absdiff(k * s * e, j)), s * e,
                         g2(s * e, j)};
      if (detail::matches(D, A, false) || detail::matches(D, A, true)) {
        hit = j;
        break;
      }
      if (!ideal_hit && A[1] == D[1] && A[2] == D[2]) ideal_hit = j;
    }
    if (hit) {
      out.push_back({"AGTG", "undecided", "parameters match for j = " + std::to_string(*hit)});
    } else if (ideal_hit) {
      out.push_back({"AGTG", "new",
                     "idealisers match for j = " + std::to_string(*ideal_hit) + " but the centre p^(se,j) differs"});
    } else {
      out.push_back({"AGTG", "new",
                     "no j in [0," + std::to_string(e * n * s) + ") has (nse,j) = (nse,kse-j) = et = " +
                         std::to_string(e * t) + "; this needs ks = (g2-g1)t with g2-g1 even, so n | sk"});
    }
  }

  // Trombetti-Zhou: (q^{nsk}, q^{st}, q^{st}, q^s, q^s).
  if (s == 1) {
    out.push_back({"Trombetti-Zhou", "known", "s = 1 gives a Trombetti-Zhou code"});
  } else {
    out.push_back({"Trombetti-Zhou", "new", "centre q^s = q^" + std::to_string(s) + " differs from q, forcing s = 1"});
  }

  // S-family: (p^{nske}, p^{(ne,h)}, p^{(ne,ske-h)}, p^{se}, p^{(e,h)}), 0 <= h < ne,
  // and (p^{nske}, p^{ne}, p^{ne}, p^{se}, p^e) when eta = 0.
  {
    std::optional<std::uint64_t> hit, ideal_hit;
    for (std::uint64_t h = 0; h < n * e; ++h) {
      const ParamTuple S{n * s * k * e, g2(n * e, h), g2(n * e, detail::absdiff(s * k * e, h)), s * e, g2(e, h)};
      if (detail::matches(D, S, false) || detail::matches(D, S, true)) {
        hit = h;
        break;
      }
      if (!ideal_hit && S[1] == D[1] && S[2] == D[2]) ideal_hit = h;
    }
    const ParamTuple S0{n * s * k * e, n * e, n * e, s * e, e};
    if (hit) {
      out.push_back({"S-family", "undecided", "parameters match for h = " + std::to_string(*hit)});
    } else if (detail::matches(D, S0, false)) {
      out.push_back({"S-family", "undecided", "parameters match the eta = 0 case"});
    } else if (ideal_hit) {
      out.push_back({"S-family", "new",
                     "idealisers match for h = " + std::to_string(*ideal_hit) + " but the centre p^(e,h) differs"});
    } else {
      out.push_back({"S-family", "new",
                     "no h in [0," + std::to_string(n * e) + ") has (ne,h) = (ne,ske-h) = te = " +
                         std::to_string(e * t) + "; this needs sk = (g-1)t with g-1 even, so n | sk"});
    }
  }
  return out;
}

// Comparison of the D-family semifield (k = 1) with known semifield families.
inline std::vector<NewnessEntry> compare_semifield_families(const NewnessInput& in) {
  using detail::g2;
  using detail::g3;
  std::vector<NewnessEntry> out;
  const std::uint64_t e = in.e, n = in.n, s = in.s, t = n / 2;
  // (order, N_l, N_m, N_r, Z) = (q^{2ts}, q^t, q^t, q^s, q)
  const ParamTuple D{2 * t * s * e, t * e, t * e, s * e, e};

  if (s == 1) out.push_back({"Hughes-Kleinfeld", "known", "Hughes-Kleinfeld dual"});

  // Pott-Zhou semifields have a nucleus equal to the centre.
  if (D[1] == D[4] || D[2] == D[4] || D[3] == D[4])
    out.push_back({"Pott-Zhou", "undecided", "a nucleus equals the centre"});
  else
    out.push_back({"Pott-Zhou", "new", "no nucleus equals the centre"});

  // Rank-two semifields are two-dimensional over a nucleus.
  if (D[0] == 2 * D[1] || D[0] == 2 * D[2] || D[0] == 2 * D[3])
    out.push_back({"rank-two", "undecided", "two-dimensional over a nucleus"});
  else
    out.push_back({"rank-two", "new", "not two-dimensional over any nucleus"});

  // S_{n,s,1}(eta, rho, F).
  {
    std::optional<std::uint64_t> hit;
    for (std::uint64_t h = 0; h < n * e && !hit; ++h) {
      const ParamTuple S{n * s * e, g2(n * e, h), g2(n * e, detail::absdiff(e * s, h)), e * s, g2(e, h)};
      if (detail::matches(D, S, false) || detail::matches(D, S, true)) hit = h;
    }
    const ParamTuple S0{n * s * e, e * n, e * n, e * s, e};
    if (hit)
      out.push_back({"S-family", "undecided", "parameters match for h = " + std::to_string(*hit)});
    else if (detail::matches(D, S0, false))
      out.push_back({"S-family", "undecided", "parameters match the eta = 0 case"});
    else
      out.push_back({"S-family", "new",
                     "no h in [0," + std::to_string(n * e) + ") has (ne,h) = (ne,se-h) = te = " + std::to_string(e * t)});
  }

  // Gologlu: (p^{2m}, p^{e'/2}, p^{e'/2}, p^{e'}, *) needs q^t = q^{s/2}, i.e. s = n.
  if (s == n)
    out.push_back({"Gologlu", "undecided", "s = n allows q^t = q^{s/2}"});
  else
    out.push_back({"Gologlu", "new", "q^t = q^{s/2} would force s = n"});

  // Unified construction: (p^{2m}, p^{(a,b,m)}, p^{(a,b,m)}, p^{(2a,m)}, *) with m = ets.
  {
    const std::uint64_t m = e * t * s;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> hit;
    for (std::uint64_t a = 0; a < m && !hit; ++a)
      for (std::uint64_t b = 0; b < m && !hit; ++b)
        if (g3(a, b, m) == e * t && g2(2 * a, m) == e * s) hit = std::make_pair(a, b);
    if (hit) {
      out.push_back({"Kolsch-Kuhn unified", "undecided",
                     "parameters match for a = " + std::to_string(hit->first) + ", b = " + std::to_string(hit->second)});
    } else if (s % 2 == 0 && s % n != 0) {
      out.push_back({"Kolsch-Kuhn unified", "new",
                     "t | a and (2a,m) = s give v_2(t) = v_2(s) = v_2(a)+1, contradicting v_2(t) <= v_2(a)"});
    } else {
      out.push_back({"Kolsch-Kuhn unified", "new", "no a, b with (a,b,m) = et and (2a,m) = es"});
    }
  }
  return out;
}

inline std::vector<NewnessEntry> newness_report(const NewnessInput& in) {
  if (in.family == Family::S)
    return {{"S-family", "known", in.eta_zero ? "eta = 0 gives a generalized Gabidulin code" : "member of the S-family"}};
  if (in.n % 2 != 0) throw std::invalid_argument("D-family needs n even");
  return in.k == 1 ? compare_semifield_families(in) : compare_mrd_families(in);
}

// "known" if some entry is known, "new" if every entry is new, otherwise "undecided".
inline std::string overall_verdict(const std::vector<NewnessEntry>& entries) {
  bool all_new = !entries.empty();
  for (const auto& x : entries) {
    if (x.verdict == "known") return "known";
    if (x.verdict != "new") all_new = false;
  }
  return all_new ? "new" : "undecided";
}

}  // namespace skewlab
