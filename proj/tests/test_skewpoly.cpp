#include <gtest/gtest.h>

#include <random>

#include "skewlab/bound.hpp"
#include "skewlab/ffexamples.hpp"
#include "skewlab/linalg.hpp"
#include "skewlab/parse.hpp"
#include "skewlab/skew_poly.hpp"
#include "support.hpp"

namespace skewlab {
namespace {

using testing::f4;
using testing::f8;
using testing::FPoly;

FPoly P(const FiniteField& L, std::string_view text) { return parse_skew(L, text); }

TEST(Mul, XTimesConstantTwists) {
  const auto& L = f4();
  EXPECT_EQ(P(L, "x") * P(L, "w"), P(L, "(w+1)*x"));
}

TEST(Mul, SchoolbookExpansionOverF4) {
  const auto& L = f4();
  const auto prod = P(L, "x+1") * P(L, "x+w");
  EXPECT_EQ(prod, P(L, "x^2+w*x+w"));
  EXPECT_EQ(prod, testing::naive_mul(P(L, "x+1"), P(L, "x+w")));
}

TEST(Mul, IdentityOnTheRight) {
  const auto& L = f8();
  const auto f = P(L, "w*x^2+x+w^2");
  EXPECT_EQ(f * FPoly::constant(L, L.one()), f);
}

TEST(RightDivmod, ExactDivision) {
  const auto& L = f4();
  const auto [q, r] = right_divmod(P(L, "x^2+1"), P(L, "x+1"));
  EXPECT_EQ(q, P(L, "x+1"));
  EXPECT_TRUE(r.is_zero());
}

TEST(RightDivmod, SmallerDividend) {
  const auto& L = f8();
  const auto f = P(L, "x+w"), g = P(L, "x^2+1");
  const auto [q, r] = right_divmod(f, g);
  EXPECT_TRUE(q.is_zero());
  EXPECT_EQ(r, f);
}

TEST(RightDivmod, CentralMultipleOfLinearFactor) {
  const auto& L = f8();
  const auto [q, r] = right_divmod(P(L, "x^3+1"), P(L, "x-w"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q * P(L, "x-w"), P(L, "x^3+1"));
}

TEST(RightDivmod, ZeroDivisorThrows) {
  const auto& L = f8();
  EXPECT_THROW(right_divmod(P(L, "x"), FPoly(L)), std::domain_error);
}

TEST(LeftDivmod, ExactDivision) {
  const auto& L = f4();
  const auto [q, r] = left_divmod(P(L, "x^2+1"), P(L, "x+1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(P(L, "x+1") * q, P(L, "x^2+1"));
}

TEST(LeftDivmod, ByOne) {
  const auto& L = f8();
  const auto f = P(L, "w*x^3+x+1");
  const auto [q, r] = left_divmod(f, FPoly::constant(L, L.one()));
  EXPECT_EQ(q, f);
  EXPECT_TRUE(r.is_zero());
}

TEST(LeftDivmod, FunctionFieldGDividesCentralBound) {
  const FFInstance inst(3);
  const auto& L = inst.field();
  EXPECT_EQ(inst.g(), parse_skew(L, "x^2+1/t"));
  const auto G = central_to_skew(L, inst.G());
  EXPECT_TRUE(left_divmod(G, inst.g()).second.is_zero());
  EXPECT_TRUE(right_divmod(G, inst.g()).second.is_zero());
}

TEST(Gcrd, WithZero) {
  const auto& L = f8();
  const auto f = P(L, "w*x^2+x+1");
  EXPECT_EQ(gcrd(f, FPoly(L)), f.monic());
}

TEST(Gcrd, Examples) {
  const auto& L = f8();
  EXPECT_EQ(gcrd(P(L, "x+1"), P(L, "x^3+1")), P(L, "x+1"));
  EXPECT_EQ(gcrd(P(L, "x"), P(L, "x^3+1")), P(L, "1"));
}

TEST(Lclm, Examples) {
  const auto& L = f8();
  const auto f = P(L, "w*x^2+x+1");
  EXPECT_EQ(lclm(f, f), f.monic());
  EXPECT_EQ(lclm(f, P(L, "1")), f.monic());
  const auto a = P(L, "x-w"), b = P(L, "x-w^2");
  const auto m = lclm(a, b);
  EXPECT_EQ(m.length(), 3u);
  EXPECT_TRUE(m.is_monic());
  EXPECT_TRUE(right_divides(a, m));
  EXPECT_TRUE(right_divides(b, m));
}

TEST(IsTwoSided, Examples) {
  const auto& L = f8();
  EXPECT_TRUE(is_two_sided(P(L, "x^3+1")));
  EXPECT_FALSE(is_two_sided(P(L, "x+1")));
  const FFInstance inst(3);
  EXPECT_TRUE(is_two_sided(central_to_skew(inst.field(), inst.F())));
}

TEST(CompanionAndAf, LinearOverF8) {
  const auto& L = f8();
  const auto f = P(L, "x-w");
  EXPECT_EQ(companion(f)[0][0], L.gen());
  EXPECT_EQ(companion_product(f)[0][0], L.one());
  EXPECT_TRUE(upoly::equal(L, bound(f).char_poly, testing::y_minus_one(L)));
  const auto g = P(L, "x-1");
  EXPECT_EQ(companion_product(g)[0][0], L.one());
  EXPECT_TRUE(upoly::equal(L, bound(g).char_poly, testing::y_minus_one(L)));
}

// A_f for f = x^2 + f_0 is diagonal with entries f_0^r, and its
// characteristic polynomial is F(y)^2.
TEST(CompanionAndAf, FunctionFieldCatalogue) {
  const FFInstance inst(3);
  const auto& L = inst.field();
  const auto A = companion_product(inst.f());
  const auto d = L.pow(inst.f0(), 3);
  EXPECT_EQ(A[0][0], d);
  EXPECT_EQ(A[1][1], d);
  EXPECT_TRUE(L.is_zero(A[0][1]));
  EXPECT_TRUE(L.is_zero(A[1][0]));
  const auto rep = bound(inst.f());
  EXPECT_TRUE(upoly::equal(L, rep.char_poly, upoly::pow(L, rep.F, 2)));
}

TEST(Bound, LinearOverF8) {
  const auto& L = f8();
  const auto rep = bound(P(L, "x-w"));
  EXPECT_TRUE(upoly::equal(L, rep.F, testing::y_minus_one(L)));
  EXPECT_EQ(rep.ell, 1u);
  EXPECT_EQ(rep.m, 3u);
}

TEST(Bound, FunctionFieldF) {
  for (unsigned r : {3u, 5u}) {
    const FFInstance inst(r);
    const auto& L = inst.field();
    const auto rep = bound(inst.f());
    const upoly::poly<FunctionField> expected{L.pow(L.make({1, 0, 1}, {1, 1, 1}), r), L.one()};
    EXPECT_TRUE(upoly::equal(L, rep.F, expected));
    EXPECT_EQ(rep.ell, 2u);
    EXPECT_EQ(rep.m, r);
  }
}

TEST(Bound, FunctionFieldG) {
  for (unsigned r : {3u, 5u}) {
    const FFInstance inst(r);
    const auto& L = inst.field();
    const auto rep = bound(inst.g());
    bpoly::poly num(2 * r + 1, 0), den(r + 1, 0);
    num[0] = num[2 * r] = 1;
    den[r] = 1;
    const upoly::poly<FunctionField> expected{L.one(), L.make(num, den), L.one()};
    EXPECT_TRUE(upoly::equal(L, rep.F, expected));
    EXPECT_EQ(rep.ell, 1u);
    EXPECT_EQ(rep.m, 2 * r);
  }
}

TEST(Bound, RejectsBadInput) {
  const auto& L = f8();
  EXPECT_THROW(bound(P(L, "x^2+x")), std::invalid_argument);
  EXPECT_THROW(bound(P(L, "w*x+1")), std::invalid_argument);
  EXPECT_THROW(bound(P(L, "w")), std::invalid_argument);
}

TEST(NormIdentity, Examples) {
  const auto& L = f8();
  const auto f = P(L, "x-w");
  EXPECT_TRUE(norm_identity_holds(f, bound(f)));
  const auto& M = testing::f81();
  const auto g = P(M, "x-1");
  EXPECT_TRUE(norm_identity_holds(g, bound(g)));
  const FFInstance inst(3);
  EXPECT_TRUE(norm_identity_holds(inst.f(), bound(inst.f())));
  EXPECT_TRUE(norm_identity_holds(inst.g(), bound(inst.g())));
}

template <class Field>
void check_ring_axioms(const Field& L, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    const auto a = testing::random_nonzero_poly(L, 4, rng), b = testing::random_nonzero_poly(L, 4, rng),
               c = testing::random_poly(L, 4, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((b + c) * a, b * a + c * a);
    EXPECT_EQ((a * b).length(), a.length() + b.length() - 1);
  }
}

TEST(SkewPolyProperties, RingAxioms) {
  check_ring_axioms(f8(), 21, 200);
  check_ring_axioms(testing::f81(), 22, 200);
  check_ring_axioms(FiniteField(3, 2, 2), 23, 100);
  check_ring_axioms(FunctionField(3), 24, 40);
}

TEST(SkewPolyProperties, MultiplicationMatchesTermwiseTwist) {
  std::mt19937_64 rng(25);
  for (const auto* L : {&f4(), &f8(), &testing::f81()}) {
    for (int i = 0; i < 200; ++i) {
      const auto a = testing::random_poly(*L, 5, rng), b = testing::random_poly(*L, 5, rng);
      EXPECT_EQ(a * b, testing::naive_mul(a, b));
    }
  }
}

template <class Field>
void check_division(const Field& L, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    const auto f = testing::random_poly(L, 6, rng), g = testing::random_nonzero_poly(L, 3, rng);
    const auto [q, r] = right_divmod(f, g);
    EXPECT_EQ(q * g + r, f);
    EXPECT_TRUE(r.is_zero() || r.length() < g.length());
    const auto [ql, rl] = left_divmod(f, g);
    EXPECT_EQ(g * ql + rl, f);
    EXPECT_TRUE(rl.is_zero() || rl.length() < g.length());
    const auto d = gcrd(f, g);
    EXPECT_TRUE(rem_right(f, d).is_zero());
    EXPECT_TRUE(rem_right(g, d).is_zero());
    EXPECT_EQ(d, gcrd(g, r));
  }
}

TEST(SkewPolyProperties, DivisionContracts) {
  check_division(f8(), 31, 300);
  check_division(testing::f81(), 32, 300);
  check_division(FunctionField(3), 33, 60);
}

TEST(SkewPolyProperties, LclmIsCommonLeftMultiple) {
  std::mt19937_64 rng(34);
  const auto& L = testing::f81();
  for (int i = 0; i < 60; ++i) {
    const auto f = testing::random_nonzero_poly(L, 3, rng), g = testing::random_nonzero_poly(L, 3, rng);
    const auto m = lclm(f, g);
    EXPECT_TRUE(right_divides(f, m));
    EXPECT_TRUE(right_divides(g, m));
    EXPECT_LE(m.length(), f.length() + g.length() - 1);
    // Degree additivity of lclm and gcrd.
    if (f.length() > 1 && g.length() > 1) {
      EXPECT_EQ((m.length() - 1) + (gcrd(f, g).length() - 1), (f.length() - 1) + (g.length() - 1));
    }
  }
}

TEST(BoundProperties, ContractOnRandomPolynomials) {
  std::mt19937_64 rng(41);
  for (const auto* L : {&f8(), &testing::f81(), &f4()}) {
    for (int i = 0; i < 60; ++i) {
      auto f = testing::random_monic(*L, 1 + i % 3, rng);
      if (L->is_zero(f.coeff(0))) continue;
      const auto rep = bound(f);
      const auto Fx = central_to_skew(*L, rep.F);
      EXPECT_TRUE(right_divmod(Fx, f).second.is_zero());
      EXPECT_TRUE(left_divmod(Fx, f).second.is_zero());
      EXPECT_LE(Fx.length() - 1, L->n() * (f.length() - 1));
      for (const auto& c : rep.char_poly) EXPECT_TRUE(L->in_base(c));
      EXPECT_TRUE(upoly::equal(*L, rep.F, testing::brute_force_bound(f)));
    }
  }
}

TEST(BoundProperties, IrreducibleHasEllOneAndDegreeOfF) {
  std::mt19937_64 rng(42);
  for (const auto* L : {&f8(), &testing::f81()}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (int i = 0; i < 10; ++i) {
        const auto f = testing::random_irreducible(*L, d, rng);
        const auto rep = bound(f);
        EXPECT_EQ(rep.ell, 1u);
        EXPECT_EQ(rep.s, d);
        EXPECT_TRUE(testing::k_irreducible_small(*L, rep.F));
        EXPECT_TRUE(is_irreducible_via_bound(f));
        EXPECT_TRUE(norm_identity_holds(f, rep));
      }
    }
  }
}

// The minimal polynomial of A_f over L agrees with the minimal polynomial of
// the same semilinear map written as a matrix over K = F_p.
TEST(BoundProperties, MinpolyOverLMatchesMinpolyOverK) {
  std::mt19937_64 rng(43);
  for (const auto* L : {&f8(), &testing::f81()}) {
    const unsigned N = L->prime_degree();
    for (int i = 0; i < 12; ++i) {
      const auto f = testing::random_irreducible(*L, 1 + i % 3, rng);
      const auto A = companion_product(f);
      const std::size_t h = A.size();
      // Each entry a becomes the N x N matrix of multiplication by a on the
      // basis 1, w, ..., w^{N-1}.
      linalg::mat<FiniteField> big(h * N, linalg::vec<FiniteField>(h * N, L->zero()));
      for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < h; ++c)
          for (unsigned j = 0; j < N; ++j) {
            const auto img = L->digits(L->mul(A[r][c], L->pow(L->gen(), j)));
            for (unsigned k = 0; k < N; ++k) big[r * N + k][c * N + j] = L->from_int(img[k]);
          }
      const auto mk = linalg::minpoly(*L, big);
      EXPECT_TRUE(upoly::equal(*L, mk, linalg::minpoly(*L, A)));
    }
  }
}

TEST(Irreducibility, ExhaustiveMatchesBoundCriterion) {
  std::mt19937_64 rng(44);
  const auto& L = testing::f81();
  for (int i = 0; i < 80; ++i) {
    auto f = testing::random_monic(L, 2 + i % 2, rng);
    if (L.is_zero(f.coeff(0))) continue;
    EXPECT_EQ(is_irreducible_via_bound(f), testing::irreducible_small(f));
    EXPECT_EQ(is_irreducible_exhaustive(f), testing::irreducible_small(f));
  }
}

TEST(Parse, CanonicalPrinting) {
  const auto& L = f8();
  const auto f = P(L, "x^2 + w*x + (w+1)");
  EXPECT_EQ(f.to_string(), "x^2+w*x+w+1");
  EXPECT_EQ(P(L, f.to_string()), f);
  EXPECT_EQ(P(L, "w^-1"), FPoly::constant(L, L.inv(L.gen())));
  EXPECT_THROW(P(L, "x+"), ParseError);
  EXPECT_THROW(P(L, "x*/2"), ParseError);
  EXPECT_THROW(P(L, "x/x"), ParseError);
  EXPECT_THROW(P(L, "t"), ParseError);
  try {
    P(L, "x+?");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Parse, FunctionFieldLiterals) {
  const FunctionField L(3);
  const auto f = parse_skew(L, "x^2+(t^2+1)/(t^2+t+1)");
  EXPECT_EQ(f.coeff(0), L.make({1, 0, 1}, {1, 1, 1}));
  EXPECT_EQ(parse_skew(L, f.to_string()), f);
  EXPECT_EQ(parse_element(L, "a^3"), L.pow(L.alpha(), 3));
}

}  // namespace
}  // namespace skewlab
