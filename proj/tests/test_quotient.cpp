#include <gtest/gtest.h>

#include <random>

#include "skewlab/ffexamples.hpp"
#include "skewlab/parse.hpp"
#include "skewlab/quotient.hpp"
#include "support.hpp"

namespace skewlab {
namespace {

using testing::f8;
using testing::FPoly;
using Ctx = QuotientContext<FiniteField>;

FPoly P(const FiniteField& L, std::string_view text) { return parse_skew(L, text); }

TEST(Reduce, Examples) {
  const auto& L = f8();
  const auto ctx = Ctx::finite(L, testing::y_minus_one(L));
  EXPECT_TRUE(ctx.reduce(ctx.Fxn()).is_zero());
  EXPECT_EQ(ctx.reduce(P(L, "x^3")), P(L, "1"));
  EXPECT_EQ(ctx.reduce(P(L, "x^4")), P(L, "x"));
}

TEST(Rank, Examples) {
  const auto& L = f8();
  const auto ctx = Ctx::finite(L, testing::y_minus_one(L));
  EXPECT_EQ(ctx.rank(P(L, "1")), 3u);
  EXPECT_EQ(ctx.rank(P(L, "x+1")), 2u);
  EXPECT_EQ(testing::linearized_rank(P(L, "x+1")), 2u);
  EXPECT_EQ(ctx.rank(FPoly(L)), 0u);
}

TEST(Rank, FunctionFieldDivisor) {
  const FFInstance inst(3);
  const auto ctx = QuotientContext<FunctionField>::from_divisor(inst.field(), inst.f());
  EXPECT_EQ(ctx.m(), 3u);
  EXPECT_EQ(ctx.ell(), 2u);
  EXPECT_EQ(ctx.rank(inst.f()), 2u);
  EXPECT_EQ(ctx.rank(SkewPoly<FunctionField>::constant(inst.field(), inst.field().one())), 3u);
}

TEST(Eigenring, LinearDivisorOverF8) {
  const auto& L = f8();
  const Ctx ctx(L, {L.one(), L.one()}, P(L, "x+1"), 1);
  const auto basis = ctx.eigenring_basis();
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].length(), 1u);
}

TEST(Eigenring, QuadraticDivisorOverF81) {
  const auto& L = testing::f81();
  const auto ctx = Ctx::finite(L, {L.one(), L.zero(), L.one()});
  EXPECT_EQ(ctx.s(), 2u);
  const auto basis = ctx.eigenring_basis();
  ASSERT_EQ(basis.size(), 2u);
  const auto& f = ctx.f();
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const auto prod = rem_right(a * b, f);
      EXPECT_TRUE(rem_right(f * prod, f).is_zero());
    }
}

TEST(Eigenring, FunctionFieldDimensionFour) {
  const FFInstance inst(3);
  const auto ctx = QuotientContext<FunctionField>::from_divisor(inst.field(), inst.f());
  EXPECT_EQ(ctx.eigenring_basis().size(), 4u);
}

TEST(MatrixImage, IdentityAndRank) {
  const auto& L = f8();
  const auto ctx = Ctx::finite(L, testing::y_minus_one(L));
  const MatrixRepresentation rep(ctx);
  const auto& E = rep.eigenfield();
  const auto I = rep.image(P(L, "1"));
  ASSERT_EQ(I.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(I[i][j], i == j ? E.one() : E.zero());
  EXPECT_EQ(rep.rank(P(L, "x+1")), 2u);
}

TEST(MatrixImage, WellDefinedOnResidues) {
  std::mt19937_64 rng(51);
  const auto& L = testing::f81();
  const auto ctx = Ctx::finite(L, {L.one(), L.zero(), L.one()});
  const MatrixRepresentation rep(ctx);
  for (int i = 0; i < 20; ++i) {
    const auto a = testing::random_poly(L, 7, rng), h = testing::random_poly(L, 3, rng);
    EXPECT_EQ(rep.image(a), rep.image(a + ctx.Fxn() * h));
    EXPECT_EQ(rep.image(a), rep.image(a + h * ctx.Fxn()));
  }
}

std::vector<std::pair<std::unique_ptr<FiniteField>, std::vector<std::uint32_t>>> grid_fields() {
  std::vector<std::pair<std::unique_ptr<FiniteField>, std::vector<std::uint32_t>>> out;
  for (unsigned p : {2u, 3u})
    for (unsigned n : {2u, 3u, 4u})
      for (unsigned s : {1u, 2u}) {
        // y - 1, or y^2 + y + 1 (p = 2) and y^2 + 1 (p = 3).
        std::vector<std::uint32_t> F = s == 1 ? std::vector<std::uint32_t>{p - 1, 1}
                                              : (p == 2 ? std::vector<std::uint32_t>{1, 1, 1}
                                                        : std::vector<std::uint32_t>{1, 0, 1});
        out.emplace_back(std::make_unique<FiniteField>(p, 1, n), F);
      }
  return out;
}

upoly::poly<FiniteField> central_from_ints(const FiniteField& L, const std::vector<std::uint32_t>& c) {
  upoly::poly<FiniteField> out;
  for (auto v : c) out.push_back(L.from_int(v));
  return out;
}

TEST(QuotientProperties, GcrdRankMatchesMatrixRank) {
  std::mt19937_64 rng(52);
  std::size_t total = 0;
  for (const auto& [Lp, Fc] : grid_fields()) {
    const auto& L = *Lp;
    const auto ctx = Ctx::finite(L, central_from_ints(L, Fc));
    const MatrixRepresentation rep(ctx);
    for (int i = 0; i < 60; ++i, ++total) {
      const auto a = testing::random_poly(L, ctx.length() - 1, rng);
      const auto r = ctx.rank(a);
      EXPECT_EQ(r, rep.rank(a));
      const bool full = r == ctx.m();
      EXPECT_EQ(full, gcrd(ctx.reduce(a), ctx.Fxn()).length() == 1 && !ctx.reduce(a).is_zero());
      if (ctx.s() == 1 && L.is_zero(L.add(ctx.F()[0], L.one()))) {
        EXPECT_EQ(r, testing::linearized_rank(ctx.reduce(a)));
      }
    }
  }
  EXPECT_GE(total, 500u);
}

// Every nonzero a of degree at most s k has rank at least m - k; equality
// forces N(a_0) / N(a_{sk}) = (-1)^{sk(n-1)} F_0^k.
void check_rank_lower_bound(const FiniteField& L, const upoly::poly<FiniteField>& F, std::size_t k) {
  const auto ctx = Ctx::finite(L, F);
  const std::size_t len = ctx.s() * k + 1;
  const std::uint64_t total = ipow(L.size(), static_cast<unsigned>(len));
  const auto sign = (ctx.s() * k * (L.n() - 1)) % 2 ? L.neg(L.one()) : L.one();
  const auto rhs = L.mul(sign, L.pow(ctx.F()[0], static_cast<long long>(k)));
  std::size_t equality_cases = 0;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<FiniteField::elem> c(len);
    std::uint64_t x = code;
    for (auto& v : c) {
      v = L.from_code(static_cast<std::uint32_t>(x % L.size()));
      x /= L.size();
    }
    const FPoly a(L, c);
    const auto r = ctx.rank(a);
    ASSERT_GE(r + k, ctx.m());
    if (r + k == ctx.m()) {
      ++equality_cases;
      ASSERT_FALSE(L.is_zero(c.front()));
      ASSERT_FALSE(L.is_zero(c.back()));
      EXPECT_EQ(L.div(L.norm(c.front()), L.norm(c.back())), rhs);
    }
  }
  EXPECT_GT(equality_cases, 0u);
}

TEST(QuotientProperties, RankLowerBoundExhaustive) {
  const FiniteField F8(2, 1, 3), F16(2, 1, 4), F27(3, 1, 3), F9(3, 1, 2);
  check_rank_lower_bound(F8, {F8.one(), F8.one()}, 1);
  check_rank_lower_bound(F8, {F8.one(), F8.one()}, 2);
  check_rank_lower_bound(F16, {F16.one(), F16.one()}, 2);
  check_rank_lower_bound(F27, {F27.neg(F27.one()), F27.one()}, 1);
  check_rank_lower_bound(F27, {F27.neg(F27.one()), F27.one()}, 2);
  check_rank_lower_bound(F27, {F27.one(), F27.one()}, 1);
  check_rank_lower_bound(F8, {F8.one(), F8.one(), F8.one()}, 1);
  check_rank_lower_bound(F9, {F9.one(), F9.zero(), F9.one()}, 1);
}

TEST(QuotientProperties, MatrixImageIsARingMap) {
  std::mt19937_64 rng(53);
  for (const auto& [Lp, Fc] : grid_fields()) {
    const auto& L = *Lp;
    const auto ctx = Ctx::finite(L, central_from_ints(L, Fc));
    const MatrixRepresentation rep(ctx);
    const auto& E = rep.eigenfield();
    for (int i = 0; i < 10; ++i) {
      const auto a = testing::random_poly(L, ctx.length() - 1, rng), b = testing::random_poly(L, ctx.length() - 1, rng);
      const auto A = rep.image(a), B = rep.image(b);
      auto sum = A;
      for (std::size_t r = 0; r < A.size(); ++r)
        for (std::size_t c = 0; c < A.size(); ++c) sum[r][c] = E.add(A[r][c], B[r][c]);
      EXPECT_EQ(rep.image(a + b), sum);
      EXPECT_EQ(rep.image(ctx.mul(a, b)), linalg::multiply(E, A, B));
    }
  }
}

TEST(QuotientContextErrors, Preconditions) {
  const auto& L = f8();
  EXPECT_THROW(Ctx::finite(L, {L.zero(), L.one()}), std::invalid_argument);
  EXPECT_THROW(Ctx::finite(L, {L.one(), L.zero(), L.one()}), std::invalid_argument);
  EXPECT_THROW(Ctx(L, testing::y_minus_one(L), P(L, "x"), 1), std::invalid_argument);
  EXPECT_THROW(Ctx(L, testing::y_minus_one(L), P(L, "x^2+1"), 1), std::invalid_argument);
}

}  // namespace
}  // namespace skewlab
