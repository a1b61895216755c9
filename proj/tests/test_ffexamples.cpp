#include <gtest/gtest.h>

#include <random>

#include "skewlab/ffexamples.hpp"

namespace skewlab {
namespace {

using FPolyT = SkewPoly<FunctionField>;

// sum_i a_i t^{2i} / t^ell
FunctionField::elem palindromic_value(const FunctionField& L, const std::vector<int>& a, unsigned ell) {
  bpoly::poly num(2 * ell + 1, 0), den(ell + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) num[2 * i] = static_cast<std::uint8_t>(a[i]);
  den[ell] = 1;
  return L.make(num, den);
}

TEST(VerifySigmaOrder, Examples) {
  EXPECT_TRUE(ff::verify_sigma_order(FFInstance(3)));
  EXPECT_EQ(ff::sigma_order(FunctionField(3)), 6u);
  EXPECT_TRUE(ff::verify_sigma_order(FFInstance(5)));
  EXPECT_EQ(ff::sigma_order(FunctionField(5)), 10u);
}

TEST(VerifySigmaOrder, TauAloneHasOrderR) { EXPECT_EQ(ff::tau_order(FunctionField(3)), 3u); }

TEST(VerifyFBound, Examples) {
  for (unsigned r : {3u, 5u}) EXPECT_TRUE(ff::verify_f_bound(FFInstance(r))) << "r = " << r;
}

TEST(VerifyFBound, PerturbedCofactorFails) {
  const FFInstance inst(3);
  const auto& L = inst.field();
  const auto good = ff::f_cofactor(inst);
  EXPECT_TRUE(ff::verify_f_bound(inst, good));
  EXPECT_FALSE(ff::verify_f_bound(inst, good + FPolyT::constant(L, L.one())));
  std::vector<FunctionField::elem> c;
  for (std::size_t i = 0; i < good.length(); ++i) c.push_back(good.coeff(i));
  c[0] = L.add(c[0], L.t());
  EXPECT_FALSE(ff::verify_f_bound(inst, FPolyT(L, c)));
}

TEST(VerifyGBound, Examples) {
  for (unsigned r : {3u, 5u}) {
    const FFInstance inst(r);
    EXPECT_TRUE(ff::verify_g_bound(inst)) << "r = " << r;
    EXPECT_TRUE(ff::verify_g_at_one(inst)) << "r = " << r;
  }
}

TEST(VerifyGBound, GAtOneHasDegreeR) {
  for (unsigned r : {3u, 5u}) {
    const FFInstance inst(r);
    const auto& L = inst.field();
    const auto v = upoly::eval(L, inst.G(), L.one());
    const auto p = ff::rewrite_in_sff(L, v, r);
    EXPECT_EQ(p.size(), r + 1);
    EXPECT_EQ(ff::substitute_sff(L, p), v);
  }
}

TEST(RewriteInSff, Examples) {
  const FunctionField L(3);
  EXPECT_EQ(ff::rewrite_in_sff(L, L.s_ff(), 1), (std::vector<int>{0, 1}));
  EXPECT_EQ(ff::sff_to_string(ff::rewrite_in_sff(L, L.s_ff(), 1)), "s");
  EXPECT_EQ(ff::rewrite_in_sff(L, L.make({1, 0, 1, 0, 1, 0, 1}, {0, 0, 0, 1}), 3), (std::vector<int>{0, 0, 0, 1}));
  EXPECT_EQ(ff::rewrite_in_sff(std::vector<int>{0, 0, 0, 0}, 3), std::vector<int>{});
  EXPECT_EQ(ff::sff_to_string({}), "0");
}

TEST(RewriteInSff, ShapeViolations) {
  const FunctionField L(3);
  EXPECT_THROW(ff::rewrite_in_sff(std::vector<int>{1, 0, 0}, 2), std::invalid_argument);
  EXPECT_THROW(ff::rewrite_in_sff(std::vector<int>{1, 0, 0, 0}, 3), std::invalid_argument);
  EXPECT_THROW(ff::rewrite_in_sff(std::vector<int>{1, 0}, 3), std::invalid_argument);
  EXPECT_THROW(ff::rewrite_in_sff(L, L.t(), 1), std::invalid_argument);
  EXPECT_THROW(ff::rewrite_in_sff(L, L.make({1, 1, 1}, {0, 1}), 1), std::invalid_argument);
}

TEST(VerifyGammaExample, Examples) {
  for (unsigned r : {3u, 5u}) {
    const FFInstance inst(r);
    EXPECT_TRUE(ff::verify_gamma_example(inst)) << "r = " << r;
    EXPECT_FALSE(ff::verify_gamma_example(inst, inst.field().s_ff())) << "r = " << r;
  }
}

TEST(FFInstance, RejectsBadR) {
  EXPECT_THROW(FFInstance(4), std::invalid_argument);
  EXPECT_THROW(FFInstance(1), std::invalid_argument);
  EXPECT_THROW(FFInstance(11), std::invalid_argument);
  EXPECT_NO_THROW(FFInstance(11, 11));
}

TEST(RunSuite, AllChecksPass) {
  for (unsigned r : {3u, 5u}) {
    const auto rows = ff::run_suite(r);
    ASSERT_EQ(rows.size(), ff::suite_check_names().size());
    for (const auto& row : rows) EXPECT_TRUE(row.pass) << "r = " << r << " " << row.check << " " << row.detail;
  }
  const auto one = ff::run_suite(3, std::string("g-bound"));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].check, "g-bound");
  EXPECT_THROW(ff::run_suite(3, std::string("nope")), std::invalid_argument);
}

// deg f / deg F = 2 while deg g / deg G = 1, for r = 3, 5, 7.
TEST(FFProperties, BoundRatiosDiffer) {
  for (unsigned r : {3u, 5u, 7u}) {
    const FFInstance inst(r);
    const auto bf = bound(inst.f()), bg = bound(inst.g());
    EXPECT_EQ(bf.F.size() - 1, 1u);
    EXPECT_EQ(bf.ell, 2u);
    EXPECT_EQ(bg.F.size() - 1, 2u);
    EXPECT_EQ(bg.ell, 1u);
    EXPECT_TRUE(ff::verify_char_polys(inst)) << "r = " << r;
    EXPECT_TRUE(ff::verify_sigma_order(inst)) << "r = " << r;
  }
}

TEST(FFProperties, RewriteRoundTrips) {
  std::mt19937_64 rng(81);
  const FunctionField L(3);
  for (unsigned ell = 1; ell <= 9; ell += 2) {
    for (int i = 0; i < 100; ++i) {
      std::vector<int> a(ell + 1, 0);
      for (unsigned j = 0; j <= ell / 2; ++j) a[j] = a[ell - j] = static_cast<int>(rng() & 1);
      const auto p = ff::rewrite_in_sff(a, ell);
      EXPECT_EQ(ff::substitute_sff(L, p), palindromic_value(L, a, ell));
      if (a[0] == 1) {
        EXPECT_EQ(p.size(), ell + 1);
      }
      EXPECT_EQ(ff::rewrite_in_sff(L, palindromic_value(L, a, ell), ell), p);
    }
  }
}

}  // namespace
}  // namespace skewlab
