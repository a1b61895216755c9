#include <gtest/gtest.h>

#include <random>

#include "skewlab/finite_field.hpp"
#include "skewlab/function_field.hpp"
#include "support.hpp"

namespace skewlab {
namespace {

using testing::f4;
using testing::f8;

TEST(ApplyAut, FrobeniusOfRootOverF4) {
  const auto& L = f4();
  const auto w = L.gen();
  EXPECT_EQ(L.sigma(w), L.add(w, L.one()));
}

TEST(ApplyAut, SigmaInvertsT) {
  const FunctionField L(3);
  EXPECT_EQ(L.sigma(L.t()), L.inv(L.t()));
}

TEST(ApplyAut, SigmaFixesCatalogueConstant) {
  for (unsigned r : {3u, 5u}) {
    const FunctionField L(r);
    const auto a = L.make({1, 0, 1}, {1, 1, 1});
    EXPECT_EQ(L.sigma(a), a) << "r = " << r;
  }
}

TEST(NormToFixed, RootOverF8IsOne) {
  const auto& L = f8();
  EXPECT_EQ(L.norm(L.gen()), L.one());
  EXPECT_EQ(L.norm(L.gen()), testing::norm_by_power(L, L.gen()));
}

TEST(NormToFixed, NormOfOne) {
  EXPECT_EQ(testing::f81().norm(testing::f81().one()), testing::f81().one());
  const FunctionField L(3);
  EXPECT_EQ(L.norm(L.one()), L.one());
}

TEST(NormToFixed, OnePlusTInFunctionField) {
  for (unsigned r : {3u, 5u}) {
    const FunctionField L(r);
    const auto g = L.add(L.one(), L.t());
    const auto expected = L.div(L.pow(g, 2 * r), L.pow(L.t(), r));
    EXPECT_EQ(L.norm(g), expected) << "r = " << r;
  }
}

TEST(IsSquareInBase, TwoInF3IsNotASquare) {
  const FiniteField L(3, 1, 2);
  EXPECT_FALSE(L.is_square_in_base(L.from_int(2)));
  EXPECT_TRUE(L.is_square_in_base(L.one()));
}

TEST(IsSquareInBase, FunctionFieldNormOfOnePlusT) {
  for (unsigned r : {3u, 5u, 7u}) {
    const FunctionField L(r);
    EXPECT_TRUE(L.is_square_in_base(L.one()));
    const auto n = L.div(L.pow(L.add(L.one(), L.t()), 2 * r), L.pow(L.t(), r));
    ASSERT_TRUE(L.in_base(n));
    EXPECT_FALSE(L.is_square_in_base(n)) << "r = " << r;
  }
}

TEST(IsSquareInBase, RejectsElementsOutsideBase) {
  const FiniteField L(3, 1, 2);
  EXPECT_THROW(L.is_square_in_base(L.gen()), std::invalid_argument);
}

TEST(InFixedField, Examples) {
  const FunctionField K(3);
  EXPECT_TRUE(K.in_base(K.s_ff()));
  EXPECT_EQ(K.s_ff(), K.add(K.t(), K.inv(K.t())));
  EXPECT_FALSE(K.in_base(K.t()));
  const auto& L = f8();
  EXPECT_FALSE(L.fixes(L.sigma_aut(1), L.gen()));
  EXPECT_TRUE(L.fixes(L.sigma_aut(1), L.one()));
}

TEST(FiniteFieldProperties, SigmaHasOrderExactlyN) {
  const std::vector<FiniteField> fields{FiniteField(2, 1, 2), FiniteField(2, 1, 3), FiniteField(3, 1, 2),
                                        FiniteField(3, 1, 4), FiniteField(2, 2, 3), FiniteField(3, 1, 4, 3),
                                        FiniteField(5, 1, 3)};
  for (const auto& L : fields) {
    const auto g = L.primitive();
    for (unsigned d = 1; d < L.n(); ++d) EXPECT_NE(L.sigma(g, d), g) << "n = " << L.n() << ", d = " << d;
    EXPECT_EQ(L.sigma(g, L.n()), g);
    for (const auto a : L.base_elements()) EXPECT_EQ(L.sigma(a), a);
    EXPECT_EQ(L.base_elements().size(), L.q());
  }
}

TEST(FiniteFieldProperties, NormIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (const auto* L : {&f4(), &f8(), &testing::f81()}) {
    for (int i = 0; i < 200; ++i) {
      const auto a = L->random(rng), b = L->random(rng);
      EXPECT_EQ(L->norm(L->mul(a, b)), L->mul(L->norm(a), L->norm(b)));
      EXPECT_EQ(L->norm(a), testing::norm_by_power(*L, a));
    }
  }
}

TEST(FiniteFieldProperties, AutomorphismsAreRingMaps) {
  std::mt19937_64 rng(12);
  const FiniteField L(3, 2, 3);
  for (unsigned h = 0; h < L.prime_degree(); ++h) {
    const auto r = L.make_aut(h);
    for (int i = 0; i < 100; ++i) {
      const auto a = L.random(rng), b = L.random(rng);
      EXPECT_EQ(L.apply(r, L.add(a, b)), L.add(L.apply(r, a), L.apply(r, b)));
      EXPECT_EQ(L.apply(r, L.mul(a, b)), L.mul(L.apply(r, a), L.apply(r, b)));
    }
  }
}

TEST(FiniteFieldProperties, FieldAxiomsOnSamples) {
  std::mt19937_64 rng(13);
  const auto& L = testing::f81();
  for (int i = 0; i < 300; ++i) {
    const auto a = L.random(rng), b = L.random(rng), c = L.random(rng);
    EXPECT_EQ(L.mul(a, L.add(b, c)), L.add(L.mul(a, b), L.mul(a, c)));
    EXPECT_EQ(L.mul(L.mul(a, b), c), L.mul(a, L.mul(b, c)));
    EXPECT_EQ(L.add(a, L.neg(a)), L.zero());
    if (!L.is_zero(a)) {
      EXPECT_EQ(L.mul(a, L.inv(a)), L.one());
    }
  }
}

TEST(FunctionFieldProperties, FieldAxiomsOnSamples) {
  std::mt19937_64 rng(14);
  const FunctionField L(3);
  for (int i = 0; i < 200; ++i) {
    const auto a = L.random(rng), b = L.random(rng), c = L.random(rng);
    EXPECT_EQ(L.mul(a, L.add(b, c)), L.add(L.mul(a, b), L.mul(a, c)));
    EXPECT_EQ(L.mul(L.mul(a, b), c), L.mul(a, L.mul(b, c)));
    EXPECT_EQ(L.add(L.add(a, b), c), L.add(a, L.add(b, c)));
    EXPECT_EQ(L.sub(L.add(a, b), b), a);
    if (!L.is_zero(a)) {
      EXPECT_EQ(L.mul(a, L.inv(a)), L.one());
    }
  }
}

TEST(FunctionFieldProperties, SigmaSquaredIsTauSquared) {
  std::mt19937_64 rng(15);
  for (unsigned r : {3u, 5u}) {
    const FunctionField L(r);
    for (int i = 0; i < 100; ++i) {
      const auto a = L.random(rng);
      EXPECT_EQ(L.sigma(L.sigma(a)), L.tau(a, 2));
    }
  }
}

TEST(FunctionFieldProperties, SigmaIsARingMapOfOrderTwoR) {
  std::mt19937_64 rng(16);
  for (unsigned r : {3u, 5u}) {
    const FunctionField L(r);
    for (int i = 0; i < 100; ++i) {
      const auto a = L.random(rng), b = L.random(rng);
      EXPECT_EQ(L.sigma(L.add(a, b)), L.add(L.sigma(a), L.sigma(b)));
      EXPECT_EQ(L.sigma(L.mul(a, b)), L.mul(L.sigma(a), L.sigma(b)));
      EXPECT_EQ(L.sigma(a, 2 * r), a);
    }
    EXPECT_NE(L.sigma(L.t(), r), L.t());
    EXPECT_NE(L.sigma(L.alpha(), 2), L.alpha());
  }
}

TEST(FunctionFieldProperties, ReducedFractionsAreCanonical) {
  const FunctionField L(3);
  const auto a = L.make({1, 0, 1}, {1, 1});  // (t^2+1)/(t+1) = t+1
  EXPECT_EQ(a, L.add(L.t(), L.one()));
  EXPECT_THROW(L.inv(L.zero()), std::domain_error);
}

}  // namespace
}  // namespace skewlab
