#include <random>

#include <gtest/gtest.h>

#include "bfl/errors.hpp"
#include "bfl/scalar.hpp"
#include "fixtures.hpp"

namespace bfl {
namespace {

using testing::F;
using testing::Q;

TEST(Scalar, PrimeFieldProduct) {
  const auto f5 = F(5);
  EXPECT_EQ(f5.from_int(3) * f5.from_int(4), f5.from_int(2));
  EXPECT_EQ((f5.from_int(3) * f5.from_int(4)).residue(), 2u);
}

TEST(Scalar, RationalCanonicalForm) {
  const auto half = Q().from_rational(mpq_class(2, 4));
  EXPECT_EQ(half, Q().from_rational(mpq_class(1, 2)));
  EXPECT_EQ(half.to_string(), "1/2");
  EXPECT_EQ(Q().from_rational(mpq_class(3, -6)).to_string(), "-1/2");
  EXPECT_EQ(Q().parse_scalar("6/4").to_string(), "3/2");
}

TEST(Scalar, InverseInF2) {
  const auto f2 = F(2);
  EXPECT_EQ(f2.one().inv(), f2.one());
}

TEST(Scalar, ResiduesAreReduced) {
  const auto f7 = F(7);
  EXPECT_EQ(f7.from_int(-1).residue(), 6u);
  EXPECT_EQ(f7.from_residue(23).residue(), 2u);
  EXPECT_EQ(f7.parse_scalar("10 mod 7"), f7.from_int(3));
  EXPECT_EQ(f7.from_int(3).to_string(), "3 mod 7");
}

TEST(Scalar, Errors) {
  EXPECT_THROW(F(4), ConfigError);
  EXPECT_THROW(F(1), ConfigError);
  EXPECT_THROW(F(0), ConfigError);
  EXPECT_THROW(Q().zero().inv(), DivisionByZero);
  EXPECT_THROW(F(3).zero().inv(), DivisionByZero);
  EXPECT_THROW(F(5).parse_scalar("1 mod 7"), ConfigError);
  EXPECT_THROW(Q().parse_scalar("1 mod 7"), ConfigError);
  EXPECT_THROW(Q().parse_scalar("x"), ConfigError);
  EXPECT_THROW(Q().parse_scalar("1/0"), DivisionByZero);
  EXPECT_THROW(Q().one() + F(5).one(), ShapeError);
  EXPECT_THROW(Q().one().residue(), ShapeError);
}

TEST(Ring, ParseAndPrint) {
  EXPECT_EQ(Ring::parse("Q"), Q());
  EXPECT_EQ(Ring::parse("Fp:5"), F(5));
  EXPECT_EQ(F(5).to_string(), "Fp:5");
  EXPECT_EQ(Q().to_string(), "Q");
  EXPECT_THROW(Ring::parse("Z"), ConfigError);
}

class ScalarFieldLaws : public ::testing::TestWithParam<Ring> {};

TEST_P(ScalarFieldLaws, RandomTriples) {
  const Ring ring = GetParam();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto a = testing::random_scalar(ring, rng);
    const auto b = testing::random_scalar(ring, rng);
    const auto c = testing::random_scalar(ring, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, ring.zero());
    EXPECT_EQ(a + (-a), ring.zero());
    EXPECT_EQ(a * ring.one(), a);
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inv()).is_one());
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, ScalarFieldLaws, ::testing::Values(Q(), F(2), F(5), F(2147483647)),
                         [](const auto& info) {
                           return info.param.is_rational() ? std::string("Q")
                                                           : "F" + std::to_string(info.param.modulus());
                         });

TEST(Scalar, LargePrimeNoOverflow) {
  const auto p = F(2147483647);
  const auto big = p.from_int(2147483646);  // -1
  EXPECT_TRUE((big * big).is_one());
  EXPECT_EQ((big + big).residue(), 2147483645u);
}

}  // namespace
}  // namespace bfl
