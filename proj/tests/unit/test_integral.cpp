#include <gtest/gtest.h>

#include "bfl/errors.hpp"
#include "bfl/integral.hpp"
#include "fixtures.hpp"

namespace bfl {
namespace {

using testing::basis;
using testing::F;
using testing::mi;
using testing::NamedAlgebra;
using testing::Q;

// Functional 1 -> 0 with the given values on basis elements.
TensorMap functional(const Ring& r, std::size_t n, const std::vector<int>& values) {
  std::vector<TensorMap::Entry> e;
  for (std::size_t i = 0; i < values.size(); ++i) e.push_back({0, i, r.from_int(values[i])});
  return TensorMap::from_entries(r, n, 1, 0, std::move(e));
}

TEST(Integral, GroupAlgebraElementIsSumOfGroup) {
  EXPECT_EQ(find_integral_element(build_group_algebra(Q(), {2})),
            add(basis(Q(), 2, {0}), basis(Q(), 2, {1})));
  EXPECT_EQ(find_integral_element(build_group_algebra(Q(), {3})),
            add(add(basis(Q(), 3, {0}), basis(Q(), 3, {1})), basis(Q(), 3, {2})));
}

TEST(Integral, TruncatedElementIsX) {
  EXPECT_EQ(find_integral_element(build_truncated_polynomial(F(2), 2, 1, 1)), basis(F(2), 2, {1}));
}

TEST(Integral, Functionals) {
  EXPECT_EQ(find_integral_functional(build_group_algebra(Q(), {2})), functional(Q(), 2, {1, 0}));
  EXPECT_EQ(find_integral_functional(build_truncated_polynomial(F(2), 2, 1, 1)),
            functional(F(2), 2, {0, 1}));
  EXPECT_EQ(find_integral_functional(build_group_algebra(Q(), {2, 2})), functional(Q(), 4, {1, 0, 0, 0}));
}

TEST(Integral, GroupAlgebraCupCap) {
  const auto h = build_group_algebra(Q(), {2});
  const auto p = normalized_pairing(h);
  EXPECT_TRUE(p.c.is_one());
  // cup(x⊗y) = δ_{x,y}; cap(1) = e⊗e + g⊗g.
  const auto cup = TensorMap::from_entries(Q(), 2, 2, 0, {{0, 0, Q().one()}, {0, 3, Q().one()}});
  const auto cap = TensorMap::from_entries(Q(), 2, 0, 2, {{0, 0, Q().one()}, {3, 0, Q().one()}});
  EXPECT_EQ(p.cc.cup, cup);
  EXPECT_EQ(p.cc.cap, cap);
}

TEST(Integral, TruncatedCupCap) {
  const auto r = F(2);
  const auto p = normalized_pairing(build_truncated_polynomial(r, 2, 1, 1));
  // cup(a+bX ⊗ c+dX) = ad + bc; cap(1) = 1⊗X + X⊗1.
  const auto cup = TensorMap::from_entries(r, 2, 2, 0, {{0, 1, r.one()}, {0, 2, r.one()}});
  const auto cap = TensorMap::from_entries(r, 2, 0, 2, {{1, 0, r.one()}, {2, 0, r.one()}});
  EXPECT_EQ(p.cc.cup, cup);
  EXPECT_EQ(p.cc.cap, cap);
  EXPECT_TRUE(check_switchback(p.cc));
}

TEST(Integral, TrivialAlgebra) {
  const auto h = build_group_algebra(Q(), {1});
  const auto p = normalized_pairing(h);
  EXPECT_EQ(p.cc.cup, TensorMap::from_entries(Q(), 1, 2, 0, {{0, 0, Q().one()}}));
  EXPECT_EQ(p.cc.cap, TensorMap::from_entries(Q(), 1, 0, 2, {{0, 0, Q().one()}}));
}

TEST(Integral, NormalizationRescalesLambdaOnly) {
  // k[Z3] over F5: Λ = e+g+g², λ = δ_e, c = 1.
  const auto h = build_group_algebra(F(5), {3});
  const auto p = normalized_pairing(h);
  EXPECT_TRUE(p.c.is_one());
  EXPECT_EQ(p.integrals.lambda, find_integral_functional(h));

  // Raw λ scaled by 2 gives c = 2; Λ absorbs 2⁻¹ = 3.
  auto pair = find_integrals(h);
  pair.lambda = scale(pair.lambda, F(5).from_int(2));
  const auto q = build_cupcap(h, pair);
  EXPECT_EQ(q.c, F(5).from_int(2));
  EXPECT_EQ(q.integrals.normalization, F(5).from_int(3));
  EXPECT_EQ(q.integrals.Lambda, scale(find_integral_element(h), F(5).from_int(3)));
  EXPECT_TRUE(check_switchback(q.cc));
}

class EveryAlgebra : public ::testing::TestWithParam<NamedAlgebra> {};

TEST_P(EveryAlgebra, IntegralsAreTwoSided) {
  const auto& h = GetParam().h;
  const auto pair = find_integrals(h);
  EXPECT_TRUE(is_left_integral(h, pair.Lambda));
  EXPECT_TRUE(is_right_integral(h, pair.Lambda));
  EXPECT_TRUE(is_left_functional(h, pair.lambda));
  EXPECT_TRUE(is_right_functional(h, pair.lambda));
  EXPECT_FALSE(pair.Lambda.is_zero());
  EXPECT_FALSE(pair.lambda.is_zero());
}

TEST_P(EveryAlgebra, NormalizedPairingSatisfiesSwitchback) {
  const auto& h = GetParam().h;
  const auto p = normalized_pairing(h);
  EXPECT_TRUE(check_switchback(p.cc));
  EXPECT_TRUE(is_nondegenerate(p.cc.cup));
  EXPECT_EQ(p.cc.cap, compose(p.integrals.Lambda, h.delta()));
  EXPECT_EQ(p.cc.cup, compose(tensor(TensorMap::identity(h.ring(), h.rank(), 1), h.antipode()),
                              compose(h.mu(), p.integrals.lambda)));
}

TEST_P(EveryAlgebra, RescalingInvariants) {
  const auto& h = GetParam().h;
  const auto base = normalized_pairing(h);
  const auto u = h.ring().from_int(h.ring().is_rational() ? 7 : h.ring().characteristic() == 2 ? 1 : 2);
  ASSERT_FALSE(u.is_zero());

  auto pair = find_integrals(h);
  pair.Lambda = scale(pair.Lambda, u);
  const auto scaled_element = build_cupcap(h, pair);
  EXPECT_EQ(scaled_element.cc.cup, base.cc.cup);
  EXPECT_EQ(scaled_element.cc.cap, base.cc.cap);

  pair = find_integrals(h);
  pair.lambda = scale(pair.lambda, u);
  const auto scaled_functional = build_cupcap(h, pair);
  EXPECT_EQ(scaled_functional.cc.cup, scale(base.cc.cup, u));
  EXPECT_EQ(scaled_functional.cc.cap, scale(base.cc.cap, u.inv()));
  EXPECT_TRUE(check_switchback(scaled_functional.cc));
}

INSTANTIATE_TEST_SUITE_P(Acceptance, EveryAlgebra, ::testing::ValuesIn(testing::acceptance_algebras()),
                         testing::algebra_name);

TEST(Integral, Errors) {
  const auto h = build_group_algebra(Q(), {2});
  // μ = 0 leaves no integral element; Δ = 0 leaves every functional.
  EXPECT_THROW(find_integral_element(h.with(HopfAlgebra::Part::Mu, TensorMap(Q(), 2, 2, 1))),
               IntegralRankError);
  try {
    find_integral_functional(h.with(HopfAlgebra::Part::Delta, TensorMap(Q(), 2, 1, 2)));
    FAIL() << "expected IntegralRankError";
  } catch (const IntegralRankError& e) {
    EXPECT_NE(e.rank(), 1u);
  }

  auto pair = find_integrals(h);
  pair.lambda = TensorMap(Q(), 2, 1, 0);
  EXPECT_THROW(build_cupcap(h, pair), DegeneratePairingError);

  pair = find_integrals(h);
  pair.Lambda = basis(Q(), 2, {0});
  EXPECT_THROW(build_cupcap(h, pair), SwitchbackError);

  CupCap broken{TensorMap(Q(), 2, 2, 0), TensorMap(Q(), 2, 0, 2)};
  EXPECT_FALSE(check_switchback(broken));
  EXPECT_FALSE(is_nondegenerate(broken.cup));
}

}  // namespace
}  // namespace bfl
