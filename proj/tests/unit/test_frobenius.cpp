#include <gtest/gtest.h>

#include "bfl/errors.hpp"
#include "bfl/frobenius.hpp"
#include "fixtures.hpp"

namespace bfl {
namespace {

using testing::basis;
using testing::F;
using testing::mi;
using testing::NamedAlgebra;
using testing::Q;

using U = std::uint32_t;

bool all_equal(const CheckList& checks) {
  for (const auto& [name, c] : checks) {
    if (!c.equal) return false;
  }
  return true;
}

TEST(Frobenius, GroupAlgebraMu2IsKroneckerPairing) {
  const auto f = build_frobenius(build_group_algebra(Q(), {2}));
  for (U x = 0; x < 2; ++x)
    for (U y = 0; y < 2; ++y)
      for (U z = 0; z < 2; ++z)
        for (U w = 0; w < 2; ++w) {
          const auto expected = y == z ? basis(Q(), 2, {x, w}) : TensorMap(Q(), 2, 0, 2);
          EXPECT_EQ(apply(*f.mu2, basis(Q(), 2, {x, y, z, w})), expected);
        }
}

TEST(Frobenius, TruncatedUnitIsCap) {
  const auto r = F(2);
  const auto f = build_frobenius(build_truncated_polynomial(r, 2, 1, 1));
  EXPECT_EQ(*f.eta2, add(basis(r, 2, {0, 1}), basis(r, 2, {1, 0})));
}

TEST(Frobenius, TrivialAlgebra) {
  const auto f = build_frobenius(build_group_algebra(Q(), {1}));
  EXPECT_EQ(*f.mu2, TensorMap::from_entries(Q(), 1, 4, 2, {{0, 0, Q().one()}}));
  EXPECT_EQ(*f.delta2, TensorMap::from_entries(Q(), 1, 2, 4, {{0, 0, Q().one()}}));
  EXPECT_TRUE(loop_value(f).is_one());
}

TEST(Frobenius, LoopValues) {
  EXPECT_EQ(loop_value(build_frobenius(build_group_algebra(Q(), {2}))), Q().from_int(2));
  EXPECT_EQ(loop_value(build_frobenius(build_group_algebra(Q(), {3}))), Q().from_int(3));
  EXPECT_TRUE(loop_value(build_frobenius(build_truncated_polynomial(F(2), 2, 1, 1))).is_zero());
}

// ∪(y⊗z)·x⊗∩(1)⊗w computed from the raw cup and cap tables.
TensorMap closed_form_oracle(const CupCap& cc) {
  const auto& r = cc.cup.ring();
  const auto n = static_cast<U>(cc.cup.rank());
  std::vector<TensorMap::Entry> entries;
  for (U x = 0; x < n; ++x)
    for (U y = 0; y < n; ++y)
      for (U z = 0; z < n; ++z)
        for (U w = 0; w < n; ++w) {
          const auto c = cc.cup.at(mi({}), mi({y, z}));
          if (c.is_zero()) continue;
          for (U a = 0; a < n; ++a)
            for (U b = 0; b < n; ++b) {
              const auto d = cc.cap.at(mi({a, b}), mi({}));
              if (d.is_zero()) continue;
              entries.push_back({mi({x, a, b, w}).flatten(n), mi({x, y, z, w}).flatten(n), c * d});
            }
        }
  return TensorMap::from_entries(r, n, 4, 4, std::move(entries));
}

class EveryAlgebra : public ::testing::TestWithParam<NamedAlgebra> {};

TEST_P(EveryAlgebra, FrobeniusAxioms) {
  const auto f = build_frobenius(GetParam().h);
  const auto axioms = check_frobenius_axioms(f);
  ASSERT_EQ(axioms.size(), 6u);
  EXPECT_TRUE(all_equal(axioms));
  const auto closed = check_frobenius_closed_form(f);
  ASSERT_EQ(closed.size(), 3u);
  EXPECT_TRUE(all_equal(closed));
  EXPECT_TRUE(check_capmult(f).equal);
}

TEST_P(EveryAlgebra, ClosedFormMatchesIndependentOracle) {
  const auto f = build_frobenius(GetParam().h);
  const auto oracle = closed_form_oracle(f.cc);
  EXPECT_EQ(frobenius_closed_form(f.cc), oracle);
  EXPECT_EQ(compose(*f.mu2, *f.delta2), oracle);
}

TEST_P(EveryAlgebra, BraidedFrobenius) {
  const auto f = build_frobenius(GetParam().h);
  const auto checks = check_braided_frobenius(f);
  ASSERT_EQ(checks.size(), 8u);
  for (const auto& [name, c] : checks) EXPECT_TRUE(c.equal) << name;
}

TEST_P(EveryAlgebra, MacrosAreBuiltFromCupAndCap) {
  const auto f = build_frobenius(GetParam().h);
  const auto id = TensorMap::identity(f.H.ring(), f.H.rank(), 1);
  EXPECT_EQ(*f.mu2, tensor(tensor(id, f.cc.cup), id));
  EXPECT_EQ(*f.delta2, tensor(tensor(id, f.cc.cap), id));
  EXPECT_EQ(*f.eta2, f.cc.cap);
  EXPECT_EQ(*f.eps2, f.cc.cup);
}

INSTANTIATE_TEST_SUITE_P(Acceptance, EveryAlgebra, ::testing::ValuesIn(testing::acceptance_algebras()),
                         testing::algebra_name);

TEST(Frobenius, NoncommutativeInputIsRejected) {
  const auto h4 = testing::sweedler_h4(Q());
  ASSERT_TRUE(check_all_axioms(h4).all());
  EXPECT_FALSE(is_commutative(h4));
  EXPECT_FALSE(is_cocommutative(h4));
  EXPECT_FALSE(is_involutory(h4));
  EXPECT_THROW(build_frobenius(h4), NotCommutativeError);
}

TEST(Frobenius, HypothesisViolationFailsAtSwitchback) {
  // On H4 the zigzag is S², conjugation by g, which is not a scalar.
  const auto h4 = testing::sweedler_h4(Q());
  EXPECT_THROW(normalized_pairing(h4), SwitchbackError);
  EXPECT_THROW(build_frobenius(h4, true), SwitchbackError);
}

}  // namespace
}  // namespace bfl
