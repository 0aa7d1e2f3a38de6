#include <gtest/gtest.h>

#include "bfl/braid.hpp"
#include "bfl/errors.hpp"
#include "fixtures.hpp"

namespace bfl {
namespace {

using testing::basis;
using testing::F;
using testing::GroupHeap;
using testing::mi;
using testing::NamedAlgebra;
using testing::Q;

using U = std::uint32_t;

TEST(HeapT, GroupAlgebraIsGroupHeap) {
  const auto h = build_group_algebra(Q(), {3});
  const auto T = build_heap_T(h);
  EXPECT_EQ(apply(T, basis(Q(), 3, {1, 2, 1})), basis(Q(), 3, {0}));
  const GroupHeap g{{3}};
  for (U x = 0; x < 3; ++x)
    for (U y = 0; y < 3; ++y)
      for (U z = 0; z < 3; ++z) EXPECT_EQ(apply(T, basis(Q(), 3, {x, y, z})), basis(Q(), 3, {U(g.heap(x, y, z))}));
}

TEST(HeapT, TruncatedProductVanishes) {
  const auto h = build_truncated_polynomial(F(2), 2, 1, 1);
  EXPECT_TRUE(apply(build_heap_T(h), basis(F(2), 2, {1, 0, 1})).is_zero());
}

TEST(HeapT, CorruptedAntipodeBreaksTSD) {
  const auto h = build_group_algebra(Q(), {3});
  const auto bad = h.with(HopfAlgebra::Part::Antipode, TensorMap::identity(Q(), 3, 1));
  const auto r = check_TSD(heap_operation(bad));
  EXPECT_FALSE(r.equal);
  EXPECT_FALSE(r.witnesses.empty());
  EXPECT_LE(r.witnesses.size(), 10u);
  EXPECT_FALSE(check_invertible_TSD(heap_operation(bad)).equal);
}

TEST(Braid, GroupBeta1) {
  const auto h = build_group_algebra(Q(), {2});
  const auto [b1, b1i] = build_beta1(h, build_heap_T(h));
  const GroupHeap g{{2}};
  for (U x = 0; x < 2; ++x)
    for (U u = 0; u < 2; ++u)
      for (U v = 0; v < 2; ++v) {
        EXPECT_EQ(apply(b1, basis(Q(), 2, {x, u, v})), basis(Q(), 2, {u, v, U(g.heap(x, u, v))}));
      }
}

TEST(Braid, TruncatedBeta1Inverse) {
  const auto h = build_truncated_polynomial(F(2), 2, 1, 1);
  const auto [b1, b1i] = build_beta1(h, build_heap_T(h));
  EXPECT_EQ(compose(b1, b1i), TensorMap::identity(F(2), 2, 3));
  EXPECT_EQ(compose(b1i, b1), TensorMap::identity(F(2), 2, 3));
}

TEST(Braid, TrivialAlgebra) {
  const auto h = build_group_algebra(Q(), {1});
  const auto b = build_braid(h);
  EXPECT_EQ(*b.beta1, TensorMap::identity(Q(), 1, 3));
  EXPECT_EQ(*b.beta, TensorMap::identity(Q(), 1, 4));
}

TEST(Braid, BetaInverseOnKleinFour) {
  const auto h = build_group_algebra(Q(), {2, 2});
  const auto b = build_braid(h);
  EXPECT_EQ(compose(*b.beta, *b.beta_inv), TensorMap::identity(Q(), 4, 4));
  EXPECT_EQ(compose(*b.beta_inv, *b.beta), TensorMap::identity(Q(), 4, 4));
  EXPECT_EQ(b.beta->in_dim(), 256u);
}

// β((x⊗y)⊗(u⊗v)) = (u⊗v)⊗(xu⁻¹v⊗yu⁻¹v) against the brute-force group heap.
class GroupOracle : public ::testing::TestWithParam<std::vector<std::size_t>> {};

TEST_P(GroupOracle, BetaMatchesGroupHeap) {
  const GroupHeap g{GetParam()};
  for (const auto& ring : {Q(), F(5)}) {
    const auto h = build_group_algebra(ring, GetParam());
    const auto b = build_braid(h);
    const U n = static_cast<U>(g.size());
    for (U x = 0; x < n; ++x)
      for (U y = 0; y < n; ++y)
        for (U u = 0; u < n; ++u)
          for (U v = 0; v < n; ++v) {
            const U a = U(g.heap(x, u, v)), c = U(g.heap(y, u, v));
            EXPECT_EQ(apply(*b.beta, basis(ring, n, {x, y, u, v})), basis(ring, n, {u, v, a, c}));
          }
    // Degeneracy: T(g⊗g⊗z) = z.
    for (U x = 0; x < n; ++x)
      for (U z = 0; z < n; ++z) EXPECT_EQ(apply(*b.T, basis(ring, n, {x, x, z})), basis(ring, n, {z}));
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, GroupOracle,
                         ::testing::Values(std::vector<std::size_t>{2}, std::vector<std::size_t>{3},
                                           std::vector<std::size_t>{2, 2}, std::vector<std::size_t>{4}));

class EveryAlgebra : public ::testing::TestWithParam<NamedAlgebra> {};

TEST_P(EveryAlgebra, TSDAndInvertibility) {
  const auto op = heap_operation(GetParam().h);
  EXPECT_TRUE(check_TSD(op).equal);
  EXPECT_TRUE(check_invertible_TSD(op).equal);
  EXPECT_TRUE(check_T_coalgebra_morphism(op).equal);
}

TEST_P(EveryAlgebra, TDegeneracy) {
  // T(x1⊗x2⊗z) = ε(x)z
  const auto& h = GetParam().h;
  const auto id = TensorMap::identity(h.ring(), h.rank(), 1);
  EXPECT_EQ(compose(tensor(h.delta(), id), build_heap_T(h)), tensor(h.counit(), id));
}

TEST_P(EveryAlgebra, BraidingInverses) {
  const auto b = build_braid(GetParam().h);
  EXPECT_TRUE(check_inverse_pair(*b.beta1, *b.beta1_inv).equal);
  EXPECT_TRUE(check_inverse_pair(*b.beta, *b.beta_inv).equal);
  EXPECT_TRUE(check_beta_factorization(b).equal);
}

TEST_P(EveryAlgebra, YangBaxterDenseAndStreamed) {
  const auto b = build_braid(GetParam().h);
  const auto dense = check_YBE(b.beta);
  EXPECT_TRUE(dense.equal);
  EXPECT_EQ(dense.dimension, checked_power(GetParam().h.rank(), 6));
  CompareOptions stream;
  stream.stream_threshold = 1;
  const auto streamed = check_YBE(b.beta, stream);
  EXPECT_TRUE(streamed.equal);
  EXPECT_TRUE(streamed.streamed);
}

TEST_P(EveryAlgebra, CupCapCommuteWithBraiding) {
  const auto& h = GetParam().h;
  const auto b = build_braid(h);
  const auto p = normalized_pairing(h);
  EXPECT_TRUE(check_passcup(b, p.cc.cup).equal);
  EXPECT_TRUE(check_passcap(b, p.cc.cap).equal);
  EXPECT_TRUE(check_cup_through_beta_left(b, p.cc.cup).equal);
  EXPECT_TRUE(check_cup_through_beta_right(b, p.cc.cup).equal);
  EXPECT_TRUE(check_cap_through_beta_left(b, p.cc.cap).equal);
  EXPECT_TRUE(check_cap_through_beta_right(b, p.cc.cap).equal);
}

INSTANTIATE_TEST_SUITE_P(Acceptance, EveryAlgebra, ::testing::ValuesIn(testing::acceptance_algebras()),
                         testing::algebra_name);

TEST(Braid, Rank9StreamingYBE) {
  const auto h = build_group_algebra(Q(), {3, 3});
  const auto b = build_braid(h);
  CompareOptions opt;
  opt.stream_threshold = 1000;
  const auto r = check_YBE(b.beta, opt);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.streamed);
  EXPECT_EQ(r.dimension, 531441u);
}

TEST(Braid, Rank9StreamingTSD) {
  const auto op = heap_operation(build_group_algebra(Q(), {9}));
  CompareOptions opt;
  opt.stream_threshold = 1000;
  const auto r = check_TSD(op, opt);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.streamed);
  EXPECT_EQ(r.dimension, 59049u);
  EXPECT_TRUE(check_invertible_TSD(op, opt).equal);
}

TEST(Braid, JobsDoNotChangeResults) {
  const auto h = build_group_algebra(Q(), {3});
  const auto bad = heap_operation(h.with(HopfAlgebra::Part::Antipode, TensorMap::identity(Q(), 3, 1)));
  CompareOptions one, four;
  one.stream_threshold = four.stream_threshold = 1;
  four.jobs = 4;
  const auto a = check_TSD(bad, one), b = check_TSD(bad, four);
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  for (std::size_t k = 0; k < a.witnesses.size(); ++k) {
    EXPECT_EQ(a.witnesses[k].in, b.witnesses[k].in);
    EXPECT_EQ(a.witnesses[k].out, b.witnesses[k].out);
    EXPECT_EQ(a.witnesses[k].lhs, b.witnesses[k].lhs);
  }
  const auto dense = check_TSD(bad);
  ASSERT_EQ(dense.witnesses.size(), a.witnesses.size());
  EXPECT_EQ(dense.witnesses.front().in, a.witnesses.front().in);
}

TEST(Braid, YBERejectsOddArity) {
  const auto h = build_group_algebra(Q(), {2});
  EXPECT_THROW(check_YBE(std::make_shared<const TensorMap>(build_heap_T(h))), ShapeError);
}

TEST(Braid, CoalgebraHelpers) {
  const auto h = build_group_algebra(Q(), {2});
  const auto c = coalgebra_of(h);
  EXPECT_EQ(iterated_coproduct(c, 3), sweedler(h, 3));
  const auto d = doubled(c);
  EXPECT_EQ(d.width, 2u);
  // Δ(a⊗b) = a1⊗b1⊗a2⊗b2 on group-likes.
  EXPECT_EQ(apply(*d.delta, basis(Q(), 2, {0, 1})), basis(Q(), 2, {0, 1, 0, 1}));
}

}  // namespace
}  // namespace bfl
