#pragma once

#include <memory>

#include "bfl/circuit.hpp"
#include "bfl/hopf.hpp"
#include "bfl/integral.hpp"

namespace bfl {

using MapPtr = std::shared_ptr<const TensorMap>;

/// A coalgebra structure on X^{⊗width}.
struct Coalgebra {
  std::size_t width = 1;
  MapPtr delta;   // width -> 2 width
  MapPtr counit;  // width -> 0
};

Coalgebra coalgebra_of(const HopfAlgebra& h);
/// C⊗C with Δ(a⊗b) = a1⊗b1⊗a2⊗b2 and ε = ε⊗ε.
Coalgebra doubled(const Coalgebra& c);
/// Δ^{(m)}: C -> C^{⊗m}, iterating on the leftmost leg.
TensorMap iterated_coproduct(const Coalgebra& c, std::size_t m);

/// A ternary operation T: C^{⊗3} -> C on a coalgebra C.
struct TernaryOp {
  Coalgebra coalgebra;
  MapPtr T;
};

/// T(x⊗y⊗z) = x·S(y)·z.
TensorMap build_heap_T(const HopfAlgebra& h);
TernaryOp heap_operation(const HopfAlgebra& h);

/// T(T(x⊗y⊗z)⊗u⊗v) = T(T(x⊗u1⊗v1)⊗T(y⊗u2⊗v2)⊗T(z⊗u3⊗v3)), legs of Δ^{(3)}.
Comparison check_TSD(const TernaryOp& op, const CompareOptions& options = {});
/// The variant with x in all three inner first slots, linearized with the legs
/// of x and ε on y and z: T(T(x⊗y⊗z)⊗u⊗v) = ε(y)ε(z)·T(T(x1⊗u1⊗v1)⊗T(x2⊗u2⊗v2)⊗T(x3⊗u3⊗v3)).
Comparison check_TSD_literal(const TernaryOp& op, const CompareOptions& options = {});
/// T(T(x⊗y2⊗z2)⊗z1⊗y1) = ε(y)ε(z)·x.
Comparison check_invertible_TSD(const TernaryOp& op, const CompareOptions& options = {});
/// ΔT = (T⊗T)(x1⊗y1⊗z1⊗x2⊗y2⊗z2) and εT = ε⊗ε⊗ε.
Comparison check_T_coalgebra_morphism(const TernaryOp& op);

struct BraidData {
  MapPtr T;          // 3 -> 1
  MapPtr beta1;      // 3 -> 3
  MapPtr beta1_inv;  // 3 -> 3
  MapPtr beta;       // 4 -> 4
  MapPtr beta_inv;   // 4 -> 4
};

/// β₁(x⊗y⊗z) = y1⊗z1⊗T(x⊗y2⊗z2) and β₁⁻¹(y⊗z⊗x) = T(x⊗z2⊗y2)⊗y1⊗z1.
std::pair<TensorMap, TensorMap> build_beta1(const HopfAlgebra& h, const TensorMap& T);
/// β(x⊗x'⊗y⊗z) = y1⊗z1⊗T(x⊗y2⊗z2)⊗T(x'⊗y3⊗z3) and its inverse.
std::pair<TensorMap, TensorMap> build_beta(const HopfAlgebra& h, const TensorMap& T);
BraidData build_braid(const HopfAlgebra& h);

/// Both composites of a map with its claimed inverse equal the identity.
Comparison check_inverse_pair(const TensorMap& f, const TensorMap& g);
/// β = (1⊗β₁) then (β₁⊗1).
Comparison check_beta_factorization(const BraidData& b);

/// (R⊗1)(1⊗R)(R⊗1) = (1⊗R)(R⊗1)(1⊗R) for R on two blocks of arity/2 wires.
Comparison check_YBE(const MapPtr& R, const CompareOptions& options = {});

/// (β₁⊗1) then (1^2⊗∪) equals (1⊗β₁⁻¹) then (∪⊗1^2), on x⊗u⊗v⊗y.
Comparison check_passcup(const BraidData& b, const TensorMap& cup);
/// (1^2⊗∩) then (β₁⁻¹⊗1) equals (∩⊗1^2) then (1⊗β₁).
Comparison check_passcap(const BraidData& b, const TensorMap& cap);

/// β then (1_V⊗∪) equals ∪⊗1_V.
Comparison check_cup_through_beta_right(const BraidData& b, const TensorMap& cup);
/// β then (∪⊗1_V) equals 1_V⊗∪.
Comparison check_cup_through_beta_left(const BraidData& b, const TensorMap& cup);
/// (∩⊗1_V) then β equals 1_V⊗∩.
Comparison check_cap_through_beta_left(const BraidData& b, const TensorMap& cap);
/// (1_V⊗∩) then β equals ∩⊗1_V.
Comparison check_cap_through_beta_right(const BraidData& b, const TensorMap& cap);

}  // namespace bfl
