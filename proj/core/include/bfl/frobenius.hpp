#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bfl/braid.hpp"

namespace bfl {

/// Named equality results, in a fixed order.
using CheckList = std::vector<std::pair<std::string, Comparison>>;

/// Frobenius structure on V = X⊗X: μ₂ = 1⊗∪⊗1, Δ₂ = 1⊗∩⊗1, η₂ = ∩, ε₂ = ∪.
struct FrobeniusData {
  HopfAlgebra H;
  IntegralPair integrals;
  Scalar pairing_constant;
  CupCap cc;
  BraidData braid;
  MapPtr mu2;     // 4 -> 2
  MapPtr delta2;  // 2 -> 4
  MapPtr eta2;    // 0 -> 2
  MapPtr eps2;    // 2 -> 0
};

/// NotCommutativeError unless H is commutative and cocommutative, or
/// `allow_hypothesis_violation` is set.
FrobeniusData build_frobenius(const HopfAlgebra& h, bool allow_hypothesis_violation = false);
/// Same, from an already normalized pairing.
FrobeniusData assemble_frobenius(const HopfAlgebra& h, const NormalizedPairing& pairing,
                                 BraidData braid);

/// associativity, coassociativity, unit, counit, compatibility_left, compatibility_right.
CheckList check_frobenius_axioms(const FrobeniusData& f, const CompareOptions& options = {});

/// x⊗y⊗z⊗w ↦ ∪(y⊗z)·x⊗∩(1)⊗w, built entry by entry.
TensorMap frobenius_closed_form(const CupCap& cc);
/// The closed form against Δ₂μ₂, (Δ₂⊗1)(1⊗μ₂) and (1⊗Δ₂)(μ₂⊗1).
CheckList check_frobenius_closed_form(const FrobeniusData& f);
/// Δ₂ = (1_V⊗(η₂ then Δ₂)) then (μ₂⊗1_V).
Comparison check_capmult(const FrobeniusData& f);
/// ε₂∘η₂ as a scalar.
Scalar loop_value(const FrobeniusData& f);

/// The eight commutations of μ₂, Δ₂, η₂, ε₂ with β.
CheckList check_braided_frobenius(const FrobeniusData& f, const CompareOptions& options = {});

}  // namespace bfl
