#pragma once

#include "bfl/hopf.hpp"

namespace bfl {

struct IntegralPair {
  /// Integral element: x·Λ = ε(x)·Λ.
  Vector Lambda;
  /// Integral functional: (λ⊗1)∘Δ = η∘λ.
  TensorMap lambda;
  /// Factor applied to the raw Λ during normalization (one before normalizing).
  Scalar normalization;
};

struct CupCap {
  TensorMap cup;  // 2 -> 0
  TensorMap cap;  // 0 -> 2
};

struct NormalizedPairing {
  IntegralPair integrals;
  CupCap cc;
  /// The scalar c with (∪⊗1)(1⊗∩) = c·1 before rescaling.
  Scalar c;
};

/// Generator of the integral space; IntegralRankError unless it has rank one.
Vector find_integral_element(const HopfAlgebra& h);
/// Generator of the integral functional space; IntegralRankError unless rank one.
TensorMap find_integral_functional(const HopfAlgebra& h);
IntegralPair find_integrals(const HopfAlgebra& h);

/// cup = λ∘μ∘(1⊗S), cap = Δ∘Λ, then Λ is rescaled by c⁻¹ so both switchback
/// identities hold. SwitchbackError if (∪⊗1)(1⊗∩) is not scalar or the
/// rescaled pair fails; DegeneratePairingError if c = 0.
NormalizedPairing build_cupcap(const HopfAlgebra& h, const IntegralPair& pair);
/// find_integrals followed by build_cupcap.
NormalizedPairing normalized_pairing(const HopfAlgebra& h);

/// (∪⊗1)(1⊗∩) = 1 = (1⊗∪)(∩⊗1).
bool check_switchback(const CupCap& cc);
/// The matrix (cup(e_i⊗e_j)) is invertible.
bool is_nondegenerate(const TensorMap& cup);

bool is_left_integral(const HopfAlgebra& h, const Vector& Lambda);
bool is_right_integral(const HopfAlgebra& h, const Vector& Lambda);
/// (λ⊗1)Δ = ηλ.
bool is_left_functional(const HopfAlgebra& h, const TensorMap& lambda);
/// (1⊗λ)Δ = ηλ.
bool is_right_functional(const HopfAlgebra& h, const TensorMap& lambda);

}  // namespace bfl
