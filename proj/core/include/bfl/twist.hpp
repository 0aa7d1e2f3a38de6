#pragma once

#include "bfl/frobenius.hpp"

namespace bfl {

struct TwistData {
  MapPtr theta;          // 2 -> 2
  MapPtr theta_core;     // 2 -> 2, x⊗y ↦ y2⊗y1S(x)y3
  MapPtr Theta;          // 2 -> 2, cup/cap loop around β
  MapPtr Theta_negative; // 2 -> 2, same loop around β⁻¹
  MapPtr theta_doubled;  // 4 -> 4, θ of the doubled TSD
};

/// θ(x⊗y) = T(x1⊗x2⊗y2)⊗T(y1⊗x3⊗y3) for a TSD on any coalgebra.
TensorMap build_theta(const TernaryOp& op);
/// y2⊗y1S(x)y3.
TensorMap build_theta_core(const HopfAlgebra& h);

/// T₂((a⊗a')⊗(b⊗b')⊗(c⊗c')) = T(T(a⊗b1⊗b'1)⊗c1⊗c'1) ⊗ T(T(a'⊗b2⊗b'2)⊗c2⊗c'2),
/// a TSD on the coalgebra X⊗X, as a lazy circuit.
Circuit double_TSD_circuit(const HopfAlgebra& h, const MapPtr& T);
TernaryOp double_TSD(const HopfAlgebra& h, const MapPtr& T);
/// θ for (X⊗X, T₂), evaluated without materializing T₂.
TensorMap build_theta_doubled(const HopfAlgebra& h, const MapPtr& T);

/// (1²⊗∪)(1³⊗∪⊗1)(b⊗1²)(1³⊗∩⊗1)(1²⊗∩) with b = β or β⁻¹.
TensorMap build_Theta(const FrobeniusData& f, bool negative = false);
TwistData build_twist(const FrobeniusData& f);

/// (t⊗1_V) then β equals β then (1_V⊗t).
Comparison check_twist_braiding_left(const TensorMap& t, const MapPtr& beta);
/// (1_V⊗t) then β equals β then (t⊗1_V).
Comparison check_twist_braiding_right(const TensorMap& t, const MapPtr& beta);
/// T(x⊗T(z1⊗z2⊗w2)⊗T(w1⊗z3⊗w3)) = T(x⊗z⊗w).
Comparison check_slideloop(const HopfAlgebra& h, const MapPtr& T);
/// (t⊗t) then β then β: the doubled twist predicted by the tortile relation.
TensorMap tortile_doubling(const TensorMap& t, const MapPtr& beta);
/// μ₂ then t equals t_doubled then μ₂.
Comparison check_twist_mu(const FrobeniusData& f, const TensorMap& t, const TensorMap& t_doubled);
/// t then Δ₂ equals Δ₂ then t_doubled.
Comparison check_twist_delta(const FrobeniusData& f, const TensorMap& t, const TensorMap& t_doubled);
/// x⊗y⊗z⊗w ↦ λ(yS(z))·w2⊗w1S(x)w3, built from structure constants.
TensorMap twist_mu_closed_form(const FrobeniusData& f);
/// θ_doubled = (θ⊗θ) then β then β.
Comparison check_tortile(const TensorMap& t, const TensorMap& t_doubled, const MapPtr& beta);
/// Θ₋ then Θ equals the identity on V.
Comparison check_cancelpair(const TwistData& t);

}  // namespace bfl
