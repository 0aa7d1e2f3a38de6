#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bfl/tensor.hpp"

namespace bfl {

/// Finite-rank Hopf algebra given by structure constants on a fixed basis.
class HopfAlgebra {
 public:
  enum class Part { Mu, Unit, Delta, Counit, Antipode };

  /// Validates shapes (mu 2->1, unit 0->1, delta 1->2, counit 1->0, antipode 1->1);
  /// does not check the axioms.
  HopfAlgebra(TensorMap mu, TensorMap unit, TensorMap delta, TensorMap counit, TensorMap antipode,
              std::vector<std::string> labels, std::string family, std::string params);

  const Ring& ring() const { return mu_->ring(); }
  std::size_t rank() const { return mu_->rank(); }

  const TensorMap& mu() const { return *mu_; }
  const TensorMap& unit() const { return *unit_; }
  const TensorMap& delta() const { return *delta_; }
  const TensorMap& counit() const { return *counit_; }
  const TensorMap& antipode() const { return *antipode_; }
  const TensorMap& part(Part p) const;
  std::shared_ptr<const TensorMap> shared(Part p) const;

  const std::vector<std::string>& labels() const { return labels_; }
  /// "group", "dual_group", "truncated_poly" or "explicit".
  const std::string& family() const { return family_; }
  /// Canonical parameter string, e.g. "orders=[2,2]".
  const std::string& params() const { return params_; }

  /// Copy with one structure map replaced (no axiom checks).
  HopfAlgebra with(Part p, TensorMap replacement) const;

 private:
  std::shared_ptr<const TensorMap> mu_, unit_, delta_, counit_, antipode_;
  std::vector<std::string> labels_;
  std::string family_;
  std::string params_;
};

bool check_associativity(const HopfAlgebra& h);
bool check_coassociativity(const HopfAlgebra& h);
/// μ(η⊗1) = 1 = μ(1⊗η).
bool check_unit(const HopfAlgebra& h);
/// (ε⊗1)Δ = 1 = (1⊗ε)Δ.
bool check_counit(const HopfAlgebra& h);
/// Δμ = (μ⊗μ)(1⊗τ⊗1)(Δ⊗Δ), together with εμ = ε⊗ε, Δη = η⊗η and εη = 1.
bool check_bialgebra(const HopfAlgebra& h);
/// μ(1⊗S)Δ = ηε = μ(S⊗1)Δ.
bool check_antipode(const HopfAlgebra& h);
/// Sμτ = μ(S⊗S), Sη = η and εS = ε.
bool check_antihom(const HopfAlgebra& h);

bool is_commutative(const HopfAlgebra& h);
bool is_cocommutative(const HopfAlgebra& h);
/// S∘S = 1.
bool is_involutory(const HopfAlgebra& h);

struct AxiomReport {
  bool associativity = false;
  bool coassociativity = false;
  bool unit = false;
  bool counit = false;
  bool bialgebra = false;
  bool antipode = false;
  bool antihom = false;

  bool all() const {
    return associativity && coassociativity && unit && counit && bialgebra && antipode && antihom;
  }
};

AxiomReport check_all_axioms(const HopfAlgebra& h);

/// Iterated comultiplication X -> X^{⊗m}; sweedler(h, 1) is the identity.
TensorMap sweedler(const HopfAlgebra& h, std::size_t m);

/// k[Z_{o1} x ... x Z_{or}], basis in mixed-radix order of the exponent tuples.
HopfAlgebra build_group_algebra(const Ring& ring, const std::vector<std::size_t>& orders);
/// The dual k[G]*, structure maps transposed.
HopfAlgebra build_dual_group_algebra(const Ring& ring, const std::vector<std::size_t>& orders);
/// Transpose dual of any finite-rank Hopf algebra.
HopfAlgebra dual(const HopfAlgebra& h);
/// F_p[X_1..X_vars]/(X_i^{p^k}), monomials ordered by degree, then by descending exponents.
HopfAlgebra build_truncated_polynomial(const Ring& ring, std::uint64_t p, std::size_t k,
                                       std::size_t vars);

}  // namespace bfl
