#include "bfl/integral.hpp"

#include "bfl/errors.hpp"

namespace bfl {
namespace {

TensorMap id(const Ring& ring, std::size_t rank, std::size_t arity = 1) {
  return TensorMap::identity(ring, rank, arity);
}

TensorMap pairing_matrix(const TensorMap& cup) {
  std::vector<TensorMap::Entry> entries;
  for (const auto& e : cup.entries()) {
    entries.push_back({e.in % cup.rank(), e.in / cup.rank(), e.value});
  }
  return TensorMap::from_entries(cup.ring(), cup.rank(), 1, 1, std::move(entries));
}

}  // namespace

Vector find_integral_element(const HopfAlgebra& h) {
  const std::size_t n = h.rank();
  std::vector<TensorMap> family;
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = TensorMap::basis_vector(h.ring(), n, MultiIndex{{static_cast<std::uint32_t>(x)}});
    const auto left_mult = compose(tensor(ex, id(h.ring(), n)), h.mu());
    family.push_back(subtract(left_mult, scale(id(h.ring(), n), h.counit().at(0, x))));
  }
  auto basis = solve_right_null(family);
  if (basis.size() != 1) throw IntegralRankError("integral element", basis.size());
  return basis.front();
}

TensorMap find_integral_functional(const HopfAlgebra& h) {
  const std::size_t n = h.rank();
  const Ring& ring = h.ring();
  // Row (i, k): Σ_j λ_j Δ[(j,k) <- i] - λ_i η_k = 0.
  std::vector<std::vector<Scalar>> rows(n * n, std::vector<Scalar>(n, ring.zero()));
  for (const auto& e : h.delta().entries()) {
    const Index j = e.out / n;
    const Index k = e.out % n;
    rows[e.in * n + k][j] += e.value;
  }
  for (const auto& e : h.unit().entries()) {
    for (std::size_t i = 0; i < n; ++i) rows[i * n + e.out][i] += -e.value;
  }
  auto basis = null_space(ring, n, std::move(rows));
  if (basis.size() != 1) throw IntegralRankError("integral functional", basis.size());
  std::vector<TensorMap::Entry> entries;
  for (std::size_t j = 0; j < n; ++j) entries.push_back({0, j, basis.front()[j]});
  return TensorMap::from_entries(ring, n, 1, 0, std::move(entries));
}

IntegralPair find_integrals(const HopfAlgebra& h) {
  return {find_integral_element(h), find_integral_functional(h), h.ring().one()};
}

NormalizedPairing build_cupcap(const HopfAlgebra& h, const IntegralPair& pair) {
  const Ring& ring = h.ring();
  const std::size_t n = h.rank();
  const auto I = id(ring, n);
  const auto cup = compose(compose(tensor(I, h.antipode()), h.mu()), pair.lambda);
  const auto raw_cap = compose(pair.Lambda, h.delta());
  const auto m = compose(tensor(I, raw_cap), tensor(cup, I));
  const Scalar c = m.at(0, 0);
  if (!(m == scale(I, c))) {
    throw SwitchbackError("(cup⊗1)(1⊗cap) is not a scalar multiple of the identity");
  }
  if (c.is_zero()) throw DegeneratePairingError("(cup⊗1)(1⊗cap) vanishes: the pairing is degenerate");
  const Scalar factor = c.inv();
  NormalizedPairing result{{scale(pair.Lambda, factor), pair.lambda, pair.normalization * factor},
                           {cup, scale(raw_cap, factor)},
                           c};
  if (!check_switchback(result.cc)) {
    throw SwitchbackError("normalized cup and cap fail the switchback identities");
  }
  return result;
}

NormalizedPairing normalized_pairing(const HopfAlgebra& h) { return build_cupcap(h, find_integrals(h)); }

bool check_switchback(const CupCap& cc) {
  const auto I = id(cc.cup.ring(), cc.cup.rank());
  return compose(tensor(I, cc.cap), tensor(cc.cup, I)) == I &&
         compose(tensor(cc.cap, I), tensor(I, cc.cup)) == I;
}

bool is_nondegenerate(const TensorMap& cup) {
  if (cup.in_arity() != 2 || cup.out_arity() != 0) throw ShapeError("cup must be 2 -> 0");
  return invert(pairing_matrix(cup)).has_value();
}

bool is_left_integral(const HopfAlgebra& h, const Vector& Lambda) {
  const auto I = id(h.ring(), h.rank());
  return compose(tensor(I, Lambda), h.mu()) == compose(h.counit(), Lambda);
}

bool is_right_integral(const HopfAlgebra& h, const Vector& Lambda) {
  const auto I = id(h.ring(), h.rank());
  return compose(tensor(Lambda, I), h.mu()) == compose(h.counit(), Lambda);
}

bool is_left_functional(const HopfAlgebra& h, const TensorMap& lambda) {
  const auto I = id(h.ring(), h.rank());
  return compose(h.delta(), tensor(lambda, I)) == compose(lambda, h.unit());
}

bool is_right_functional(const HopfAlgebra& h, const TensorMap& lambda) {
  const auto I = id(h.ring(), h.rank());
  return compose(h.delta(), tensor(I, lambda)) == compose(lambda, h.unit());
}

}  // namespace bfl
