#pragma once

#include <random>
#include <string>
#include <vector>

#include "bfl/hopf.hpp"
#include "bfl/tensor.hpp"

namespace bfl::testing {

struct NamedAlgebra {
  std::string name;
  HopfAlgebra h;
};

inline const Ring& Q() {
  static const Ring r = Ring::rationals();
  return r;
}

inline Ring F(std::uint64_t p) { return Ring::prime_field(p); }

/// k[Z2], k[Z3], k[Z2xZ2] over Q and F5, k[Z2]*, F2[X]/X^2, F2[X]/X^4, F3[X]/X^3.
inline std::vector<NamedAlgebra> acceptance_algebras() {
  std::vector<NamedAlgebra> out;
  for (const auto& [ring, tag] : {std::pair{Q(), "Q"}, std::pair{F(5), "F5"}}) {
    out.push_back({std::string("Z2/") + tag, build_group_algebra(ring, {2})});
    out.push_back({std::string("Z3/") + tag, build_group_algebra(ring, {3})});
    out.push_back({std::string("Z2xZ2/") + tag, build_group_algebra(ring, {2, 2})});
  }
  out.push_back({"dualZ2/Q", build_dual_group_algebra(Q(), {2})});
  out.push_back({"F2[X]/X^2", build_truncated_polynomial(F(2), 2, 1, 1)});
  out.push_back({"F2[X]/X^4", build_truncated_polynomial(F(2), 2, 2, 1)});
  out.push_back({"F3[X]/X^3", build_truncated_polynomial(F(3), 3, 1, 1)});
  return out;
}

/// Rank-9 algebras: k[Z3xZ3], k[Z9] over Q and F3[X]/X^9.
inline std::vector<NamedAlgebra> rank9_algebras() {
  return {{"Z3xZ3/Q", build_group_algebra(Q(), {3, 3})},
          {"Z9/Q", build_group_algebra(Q(), {9})},
          {"F3[X]/X^9", build_truncated_polynomial(F(3), 3, 2, 1)}};
}

/// Brute-force product of cyclic groups, elements indexed in mixed radix with
/// the first factor most significant (the group algebra basis order).
struct GroupHeap {
  std::vector<std::size_t> orders;

  std::size_t size() const {
    std::size_t n = 1;
    for (auto o : orders) n *= o;
    return n;
  }
  std::vector<std::size_t> digits(std::size_t a) const {
    std::vector<std::size_t> d(orders.size());
    for (std::size_t k = orders.size(); k-- > 0;) {
      d[k] = a % orders[k];
      a /= orders[k];
    }
    return d;
  }
  std::size_t index(const std::vector<std::size_t>& d) const {
    std::size_t a = 0;
    for (std::size_t k = 0; k < orders.size(); ++k) a = a * orders[k] + d[k];
    return a;
  }
  std::size_t mul(std::size_t a, std::size_t b) const {
    auto x = digits(a), y = digits(b);
    for (std::size_t k = 0; k < orders.size(); ++k) x[k] = (x[k] + y[k]) % orders[k];
    return index(x);
  }
  std::size_t inv(std::size_t a) const {
    auto x = digits(a);
    for (std::size_t k = 0; k < orders.size(); ++k) x[k] = (orders[k] - x[k]) % orders[k];
    return index(x);
  }
  /// x y⁻¹ z
  std::size_t heap(std::size_t x, std::size_t y, std::size_t z) const { return mul(mul(x, inv(y)), z); }
};

inline MultiIndex mi(std::vector<std::uint32_t> digits) { return MultiIndex{std::move(digits)}; }

/// Basis vector e_{d0}⊗e_{d1}⊗... as a 0 -> arity map.
inline Vector basis(const Ring& ring, std::size_t rank, std::vector<std::uint32_t> digits) {
  return TensorMap::basis_vector(ring, rank, mi(std::move(digits)));
}

/// Sweedler's 4-dimensional Hopf algebra, basis 1, g, x, gx: g² = 1, x² = 0,
/// xg = -gx, Δg = g⊗g, Δx = x⊗1 + g⊗x, S(x) = -gx. Neither commutative nor
/// cocommutative.
inline HopfAlgebra sweedler_h4(const Ring& r) {
  // basis index 2b + a for g^a x^b
  auto idx = [](int a, int b) { return static_cast<Index>(2 * b + a); };
  std::vector<TensorMap::Entry> mu, delta;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          if (b + d > 1) continue;
          const int sign = (b == 1 && c == 1) ? -1 : 1;
          mu.push_back({idx((a + c) % 2, b + d), idx(a, b) * 4 + idx(c, d), r.from_int(sign)});
        }
  const Index one = idx(0, 0), g = idx(1, 0), x = idx(0, 1), gx = idx(1, 1);
  delta = {{one * 4 + one, one, r.one()},
           {g * 4 + g, g, r.one()},
           {x * 4 + one, x, r.one()},
           {g * 4 + x, x, r.one()},
           {gx * 4 + g, gx, r.one()},
           {one * 4 + gx, gx, r.one()}};
  auto m = TensorMap::from_entries(r, 4, 2, 1, std::move(mu));
  auto d = TensorMap::from_entries(r, 4, 1, 2, std::move(delta));
  auto unit = TensorMap::from_entries(r, 4, 0, 1, {{one, 0, r.one()}});
  auto counit = TensorMap::from_entries(r, 4, 1, 0, {{0, one, r.one()}, {0, g, r.one()}});
  auto s = TensorMap::from_entries(r, 4, 1, 1,
                                   {{one, one, r.one()}, {g, g, r.one()}, {gx, x, r.from_int(-1)}, {x, gx, r.one()}});
  return HopfAlgebra(std::move(m), std::move(unit), std::move(d), std::move(counit), std::move(s),
                     {"1", "g", "x", "gx"}, "explicit", "");
}

inline Scalar random_scalar(const Ring& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  if (ring.is_rational()) return ring.from_rational(mpq_class(num(rng), den(rng)));
  return ring.from_int(num(rng));
}

/// Sparse map with roughly `density` of its entries nonzero.
inline TensorMap random_map(const Ring& ring, std::size_t rank, std::size_t in, std::size_t out,
                            std::mt19937_64& rng, double density = 0.4) {
  std::bernoulli_distribution keep(density);
  std::vector<TensorMap::Entry> entries;
  const Index in_dim = checked_power(rank, in), out_dim = checked_power(rank, out);
  for (Index i = 0; i < in_dim; ++i) {
    for (Index o = 0; o < out_dim; ++o) {
      if (keep(rng)) entries.push_back({o, i, random_scalar(ring, rng)});
    }
  }
  return TensorMap::from_entries(ring, rank, in, out, std::move(entries));
}

}  // namespace bfl::testing
