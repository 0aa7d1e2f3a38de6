#pragma once

// Sparse exact linear maps X^{⊗a} -> X^{⊗b} for a free module X of rank n.
//
// Basis vectors of X^{⊗a} are indexed by their digits (i_0, ..., i_{a-1}),
// flattened big-endian: index = Σ i_k n^{a-1-k}. The leftmost tensor factor is
// the most significant digit, so tensor(f, g) puts f on the leading factors.
//
// compose(f, g) means "f, then g", matching top-to-bottom diagram reading.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bfl/scalar.hpp"

namespace bfl {

using Index = std::uint64_t;

/// n^k, throwing ShapeError when the result does not fit in 63 bits.
Index checked_power(std::size_t n, std::size_t k);

struct MultiIndex {
  std::vector<std::uint32_t> digits;

  std::size_t arity() const { return digits.size(); }
  Index flatten(std::size_t n) const;
  static MultiIndex unflatten(Index index, std::size_t n, std::size_t arity);
  /// "(0,1)"; "()" for arity zero.
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

class TensorMap {
 public:
  struct Entry {
    Index out;
    Index in;
    Scalar value;
  };

  /// The zero map.
  TensorMap(Ring ring, std::size_t rank, std::size_t in_arity, std::size_t out_arity);

  /// Duplicate (out, in) pairs are summed; zero results are dropped.
  static TensorMap from_entries(Ring ring, std::size_t rank, std::size_t in_arity,
                                std::size_t out_arity, std::vector<Entry> entries);
  static TensorMap identity(Ring ring, std::size_t rank, std::size_t arity);
  /// The 0 -> 0 map given by multiplication with `value`.
  static TensorMap scalar(Ring ring, std::size_t rank, const Scalar& value);
  /// Vector (0 -> 1 map) with coefficient one on basis element `i`.
  static TensorMap basis_vector(Ring ring, std::size_t rank, const MultiIndex& digits);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t in_arity() const { return in_arity_; }
  std::size_t out_arity() const { return out_arity_; }
  Index in_dim() const { return in_dim_; }
  Index out_dim() const { return out_dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  /// Entries sorted by (in, out).
  std::span<const Entry> entries() const { return entries_; }
  /// Nonzero entries of one input column, sorted by out.
  std::span<const Entry> column(Index in) const;
  Scalar at(Index out, Index in) const;
  Scalar at(const MultiIndex& out, const MultiIndex& in) const;

  friend bool operator==(const TensorMap& a, const TensorMap& b);

 private:
  Ring ring_;
  std::size_t rank_;
  std::size_t in_arity_;
  std::size_t out_arity_;
  Index in_dim_;
  Index out_dim_;
  std::vector<Entry> entries_;
  // Column start offsets into entries_, present when in_dim_ is small enough.
  std::vector<std::uint32_t> column_start_;

  void build_column_index();
};

/// Elements of X^{⊗b} are maps with in_arity 0.
using Vector = TensorMap;

TensorMap compose(const TensorMap& first, const TensorMap& second);
TensorMap tensor(const TensorMap& left, const TensorMap& right);
/// Output factor j is input factor perm[j]; compose(permute(σ), permute(ρ)) = permute(σ∘ρ).
TensorMap permute(Ring ring, std::size_t rank, std::span<const std::size_t> perm);
TensorMap scale(const TensorMap& f, const Scalar& c);
TensorMap add(const TensorMap& f, const TensorMap& g);
TensorMap subtract(const TensorMap& f, const TensorMap& g);
TensorMap transpose(const TensorMap& f);
Vector apply(const TensorMap& f, const Vector& v);

/// Validates that perm is a bijection of {0..size-1}; throws ShapeError otherwise.
void require_permutation(std::span<const std::size_t> perm);

/// Basis (possibly empty) of the joint kernel { v : M v = 0 for all M } of
/// endomorphisms of X (arity 1 -> 1). Each basis vector has coefficient one at
/// its free coordinate (reduced row echelon convention).
std::vector<Vector> solve_right_null(std::span<const TensorMap> family);

/// Same, for an arbitrary list of linear equations over `unknowns` variables:
/// each row is a dense coefficient vector.
std::vector<std::vector<Scalar>> null_space(const Ring& ring, std::size_t unknowns,
                                            std::vector<std::vector<Scalar>> rows);

/// Inverse of an a -> a map, or nullopt when it is singular.
std::optional<TensorMap> invert(const TensorMap& f);

}  // namespace bfl
