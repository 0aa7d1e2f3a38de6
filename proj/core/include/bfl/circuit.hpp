#pragma once

// Lazy composites of tensor maps. A Circuit is a straight-line program of
// local steps on a row of X-wires; it can be applied to one basis vector at a
// time, so equalities on very large tensor powers never need the full matrix.

#include <memory>
#include <variant>
#include <vector>

#include "bfl/tensor.hpp"

namespace bfl {

struct Term {
  Index index;
  Scalar value;
};

/// Sorted by index, no zero coefficients.
using SparseVector = std::vector<Term>;

class Circuit {
 public:
  /// A layer element: either `width` identity wires or a gate.
  struct Block {
    std::size_t width = 0;
    std::shared_ptr<const TensorMap> gate;

    static Block wires(std::size_t w) { return {w, nullptr}; }
    static Block of(std::shared_ptr<const TensorMap> g) { return {0, std::move(g)}; }
    static Block of(TensorMap g) { return of(std::make_shared<const TensorMap>(std::move(g))); }
    std::size_t in_arity() const { return gate ? gate->in_arity() : width; }
    std::size_t out_arity() const { return gate ? gate->out_arity() : width; }
  };

  /// Identity on `arity` wires.
  Circuit(Ring ring, std::size_t rank, std::size_t arity);
  static Circuit of(std::shared_ptr<const TensorMap> map);
  static Circuit of(TensorMap map);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t in_arity() const { return in_arity_; }
  std::size_t out_arity() const { return out_arity_; }
  std::size_t steps() const { return steps_.size(); }

  /// Applies `map` to wires [offset, offset + map.in_arity()).
  Circuit& place(std::shared_ptr<const TensorMap> map, std::size_t offset);
  Circuit& place(TensorMap map, std::size_t offset);
  /// Reorders wires [offset, offset + perm.size()) with the permute() convention.
  Circuit& permute(std::vector<std::size_t> perm, std::size_t offset = 0);
  /// Places several blocks side by side, covering all current wires.
  Circuit& layer(const std::vector<Block>& blocks);
  /// Appends `next` after this circuit.
  Circuit& then(const Circuit& next);
  /// Parallel composition: this circuit on the leading wires, `right` after it.
  Circuit beside(const Circuit& right) const;

  /// Calls gate(map, offset) or shuffle(perm, offset) for each step in order.
  template <class Gate, class Shuffle>
  void for_each_step(Gate&& gate, Shuffle&& shuffle) const {
    for (const auto& step : steps_) {
      if (const auto* p = std::get_if<Place>(&step)) {
        gate(*p->map, p->offset);
      } else {
        const auto& q = std::get<Permute>(step);
        shuffle(q.perm, q.offset);
      }
    }
  }

  /// Reference evaluation through Scalar arithmetic. materialize() and
  /// compare() use a compiled engine with native coefficients instead.
  SparseVector apply(Index basis) const;
  SparseVector apply(SparseVector v) const;
  TensorMap materialize() const;

 private:
  struct Place {
    std::shared_ptr<const TensorMap> map;
    std::size_t offset;
  };
  struct Permute {
    std::vector<std::size_t> perm;
    std::size_t offset;
  };
  using Step = std::variant<Place, Permute>;

  Ring ring_;
  std::size_t rank_;
  std::size_t in_arity_;
  std::size_t out_arity_;
  std::vector<Step> steps_;

  void run(const Step& step, std::size_t arity, SparseVector& v, SparseVector& scratch) const;
  void shift_into(const Circuit& other, std::size_t offset);
};

/// A permutation of slots, each `width` wires wide, expanded to single wires.
std::vector<std::size_t> widen(const std::vector<std::size_t>& slots, std::size_t width);

struct Witness {
  Index out;
  Index in;
  Scalar lhs;
  Scalar rhs;
};

struct Comparison {
  bool equal = true;
  bool streamed = false;
  /// Larger of the input and output flattened dimensions.
  Index dimension = 0;
  /// Arities of the compared maps; witness indices flatten over these.
  std::size_t in_arity = 0;
  std::size_t out_arity = 0;
  /// First differing entries in (in, out) order.
  std::vector<Witness> witnesses;
};

struct CompareOptions {
  Index stream_threshold = 100000;
  unsigned jobs = 1;
  std::size_t max_witnesses = 10;

  /// Defaults, with BFL_STREAM_THRESHOLD applied when set.
  static CompareOptions from_environment();
};

/// Both sides must have the same ring, rank and arities (ShapeError otherwise).
Comparison compare(const Circuit& lhs, const Circuit& rhs, const CompareOptions& options = {});
Comparison compare(const TensorMap& lhs, const TensorMap& rhs, std::size_t max_witnesses = 10);

}  // namespace bfl
