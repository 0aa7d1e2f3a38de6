#include "bfl/circuit.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <cstdlib>
#include <string>
#include <thread>

#include "bfl/errors.hpp"

namespace bfl {
namespace {

void normalize(SparseVector& v) {
  if (v.size() <= 1) {
    if (v.size() == 1 && v[0].value.is_zero()) v.clear();
    return;
  }
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size();) {
    Term acc = std::move(v[r]);
    std::size_t s = r + 1;
    for (; s < v.size() && v[s].index == acc.index; ++s) acc.value += v[s].value;
    if (!acc.value.is_zero()) v[w++] = std::move(acc);
    r = s;
  }
  v.resize(w);
}

// Compiled evaluation. Gates are flattened into column arrays of native
// coefficients; duplicate outputs are merged in a dense accumulator when the
// intermediate space is small enough, otherwise by sorting.

struct FpOps {
  using Value = std::uint64_t;
  std::uint64_t p;
  static constexpr Index kDenseLimit = Index{1} << 22;

  Value convert(const Scalar& s) const { return s.residue(); }
  Scalar back(const Ring& ring, Value v) const { return ring.from_residue(v); }
  Value one() const { return 1 % p; }
  Value mul(Value a, Value b) const { return a * b % p; }
  void add_to(Value& a, Value b) const {
    a += b;
    if (a >= p) a -= p;
  }
  bool is_zero(Value a) const { return a == 0; }
};

struct QOps {
  using Value = mpq_class;
  static constexpr Index kDenseLimit = Index{1} << 20;

  Value convert(const Scalar& s) const { return s.rational(); }
  Scalar back(const Ring& ring, const Value& v) const { return ring.from_rational(v); }
  Value one() const { return 1; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  void add_to(Value& a, const Value& b) const { a += b; }
  bool is_zero(const Value& a) const { return sgn(a) == 0; }
};

template <class Ops>
class Program {
 public:
  using Value = typename Ops::Value;
  using Terms = std::vector<std::pair<Index, Value>>;

  struct Workspace {
    Terms cur;
    Terms next;
    std::vector<Value> acc;
    std::vector<std::uint32_t> stamp;
    std::vector<Index> touched;
    std::uint32_t generation = 0;
  };

  Program(const Circuit& c, Ops ops) : ops_(std::move(ops)), rank_(c.rank()) {
    std::size_t arity = c.in_arity();
    in_dim_ = checked_power(rank_, arity);
    std::map<const TensorMap*, std::shared_ptr<const Columns>> cache;
    c.for_each_step(
        [&](const TensorMap& f, std::size_t offset) {
          auto& columns = cache[&f];
          if (!columns) columns = compile(f);
          Gate g;
          g.columns = columns;
          g.suffix_dim = checked_power(rank_, arity - offset - f.in_arity());
          arity = arity - f.in_arity() + f.out_arity();
          g.result_dim = checked_power(rank_, arity);
          g.dense = g.result_dim <= Ops::kDenseLimit;
          if (g.dense) dense_size_ = std::max(dense_size_, g.result_dim);
          steps_.push_back(std::move(g));
        },
        [&](const std::vector<std::size_t>& perm, std::size_t offset) {
          Shuffle s;
          s.suffix_dim = checked_power(rank_, arity - offset - perm.size());
          s.block_dim = checked_power(rank_, perm.size());
          s.perm = perm;
          if (s.block_dim <= (Index{1} << 16)) {
            s.table.resize(s.block_dim);
            for (Index b = 0; b < s.block_dim; ++b) s.table[b] = s.map_block(b, rank_);
          }
          steps_.push_back(std::move(s));
        });
  }

  Index in_dim() const { return in_dim_; }

  /// Output terms for one input basis vector, sorted by index.
  const Terms& run(Index basis, Workspace& ws) const {
    ws.cur.clear();
    ws.cur.emplace_back(basis, ops_.one());
    for (const auto& step : steps_) {
      if (ws.cur.empty()) break;
      if (const auto* g = std::get_if<Gate>(&step)) {
        apply_gate(*g, ws);
      } else {
        apply_shuffle(std::get<Shuffle>(step), ws);
      }
    }
    if (ws.cur.size() > 1) {
      std::sort(ws.cur.begin(), ws.cur.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return ws.cur;
  }

  Scalar back(const Ring& ring, const Value& v) const { return ops_.back(ring, v); }

 private:
  struct Columns {
    Index in_dim;
    Index out_dim;
    std::vector<std::uint32_t> start;
    std::vector<Index> out;
    std::vector<Value> value;
  };
  struct Gate {
    std::shared_ptr<const Columns> columns;
    Index suffix_dim;
    Index result_dim;
    bool dense;
  };
  struct Shuffle {
    Index suffix_dim;
    Index block_dim;
    std::vector<std::size_t> perm;
    std::vector<Index> table;

    Index map_block(Index b, std::size_t rank) const {
      const std::size_t k = perm.size();
      Index digits[64];
      for (std::size_t d = k; d-- > 0;) {
        digits[d] = b % rank;
        b /= rank;
      }
      Index out = 0;
      for (std::size_t j = 0; j < k; ++j) out = out * rank + digits[perm[j]];
      return out;
    }
  };

  std::shared_ptr<const Columns> compile(const TensorMap& f) const {
    if (f.in_dim() > (Index{1} << 26) || f.nnz() >= std::numeric_limits<std::uint32_t>::max()) {
      throw ShapeError("circuit gate too large to compile");
    }
    auto c = std::make_shared<Columns>();
    c->in_dim = f.in_dim();
    c->out_dim = f.out_dim();
    c->start.assign(f.in_dim() + 1, 0);
    c->out.reserve(f.nnz());
    c->value.reserve(f.nnz());
    for (const auto& e : f.entries()) {
      ++c->start[e.in + 1];
      c->out.push_back(e.out);
      c->value.push_back(ops_.convert(e.value));
    }
    for (Index i = 0; i < f.in_dim(); ++i) c->start[i + 1] += c->start[i];
    return c;
  }

  void apply_gate(const Gate& g, Workspace& ws) const {
    const Columns& f = *g.columns;
    ws.next.clear();
    const bool merge = ws.cur.size() > 1;
    if (merge && g.dense) {
      if (ws.acc.size() < dense_size_) {
        ws.acc.resize(dense_size_);
        ws.stamp.assign(dense_size_, 0);
      }
      if (++ws.generation == 0) {
        std::fill(ws.stamp.begin(), ws.stamp.end(), 0);
        ws.generation = 1;
      }
      ws.touched.clear();
      for (const auto& [index, coeff] : ws.cur) {
        const Index suffix = index % g.suffix_dim;
        const Index rest = index / g.suffix_dim;
        const Index base = (rest / f.in_dim) * f.out_dim;
        const Index mid = rest % f.in_dim;
        for (auto k = f.start[mid]; k < f.start[mid + 1]; ++k) {
          const Index idx = (base + f.out[k]) * g.suffix_dim + suffix;
          if (ws.stamp[idx] != ws.generation) {
            ws.stamp[idx] = ws.generation;
            ws.acc[idx] = ops_.mul(coeff, f.value[k]);
            ws.touched.push_back(idx);
          } else {
            ops_.add_to(ws.acc[idx], ops_.mul(coeff, f.value[k]));
          }
        }
      }
      for (auto idx : ws.touched) {
        if (!ops_.is_zero(ws.acc[idx])) ws.next.emplace_back(idx, std::move(ws.acc[idx]));
      }
    } else {
      for (const auto& [index, coeff] : ws.cur) {
        const Index suffix = index % g.suffix_dim;
        const Index rest = index / g.suffix_dim;
        const Index base = (rest / f.in_dim) * f.out_dim;
        const Index mid = rest % f.in_dim;
        for (auto k = f.start[mid]; k < f.start[mid + 1]; ++k) {
          ws.next.emplace_back((base + f.out[k]) * g.suffix_dim + suffix, ops_.mul(coeff, f.value[k]));
        }
      }
      if (merge) merge_sorted(ws.next);
    }
    std::swap(ws.cur, ws.next);
  }

  void merge_sorted(Terms& v) const {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < v.size();) {
      auto acc = std::move(v[r]);
      std::size_t s = r + 1;
      for (; s < v.size() && v[s].first == acc.first; ++s) ops_.add_to(acc.second, v[s].second);
      if (!ops_.is_zero(acc.second)) v[w++] = std::move(acc);
      r = s;
    }
    v.resize(w);
  }

  void apply_shuffle(const Shuffle& s, Workspace& ws) const {
    for (auto& term : ws.cur) {
      const Index suffix = term.first % s.suffix_dim;
      const Index rest = term.first / s.suffix_dim;
      const Index block = rest % s.block_dim;
      const Index mapped = s.table.empty() ? s.map_block(block, rank_) : s.table[block];
      term.first = ((rest / s.block_dim) * s.block_dim + mapped) * s.suffix_dim + suffix;
    }
  }

  Ops ops_;
  std::size_t rank_;
  Index in_dim_ = 0;
  Index dense_size_ = 0;
  std::vector<std::variant<Gate, Shuffle>> steps_;
};

template <class Fn>
decltype(auto) with_ops(const Ring& ring, Fn&& fn) {
  if (ring.is_rational()) return fn(QOps{});
  return fn(FpOps{ring.modulus()});
}

template <class Ops>
void collect_terms(const Program<Ops>& lhs, const Program<Ops>& rhs, Index begin, Index end,
                   const Ring& ring, std::size_t limit, std::vector<Witness>& witnesses, bool& equal) {
  typename Program<Ops>::Workspace wl, wr;
  for (Index in = begin; in < end; ++in) {
    const auto& a = lhs.run(in, wl);
    const auto& b = rhs.run(in, wr);
    if (a == b) continue;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      Witness w{0, in, ring.zero(), ring.zero()};
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        w.out = a[i].first;
        w.lhs = lhs.back(ring, a[i++].second);
      } else if (i == a.size() || b[j].first < a[i].first) {
        w.out = b[j].first;
        w.rhs = rhs.back(ring, b[j++].second);
      } else {
        if (a[i].second == b[j].second) {
          ++i;
          ++j;
          continue;
        }
        w.out = a[i].first;
        w.lhs = lhs.back(ring, a[i++].second);
        w.rhs = rhs.back(ring, b[j++].second);
      }
      equal = false;
      if (witnesses.size() >= limit) return;
      witnesses.push_back(std::move(w));
    }
  }
}

}  // namespace

Circuit::Circuit(Ring ring, std::size_t rank, std::size_t arity)
    : ring_(ring), rank_(rank), in_arity_(arity), out_arity_(arity) {
  if (rank == 0) throw ShapeError("rank must be positive");
}

Circuit Circuit::of(std::shared_ptr<const TensorMap> map) {
  Circuit c(map->ring(), map->rank(), map->in_arity());
  c.place(std::move(map), 0);
  return c;
}

Circuit Circuit::of(TensorMap map) { return of(std::make_shared<const TensorMap>(std::move(map))); }

Circuit& Circuit::place(std::shared_ptr<const TensorMap> map, std::size_t offset) {
  if (!(map->ring() == ring_) || map->rank() != rank_) {
    throw ShapeError("circuit: gate ring or rank mismatch");
  }
  if (offset + map->in_arity() > out_arity_) {
    throw ShapeError("circuit: gate at wire " + std::to_string(offset) + " needs " +
                     std::to_string(map->in_arity()) + " wires, only " +
                     std::to_string(out_arity_) + " present");
  }
  out_arity_ = out_arity_ - map->in_arity() + map->out_arity();
  steps_.push_back(Place{std::move(map), offset});
  return *this;
}

Circuit& Circuit::place(TensorMap map, std::size_t offset) {
  return place(std::make_shared<const TensorMap>(std::move(map)), offset);
}

Circuit& Circuit::permute(std::vector<std::size_t> perm, std::size_t offset) {
  require_permutation(perm);
  if (offset + perm.size() > out_arity_) throw ShapeError("circuit: permutation out of range");
  bool trivial = true;
  for (std::size_t i = 0; i < perm.size(); ++i) trivial = trivial && perm[i] == i;
  if (!trivial) steps_.push_back(Permute{std::move(perm), offset});
  return *this;
}

Circuit& Circuit::layer(const std::vector<Block>& blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.in_arity();
  if (total != out_arity_) {
    throw ShapeError("circuit: layer consumes " + std::to_string(total) + " wires, " +
                     std::to_string(out_arity_) + " present");
  }
  // Right to left, so offsets of the blocks still to be placed are unchanged.
  std::size_t offset = total;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    offset -= it->in_arity();
    if (it->gate) place(it->gate, offset);
  }
  return *this;
}

void Circuit::shift_into(const Circuit& other, std::size_t offset) {
  for (const auto& step : other.steps_) {
    if (const auto* p = std::get_if<Place>(&step)) {
      steps_.push_back(Place{p->map, p->offset + offset});
    } else {
      const auto& q = std::get<Permute>(step);
      steps_.push_back(Permute{q.perm, q.offset + offset});
    }
  }
}

Circuit& Circuit::then(const Circuit& next) {
  if (!(next.ring_ == ring_) || next.rank_ != rank_) throw ShapeError("circuit: ring or rank mismatch");
  if (next.in_arity_ != out_arity_) {
    throw ShapeError("circuit: sequential arity mismatch (" + std::to_string(out_arity_) + " vs " +
                     std::to_string(next.in_arity_) + ")");
  }
  shift_into(next, 0);
  out_arity_ = next.out_arity_;
  return *this;
}

Circuit Circuit::beside(const Circuit& right) const {
  if (!(right.ring_ == ring_) || right.rank_ != rank_) throw ShapeError("circuit: ring or rank mismatch");
  Circuit result = *this;
  result.in_arity_ = in_arity_ + right.in_arity_;
  result.out_arity_ = out_arity_ + right.out_arity_;
  result.shift_into(right, out_arity_);
  return result;
}

void Circuit::run(const Step& step, std::size_t arity, SparseVector& v, SparseVector& scratch) const {
  scratch.clear();
  if (const auto* p = std::get_if<Place>(&step)) {
    const TensorMap& f = *p->map;
    const Index suffix_dim = checked_power(rank_, arity - p->offset - f.in_arity());
    const Index in_dim = f.in_dim();
    const Index out_dim = f.out_dim();
    for (const auto& t : v) {
      const Index suffix = t.index % suffix_dim;
      const Index rest = t.index / suffix_dim;
      const Index mid = rest % in_dim;
      const Index prefix = rest / in_dim;
      for (const auto& e : f.column(mid)) {
        scratch.push_back({(prefix * out_dim + e.out) * suffix_dim + suffix, t.value * e.value});
      }
    }
    normalize(scratch);
  } else {
    const auto& q = std::get<Permute>(step);
    const std::size_t k = q.perm.size();
    const Index suffix_dim = checked_power(rank_, arity - q.offset - k);
    const Index block_dim = checked_power(rank_, k);
    std::vector<Index> digits(k);
    for (auto& t : v) {
      const Index suffix = t.index % suffix_dim;
      Index mid = (t.index / suffix_dim) % block_dim;
      const Index prefix = t.index / suffix_dim / block_dim;
      for (std::size_t d = k; d-- > 0;) {
        digits[d] = mid % rank_;
        mid /= rank_;
      }
      Index out = 0;
      for (std::size_t j = 0; j < k; ++j) out = out * rank_ + digits[q.perm[j]];
      scratch.push_back({(prefix * block_dim + out) * suffix_dim + suffix, std::move(t.value)});
    }
    if (scratch.size() > 1) {
      std::sort(scratch.begin(), scratch.end(),
                [](const Term& a, const Term& b) { return a.index < b.index; });
    }
  }
  std::swap(v, scratch);
}

SparseVector Circuit::apply(Index basis) const {
  if (basis >= checked_power(rank_, in_arity_)) throw ShapeError("circuit: basis index out of range");
  return apply(SparseVector{{basis, ring_.one()}});
}

SparseVector Circuit::apply(SparseVector v) const {
  SparseVector scratch;
  std::size_t arity = in_arity_;
  for (const auto& step : steps_) {
    if (v.empty()) break;
    run(step, arity, v, scratch);
    if (const auto* p = std::get_if<Place>(&step)) {
      arity = arity - p->map->in_arity() + p->map->out_arity();
    }
  }
  return v;
}

TensorMap Circuit::materialize() const {
  checked_power(rank_, out_arity_);
  return with_ops(ring_, [&](auto ops) {
    Program program(*this, ops);
    typename decltype(program)::Workspace ws;
    std::vector<TensorMap::Entry> entries;
    for (Index in = 0; in < program.in_dim(); ++in) {
      for (const auto& [out, value] : program.run(in, ws)) {
        entries.push_back({out, in, program.back(ring_, value)});
      }
    }
    return TensorMap::from_entries(ring_, rank_, in_arity_, out_arity_, std::move(entries));
  });
}

std::vector<std::size_t> widen(const std::vector<std::size_t>& slots, std::size_t width) {
  std::vector<std::size_t> perm;
  perm.reserve(slots.size() * width);
  for (auto s : slots) {
    for (std::size_t i = 0; i < width; ++i) perm.push_back(s * width + i);
  }
  return perm;
}

CompareOptions CompareOptions::from_environment() {
  CompareOptions options;
  if (const char* env = std::getenv("BFL_STREAM_THRESHOLD")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      options.stream_threshold = value;
    } catch (const std::exception&) {
      throw ConfigError(std::string("BFL_STREAM_THRESHOLD is not a non-negative integer: ") + env);
    }
  }
  return options;
}

Comparison compare(const TensorMap& lhs, const TensorMap& rhs, std::size_t max_witnesses) {
  if (!(lhs.ring() == rhs.ring()) || lhs.rank() != rhs.rank() ||
      lhs.in_arity() != rhs.in_arity() || lhs.out_arity() != rhs.out_arity()) {
    throw ShapeError("compare: sides differ in ring, rank or arity");
  }
  Comparison result;
  result.dimension = std::max(lhs.in_dim(), lhs.out_dim());
  result.in_arity = lhs.in_arity();
  result.out_arity = lhs.out_arity();
  auto a = lhs.entries();
  auto b = rhs.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  const Scalar zero = lhs.ring().zero();
  auto before = [](const TensorMap::Entry& x, const TensorMap::Entry& y) {
    return x.in != y.in ? x.in < y.in : x.out < y.out;
  };
  while (i < a.size() || j < b.size()) {
    Witness w{0, 0, zero, zero};
    if (j == b.size() || (i < a.size() && before(a[i], b[j]))) {
      w = {a[i].out, a[i].in, a[i].value, zero};
      ++i;
    } else if (i == a.size() || before(b[j], a[i])) {
      w = {b[j].out, b[j].in, zero, b[j].value};
      ++j;
    } else {
      if (a[i].value == b[j].value) {
        ++i;
        ++j;
        continue;
      }
      w = {a[i].out, a[i].in, a[i].value, b[j].value};
      ++i;
      ++j;
    }
    result.equal = false;
    if (result.witnesses.size() >= max_witnesses) break;
    result.witnesses.push_back(std::move(w));
  }
  return result;
}

Comparison compare(const Circuit& lhs, const Circuit& rhs, const CompareOptions& options) {
  if (!(lhs.ring() == rhs.ring()) || lhs.rank() != rhs.rank() ||
      lhs.in_arity() != rhs.in_arity() || lhs.out_arity() != rhs.out_arity()) {
    throw ShapeError("compare: sides differ in ring, rank or arity (" +
                     std::to_string(lhs.in_arity()) + "->" + std::to_string(lhs.out_arity()) +
                     " vs " + std::to_string(rhs.in_arity()) + "->" +
                     std::to_string(rhs.out_arity()) + ")");
  }
  const Index in_dim = checked_power(lhs.rank(), lhs.in_arity());
  const Index dimension = std::max(in_dim, checked_power(lhs.rank(), lhs.out_arity()));
  if (dimension <= options.stream_threshold) {
    auto result = compare(lhs.materialize(), rhs.materialize(), options.max_witnesses);
    result.dimension = dimension;
    return result;
  }

  struct Chunk {
    bool equal = true;
    std::vector<Witness> witnesses;
  };
  const unsigned jobs = static_cast<unsigned>(
      std::clamp<Index>(options.jobs, 1, std::min<Index>(in_dim, 256)));
  std::vector<Chunk> chunks(jobs);
  with_ops(lhs.ring(), [&](auto ops) {
    const Program left(lhs, ops);
    const Program right(rhs, ops);
    auto work = [&](unsigned c) {
      collect_terms(left, right, in_dim * c / jobs, in_dim * (c + 1) / jobs, lhs.ring(),
                    options.max_witnesses, chunks[c].witnesses, chunks[c].equal);
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned c = 0; c < jobs; ++c) threads.emplace_back(work, c);
      for (auto& t : threads) t.join();
    }
  });
  Comparison result;
  result.streamed = true;
  result.dimension = dimension;
  result.in_arity = lhs.in_arity();
  result.out_arity = lhs.out_arity();
  for (auto& chunk : chunks) {
    result.equal = result.equal && chunk.equal;
    for (auto& w : chunk.witnesses) {
      if (result.witnesses.size() < options.max_witnesses) result.witnesses.push_back(std::move(w));
    }
  }
  return result;
}

}  // namespace bfl
