#include "bfl/tensor.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "bfl/errors.hpp"

namespace bfl {
namespace {

constexpr Index kColumnIndexLimit = Index{1} << 22;

void require_same_space(const TensorMap& f, const TensorMap& g, const char* op) {
  if (!(f.ring() == g.ring())) {
    throw ShapeError(std::string(op) + ": ring mismatch (" + f.ring().to_string() + " vs " +
                     g.ring().to_string() + ")");
  }
  if (f.rank() != g.rank()) {
    throw ShapeError(std::string(op) + ": rank mismatch (" + std::to_string(f.rank()) + " vs " +
                     std::to_string(g.rank()) + ")");
  }
}

bool entry_less(const TensorMap::Entry& a, const TensorMap::Entry& b) {
  return a.in != b.in ? a.in < b.in : a.out < b.out;
}

// Sorts, merges duplicates and drops zeros.
void canonicalize(std::vector<TensorMap::Entry>& entries) {
  if (entries.size() > 1 && !std::is_sorted(entries.begin(), entries.end(), entry_less)) {
    std::sort(entries.begin(), entries.end(), entry_less);
  }
  std::size_t w = 0;
  for (std::size_t r = 0; r < entries.size();) {
    TensorMap::Entry acc = std::move(entries[r]);
    std::size_t s = r + 1;
    while (s < entries.size() && entries[s].in == acc.in && entries[s].out == acc.out) {
      acc.value += entries[s].value;
      ++s;
    }
    if (!acc.value.is_zero()) entries[w++] = std::move(acc);
    r = s;
  }
  entries.resize(w);
}

}  // namespace

Index checked_power(std::size_t n, std::size_t k) {
  Index result = 1;
  constexpr Index limit = std::numeric_limits<Index>::max() >> 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && result > limit / n) {
      throw ShapeError("tensor power " + std::to_string(n) + "^" + std::to_string(k) +
                       " exceeds the index range");
    }
    result *= n;
  }
  return result;
}

Index MultiIndex::flatten(std::size_t n) const {
  Index index = 0;
  for (auto d : digits) {
    if (d >= n) throw ShapeError("multi-index digit " + std::to_string(d) + " out of range");
    index = index * n + d;
  }
  return index;
}

MultiIndex MultiIndex::unflatten(Index index, std::size_t n, std::size_t arity) {
  MultiIndex m;
  m.digits.assign(arity, 0);
  for (std::size_t k = arity; k-- > 0;) {
    m.digits[k] = static_cast<std::uint32_t>(index % n);
    index /= n;
  }
  return m;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(digits[i]);
  }
  return s + ")";
}

TensorMap::TensorMap(Ring ring, std::size_t rank, std::size_t in_arity, std::size_t out_arity)
    : ring_(ring),
      rank_(rank),
      in_arity_(in_arity),
      out_arity_(out_arity),
      in_dim_(checked_power(rank, in_arity)),
      out_dim_(checked_power(rank, out_arity)) {
  if (rank == 0) throw ShapeError("rank must be positive");
}

TensorMap TensorMap::from_entries(Ring ring, std::size_t rank, std::size_t in_arity,
                                  std::size_t out_arity, std::vector<Entry> entries) {
  TensorMap f(ring, rank, in_arity, out_arity);
  for (const auto& e : entries) {
    if (e.in >= f.in_dim_ || e.out >= f.out_dim_) throw ShapeError("entry index out of range");
    if (!(e.value.ring() == ring)) throw ShapeError("entry scalar ring mismatch");
  }
  canonicalize(entries);
  f.entries_ = std::move(entries);
  f.build_column_index();
  return f;
}

TensorMap TensorMap::identity(Ring ring, std::size_t rank, std::size_t arity) {
  TensorMap f(ring, rank, arity, arity);
  f.entries_.reserve(f.in_dim_);
  const Scalar one = ring.one();
  for (Index i = 0; i < f.in_dim_; ++i) f.entries_.push_back({i, i, one});
  f.build_column_index();
  return f;
}

TensorMap TensorMap::scalar(Ring ring, std::size_t rank, const Scalar& value) {
  return from_entries(ring, rank, 0, 0, {{0, 0, value}});
}

TensorMap TensorMap::basis_vector(Ring ring, std::size_t rank, const MultiIndex& digits) {
  return from_entries(ring, rank, 0, digits.arity(), {{digits.flatten(rank), 0, ring.one()}});
}

void TensorMap::build_column_index() {
  column_start_.clear();
  if (in_dim_ > kColumnIndexLimit || entries_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    return;
  }
  column_start_.assign(in_dim_ + 1, 0);
  for (const auto& e : entries_) ++column_start_[e.in + 1];
  for (Index i = 0; i < in_dim_; ++i) column_start_[i + 1] += column_start_[i];
}

std::span<const TensorMap::Entry> TensorMap::column(Index in) const {
  if (in >= in_dim_) throw ShapeError("column index out of range");
  if (!column_start_.empty()) {
    return std::span<const Entry>(entries_).subspan(column_start_[in],
                                                    column_start_[in + 1] - column_start_[in]);
  }
  auto lo = std::lower_bound(entries_.begin(), entries_.end(), in,
                             [](const Entry& e, Index v) { return e.in < v; });
  auto hi = std::upper_bound(lo, entries_.end(), in,
                             [](Index v, const Entry& e) { return v < e.in; });
  return {lo, hi};
}

Scalar TensorMap::at(Index out, Index in) const {
  for (const auto& e : column(in)) {
    if (e.out == out) return e.value;
  }
  return ring_.zero();
}

Scalar TensorMap::at(const MultiIndex& out, const MultiIndex& in) const {
  if (out.arity() != out_arity_ || in.arity() != in_arity_) throw ShapeError("multi-index arity");
  return at(out.flatten(rank_), in.flatten(rank_));
}

bool operator==(const TensorMap& a, const TensorMap& b) {
  if (!(a.ring_ == b.ring_) || a.rank_ != b.rank_ || a.in_arity_ != b.in_arity_ ||
      a.out_arity_ != b.out_arity_ || a.entries_.size() != b.entries_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.in != y.in || x.out != y.out || !(x.value == y.value)) return false;
  }
  return true;
}

TensorMap compose(const TensorMap& first, const TensorMap& second) {
  require_same_space(first, second, "compose");
  if (first.out_arity() != second.in_arity()) {
    throw ShapeError("compose: arity mismatch (" + std::to_string(first.out_arity()) + " outputs vs " +
                     std::to_string(second.in_arity()) + " inputs)");
  }
  std::vector<TensorMap::Entry> result;
  std::vector<TensorMap::Entry> column;
  auto entries = first.entries();
  for (std::size_t r = 0; r < entries.size();) {
    const Index in = entries[r].in;
    column.clear();
    for (; r < entries.size() && entries[r].in == in; ++r) {
      for (const auto& g : second.column(entries[r].out)) {
        column.push_back({g.out, in, entries[r].value * g.value});
      }
    }
    canonicalize(column);
    std::move(column.begin(), column.end(), std::back_inserter(result));
  }
  return TensorMap::from_entries(first.ring(), first.rank(), first.in_arity(), second.out_arity(),
                                 std::move(result));
}

TensorMap tensor(const TensorMap& left, const TensorMap& right) {
  require_same_space(left, right, "tensor");
  std::vector<TensorMap::Entry> result;
  result.reserve(left.nnz() * right.nnz());
  const Index rin = right.in_dim();
  const Index rout = right.out_dim();
  // Iterating left columns, then right columns, yields entries already sorted by (in, out).
  auto le = left.entries();
  auto re = right.entries();
  for (std::size_t a = 0; a < le.size();) {
    std::size_t a_end = a;
    while (a_end < le.size() && le[a_end].in == le[a].in) ++a_end;
    for (std::size_t b = 0; b < re.size();) {
      std::size_t b_end = b;
      while (b_end < re.size() && re[b_end].in == re[b].in) ++b_end;
      for (std::size_t i = a; i < a_end; ++i) {
        for (std::size_t j = b; j < b_end; ++j) {
          result.push_back({le[i].out * rout + re[j].out, le[i].in * rin + re[j].in,
                            le[i].value * re[j].value});
        }
      }
      b = b_end;
    }
    a = a_end;
  }
  return TensorMap::from_entries(left.ring(), left.rank(), left.in_arity() + right.in_arity(),
                                 left.out_arity() + right.out_arity(), std::move(result));
}

void require_permutation(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw ShapeError("invalid permutation");
    seen[p] = true;
  }
}

TensorMap permute(Ring ring, std::size_t rank, std::span<const std::size_t> perm) {
  require_permutation(perm);
  const std::size_t arity = perm.size();
  TensorMap shape(ring, rank, arity, arity);
  std::vector<TensorMap::Entry> entries;
  entries.reserve(shape.in_dim());
  const Scalar one = ring.one();
  MultiIndex out;
  out.digits.resize(arity);
  for (Index i = 0; i < shape.in_dim(); ++i) {
    auto in = MultiIndex::unflatten(i, rank, arity);
    for (std::size_t j = 0; j < arity; ++j) out.digits[j] = in.digits[perm[j]];
    entries.push_back({out.flatten(rank), i, one});
  }
  return TensorMap::from_entries(ring, rank, arity, arity, std::move(entries));
}

TensorMap scale(const TensorMap& f, const Scalar& c) {
  std::vector<TensorMap::Entry> entries;
  entries.reserve(f.nnz());
  for (const auto& e : f.entries()) entries.push_back({e.out, e.in, e.value * c});
  return TensorMap::from_entries(f.ring(), f.rank(), f.in_arity(), f.out_arity(),
                                 std::move(entries));
}

TensorMap add(const TensorMap& f, const TensorMap& g) {
  require_same_space(f, g, "add");
  if (f.in_arity() != g.in_arity() || f.out_arity() != g.out_arity()) {
    throw ShapeError("add: arity mismatch");
  }
  std::vector<TensorMap::Entry> entries(f.entries().begin(), f.entries().end());
  entries.insert(entries.end(), g.entries().begin(), g.entries().end());
  return TensorMap::from_entries(f.ring(), f.rank(), f.in_arity(), f.out_arity(),
                                 std::move(entries));
}

TensorMap subtract(const TensorMap& f, const TensorMap& g) {
  return add(f, scale(g, -g.ring().one()));
}

TensorMap transpose(const TensorMap& f) {
  std::vector<TensorMap::Entry> entries;
  entries.reserve(f.nnz());
  for (const auto& e : f.entries()) entries.push_back({e.in, e.out, e.value});
  return TensorMap::from_entries(f.ring(), f.rank(), f.out_arity(), f.in_arity(),
                                 std::move(entries));
}

Vector apply(const TensorMap& f, const Vector& v) {
  if (v.in_arity() != 0) throw ShapeError("apply: argument is not a vector");
  return compose(v, f);
}

std::vector<std::vector<Scalar>> null_space(const Ring& ring, std::size_t unknowns,
                                            std::vector<std::vector<Scalar>> rows) {
  for (const auto& row : rows) {
    if (row.size() != unknowns) throw ShapeError("null_space: row length mismatch");
  }
  // Fraction-free Gauss-Jordan: row_i <- p * row_i - a * row_pivot.
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Scalar p = rows[rank][col];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      const Scalar a = rows[i][col];
      for (std::size_t j = 0; j < unknowns; ++j) {
        rows[i][j] = p * rows[i][j] - a * rows[rank][j];
      }
      if (ring.is_rational()) {
        // Keep numbers small: divide the row by the gcd of its numerators.
        mpz_class g = 0;
        for (const auto& x : rows[i]) g = gcd(g, x.rational().get_num());
        if (g > 1) {
          const Scalar d = ring.parse_scalar(g.get_str());
          for (auto& x : rows[i]) x = x / d;
        }
      }
    }
    pivot_columns.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(unknowns, false);
  for (auto c : pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(unknowns, ring.zero());
    v[free] = ring.one();
    for (std::size_t r = 0; r < pivot_columns.size(); ++r) {
      const auto c = pivot_columns[r];
      v[c] = -(rows[r][free] / rows[r][c]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> solve_right_null(std::span<const TensorMap> family) {
  if (family.empty()) throw ShapeError("solve_right_null: empty family");
  const auto& first = family.front();
  for (const auto& m : family) {
    require_same_space(first, m, "solve_right_null");
    if (m.in_arity() != 1 || m.out_arity() != 1) {
      throw ShapeError("solve_right_null: maps must be endomorphisms of X");
    }
  }
  const std::size_t n = first.rank();
  const Ring& ring = first.ring();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& m : family) {
    std::vector<std::vector<Scalar>> block(n, std::vector<Scalar>(n, ring.zero()));
    for (const auto& e : m.entries()) block[e.out][e.in] = e.value;
    for (auto& row : block) rows.push_back(std::move(row));
  }
  std::vector<Vector> result;
  for (const auto& v : null_space(ring, n, std::move(rows))) {
    std::vector<TensorMap::Entry> entries;
    for (std::size_t i = 0; i < n; ++i) entries.push_back({i, 0, v[i]});
    result.push_back(TensorMap::from_entries(ring, n, 0, 1, std::move(entries)));
  }
  return result;
}

std::optional<TensorMap> invert(const TensorMap& f) {
  if (f.in_arity() != f.out_arity()) throw ShapeError("invert: map is not square");
  const Index dim = f.in_dim();
  if (dim > 4096) throw ShapeError("invert: dimension too large for dense inversion");
  const Ring& ring = f.ring();
  const std::size_t d = static_cast<std::size_t>(dim);
  std::vector<std::vector<Scalar>> a(d, std::vector<Scalar>(2 * d, ring.zero()));
  for (const auto& e : f.entries()) a[e.out][e.in] = e.value;
  for (std::size_t i = 0; i < d; ++i) a[i][d + i] = ring.one();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a[pivot][col].is_zero()) ++pivot;
    if (pivot == d) return std::nullopt;
    std::swap(a[col], a[pivot]);
    const Scalar inv = a[col][col].inv();
    for (auto& x : a[col]) x = x * inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      const Scalar factor = a[i][col];
      for (std::size_t j = col; j < 2 * d; ++j) a[i][j] = a[i][j] - factor * a[col][j];
    }
  }
  std::vector<TensorMap::Entry> entries;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!a[i][d + j].is_zero()) entries.push_back({i, j, a[i][d + j]});
    }
  }
  return TensorMap::from_entries(ring, f.rank(), f.in_arity(), f.out_arity(), std::move(entries));
}

}  // namespace bfl
