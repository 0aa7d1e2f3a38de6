#include "bfl/hopf.hpp"

#include <algorithm>
#include <map>

#include "bfl/errors.hpp"

namespace bfl {
namespace {

TensorMap id(const HopfAlgebra& h, std::size_t arity = 1) {
  return TensorMap::identity(h.ring(), h.rank(), arity);
}

TensorMap swap(const HopfAlgebra& h) {
  const std::vector<std::size_t> perm{1, 0};
  return permute(h.ring(), h.rank(), perm);
}

void require_shape(const TensorMap& f, std::size_t in, std::size_t out, const char* name) {
  if (f.in_arity() != in || f.out_arity() != out) {
    throw ShapeError(std::string(name) + " must be " + std::to_string(in) + " -> " +
                     std::to_string(out) + ", got " + std::to_string(f.in_arity()) + " -> " +
                     std::to_string(f.out_arity()));
  }
}

std::string join_orders(const std::vector<std::size_t>& orders) {
  std::string s = "orders=[";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(orders[i]);
  }
  return s + "]";
}

std::string power_label(const std::string& base, std::size_t e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

void require_valid_build(const HopfAlgebra& h) {
  if (!check_all_axioms(h).all()) {
    throw Error("builder produced a structure failing the Hopf axioms: " + h.family() + " " +
                h.params());
  }
}

}  // namespace

HopfAlgebra::HopfAlgebra(TensorMap mu, TensorMap unit, TensorMap delta, TensorMap counit,
                         TensorMap antipode, std::vector<std::string> labels, std::string family,
                         std::string params)
    : labels_(std::move(labels)), family_(std::move(family)), params_(std::move(params)) {
  require_shape(mu, 2, 1, "mu");
  require_shape(unit, 0, 1, "unit");
  require_shape(delta, 1, 2, "delta");
  require_shape(counit, 1, 0, "counit");
  require_shape(antipode, 1, 1, "antipode");
  for (const TensorMap* f : {&unit, &delta, &counit, &antipode}) {
    if (!(f->ring() == mu.ring()) || f->rank() != mu.rank()) {
      throw ShapeError("structure maps must share ring and rank");
    }
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < mu.rank(); ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (labels_.size() != mu.rank()) throw ShapeError("one basis label per basis element required");
  mu_ = std::make_shared<const TensorMap>(std::move(mu));
  unit_ = std::make_shared<const TensorMap>(std::move(unit));
  delta_ = std::make_shared<const TensorMap>(std::move(delta));
  counit_ = std::make_shared<const TensorMap>(std::move(counit));
  antipode_ = std::make_shared<const TensorMap>(std::move(antipode));
}

std::shared_ptr<const TensorMap> HopfAlgebra::shared(Part p) const {
  switch (p) {
    case Part::Mu: return mu_;
    case Part::Unit: return unit_;
    case Part::Delta: return delta_;
    case Part::Counit: return counit_;
    case Part::Antipode: return antipode_;
  }
  throw Error("unknown structure map");
}

const TensorMap& HopfAlgebra::part(Part p) const { return *shared(p); }

HopfAlgebra HopfAlgebra::with(Part p, TensorMap replacement) const {
  TensorMap parts[] = {*mu_, *unit_, *delta_, *counit_, *antipode_};
  parts[static_cast<int>(p)] = std::move(replacement);
  return HopfAlgebra(parts[0], parts[1], parts[2], parts[3], parts[4], labels_, family_, params_);
}

bool check_associativity(const HopfAlgebra& h) {
  return compose(tensor(h.mu(), id(h)), h.mu()) == compose(tensor(id(h), h.mu()), h.mu());
}

bool check_coassociativity(const HopfAlgebra& h) {
  return compose(h.delta(), tensor(h.delta(), id(h))) ==
         compose(h.delta(), tensor(id(h), h.delta()));
}

bool check_unit(const HopfAlgebra& h) {
  return compose(tensor(h.unit(), id(h)), h.mu()) == id(h) &&
         compose(tensor(id(h), h.unit()), h.mu()) == id(h);
}

bool check_counit(const HopfAlgebra& h) {
  return compose(h.delta(), tensor(h.counit(), id(h))) == id(h) &&
         compose(h.delta(), tensor(id(h), h.counit())) == id(h);
}

bool check_bialgebra(const HopfAlgebra& h) {
  const std::vector<std::size_t> middle{0, 2, 1, 3};
  const auto rhs = compose(compose(tensor(h.delta(), h.delta()), permute(h.ring(), h.rank(), middle)),
                           tensor(h.mu(), h.mu()));
  if (!(compose(h.mu(), h.delta()) == rhs)) return false;
  if (!(compose(h.mu(), h.counit()) == tensor(h.counit(), h.counit()))) return false;
  if (!(compose(h.unit(), h.delta()) == tensor(h.unit(), h.unit()))) return false;
  return compose(h.unit(), h.counit()) == TensorMap::scalar(h.ring(), h.rank(), h.ring().one());
}

bool check_antipode(const HopfAlgebra& h) {
  const auto unit_counit = compose(h.counit(), h.unit());
  return compose(compose(h.delta(), tensor(id(h), h.antipode())), h.mu()) == unit_counit &&
         compose(compose(h.delta(), tensor(h.antipode(), id(h))), h.mu()) == unit_counit;
}

bool check_antihom(const HopfAlgebra& h) {
  const auto lhs = compose(compose(swap(h), h.mu()), h.antipode());
  const auto rhs = compose(tensor(h.antipode(), h.antipode()), h.mu());
  return lhs == rhs && compose(h.unit(), h.antipode()) == h.unit() &&
         compose(h.antipode(), h.counit()) == h.counit();
}

bool is_commutative(const HopfAlgebra& h) { return compose(swap(h), h.mu()) == h.mu(); }

bool is_cocommutative(const HopfAlgebra& h) { return compose(h.delta(), swap(h)) == h.delta(); }

bool is_involutory(const HopfAlgebra& h) { return compose(h.antipode(), h.antipode()) == id(h); }

AxiomReport check_all_axioms(const HopfAlgebra& h) {
  AxiomReport r;
  r.associativity = check_associativity(h);
  r.coassociativity = check_coassociativity(h);
  r.unit = check_unit(h);
  r.counit = check_counit(h);
  r.bialgebra = check_bialgebra(h);
  r.antipode = check_antipode(h);
  r.antihom = check_antihom(h);
  return r;
}

TensorMap sweedler(const HopfAlgebra& h, std::size_t m) {
  if (m < 1) throw ShapeError("sweedler: m must be at least 1");
  TensorMap result = id(h);
  for (std::size_t legs = 2; legs <= m; ++legs) {
    result = compose(result, tensor(h.delta(), id(h, legs - 2)));
  }
  return result;
}

HopfAlgebra build_group_algebra(const Ring& ring, const std::vector<std::size_t>& orders) {
  if (orders.empty()) throw ConfigError("group algebra needs at least one cyclic factor");
  std::size_t n = 1;
  for (auto o : orders) {
    if (o == 0) throw ConfigError("cyclic group order must be at least 1");
    n *= o;
    if (n > (1u << 16)) throw ConfigError("group order too large");
  }
  const std::size_t r = orders.size();
  auto digits = [&](std::size_t i) {
    std::vector<std::size_t> d(r);
    for (std::size_t k = r; k-- > 0;) {
      d[k] = i % orders[k];
      i /= orders[k];
    }
    return d;
  };
  auto index = [&](const std::vector<std::size_t>& d) {
    std::size_t i = 0;
    for (std::size_t k = 0; k < r; ++k) i = i * orders[k] + d[k];
    return i;
  };
  const Scalar one = ring.one();
  std::vector<TensorMap::Entry> mu, delta, counit, antipode;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    const auto da = digits(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto db = digits(b);
      std::vector<std::size_t> dc(r);
      for (std::size_t k = 0; k < r; ++k) dc[k] = (da[k] + db[k]) % orders[k];
      mu.push_back({index(dc), a * n + b, one});
    }
    delta.push_back({a * n + a, a, one});
    counit.push_back({0, a, one});
    std::vector<std::size_t> inv(r);
    for (std::size_t k = 0; k < r; ++k) inv[k] = (orders[k] - da[k]) % orders[k];
    antipode.push_back({index(inv), a, one});

    std::string label;
    for (std::size_t k = 0; k < r; ++k) {
      if (da[k] == 0) continue;
      if (!label.empty()) label += '*';
      label += power_label(r == 1 ? "g" : "g" + std::to_string(k + 1), da[k]);
    }
    labels.push_back(label.empty() ? "e" : label);
  }
  HopfAlgebra h(TensorMap::from_entries(ring, n, 2, 1, std::move(mu)),
                TensorMap::from_entries(ring, n, 0, 1, {{0, 0, one}}),
                TensorMap::from_entries(ring, n, 1, 2, std::move(delta)),
                TensorMap::from_entries(ring, n, 1, 0, std::move(counit)),
                TensorMap::from_entries(ring, n, 1, 1, std::move(antipode)), std::move(labels),
                "group", join_orders(orders));
  require_valid_build(h);
  return h;
}

HopfAlgebra dual(const HopfAlgebra& h) {
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back("d[" + l + "]");
  return HopfAlgebra(transpose(h.delta()), transpose(h.counit()), transpose(h.mu()),
                     transpose(h.unit()), transpose(h.antipode()), std::move(labels),
                     "dual_" + h.family(), h.params());
}

HopfAlgebra build_dual_group_algebra(const Ring& ring, const std::vector<std::size_t>& orders) {
  HopfAlgebra h = dual(build_group_algebra(ring, orders));
  require_valid_build(h);
  return h;
}

HopfAlgebra build_truncated_polynomial(const Ring& ring, std::uint64_t p, std::size_t k,
                                       std::size_t vars) {
  if (k < 1 || vars < 1) throw ConfigError("truncated polynomial needs k >= 1 and vars >= 1");
  if (ring.is_rational() || ring.characteristic() != p) {
    throw ConfigError("truncated polynomial algebra at p = " + std::to_string(p) +
                      " requires the ring Fp:" + std::to_string(p) + ", got " + ring.to_string());
  }
  const std::size_t cutoff = static_cast<std::size_t>(checked_power(p, k));
  const std::size_t n = static_cast<std::size_t>(checked_power(cutoff, vars));
  if (n > (1u << 12)) throw ConfigError("truncated polynomial algebra too large");

  using Exponents = std::vector<std::size_t>;
  std::vector<Exponents> monomials;
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(vars);
    std::size_t rest = i;
    for (std::size_t v = vars; v-- > 0;) {
      e[v] = rest % cutoff;
      rest /= cutoff;
    }
    monomials.push_back(std::move(e));
  }
  auto degree = [](const Exponents& e) {
    std::size_t d = 0;
    for (auto x : e) d += x;
    return d;
  };
  std::sort(monomials.begin(), monomials.end(), [&](const Exponents& a, const Exponents& b) {
    const auto da = degree(a);
    const auto db = degree(b);
    return da != db ? da < db : a > b;
  });
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[monomials[i]] = i;

  // Binomial coefficients mod p.
  std::vector<std::vector<std::uint64_t>> binom(cutoff, std::vector<std::uint64_t>(cutoff, 0));
  for (std::size_t a = 0; a < cutoff; ++a) {
    binom[a][0] = 1 % p;
    for (std::size_t j = 1; j <= a; ++j) binom[a][j] = (binom[a - 1][j - 1] + (j < a ? binom[a - 1][j] : 0)) % p;
  }

  const Scalar one = ring.one();
  std::vector<TensorMap::Entry> mu, delta, antipode;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    const auto& ea = monomials[a];
    for (std::size_t b = 0; b < n; ++b) {
      const auto& eb = monomials[b];
      Exponents sum(vars);
      bool vanishes = false;
      for (std::size_t v = 0; v < vars; ++v) {
        sum[v] = ea[v] + eb[v];
        vanishes = vanishes || sum[v] >= cutoff;
      }
      if (!vanishes) mu.push_back({index[sum], a * n + b, one});
    }
    // Δ(X^a) = Π_v Σ_j C(a_v, j) X_v^j ⊗ X_v^{a_v - j}.
    std::vector<std::pair<Exponents, std::uint64_t>> terms{{Exponents{}, 1 % p}};
    for (std::size_t v = 0; v < vars; ++v) {
      std::vector<std::pair<Exponents, std::uint64_t>> next;
      for (const auto& [left, coeff] : terms) {
        for (std::size_t j = 0; j <= ea[v]; ++j) {
          const auto c = coeff * binom[ea[v]][j] % p;
          if (c == 0) continue;
          auto l = left;
          l.push_back(j);
          next.emplace_back(std::move(l), c);
        }
      }
      terms = std::move(next);
    }
    for (const auto& [left, coeff] : terms) {
      Exponents right(vars);
      for (std::size_t v = 0; v < vars; ++v) right[v] = ea[v] - left[v];
      delta.push_back({index[left] * n + index[right], a, ring.from_int(static_cast<std::int64_t>(coeff))});
    }
    antipode.push_back({a, a, degree(ea) % 2 == 0 ? one : -one});

    std::string label;
    for (std::size_t v = 0; v < vars; ++v) {
      if (ea[v] == 0) continue;
      if (!label.empty()) label += '*';
      label += power_label(vars == 1 ? "X" : "X" + std::to_string(v + 1), ea[v]);
    }
    labels.push_back(label.empty() ? "1" : label);
  }
  HopfAlgebra h(TensorMap::from_entries(ring, n, 2, 1, std::move(mu)),
                TensorMap::from_entries(ring, n, 0, 1, {{0, 0, one}}),
                TensorMap::from_entries(ring, n, 1, 2, std::move(delta)),
                TensorMap::from_entries(ring, n, 1, 0, {{0, 0, one}}),
                TensorMap::from_entries(ring, n, 1, 1, std::move(antipode)), std::move(labels),
                "truncated_poly",
                "p=" + std::to_string(p) + ",k=" + std::to_string(k) + ",vars=" + std::to_string(vars));
  require_valid_build(h);
  return h;
}

}  // namespace bfl
