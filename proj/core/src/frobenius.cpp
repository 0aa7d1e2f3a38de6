#include "bfl/frobenius.hpp"

#include "bfl/errors.hpp"

namespace bfl {
namespace {

MapPtr share(TensorMap m) { return std::make_shared<const TensorMap>(std::move(m)); }

Circuit wires(const FrobeniusData& f, std::size_t arity) {
  return Circuit(f.H.ring(), f.H.rank(), arity);
}

}  // namespace

FrobeniusData assemble_frobenius(const HopfAlgebra& h, const NormalizedPairing& pairing,
                                 BraidData braid) {
  const auto I = TensorMap::identity(h.ring(), h.rank(), 1);
  FrobeniusData f{h,
                  pairing.integrals,
                  pairing.c,
                  pairing.cc,
                  std::move(braid),
                  share(tensor(tensor(I, pairing.cc.cup), I)),
                  share(tensor(tensor(I, pairing.cc.cap), I)),
                  share(pairing.cc.cap),
                  share(pairing.cc.cup)};
  return f;
}

FrobeniusData build_frobenius(const HopfAlgebra& h, bool allow_hypothesis_violation) {
  if (!allow_hypothesis_violation && !(is_commutative(h) && is_cocommutative(h))) {
    throw NotCommutativeError("the Hopf algebra must be commutative and cocommutative");
  }
  return assemble_frobenius(h, normalized_pairing(h), build_braid(h));
}

CheckList check_frobenius_axioms(const FrobeniusData& f, const CompareOptions& options) {
  CheckList out;
  {
    auto lhs = wires(f, 6);
    lhs.place(f.mu2, 0).place(f.mu2, 0);
    auto rhs = wires(f, 6);
    rhs.place(f.mu2, 2).place(f.mu2, 0);
    out.emplace_back("associativity", compare(lhs, rhs, options));
  }
  {
    auto lhs = wires(f, 2);
    lhs.place(f.delta2, 0).place(f.delta2, 0);
    auto rhs = wires(f, 2);
    rhs.place(f.delta2, 0).place(f.delta2, 2);
    out.emplace_back("coassociativity", compare(lhs, rhs, options));
  }
  {
    auto left = wires(f, 2);
    left.place(f.eta2, 0).place(f.mu2, 0);
    auto right = wires(f, 2);
    right.place(f.eta2, 2).place(f.mu2, 0);
    auto id = wires(f, 2);
    auto a = compare(left, id, options);
    auto b = compare(right, id, options);
    out.emplace_back("unit", a.equal ? b : a);
  }
  {
    auto left = wires(f, 2);
    left.place(f.delta2, 0).place(f.eps2, 0);
    auto right = wires(f, 2);
    right.place(f.delta2, 0).place(f.eps2, 2);
    auto id = wires(f, 2);
    auto a = compare(left, id, options);
    auto b = compare(right, id, options);
    out.emplace_back("counit", a.equal ? b : a);
  }
  auto middle = wires(f, 4);
  middle.place(f.mu2, 0).place(f.delta2, 0);
  {
    auto lhs = wires(f, 4);
    lhs.place(f.delta2, 0).place(f.mu2, 2);
    out.emplace_back("compatibility_left", compare(lhs, middle, options));
  }
  {
    auto lhs = wires(f, 4);
    lhs.place(f.delta2, 2).place(f.mu2, 0);
    out.emplace_back("compatibility_right", compare(lhs, middle, options));
  }
  return out;
}

TensorMap frobenius_closed_form(const CupCap& cc) {
  const std::size_t n = cc.cup.rank();
  std::vector<TensorMap::Entry> entries;
  for (Index x = 0; x < n; ++x) {
    for (Index w = 0; w < n; ++w) {
      for (const auto& c : cc.cup.entries()) {
        const Index y = c.in / n;
        const Index z = c.in % n;
        const Index in = ((x * n + y) * n + z) * n + w;
        for (const auto& k : cc.cap.entries()) {
          entries.push_back({(x * n * n + k.out) * n + w, in, c.value * k.value});
        }
      }
    }
  }
  return TensorMap::from_entries(cc.cup.ring(), n, 4, 4, std::move(entries));
}

CheckList check_frobenius_closed_form(const FrobeniusData& f) {
  const auto closed = frobenius_closed_form(f.cc);
  CheckList out;
  auto a = wires(f, 4);
  a.place(f.mu2, 0).place(f.delta2, 0);
  auto b = wires(f, 4);
  b.place(f.delta2, 0).place(f.mu2, 2);
  auto c = wires(f, 4);
  c.place(f.delta2, 2).place(f.mu2, 0);
  out.emplace_back("closed_form_delta_mu", compare(a.materialize(), closed));
  out.emplace_back("closed_form_left", compare(b.materialize(), closed));
  out.emplace_back("closed_form_right", compare(c.materialize(), closed));
  return out;
}

Comparison check_capmult(const FrobeniusData& f) {
  auto lhs = Circuit::of(f.delta2);
  auto rhs = wires(f, 2);
  rhs.place(f.eta2, 2).place(f.delta2, 2).place(f.mu2, 0);
  return compare(lhs, rhs);
}

Scalar loop_value(const FrobeniusData& f) { return compose(*f.eta2, *f.eps2).at(0, 0); }

CheckList check_braided_frobenius(const FrobeniusData& f, const CompareOptions& options) {
  const auto& beta = f.braid.beta;
  CheckList out;
  auto add = [&](const char* name, const Circuit& lhs, const Circuit& rhs) {
    out.emplace_back(name, compare(lhs, rhs, options));
  };
  {
    auto lhs = wires(f, 6);
    lhs.place(beta, 0).place(beta, 2).place(f.mu2, 0);
    auto rhs = wires(f, 6);
    rhs.place(f.mu2, 2).place(beta, 0);
    add("mu_through_beta_left", lhs, rhs);
  }
  {
    auto lhs = wires(f, 6);
    lhs.place(beta, 2).place(beta, 0).place(f.mu2, 2);
    auto rhs = wires(f, 6);
    rhs.place(f.mu2, 0).place(beta, 0);
    add("mu_through_beta_right", lhs, rhs);
  }
  {
    auto lhs = wires(f, 4);
    lhs.place(f.delta2, 2).place(beta, 0).place(beta, 2);
    auto rhs = wires(f, 4);
    rhs.place(beta, 0).place(f.delta2, 0);
    add("delta_through_beta_left", lhs, rhs);
  }
  {
    auto lhs = wires(f, 4);
    lhs.place(f.delta2, 0).place(beta, 2).place(beta, 0);
    auto rhs = wires(f, 4);
    rhs.place(beta, 0).place(f.delta2, 2);
    add("delta_through_beta_right", lhs, rhs);
  }
  {
    auto lhs = wires(f, 2);
    lhs.place(f.eta2, 0).place(beta, 0);
    auto rhs = wires(f, 2);
    rhs.place(f.eta2, 2);
    add("unit_through_beta_left", lhs, rhs);
  }
  {
    auto lhs = wires(f, 2);
    lhs.place(f.eta2, 2).place(beta, 0);
    auto rhs = wires(f, 2);
    rhs.place(f.eta2, 0);
    add("unit_through_beta_right", lhs, rhs);
  }
  {
    auto lhs = wires(f, 4);
    lhs.place(beta, 0).place(f.eps2, 0);
    auto rhs = wires(f, 4);
    rhs.place(f.eps2, 2);
    add("counit_through_beta_left", lhs, rhs);
  }
  {
    auto lhs = wires(f, 4);
    lhs.place(beta, 0).place(f.eps2, 2);
    auto rhs = wires(f, 4);
    rhs.place(f.eps2, 0);
    add("counit_through_beta_right", lhs, rhs);
  }
  return out;
}

}  // namespace bfl
