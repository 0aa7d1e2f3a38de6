#include "bfl/twist.hpp"

#include "bfl/errors.hpp"

namespace bfl {
namespace {

using Block = Circuit::Block;

Block wires(std::size_t w) { return Block::wires(w); }
Block gate(const MapPtr& m) { return Block::of(m); }
MapPtr share(TensorMap m) { return std::make_shared<const TensorMap>(std::move(m)); }

}  // namespace

TensorMap build_theta(const TernaryOp& op) {
  const std::size_t w = op.coalgebra.width;
  const auto d3 = share(iterated_coproduct(op.coalgebra, 3));
  Circuit c(op.T->ring(), op.T->rank(), 2 * w);
  c.layer({gate(d3), gate(d3)})
      .permute(widen({0, 1, 4, 3, 2, 5}, w))
      .layer({gate(op.T), gate(op.T)});
  return c.materialize();
}

TensorMap build_theta_core(const HopfAlgebra& h) {
  const auto d3 = share(sweedler(h, 3));
  const auto T = share(build_heap_T(h));
  Circuit c(h.ring(), h.rank(), 2);
  c.layer({wires(1), gate(d3)}).permute({2, 1, 0, 3}).layer({wires(1), gate(T)});
  return c.materialize();
}

Circuit double_TSD_circuit(const HopfAlgebra& h, const MapPtr& T) {
  const auto delta = h.shared(HopfAlgebra::Part::Delta);
  // p p' q q' r r' -> p q1 q'1 | p' q2 q'2 | r r', contract, then split r, r'.
  Circuit c(h.ring(), h.rank(), 6);
  c.layer({wires(2), gate(delta), gate(delta), wires(2)})
      .permute({0, 2, 4, 1, 3, 5, 6, 7})
      .layer({gate(T), gate(T), wires(2)})
      .layer({wires(2), gate(delta), gate(delta)})
      .permute({0, 2, 4, 1, 3, 5})
      .layer({gate(T), gate(T)});
  return c;
}

TernaryOp double_TSD(const HopfAlgebra& h, const MapPtr& T) {
  return {doubled(coalgebra_of(h)), share(double_TSD_circuit(h, T).materialize())};
}

// θ(a⊗b) = T₂(a1⊗a2⊗b2)⊗T₂(b1⊗a3⊗b3), routed through
// U(a⊗c) = T₂(a1⊗a2⊗c)⊗a3 so only b is expanded three ways per input.
TensorMap build_theta_doubled(const HopfAlgebra& h, const MapPtr& T) {
  const auto W = doubled(coalgebra_of(h));
  const auto d3 = share(iterated_coproduct(W, 3));
  const auto T2 = share(double_TSD_circuit(h, T).materialize());
  Circuit u(h.ring(), h.rank(), 4);
  u.layer({gate(d3), wires(2)}).permute(widen({0, 1, 3, 2}, 2)).layer({gate(T2), wires(2)});
  const auto U = share(u.materialize());

  Circuit c(h.ring(), h.rank(), 4);
  c.layer({wires(2), gate(d3)})
      .permute(widen({0, 2, 1, 3}, 2))
      .layer({gate(U), wires(4)})
      .permute(widen({0, 2, 1, 3}, 2))
      .layer({wires(2), gate(T2)});
  return c.materialize();
}

TensorMap build_Theta(const FrobeniusData& f, bool negative) {
  const auto cup = f.eps2;
  const auto cap = f.eta2;
  Circuit c(f.H.ring(), f.H.rank(), 2);
  c.place(cap, 2)
      .place(cap, 3)
      .place(negative ? f.braid.beta_inv : f.braid.beta, 0)
      .place(cup, 3)
      .place(cup, 2);
  return c.materialize();
}

TwistData build_twist(const FrobeniusData& f) {
  const auto op = heap_operation(f.H);
  return {share(build_theta(op)), share(build_theta_core(f.H)), share(build_Theta(f, false)),
          share(build_Theta(f, true)), share(build_theta_doubled(f.H, f.braid.T))};
}

Comparison check_twist_braiding_left(const TensorMap& t, const MapPtr& beta) {
  const auto tp = share(t);
  Circuit lhs(t.ring(), t.rank(), 4);
  lhs.place(tp, 0).place(beta, 0);
  Circuit rhs(t.ring(), t.rank(), 4);
  rhs.place(beta, 0).place(tp, 2);
  return compare(lhs, rhs);
}

Comparison check_twist_braiding_right(const TensorMap& t, const MapPtr& beta) {
  const auto tp = share(t);
  Circuit lhs(t.ring(), t.rank(), 4);
  lhs.place(tp, 2).place(beta, 0);
  Circuit rhs(t.ring(), t.rank(), 4);
  rhs.place(beta, 0).place(tp, 0);
  return compare(lhs, rhs);
}

Comparison check_slideloop(const HopfAlgebra& h, const MapPtr& T) {
  const auto d3 = share(sweedler(h, 3));
  Circuit lhs(h.ring(), h.rank(), 3);
  lhs.layer({wires(1), gate(d3), gate(d3)})
      .permute({0, 1, 2, 5, 4, 3, 6})
      .layer({wires(1), gate(T), gate(T)})
      .layer({gate(T)});
  return compare(lhs, Circuit::of(T));
}

TensorMap tortile_doubling(const TensorMap& t, const MapPtr& beta) {
  Circuit c(t.ring(), t.rank(), 4);
  const auto tp = share(t);
  c.layer({gate(tp), gate(tp)}).place(beta, 0).place(beta, 0);
  return c.materialize();
}

Comparison check_twist_mu(const FrobeniusData& f, const TensorMap& t, const TensorMap& t_doubled) {
  Circuit lhs(t.ring(), t.rank(), 4);
  lhs.place(f.mu2, 0).place(share(t), 0);
  Circuit rhs(t.ring(), t.rank(), 4);
  rhs.place(share(t_doubled), 0).place(f.mu2, 0);
  return compare(lhs, rhs);
}

Comparison check_twist_delta(const FrobeniusData& f, const TensorMap& t,
                             const TensorMap& t_doubled) {
  Circuit lhs(t.ring(), t.rank(), 2);
  lhs.place(share(t), 0).place(f.delta2, 0);
  Circuit rhs(t.ring(), t.rank(), 2);
  rhs.place(f.delta2, 0).place(share(t_doubled), 0);
  return compare(lhs, rhs);
}

TensorMap twist_mu_closed_form(const FrobeniusData& f) {
  const HopfAlgebra& h = f.H;
  const std::size_t n = h.rank();
  const Ring& ring = h.ring();
  // pairing[y][z] = λ(y·S(z)), straight from μ, S and λ.
  std::vector<std::vector<Scalar>> pairing(n, std::vector<Scalar>(n, ring.zero()));
  for (Index z = 0; z < n; ++z) {
    for (const auto& s : h.antipode().column(z)) {
      for (Index y = 0; y < n; ++y) {
        for (const auto& m : h.mu().column(y * n + s.out)) {
          pairing[y][z] += s.value * m.value * f.integrals.lambda.at(0, m.out);
        }
      }
    }
  }
  const auto core = build_theta_core(h);
  std::vector<TensorMap::Entry> entries;
  for (Index y = 0; y < n; ++y) {
    for (Index z = 0; z < n; ++z) {
      if (pairing[y][z].is_zero()) continue;
      for (const auto& e : core.entries()) {
        const Index x = e.in / n;
        const Index w = e.in % n;
        entries.push_back({e.out, ((x * n + y) * n + z) * n + w, pairing[y][z] * e.value});
      }
    }
  }
  return TensorMap::from_entries(ring, n, 4, 2, std::move(entries));
}

Comparison check_tortile(const TensorMap& t, const TensorMap& t_doubled, const MapPtr& beta) {
  return compare(t_doubled, tortile_doubling(t, beta));
}

Comparison check_cancelpair(const TwistData& t) {
  return compare(compose(*t.Theta_negative, *t.Theta),
                 TensorMap::identity(t.Theta->ring(), t.Theta->rank(), 2));
}

}  // namespace bfl
