#include "wmp/vertex.hpp"

#include <algorithm>
#include <stdexcept>

#include "wmp/maya.hpp"

namespace wmp {

FieldElem c_coeff(int l, int i, int m, int n) {
  if (l < 1 || i < 0 || i >= l || m < 0 || m >= l || n < 1)
    throw std::invalid_argument("vertex: c_coeff arguments out of range");
  FieldElem r;
  for (int j = 0; j < l; ++j)
    for (int k = 0; k < l; ++k)
      if ((((k - j - i) % l) + l) % l == m)
        r += FieldElem::var_pow(Var::t1, n * j) * FieldElem::var_pow(Var::t2, n * k);
  return r;
}

FieldElem phi_deformation(int n) {
  if (n < 1) throw std::invalid_argument("vertex: phi_deformation needs n >= 1");
  const FieldElem h = FieldElem::variable(Var::h);
  const FieldElem u = FieldElem::variable(Var::u);
  const FieldElem w = FieldElem::variable(Var::w);
  const FieldElem num = (-(h * u)).pow(n) - (h * h * u * w).pow(n);
  const FieldElem den = h.pow(n) - (-w).pow(n);
  return FieldElem::one() - num / den;
}

namespace {

// 1 / (n (1 - t1^(nl)) (1 - t2^(nl))).
FieldElem kernel_weight(int l, int n) {
  const FieldElem one = FieldElem::one();
  return (FieldElem::from_int(n) * (one - FieldElem::var_pow(Var::t1, n * l)) *
          (one - FieldElem::var_pow(Var::t2, n * l)))
      .inverse();
}

} // namespace

MultiSym main_kernel(int l, int max_deg) {
  if (l < 1) throw std::invalid_argument("vertex: l must be positive");
  MultiSym expo = MultiSym::zero(l);
  for (int n = 1; n <= max_deg; ++n) {
    const FieldElem common = phi_deformation(n) * kernel_weight(l, n);
    for (int i = 0; i < l; ++i)
      expo.add_term(Monomial{Gen{Alphabet::X, i, n}}, c_coeff(l, i, 0, n) * common);
  }
  return exp_truncated(expo, max_deg);
}

VertexResult capped_vertex(const Partition& lam, int l, VertexRoute route) {
  if (l < 1) throw std::invalid_argument("vertex: l must be positive");
  if (!l_core(lam, l).empty())
    throw std::invalid_argument("vertex: capped vertex requires an empty core");
  VertexResult res;
  res.lambda = lam;
  res.l = l;
  const int d = lam.size() / l;
  const bool want_pairing = route != VertexRoute::specialization;
  const bool want_special = route != VertexRoute::pairing;
  FieldElem by_pairing;
  FieldElem by_special;
  if (want_pairing) by_pairing = wreath_pairing(main_kernel(l, d), wreath_dual(lam, l));
  if (want_special) {
    const MultiSym& ht = wreath_h(lam.transpose(), l).h;
    const MultiSym sp = ht.subst_generators([&](const Gen& g) {
      return g.color == 0 ? MultiSym::constant(l, phi_deformation(g.degree))
                          : MultiSym::zero(l);
    });
    by_special = coeff_inv(coeff_swap(sp.coeff(Monomial{})));
  }
  switch (route) {
    case VertexRoute::pairing:
      res.route = "pairing";
      res.value = by_pairing;
      break;
    case VertexRoute::specialization:
      res.route = "specialization";
      res.value = by_special;
      break;
    case VertexRoute::both:
      res.route = "both";
      res.value = by_pairing;
      res.routes_agree = field_eq(by_pairing, by_special);
      break;
  }
  res.classical = res.value.subst({{Var::w, FieldElem::zero()}});
  return res;
}

LinOp fusion_j0(bool inverse) {
  return xy_transfer_exp([inverse](int n) {
    const FieldElem c =
        (FieldElem::var_pow(Var::h, n) - FieldElem::var_pow(Var::h, -n)) /
        (FieldElem::one() - FieldElem::var_pow(Var::w, -n));
    return inverse ? -c : c;
  });
}

CheckReport verify_abrr(int l, int max_deg) {
  if (l < 1) throw std::invalid_argument("vertex: l must be positive");
  CheckReport rep;
  rep.check = "abrr";
  rep.params = "l=" + std::to_string(l) + " max_deg=" + std::to_string(max_deg);
  const LinOp j0 = fusion_j0(false);
  const LinOp r0 = xy_transfer_exp([](int n) {
    return FieldElem::var_pow(Var::h, n) - FieldElem::var_pow(Var::h, -n);
  });
  const LinOp z = bidegree_scale([](int nx, int) { return FieldElem::var_pow(Var::w, nx); });
  const LinOp z_inv =
      bidegree_scale([](int nx, int) { return FieldElem::var_pow(Var::w, -nx); });
  const LinOp conj =
      bidegree_scale([](int nx, int ny) { return FieldElem::var_pow(Var::h, nx + ny); });
  const LinOp conj_inv =
      bidegree_scale([](int nx, int ny) { return FieldElem::var_pow(Var::h, -(nx + ny)); });
  for (int dx = 0; dx <= max_deg; ++dx)
    for (const auto& tx : all_tuples(l, dx))
      for (int dy = 0; dy <= max_deg; ++dy)
        for (const auto& ty : all_tuples(l, dy)) {
          Monomial mono;
          for (int i = 0; i < l; ++i) {
            for (int part : tx[i].parts()) mono.push_back(Gen{Alphabet::X, i, part});
            for (int part : ty[i].parts()) mono.push_back(Gen{Alphabet::Y, i, part});
          }
          std::sort(mono.begin(), mono.end());
          const MultiSym v = MultiSym::from_monomial(l, mono, FieldElem::one());
          const MultiSym lhs = r0(z_inv(j0(z(v))));
          const MultiSym rhs = conj_inv(j0(conj(v)));
          if (!lhs.equals(rhs))
            report_diff(rep, "monomial " + monomial_to_string(mono) + ",", lhs, rhs);
        }
  return rep;
}

CheckReport verify_derivation(int l, int max_deg) {
  if (l < 1) throw std::invalid_argument("vertex: l must be positive");
  CheckReport rep;
  rep.check = "derivation";
  rep.params = "l=" + std::to_string(l) + " max_deg=" + std::to_string(max_deg);
  const FieldElem u = FieldElem::variable(Var::u);
  const FieldElem h = FieldElem::variable(Var::h);
  MultiSym expo = MultiSym::zero(l);
  for (int n = 1; n <= max_deg; ++n) {
    const FieldElem weight = kernel_weight(l, n);
    const FieldElem cx = (FieldElem::one() - (-u).pow(n)) * weight;
    const FieldElem cy = (-(u * h)).pow(n) * weight;
    for (int i = 0; i < l; ++i) {
      const FieldElem c = c_coeff(l, i, 0, n);
      expo.add_term(Monomial{Gen{Alphabet::X, i, n}}, c * cx);
      expo.add_term(Monomial{Gen{Alphabet::Y, i, n}}, c * cy);
    }
  }
  const MultiSym joint = exp_truncated(expo, max_deg);
  const MultiSym substituted = joint.subst_generators([&](const Gen& g) {
    if (g.alphabet == Alphabet::X) return MultiSym::generator(l, g);
    const FieldElem c =
        (FieldElem::var_pow(Var::h, -g.degree) - FieldElem::var_pow(Var::h, g.degree)) /
        (FieldElem::one() - FieldElem::var_pow(Var::w, -g.degree));
    return MultiSym::generator(l, Gen{Alphabet::X, g.color, g.degree}).scaled(c);
  });
  const FieldElem shift = -(FieldElem::variable(Var::w) / h);
  const MultiSym shifted = substituted.map_coeffs(
      [&](const FieldElem& c) { return c.subst({{Var::w, shift}}); });
  report_diff(rep, "", shifted.truncated(max_deg), main_kernel(l, max_deg));
  return rep;
}

} // namespace wmp
