#include "doctest.h"

#include "wmp/field.hpp"
#include "wmp/maya.hpp"
#include "wmp/multisym.hpp"
#include "wmp/partition.hpp"
#include "wmp/vertex.hpp"

using namespace wmp;

TEST_CASE("kernel coefficients") {
  // One color: the double sum collapses to (t1 t2)^0 = 1.
  for (int n : {1, 2, 3}) CHECK(field_eq(c_coeff(1, 0, 0, n), FieldElem::one()));
  // Two colors, diagonal and off-diagonal residues.
  CHECK(field_eq(c_coeff(2, 0, 0, 1), field_parse("1+t1*t2")));
  CHECK(field_eq(c_coeff(2, 0, 1, 1), field_parse("t1+t2")));
  CHECK(field_eq(c_coeff(2, 1, 0, 2), field_parse("1+t1^2*t2^2")));
  CHECK(field_eq(c_coeff(2, 1, 1, 2), field_parse("t1^2+t2^2")));
  // Three colors: residue classes separate t1 and t2 powers.
  CHECK(field_eq(c_coeff(3, 0, 1, 1), field_parse("t2+t1*t2^2+t1^2")));
  // Color symmetry of the kernel: c(i,m) depends only on m.
  for (int i : {0, 1, 2}) CHECK(field_eq(c_coeff(3, i, 2, 1), c_coeff(3, 0, 2, 1)));
}

TEST_CASE("deformation factor") {
  const FieldElem phi1 = phi_deformation(1);
  CHECK(field_eq(phi1, field_parse("(h+w+h*u+h^2*u*w)/(h+w)")));
  CHECK(field_eq(phi1.subst({{Var::w, FieldElem::zero()}}), field_parse("1+u")));
  CHECK(field_eq(phi_deformation(2).subst({{Var::w, FieldElem::zero()}}),
                 field_parse("1-u^2")));
  // At u = 0 the deformation disappears entirely.
  CHECK(field_eq(phi_deformation(3).subst({{Var::u, FieldElem::zero()}}), FieldElem::one()));
}

TEST_CASE("kernel assembly at low degree") {
  const MultiSym k = main_kernel(1, 1);
  CHECK(field_eq(k.coeff({}), FieldElem::one()));
  CHECK(field_eq(k.coeff({Gen{Alphabet::X, 0, 1}}),
                 phi_deformation(1) / field_parse("(1-t1)*(1-t2)")));
  CHECK(main_kernel(2, 2).max_x_degree() <= 2);
}

TEST_CASE("pinned one-box value") {
  const VertexResult res = capped_vertex(Partition({1}), 1);
  CHECK(res.routes_agree);
  CHECK(field_eq(res.value, field_parse("(h*(1+u)+w*(1+h^2*u))/(h+w)")));
  CHECK(field_eq(res.classical, field_parse("1+u")));
  CHECK(res.route == "both");
}

TEST_CASE("routes agree and cap to the classical product") {
  for (int l : {1, 2}) {
    for (int size = l; size <= 2 * l; size += l)
      for (const Partition& lam : all_partitions(size)) {
        if (!l_core(lam, l).empty()) continue;
        const VertexResult res = capped_vertex(lam, l);
        INFO("lambda=", lam.to_string(), " l=", l);
        CHECK(res.routes_agree);
        CHECK(field_eq(res.classical, classical_descendant(lam, 0, l)));
      }
  }
}

TEST_CASE("single routes match the joint run") {
  const Partition lam({2});
  const VertexResult both = capped_vertex(lam, 1, VertexRoute::both);
  const VertexResult pair = capped_vertex(lam, 1, VertexRoute::pairing);
  const VertexResult spec = capped_vertex(lam, 1, VertexRoute::specialization);
  CHECK(field_eq(both.value, pair.value));
  CHECK(field_eq(both.value, spec.value));
  CHECK(pair.route == "pairing");
  CHECK(spec.route == "specialization");
}

TEST_CASE("vertex requires an empty core") {
  CHECK_THROWS_AS((void)capped_vertex(Partition({1}), 2), std::invalid_argument);
  CHECK_THROWS_AS((void)capped_vertex(Partition({2, 1}), 2), std::invalid_argument);
}

TEST_CASE("fusion operator inverts") {
  const MultiSym f =
      MultiSym::generator(2, Gen{Alphabet::Y, 0, 1}) *
          MultiSym::generator(2, Gen{Alphabet::X, 1, 2}) +
      MultiSym::generator(2, Gen{Alphabet::Y, 1, 1});
  const LinOp j = fusion_j0(false);
  const LinOp ji = fusion_j0(true);
  CHECK(ji(j(f)).equals(f));
  CHECK(j(ji(f)).equals(f));
  // x generators are fixed.
  const MultiSym x_only = MultiSym::generator(2, Gen{Alphabet::X, 0, 2});
  CHECK(j(x_only).equals(x_only));
}

TEST_CASE("conjugation identities") {
  CHECK(verify_abrr(1, 2).pass());
  CHECK(verify_abrr(2, 1).pass());
  CHECK(verify_derivation(1, 2).pass());
  CHECK(verify_derivation(2, 1).pass());
}
