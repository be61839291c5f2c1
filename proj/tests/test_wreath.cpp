#include "doctest.h"

#include "macdonald_oracle.hpp"
#include "wmp/field.hpp"
#include "wmp/maya.hpp"
#include "wmp/multisym.hpp"
#include "wmp/partition.hpp"
#include "wmp/schur.hpp"
#include "wmp/wreath.hpp"

using namespace wmp;

namespace {
FieldElem tuple_coeff(const WreathRecord& rec, const std::vector<Partition>& tuple) {
  auto it = rec.tuple_coeffs.find(tuple);
  return it == rec.tuple_coeffs.end() ? FieldElem::zero() : it->second;
}
} // namespace

TEST_CASE("one-color elements match the gram-schmidt oracle") {
  using wmp_test::modified_macdonald;
  using wmp_test::schur_expansion;
  for (int n = 1; n <= 4; ++n)
    for (const Partition& lam : all_partitions(n)) {
      const WreathRecord& rec = wreath_h(lam, 1);
      const auto oracle = schur_expansion(modified_macdonald(lam));
      REQUIRE(oracle.size() == rec.tuple_coeffs.size());
      for (const auto& [mu, want] : oracle) {
        INFO(lam.to_string(), " coefficient of ", mu.to_string());
        CHECK(field_eq(tuple_coeff(rec, {mu}), want));
      }
    }
}

TEST_CASE("oracle internals match pinned expansions") {
  using namespace wmp_test;
  // Monic basis element for (2): s_2 + (q-t)/(1-q t) s_11.
  const auto basis = gram_schmidt_basis(2);
  const auto p2 = schur_expansion(basis.at(Partition({2})));
  CHECK(field_eq(p2.at(Partition({2})), FieldElem::one()));
  CHECK(field_eq(p2.at(Partition({1, 1})), field_parse("(t1-t2)/(1-t1*t2)")));
  // Modified element for (2,1): s_3 + (q+t) s_21 + q t s_111.
  const auto h21 = schur_expansion(modified_macdonald(Partition({2, 1})));
  CHECK(field_eq(h21.at(Partition({3})), FieldElem::one()));
  CHECK(field_eq(h21.at(Partition({2, 1})), field_parse("t1+t2")));
  CHECK(field_eq(h21.at(Partition({1, 1, 1})), field_parse("t1*t2")));
}

TEST_CASE("pinned small elements") {
  // l = 1: coefficients on the Schur basis.
  const WreathRecord& h2 = wreath_h(Partition({2}), 1);
  CHECK(field_eq(tuple_coeff(h2, {Partition({2})}), FieldElem::one()));
  CHECK(field_eq(tuple_coeff(h2, {Partition({1, 1})}), field_parse("t1")));
  const WreathRecord& h11 = wreath_h(Partition({1, 1}), 1);
  CHECK(field_eq(tuple_coeff(h11, {Partition({1, 1})}), field_parse("t2")));
  // l = 2, size 2: power-sum expansions p^(0)_1 + t p^(1)_1.
  const Monomial p0{Gen{Alphabet::X, 0, 1}};
  const Monomial p1{Gen{Alphabet::X, 1, 1}};
  const WreathRecord& w2 = wreath_h(Partition({2}), 2);
  CHECK(field_eq(w2.h.coeff(p0), FieldElem::one()));
  CHECK(field_eq(w2.h.coeff(p1), field_parse("t1")));
  const WreathRecord& w11 = wreath_h(Partition({1, 1}), 2);
  CHECK(field_eq(w11.h.coeff(p0), FieldElem::one()));
  CHECK(field_eq(w11.h.coeff(p1), field_parse("t2")));
  // Record bookkeeping.
  CHECK(w2.l == 2);
  CHECK(w2.core == Partition());
  CHECK(w2.degree == 1);
  CHECK(w2.h.is_homogeneous(2, 0));
  CHECK(field_eq(w2.norm, wreath_norm(Partition({2}), 2)));
}

TEST_CASE("norm products") {
  CHECK(field_eq(wreath_norm(Partition({1}), 1), field_parse("(1-t1)*(1-t2)")));
  CHECK(field_eq(wreath_norm(Partition({2}), 1),
                 field_parse("(1-t1^2)*(1-t2/t1)*(1-t1)*(1-t2)")));
  CHECK(field_eq(wreath_norm(Partition({2}), 2),
                 field_parse("(1-t1^2)*(1-t2/t1)")));
  CHECK(field_eq(wreath_norm(Partition({1, 1}), 2),
                 field_parse("(1-t1/t2)*(1-t2^2)")));
  // Only hooks divisible by l contribute; an l-core has trivial norm.
  CHECK(field_eq(wreath_norm(Partition({1}), 2), FieldElem::one()));
  CHECK(field_eq(wreath_norm(Partition({3, 1}), 3), FieldElem::one()));
}

TEST_CASE("duality pairs blocks orthogonally") {
  const WreathRecord& rec = wreath_h(Partition({2}), 2);
  CHECK(field_eq(wreath_pairing(rec.h, wreath_dual(Partition({2}), 2)), rec.norm));
  CHECK(field_eq(wreath_pairing(rec.h, wreath_dual(Partition({1, 1}), 2)), FieldElem::zero()));
  CHECK(field_eq(wreath_pairing(wreath_h(Partition({1, 1}), 2).h, wreath_dual(Partition({2}), 2)),
                 FieldElem::zero()));
}

TEST_CASE("axiom and orthogonality sweeps") {
  CHECK(verify_axioms(1, 3).pass());
  CHECK(verify_axioms(2, 4).pass());
  for (int size : {0, 2, 4}) CHECK(verify_orthogonality(2, size).pass());
}

TEST_CASE("nonzero cores solve too") {
  // Size-3 block at l = 2 with core (1): members (3), (1,1,1) quotient by (2),(1,1).
  const WreathRecord& r3 = wreath_h(Partition({3}), 2);
  CHECK(r3.core == Partition({1}));
  CHECK(r3.degree == 1);
  CHECK(r3.h.is_homogeneous(3, 0));
  const FieldElem cross =
      wreath_pairing(r3.h, wreath_dual(Partition({1, 1, 1}), 2));
  CHECK(field_eq(cross, FieldElem::zero()));
  CHECK(field_eq(wreath_pairing(r3.h, wreath_dual(Partition({3}), 2)), r3.norm));
}

TEST_CASE("cauchy kernels") {
  // Degree-1 truncation at one color: 1 + p_1[x] p_1[y] / ((1-t1)(1-t2)).
  const MultiSym k = wreath_cauchy_kernel(1, 1);
  MultiSym want = MultiSym::one(1);
  want += (MultiSym::generator(1, Gen{Alphabet::X, 0, 1}) *
           MultiSym::generator(1, Gen{Alphabet::Y, 0, 1}))
              .scaled(field_parse("1/((1-t1)*(1-t2))"));
  CHECK(k.equals(want));
  CHECK(verify_schur_cauchy(1, 2, Partition()).pass());
  CHECK(verify_wreath_cauchy(1, 2, Partition()).pass());
  CHECK(verify_wreath_cauchy(2, 1, Partition({1})).pass());
}

TEST_CASE("principal evaluations") {
  auto [lhs0, rhs0] = evaluate_h(Partition({2}), 2, 0);
  CHECK(field_eq(lhs0, rhs0));
  CHECK(field_eq(rhs0, field_parse("1+u")));
  auto [lhs1, rhs1] = evaluate_h(Partition({2}), 2, 1);
  CHECK(field_eq(lhs1, rhs1));
  CHECK(field_eq(rhs1, field_parse("1+u*t1")));
  auto [lhs11, rhs11] = evaluate_h(Partition({1, 1}), 2, 1);
  CHECK(field_eq(lhs11, rhs11));
  CHECK(field_eq(rhs11, field_parse("1+u*t2")));
  CHECK(verify_evaluation(1, 3).pass());
  CHECK_THROWS_AS((void)evaluate_h(Partition({1}), 2, 0), std::invalid_argument);
}

TEST_CASE("descendant generating identity at low degree") {
  CHECK(verify_classical_generating(1, 0, 2).pass());
  CHECK(verify_classical_generating(2, 1, 1).pass());
}

TEST_CASE("report plumbing") {
  CheckReport rep;
  rep.check = "demo";
  CHECK(rep.pass());
  rep.mismatch("here", "0", "1");
  CHECK_FALSE(rep.pass());
  CHECK(rep.failures.size() == 1);
  CHECK(rep.failures[0].where == "here");
  // report_diff records one failure per differing monomial.
  CheckReport rep2;
  report_diff(rep2, "slot", MultiSym::one(1), MultiSym::zero(1));
  CHECK(rep2.failures.size() == 1);
  report_diff(rep2, "slot", MultiSym::one(1), MultiSym::one(1));
  CHECK(rep2.failures.size() == 1);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS((void)wreath_h(Partition({1}), 0), std::invalid_argument);
  CHECK_THROWS_AS((void)wreath_norm(Partition({1}), 0), std::invalid_argument);
}
