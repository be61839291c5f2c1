#pragma once

#include <string>

#include "wmp/linop.hpp"
#include "wmp/wreath.hpp"

namespace wmp {

// sum over j,k in [0,l) with k-j-i = m (mod l) of t1^(nj) t2^(nk); exactly l
// of the l^2 pairs contribute.
FieldElem c_coeff(int l, int i, int m, int n);

// 1 - ((-h u)^n - (h^2 u w)^n) / (h^n - (-w)^n); equals 1 - (-u)^n at w = 0.
FieldElem phi_deformation(int n);

// exp(sum_{i,n} c_coeff(l,i,0,n) phi_deformation(n) p^(i)_n
//     / (n (1-t1^(nl)) (1-t2^(nl)))), truncated to degree max_deg.
MultiSym main_kernel(int l, int max_deg);

enum class VertexRoute { pairing, specialization, both };

struct VertexResult {
  Partition lambda;
  int l = 1;
  FieldElem value;
  std::string route;
  FieldElem classical;      // value at w = 0
  bool routes_agree = true; // meaningful when both routes were computed
};

// Degree-|lambda|/l coefficient of the deformed generating kernel at lambda:
// either wreath_pairing(main_kernel, wreath_dual(lambda)) (norms cancel by
// orthogonality), or inv swap of H_{lambda'} specialized by
// p^(j)_n -> delta_{j,0} phi_deformation(n). Requires empty l-core.
VertexResult capped_vertex(const Partition& lam, int l,
                           VertexRoute route = VertexRoute::both);

// Automorphism p^(i)_n[y] -> p^(i)_n[y] +- ((h^n - h^-n)/(1 - w^-n)) p^(i)_n[x].
LinOp fusion_j0(bool inverse);

// Checks R0 Z^-1 J0 Z == h^-Omega J0 h^Omega on every colored power-sum
// monomial of bidegree <= (max_deg, max_deg): R0 transfers y to x with
// coefficient h^n - h^-n, Z scales x-degree-n terms by w^n, h^Omega scales
// bidegree (n1,n2) terms by h^(n1+n2).
CheckReport verify_abrr(int l, int max_deg);

// Assembles exp(sum_{i,n} c_coeff(l,i,0,n) ((1-(-u)^n) p^(i)_n[x] +
// (-u h)^n p^(i)_n[y]) / (n (1-t1^(nl)) (1-t2^(nl)))), applies the fusion
// substitution p^(i)_n[y] -> ((h^-n - h^n)/(1 - w^-n)) p^(i)_n[x] and the
// shift w -> -w/h, and compares with main_kernel through degree max_deg.
CheckReport verify_derivation(int l, int max_deg);

} // namespace wmp
