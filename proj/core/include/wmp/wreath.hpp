#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wmp/multisym.hpp"
#include "wmp/partition.hpp"
#include "wmp/schur.hpp"

namespace wmp {

// The triangularity system for a block is inconsistent, its solution space
// is not one-dimensional, or the normalizing coefficient vanishes. Raised
// instead of ever returning a silently wrong element.
struct ConventionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WreathRecord {
  int l = 1;
  Partition lambda;
  Partition core;
  int degree = 0;               // (|lambda| - |core|) / l
  MultiSym h = MultiSym(1);     // power-sum expansion, alphabet X, homogeneous
  std::map<std::vector<Partition>, FieldElem> tuple_coeffs; // multi-Schur expansion
  FieldElem norm;               // value of wreath_norm(lambda, l)
};

// The unique element of lambda's block with: multi-Schur coefficients of
// gamma_{t1}(H) supported on quotients of partitions dominating lambda,
// coefficients of gamma_{t2^-1}(H) supported on quotients of partitions
// dominated by lambda, and coefficient 1 on the tuple ((d), {}, ..., {}).
// Whole blocks are solved at once and cached; thread-safe.
const WreathRecord& wreath_h(const Partition& lam, int l);

// prod over boxes with hook divisible by l of
// (1 - t1^(leg+1) t2^(-arm)) (1 - t1^(-leg) t2^(arm+1)).
FieldElem wreath_norm(const Partition& lam, int l);

// inv swap H_{lambda'}; dual to wreath_h(lambda) under the wreath pairing
// with norm wreath_norm(lambda).
MultiSym wreath_dual(const Partition& lam, int l);

struct CheckFailure {
  std::string where;
  std::string got;
  std::string expected;
};

struct CheckReport {
  std::string check;
  std::string params;
  std::vector<CheckFailure> failures;
  bool pass() const { return failures.empty(); }
  void mismatch(const std::string& where, const std::string& got, const std::string& expected);
};

// Record a mismatch for every monomial where the two elements differ.
void report_diff(CheckReport& rep, const std::string& where, const MultiSym& got,
                 const MultiSym& want);

// Re-checks both triangularity conditions, the normalization, and
// homogeneity on every solved H with empty l-core and size <= max_size,
// by applying the plethysms to the stored element afresh.
CheckReport verify_axioms(int l, int max_size);

// wreath_pairing(H_lam, wreath_dual(mu)) == delta * norm over all pairs of
// the given size with empty l-core.
CheckReport verify_orthogonality(int l, int size);

// Two-alphabet kernel exp(sum_{i,n} p^(i)_n[x] sum_m c_coeff(l,i,m,n) p^(m)_n[y]
// / (n (1-t1^(nl)) (1-t2^(nl)))) truncated to bidegree (max_deg, max_deg).
MultiSym wreath_cauchy_kernel(int l, int max_deg);

// sum over the block of the given core, degrees <= max_deg, of
// vec_schur[x] vec_schur[y], against exp(sum p^(i)_n[x] p^(i)_n[y] / n).
CheckReport verify_schur_cauchy(int l, int max_deg, const Partition& core);

// sum over the block of norm^-1 H_lam[x] wreath_dual(lam)[y], against
// wreath_cauchy_kernel, coefficient-wise through bidegree (max_deg, max_deg).
CheckReport verify_wreath_cauchy(int l, int max_deg, const Partition& core);

// lhs: H_lam under p^(j)_k -> delta_{0,j} - delta_{m,j} (-u)^k;
// rhs: prod over boxes (a,b) of lam with a-b = m (mod l) of
// (1 + u t1^(b-1) t2^(a-1)). Requires empty l-core.
std::pair<FieldElem, FieldElem> evaluate_h(const Partition& lam, int l, int m);

// evaluate_h lhs == rhs for every empty-core lam of size <= max_size and
// every residue m.
CheckReport verify_evaluation(int l, int max_size);

// sum over empty-core lam of norm^-1 H_lam prod_{(a,b) in lam, a-b = -m}
// (1 + u t1^(1-b) t2^(1-a)), against
// exp(sum p^(i)_n (C^(i)_{0,n} - C^(i)_{m,n} (-u)^n) / (n (1-t1^(nl)) (1-t2^(nl)))),
// both truncated to degree max_deg.
CheckReport verify_classical_generating(int l, int m, int max_deg);

} // namespace wmp
