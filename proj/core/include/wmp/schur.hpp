#pragma once

#include <map>
#include <vector>

#include "wmp/multisym.hpp"
#include "wmp/partition.hpp"

namespace wmp {

// Schur function in one color as a power-sum polynomial:
// s_lam = sum_{rho |- |lam|} z_rho^{-1} chi^lam(rho) p_rho.
MultiSym schur_powersum(const Partition& lam, int l, int color, Alphabet a = Alphabet::X);

// Product over components of s_{tuple[i]} carried by color i.
MultiSym multi_schur(const std::vector<Partition>& tuple, int l, Alphabet a = Alphabet::X);

// multi_schur of the l-quotient of lam.
MultiSym vec_schur(const Partition& lam, int l, Alphabet a = Alphabet::X);

// All l-tuples of partitions with total size n, sorted ascending.
std::vector<std::vector<Partition>> all_tuples(int l, int n);

// Expansion of a single-alphabet element on the multi-Schur basis via
// p_rho = sum_lam chi^lam(rho) s_lam in each color. Zero coefficients are
// omitted.
std::map<std::vector<Partition>, FieldElem> to_multischur_coeffs(const MultiSym& f);

} // namespace wmp
