#pragma once

#include <functional>
#include <vector>

#include "wmp/multisym.hpp"

namespace wmp {

// Linear operator on the degree-truncated two-alphabet ring.
using LinOp = std::function<MultiSym(const MultiSym&)>;

// exp of the derivation sum_{i,n} c(n) p^(i)_n[x] d/d p^(i)_n[y]: acts as the
// algebra automorphism p^(i)_n[y] -> p^(i)_n[y] + c(n) p^(i)_n[x] with x
// generators fixed (the derivation squares to zero on each generator, so the
// exponential is exactly this translation).
LinOp xy_transfer_exp(const std::function<FieldElem(int)>& c);

// Scale every term by scale(x_degree, y_degree). Multiplicative scale
// functions give algebra automorphisms (degree gradings exponentiated).
LinOp bidegree_scale(const std::function<FieldElem(int, int)>& scale);

// Composition; ops.front() is applied last.
LinOp compose(std::vector<LinOp> ops);

// Apply with a truncation guard: the input must already respect the bound.
MultiSym apply_linop(const LinOp& op, const MultiSym& f, int max_deg);

} // namespace wmp
