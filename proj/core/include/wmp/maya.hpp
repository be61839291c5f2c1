#pragma once

#include <set>
#include <vector>

#include "wmp/partition.hpp"

namespace wmp {

// Bead configuration on Z, eventually occupied to the left and empty to the
// right. Stored as a charge plus the finite set of positions where the
// configuration differs from that charge's vacuum. The vacuum of charge c
// occupies exactly the positions k < -c, so charge(vacuum of charge c) = c
// under the counting below.
struct MayaDiagram {
  int charge = 0; // #(white negative positions) - #(occupied nonnegative positions)
  std::set<int> deviations;

  bool occupied(int pos) const {
    return (pos < -charge) != (deviations.count(pos) > 0);
  }
  friend auto operator<=>(const MayaDiagram&, const MayaDiagram&) = default;
};

// Recount the charge from bead positions; always equals the charge field for
// diagrams built by this module.
int recompute_charge(const MayaDiagram& m);

// Beads sit at {lam'_b - b : b >= 1}; the empty partition maps to the charge-0
// vacuum.
MayaDiagram maya_from_partition(const Partition& lam);

// Inverse of maya_from_partition; the diagram must have charge 0.
Partition partition_from_maya(const MayaDiagram& m);

// k -> m(k - charge): recenters to charge 0.
MayaDiagram maya_shift_to_zero(const MayaDiagram& m);

// Slice i reads positions i, i+l, i+2l, ... as a Maya diagram in k.
std::vector<MayaDiagram> maya_slices(const MayaDiagram& m, int l);
MayaDiagram maya_assemble(const std::vector<MayaDiagram>& slices);

struct CoreQuotient {
  int l = 1;
  Partition core;
  std::vector<Partition> quotient; // l components
  friend auto operator<=>(const CoreQuotient&, const CoreQuotient&) = default;
};

CoreQuotient core_quotient(const Partition& lam, int l);
// Inverse; throws if cq.core is not an l-core or the component count is wrong.
Partition from_core_quotient(const CoreQuotient& cq);

Partition l_core(const Partition& lam, int l);
bool is_l_core(const Partition& lam, int l);

// Coefficients over the simple roots 1..l-1 of the residue-count vector of
// the core, after eliminating the affine node: result[i-1] = v_i - v_0 where
// v_r counts boxes of content r mod l.
std::vector<int> core_to_root(const Partition& core, int l);

// All partitions of n with the given l-core, ascending lex on part vectors.
std::vector<Partition> enumerate_with_core(int n, int l, const Partition& core);

// All tuples of partitions (one slot per framing unit: w_0 slots of shift 0,
// then w_1 of shift 1, ...) whose shifted-content residue counts sum to v:
// a box (a,b) in a slot of shift i counts toward residue (a-b+i) mod l.
std::vector<std::vector<Partition>> fixed_points(const std::vector<int>& v,
                                                 const std::vector<int>& w, int l);

} // namespace wmp
