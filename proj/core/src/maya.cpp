#include "wmp/maya.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wmp {

namespace {

// Build a diagram from "every position < floor is occupied, and the occupied
// positions >= floor are exactly occ".
MayaDiagram make_maya(int floor, const std::set<int>& occ) {
  for (int p : occ)
    if (p < floor) throw std::logic_error("maya: occupied position below floor");
  int white_neg = 0;
  for (int k = floor; k < 0; ++k)
    if (!occ.count(k)) ++white_neg;
  int occ_nonneg = 0;
  for (int p : occ)
    if (p >= 0) ++occ_nonneg;
  MayaDiagram m;
  m.charge = white_neg - occ_nonneg;
  int hi = std::max(-m.charge - 1, occ.empty() ? floor : *occ.rbegin());
  int lo = std::min(floor, -m.charge);
  for (int k = lo; k <= hi; ++k) {
    bool is_occ = k < floor || occ.count(k) > 0;
    bool vac_occ = k < -m.charge;
    if (is_occ != vac_occ) m.deviations.insert(k);
  }
  return m;
}

// Finite window view: all positions < first are occupied; occ lists the
// occupied positions >= first.
struct Window {
  int floor;
  std::set<int> occ;
};

Window window_of(const MayaDiagram& m) {
  Window w;
  w.floor = -m.charge;
  if (!m.deviations.empty()) w.floor = std::min(w.floor, *m.deviations.begin());
  int hi = std::max(-m.charge - 1,
                    m.deviations.empty() ? w.floor : *m.deviations.rbegin());
  for (int k = w.floor; k <= hi; ++k)
    if (m.occupied(k)) w.occ.insert(k);
  return w;
}

} // namespace

int recompute_charge(const MayaDiagram& m) {
  Window w = window_of(m);
  int white_neg = 0;
  for (int k = w.floor; k < 0; ++k)
    if (!w.occ.count(k)) ++white_neg;
  int occ_nonneg = 0;
  for (int p : w.occ)
    if (p >= 0) ++occ_nonneg;
  return white_neg - occ_nonneg;
}

MayaDiagram maya_from_partition(const Partition& lam) {
  Partition lt = lam.transpose();
  int len = lt.num_parts();
  std::set<int> occ;
  for (int b = 1; b <= len; ++b) occ.insert(lt.part(b) - b);
  return make_maya(-len, occ);
}

Partition partition_from_maya(const MayaDiagram& m) {
  if (m.charge != 0)
    throw std::invalid_argument("partition_from_maya: diagram has charge " +
                                std::to_string(m.charge) + ", expected 0");
  Window w = window_of(m);
  std::vector<int> desc(w.occ.rbegin(), w.occ.rend());
  std::vector<int> lt_parts;
  int b = 0;
  for (int pos : desc) {
    ++b;
    int part = pos + b;
    if (part < 0) throw std::logic_error("partition_from_maya: negative part");
    lt_parts.push_back(part);
  }
  // Positions below the floor continue consecutively; charge 0 forces the
  // corresponding parts to be exactly 0.
  if (w.floor + static_cast<int>(desc.size()) != 0)
    throw std::logic_error("partition_from_maya: charge bookkeeping failed");
  while (!lt_parts.empty() && lt_parts.back() == 0) lt_parts.pop_back();
  return Partition(lt_parts).transpose();
}

MayaDiagram maya_shift_to_zero(const MayaDiagram& m) {
  Window w = window_of(m);
  std::set<int> occ;
  for (int p : w.occ) occ.insert(p + m.charge);
  return make_maya(w.floor + m.charge, occ);
}

std::vector<MayaDiagram> maya_slices(const MayaDiagram& m, int l) {
  if (l < 1) throw std::invalid_argument("maya_slices: l must be >= 1");
  Window w = window_of(m);
  // Global floor F: every position < F occupied. Slice i floor: smallest k
  // with i + kl >= F.
  std::vector<MayaDiagram> out;
  for (int i = 0; i < l; ++i) {
    int kfloor = w.floor - i;
    kfloor = kfloor >= 0 ? (kfloor + l - 1) / l : -((-kfloor) / l);
    std::set<int> occ;
    for (int p : w.occ)
      if (((p - i) % l + l) % l == 0) occ.insert((p - i) >= 0 ? (p - i) / l
                                                             : -((i - p) / l));
    out.push_back(make_maya(kfloor, occ));
  }
  return out;
}

MayaDiagram maya_assemble(const std::vector<MayaDiagram>& slices) {
  int l = static_cast<int>(slices.size());
  if (l < 1) throw std::invalid_argument("maya_assemble: no slices");
  std::vector<Window> ws;
  for (const auto& s : slices) ws.push_back(window_of(s));
  int floor = 0;
  for (int i = 0; i < l; ++i) floor = std::min(floor, i + ws[i].floor * l);
  std::set<int> occ;
  for (int i = 0; i < l; ++i) {
    // Positions below the slice floor are occupied; include those >= floor.
    for (int k = ws[i].floor - 1; i + k * l >= floor; --k) occ.insert(i + k * l);
    for (int k : ws[i].occ) occ.insert(i + k * l);
  }
  return make_maya(floor, occ);
}

CoreQuotient core_quotient(const Partition& lam, int l) {
  if (l < 1) throw std::invalid_argument("core_quotient: l must be >= 1");
  MayaDiagram m = maya_from_partition(lam);
  std::vector<MayaDiagram> slices = maya_slices(m, l);
  CoreQuotient cq;
  cq.l = l;
  std::vector<MayaDiagram> vacua;
  for (const auto& s : slices) {
    cq.quotient.push_back(partition_from_maya(maya_shift_to_zero(s)));
    MayaDiagram v;
    v.charge = s.charge;
    vacua.push_back(v);
  }
  cq.core = partition_from_maya(maya_assemble(vacua));
  return cq;
}

Partition from_core_quotient(const CoreQuotient& cq) {
  if (cq.l < 1) throw std::invalid_argument("from_core_quotient: l must be >= 1");
  if (static_cast<int>(cq.quotient.size()) != cq.l)
    throw std::invalid_argument("from_core_quotient: expected " + std::to_string(cq.l) +
                                " quotient components");
  if (!is_l_core(cq.core, cq.l))
    throw std::invalid_argument("from_core_quotient: \"" + cq.core.to_string() +
                                "\" is not a " + std::to_string(cq.l) + "-core");
  MayaDiagram mcore = maya_from_partition(cq.core);
  std::vector<MayaDiagram> slices = maya_slices(mcore, cq.l);
  std::vector<MayaDiagram> out;
  for (int i = 0; i < cq.l; ++i) {
    MayaDiagram comp = maya_from_partition(cq.quotient[i]);
    // Recharge the component to the slice's charge: occupied positions shift
    // by -charge.
    Window w = window_of(comp);
    std::set<int> occ;
    for (int p : w.occ) occ.insert(p - slices[i].charge);
    out.push_back(make_maya(w.floor - slices[i].charge, occ));
  }
  return partition_from_maya(maya_assemble(out));
}

Partition l_core(const Partition& lam, int l) { return core_quotient(lam, l).core; }

bool is_l_core(const Partition& lam, int l) {
  CoreQuotient cq = core_quotient(lam, l);
  for (const auto& q : cq.quotient)
    if (!q.empty()) return false;
  return true;
}

std::vector<int> core_to_root(const Partition& core, int l) {
  if (l < 1) throw std::invalid_argument("core_to_root: l must be >= 1");
  if (!is_l_core(core, l))
    throw std::invalid_argument("core_to_root: input is not an l-core");
  std::vector<int> counts(l, 0);
  for (const Box& box : core.boxes()) ++counts[((box.a - box.b) % l + l) % l];
  std::vector<int> coeffs;
  for (int i = 1; i < l; ++i) coeffs.push_back(counts[i] - counts[0]);
  return coeffs;
}

std::vector<Partition> enumerate_with_core(int n, int l, const Partition& core) {
  if (n < 0) throw std::invalid_argument("enumerate_with_core: negative size");
  if (l < 1) throw std::invalid_argument("enumerate_with_core: l must be >= 1");
  std::vector<Partition> out;
  if ((n - core.size()) % l != 0 || n < core.size()) return out;
  for (const Partition& lam : all_partitions(n))
    if (l_core(lam, l) == core) out.push_back(lam);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Partition>> fixed_points(const std::vector<int>& v,
                                                 const std::vector<int>& w, int l) {
  if (l < 1) throw std::invalid_argument("fixed_points: l must be >= 1");
  if (static_cast<int>(v.size()) != l || static_cast<int>(w.size()) != l)
    throw std::invalid_argument("fixed_points: v and w must have length l");
  for (int x : v)
    if (x < 0) throw std::invalid_argument("fixed_points: negative dimension");
  for (int x : w)
    if (x < 0) throw std::invalid_argument("fixed_points: negative framing");
  std::vector<int> shifts;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < w[i]; ++j) shifts.push_back(i);
  int total = 0;
  for (int x : v) total += x;

  auto residue_counts = [&](const Partition& lam, int shift) {
    std::vector<int> c(l, 0);
    for (const Box& box : lam.boxes()) ++c[((box.a - box.b + shift) % l + l) % l];
    return c;
  };

  std::vector<std::vector<Partition>> result;
  std::vector<Partition> acc;
  std::vector<int> remaining = v;
  int remaining_total = total;

  auto feasible = [&](const std::vector<int>& r) {
    for (int x : r)
      if (x < 0) return false;
    return true;
  };

  std::function<void(size_t)> rec = [&](size_t slot) {
    if (slot == shifts.size()) {
      if (remaining_total == 0) result.push_back(acc);
      return;
    }
    for (int sz = 0; sz <= remaining_total; ++sz) {
      for (const Partition& lam : all_partitions(sz)) {
        std::vector<int> c = residue_counts(lam, shifts[slot]);
        std::vector<int> next = remaining;
        for (int r = 0; r < l; ++r) next[r] -= c[r];
        if (!feasible(next)) continue;
        acc.push_back(lam);
        std::swap(remaining, next);
        remaining_total -= sz;
        rec(slot + 1);
        remaining_total += sz;
        std::swap(remaining, next);
        acc.pop_back();
      }
    }
  };
  if (shifts.empty()) {
    if (remaining_total == 0) result.push_back({});
    return result;
  }
  rec(0);
  std::sort(result.begin(), result.end());
  return result;
}

} // namespace wmp
