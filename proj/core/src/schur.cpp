#include "wmp/schur.hpp"

#include <algorithm>
#include <stdexcept>

#include "wmp/characters.hpp"
#include "wmp/maya.hpp"

namespace wmp {

MultiSym schur_powersum(const Partition& lam, int l, int color, Alphabet a) {
  if (color < 0 || color >= l) throw std::invalid_argument("schur: color out of range");
  MultiSym r(l);
  for (const Partition& rho : all_partitions(lam.size())) {
    const Rational chi = sym_character(lam, rho);
    if (chi == 0) continue;
    Monomial m;
    m.reserve(rho.num_parts());
    for (int part : rho.parts()) m.push_back(Gen{a, color, part});
    std::sort(m.begin(), m.end());
    r.add_term(m, FieldElem(chi / z_factor(rho)));
  }
  return r;
}

MultiSym multi_schur(const std::vector<Partition>& tuple, int l, Alphabet a) {
  if (static_cast<int>(tuple.size()) != l)
    throw std::invalid_argument("schur: tuple component count differs from color count");
  MultiSym r = MultiSym::one(l);
  for (int i = 0; i < l; ++i) r *= schur_powersum(tuple[i], l, i, a);
  return r;
}

MultiSym vec_schur(const Partition& lam, int l, Alphabet a) {
  return multi_schur(core_quotient(lam, l).quotient, l, a);
}

std::vector<std::vector<Partition>> all_tuples(int l, int n) {
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> current(l);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == l - 1) {
      for (const Partition& p : all_partitions(remaining)) {
        current[i] = p;
        out.push_back(current);
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k)
      for (const Partition& p : all_partitions(k)) {
        current[i] = p;
        self(self, i + 1, remaining - k);
      }
  };
  if (l >= 1) rec(rec, 0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::vector<Partition>, FieldElem> to_multischur_coeffs(const MultiSym& f) {
  if (f.max_x_degree() > 0 && f.max_y_degree() > 0)
    throw std::invalid_argument("schur: multi-Schur expansion needs a single alphabet");
  const int l = f.l();
  std::map<std::vector<Partition>, FieldElem> out;
  for (const auto& [mono, c] : f.terms()) {
    std::vector<std::vector<int>> deg(l);
    for (const Gen& g : mono) deg[g.color].push_back(g.degree);
    std::vector<Partition> rho(l);
    for (int i = 0; i < l; ++i) {
      std::sort(deg[i].rbegin(), deg[i].rend());
      rho[i] = Partition(deg[i]);
    }
    std::vector<std::vector<Partition>> choices(l);
    for (int i = 0; i < l; ++i) choices[i] = all_partitions(rho[i].size());
    std::vector<int> idx(l, 0);
    while (true) {
      Rational prod(1);
      std::vector<Partition> tuple(l);
      bool vanished = false;
      for (int i = 0; i < l && !vanished; ++i) {
        tuple[i] = choices[i][idx[i]];
        const Rational chi = sym_character(tuple[i], rho[i]);
        if (chi == 0) vanished = true;
        else prod *= chi;
      }
      if (!vanished) {
        const FieldElem add = FieldElem(prod) * c;
        auto [it, inserted] = out.emplace(tuple, add);
        if (!inserted) it->second += add;
      }
      int p = l - 1;
      while (p >= 0 && ++idx[p] == static_cast<int>(choices[p].size())) {
        idx[p] = 0;
        --p;
      }
      if (p < 0) break;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

} // namespace wmp
