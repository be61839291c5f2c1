#include "wmp/wreath.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>

#include "wmp/maya.hpp"
#include "wmp/vertex.hpp"

namespace wmp {

void CheckReport::mismatch(const std::string& where, const std::string& got,
                           const std::string& expected) {
  failures.push_back(CheckFailure{where, got, expected});
}

void report_diff(CheckReport& rep, const std::string& where, const MultiSym& got,
                 const MultiSym& want) {
  const MultiSym diff = got - want;
  for (const auto& [mono, c] : diff.terms()) {
    (void)c;
    rep.mismatch(where + " coefficient of " + monomial_to_string(mono),
                 field_to_string(got.coeff(mono)), field_to_string(want.coeff(mono)));
  }
}

FieldElem wreath_norm(const Partition& lam, int l) {
  if (l < 1) throw std::invalid_argument("wreath: l must be positive");
  FieldElem r = FieldElem::one();
  for (const Box& box : lam.boxes()) {
    const BoxStats st = box_stats(lam, box);
    if (st.hook % l != 0) continue;
    r *= (FieldElem::one() -
          FieldElem::var_pow(Var::t1, st.leg + 1) * FieldElem::var_pow(Var::t2, -st.arm)) *
         (FieldElem::one() -
          FieldElem::var_pow(Var::t1, -st.leg) * FieldElem::var_pow(Var::t2, st.arm + 1));
  }
  return r;
}

namespace {

std::vector<Partition> normalization_tuple(int l, int degree) {
  std::vector<Partition> t0(static_cast<size_t>(l));
  if (degree > 0) t0[0] = Partition(std::vector<int>{degree});
  return t0;
}

struct Block {
  int l = 1;
  Partition core;
  int size = 0;
  int degree = 0;
  std::vector<Partition> members;              // ascending lex
  std::vector<std::vector<Partition>> tuples;  // all tuples of total size degree
  std::vector<int> quot_index;                 // member index -> tuple index
  std::map<Partition, WreathRecord> records;
};

using PolyRow = std::vector<MPoly>;

// Scale each entry to a polynomial: multiply by lcm(denominators)/own
// denominator when all denominators are monomials, else by the product of
// the others. Exact either way, so the row spans the same constraint.
PolyRow cleared_row(const std::vector<FieldElem>& row) {
  bool monomial_dens = true;
  for (const auto& e : row)
    if (e.den().num_terms() > 1) {
      monomial_dens = false;
      break;
    }
  PolyRow out(row.size());
  if (monomial_dens) {
    ExpVec lcm{};
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      const ExpVec d = e.den().leading().first;
      for (int v = 0; v < kNumVars; ++v) lcm[v] = std::max(lcm[v], d[v]);
    }
    for (size_t i = 0; i < row.size(); ++i) {
      if (row[i].is_zero()) continue;
      const auto [dexp, dcoef] = row[i].den().leading();
      ExpVec shift{};
      for (int v = 0; v < kNumVars; ++v) shift[v] = lcm[v] - dexp[v];
      out[i] = row[i].num() * MPoly::monomial(shift, Rational(1) / dcoef);
    }
    return out;
  }
  MPoly total(Rational(1));
  for (const auto& e : row) total *= e.den();
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i].is_zero()) continue;
    auto q = try_exact_divide(total, row[i].den());
    if (!q) throw std::logic_error("wreath: denominator does not divide the row multiplier");
    out[i] = row[i].num() * *q;
  }
  return out;
}

// Fraction-free elimination: every update divides exactly by the previous
// pivot. Pivots chosen over all remaining rows and unused columns by lowest
// (total degree, term count). Returns the pivot column per processed row.
std::vector<int> fraction_free_echelon(std::vector<PolyRow>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivots;
  std::vector<bool> used(static_cast<size_t>(cols), false);
  MPoly prev(Rational(1));
  for (int r = 0; r < rows; ++r) {
    int bi = -1;
    int bj = -1;
    std::pair<int, int> best{0, 0};
    for (int i = r; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (used[j] || m[i][j].is_zero()) continue;
        const std::pair<int, int> score{m[i][j].total_degree(), m[i][j].num_terms()};
        if (bi < 0 || score < best) {
          bi = i;
          bj = j;
          best = score;
        }
      }
    if (bi < 0) break;
    std::swap(m[r], m[bi]);
    used[bj] = true;
    pivots.push_back(bj);
    const MPoly piv = m[r][bj];
    for (int i = r + 1; i < rows; ++i) {
      const MPoly lead = m[i][bj];
      for (int j = 0; j < cols; ++j) {
        MPoly num = m[i][j] * piv - lead * m[r][j];
        if (num.is_zero()) {
          m[i][j] = MPoly();
          continue;
        }
        auto q = try_exact_divide(num, prev);
        if (!q) throw std::logic_error("wreath: fraction-free step divided inexactly");
        m[i][j] = std::move(*q);
      }
    }
    prev = piv;
  }
  return pivots;
}

// One-dimensional kernel of the echelon matrix, computed in the polynomial
// ring. Pinning the free coordinate to the last pivot (a maximal minor of
// the original matrix) scales the whole kernel vector to signed maximal
// minors, so every back-substitution divides exactly and no fractions are
// ever formed. Rows have zeros under every earlier pivot column, so only
// known coordinates enter each step.
std::vector<MPoly> kernel_vector(const std::vector<PolyRow>& m,
                                 const std::vector<int>& pivots, int cols) {
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : pivots) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  const int rank = static_cast<int>(pivots.size());
  std::vector<MPoly> y(static_cast<size_t>(cols));
  y[free_col] = rank == 0 ? MPoly(Rational(1)) : m[rank - 1][pivots[rank - 1]];
  for (int r = rank - 1; r >= 0; --r) {
    MPoly acc;
    for (int c = 0; c < cols; ++c) {
      if (c == pivots[r] || m[r][c].is_zero() || y[c].is_zero()) continue;
      acc += m[r][c] * y[c];
    }
    auto q = try_exact_divide(-acc, m[r][pivots[r]]);
    if (!q) throw std::logic_error("wreath: back-substitution divided inexactly");
    y[pivots[r]] = std::move(*q);
  }
  return y;
}

// Re-derive every defining property from the stored element.
std::vector<CheckFailure> record_failures(const Block& block, const WreathRecord& rec) {
  std::vector<CheckFailure> fails;
  const std::string tag = "lambda=" + rec.lambda.to_string();
  const auto up = to_multischur_coeffs(gamma(rec.h, FieldElem::variable(Var::t1)));
  const auto down = to_multischur_coeffs(gamma(rec.h, FieldElem::var_pow(Var::t2, -1)));
  for (size_t ri = 0; ri < block.members.size(); ++ri) {
    const Partition& rho = block.members[ri];
    const auto& tup = block.tuples[block.quot_index[ri]];
    if (!dominance_leq(rec.lambda, rho)) {
      auto it = up.find(tup);
      if (it != up.end() && !it->second.is_zero())
        fails.push_back({tag + " raising support at rho=" + rho.to_string(),
                         field_to_string(it->second), "(0)/(1)"});
    }
    if (!dominance_leq(rho, rec.lambda)) {
      auto it = down.find(tup);
      if (it != down.end() && !it->second.is_zero())
        fails.push_back({tag + " lowering support at rho=" + rho.to_string(),
                         field_to_string(it->second), "(0)/(1)"});
    }
  }
  const auto t0 = normalization_tuple(block.l, block.degree);
  const auto it = rec.tuple_coeffs.find(t0);
  const FieldElem c0 = it == rec.tuple_coeffs.end() ? FieldElem::zero() : it->second;
  if (!field_eq(c0, FieldElem::one()))
    fails.push_back({tag + " normalizing coefficient", field_to_string(c0), "(1)/(1)"});
  if (!rec.h.is_homogeneous(block.degree, 0))
    fails.push_back({tag + " homogeneity", "mixed degrees",
                     "pure degree " + std::to_string(block.degree)});
  return fails;
}

std::unique_ptr<Block> solve_block(int l, const Partition& core, int size) {
  auto block = std::make_unique<Block>();
  block->l = l;
  block->core = core;
  block->size = size;
  block->members = enumerate_with_core(size, l, core);
  if (block->members.empty()) return block;
  block->degree = (size - core.size()) / l;
  block->tuples = all_tuples(l, block->degree);
  const int n = static_cast<int>(block->tuples.size());
  const std::string where =
      "block l=" + std::to_string(l) + " core=(" + core.to_string() + ") size=" +
      std::to_string(size);
  if (static_cast<int>(block->members.size()) != n)
    throw ConventionMismatch(where + ": member count " +
                             std::to_string(block->members.size()) +
                             " differs from tuple count " + std::to_string(n));
  std::map<std::vector<Partition>, int> tuple_index;
  for (int t = 0; t < n; ++t) tuple_index[block->tuples[t]] = t;
  block->quot_index.resize(n);
  for (int i = 0; i < n; ++i)
    block->quot_index[i] = tuple_index.at(core_quotient(block->members[i], l).quotient);

  // Coefficient matrices of the two plethysms on the multi-Schur basis;
  // column t expands the image of basis element t.
  std::vector<MultiSym> basis;
  basis.reserve(static_cast<size_t>(n));
  std::vector<std::vector<FieldElem>> g1(static_cast<size_t>(n),
                                         std::vector<FieldElem>(static_cast<size_t>(n)));
  auto g2 = g1;
  const FieldElem t1 = FieldElem::variable(Var::t1);
  const FieldElem t2inv = FieldElem::var_pow(Var::t2, -1);
  for (int t = 0; t < n; ++t) {
    basis.push_back(multi_schur(block->tuples[t], l));
    for (const auto& [tup, c] : to_multischur_coeffs(gamma(basis[t], t1)))
      g1[tuple_index.at(tup)][t] = c;
    for (const auto& [tup, c] : to_multischur_coeffs(gamma(basis[t], t2inv)))
      g2[tuple_index.at(tup)][t] = c;
  }
  const int norm_idx = tuple_index.at(normalization_tuple(l, block->degree));

  const bool trace = std::getenv("WMP_TRACE") != nullptr;
  for (int k = 0; k < n; ++k) {
    const Partition& lam = block->members[k];
    const auto start = std::chrono::steady_clock::now();
    // Members are ascending lex and dominance refines lex, so every member
    // strictly before lam is outside its lower order ideal and every member
    // strictly after is outside its upper one. Those n-1 rows already cut
    // the solution space down to the line through the block element when
    // they are independent; the full row set is the fallback.
    auto build_rows = [&](bool relaxed) {
      std::vector<PolyRow> mat;
      for (int ri = 0; ri < n; ++ri) {
        const Partition& rho = block->members[ri];
        const bool raising = relaxed ? ri < k : !dominance_leq(lam, rho);
        const bool lowering = relaxed ? ri > k : !dominance_leq(rho, lam);
        if (raising) mat.push_back(cleared_row(g1[block->quot_index[ri]]));
        if (lowering) mat.push_back(cleared_row(g2[block->quot_index[ri]]));
      }
      return mat;
    };
    std::vector<PolyRow> mat = build_rows(true);
    std::vector<int> pivots = fraction_free_echelon(mat);
    if (n - static_cast<int>(pivots.size()) != 1) {
      mat = build_rows(false);
      pivots = fraction_free_echelon(mat);
    }
    const int nullity = n - static_cast<int>(pivots.size());
    if (nullity != 1)
      throw ConventionMismatch(where + " lambda=" + lam.to_string() +
                               ": solution space has dimension " + std::to_string(nullity));
    const std::vector<MPoly> y = kernel_vector(mat, pivots, n);
    if (y[norm_idx].is_zero())
      throw ConventionMismatch(where + " lambda=" + lam.to_string() +
                               ": normalizing coefficient vanishes");
    WreathRecord rec;
    rec.l = l;
    rec.lambda = lam;
    rec.core = core;
    rec.degree = block->degree;
    rec.h = MultiSym::zero(l);
    for (int t = 0; t < n; ++t) {
      if (y[t].is_zero()) continue;
      // Construction collapses this ratio of minors to a polynomial
      // whenever the division is exact.
      const FieldElem c(y[t], y[norm_idx]);
      rec.tuple_coeffs[block->tuples[t]] = c;
      rec.h += basis[t].scaled(c);
    }
    rec.norm = wreath_norm(lam, l);
    const auto fails = record_failures(*block, rec);
    if (!fails.empty())
      throw ConventionMismatch(where + " " + fails.front().where +
                               ": solved element failed re-verification, got " +
                               fails.front().got + ", expected " + fails.front().expected);
    block->records.emplace(lam, std::move(rec));
    if (trace) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      std::cerr << "wmp: " << where << " lambda=" << lam.to_string() << " rows="
                << mat.size() << " ms=" << ms << "\n";
    }
  }
  return block;
}

struct BlockEntry {
  std::once_flag flag;
  std::unique_ptr<Block> block;
};

using BlockKey = std::tuple<int, std::vector<int>, int>;

std::mutex cache_mutex;

std::map<BlockKey, std::shared_ptr<BlockEntry>>& block_cache() {
  static std::map<BlockKey, std::shared_ptr<BlockEntry>> cache;
  return cache;
}

// Blocks solve once under a per-entry flag; a failed solve leaves the flag
// unset so a later call retries instead of dereferencing a null block.
const Block& get_block(int l, const Partition& core, int size) {
  std::shared_ptr<BlockEntry> entry;
  {
    const std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = block_cache()[BlockKey{l, core.parts(), size}];
    if (!slot) slot = std::make_shared<BlockEntry>();
    entry = slot;
  }
  std::call_once(entry->flag, [&] { entry->block = solve_block(l, core, size); });
  return *entry->block;
}

FieldElem minus_u_pow(int k) {
  return (-FieldElem::variable(Var::u)).pow(k);
}

// 1 / (n (1 - t1^(nl)) (1 - t2^(nl))).
FieldElem kernel_weight(int l, int n) {
  const FieldElem one = FieldElem::one();
  return (FieldElem::from_int(n) * (one - FieldElem::var_pow(Var::t1, n * l)) *
          (one - FieldElem::var_pow(Var::t2, n * l)))
      .inverse();
}

} // namespace

const WreathRecord& wreath_h(const Partition& lam, int l) {
  if (l < 1) throw std::invalid_argument("wreath: l must be positive");
  const Block& block = get_block(l, l_core(lam, l), lam.size());
  const auto it = block.records.find(lam);
  if (it == block.records.end())
    throw std::logic_error("wreath: partition missing from its own block");
  return it->second;
}

MultiSym wreath_dual(const Partition& lam, int l) {
  return endo_inv(endo_swap(wreath_h(lam.transpose(), l).h));
}

CheckReport verify_axioms(int l, int max_size) {
  CheckReport rep;
  rep.check = "axioms";
  rep.params = "l=" + std::to_string(l) + " max_size=" + std::to_string(max_size);
  for (int size = 0; size <= max_size; ++size) {
    if (size % l != 0) continue;
    const Block& block = get_block(l, Partition(), size);
    for (const auto& [lam, rec] : block.records) {
      (void)lam;
      for (const auto& f : record_failures(block, rec)) rep.failures.push_back(f);
    }
  }
  return rep;
}

CheckReport verify_orthogonality(int l, int size) {
  CheckReport rep;
  rep.check = "orthogonality";
  rep.params = "l=" + std::to_string(l) + " size=" + std::to_string(size);
  const std::vector<Partition> members = enumerate_with_core(size, l, Partition());
  if (members.empty()) return rep;
  const int n = static_cast<int>(members.size());
  const auto tuples = all_tuples(l, size / l);
  if (static_cast<int>(tuples.size()) != n)
    throw std::logic_error("wreath: tuple and member counts differ");
  std::map<std::vector<Partition>, int> tuple_index;
  for (int t = 0; t < n; ++t) tuple_index[tuples[t]] = t;

  // Every requested pairing factors through the multi-Schur basis: with N
  // the coefficient matrix of the elements, Z that of the transformed
  // duals, and G the Gram matrix of the basis itself, the pairing table is
  // N G Z^T up to clearing factors. G is cheap because the basis has
  // constant coefficients, and the heavy coefficient products then happen
  // once per matrix entry instead of once per power-sum monomial.
  const bool trace = std::getenv("WMP_TRACE") != nullptr;
  auto setup_mark = std::chrono::steady_clock::now();
  auto setup_trace = [&](const char* stage) {
    if (!trace) return;
    const auto now = std::chrono::steady_clock::now();
    std::cerr << "wmp: orthogonality l=" << l << " size=" << size << " " << stage
              << " ms="
              << std::chrono::duration_cast<std::chrono::milliseconds>(now - setup_mark)
                     .count()
              << "\n";
    setup_mark = now;
  };
  std::map<Partition, int> member_index;
  for (int i = 0; i < n; ++i) member_index[members[i]] = i;
  // Some stored coefficients are genuine fractions, and sums of fractions
  // with distinct denominators compound badly. Each row is cleared up front
  // by a common multiple D of its denominators, so the table is built from
  // polynomial products only and D divides back out once per entry.
  std::vector<std::vector<MPoly>> N(static_cast<size_t>(n),
                                    std::vector<MPoly>(static_cast<size_t>(n)));
  std::vector<MPoly> D(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<FieldElem> row(static_cast<size_t>(n));
    for (const auto& [tup, c] : wreath_h(members[i], l).tuple_coeffs)
      row[tuple_index.at(tup)] = c;
    MPoly d(Rational(1));
    for (int t = 0; t < n; ++t) {
      const MPoly& dt = row[t].den();
      if (!dt.is_constant() && !try_exact_divide(d, dt)) d = d * dt;
    }
    D[i] = d;
    for (int t = 0; t < n; ++t) {
      if (row[t].is_zero()) continue;
      auto q = try_exact_divide(d, row[t].den());
      if (!q) throw std::logic_error("wreath: denominator clearing failed");
      N[i][t] = row[t].num() * *q;
    }
  }
  setup_trace("elements");
  // The dual of a member is its transpose's element with coefficients twisted
  // by t1 -> 1/t2, t2 -> 1/t1; the twist fixes the constant-coefficient
  // basis. One shared monomial clears the twisted row back to polynomials
  // and cancels between numerators and clearing factor, so row j of the dual
  // coefficient matrix is Z[j] / ZD[j].
  const int vt1 = static_cast<int>(Var::t1), vt2 = static_cast<int>(Var::t2);
  std::vector<std::vector<MPoly>> Z = N;
  std::vector<MPoly> ZD(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int jt = member_index.at(members[j].transpose());
    int m1 = 0, m2 = 0;
    auto scan = [&](const MPoly& p) {
      for (const auto& [e, c] : p.terms()) {
        m1 = std::max(m1, e[vt2]);
        m2 = std::max(m2, e[vt1]);
      }
    };
    for (int t = 0; t < n; ++t) scan(N[jt][t]);
    scan(D[jt]);
    auto twist_cleared = [&](const MPoly& p) {
      MPoly r;
      for (const auto& [e, c] : p.terms()) {
        ExpVec e2 = e;
        e2[vt1] = m1 - e[vt2];
        e2[vt2] = m2 - e[vt1];
        r.add_term(e2, c);
      }
      return r;
    };
    for (int t = 0; t < n; ++t) Z[j][t] = twist_cleared(N[jt][t]);
    ZD[j] = twist_cleared(D[jt]);
  }
  setup_trace("duals");
  std::vector<std::vector<FieldElem>> G(static_cast<size_t>(n),
                                        std::vector<FieldElem>(static_cast<size_t>(n)));
  {
    std::vector<MultiSym> images;
    images.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t)
      images.push_back(wreath_pairing_image(multi_schur(tuples[t], l)));
    for (int s = 0; s < n; ++s) {
      const MultiSym left = multi_schur(tuples[s], l);
      for (int t = 0; t < n; ++t) G[s][t] = hall_pairing(left, images[t]);
    }
  }
  setup_trace("gram");
  std::vector<std::vector<FieldElem>> W(static_cast<size_t>(n),
                                        std::vector<FieldElem>(static_cast<size_t>(n)));
  for (int s = 0; s < n; ++s)
    for (int j = 0; j < n; ++j) {
      FieldElem acc;
      for (int t = 0; t < n; ++t) {
        if (G[s][t].is_zero() || Z[j][t].is_zero()) continue;
        acc += G[s][t] * FieldElem::from_poly(Z[j][t]);
      }
      W[s][j] = acc;
    }
  setup_trace("gram by duals");
  for (int i = 0; i < n; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const FieldElem scale_i = FieldElem::from_poly(D[i]);
    const FieldElem& norm = wreath_h(members[i], l).norm;
    for (int j = 0; j < n; ++j) {
      FieldElem acc;
      for (int s = 0; s < n; ++s) {
        if (N[i][s].is_zero() || W[s][j].is_zero()) continue;
        acc += FieldElem::from_poly(N[i][s]) * W[s][j];
      }
      const FieldElem got = acc / (scale_i * FieldElem::from_poly(ZD[j]));
      const FieldElem expected = i == j ? norm : FieldElem::zero();
      if (!field_eq(got, expected))
        rep.mismatch("lambda=" + members[i].to_string() + " mu=" + members[j].to_string(),
                     field_to_string(got), field_to_string(expected));
    }
    if (trace) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      std::cerr << "wmp: orthogonality l=" << l << " size=" << size << " lambda="
                << members[i].to_string() << " ms=" << ms << "\n";
    }
  }
  return rep;
}

MultiSym wreath_cauchy_kernel(int l, int max_deg) {
  MultiSym expo = MultiSym::zero(l);
  for (int n = 1; n <= max_deg; ++n) {
    const FieldElem weight = kernel_weight(l, n);
    for (int i = 0; i < l; ++i)
      for (int m = 0; m < l; ++m) {
        Monomial mono{Gen{Alphabet::X, i, n}, Gen{Alphabet::Y, m, n}};
        expo.add_term(mono, c_coeff(l, i, m, n) * weight);
      }
  }
  return exp_truncated(expo, max_deg);
}

CheckReport verify_schur_cauchy(int l, int max_deg, const Partition& core) {
  CheckReport rep;
  rep.check = "schur-cauchy";
  rep.params = "l=" + std::to_string(l) + " max_deg=" + std::to_string(max_deg) +
               " core=(" + core.to_string() + ")";
  MultiSym lhs = MultiSym::zero(l);
  for (int d = 0; d <= max_deg; ++d)
    for (const Partition& lam : enumerate_with_core(core.size() + l * d, l, core))
      lhs += vec_schur(lam, l, Alphabet::X) * vec_schur(lam, l, Alphabet::Y);
  MultiSym expo = MultiSym::zero(l);
  for (int n = 1; n <= max_deg; ++n) {
    const FieldElem inv_n = FieldElem::from_int(n).inverse();
    for (int i = 0; i < l; ++i)
      expo.add_term(Monomial{Gen{Alphabet::X, i, n}, Gen{Alphabet::Y, i, n}}, inv_n);
  }
  report_diff(rep, "", lhs, exp_truncated(expo, max_deg));
  return rep;
}

CheckReport verify_wreath_cauchy(int l, int max_deg, const Partition& core) {
  CheckReport rep;
  rep.check = "wreath-cauchy";
  rep.params = "l=" + std::to_string(l) + " max_deg=" + std::to_string(max_deg) +
               " core=(" + core.to_string() + ")";
  MultiSym lhs = MultiSym::zero(l);
  for (int d = 0; d <= max_deg; ++d)
    for (const Partition& lam : enumerate_with_core(core.size() + l * d, l, core)) {
      const WreathRecord& rec = wreath_h(lam, l);
      lhs += (rec.h * to_alphabet(wreath_dual(lam, l), Alphabet::Y)).scaled(rec.norm.inverse());
    }
  report_diff(rep, "", lhs, wreath_cauchy_kernel(l, max_deg));
  return rep;
}

std::pair<FieldElem, FieldElem> evaluate_h(const Partition& lam, int l, int m) {
  if (l < 1) throw std::invalid_argument("wreath: l must be positive");
  if (m < 0 || m >= l) throw std::invalid_argument("wreath: residue out of range");
  if (!l_core(lam, l).empty())
    throw std::invalid_argument("wreath: evaluation requires an empty core");
  const WreathRecord& rec = wreath_h(lam, l);
  const MultiSym specialized = rec.h.subst_generators([&](const Gen& g) {
    FieldElem val;
    if (g.color == 0) val += FieldElem::one();
    if (g.color == m) val -= minus_u_pow(g.degree);
    return MultiSym::constant(rec.h.l(), val);
  });
  FieldElem rhs = FieldElem::one();
  for (const Box& box : lam.boxes()) {
    if (((box.a - box.b) % l + l) % l != m) continue;
    rhs *= FieldElem::one() + FieldElem::variable(Var::u) *
                                  FieldElem::var_pow(Var::t1, box.b - 1) *
                                  FieldElem::var_pow(Var::t2, box.a - 1);
  }
  return {specialized.coeff(Monomial{}), rhs};
}

CheckReport verify_evaluation(int l, int max_size) {
  CheckReport rep;
  rep.check = "evaluation";
  rep.params = "l=" + std::to_string(l) + " max_size=" + std::to_string(max_size);
  for (int size = 0; size <= max_size; ++size) {
    if (size % l != 0) continue;
    for (const Partition& lam : enumerate_with_core(size, l, Partition()))
      for (int m = 0; m < l; ++m) {
        const auto [lhs, rhs] = evaluate_h(lam, l, m);
        if (!field_eq(lhs, rhs))
          rep.mismatch("lambda=" + lam.to_string() + " m=" + std::to_string(m),
                       field_to_string(lhs), field_to_string(rhs));
      }
  }
  return rep;
}

CheckReport verify_classical_generating(int l, int m, int max_deg) {
  if (m < 0 || m >= l) throw std::invalid_argument("wreath: residue out of range");
  CheckReport rep;
  rep.check = "classical-generating";
  rep.params = "l=" + std::to_string(l) + " m=" + std::to_string(m) +
               " max_deg=" + std::to_string(max_deg);
  MultiSym lhs = MultiSym::zero(l);
  for (int d = 0; d <= max_deg; ++d)
    for (const Partition& lam : enumerate_with_core(l * d, l, Partition())) {
      const WreathRecord& rec = wreath_h(lam, l);
      lhs += rec.h.scaled(rec.norm.inverse() *
                          classical_descendant(lam, (l - m) % l, l));
    }
  MultiSym expo = MultiSym::zero(l);
  for (int n = 1; n <= max_deg; ++n) {
    const FieldElem weight = kernel_weight(l, n);
    for (int i = 0; i < l; ++i)
      expo.add_term(Monomial{Gen{Alphabet::X, i, n}},
                    (c_coeff(l, i, 0, n) - c_coeff(l, i, m, n) * minus_u_pow(n)) * weight);
  }
  report_diff(rep, "", lhs, exp_truncated(expo, max_deg));
  return rep;
}

} // namespace wmp
