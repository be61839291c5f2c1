#include "wmp/mpoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace wmp {

const std::array<const char*, kNumVars> kVarNames = {"t1", "t2", "h", "u", "w"};

namespace {

ExpVec zero_exp() { return ExpVec{0, 0, 0, 0, 0}; }

ExpVec add_exp(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

bool divides_exp(const ExpVec& a, const ExpVec& b) { // a | b componentwise
  for (int i = 0; i < kNumVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExpVec sub_exp(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
  return r;
}

// Variables appearing in p, as a bitmask, plus per-variable degree bounds.
int var_mask(const std::map<ExpVec, Rational>& terms, std::array<int, kNumVars>& maxexp) {
  int mask = 0;
  for (const auto& [e, c] : terms)
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > 0) {
        mask |= 1 << i;
        maxexp[i] = std::max(maxexp[i], e[i]);
      }
  return mask;
}

constexpr long kDenseSlotCap = 1 << 21;

bool all_integer(const std::map<ExpVec, Rational>& terms) {
  for (const auto& [e, c] : terms)
    if (mpz_cmp_ui(mpq_denref(c.get_mpq_t()), 1) != 0) return false;
  return true;
}

// Moves an integer into a canonical Rational (denominator stays 1).
Rational take_integer(mpz_class& z) {
  Rational r;
  mpz_swap(mpq_numref(r.get_mpq_t()), z.get_mpz_t());
  return r;
}

} // namespace

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace(zero_exp(), c);
}

MPoly MPoly::variable(Var v, int exp) {
  if (exp < 0) throw std::invalid_argument("mpoly: negative exponent");
  MPoly p;
  if (exp == 0) return MPoly(Rational(1));
  ExpVec e = zero_exp();
  e[static_cast<int>(v)] = exp;
  p.terms_.emplace(e, Rational(1));
  return p;
}

MPoly MPoly::monomial(const ExpVec& e, const Rational& c) {
  for (int x : e)
    if (x < 0) throw std::invalid_argument("mpoly: negative exponent");
  MPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == zero_exp() &&
         terms_.begin()->second == 1;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == zero_exp());
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::pair<ExpVec, Rational> MPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("mpoly: leading term of zero");
  return *terms_.rbegin();
}

Rational MPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  // Flat-grid accumulation when the two factors touch at most two variables
  // between them and the product support fits a small rectangle. Elimination
  // work is dominated by such multiplies; the grid replaces one map lookup
  // per product term with an index add. Ascending flat index is ascending
  // lex (v1 < v2), so the result map is built back-to-front with a hint.
  const long work = static_cast<long>(a.terms_.size()) * static_cast<long>(b.terms_.size());
  std::array<int, kNumVars> amax{}, bmax{};
  const int mask = work < 64 ? -1 : var_mask(a.terms_, amax) | var_mask(b.terms_, bmax);
  if (mask >= 0 && std::popcount(static_cast<unsigned>(mask)) <= 2) {
    int v1 = -1, v2 = -1;
    for (int i = 0; i < kNumVars; ++i)
      if (mask & (1 << i)) {
        if (v1 < 0)
          v1 = i;
        else
          v2 = i;
      }
    if (v1 < 0) v1 = 0;
    if (v2 < 0) v2 = (v1 + 1) % kNumVars;
    const long d2 = amax[v2] + bmax[v2];
    const long stride = d2 + 1;
    const long slots = (amax[v1] + bmax[v1] + 1) * stride;
    if (slots <= kDenseSlotCap && slots <= 32 * work) {
      if (all_integer(a.terms_) && all_integer(b.terms_)) {
        // Integer-only coefficients: fused multiply-add with no gcd work.
        std::vector<mpz_class> grid(static_cast<size_t>(slots));
        std::vector<std::pair<long, mpz_srcptr>> bt;
        bt.reserve(b.terms_.size());
        for (const auto& [e, c] : b.terms_)
          bt.emplace_back(e[v1] * stride + e[v2], mpq_numref(c.get_mpq_t()));
        for (const auto& [e, c] : a.terms_) {
          const long base = e[v1] * stride + e[v2];
          const mpz_srcptr ca = mpq_numref(c.get_mpq_t());
          for (const auto& [off, cb] : bt)
            mpz_addmul(grid[static_cast<size_t>(base + off)].get_mpz_t(), ca, cb);
        }
        ExpVec e = zero_exp();
        for (long k = 0; k < slots; ++k) {
          mpz_class& cell = grid[static_cast<size_t>(k)];
          if (mpz_sgn(cell.get_mpz_t()) == 0) continue;
          e[v1] = static_cast<int>(k / stride);
          e[v2] = static_cast<int>(k % stride);
          r.terms_.emplace_hint(r.terms_.end(), e, take_integer(cell));
        }
        return r;
      }
      std::vector<Rational> grid(static_cast<size_t>(slots));
      std::vector<std::pair<long, const Rational*>> bt;
      bt.reserve(b.terms_.size());
      for (const auto& [e, c] : b.terms_)
        bt.emplace_back(e[v1] * stride + e[v2], &c);
      mpq_class tmp;
      for (const auto& [e, c] : a.terms_) {
        const long base = e[v1] * stride + e[v2];
        for (const auto& [off, cb] : bt) {
          mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), cb->get_mpq_t());
          Rational& cell = grid[static_cast<size_t>(base + off)];
          mpq_add(cell.get_mpq_t(), cell.get_mpq_t(), tmp.get_mpq_t());
        }
      }
      ExpVec e = zero_exp();
      for (long k = 0; k < slots; ++k) {
        Rational& cell = grid[static_cast<size_t>(k)];
        if (cell == 0) continue;
        e[v1] = static_cast<int>(k / stride);
        e[v2] = static_cast<int>(k % stride);
        r.terms_.emplace_hint(r.terms_.end(), e, std::move(cell));
      }
      return r;
    }
  }
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
  return r;
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("mpoly: negative power");
  MPoly r(Rational(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

ExpVec MPoly::monomial_content() const {
  if (terms_.empty()) return zero_exp();
  ExpVec m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

MPoly MPoly::divided_by_monomial(const ExpVec& m) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (!divides_exp(m, e)) throw std::logic_error("mpoly: monomial does not divide");
    r.terms_.emplace(sub_exp(e, m), c);
  }
  return r;
}

std::optional<MPoly> try_exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("mpoly: division by zero");
  if (a.is_zero()) return MPoly();
  // Flat-grid long division, mirroring the multiply fast path. The dividend
  // box padded by the divisor's degrees bounds every intermediate remainder
  // seen in practice; a write outside it falls back to the sparse loop.
  std::array<int, kNumVars> amax{}, bmax{};
  const int mask = a.terms_.size() < 64
                       ? -1
                       : var_mask(a.terms_, amax) | var_mask(b.terms_, bmax);
  if (mask >= 0 && std::popcount(static_cast<unsigned>(mask)) <= 2) {
    int v1 = -1, v2 = -1;
    for (int i = 0; i < kNumVars; ++i)
      if (mask & (1 << i)) {
        if (v1 < 0)
          v1 = i;
        else
          v2 = i;
      }
    if (v1 < 0) v1 = 0;
    if (v2 < 0) v2 = (v1 + 1) % kNumVars;
    const long d1 = amax[v1] + bmax[v1];
    const long d2 = amax[v2] + bmax[v2];
    const long stride = d2 + 1;
    const long slots = (d1 + 1) * stride;
    if (slots <= kDenseSlotCap &&
        slots <= 32 * static_cast<long>(a.terms_.size())) {
      bool rational_grid = true;
      if (all_integer(a.terms_) && all_integer(b.terms_)) {
        // Integer-only long division. A quotient coefficient falling outside
        // the integers sends the whole attempt to the rational grid, since
        // the division may still be exact over the rationals.
        rational_grid = false;
        std::vector<mpz_class> rem(static_cast<size_t>(slots));
        for (const auto& [e, c] : a.terms_)
          mpz_set(rem[e[v1] * stride + e[v2]].get_mpz_t(), mpq_numref(c.get_mpq_t()));
        struct ZTerm {
          int e1, e2;
          mpz_srcptr c;
        };
        std::vector<ZTerm> bt;
        bt.reserve(b.terms_.size());
        for (const auto& [e, c] : b.terms_)
          bt.push_back({e[v1], e[v2], mpq_numref(c.get_mpq_t())});
        const ZTerm blead = bt.back();
        MPoly q;
        ExpVec qe = zero_exp();
        const ExpVec ea_lead = a.terms_.rbegin()->first;
        long cur = ea_lead[v1] * stride + ea_lead[v2];
        mpz_class qc;
        bool in_box = true;
        while (in_box) {
          while (cur >= 0 && mpz_sgn(rem[static_cast<size_t>(cur)].get_mpz_t()) == 0)
            --cur;
          if (cur < 0) return q; // zero remainder: exact
          const int q1 = static_cast<int>(cur / stride) - blead.e1;
          const int q2 = static_cast<int>(cur % stride) - blead.e2;
          if (q1 < 0 || q2 < 0) return std::nullopt;
          if (!mpz_divisible_p(rem[static_cast<size_t>(cur)].get_mpz_t(), blead.c)) {
            rational_grid = true;
            break;
          }
          mpz_divexact(qc.get_mpz_t(), rem[static_cast<size_t>(cur)].get_mpz_t(),
                       blead.c);
          for (const ZTerm& t : bt) {
            const long w1 = q1 + t.e1, w2 = q2 + t.e2;
            if (w1 > d1 || w2 > d2) {
              in_box = false;
              break;
            }
            mpz_submul(rem[static_cast<size_t>(w1 * stride + w2)].get_mpz_t(),
                       qc.get_mpz_t(), t.c);
          }
          if (in_box) {
            qe[v1] = q1;
            qe[v2] = q2;
            q.terms_.emplace_hint(q.terms_.begin(), qe, take_integer(qc));
          }
        }
      }
      if (rational_grid) {
        std::vector<Rational> rem(static_cast<size_t>(slots));
        for (const auto& [e, c] : a.terms_) rem[e[v1] * stride + e[v2]] = c;
        struct BTerm {
          int e1, e2;
          const Rational* c;
        };
        std::vector<BTerm> bt;
        bt.reserve(b.terms_.size());
        for (const auto& [e, c] : b.terms_) bt.push_back({e[v1], e[v2], &c});
        const BTerm blead = bt.back(); // map is ascending lex: last term leads
        MPoly q;
        ExpVec qe = zero_exp();
        const ExpVec ea_lead = a.terms_.rbegin()->first;
        long cur = ea_lead[v1] * stride + ea_lead[v2];
        mpq_class qc, tmp;
        bool in_box = true;
        while (in_box) {
          while (cur >= 0 && rem[static_cast<size_t>(cur)] == 0) --cur;
          if (cur < 0) return q; // zero remainder: exact
          const int q1 = static_cast<int>(cur / stride) - blead.e1;
          const int q2 = static_cast<int>(cur % stride) - blead.e2;
          if (q1 < 0 || q2 < 0) return std::nullopt;
          mpq_div(qc.get_mpq_t(), rem[static_cast<size_t>(cur)].get_mpq_t(),
                  blead.c->get_mpq_t());
          for (const BTerm& t : bt) {
            const long w1 = q1 + t.e1, w2 = q2 + t.e2;
            if (w1 > d1 || w2 > d2) {
              in_box = false;
              break;
            }
            mpq_mul(tmp.get_mpq_t(), qc.get_mpq_t(), t.c->get_mpq_t());
            Rational& cell = rem[static_cast<size_t>(w1 * stride + w2)];
            mpq_sub(cell.get_mpq_t(), cell.get_mpq_t(), tmp.get_mpq_t());
          }
          if (in_box) {
            qe[v1] = q1;
            qe[v2] = q2;
            q.terms_.emplace_hint(q.terms_.begin(), qe, Rational(qc));
          }
        }
      }
    }
  }
  MPoly q;
  MPoly r = a;
  const auto [eb, cb] = b.leading();
  while (!r.is_zero()) {
    const auto [er, cr] = r.leading();
    if (!divides_exp(eb, er)) return std::nullopt;
    MPoly t = MPoly::monomial(sub_exp(er, eb), cr / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

std::string mpoly_to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Descending lex: iterate the map backwards.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? "-" : "+";
    }
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += rational_to_string(a);
    } else {
      if (a != 1) out += rational_to_string(a) + "*";
      out += mono;
    }
  }
  return out;
}

} // namespace wmp
