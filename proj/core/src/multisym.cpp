#include "wmp/multisym.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace wmp {

namespace {

int mod_color(int c, int l) {
  int r = c % l;
  return r < 0 ? r + l : r;
}

void check_same_l(const MultiSym& a, const MultiSym& b) {
  if (a.l() != b.l()) throw std::invalid_argument("multisym: mixed color counts");
}

// prod over groups of equal generators: degree^mult * mult!
Rational z_of_monomial(const Monomial& m) {
  Rational z(1);
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    const long mult = static_cast<long>(j - i);
    for (long k = 1; k <= mult; ++k) z *= Rational(static_cast<long>(m[i].degree)) * Rational(k);
    i = j;
  }
  return z;
}

} // namespace

int x_degree(const Monomial& m) {
  int d = 0;
  for (const Gen& g : m)
    if (g.alphabet == Alphabet::X) d += g.degree;
  return d;
}

int y_degree(const Monomial& m) {
  int d = 0;
  for (const Gen& g : m)
    if (g.alphabet == Alphabet::Y) d += g.degree;
  return d;
}

std::string monomial_to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += "*";
    s += "p^(" + std::to_string(m[i].color) + ")_" + std::to_string(m[i].degree);
    s += m[i].alphabet == Alphabet::X ? "[x]" : "[y]";
  }
  return s;
}

MultiSym::MultiSym(int l) : l_(l) {
  if (l < 1) throw std::invalid_argument("multisym: need at least one color");
}

MultiSym MultiSym::one(int l) { return constant(l, FieldElem::one()); }

MultiSym MultiSym::constant(int l, const FieldElem& c) {
  MultiSym r(l);
  r.add_term(Monomial{}, c);
  return r;
}

MultiSym MultiSym::generator(int l, Gen g) {
  return from_monomial(l, Monomial{g}, FieldElem::one());
}

MultiSym MultiSym::from_monomial(int l, Monomial m, const FieldElem& c) {
  MultiSym r(l);
  for (const Gen& g : m) {
    if (g.degree < 1) throw std::invalid_argument("multisym: generator degree must be >= 1");
    if (g.color < 0 || g.color >= l) throw std::invalid_argument("multisym: generator color out of range");
  }
  std::sort(m.begin(), m.end());
  r.add_term(m, c);
  return r;
}

FieldElem MultiSym::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElem::zero() : it->second;
}

int MultiSym::max_x_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, x_degree(m));
  return d;
}

int MultiSym::max_y_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, y_degree(m));
  return d;
}

bool MultiSym::is_homogeneous(int xdeg, int ydeg) const {
  for (const auto& [m, c] : terms_)
    if (x_degree(m) != xdeg || y_degree(m) != ydeg) return false;
  return true;
}

void MultiSym::add_term(const Monomial& m, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiSym MultiSym::operator-() const {
  MultiSym r(l_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiSym operator+(const MultiSym& a, const MultiSym& b) {
  check_same_l(a, b);
  MultiSym r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

MultiSym operator-(const MultiSym& a, const MultiSym& b) {
  check_same_l(a, b);
  MultiSym r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

MultiSym operator*(const MultiSym& a, const MultiSym& b) {
  check_same_l(a, b);
  MultiSym r(a.l_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiSym MultiSym::scaled(const FieldElem& c) const {
  MultiSym r(l_);
  if (c.is_zero()) return r;
  for (const auto& [m, cm] : terms_) r.terms_.emplace(m, cm * c);
  return r;
}

bool MultiSym::equals(const MultiSym& o) const {
  return (*this - o).is_zero();
}

MultiSym MultiSym::truncated(int max_deg) const {
  MultiSym r(l_);
  for (const auto& [m, c] : terms_)
    if (x_degree(m) <= max_deg && y_degree(m) <= max_deg) r.terms_.emplace(m, c);
  return r;
}

MultiSym MultiSym::subst_generators(const std::function<MultiSym(const Gen&)>& image) const {
  std::map<Gen, MultiSym> cache;
  auto get_image = [&](const Gen& g) -> const MultiSym& {
    auto it = cache.find(g);
    if (it == cache.end()) {
      MultiSym img = image(g);
      if (img.l() != l_) throw std::invalid_argument("multisym: substitution image has mismatched color count");
      it = cache.emplace(g, std::move(img)).first;
    }
    return it->second;
  };
  MultiSym result(l_);
  for (const auto& [mono, c] : terms_) {
    MultiSym term = MultiSym::constant(l_, c);
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i]) ++j;
      const MultiSym& img = get_image(mono[i]);
      for (std::size_t k = i; k < j; ++k) term *= img;
      i = j;
    }
    result += term;
  }
  return result;
}

MultiSym MultiSym::map_coeffs(const std::function<FieldElem(const FieldElem&)>& f) const {
  MultiSym r(l_);
  for (const auto& [m, c] : terms_) r.add_term(m, f(c));
  return r;
}

MultiSym MultiSym::scale_by_bidegree(const std::function<FieldElem(int, int)>& f) const {
  MultiSym r(l_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * f(x_degree(m), y_degree(m)));
  return r;
}

MultiSym endo_neg(const MultiSym& f) {
  MultiSym r(f.l());
  for (const auto& [m, c] : f.terms()) {
    Monomial nm = m;
    for (Gen& g : nm) g.color = mod_color(-g.color, f.l());
    std::sort(nm.begin(), nm.end());
    r.add_term(nm, c);
  }
  return r;
}

FieldElem coeff_swap(const FieldElem& c) {
  static const std::map<Var, FieldElem> bindings = {
      {Var::t1, FieldElem::variable(Var::t2)},
      {Var::t2, FieldElem::variable(Var::t1)},
  };
  return c.subst(bindings);
}

FieldElem coeff_inv(const FieldElem& c) {
  static const std::map<Var, FieldElem> bindings = {
      {Var::t1, FieldElem::var_pow(Var::t1, -1)},
      {Var::t2, FieldElem::var_pow(Var::t2, -1)},
  };
  return c.subst(bindings);
}

MultiSym endo_swap(const MultiSym& f) {
  return f.map_coeffs(coeff_swap);
}

MultiSym endo_inv(const MultiSym& f) {
  return f.map_coeffs(coeff_inv);
}

MultiSym gamma(const MultiSym& f, const FieldElem& x, bool inverse) {
  const int l = f.l();
  if (!inverse) {
    return f.subst_generators([&](const Gen& g) {
      Gen shifted{g.alphabet, mod_color(g.color - 1, l), g.degree};
      return MultiSym::generator(l, g) -
             MultiSym::generator(l, shifted).scaled(x.pow(g.degree));
    });
  }
  return f.subst_generators([&](const Gen& g) {
    const FieldElem denom = FieldElem::one() - x.pow(g.degree * l);
    if (denom.is_zero())
      throw PoleError("gamma inverse: 1 - x^(n*l) vanishes at degree n = " +
                      std::to_string(g.degree));
    const FieldElem scale = denom.inverse();
    const FieldElem xn = x.pow(g.degree);
    MultiSym sum = MultiSym::zero(l);
    FieldElem xp = FieldElem::one();
    for (int j = 0; j < l; ++j) {
      Gen gj{g.alphabet, mod_color(g.color - j, l), g.degree};
      sum += MultiSym::generator(l, gj).scaled(scale * xp);
      if (j + 1 < l) xp *= xn;
    }
    return sum;
  });
}

FieldElem hall_pairing(const MultiSym& f, const MultiSym& g) {
  check_same_l(f, g);
  FieldElem acc = FieldElem::zero();
  const auto& smaller = f.terms().size() <= g.terms().size() ? f : g;
  const auto& larger = f.terms().size() <= g.terms().size() ? g : f;
  for (const auto& [m, c] : smaller.terms()) {
    auto it = larger.terms().find(m);
    if (it == larger.terms().end()) continue;
    acc += c * it->second * FieldElem(z_of_monomial(m));
  }
  return acc;
}

MultiSym wreath_pairing_image(const MultiSym& g) {
  MultiSym h = endo_neg(g);
  h = gamma(h, FieldElem::variable(Var::t2));
  h = endo_neg(h);
  h = gamma(h, FieldElem::variable(Var::t1));
  return endo_neg(h);
}

FieldElem wreath_pairing(const MultiSym& f, const MultiSym& g) {
  return hall_pairing(f, wreath_pairing_image(g));
}

MultiSym derivative(const MultiSym& f, const Gen& g) {
  MultiSym r(f.l());
  for (const auto& [mono, c] : f.terms()) {
    auto range = std::equal_range(mono.begin(), mono.end(), g);
    const long mult = static_cast<long>(range.second - range.first);
    if (mult == 0) continue;
    Monomial reduced;
    reduced.reserve(mono.size() - 1);
    reduced.insert(reduced.end(), mono.begin(), range.first);
    reduced.insert(reduced.end(), range.first + 1, mono.end());
    r.add_term(reduced, c * FieldElem(Rational(mult)));
  }
  return r;
}

MultiSym exp_truncated(const MultiSym& f, int max_deg) {
  if (!f.coeff(Monomial{}).is_zero())
    throw std::invalid_argument("multisym: exp needs zero constant term");
  const MultiSym ft = f.truncated(max_deg);
  MultiSym result = MultiSym::one(f.l());
  MultiSym power = MultiSym::one(f.l());
  Rational factorial(1);
  for (long k = 1;; ++k) {
    power = (power * ft).truncated(max_deg);
    if (power.is_zero()) break;
    factorial *= Rational(k);
    result += power.scaled(FieldElem(Rational(1) / factorial));
  }
  return result;
}

MultiSym to_alphabet(const MultiSym& f, Alphabet a) {
  MultiSym r(f.l());
  for (const auto& [m, c] : f.terms()) {
    Monomial nm = m;
    for (Gen& g : nm) g.alphabet = a;
    std::sort(nm.begin(), nm.end());
    r.add_term(nm, c);
  }
  return r;
}

} // namespace wmp
