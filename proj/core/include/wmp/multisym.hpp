#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wmp/field.hpp"

namespace wmp {

enum class Alphabet : int { X = 0, Y = 1 };

// One colored power-sum generator p^(color)_degree on one alphabet.
struct Gen {
  Alphabet alphabet = Alphabet::X;
  int color = 0;  // 0..l-1
  int degree = 1; // >= 1
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

// Sorted multiset of generators; the empty monomial is the unit.
using Monomial = std::vector<Gen>;

int x_degree(const Monomial& m);
int y_degree(const Monomial& m);

// "p^(0)_1[x]*p^(1)_2[y]"; the empty monomial prints as "1".
std::string monomial_to_string(const Monomial& m);

// Element of the colored-power-sum polynomial ring over Q(t1,t2,h,u,w), in up
// to two independent alphabets. Monomials map to nonzero coefficients.
class MultiSym {
 public:
  explicit MultiSym(int l);
  static MultiSym zero(int l) { return MultiSym(l); }
  static MultiSym one(int l);
  static MultiSym constant(int l, const FieldElem& c);
  static MultiSym generator(int l, Gen g);
  static MultiSym from_monomial(int l, Monomial m, const FieldElem& c);

  int l() const { return l_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, FieldElem>& terms() const { return terms_; }
  FieldElem coeff(const Monomial& m) const;
  int max_x_degree() const;
  int max_y_degree() const;
  // True when every term has the given per-alphabet degrees.
  bool is_homogeneous(int xdeg, int ydeg) const;

  MultiSym operator-() const;
  friend MultiSym operator+(const MultiSym& a, const MultiSym& b);
  friend MultiSym operator-(const MultiSym& a, const MultiSym& b);
  friend MultiSym operator*(const MultiSym& a, const MultiSym& b);
  MultiSym& operator+=(const MultiSym& o) { return *this = *this + o; }
  MultiSym& operator-=(const MultiSym& o) { return *this = *this - o; }
  MultiSym& operator*=(const MultiSym& o) { return *this = *this * o; }
  MultiSym scaled(const FieldElem& c) const;

  bool equals(const MultiSym& o) const; // exact (coefficients cross-multiplied)

  // Drop terms whose x-degree or y-degree exceeds the bound.
  MultiSym truncated(int max_deg) const;

  // Algebra homomorphism determined by images of generators (images must
  // carry the same l).
  MultiSym subst_generators(const std::function<MultiSym(const Gen&)>& image) const;
  // Apply to every coefficient (e.g. endomorphisms of the ground field).
  MultiSym map_coeffs(const std::function<FieldElem(const FieldElem&)>& f) const;
  // Multiply the coefficient of each term by a function of its bidegree.
  MultiSym scale_by_bidegree(const std::function<FieldElem(int, int)>& f) const;

  void add_term(const Monomial& m, const FieldElem& c);

 private:
  int l_;
  std::map<Monomial, FieldElem> terms_;
};

// --- endomorphisms of the coefficient field / color relabeling ---

MultiSym endo_neg(const MultiSym& f);  // color i -> -i mod l, both alphabets
MultiSym endo_swap(const MultiSym& f); // t1 <-> t2 in coefficients
MultiSym endo_inv(const MultiSym& f);  // t1,t2 -> their inverses
FieldElem coeff_swap(const FieldElem& c);
FieldElem coeff_inv(const FieldElem& c);

// Matrix plethysm p^(i)_n -> p^(i)_n - x^n p^(i-1)_n, acting per alphabet;
// inverse uses (1-x^(nl))^{-1} sum_j x^(nj) p^(i-j)_n and reports a pole if
// 1 - x^(nl) vanishes.
MultiSym gamma(const MultiSym& f, const FieldElem& x, bool inverse = false);

// Extended Hall pairing: colored power sums are orthogonal with norm
// prod_i z_{mu^(i)}. Pre: same l, single shared alphabet.
FieldElem hall_pairing(const MultiSym& f, const MultiSym& g);

// neg gamma_{t1} neg gamma_{t2} neg g: the right slot of the deformed
// pairing reduced to the Hall pairing. Exposed so one g can pair against
// many f without redoing the transform.
MultiSym wreath_pairing_image(const MultiSym& g);

// <f, g>_{q,t} = <f, neg gamma_{t1} neg gamma_{t2} neg g> with q=t1, t=t2.
FieldElem wreath_pairing(const MultiSym& f, const MultiSym& g);

// d/d p^(i)_n for one generator.
MultiSym derivative(const MultiSym& f, const Gen& g);

// exp(f) truncated to per-alphabet degree <= max_deg; f needs zero constant
// term.
MultiSym exp_truncated(const MultiSym& f, int max_deg);

// Move every generator to the given alphabet (used to build two-alphabet
// kernels from single-alphabet data).
MultiSym to_alphabet(const MultiSym& f, Alphabet a);

} // namespace wmp
