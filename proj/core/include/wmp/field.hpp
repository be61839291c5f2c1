#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "wmp/mpoly.hpp"

namespace wmp {

// Substituting values that annihilate a denominator.
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Q(t1,t2,h,u,w) as an explicit num/den pair. The pair is NOT kept
// fully reduced (no multivariate gcd); normalization guarantees only:
//   - den != 0; num == 0 implies den == 1
//   - no monomial divides both num and den
//   - den has integer coefficients with content 1 and positive leading
//     coefficient (descending lex)
// plus an opportunistic collapse when num divides den or den divides num.
// Equality is decided by cross-multiplication, never by representation.
class FieldElem {
 public:
  FieldElem() : num_(), den_(Rational(1)) {}
  explicit FieldElem(const Rational& c) : num_(c), den_(Rational(1)) {}
  FieldElem(MPoly num, MPoly den);

  static FieldElem zero() { return FieldElem(); }
  static FieldElem one() { return FieldElem(Rational(1)); }
  static FieldElem from_int(long n) { return FieldElem(Rational(n)); }
  static FieldElem variable(Var v);
  // Monomial t^e with e of either sign.
  static FieldElem var_pow(Var v, int e);
  static FieldElem from_poly(MPoly p) { return FieldElem(std::move(p), MPoly(Rational(1))); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b); // b != 0
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }
  FieldElem inverse() const; // *this != 0
  FieldElem pow(int e) const; // negative e inverts

  // Substitute bindings simultaneously; unbound variables stay symbolic.
  // Throws PoleError naming the bindings if a denominator vanishes.
  FieldElem subst(const std::map<Var, FieldElem>& bindings) const;

 private:
  void normalize();
  MPoly num_, den_;
};

// Mathematical equality (cross-multiplication).
bool field_eq(const FieldElem& a, const FieldElem& b);

// Heuristic cancellation: repeatedly divides numerator and denominator by
// common factors that are univariate with rational coefficients, detected by
// evaluating the other variables at fixed points and confirmed by exact
// division. Deterministic; never changes the equality class.
FieldElem reduced(const FieldElem& f);

// Canonical text form "(num)/(den)" of the reduced fraction: terms in
// descending lex order, coefficients "p/q". This is the CLI text output
// contract.
std::string field_to_string(const FieldElem& f);

// Parses +,-,*,/,^,(), integers and the variables t1,t2,h,u,w. Accepts
// everything field_to_string produces (round-trip) plus general expressions.
FieldElem field_parse(const std::string& text);

} // namespace wmp
