#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmp/rational.hpp"

namespace wmp {

// The coefficient ring for everything downstream is Q[t1,t2,h,u,w] and its
// fraction field. The variable tuple is fixed and ordered; exponents are
// nonnegative (Laurent data lives in FieldElem fractions).
enum class Var : int { t1 = 0, t2 = 1, h = 2, u = 3, w = 4 };

inline constexpr int kNumVars = 5;
extern const std::array<const char*, kNumVars> kVarNames;

using ExpVec = std::array<int, kNumVars>; // lexicographic order via operator<

// Sparse multivariate polynomial: exponent vector -> nonzero rational
// coefficient, keyed ascending-lex (leading term under descending lex is the
// map's last entry).
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(const Rational& c);
  static MPoly variable(Var v, int exp = 1);
  static MPoly monomial(const ExpVec& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  int num_terms() const { return static_cast<int>(terms_.size()); }
  int total_degree() const; // 0 for the zero polynomial

  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  // Leading term under descending lex; polynomial must be nonzero.
  std::pair<ExpVec, Rational> leading() const;
  Rational coeff(const ExpVec& e) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Rational& c) const;
  MPoly pow(int e) const; // e >= 0

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  // Componentwise-minimum exponent vector over all terms; zero vector for
  // the zero polynomial.
  ExpVec monomial_content() const;
  MPoly divided_by_monomial(const ExpVec& m) const; // m must divide every term

  void add_term(const ExpVec& e, const Rational& c);

  friend std::optional<MPoly> try_exact_divide(const MPoly& a, const MPoly& b);

 private:
  std::map<ExpVec, Rational> terms_;
};

// Exact multivariate division: q with a == q*b, or nullopt if b does not
// divide a. b must be nonzero.
std::optional<MPoly> try_exact_divide(const MPoly& a, const MPoly& b);

std::string mpoly_to_string(const MPoly& p); // canonical: descending lex terms

} // namespace wmp
