#include "wmp/field.hpp"

#include <cctype>

namespace wmp {

FieldElem::FieldElem(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("field: zero denominator");
  normalize();
}

FieldElem FieldElem::variable(Var v) {
  return FieldElem(MPoly::variable(v), MPoly(Rational(1)));
}

FieldElem FieldElem::var_pow(Var v, int e) {
  if (e >= 0) return FieldElem(MPoly::variable(v, e), MPoly(Rational(1)));
  return FieldElem(MPoly(Rational(1)), MPoly::variable(v, -e));
}

bool FieldElem::is_one() const { return num_ == den_; }

void FieldElem::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(Rational(1));
    return;
  }
  // Strip the common monomial factor.
  ExpVec mn = num_.monomial_content();
  ExpVec md = den_.monomial_content();
  ExpVec common;
  for (int i = 0; i < kNumVars; ++i) common[i] = std::min(mn[i], md[i]);
  bool any = false;
  for (int i = 0; i < kNumVars; ++i) any = any || common[i] > 0;
  if (any) {
    num_ = num_.divided_by_monomial(common);
    den_ = den_.divided_by_monomial(common);
  }
  // Opportunistic full collapse; cheap because failure exits at the first
  // non-divisible leading term.
  if (!den_.is_constant()) {
    if (auto q = try_exact_divide(num_, den_)) {
      num_ = std::move(*q);
      den_ = MPoly(Rational(1));
    } else if (auto q2 = try_exact_divide(den_, num_)) {
      den_ = std::move(*q2);
      num_ = MPoly(Rational(1));
    }
  }
  // Make den integral with content 1 and positive leading coefficient.
  Rational content(0);
  for (const auto& [e, c] : den_.terms()) content = rational_content(content, c);
  if (den_.leading().second < 0) content = -content;
  if (content != 1) {
    Rational inv = 1 / content;
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return FieldElem(a.num_ + b.num_, a.den_);
  return FieldElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return FieldElem(a.num_ - b.num_, a.den_);
  return FieldElem(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero() || b.is_zero()) return FieldElem::zero();
  return FieldElem(a.num_ * b.num_, a.den_ * b.den_);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  if (b.is_zero()) throw std::invalid_argument("field: division by zero");
  if (a.is_zero()) return FieldElem::zero();
  return FieldElem(a.num_ * b.den_, a.den_ * b.num_);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::invalid_argument("field: inverse of zero");
  return FieldElem(den_, num_);
}

FieldElem FieldElem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem r = FieldElem::one();
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

bool field_eq(const FieldElem& a, const FieldElem& b) {
  return a.num() * b.den() == b.num() * a.den();
}

namespace {

std::string describe_bindings(const std::map<Var, FieldElem>& bindings) {
  std::string s;
  for (const auto& [v, val] : bindings) {
    if (!s.empty()) s += ", ";
    s += std::string(kVarNames[static_cast<int>(v)]) + " -> " + field_to_string(val);
  }
  return s;
}

FieldElem eval_poly(const MPoly& p, const std::map<Var, FieldElem>& bindings) {
  // Cache powers per variable; unbound variables evaluate to themselves.
  std::array<std::map<int, FieldElem>, kNumVars> powers;
  auto power = [&](int vi, int e) -> const FieldElem& {
    auto it = powers[vi].find(e);
    if (it != powers[vi].end()) return it->second;
    Var v = static_cast<Var>(vi);
    FieldElem base = bindings.count(v) ? bindings.at(v) : FieldElem::variable(v);
    return powers[vi].emplace(e, base.pow(e)).first->second;
  };
  FieldElem acc = FieldElem::zero();
  for (const auto& [e, c] : p.terms()) {
    FieldElem term(c);
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) term *= power(i, e[i]);
    acc += term;
  }
  return acc;
}

} // namespace

FieldElem FieldElem::subst(const std::map<Var, FieldElem>& bindings) const {
  if (bindings.empty()) return *this;
  FieldElem n = eval_poly(num_, bindings);
  FieldElem d = eval_poly(den_, bindings);
  if (d.is_zero())
    throw PoleError("field: substitution {" + describe_bindings(bindings) +
                    "} makes the denominator vanish");
  return n / d;
}

namespace {

// Image of p as a univariate polynomial in v, the other variables evaluated
// at pts; coefficient-by-exponent, trailing zeros trimmed (empty = zero).
std::vector<Rational> univariate_image(const MPoly& p, Var v,
                                       const std::array<Rational, kNumVars>& pts) {
  std::vector<Rational> out;
  for (const auto& [e, c] : p.terms()) {
    Rational val = c;
    for (int i = 0; i < kNumVars; ++i) {
      if (i == static_cast<int>(v)) continue;
      for (int k = 0; k < e[i]; ++k) val *= pts[i];
    }
    const int d = e[static_cast<int>(v)];
    if (static_cast<int>(out.size()) <= d) out.resize(static_cast<size_t>(d) + 1, Rational(0));
    out[d] += val;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

void make_monic(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) return;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

// Monic gcd over Q[v]; an empty operand acts as zero.
std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  make_monic(a);
  make_monic(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      const Rational f = a.back(); // b is monic
      const size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

MPoly univariate_to_mpoly(const std::vector<Rational>& g, Var v) {
  MPoly p;
  for (size_t d = 0; d < g.size(); ++d) {
    if (g[d] == 0) continue;
    ExpVec e{};
    e[static_cast<int>(v)] = static_cast<int>(d);
    p.add_term(e, g[d]);
  }
  return p;
}

} // namespace

FieldElem reduced(const FieldElem& f) {
  if (f.is_zero() || f.den().is_constant()) return f;
  static const std::array<std::array<Rational, kNumVars>, 3> kPointSets = {{
      {Rational(2), Rational(3), Rational(5), Rational(7), Rational(11)},
      {Rational(13), Rational(17), Rational(19), Rational(23), Rational(29)},
      {Rational(31), Rational(37), Rational(41), Rational(43), Rational(47)},
  }};
  MPoly num = f.num();
  MPoly den = f.den();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int vi = 0; vi < kNumVars; ++vi) {
      const Var v = static_cast<Var>(vi);
      // Candidate: gcd of the per-point-set univariate gcds; a genuine
      // univariate common factor divides every one of them, and spurious
      // factors from one unlucky point set drop out of the intersection.
      std::vector<Rational> cand;
      bool have = false;
      for (const auto& pts : kPointSets) {
        const auto ni = univariate_image(num, v, pts);
        const auto di = univariate_image(den, v, pts);
        if (ni.empty() || di.empty()) continue;
        const auto g = univariate_gcd(ni, di);
        cand = have ? univariate_gcd(cand, g) : g;
        have = true;
        if (cand.size() <= 1) break;
      }
      if (!have || cand.size() <= 1) continue;
      const MPoly g = univariate_to_mpoly(cand, v);
      const auto qn = try_exact_divide(num, g);
      if (!qn) continue;
      const auto qd = try_exact_divide(den, g);
      if (!qd) continue;
      num = *qn;
      den = *qd;
      changed = true;
    }
  }
  return FieldElem(std::move(num), std::move(den));
}

std::string field_to_string(const FieldElem& f) {
  const FieldElem r = reduced(f);
  return "(" + mpoly_to_string(r.num()) + ")/(" + mpoly_to_string(r.den()) + ")";
}

namespace {

// Recursive-descent parser over +,-,*,/,^,(),integers,variables.
class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  FieldElem parse() {
    FieldElem e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("field parse error at position " +
                                std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  FieldElem expr() {
    FieldElem acc = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  FieldElem term() {
    FieldElem acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        FieldElem d = factor();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  FieldElem factor() {
    FieldElem b = base();
    if (eat('^')) {
      bool neg = eat('-');
      std::string digits = integer_digits();
      long e = std::stol(digits);
      b = b.pow(neg ? -static_cast<int>(e) : static_cast<int>(e));
    }
    return b;
  }

  std::string integer_digits() {
    skip_ws();
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      d += s_[pos_++];
    if (d.empty()) fail("expected integer");
    return d;
  }

  FieldElem base() {
    char c = peek();
    if (c == '(') {
      eat('(');
      FieldElem e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '-') {
      eat('-');
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return FieldElem(Rational(mpz_class(integer_digits())));
    }
    for (int i = kNumVars - 1; i >= 0; --i) { // match "t1"/"t2" before "t"
      std::string name = kVarNames[i];
      if (s_.compare(pos_, name.size(), name) == 0) {
        pos_ += name.size();
        return FieldElem::variable(static_cast<Var>(i));
      }
    }
    fail("expected number, variable or '('");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

} // namespace

FieldElem field_parse(const std::string& text) {
  Parser p(text);
  return p.parse();
}

} // namespace wmp
