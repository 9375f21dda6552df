#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cw {

using Exponent = std::vector<int>;

struct Term {
  Exponent exp;
  int64_t coef = 0;
  friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coef == b.coef; }
};

// Graded lexicographic comparison of exponent vectors: total degree first,
// then lexicographic with x1 most significant. Returns <0, 0, >0.
int grlex_compare(const Exponent& a, const Exponent& b);

// Multivariate Laurent polynomial with int64 coefficients. Terms are stored
// in descending graded-lex order with no zero coefficients, so equality is
// structural. Arithmetic throws ArithmeticOverflow instead of wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, int64_t c);
  static LaurentPoly variable(int nvars, int i);  // x_{i+1}
  static LaurentPoly monomial(const Exponent& exp, int64_t coef = 1);
  // Builds from arbitrary terms, combining duplicates and dropping zeros.
  static LaurentPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }

  // Componentwise minimum / maximum exponents over all terms (zeros if empty).
  Exponent min_exponents() const;
  Exponent max_exponents() const;
  // True when every exponent is nonnegative.
  bool is_polynomial() const;
  bool has_nonnegative_coefficients() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly times_monomial(const Exponent& exp, int64_t coef = 1) const;
  LaurentPoly scaled(int64_t c) const;
  // Exact division of every coefficient by c (caller guarantees divisibility).
  LaurentPoly divided_by_integer(int64_t c) const;
  LaurentPoly pow(int e) const;  // e >= 0 for non-monomials

  int64_t content() const;  // gcd of coefficients, 0 for the zero polynomial

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  // Total order: compare term sequences (exponent by grlex, then coefficient).
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return compare(a, b) < 0; }
  static int compare(const LaurentPoly& a, const LaurentPoly& b);

  uint64_t hash() const;
  // Human-readable form "(1 + x2^3)/x1"; variables named x1..xm.
  std::string str() const;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Exact quotient a / b as a Laurent polynomial; throws NonLaurentResult when
// b does not divide a in the Laurent ring, ZeroPolynomial when b is zero.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);
bool try_exact_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient);

// Greatest common divisor in the Laurent ring, normalized to be a polynomial
// without monomial factors and with a positive leading coefficient.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Reduced fraction num/den of Laurent polynomials: gcd(num, den) = 1 up to
// monomials and units, den is a polynomial with no monomial factor and a
// positive leading coefficient (so monomials live in the numerator).
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(const LaurentPoly& num);
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  std::string str() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace cw
