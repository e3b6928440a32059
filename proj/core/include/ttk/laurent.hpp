#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ttk {

using Integer = mpz_class;
using Exponent = std::int64_t;

/// Raised when a quotient that must be exact leaves a nonzero remainder.
class NonExactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by operations that are undefined on the zero polynomial.
class ZeroPolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/*
 * Integer Laurent polynomials in one variable t.
 *
 * Storage is sparse: a vector of (exponent, coefficient) terms sorted by
 * ascending exponent with no zero coefficients. The zero polynomial has no
 * terms. Values are immutable once built; every operation returns a new
 * polynomial.
 */
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    Integer coeff;

    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;

  /// Builds from (exponent, coefficient) pairs in any order; duplicates merge.
  LaurentPoly(std::initializer_list<std::pair<Exponent, long>> terms);

  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, Exponent e);
  /// t^e
  static LaurentPoly t_pow(Exponent e);

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  [[nodiscard]] std::span<const Term> terms() const noexcept { return terms_; }

  /// Requires a nonzero polynomial.
  [[nodiscard]] Exponent min_exponent() const;
  [[nodiscard]] Exponent max_exponent() const;
  [[nodiscard]] const Integer& leading_coefficient() const;
  [[nodiscard]] const Integer& trailing_coefficient() const;
  [[nodiscard]] Integer coefficient(Exponent e) const;

  /// Multiplication by t^k.
  [[nodiscard]] LaurentPoly shifted(Exponent k) const;
  /// p(t) -> p(t^k); k must be nonzero.
  [[nodiscard]] LaurentPoly substitute_power(Exponent k) const;
  [[nodiscard]] LaurentPoly scaled(const Integer& c) const;
  [[nodiscard]] LaurentPoly pow(unsigned n) const;
  [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// 1 - t^n. For n == 0 this is the zero polynomial.
LaurentPoly one_minus_t_pow(Exponent n);

/*
 * The Fox-calculus quotient (1 - x^n) / (1 - x) evaluated as a finite sum:
 *   n == 0  ->  0
 *   n  > 0  ->  1 + x + ... + x^(n-1)
 *   n  < 0  ->  -(x^n + x^(n+1) + ... + x^(-1))
 * For n < 0 the powers x^j are only defined when x is a unit (a signed
 * monomial); other x throw std::invalid_argument.
 */
LaurentPoly geometric_quotient(const LaurentPoly& x, std::int64_t n);

/// Exact quotient num / den in the Laurent ring. Throws NonExactDivision if
/// den does not divide num, std::invalid_argument if den is zero.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// Like exact_div but reports a nonzero remainder by returning false.
bool try_exact_div(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& quotient);

/// gcd of the integer contents (always nonnegative).
Integer content(const LaurentPoly& p);
LaurentPoly primitive_part(const LaurentPoly& p);

/// Primitive gcd generator in canonical form. gcd(p, 0) = normalize(p).
/// Throws std::invalid_argument when both operands are zero.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical representative up to units +-t^k: lowest exponent 0 and a
/// positive leading coefficient. Throws ZeroPolynomial.
LaurentPoly normalize(const LaurentPoly& p);

/// max_exponent - min_exponent. Throws ZeroPolynomial.
Exponent degree_span(const LaurentPoly& p);

/// Sum of the coefficients, i.e. p(1).
Integer evaluate_at_one(const LaurentPoly& p);

/// Coefficient sequence symmetric about the midpoint of the exponent range.
bool is_palindromic(const LaurentPoly& p);

/// "1 - t + 3*t^2 - t^-1" style rendering, lowest exponent first; "0" for zero.
std::string to_string(const LaurentPoly& p);

/// Inverse of to_string. Accepts optional whitespace and "t^e", "c*t^e", "c".
/// Throws std::invalid_argument on malformed input.
LaurentPoly parse_laurent(std::string_view text);

/// JSON array of [exponent, "coefficient"] pairs.
std::string to_json_text(const LaurentPoly& p);
LaurentPoly laurent_from_json_text(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace ttk
