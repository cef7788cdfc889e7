#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpart {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely (index = exponent) with trailing zeros trimmed, so two
/// polynomials are equal iff their coefficient vectors are equal.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(BigInt constant);

  static QPolynomial monomial(int exponent, BigInt coefficient = 1);
  static QPolynomial from_dense(std::vector<BigInt> coefficients);
  static QPolynomial from_terms(const std::map<int, BigInt>& terms);

  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  /// Lowest exponent with a non-zero coefficient; -1 for zero.
  int min_degree() const noexcept;
  BigInt coefficient(int exponent) const;
  std::span<const BigInt> dense() const noexcept { return coefficients_; }
  /// Non-zero coefficients keyed by exponent.
  std::map<int, BigInt> terms() const;
  /// Value at q = 1, the sum of the coefficients.
  BigInt at_one() const;

  /// Multiplies by q^shift. A negative shift must not push any term below q^0.
  QPolynomial shifted(int shift) const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();

  std::vector<BigInt> coefficients_;
};

/// Ascending exponents: "3*q + 3*q^2 + q^3"; zero is "0".
std::string to_string(const QPolynomial& p);
std::ostream& operator<<(std::ostream& os, const QPolynomial& p);
/// Accepts what to_string produces (and any term order). Throws ParseError.
QPolynomial parse_polynomial(std::string_view text);

/// {"coeffs": {"1": 3, "2": 3, "3": 1}}. Coefficients beyond 64 bits are
/// written as decimal strings.
std::string to_json(const QPolynomial& p);
QPolynomial polynomial_from_json(std::string_view json);

}  // namespace qpart
