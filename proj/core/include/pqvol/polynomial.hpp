#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pqvol/bigint.hpp"

namespace pqvol {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, index = exponent. Canonical form: no trailing zero
/// coefficient; the zero polynomial is the empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(BigInt c);
  /// c * x^exp
  static IntPolynomial monomial(BigInt c, std::size_t exp);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  /// Coefficient of x^k; 0 beyond the degree.
  const BigInt& coeff(std::size_t k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& t) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }

  bool operator==(const IntPolynomial&) const = default;

  /// a(x) |-> a(c*x)
  IntPolynomial scale_argument(const BigInt& c) const;

  /// Canonical text rendering "c0 + c1*x + c2*x^2 + ..." omitting zero
  /// terms; "0" for the zero polynomial.
  std::string to_string() const;
  /// Exponent-indexed decimal strings, e.g. {"1","4","1"} for 1+4x+x^2.
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// C(n, k), with 0 for k < 0 or k > n.
BigInt binomial(long n, long k);

/// sum_{k=0}^{m-1} C(m-1, k)^2 x^k, m >= 1. Its value at 1 is the central
/// binomial coefficient C(2(m-1), m-1).
IntPolynomial narayana_square_poly(long m);

}  // namespace pqvol
