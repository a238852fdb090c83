#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kls {

using Integer = boost::multiprecision::cpp_int;

/// Exact univariate polynomial in t with arbitrary-precision integer
/// coefficients. Coefficient i multiplies t^i; trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs);
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, int degree);
  /// (t + a)^n
  static IntPolynomial binomial_power(long long a, int n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^i; zero outside the stored range.
  Integer coeff(int i) const;
  bool is_constant(long long c) const;

  Integer evaluate(const Integer& t) const;

  /// t^window * p(1/t). Requires degree() <= window.
  IntPolynomial reflect(int window) const;
  /// Terms of degree strictly below `bound`.
  IntPolynomial truncate_below(int bound) const;
  IntPolynomial shifted(int k) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Integer& scalar);
  /// this += a * b without a temporary product.
  void add_product(const IntPolynomial& a, const IntPolynomial& b);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form such as "t^2 - 3*t + 2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace kls
