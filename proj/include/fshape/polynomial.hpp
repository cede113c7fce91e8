#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fshape/bigint.hpp"

namespace fshape {

// Dense univariate polynomial over arbitrary-precision integers.
// coeffs()[i] is the coefficient of t^i; trailing zeros are trimmed, so the
// zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one();
  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(int deg, BigInt c = BigInt(1));
  // 1 - t^m, the building block of cyclotomic products.
  static IntPolynomial one_minus_power(int m);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& leading() const;
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial operator-() const;
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    a += b;
    return a;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    a -= b;
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& p);
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  // Multiply by t^k.
  IntPolynomial shifted(int k) const;
  // Multiply by (1 - t^m); O(deg) instead of a general product.
  IntPolynomial times_one_minus_power(int m) const;
  // Exact division by (1 - t^m); throws if the division leaves a remainder.
  IntPolynomial divide_by_one_minus_power(int m) const;
  // Exact division; throws std::runtime_error("inexact polynomial division")
  // when *this is not a multiple of d.
  IntPolynomial exact_divide(const IntPolynomial& d) const;

  BigInt eval(const BigInt& x) const;
  BigRat eval(const BigRat& x) const;
  IntPolynomial derivative() const;

  // t^n * p(1/t) with n >= degree (default n = degree).
  IntPolynomial reversed(int n = -1) const;
  // +1 if p equals its reversal, -1 if it equals minus its reversal, else 0.
  int self_reciprocal_sign() const;

  std::string str(const char* var = "t") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

IntPolynomial power(const IntPolynomial& p, int k);

// Gcd of the coefficients (non-negative); 0 for the zero polynomial.
BigInt content(const IntPolynomial& p);
// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace fshape
