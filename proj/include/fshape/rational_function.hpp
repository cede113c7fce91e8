#pragma once

#include <map>
#include <string>
#include <vector>

#include "fshape/bigint.hpp"
#include "fshape/polynomial.hpp"

namespace fshape {

// Quotient of integer polynomials, kept in lowest terms with the trailing
// (lowest-degree) coefficient of the denominator positive.
class RationalFunction {
 public:
  RationalFunction();
  explicit RationalFunction(IntPolynomial num,
                            IntPolynomial den = IntPolynomial::one());

  // prod_m (1 - t^m)^e for {m: e}; negative exponents go to the denominator.
  static RationalFunction from_cyclotomic(const std::map<int, int>& exponents);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // deg num - deg den; undefined for 0.
  int degree() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  bool is_polynomial() const;
  IntPolynomial to_polynomial() const;  // throws if not a polynomial

  // Taylor coefficients of t^0..t^last. Requires den(0) != 0.
  std::vector<BigInt> series(int last) const;

  BigRat eval(const BigRat& x) const;

  std::string str(const char* var = "t") const;

 private:
  void normalize();
  IntPolynomial num_, den_;
};

}  // namespace fshape
