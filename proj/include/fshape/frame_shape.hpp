#pragma once

#include <map>
#include <string>

#include "fshape/bigint.hpp"
#include "fshape/polynomial.hpp"
#include "fshape/rational_function.hpp"

namespace fshape {

// A formal product prod_m (1 - t^m)^{chi_m} with integer exponents, written
// multiplicatively as e.g. "2^6·6^6/1^6·3^6".  The empty product is printed
// as "1^0".
class FrameShape {
 public:
  FrameShape() = default;
  explicit FrameShape(std::map<int, int> exponents);

  // Accepts '·', '*', '.', or whitespace between factors, one optional '/'.
  static FrameShape parse(const std::string& text);
  // Recover exponents from an expanded product; throws
  // std::runtime_error("not a cyclotomic product") when impossible.
  static FrameShape from_polynomial(const IntPolynomial& p);
  static FrameShape from_rational(const RationalFunction& f);

  const std::map<int, int>& exponents() const { return chi_; }
  int exponent(int m) const;
  bool empty() const { return chi_.empty(); }

  // Formal degree sum_m m*chi_m (the degree of the rational function).
  long long degree() const;
  // lcm of the support; 1 for the empty shape.
  long long order() const;

  FrameShape& mul_factor(int m, int e);  // multiply by (1 - t^m)^e
  friend FrameShape operator*(const FrameShape& a, const FrameShape& b);
  friend FrameShape operator/(const FrameShape& a, const FrameShape& b);
  bool operator==(const FrameShape& o) const { return chi_ == o.chi_; }
  bool operator!=(const FrameShape& o) const { return chi_ != o.chi_; }
  bool operator<(const FrameShape& o) const { return chi_ < o.chi_; }

  // (chi*)_k = -chi_{h/k}; h = 0 means the order of the shape.  Every m in
  // the support must divide h, else "h incompatible with support".
  FrameShape saito_dual(long long h = 0) const;
  bool is_self_dual(long long h = 0) const;

  RationalFunction to_rational() const;
  // Expanded product when all cyclotomic multiplicities are >= 0; otherwise
  // throws std::runtime_error("not a polynomial").
  IntPolynomial to_polynomial() const;
  std::vector<BigInt> series(int last) const;

  std::string str() const;

 private:
  void prune();
  std::map<int, int> chi_;  // m -> chi_m, zeros removed
};

}  // namespace fshape
