#pragma once

#include <vector>

#include "fshape/bigint.hpp"
#include "fshape/polynomial.hpp"

namespace fshape {

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, BigInt(0)) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const BigInt& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { a += b; return a; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { a -= b; return a; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const BigInt& s, IntMatrix m);

  std::vector<BigInt> apply(const std::vector<BigInt>& v) const;
  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<BigInt> a_;
};

// Characteristic polynomial det(t*I - A), monic of degree n.
// charpoly() picks an engine; the two specific ones are kept separately
// callable so they can be cross-checked.
IntPolynomial charpoly(const IntMatrix& a);
// Division-free Samuelson-Berkowitz; O(n^4), fine for small matrices.
IntPolynomial charpoly_berkowitz(const IntMatrix& a);
// Fraction-free elimination over Z[t] with degree/fill-guided full pivoting;
// much faster on the sparse Coxeter-element matrices.
IntPolynomial charpoly_bareiss(const IntMatrix& a);

// Integer determinant (fraction-free Bareiss).
BigInt determinant(const IntMatrix& a);

}  // namespace fshape
