#pragma once

#include <stdexcept>
#include <vector>

#include "fshape/bigint.hpp"

namespace fshape::series {

// Truncated power series are plain coefficient vectors: v[i] is the
// coefficient of t^i and everything from v.size() on is discarded.

inline std::vector<BigInt> truncate(std::vector<BigInt> a, size_t count) {
  a.resize(count, BigInt(0));
  return a;
}

inline std::vector<BigInt> mul(const std::vector<BigInt>& a,
                               const std::vector<BigInt>& b, size_t count) {
  std::vector<BigInt> r(count, BigInt(0));
  for (size_t i = 0; i < a.size() && i < count; ++i) {
    if (a[i] == 0) continue;
    const size_t jmax = std::min(b.size(), count - i);
    for (size_t j = 0; j < jmax; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// Inverse of a series with unit constant term.
inline std::vector<BigInt> invert(const std::vector<BigInt>& a, size_t count) {
  if (a.empty() || (a[0] != 1 && a[0] != -1))
    throw std::runtime_error("series inverse requires unit constant term");
  std::vector<BigInt> b(count, BigInt(0));
  if (count == 0) return b;
  b[0] = a[0];  // 1/(+-1) = +-1
  for (size_t k = 1; k < count; ++k) {
    // b[k] = -(sum_{0<=j<k} b[j] a[k-j]) / a[0]
    BigInt s(0);
    for (size_t j = 0; j < k; ++j) {
      const size_t idx = k - j;
      if (idx < a.size() && a[idx] != 0) s += b[j] * a[idx];
    }
    b[k] = a[0] == 1 ? BigInt(-s) : s;
  }
  return b;
}

// Multiply by (1 - t^m) in place.
inline void mul_one_minus_power(std::vector<BigInt>& a, int m) {
  if (m <= 0) throw std::invalid_argument("exponent must be positive");
  for (int i = static_cast<int>(a.size()) - 1; i >= m; --i) a[i] -= a[i - m];
}

// Divide by (1 - t^m) in place (always exact for truncated series).
inline void div_one_minus_power(std::vector<BigInt>& a, int m) {
  if (m <= 0) throw std::invalid_argument("exponent must be positive");
  for (size_t i = m; i < a.size(); ++i) a[i] += a[i - m];
}

}  // namespace fshape::series
