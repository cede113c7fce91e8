#include "fshape/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fshape {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const BigInt& bkj = b.at(k, j);
        if (bkj != 0) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

IntMatrix operator*(const BigInt& s, IntMatrix m) {
  for (auto& x : m.a_) x *= s;
  return m;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix shape mismatch");
  std::vector<BigInt> r(rows_, BigInt(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const BigInt& x = at(i, j);
      if (x != 0 && v[j] != 0) r[i] += x * v[j];
    }
  return r;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

IntPolynomial charpoly_berkowitz(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  const int n = a.rows();
  // c[k] holds the coefficient of t^(r-k) for the leading principal r x r block.
  std::vector<BigInt> c{BigInt(1)};
  for (int r = 1; r <= n; ++r) {
    std::vector<BigInt> v(r + 1);
    v[0] = 1;
    v[1] = -a.at(r - 1, r - 1);
    if (r >= 2) {
      std::vector<BigInt> w(r - 1);
      for (int i = 0; i < r - 1; ++i) w[i] = a.at(i, r - 1);
      for (int k = 2; k <= r; ++k) {
        BigInt dot(0);
        for (int j = 0; j < r - 1; ++j)
          if (w[j] != 0 && a.at(r - 1, j) != 0) dot += a.at(r - 1, j) * w[j];
        v[k] = -dot;
        if (k < r) {
          std::vector<BigInt> nw(r - 1, BigInt(0));
          for (int i = 0; i < r - 1; ++i)
            for (int j = 0; j < r - 1; ++j)
              if (a.at(i, j) != 0 && w[j] != 0) nw[i] += a.at(i, j) * w[j];
          w = std::move(nw);
        }
      }
    }
    std::vector<BigInt> nc(r + 1, BigInt(0));
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= std::min(i, static_cast<int>(c.size()) - 1); ++j)
        if (i - j <= r) nc[i] += v[i - j] * c[j];
    c = std::move(nc);
  }
  std::vector<BigInt> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) coeffs[n - k] = c[k];
  return IntPolynomial(std::move(coeffs));
}

namespace {

int poly_nnz_aware_degree(const IntPolynomial& p) { return p.degree(); }

}  // namespace

IntPolynomial charpoly_bareiss(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  const int n = a.rows();
  if (n == 0) return IntPolynomial::one();

  // Work matrix over Z[t]: t*I - A.
  std::vector<std::vector<IntPolynomial>> p(n, std::vector<IntPolynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        p[i][j] = IntPolynomial(std::vector<BigInt>{-a.at(i, j), BigInt(1)});
      else if (a.at(i, j) != 0)
        p[i][j] = IntPolynomial::constant(-a.at(i, j));
    }

  int sign = 1;
  IntPolynomial prev = IntPolynomial::one();
  for (int k = 0; k + 1 < n; ++k) {
    // Pick the pivot with minimal (degree, Markowitz fill) among the active
    // submatrix; on Coxeter matrices this walks the cheap unit entries first.
    int rows_left = n - k;
    std::vector<int> row_nnz(rows_left, 0), col_nnz(rows_left, 0);
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j)
        if (!p[i][j].is_zero()) {
          ++row_nnz[i - k];
          ++col_nnz[j - k];
        }
    int bi = -1, bj = -1;
    long long best_fill = 0;
    int best_deg = 0;
    for (int i = k; i < n && bi < 0; ++i) {
      for (int j = k; j < n; ++j) {
        if (p[i][j].is_zero()) continue;
        const int deg = poly_nnz_aware_degree(p[i][j]);
        const long long fill =
            static_cast<long long>(row_nnz[i - k] - 1) * (col_nnz[j - k] - 1);
        if (bi < 0 || deg < best_deg || (deg == best_deg && fill < best_fill)) {
          bi = i;
          bj = j;
          best_deg = deg;
          best_fill = fill;
        }
      }
    }
    if (bi < 0) return IntPolynomial();  // singular over Z[t]; cannot happen for t*I - A
    // Re-scan allowing early exit for the ideal pivot.
    for (int i = k; i < n; ++i) {
      bool done = false;
      for (int j = k; j < n; ++j) {
        if (p[i][j].is_zero()) continue;
        const int deg = poly_nnz_aware_degree(p[i][j]);
        const long long fill =
            static_cast<long long>(row_nnz[i - k] - 1) * (col_nnz[j - k] - 1);
        if (deg < best_deg || (deg == best_deg && fill < best_fill)) {
          bi = i;
          bj = j;
          best_deg = deg;
          best_fill = fill;
          if (deg == 0 && fill <= 1) {
            done = true;
            break;
          }
        }
      }
      if (done) break;
    }
    if (bi != k) {
      std::swap(p[bi], p[k]);
      sign = -sign;
    }
    if (bj != k) {
      for (int i = 0; i < n; ++i) std::swap(p[i][bj], p[i][k]);
      sign = -sign;
    }
    const IntPolynomial& piv = p[k][k];
    const bool piv_eq_prev = piv == prev;
    for (int i = k + 1; i < n; ++i) {
      if (p[i][k].is_zero()) {
        if (piv_eq_prev) continue;
        for (int j = k + 1; j < n; ++j)
          if (!p[i][j].is_zero()) p[i][j] = (piv * p[i][j]).exact_divide(prev);
        continue;
      }
      IntPolynomial fi = std::move(p[i][k]);
      p[i][k] = IntPolynomial();
      for (int j = k + 1; j < n; ++j) {
        IntPolynomial num;
        const bool lz = p[i][j].is_zero(), rz = p[k][j].is_zero();
        if (lz && rz) continue;
        if (!lz && rz)
          num = piv * p[i][j];
        else if (lz && !rz)
          num = -(fi * p[k][j]);
        else
          num = piv * p[i][j] - fi * p[k][j];
        p[i][j] = num.is_zero() ? IntPolynomial() : num.exact_divide(prev);
      }
    }
    prev = piv;
  }
  IntPolynomial det = p[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

IntPolynomial charpoly(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  return a.rows() <= 12 ? charpoly_berkowitz(a) : charpoly_bareiss(a);
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant needs a square matrix");
  const int n = a.rows();
  if (n == 0) return BigInt(1);
  IntMatrix m = a;
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int pr = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          pr = i;
          break;
        }
      if (pr < 0) {
        bool all_zero_col = true;
        for (int i = k; i < n; ++i) all_zero_col = all_zero_col && m.at(i, k) == 0;
        if (all_zero_col) return BigInt(0);
      } else {
        for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pr, j));
        sign = -sign;
      }
      if (m.at(k, k) == 0) return BigInt(0);
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // Bareiss: exact
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  BigInt det = m.at(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

}  // namespace fshape
