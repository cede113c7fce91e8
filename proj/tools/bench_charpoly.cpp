// Timing probe for the characteristic-polynomial engines on the sparse
// Coxeter-element matrices they will actually face.  Builds the matrix for a
// signature (g; a_1..a_r) directly from the known column action and times
// both engines.
#include <chrono>
#include <cstdio>
#include <vector>

#include "fshape/matrix.hpp"

using fshape::IntMatrix;
using fshape::IntPolynomial;

namespace {

// Basis: for each i the chain delta_{i,1..a_i-1}, then eps, f1, f2.
IntMatrix coxeter_matrix(int g, const std::vector<int>& alpha) {
  int n = 0;
  for (int a : alpha) n += a - 1;
  std::vector<int> start;
  int pos = 0;
  for (int a : alpha) {
    start.push_back(pos);
    pos += a - 1;
  }
  const int eps = n, f1 = n + 1, f2 = n + 2;
  IntMatrix c(n + 3, n + 3);
  for (size_t i = 0; i < alpha.size(); ++i) {
    const int m = alpha[i] - 1;
    const int s = start[i];
    for (int j = 0; j + 1 < m; ++j) c.at(s + j + 1, s + j) = 1;  // delta_j -> delta_{j+1}
    for (int j = 0; j < m; ++j) c.at(s + j, s + m - 1) = -1;     // last -> -sum
    c.at(f1, s) -= 1;  // the first chain vertex picks up -f1
  }
  c.at(eps, eps) = 1;
  for (size_t i = 0; i < alpha.size(); ++i) c.at(start[i], eps) = 1;
  c.at(f1, eps) = -(2 * g - 2);
  c.at(eps, f1) = 1;
  for (size_t i = 0; i < alpha.size(); ++i) c.at(start[i], f1) = 1;
  c.at(f1, f1) = -(g - 1);
  c.at(f2, f1) = 1;
  c.at(f1, f2) = 1;
  return c;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  struct Case {
    int g;
    std::vector<int> alpha;
  };
  std::vector<Case> cases = {
      {0, {2, 3, 7}},
      {1, {5, 5, 5, 5}},
      {2, {9, 9, 9, 9, 9, 9}},
      {5, {13, 13, 13, 13, 13, 13}},
  };
  for (const auto& cs : cases) {
    IntMatrix m = coxeter_matrix(cs.g, cs.alpha);
    const int n = m.rows();
    auto t0 = std::chrono::steady_clock::now();
    IntPolynomial pb = fshape::charpoly_bareiss(m);
    double bareiss_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    IntPolynomial pk = fshape::charpoly_berkowitz(m);
    double berk_ms = ms_since(t0);
    std::printf("n=%2d  bareiss %8.3f ms   berkowitz %8.3f ms   agree=%s\n", n,
                bareiss_ms, berk_ms, pb == pk ? "yes" : "NO");
  }
  // Sweep: every rank from small to the grid maximum, bareiss only.
  for (int a = 3; a <= 13; a += 2) {
    std::vector<int> alpha(6, a);
    IntMatrix m = coxeter_matrix(5, alpha);
    auto t0 = std::chrono::steady_clock::now();
    IntPolynomial p = fshape::charpoly_bareiss(m);
    double ms = ms_since(t0);
    std::printf("rank %2d: %8.3f ms (deg %d)\n", m.rows(), ms, p.degree());
  }
  return 0;
}
