#include <doctest.h>

#include <random>

#include "fshape/matrix.hpp"
#include "fshape/polynomial.hpp"
#include "fshape/power_series.hpp"
#include "fshape/rational_function.hpp"

using fshape::BigInt;
using fshape::IntMatrix;
using fshape::IntPolynomial;
using fshape::RationalFunction;

TEST_CASE("polynomial basics") {
  IntPolynomial p{1, -1};  // 1 - t
  IntPolynomial q{1, 1, 1};  // 1 + t + t^2
  CHECK(p * q == IntPolynomial{1, 0, 0, -1});
  CHECK(p.degree() == 1);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK((p + q) == IntPolynomial{2, 0, 1});
  CHECK((p - p).is_zero());
  CHECK(IntPolynomial::one_minus_power(3) == IntPolynomial{1, 0, 0, -1});
  CHECK(p.eval(BigInt(5)) == -4);
}

TEST_CASE("multiply and divide by 1 - t^m") {
  IntPolynomial p{3, 0, -2, 1, 7};
  for (int m : {1, 2, 3, 5, 9}) {
    IntPolynomial q = p.times_one_minus_power(m);
    CHECK(q == p * IntPolynomial::one_minus_power(m));
    CHECK(q.divide_by_one_minus_power(m) == p);
  }
  CHECK_THROWS_WITH(IntPolynomial({1, 1}).divide_by_one_minus_power(2),
                    "inexact polynomial division");
}

TEST_CASE("exact division") {
  IntPolynomial a{2, 1};   // 2 + t
  IntPolynomial b{-1, 3, 5};
  CHECK((a * b).exact_divide(a) == b);
  CHECK((a * b).exact_divide(b) == a);
  CHECK_THROWS_WITH(IntPolynomial({1, 1, 1}).exact_divide(IntPolynomial({1, 1})),
                    "inexact polynomial division");
}

TEST_CASE("reversal and self-reciprocal detection") {
  IntPolynomial p{1, -3, -3, 1};
  CHECK(p.self_reciprocal_sign() == 1);
  IntPolynomial q{1, 2, 0, -2, -1};
  CHECK(q.self_reciprocal_sign() == -1);
  CHECK(IntPolynomial({1, 2, 3}).self_reciprocal_sign() == 0);
  CHECK(p.reversed() == p);
  CHECK(IntPolynomial({0, 0, 1}).reversed() == IntPolynomial{1});
}

TEST_CASE("polynomial gcd") {
  IntPolynomial a = IntPolynomial::one_minus_power(2);
  IntPolynomial b = IntPolynomial::one_minus_power(3);
  CHECK(fshape::gcd(a, b) == IntPolynomial{-1, 1});  // t - 1, positive leading
  IntPolynomial c{6};
  CHECK(fshape::gcd(c, IntPolynomial{4}) == IntPolynomial{1});  // primitive
  CHECK(fshape::gcd(IntPolynomial{}, a * a) == a * a);  // (1-t^2)^2, leading +1
}

TEST_CASE("rational function normalization") {
  RationalFunction r(IntPolynomial::one_minus_power(2),
                     IntPolynomial::one_minus_power(3));
  // (1-t^2)/(1-t^3) = (1+t)/(1+t+t^2) after cancelling 1-t
  CHECK(r.num() == IntPolynomial{1, 1});
  CHECK(r.den() == IntPolynomial{1, 1, 1});
  RationalFunction s(IntPolynomial{2, 2}, IntPolynomial{4});
  CHECK(s.num() == IntPolynomial{1, 1});
  CHECK(s.den() == IntPolynomial{2});
  CHECK(!s.is_polynomial());
  RationalFunction t(IntPolynomial{-1, -1}, IntPolynomial{-1});
  CHECK(t.is_polynomial());
  CHECK(t.to_polynomial() == IntPolynomial{1, 1});
}

TEST_CASE("series expansion of (1+t^3)/(1-t)^2") {
  RationalFunction r(IntPolynomial{1, 0, 0, 1},
                     IntPolynomial::one_minus_power(1) * IntPolynomial::one_minus_power(1));
  auto s = r.series(5);
  std::vector<BigInt> want{1, 2, 3, 5, 7, 9};
  CHECK(s == want);
}

TEST_CASE("series expansion errors on a pole at the origin") {
  RationalFunction r(IntPolynomial{1}, IntPolynomial{0, 1});
  CHECK_THROWS_WITH(r.series(3), "pole at origin");
}

TEST_CASE("series helpers") {
  std::vector<BigInt> one_minus_t{1, -1};
  auto inv = fshape::series::invert(one_minus_t, 5);
  CHECK(inv == std::vector<BigInt>{1, 1, 1, 1, 1});
  auto prod = fshape::series::mul(inv, one_minus_t, 5);
  CHECK(prod == std::vector<BigInt>{1, 0, 0, 0, 0});
  std::vector<BigInt> v{1, 0, 0, 0, 0, 0};
  fshape::series::div_one_minus_power(v, 2);
  CHECK(v == std::vector<BigInt>{1, 0, 1, 0, 1, 0});
  fshape::series::mul_one_minus_power(v, 2);
  CHECK(v == std::vector<BigInt>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("charpoly frozen examples") {
  IntMatrix m1(1, 1);
  m1.at(0, 0) = -1;
  CHECK(fshape::charpoly(m1) == IntPolynomial{1, 1});  // t + 1
  CHECK(fshape::charpoly(IntMatrix::identity(2)) == IntPolynomial{1, -2, 1});
  CHECK(fshape::charpoly(IntMatrix()) == IntPolynomial{1});
  // Coxeter element for the genus-2 unimodular case: basis eps, f1, f2 with
  // c(eps) = eps - 2 f1, c(f1) = eps - f1 + f2, c(f2) = f1.
  IntMatrix c(3, 3);
  c.at(0, 0) = 1; c.at(0, 1) = 1;
  c.at(1, 0) = -2; c.at(1, 1) = -1; c.at(1, 2) = 1;
  c.at(2, 1) = 1;
  IntPolynomial want{1, 0, 0, 1};  // t^3 + 1
  CHECK(fshape::charpoly_berkowitz(c) == want);
  CHECK(fshape::charpoly_bareiss(c) == want);
}

namespace {

IntMatrix random_matrix(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  return m;
}

IntMatrix eval_poly_at_matrix(const IntPolynomial& p, const IntMatrix& a) {
  const int n = a.rows();
  IntMatrix acc(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * a;
    for (int i = 0; i < n; ++i) acc.at(i, i) += p.coeff(k);
  }
  return acc;
}

}  // namespace

TEST_CASE("charpoly engines agree on random matrices") {
  std::mt19937 rng(20260816);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 8;
    IntMatrix m = random_matrix(rng, n, -4, 4);
    IntPolynomial a = fshape::charpoly_berkowitz(m);
    IntPolynomial b = fshape::charpoly_bareiss(m);
    CHECK(a == b);
    CHECK(a.degree() == n);
    CHECK(a.leading() == 1);
  }
}

TEST_CASE("Cayley-Hamilton") {
  std::mt19937 rng(424242);
  for (int n : {1, 2, 3, 5, 8, 12}) {
    IntMatrix m = random_matrix(rng, n, -3, 3);
    IntPolynomial p = fshape::charpoly(m);
    CHECK(eval_poly_at_matrix(p, m).is_zero());
  }
}

TEST_CASE("trace and determinant read off the charpoly") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 6;
    IntMatrix m = random_matrix(rng, n, -5, 5);
    IntPolynomial p = fshape::charpoly(m);
    BigInt trace(0);
    for (int i = 0; i < n; ++i) trace += m.at(i, i);
    CHECK(p.coeff(n - 1) == -trace);
    BigInt det = fshape::determinant(m);
    BigInt sign = n % 2 == 0 ? 1 : -1;
    CHECK(p.coeff(0) == sign * det);
  }
}

TEST_CASE("integer determinant basics") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2; m.at(0, 1) = 3; m.at(1, 0) = 1; m.at(1, 1) = 4;
  CHECK(fshape::determinant(m) == 5);
  IntMatrix z(3, 3);
  CHECK(fshape::determinant(z) == 0);
  CHECK(fshape::determinant(IntMatrix::identity(4)) == 1);
}
