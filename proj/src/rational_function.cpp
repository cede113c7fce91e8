#include "fshape/rational_function.hpp"

#include <boost/multiprecision/integer.hpp>
#include <sstream>
#include <stdexcept>

namespace fshape {

RationalFunction::RationalFunction() : num_(), den_(IntPolynomial::one()) {}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  if (num_.is_zero()) {
    den_ = IntPolynomial::one();
    return;
  }
  IntPolynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_divide(g);
    den_ = den_.exact_divide(g);
  }
  BigInt c = boost::multiprecision::gcd(content(num_), content(den_));
  if (c > 1) {
    std::vector<BigInt> n = num_.coeffs(), d = den_.coeffs();
    for (auto& x : n) x /= c;
    for (auto& x : d) x /= c;
    num_ = IntPolynomial(std::move(n));
    den_ = IntPolynomial(std::move(d));
  }
  // Trailing coefficient of the denominator is made positive so that
  // cyclotomic denominators come out as 1 - t^m ... with constant term +1.
  int low = 0;
  while (den_.coeff(low) == 0) ++low;
  if (den_.coeff(low) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::from_cyclotomic(const std::map<int, int>& exponents) {
  IntPolynomial num = IntPolynomial::one();
  IntPolynomial den = IntPolynomial::one();
  for (const auto& [m, e] : exponents) {
    if (e == 0) continue;
    if (m <= 0) throw std::invalid_argument("cyclotomic index must be positive");
    IntPolynomial& target = e > 0 ? num : den;
    for (int i = 0; i < (e > 0 ? e : -e); ++i) target = target.times_one_minus_power(m);
  }
  return RationalFunction(std::move(num), std::move(den));
}

int RationalFunction::degree() const {
  if (is_zero()) throw std::logic_error("degree of zero");
  return num_.degree() - den_.degree();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFunction::is_polynomial() const {
  return den_ == IntPolynomial::one();
}

IntPolynomial RationalFunction::to_polynomial() const {
  if (!is_polynomial()) throw std::runtime_error("not a polynomial");
  return num_;
}

std::vector<BigInt> RationalFunction::series(int last) const {
  if (last < 0) throw std::invalid_argument("series length must be >= 0");
  if (den_.coeff(0) == 0) throw std::runtime_error("pole at origin");
  std::vector<BigInt> r(last + 1, BigInt(0));
  if (num_.is_zero()) return r;
  const BigInt d0 = den_.coeff(0);
  std::vector<BigInt> rem(last + 1, BigInt(0));
  for (int i = 0; i <= last && i <= num_.degree(); ++i) rem[i] = num_.coeff(i);
  for (int k = 0; k <= last; ++k) {
    if (rem[k] == 0) continue;
    if (rem[k] % d0 != 0) throw std::runtime_error("series coefficients are not integral");
    r[k] = rem[k] / d0;
    for (int j = 1; j <= den_.degree() && k + j <= last; ++j) {
      const BigInt& dj = den_.coeff(j);
      if (dj != 0) rem[k + j] -= r[k] * dj;
    }
  }
  return r;
}

BigRat RationalFunction::eval(const BigRat& x) const {
  BigRat d = den_.eval(x);
  if (d == 0) throw std::runtime_error("evaluation at a pole");
  return num_.eval(x) / d;
}

std::string RationalFunction::str(const char* var) const {
  std::ostringstream out;
  if (is_polynomial()) {
    out << num_.str(var);
  } else {
    out << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
  }
  return out.str();
}

}  // namespace fshape
