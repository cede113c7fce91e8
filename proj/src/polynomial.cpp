#include "fshape/polynomial.hpp"

#include <boost/multiprecision/integer.hpp>
#include <sstream>
#include <stdexcept>

namespace fshape {

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  c_.assign(coeffs.begin(), coeffs.end());
  trim();
}

IntPolynomial IntPolynomial::one() { return constant(BigInt(1)); }

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(int deg, BigInt c) {
  if (deg < 0) throw std::invalid_argument("monomial degree must be >= 0");
  IntPolynomial p;
  if (c != 0) {
    p.c_.assign(deg + 1, BigInt(0));
    p.c_.back() = std::move(c);
  }
  return p;
}

IntPolynomial IntPolynomial::one_minus_power(int m) {
  if (m <= 0) throw std::invalid_argument("exponent must be positive");
  IntPolynomial p;
  p.c_.assign(m + 1, BigInt(0));
  p.c_.front() = 1;
  p.c_.back() = -1;
  return p;
}

const BigInt& IntPolynomial::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

BigInt IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return BigInt(0);
  return c_[k];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  IntPolynomial r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& p) {
  if (s == 0) return IntPolynomial();
  IntPolynomial r(p);
  for (auto& x : r.c_) x *= s;
  return r;
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  if (is_zero() || k == 0) return k == 0 ? *this : IntPolynomial();
  IntPolynomial r;
  r.c_.assign(c_.size() + k, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

IntPolynomial IntPolynomial::times_one_minus_power(int m) const {
  if (m <= 0) throw std::invalid_argument("exponent must be positive");
  if (is_zero()) return IntPolynomial();
  IntPolynomial r;
  r.c_.assign(c_.size() + m, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (int i = static_cast<int>(r.c_.size()) - 1; i >= m; --i) r.c_[i] -= r.c_[i - m];
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::divide_by_one_minus_power(int m) const {
  if (m <= 0) throw std::invalid_argument("exponent must be positive");
  if (is_zero()) return IntPolynomial();
  const int n = degree();
  if (n < m) throw std::runtime_error("inexact polynomial division");
  // Synthetic division: p = q*(1-t^m) forces q[i] = p[i] + q[i-m].
  std::vector<BigInt> q(n + 1);
  for (int i = 0; i <= n; ++i) {
    q[i] = c_[i];
    if (i >= m) q[i] += q[i - m];
  }
  for (int i = n - m + 1; i <= n; ++i)
    if (q[i] != 0) throw std::runtime_error("inexact polynomial division");
  q.resize(n - m + 1);
  return IntPolynomial(std::move(q));
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return IntPolynomial();
  const int dn = d.degree();
  if (degree() < dn) throw std::runtime_error("inexact polynomial division");
  const int qn = degree() - dn;
  std::vector<BigInt> q(qn + 1);
  std::vector<BigInt> r = c_;
  for (int k = qn; k >= 0; --k) {
    BigInt num = r[k + dn];
    if (num == 0) {
      q[k] = 0;
      continue;
    }
    if (num % d.leading() != 0) throw std::runtime_error("inexact polynomial division");
    BigInt f = num / d.leading();
    for (int j = 0; j <= dn; ++j) r[k + j] -= f * d.c_[j];
    q[k] = std::move(f);
  }
  for (const auto& x : r)
    if (x != 0) throw std::runtime_error("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat IntPolynomial::eval(const BigRat& x) const {
  BigRat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() <= 0) return IntPolynomial();
  IntPolynomial r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = BigInt(i) * c_[i];
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::reversed(int n) const {
  const int d = degree() < 0 ? 0 : degree();
  if (n < 0) n = d;
  if (n < degree()) throw std::invalid_argument("reversal order below degree");
  if (is_zero()) return IntPolynomial();
  std::vector<BigInt> r(n + 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
  return IntPolynomial(std::move(r));
}

int IntPolynomial::self_reciprocal_sign() const {
  if (is_zero()) return 1;
  IntPolynomial rev = reversed();
  if (*this == rev) return 1;
  if (*this == -rev) return -1;
  return 0;
}

std::string IntPolynomial::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& a = c_[i];
    if (a == 0) continue;
    BigInt mag = a < 0 ? BigInt(-a) : a;
    if (first) {
      if (a < 0) out << "-";
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

IntPolynomial power(const IntPolynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  IntPolynomial acc = IntPolynomial::one();
  IntPolynomial base = p;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

BigInt content(const IntPolynomial& p) {
  BigInt g(0);
  for (const auto& x : p.coeffs()) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return g < 0 ? BigInt(-g) : g;
}

namespace {

IntPolynomial primitive_positive(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  if (p.leading() < 0) c = -c;
  std::vector<BigInt> v = p.coeffs();
  for (auto& x : v) x /= c;
  return IntPolynomial(std::move(v));
}

// Pseudo-remainder up to association; enough for a primitive PRS.
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
  const int db = b.degree();
  const BigInt lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const int k = a.degree() - db;
    const BigInt la = a.leading();
    a = lb * a - la * b.shifted(k);
  }
  return a;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial f = primitive_positive(a);
  IntPolynomial g = primitive_positive(b);
  if (f.is_zero()) return g;
  while (!g.is_zero()) {
    IntPolynomial r = primitive_positive(pseudo_rem(f, g));
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

}  // namespace fshape
