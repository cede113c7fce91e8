#include "fshape/frame_shape.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fshape {

namespace {

// Moebius function table for 0..n.
std::vector<int> moebius_table(int n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  std::vector<int> primes;
  mu[0] = 0;
  for (int i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (int p : primes) {
      long long ip = static_cast<long long>(i) * p;
      if (ip > n) break;
      composite[ip] = true;
      if (i % p == 0) {
        mu[ip] = 0;
        break;
      }
      mu[ip] = -mu[i];
    }
  }
  return mu;
}

// Coefficients 1..last of -t f'(t)/f(t) for a polynomial f with f(0) = 1;
// for f = prod (1-t^m)^{chi_m} this is the sum of m*chi_m over m | n.
std::vector<BigInt> log_derivative(const IntPolynomial& f, int last) {
  IntPolynomial num = f.derivative().shifted(1);
  std::vector<BigInt> v = RationalFunction(-num, f).series(last);
  return v;
}

}  // namespace

FrameShape::FrameShape(std::map<int, int> exponents) : chi_(std::move(exponents)) {
  for (const auto& [m, e] : chi_)
    if (m <= 0) throw std::invalid_argument("cyclotomic index must be positive");
  prune();
}

void FrameShape::prune() {
  for (auto it = chi_.begin(); it != chi_.end();)
    it = it->second == 0 ? chi_.erase(it) : std::next(it);
}

int FrameShape::exponent(int m) const {
  auto it = chi_.find(m);
  return it == chi_.end() ? 0 : it->second;
}

long long FrameShape::degree() const {
  long long d = 0;
  for (const auto& [m, e] : chi_) d += static_cast<long long>(m) * e;
  return d;
}

long long FrameShape::order() const {
  long long h = 1;
  for (const auto& [m, e] : chi_) {
    h = std::lcm(h, static_cast<long long>(m));
    if (h > (1LL << 50)) throw std::overflow_error("order of frame shape too large");
  }
  return h;
}

FrameShape& FrameShape::mul_factor(int m, int e) {
  if (m <= 0) throw std::invalid_argument("cyclotomic index must be positive");
  auto it = chi_.emplace(m, 0).first;
  it->second += e;
  if (it->second == 0) chi_.erase(it);
  return *this;
}

FrameShape operator*(const FrameShape& a, const FrameShape& b) {
  FrameShape r = a;
  for (const auto& [m, e] : b.chi_) r.mul_factor(m, e);
  return r;
}

FrameShape operator/(const FrameShape& a, const FrameShape& b) {
  FrameShape r = a;
  for (const auto& [m, e] : b.chi_) r.mul_factor(m, -e);
  return r;
}

FrameShape FrameShape::saito_dual(long long h) const {
  if (h == 0) h = order();
  if (h <= 0) throw std::invalid_argument("h must be positive");
  std::map<int, int> dual;
  for (const auto& [m, e] : chi_) {
    if (h % m != 0) throw std::runtime_error("h incompatible with support");
    dual[static_cast<int>(h / m)] -= e;
  }
  return FrameShape(std::move(dual));
}

bool FrameShape::is_self_dual(long long h) const { return saito_dual(h) == *this; }

RationalFunction FrameShape::to_rational() const {
  return RationalFunction::from_cyclotomic(chi_);
}

IntPolynomial FrameShape::to_polynomial() const {
  // p = prod_d Phi_d^{e_d} with e_d = sum_{d | m} chi_m; a polynomial needs
  // every cyclotomic multiplicity e_d >= 0.
  const int maxm = chi_.empty() ? 0 : chi_.rbegin()->first;
  for (int d = 1; d <= maxm; ++d) {
    int e = 0;
    for (const auto& [m, c] : chi_)
      if (m % d == 0) e += c;
    if (e < 0) throw std::runtime_error("not a polynomial");
  }
  return to_rational().to_polynomial();
}

std::vector<BigInt> FrameShape::series(int last) const {
  return to_rational().series(last);
}

FrameShape FrameShape::from_rational(const RationalFunction& f) {
  if (f.is_zero()) throw std::runtime_error("not a cyclotomic product");
  const IntPolynomial& num = f.num();
  const IntPolynomial& den = f.den();
  if (num.coeff(0) != 1 || den.coeff(0) != 1)
    throw std::runtime_error("not a cyclotomic product");
  const int dmax = std::max(num.degree(), den.degree());
  if (dmax == 0) return FrameShape();
  // Any cyclotomic factor Phi_d appearing in lowest terms has phi(d) <= dmax,
  // hence d <= 2*dmax^2; the support of chi is confined to the same range.
  const int bound = 2 * dmax * dmax;
  std::vector<BigInt> a = log_derivative(num, bound);
  if (!den.coeffs().empty() && den.degree() > 0) {
    std::vector<BigInt> ad = log_derivative(den, bound);
    for (int i = 0; i <= bound; ++i) a[i] -= ad[i];
  }
  // a_n = sum_{m | n} m chi_m  =>  m chi_m = sum_{d | m} mu(m/d) a_d.
  std::vector<int> mu = moebius_table(bound);
  std::vector<BigInt> s(bound + 1, BigInt(0));
  for (int d = 1; d <= bound; ++d) {
    if (a[d] == 0) continue;
    for (int m = d; m <= bound; m += d) {
      const int q = mu[m / d];
      if (q == 1)
        s[m] += a[d];
      else if (q == -1)
        s[m] -= a[d];
    }
  }
  std::map<int, int> chi;
  // Total weight of a genuine product in lowest terms is bounded by a small
  // multiple of dmax^2 (deepest case: a single cyclotomic polynomial); the
  // cap keeps the re-expansion check cheap when the inversion produced junk.
  const long long weight_cap = 8LL * dmax * dmax + 16;
  long long weight = 0;
  for (int m = 1; m <= bound; ++m) {
    if (s[m] == 0) continue;
    if (s[m] % m != 0) throw std::runtime_error("not a cyclotomic product");
    BigInt e = s[m] / m;
    if (e > weight_cap || e < -weight_cap) throw std::runtime_error("not a cyclotomic product");
    const int ei = static_cast<int>(e);
    weight += static_cast<long long>(m) * (ei > 0 ? ei : -ei);
    if (weight > weight_cap) throw std::runtime_error("not a cyclotomic product");
    chi[m] = ei;
  }
  FrameShape result(std::move(chi));
  // The log-derivative only sees f up to the computed precision; re-expand
  // and demand exact equality before trusting the exponents.  Compare by
  // cross-multiplication so no gcd ever runs on the expanded products.
  IntPolynomial pos = IntPolynomial::one(), neg = IntPolynomial::one();
  for (const auto& [m, e] : result.chi_) {
    IntPolynomial& side = e > 0 ? pos : neg;
    for (int i = 0; i < (e > 0 ? e : -e); ++i) side = side.times_one_minus_power(m);
  }
  if (pos * den != neg * num) throw std::runtime_error("not a cyclotomic product");
  return result;
}

FrameShape FrameShape::from_polynomial(const IntPolynomial& p) {
  return from_rational(RationalFunction(p));
}

FrameShape FrameShape::parse(const std::string& text) {
  std::vector<std::vector<std::pair<int, int>>> parts(1);
  size_t i = 0;
  const auto fail = [&text]() {
    throw std::invalid_argument("cannot parse frame shape: " + text);
  };
  bool in_denominator = false;
  while (i < text.size()) {
    unsigned char ch = text[i];
    if (std::isspace(ch) || ch == '*' || ch == '.') {
      ++i;
      continue;
    }
    if (ch == 0xC2 && i + 1 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0xB7) {  // UTF-8 middle dot
      i += 2;
      continue;
    }
    if (ch == '/') {
      if (in_denominator) fail();
      in_denominator = true;
      parts.emplace_back();
      ++i;
      continue;
    }
    if (!std::isdigit(ch)) fail();
    long long m = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      m = m * 10 + (text[i] - '0');
      if (m > 1 << 28) fail();
      ++i;
    }
    long long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
      e = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        e = e * 10 + (text[i] - '0');
        if (e > 1 << 28) fail();
        ++i;
      }
    }
    if (m == 0) fail();
    parts.back().emplace_back(static_cast<int>(m), static_cast<int>(e));
  }
  if (parts[0].empty()) fail();
  std::map<int, int> chi;
  for (size_t part = 0; part < parts.size(); ++part)
    for (const auto& [m, e] : parts[part]) chi[m] += part == 0 ? e : -e;
  return FrameShape(std::move(chi));
}

std::string FrameShape::str() const {
  std::ostringstream num, den;
  bool first_num = true, first_den = true;
  for (const auto& [m, e] : chi_) {
    std::ostringstream& out = e > 0 ? num : den;
    bool& first = e > 0 ? first_num : first_den;
    if (!first) out << "·";
    first = false;
    out << m;
    const int a = e > 0 ? e : -e;
    if (a != 1) out << "^" << a;
  }
  std::string n = num.str();
  if (n.empty()) n = "1^0";
  std::string d = den.str();
  return d.empty() ? n : n + "/" + d;
}

}  // namespace fshape
