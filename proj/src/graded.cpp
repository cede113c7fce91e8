#include "fshape/graded.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fshape {

Signature::Signature(int g, std::vector<int> a) : genus(g), alpha(std::move(a)) {
  if (genus < 0) throw std::invalid_argument("genus must be >= 0");
  for (int x : alpha)
    if (x < 2) throw std::invalid_argument("branch orders must be >= 2");
  std::sort(alpha.begin(), alpha.end());
}

Signature Signature::parse(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("cannot parse signature: " + text);
  const auto parse_int = [&text](const std::string& part) {
    size_t used = 0;
    int v = std::stoi(part, &used);
    if (used != part.size())
      throw std::invalid_argument("cannot parse signature: " + text);
    return v;
  };
  int g = parse_int(text.substr(0, semi));
  std::vector<int> alpha;
  std::string rest = text.substr(semi + 1);
  size_t pos = 0;
  while (pos < rest.size()) {
    size_t comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    alpha.push_back(parse_int(rest.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return Signature(g, std::move(alpha));
}

std::string Signature::str() const {
  std::ostringstream out;
  out << genus << ";";
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i) out << ",";
    out << alpha[i];
  }
  return out.str();
}

int Signature::rank() const {
  int n = 3;
  for (int a : alpha) n += a - 1;
  return n;
}

bool is_hyperbolic(const Signature& sig) {
  BigRat sum(0);
  for (int a : sig.alpha) sum += BigRat(1, a);
  return BigRat(2 * sig.genus - 2 + sig.branch_count()) > sum;
}

RationalFunction poincare_from_weights(const std::vector<int>& weights,
                                       const std::vector<int>& degrees) {
  std::map<int, int> factors;
  for (int d : degrees) {
    if (d <= 0) throw std::invalid_argument("degrees must be positive");
    ++factors[d];
  }
  for (int w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
    --factors[w];
  }
  return RationalFunction::from_cyclotomic(factors);
}

RationalFunction poincare_fuchsian(const Signature& sig) {
  const int g = sig.genus;
  IntPolynomial cubic(
      std::vector<BigInt>{BigInt(1), BigInt(g - 2), BigInt(g - 2), BigInt(1)});
  IntPolynomial one_minus_t_sq =
      IntPolynomial::one_minus_power(1) * IntPolynomial::one_minus_power(1);
  RationalFunction p(cubic, one_minus_t_sq);
  for (int a : sig.alpha) {
    IntPolynomial num = IntPolynomial::one_minus_power(a - 1).shifted(2);
    p = p + RationalFunction(num, one_minus_t_sq * IntPolynomial::one_minus_power(a));
  }
  return p;
}

OrbitData orbit_data(const Signature& sig, int gorenstein) {
  if (gorenstein <= 0) throw std::invalid_argument("gorenstein index must be positive");
  OrbitData data;
  BigRat beta_sum(0);
  for (int a : sig.alpha) {
    if (std::gcd(gorenstein, a) != 1) throw std::runtime_error("no valid beta_i");
    int inv = 0;
    for (int x = 1; x < a; ++x)
      if (x * static_cast<long long>(gorenstein) % a == 1) {
        inv = x;
        break;
      }
    data.beta.push_back(inv);
    beta_sum += BigRat(inv, a);
  }
  BigRat vdeg_k(2 * sig.genus - 2);
  for (int a : sig.alpha) vdeg_k += BigRat(a - 1, a);
  BigRat b = vdeg_k / gorenstein + beta_sum;
  if (boost::multiprecision::denominator(b) != 1)
    throw std::runtime_error("no valid beta_i");
  data.b = static_cast<long long>(boost::multiprecision::numerator(b));
  return data;
}

GorensteinData gorenstein_check(const Signature& sig, long long b, int exponent) {
  if (exponent <= 0) throw std::invalid_argument("gorenstein index must be positive");
  GorensteinData data;
  data.vdeg = BigRat(-b);
  for (int a : sig.alpha) {
    if (std::gcd(static_cast<long long>(exponent), static_cast<long long>(a)) != 1)
      throw std::runtime_error("no valid beta_i");
    int inv = a == 1 ? 0 : 1;
    while (inv < a && inv * static_cast<long long>(exponent) % a != 1) ++inv;
    data.beta.push_back(inv);
    data.vdeg += BigRat(inv, a);
  }
  BigRat degree_bound(2 - 2 * sig.genus - sig.branch_count());
  for (int a : sig.alpha) degree_bound += BigRat(1, a);
  data.ok = BigRat(exponent) * data.vdeg == degree_bound;
  return data;
}

std::vector<BigInt> poincare_orbit(const Signature& sig, const OrbitData& data,
                                   int last) {
  if (sig.genus != 0)
    throw std::runtime_error("Riemann-Roch shortcut only valid for genus 0");
  if (data.beta.size() != sig.alpha.size())
    throw std::invalid_argument("orbit data does not match signature");
  std::vector<BigInt> out(last + 1, BigInt(0));
  for (int k = 0; k <= last; ++k) {
    long long v = 1 + k * data.b;
    for (size_t i = 0; i < sig.alpha.size(); ++i) {
      const long long num = static_cast<long long>(k) * data.beta[i];
      v -= (num + sig.alpha[i] - 1) / sig.alpha[i];  // ceil
    }
    out[k] = v > 0 ? v : 0;
  }
  return out;
}

RationalFunction psi_factor(const Signature& sig) {
  std::map<int, int> factors;
  factors[1] = 2 - sig.branch_count();
  for (int a : sig.alpha) ++factors[a];
  return RationalFunction::from_cyclotomic(factors);
}

IntPolynomial phi_polynomial(const Signature& sig) {
  // phi = p * psi = (1-t)^{-r} [cubic * P + sum_i t^2 (1-t^{a_i-1}) P_i]
  // with P = prod (1-t^{a_i}), P_i = P/(1-t^{a_i}).
  const int g = sig.genus;
  IntPolynomial big_p = IntPolynomial::one();
  for (int a : sig.alpha) big_p = big_p.times_one_minus_power(a);
  IntPolynomial cubic(
      std::vector<BigInt>{BigInt(1), BigInt(g - 2), BigInt(g - 2), BigInt(1)});
  IntPolynomial num = cubic * big_p;
  for (int a : sig.alpha) {
    IntPolynomial term = big_p.divide_by_one_minus_power(a)
                             .times_one_minus_power(a - 1)
                             .shifted(2);
    num += term;
  }
  for (int i = 0; i < sig.branch_count(); ++i) num = num.divide_by_one_minus_power(1);
  return num;
}

namespace {

void require_divides(int a, int b) {
  if (a <= 0 || b % a != 0)
    throw std::invalid_argument("reduction rule incompatible with degrees");
}

}  // namespace

FrameShape reduce_phi(const Signature& sig, const RationalFunction& phi,
                      const ReductionRule& rule) {
  if (rule.kind == ReductionKind::kPfaffian)
    return FrameShape(std::map<int, int>{{2, 8}, {1, -16}});
  std::map<int, int> extra;
  extra[1] = -2 * sig.genus;
  switch (rule.kind) {
    case ReductionKind::kHypersurface:
      break;
    case ReductionKind::kOneRelation:
      extra[rule.d2] += 1;
      extra[rule.d1] -= 1;
      break;
    case ReductionKind::kPQRelation: {
      require_divides(rule.q, rule.d1);
      require_divides(rule.p, rule.d2);
      require_divides(rule.q, rule.d2);
      extra[rule.d2] += rule.p - 1;
      extra[rule.d1 / rule.q] += 1;
      extra[rule.d2 / rule.p] += 1;
      extra[rule.d1] -= 1;
      extra[rule.d2 / rule.q] -= rule.p;
      break;
    }
    case ReductionKind::kPfaffian:
      break;
  }
  RationalFunction result = phi * RationalFunction::from_cyclotomic(extra);
  return FrameShape::from_rational(result);
}

FrameShape boundary_shape(const FrameShape& phi_m, const ReductionRule& rule) {
  FrameShape out = phi_m;
  switch (rule.kind) {
    case ReductionKind::kHypersurface:
      break;
    case ReductionKind::kOneRelation:
      out.mul_factor(1, -1);
      break;
    case ReductionKind::kPQRelation: {
      const int g = std::gcd(rule.p, rule.q);
      const int l = rule.p / g * rule.q;
      out.mul_factor(rule.q, rule.p);
      out.mul_factor(1, -(rule.p - 1));
      out.mul_factor(l, -g);
      break;
    }
    case ReductionKind::kPfaffian:
      out.mul_factor(1, -7);
      break;
  }
  return out;
}

FrameShape shape_from_boundary(const FrameShape& phi_b, const ReductionRule& rule) {
  FrameShape out = phi_b;
  switch (rule.kind) {
    case ReductionKind::kHypersurface:
      break;
    case ReductionKind::kOneRelation:
      out.mul_factor(1, 1);
      break;
    case ReductionKind::kPQRelation: {
      const int g = std::gcd(rule.p, rule.q);
      const int l = rule.p / g * rule.q;
      out.mul_factor(rule.q, -rule.p);
      out.mul_factor(1, rule.p - 1);
      out.mul_factor(l, g);
      break;
    }
    case ReductionKind::kPfaffian:
      out.mul_factor(1, 7);
      break;
  }
  return out;
}

}  // namespace fshape
