#include "fshape/monodromy.hpp"

#include <numeric>
#include <stdexcept>

namespace fshape {

CyclicDivisor divisor_mul(const CyclicDivisor& a, const CyclicDivisor& b) {
  CyclicDivisor out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      const long long g = std::gcd(u, v);
      out[u / g * v] += cu * cv * g;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

FrameShape monodromy_shape(const std::vector<int>& weights, int degree) {
  if (degree <= 0) throw std::invalid_argument("degree must be positive");
  CyclicDivisor acc{{1, BigRat(1)}};
  for (int w : weights) {
    if (w <= 0 || w >= degree)
      throw std::invalid_argument("weights must lie strictly inside (0, degree)");
    const int g = std::gcd(w, degree);
    CyclicDivisor factor{{degree / g, BigRat(1, w / g)}, {1, BigRat(-1)}};
    acc = divisor_mul(acc, factor);
  }
  std::map<int, int> chi;
  for (const auto& [m, c] : acc) {
    if (boost::multiprecision::denominator(c) != 1)
      throw std::runtime_error("non-integral monodromy divisor");
    chi[static_cast<int>(m)] = static_cast<int>(boost::multiprecision::numerator(c));
  }
  return FrameShape(chi);
}

long long milnor_number(const std::vector<int>& weights, int degree) {
  BigRat mu(1);
  for (int w : weights) mu *= BigRat(degree - w, w);
  if (boost::multiprecision::denominator(mu) != 1 || mu < 0)
    throw std::runtime_error("weights do not define an isolated singularity");
  return static_cast<long long>(boost::multiprecision::numerator(mu));
}

}  // namespace fshape
