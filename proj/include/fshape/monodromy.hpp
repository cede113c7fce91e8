#pragma once

#include <map>
#include <vector>

#include "fshape/bigint.hpp"
#include "fshape/frame_shape.hpp"

namespace fshape {

// Formal Z-linear combinations of cyclic-group symbols L_a with the product
// L_a * L_b = gcd(a,b) L_{lcm(a,b)}.  Rational coefficients appear in
// intermediate factors ((1/v) L_u - L_1) but every finished monodromy divisor
// is integral.
using CyclicDivisor = std::map<long long, BigRat>;

CyclicDivisor divisor_mul(const CyclicDivisor& a, const CyclicDivisor& b);

// Monodromy frame shape of a quasihomogeneous hypersurface with the given
// weights and degree: the product of ((1/v_i) L_{u_i} - L_1) over the
// reduced ratios degree/weight_i = u_i/v_i.
FrameShape monodromy_shape(const std::vector<int>& weights, int degree);

// prod_i (degree - w_i)/w_i, checked to be a non-negative integer.
long long milnor_number(const std::vector<int>& weights, int degree);

}  // namespace fshape
