#pragma once

#include <string>
#include <vector>

#include "fshape/bigint.hpp"
#include "fshape/frame_shape.hpp"
#include "fshape/polynomial.hpp"
#include "fshape/rational_function.hpp"

namespace fshape {

// Genus and branch orders of a quotient-surface signature (g; a_1,...,a_r).
struct Signature {
  int genus = 0;
  std::vector<int> alpha;

  Signature() = default;
  Signature(int g, std::vector<int> a);
  static Signature parse(const std::string& text);  // "0;2,3,7", "3;"
  std::string str() const;

  int branch_count() const { return static_cast<int>(alpha.size()); }
  // Rank of the associated hyperbolic lattice: sum (a_i - 1) + 3.
  int rank() const;
  bool operator==(const Signature& o) const {
    return genus == o.genus && alpha == o.alpha;
  }
};

// 2g - 2 + r - sum 1/a_i > 0, exactly.
bool is_hyperbolic(const Signature& sig);

// prod (1 - t^{d_i}) / prod (1 - t^{w_j}).
RationalFunction poincare_from_weights(const std::vector<int>& weights,
                                       const std::vector<int>& degrees);

// Closed form for the canonical ring of a Fuchsian group of the given
// signature, valid for every genus.
RationalFunction poincare_fuchsian(const Signature& sig);

// Orbit invariants of the fractional canonical bundle K/e: beta_i is the
// inverse of e mod a_i and b makes the virtual degrees match.
struct OrbitData {
  long long b = 0;
  std::vector<int> beta;
};
OrbitData orbit_data(const Signature& sig, int gorenstein);

// Consistency check for a claimed orbit degree b at automorphism order R:
// recomputes beta_i = R^{-1} mod a_i, the virtual degree
// vdeg = -b + sum beta_i/a_i, and tests R*vdeg == 2 - 2g - r + sum 1/a_i.
struct GorensteinData {
  std::vector<int> beta;
  BigRat vdeg;
  bool ok = false;
};
GorensteinData gorenstein_check(const Signature& sig, long long b, int exponent);

// Genus-0 dimension count: coeff_k = max(0, 1 + k b - sum ceil(k beta_i/a_i)).
std::vector<BigInt> poincare_orbit(const Signature& sig, const OrbitData& data,
                                   int last);

// psi = (1-t)^{2-r} prod (1-t^{a_i}).
RationalFunction psi_factor(const Signature& sig);

// phi = p * psi for the canonical p of the signature, expanded directly as a
// polynomial; cheap enough for exhaustive sweeps.
IntPolynomial phi_polynomial(const Signature& sig);

// How the graded data of a record reduces to its monodromy shapes.
enum class ReductionKind {
  kHypersurface,   // phi~ = phi/(1-t)^{2g}
  kOneRelation,    // one extra relation of degree d1
  kPQRelation,     // relation pair governed by (p, q)
  kPfaffian,       // the genus-5 unbranched special case
};

struct ReductionRule {
  ReductionKind kind = ReductionKind::kHypersurface;
  int p = 0, q = 0;
  int d1 = 0, d2 = 0;
};

// The reduced characteristic shape phi~ of a record.
FrameShape reduce_phi(const Signature& sig, const RationalFunction& phi,
                      const ReductionRule& rule);

// Boundary variant of the monodromy shape, and its inverse.
FrameShape boundary_shape(const FrameShape& phi_m, const ReductionRule& rule);
FrameShape shape_from_boundary(const FrameShape& phi_b, const ReductionRule& rule);

}  // namespace fshape
