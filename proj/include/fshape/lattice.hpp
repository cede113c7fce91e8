#pragma once

#include <vector>

#include "fshape/bigint.hpp"
#include "fshape/frame_shape.hpp"
#include "fshape/graded.hpp"
#include "fshape/matrix.hpp"

namespace fshape {

// Even lattice attached to a signature: one A_{a_i - 1} chain of (-2)-vectors
// per branch point, a central vector of square 2g-2 tied to the chain heads,
// and a hyperbolic pair f1, f2.  Basis order: chains, eps, f1, f2.
struct FuchsianLattice {
  Signature sig;
  IntMatrix gram{0, 0};
  std::vector<int> chain_start;  // index of delta_{i,1} per branch

  int rank() const { return gram.rows(); }
  int chain_length(int i) const { return sig.alpha[i] - 1; }
  int delta_index(int i, int j) const;  // j = 1..chain_length(i)
  int eps_index() const { return rank() - 3; }
  int f1_index() const { return rank() - 2; }
  int f2_index() const { return rank() - 1; }
};

FuchsianLattice build_lattice(const Signature& sig);

BigInt inner_product(const IntMatrix& gram, const std::vector<BigInt>& x,
                     const std::vector<BigInt>& y);

// x -> x + <x, root> root, for a root of square -2.
IntMatrix reflection_matrix(const IntMatrix& gram, const std::vector<BigInt>& root);

// Eichler transvection x -> x + <x,f> w - <x,w> f - (<w,w>/2) <x,f> f for an
// isotropic f orthogonal to w.
IntMatrix eichler_matrix(const IntMatrix& gram, const std::vector<BigInt>& f,
                         const std::vector<BigInt>& w);

// Coxeter element at the cusp: chain reflections, the transvection by
// (f1, eps), and the reflection in f1 - f2, rightmost applied first.
IntMatrix coxeter_infinity(const FuchsianLattice& lat);

// Same matrix written down column by column; cheap enough for big sweeps.
IntMatrix coxeter_infinity_fast(const FuchsianLattice& lat);

// Frame shape of a Coxeter element of the simple root systems.
FrameShape ade_coxeter_shape(char series, int l);

}  // namespace fshape
