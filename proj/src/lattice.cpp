#include "fshape/lattice.hpp"

#include <stdexcept>

namespace fshape {

int FuchsianLattice::delta_index(int i, int j) const {
  return chain_start[i] + (j - 1);
}

FuchsianLattice build_lattice(const Signature& sig) {
  FuchsianLattice lat;
  lat.sig = sig;
  int n = 0;
  for (int a : sig.alpha) {
    lat.chain_start.push_back(n);
    n += a - 1;
  }
  n += 3;
  lat.gram = IntMatrix(n, n);
  const int eps = n - 3, f1 = n - 2, f2 = n - 1;
  for (int i = 0; i < static_cast<int>(sig.alpha.size()); ++i) {
    const int len = sig.alpha[i] - 1;
    for (int j = 1; j <= len; ++j) {
      const int a = lat.delta_index(i, j);
      lat.gram.at(a, a) = -2;
      if (j < len) {
        const int b = lat.delta_index(i, j + 1);
        lat.gram.at(a, b) = 1;
        lat.gram.at(b, a) = 1;
      }
    }
    const int head = lat.delta_index(i, 1);
    lat.gram.at(head, eps) = 1;
    lat.gram.at(eps, head) = 1;
  }
  lat.gram.at(eps, eps) = 2 * sig.genus - 2;
  lat.gram.at(f1, f2) = 1;
  lat.gram.at(f2, f1) = 1;
  return lat;
}

BigInt inner_product(const IntMatrix& gram, const std::vector<BigInt>& x,
                     const std::vector<BigInt>& y) {
  const int n = gram.rows();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("vector length does not match lattice rank");
  BigInt out = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    BigInt row = 0;
    for (int j = 0; j < n; ++j) row += gram.at(i, j) * y[j];
    out += x[i] * row;
  }
  return out;
}

namespace {

std::vector<BigInt> gram_times(const IntMatrix& gram, const std::vector<BigInt>& v) {
  const int n = gram.rows();
  std::vector<BigInt> out(n, BigInt(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (v[j] != 0) out[i] += gram.at(i, j) * v[j];
  return out;
}

std::vector<BigInt> basis_vector(int n, int k) {
  std::vector<BigInt> v(n, BigInt(0));
  v[k] = 1;
  return v;
}

}  // namespace

IntMatrix reflection_matrix(const IntMatrix& gram, const std::vector<BigInt>& root) {
  if (inner_product(gram, root, root) != -2)
    throw std::invalid_argument("reflection requires a vector of square -2");
  const int n = gram.rows();
  std::vector<BigInt> w = gram_times(gram, root);
  IntMatrix m = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) += root[i] * w[j];
  return m;
}

IntMatrix eichler_matrix(const IntMatrix& gram, const std::vector<BigInt>& f,
                         const std::vector<BigInt>& w) {
  if (inner_product(gram, f, f) != 0 || inner_product(gram, f, w) != 0)
    throw std::invalid_argument("transvection requires isotropic f orthogonal to w");
  const BigInt ww = inner_product(gram, w, w);
  if (ww % 2 != 0) throw std::invalid_argument("transvection requires even square");
  const BigInt half = ww / 2;
  const int n = gram.rows();
  std::vector<BigInt> gf = gram_times(gram, f);
  std::vector<BigInt> gw = gram_times(gram, w);
  IntMatrix m = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) += gf[j] * w[i] - gw[j] * f[i] - half * gf[j] * f[i];
  return m;
}

IntMatrix coxeter_infinity(const FuchsianLattice& lat) {
  const int n = lat.rank();
  std::vector<BigInt> f1 = basis_vector(n, lat.f1_index());
  std::vector<BigInt> f2 = basis_vector(n, lat.f2_index());
  std::vector<BigInt> eps = basis_vector(n, lat.eps_index());
  std::vector<BigInt> f1_minus_f2(n, BigInt(0));
  f1_minus_f2[lat.f1_index()] = 1;
  f1_minus_f2[lat.f2_index()] = -1;

  IntMatrix m = reflection_matrix(lat.gram, f1_minus_f2);
  m = eichler_matrix(lat.gram, f1, eps) * m;
  for (int i = 0; i < lat.sig.branch_count(); ++i)
    for (int j = lat.chain_length(i); j >= 1; --j)
      m = reflection_matrix(lat.gram, basis_vector(n, lat.delta_index(i, j))) * m;
  return m;
}

IntMatrix coxeter_infinity_fast(const FuchsianLattice& lat) {
  const int n = lat.rank();
  const int eps = lat.eps_index(), f1 = lat.f1_index(), f2 = lat.f2_index();
  IntMatrix m(n, n);
  for (int i = 0; i < lat.sig.branch_count(); ++i) {
    const int len = lat.chain_length(i);
    for (int j = 1; j < len; ++j)
      m.at(lat.delta_index(i, j + 1), lat.delta_index(i, j)) = 1;
    const int last = lat.delta_index(i, len);
    for (int j = 1; j <= len; ++j) m.at(lat.delta_index(i, j), last) -= 1;
    m.at(f1, lat.delta_index(i, 1)) -= 1;
    m.at(lat.delta_index(i, 1), eps) = 1;
    m.at(lat.delta_index(i, 1), f1) = 1;
  }
  m.at(eps, eps) = 1;
  m.at(f1, eps) = -(2 * lat.sig.genus - 2);
  m.at(eps, f1) = 1;
  m.at(f1, f1) = -(lat.sig.genus - 1);
  m.at(f2, f1) = 1;
  m.at(f1, f2) = 1;
  return m;
}

FrameShape ade_coxeter_shape(char series, int l) {
  std::map<int, int> chi;
  switch (series) {
    case 'A':
      if (l < 1) throw std::invalid_argument("A series needs l >= 1");
      chi[l + 1] += 1;
      chi[1] -= 1;
      break;
    case 'D':
      if (l < 3) throw std::invalid_argument("D series needs l >= 3");
      chi[2] += 1;
      chi[2 * l - 2] += 1;
      chi[1] -= 1;
      chi[l - 1] -= 1;
      break;
    case 'E':
      if (l == 6) {
        chi = {{2, 1}, {3, 1}, {12, 1}, {1, -1}, {4, -1}, {6, -1}};
      } else if (l == 7) {
        chi = {{2, 1}, {3, 1}, {18, 1}, {1, -1}, {6, -1}, {9, -1}};
      } else if (l == 8) {
        chi = {{2, 1}, {3, 1}, {5, 1}, {30, 1}, {1, -1}, {6, -1}, {10, -1}, {15, -1}};
      } else {
        throw std::invalid_argument("E series needs l in {6,7,8}");
      }
      break;
    default:
      throw std::invalid_argument("unknown series");
  }
  return FrameShape(chi);
}

}  // namespace fshape
