#pragma once

#include <cmath>

#include "qgeo/hilbert.hpp"
#include "qgeo/rng.hpp"

namespace qgeo::test {

// Random interior Bloch vector; the default cap stays clear of the metric
// singularity at the boundary.
inline BlochVector random_bloch(CounterRng& rng, double cap = 0.99) {
  return BlochVector(rng.ball3(cap));
}

inline DensityOperator random_density(CounterRng& rng, double cap = 0.99) {
  return density_from_bloch(random_bloch(rng, cap));
}

// Random traceless Hermitian 2x2 operator, entries O(1).
inline HermitianOperator random_tangent2(CounterRng& rng) {
  const double a = rng.next_gaussian();
  const double re = rng.next_gaussian();
  const double im = rng.next_gaussian();
  ComplexMatrix m(2);
  m(0, 0) = a;
  m(1, 1) = -a;
  m(0, 1) = Complex(re, -im);
  m(1, 0) = Complex(re, im);
  return HermitianOperator(m);
}

// Random Hermitian n x n with Gaussian entries.
inline HermitianOperator random_hermitian(CounterRng& rng, int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = rng.next_gaussian();
    for (int j = i + 1; j < n; ++j) {
      const Complex z(rng.next_gaussian(), rng.next_gaussian());
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return HermitianOperator(m);
}

}  // namespace qgeo::test
