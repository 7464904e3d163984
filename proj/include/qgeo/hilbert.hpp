#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qgeo/errors.hpp"
#include "qgeo/vec.hpp"

namespace qgeo {

using Complex = std::complex<double>;

// Validation tolerances for density operators. Exposed so tests can pin them.
inline constexpr double kTraceTol = 1e-12;    // |tr(rho) - 1| bound
inline constexpr double kEigenFloor = -1e-12; // smallest admissible eigenvalue

// Convergence threshold for the cyclic Jacobi eigensolver: off-diagonal
// Frobenius norm below this value terminates the sweep loop.
inline constexpr double kJacobiOffdiagTol = 1e-13;

// Dense square complex matrix, row-major. Dimensions here are tiny (2 and 4),
// so no structured storage.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  Complex& operator()(int r, int c) { return data_[r * dim_ + c]; }
  const Complex& operator()(int r, int c) const { return data_[r * dim_ + c]; }

  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix scaled(Complex c) const;
  ComplexMatrix adjoint() const;

  Complex trace() const;
  double frobenius_norm() const;
  // Largest entrywise |a_ij - b_ij|.
  double max_abs_diff(const ComplexMatrix& rhs) const;

 private:
  int dim_;
  std::vector<Complex> data_;
};

// Hermitian operator: construction stores (M + M^dagger)/2, which makes
// h_ji == conj(h_ij) hold exactly in floating point (addition commutes).
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  // Trace of a Hermitian operator is real by construction.
  double trace() const { return m_.trace().real(); }

 private:
  ComplexMatrix m_;
};

// Unit-trace positive-semidefinite Hermitian operator. Construction runs the
// eigensolver and rejects |tr - 1| > kTraceTol or eigenvalues < kEigenFloor.
class DensityOperator {
 public:
  explicit DensityOperator(const HermitianOperator& op);

  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  int dim() const { return op_.dim(); }
  // tr(rho^2); 1 for pure states, 1/dim for maximally mixed.
  double purity() const;

 private:
  HermitianOperator op_;
};

// Real 3-vector P with ||P|| <= 1 (+1e-12 slack); the qubit chart of the
// density-operator manifold.
class BlochVector {
 public:
  BlochVector(double x, double y, double z);
  explicit BlochVector(const Vec3& p);

  const Vec3& p() const { return p_; }
  double operator[](int k) const { return p_[k]; }
  double norm() const { return qgeo::norm(p_); }

 private:
  Vec3 p_;
};

// Eigenvalues ascending; eigenvectors are the matching orthonormal columns.
struct Eigensystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

// The three Pauli matrices sigma_1, sigma_2, sigma_3.
std::array<HermitianOperator, 3> pauli_basis();

// rho = (I + P.sigma)/2. Rejects points outside the Bloch ball.
DensityOperator density_from_bloch(const BlochVector& p);

// P_k = tr(sigma_k rho). Requires dim == 2.
BlochVector bloch_from_density(const DensityOperator& rho);

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

// Parses "phi+", "phi-", "psi+", "psi-" (unicode variants accepted).
BellKind bell_kind_from_string(const std::string& s);
std::string to_string(BellKind kind);

// Rank-1 projector onto the requested maximally entangled two-qubit state,
// in the product basis |00>, |01>, |10>, |11>.
DensityOperator bell_state(BellKind kind);

// Cyclic Jacobi diagonalization of a complex Hermitian matrix. Terminates
// when the off-diagonal Frobenius norm drops below kJacobiOffdiagTol; throws
// ConvergenceError if the sweep cap is exceeded.
Eigensystem eigendecompose(const HermitianOperator& h);

}  // namespace qgeo
