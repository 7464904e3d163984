#include "qgeo/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace qgeo {

namespace {

constexpr int kJacobiMaxSweeps = 60;

double offdiag_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), data_(dim * dim) {
  if (dim <= 0) throw ValidationError("matrix dimension must be positive");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix addition dimension mismatch");
  ComplexMatrix out(dim_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix subtraction dimension mismatch");
  ComplexMatrix out(dim_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix product dimension mismatch");
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Complex aik = (*this)(i, k);
      for (int j = 0; j < dim_; ++j) out(i, j) += aik * rhs(k, j);
    }
  return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex c) const {
  ComplexMatrix out(dim_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = c * data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix comparison dimension mismatch");
  double worst = 0.0;
  for (size_t i = 0; i < data_.size(); ++i)
    worst = std::max(worst, std::abs(data_[i] - rhs.data_[i]));
  return worst;
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m) : m_(m.dim()) {
  const int n = m.dim();
  for (int i = 0; i < n; ++i) {
    m_(i, i) = Complex(m(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m_(i, j) = h;
      m_(j, i) = std::conj(h);
    }
  }
}

DensityOperator::DensityOperator(const HermitianOperator& op) : op_(op) {
  if (std::abs(op_.trace() - 1.0) > kTraceTol)
    throw ValidationError("density operator trace differs from 1 beyond tolerance");
  const Eigensystem es = eigendecompose(op_);
  if (es.eigenvalues.front() < kEigenFloor)
    throw ValidationError("density operator has a negative eigenvalue");
}

double DensityOperator::purity() const {
  const ComplexMatrix& m = op_.matrix();
  return (m * m).trace().real();
}

BlochVector::BlochVector(double x, double y, double z) : BlochVector(Vec3{x, y, z}) {}

BlochVector::BlochVector(const Vec3& p) : p_(p) {
  if (qgeo::norm(p_) > 1.0 + 1e-12)
    throw ValidationError("Bloch vector lies outside the unit ball");
}

std::array<HermitianOperator, 3> pauli_basis() {
  ComplexMatrix s1(2), s2(2), s3(2);
  s1(0, 1) = 1.0;
  s1(1, 0) = 1.0;
  s2(0, 1) = Complex(0.0, -1.0);
  s2(1, 0) = Complex(0.0, 1.0);
  s3(0, 0) = 1.0;
  s3(1, 1) = -1.0;
  return {HermitianOperator(s1), HermitianOperator(s2), HermitianOperator(s3)};
}

DensityOperator density_from_bloch(const BlochVector& p) {
  ComplexMatrix m(2);
  m(0, 0) = 0.5 * (1.0 + p[2]);
  m(1, 1) = 0.5 * (1.0 - p[2]);
  m(0, 1) = 0.5 * Complex(p[0], -p[1]);
  m(1, 0) = 0.5 * Complex(p[0], p[1]);
  return DensityOperator(HermitianOperator(m));
}

BlochVector bloch_from_density(const DensityOperator& rho) {
  if (rho.dim() != 2)
    throw DimensionMismatch("Bloch chart is defined for 2x2 density operators");
  const ComplexMatrix& m = rho.matrix();
  // P_k = tr(sigma_k rho), spelled out entrywise.
  const double px = 2.0 * m(1, 0).real();
  const double py = 2.0 * m(1, 0).imag();
  const double pz = (m(0, 0) - m(1, 1)).real();
  return BlochVector(px, py, pz);
}

BellKind bell_kind_from_string(const std::string& s) {
  if (s == "phi+" || s == "φ+") return BellKind::PhiPlus;
  if (s == "phi-" || s == "φ-" || s == "φ−") return BellKind::PhiMinus;
  if (s == "psi+" || s == "ψ+") return BellKind::PsiPlus;
  if (s == "psi-" || s == "ψ-" || s == "ψ−") return BellKind::PsiMinus;
  throw ParseError("unknown Bell state '" + s + "' (expected phi+|phi-|psi+|psi-)");
}

std::string to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
  }
  return "?";
}

DensityOperator bell_state(BellKind kind) {
  // Amplitudes of the Bell vector in the basis |00>, |01>, |10>, |11>.
  const double r = 1.0 / std::sqrt(2.0);
  std::array<double, 4> v{};
  switch (kind) {
    case BellKind::PhiPlus:  v = {r, 0.0, 0.0, r};  break;
    case BellKind::PhiMinus: v = {r, 0.0, 0.0, -r}; break;
    case BellKind::PsiPlus:  v = {0.0, r, r, 0.0};  break;
    case BellKind::PsiMinus: v = {0.0, r, -r, 0.0}; break;
  }
  ComplexMatrix m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = v[i] * v[j];
  return DensityOperator(HermitianOperator(m));
}

Eigensystem eigendecompose(const HermitianOperator& h) {
  const int n = h.dim();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  int sweep = 0;
  while (offdiag_frobenius(a) >= kJacobiOffdiagTol) {
    if (++sweep > kJacobiMaxSweeps)
      throw ConvergenceError("eigendecompose: Jacobi sweep cap exceeded");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        // Unitary plane rotation J with J_pp = c, J_pq = s, J_qp = -conj(s),
        // J_qq = c and s = sigma * e^{i arg(apq)}; sigma, c chosen so the
        // transformed (p,q) entry vanishes.
        const Complex phase = apq / r;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sigma = t * c;
        const Complex s = sigma * phase;
        const Complex sc = std::conj(s);

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        a(p, p) = app * c * c - 2.0 * c * sigma * r + aqq * sigma * sigma;
        a(q, q) = app * sigma * sigma + 2.0 * c * sigma * r + aqq * c * c;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip - sc * aiq;
          a(i, q) = s * aip + c * aiq;
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
        for (int i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip - sc * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  Eigensystem es{std::vector<double>(n), ComplexMatrix(n)};
  for (int k = 0; k < n; ++k) {
    es.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) es.eigenvectors(i, k) = v(i, order[k]);
  }
  return es;
}

}  // namespace qgeo
