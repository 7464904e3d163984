#pragma once

#include <vector>

#include "qgeo/hilbert.hpp"

namespace qgeo {

// Denominators (p_j + p_k, 1 - m^2, 1/4 - x^2) at or below this floor are
// treated as singular: the operation throws SingularState instead of
// returning a huge value. The statistical metric genuinely diverges at the
// pure-state boundary.
inline constexpr double kSingularFloor = 1e-10;

// Traceless Hermitian operator: a tangent vector of the density-operator
// manifold.
class TangentOperator {
 public:
  explicit TangentOperator(const HermitianOperator& op);

  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  int dim() const { return op_.dim(); }

 private:
  HermitianOperator op_;
};

// Chart of a normalized pure state |psi> = sum_k sqrt(p_k) e^{i phi_k} |k>.
class PureStateChart {
 public:
  PureStateChart(std::vector<double> probs, std::vector<double> phases);

  const std::vector<double>& probs() const { return probs_; }
  const std::vector<double>& phases() const { return phases_; }
  int dim() const { return static_cast<int>(probs_.size()); }

 private:
  std::vector<double> probs_;
  std::vector<double> phases_;
};

// Point of the radius-1/2 Bures chart: rho = I/2 + x.sigma with ||x|| <= 1/2
// and b = sqrt(det rho), so x^2 + b^2 = 1/4 for unit-trace states.
class BuresPoint {
 public:
  explicit BuresPoint(const Vec3& x);

  const Vec3& x() const { return x_; }
  double b() const { return b_; }

 private:
  Vec3 x_;
  double b_;
};

// Raising operator: R_rho(B) = (rho B + B rho)/2, mapping 1-forms to vectors.
HermitianOperator raise(const DensityOperator& rho, const HermitianOperator& form);

// Lowering operator: the X solving (rho X + X rho)/2 = A, computed in rho's
// eigenbasis as X_jk = 2 A_jk / (p_j + p_k). Inverse of raise. Throws
// SingularState when any eigenvalue pair sum is at or below kSingularFloor.
HermitianOperator lower(const DensityOperator& rho, const TangentOperator& vec);

// Statistical distinguishability line element in operator form:
// ds^2 = tr[drho L_rho(drho)].
double line_element_operator(const DensityOperator& rho, const TangentOperator& drho);

// Closed Bloch-ball form of the same line element:
// ds^2 = dP.dP + (P.dP)^2 / (1 - m^2), m = ||P||.
double line_element_bloch(const BlochVector& p, const Vec3& dp);

// Line element after depolarization with error probability prob:
// ds'^2 = f^2 dP.dP + f^4 (P.dP)^2 / (1 - f^2 m^2), f = 1 - 4 prob / 3.
double line_element_depolarized(const BlochVector& p, const Vec3& dp, double prob);

// Fubini-Study line element as the exact finite overlap deficit
// 1 - |<psi'|psi>|^2, computed directly from the two charts.
double fubini_study_overlap(const PureStateChart& psi, const PureStateChart& psi2);

// Fubini-Study quadratic form on chart tangents:
// (1/4) sum dp_k^2/p_k + sum p_k dphi_k^2 - (sum p_k dphi_k)^2.
// Requires sum dp_k = 0; throws ZeroProbability when dp_k != 0 at p_k = 0.
double fubini_study_quadratic(const PureStateChart& psi,
                              const std::vector<double>& dprobs,
                              const std::vector<double>& dphases);

// Pure-state line element via rank-1 projectors: 2 tr[(rho' - rho)^2].
// Coincides with 4x the overlap deficit for normalized states.
double pure_state_line_element(const PureStateChart& psi, const PureStateChart& dpsi);

// Bures distance between two qubit density operators, via the closed form
// in half-Bloch coordinates x_k, b_k = sqrt(det rho_k), alpha_k = 1/2.
double bures_distance(const DensityOperator& r1, const DensityOperator& r2);

// Infinitesimal Bures line element: dx.dx + (x.dx)^2 / (1/4 - x^2).
double bures_line_element(const BuresPoint& pt, const Vec3& dx);

}  // namespace qgeo
