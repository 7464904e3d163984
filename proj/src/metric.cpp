#include "qgeo/metric.hpp"

#include <cmath>
#include <numeric>

namespace qgeo {

namespace {

// Bures radicand slightly negative from rounding is clamped to zero; below
// this it signals invalid inputs.
constexpr double kRadicandClamp = -1e-12;

// State vector of a chart, |psi> = sum sqrt(p_k) e^{i phi_k} |k>.
std::vector<Complex> chart_state(const PureStateChart& psi) {
  std::vector<Complex> v(psi.dim());
  for (int k = 0; k < psi.dim(); ++k)
    v[k] = std::sqrt(psi.probs()[k]) *
           Complex(std::cos(psi.phases()[k]), std::sin(psi.phases()[k]));
  return v;
}

double clamped_sqrt(double radicand, const char* what) {
  if (radicand < kRadicandClamp)
    throw NegativeRadicand(std::string(what) + " radicand below clamp threshold");
  return std::sqrt(radicand < 0.0 ? 0.0 : radicand);
}

}  // namespace

TangentOperator::TangentOperator(const HermitianOperator& op) : op_(op) {
  if (std::abs(op_.trace()) > 1e-12)
    throw ValidationError("tangent operator must be traceless");
}

PureStateChart::PureStateChart(std::vector<double> probs, std::vector<double> phases)
    : probs_(std::move(probs)), phases_(std::move(phases)) {
  if (probs_.empty() || probs_.size() != phases_.size())
    throw ValidationError("chart needs matching, non-empty probs and phases");
  double sum = 0.0;
  for (double p : probs_) {
    if (p < 0.0) throw ValidationError("chart probabilities must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw ValidationError("chart probabilities must sum to 1");
}

BuresPoint::BuresPoint(const Vec3& x) : x_(x) {
  const double x2 = dot(x_, x_);
  if (x2 > 0.25 + 1e-12)
    throw ValidationError("Bures point lies outside the radius-1/2 ball");
  b_ = std::sqrt(std::max(0.25 - x2, 0.0));
}

HermitianOperator raise(const DensityOperator& rho, const HermitianOperator& form) {
  if (rho.dim() != form.dim())
    throw DimensionMismatch("raise: operator dimensions differ");
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix& b = form.matrix();
  return HermitianOperator((r * b + b * r).scaled(0.5));
}

HermitianOperator lower(const DensityOperator& rho, const TangentOperator& vec) {
  if (rho.dim() != vec.dim())
    throw DimensionMismatch("lower: operator dimensions differ");
  const Eigensystem es = eigendecompose(rho.op());
  const ComplexMatrix& u = es.eigenvectors;
  const ComplexMatrix ut = u.adjoint();
  const ComplexMatrix a = ut * vec.matrix() * u;
  const int n = rho.dim();
  ComplexMatrix x(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double denom = es.eigenvalues[j] + es.eigenvalues[k];
      if (denom <= kSingularFloor)
        throw SingularState("lower: metric singular at the state-space boundary");
      x(j, k) = 2.0 * a(j, k) / denom;
    }
  }
  return HermitianOperator(u * x * ut);
}

double line_element_operator(const DensityOperator& rho, const TangentOperator& drho) {
  const HermitianOperator lowered = lower(rho, drho);
  return (drho.matrix() * lowered.matrix()).trace().real();
}

double line_element_bloch(const BlochVector& p, const Vec3& dp) {
  const double m2 = dot(p.p(), p.p());
  const double denom = 1.0 - m2;
  if (denom <= kSingularFloor)
    throw SingularState("line element singular at the Bloch-ball boundary");
  const double radial = dot(p.p(), dp);
  return dot(dp, dp) + radial * radial / denom;
}

double line_element_depolarized(const BlochVector& p, const Vec3& dp, double prob) {
  if (prob < 0.0 || prob > 1.0)
    throw ValidationError("error probability must lie in [0, 1]");
  const double f = 1.0 - 4.0 * prob / 3.0;
  const double f2 = f * f;
  const double m2 = dot(p.p(), p.p());
  const double denom = 1.0 - f2 * m2;
  if (denom <= kSingularFloor)
    throw SingularState("depolarized line element singular at the boundary");
  const double radial = dot(p.p(), dp);
  return f2 * dot(dp, dp) + f2 * f2 * radial * radial / denom;
}

double fubini_study_overlap(const PureStateChart& psi, const PureStateChart& psi2) {
  if (psi.dim() != psi2.dim())
    throw DimensionMismatch("overlap: chart dimensions differ");
  Complex overlap = 0.0;
  for (int k = 0; k < psi.dim(); ++k) {
    const double mag = std::sqrt(psi2.probs()[k] * psi.probs()[k]);
    const double dphi = psi.phases()[k] - psi2.phases()[k];
    overlap += mag * Complex(std::cos(dphi), std::sin(dphi));
  }
  return 1.0 - std::norm(overlap);
}

double fubini_study_quadratic(const PureStateChart& psi,
                              const std::vector<double>& dprobs,
                              const std::vector<double>& dphases) {
  const size_t n = psi.probs().size();
  if (dprobs.size() != n || dphases.size() != n)
    throw DimensionMismatch("quadratic form: tangent dimensions differ from chart");
  const double dsum = std::accumulate(dprobs.begin(), dprobs.end(), 0.0);
  if (std::abs(dsum) > 1e-12)
    throw ValidationError("probability tangent must sum to zero");

  double prob_term = 0.0;
  double phase_sq = 0.0;
  double phase_mean = 0.0;
  for (size_t k = 0; k < n; ++k) {
    const double p = psi.probs()[k];
    if (dprobs[k] != 0.0) {
      if (p == 0.0)
        throw ZeroProbability("quadratic form undefined: dp != 0 at p = 0");
      prob_term += dprobs[k] * dprobs[k] / p;
    }
    phase_sq += p * dphases[k] * dphases[k];
    phase_mean += p * dphases[k];
  }
  return 0.25 * prob_term + phase_sq - phase_mean * phase_mean;
}

double pure_state_line_element(const PureStateChart& psi, const PureStateChart& dpsi) {
  if (psi.dim() != dpsi.dim())
    throw DimensionMismatch("pure-state line element: chart dimensions differ");
  const std::vector<Complex> v1 = chart_state(psi);
  const std::vector<Complex> v2 = chart_state(dpsi);
  const int n = psi.dim();
  // delta = |psi'><psi'| - |psi><psi| is Hermitian, so tr(delta^2) is its
  // squared Frobenius norm.
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sum += std::norm(v2[i] * std::conj(v2[j]) - v1[i] * std::conj(v1[j]));
  return 2.0 * sum;
}

double bures_distance(const DensityOperator& r1, const DensityOperator& r2) {
  if (r1.dim() != 2 || r2.dim() != 2)
    throw DimensionMismatch("Bures closed form is specific to 2x2 operators");
  const Vec3 x1 = scaled(bloch_from_density(r1).p(), 0.5);
  const Vec3 x2 = scaled(bloch_from_density(r2).p(), 0.5);
  const ComplexMatrix& m1 = r1.matrix();
  const ComplexMatrix& m2 = r2.matrix();
  const double det1 = (m1(0, 0) * m1(1, 1) - m1(0, 1) * m1(1, 0)).real();
  const double det2 = (m2(0, 0) * m2(1, 1) - m2(0, 1) * m2(1, 0)).real();
  const double b1 = std::sqrt(std::max(det1, 0.0));
  const double b2 = std::sqrt(std::max(det2, 0.0));
  const double a1 = std::sqrt(dot(x1, x1) + b1 * b1);
  const double a2 = std::sqrt(dot(x2, x2) + b2 * b2);
  const double inner = clamped_sqrt(a1 * a2 + dot(x1, x2) + b1 * b2, "Bures inner");
  const double d2 = 2.0 * (a1 + a2) - 2.0 * std::sqrt(2.0) * inner;
  return clamped_sqrt(d2, "Bures distance");
}

double bures_line_element(const BuresPoint& pt, const Vec3& dx) {
  const double denom = 0.25 - dot(pt.x(), pt.x());
  if (denom <= kSingularFloor)
    throw SingularState("Bures line element singular at the radius-1/2 boundary");
  const double radial = dot(pt.x(), dx);
  return dot(dx, dx) + radial * radial / denom;
}

}  // namespace qgeo
