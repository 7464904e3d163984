#include "qgeo/channel.hpp"

namespace qgeo {

namespace {

void require_probability(double prob) {
  if (prob < 0.0 || prob > 1.0)
    throw ValidationError("error probability must lie in [0, 1]");
}

// A (x) B for 2x2 factors, basis |00>, |01>, |10>, |11|.
ComplexMatrix kron2(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

double contraction_factor(double prob) { return 1.0 - 4.0 * prob / 3.0; }

DensityOperator depolarize(const DensityOperator& rho, double prob) {
  require_probability(prob);
  if (rho.dim() != 2)
    throw DimensionMismatch("depolarize acts on single-qubit states");
  const auto pauli = pauli_basis();
  const ComplexMatrix& r = rho.matrix();
  ComplexMatrix out = r.scaled(1.0 - prob);
  for (const HermitianOperator& s : pauli)
    out = out + (s.matrix() * r * s.matrix()).scaled(prob / 3.0);
  return DensityOperator(HermitianOperator(out));
}

BlochVector depolarize_bloch(const BlochVector& p, double prob) {
  require_probability(prob);
  return BlochVector(scaled(p.p(), contraction_factor(prob)));
}

DensityOperator depolarize_bell(double prob) {
  return depolarize_bell(BellKind::PhiPlus, prob);
}

DensityOperator depolarize_bell_closed_form(double prob) {
  return depolarize_bell_closed_form(BellKind::PhiPlus, prob);
}

DensityOperator depolarize_bell(BellKind kind, double prob) {
  require_probability(prob);
  const ComplexMatrix& rho = bell_state(kind).matrix();
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const auto pauli = pauli_basis();
  // Full 4x4 conjugations rather than the closed-form shortcut, so the
  // closed-form comparison below is a genuine consistency check.
  ComplexMatrix out = rho.scaled(1.0 - prob);
  for (const HermitianOperator& s : pauli) {
    const ComplexMatrix k = kron2(s.matrix(), i2);
    out = out + (k * rho * k).scaled(prob / 3.0);
  }
  DensityOperator result{HermitianOperator(out)};
  const double dev = result.matrix().max_abs_diff(
      depolarize_bell_closed_form(kind, prob).matrix());
  if (dev > 1e-12)
    throw DomainError("Kraus and closed-form Bell channel disagree");
  return result;
}

DensityOperator depolarize_bell_closed_form(BellKind kind, double prob) {
  require_probability(prob);
  const double w = 4.0 * prob / 3.0;
  const ComplexMatrix mixed = ComplexMatrix::identity(4).scaled(0.25 * w);
  const ComplexMatrix pure = bell_state(kind).matrix().scaled(1.0 - w);
  return DensityOperator(HermitianOperator(mixed + pure));
}

}  // namespace qgeo
