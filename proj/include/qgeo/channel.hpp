#pragma once

#include "qgeo/hilbert.hpp"

namespace qgeo {

// Bloch contraction factor of the depolarizing channel, 1 - 4 prob / 3.
// Negative beyond prob = 3/4 (Bloch inversion); callers that care warn, the
// library just evaluates.
double contraction_factor(double prob);

// Kraus operator-sum action on an arbitrary qubit state:
// rho' = (1 - p) rho + (p/3) (s1 rho s1 + s2 rho s2 + s3 rho s3).
DensityOperator depolarize(const DensityOperator& rho, double prob);

// Uniform contraction of the Bloch vector: P' = (1 - 4p/3) P.
BlochVector depolarize_bloch(const BlochVector& p, double prob);

// One-sided channel action on the Bell state phi+: Kraus operators
// sqrt(1-p) I(x)I and sqrt(p/3) sigma_i(x)I applied to qubit A. The result is
// cross-checked against the closed form before it is returned.
DensityOperator depolarize_bell(double prob);

// Closed form of the same action: (4p/3)(I/4) + (1 - 4p/3) rho_phi+.
DensityOperator depolarize_bell_closed_form(double prob);

// Same pair for an arbitrary Bell state. The closed form is kind-independent
// because the one-sided Pauli conjugations permute the Bell projectors, whose
// sum is the identity.
DensityOperator depolarize_bell(BellKind kind, double prob);
DensityOperator depolarize_bell_closed_form(BellKind kind, double prob);

}  // namespace qgeo
