#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgeo/errors.hpp"

namespace qgeo {

// Sampling plan for one verification run. Every randomized quantity is
// derived from (seed, sample index), so reports are reproducible and
// independent of worker count.
struct SampleConfig {
  std::uint64_t seed = 1;
  int count = 10000;
  std::vector<double> prob_grid;    // error probabilities to sweep
  double radius_cap = 0.99;         // bound on sampled ||P||

  // Throws ValidationError unless count >= 1, the grid is non-empty with
  // values in [0, 1], and 0 < radius_cap < 1.
  void validate() const;
};

// n equally spaced probabilities from 0 to 1 inclusive (n >= 2).
std::vector<double> uniform_prob_grid(int n);

// Outcome of one sampled property check. worst_margin is the smallest slack
// observed; its scale is check-specific (see README). A passing report has
// violations = 0.
struct VerificationReport {
  std::string check_name;
  std::int64_t samples = 0;
  std::int64_t violations = 0;
  double worst_margin = 0.0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;  // wall time; excluded from serialized reports
};

// ds'^2 <= ds^2 + 1e-12 over (P, dP, p) samples; margin ds^2 - ds'^2.
VerificationReport check_monotonicity(const SampleConfig& cfg, int workers = 1);

// Bures analogue on the radius-1/2 chart, plus the algebraic criterion
// x^2 <= (1/4)(1 + 1/f^2) at every sample (skipped where f = 0).
VerificationReport check_bures_monotonicity(const SampleConfig& cfg, int workers = 1);

// |operator-form - closed-form| <= rel_tol (1 + ds^2) on interior samples.
// rel_tol exists for near-boundary stress runs; the default is the contract.
VerificationReport check_chart_consistency(const SampleConfig& cfg, int workers = 1,
                                           double rel_tol = 1e-10);

// Pure-state factor-4 relation: the projector route equals 4x the overlap
// deficit at 1e-12, and its quadratic-form expansion converges with fitted
// order >= 2.5 on the ladder h in {1e-2, 1e-3, 1e-4}. Margin: order - 2.5.
VerificationReport check_fubini_relation(const SampleConfig& cfg, int workers = 1);

// Deformed geodesic points stay on the unit 3-sphere and their spatial
// components carry exactly the contraction factor, both at 1e-12.
VerificationReport check_geodesic_closure(const SampleConfig& cfg, int workers = 1);

// All five checks with the same config, in a fixed order.
std::vector<VerificationReport> run_all(const SampleConfig& cfg, int workers = 1);

}  // namespace qgeo
