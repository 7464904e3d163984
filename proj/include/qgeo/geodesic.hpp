#pragma once

#include <vector>

#include "qgeo/hilbert.hpp"

namespace qgeo {

// Point of the unit 3-sphere embedding the Bloch ball: P^mu P_mu = 1 within
// 1e-12, Euclidean.
class FourBlochVector {
 public:
  explicit FourBlochVector(const Vec4& mu);

  const Vec4& mu() const { return mu_; }
  double operator[](int k) const { return mu_[k]; }

 private:
  Vec4 mu_;
};

// Mutually orthogonal unit 4-vectors spanning a great-circle plane.
class GeodesicFrame {
 public:
  GeodesicFrame(const Vec4& a, const Vec4& b);

  const Vec4& a() const { return a_; }
  const Vec4& b() const { return b_; }

 private:
  Vec4 a_;
  Vec4 b_;
};

struct GeodesicSample {
  double s;
  FourBlochVector undeformed;
  FourBlochVector deformed;
};

// Lift into S^3 via the fourth coordinate P0 = sqrt(1 - ||P||^2).
FourBlochVector lift(const BlochVector& p);

// Inverse chart: drops P0. Throws NegativeP0 when P0 < -1e-12 (the point has
// no physical Bloch-ball preimage).
BlochVector project(const FourBlochVector& v);

// Gram-Schmidt orthonormalization of two seed 4-vectors. Throws
// DegenerateSeed when the residual of the second seed is below 1e-10.
GeodesicFrame frame_from_seed(const Vec4& u, const Vec4& v);

// Great circle a cos s + b sin s, arc-length parametrized, period 2 pi.
FourBlochVector geodesic_point(const GeodesicFrame& frame, double s);

// Image of an S^3 point under depolarization with factor f = 1 - 4p/3:
// Q0 = sqrt(1 - f^2 (1 - P0^2)), Qk = f Pk. Stays on the unit sphere.
FourBlochVector deform_point(const FourBlochVector& v, double prob);

// Uniform closed-open grid of count points over s in [0, 2 pi), each paired
// with its deformed image.
std::vector<GeodesicSample> sample_geodesic(const GeodesicFrame& frame,
                                            double prob, int count);

}  // namespace qgeo
