#include "qgeo/geodesic.hpp"

#include <cmath>
#include <numbers>

namespace qgeo {

FourBlochVector::FourBlochVector(const Vec4& mu) : mu_(mu) {
  if (std::abs(dot(mu_, mu_) - 1.0) > 1e-12)
    throw ValidationError("four-vector must lie on the unit 3-sphere");
}

GeodesicFrame::GeodesicFrame(const Vec4& a, const Vec4& b) : a_(a), b_(b) {
  if (std::abs(dot(a_, a_) - 1.0) > 1e-12 || std::abs(dot(b_, b_) - 1.0) > 1e-12 ||
      std::abs(dot(a_, b_)) > 1e-12)
    throw ValidationError("frame vectors must be orthonormal");
}

FourBlochVector lift(const BlochVector& p) {
  const double m2 = dot(p.p(), p.p());
  // BlochVector admits ||p|| up to 1 + 1e-12; the radicand can round below 0.
  const double p0 = std::sqrt(std::max(1.0 - m2, 0.0));
  return FourBlochVector({p0, p[0], p[1], p[2]});
}

BlochVector project(const FourBlochVector& v) {
  if (v[0] < -1e-12)
    throw NegativeP0("point below the equator has no physical preimage");
  return BlochVector(v[1], v[2], v[3]);
}

GeodesicFrame frame_from_seed(const Vec4& u, const Vec4& v) {
  const double nu = norm(u);
  if (nu < 1e-10) throw DegenerateSeed("first frame seed is numerically zero");
  const Vec4 a = scaled(u, 1.0 / nu);
  const Vec4 res = sub(v, scaled(a, dot(v, a)));
  const double nres = norm(res);
  if (nres < 1e-10) throw DegenerateSeed("frame seeds are numerically collinear");
  return GeodesicFrame(a, scaled(res, 1.0 / nres));
}

FourBlochVector geodesic_point(const GeodesicFrame& frame, double s) {
  return FourBlochVector(
      add(scaled(frame.a(), std::cos(s)), scaled(frame.b(), std::sin(s))));
}

FourBlochVector deform_point(const FourBlochVector& v, double prob) {
  if (prob < 0.0 || prob > 1.0)
    throw ValidationError("error probability must lie in [0, 1]");
  const double f = 1.0 - 4.0 * prob / 3.0;
  // Only P0^2 enters, so the formula applies on both hemispheres; radicand is
  // >= 1 - f^2 >= 0 up to rounding, clamped at -1e-12.
  const double radicand = 1.0 - f * f * (1.0 - v[0] * v[0]);
  if (radicand < -1e-12)
    throw ValidationError("deformation radicand below clamp threshold");
  const double q0 = std::sqrt(std::max(radicand, 0.0));
  return FourBlochVector({q0, f * v[1], f * v[2], f * v[3]});
}

std::vector<GeodesicSample> sample_geodesic(const GeodesicFrame& frame,
                                            double prob, int count) {
  if (count < 2) throw ValidationError("geodesic sampling needs count >= 2");
  std::vector<GeodesicSample> samples;
  samples.reserve(count);
  const double step = 2.0 * std::numbers::pi / count;
  for (int i = 0; i < count; ++i) {
    const double s = step * i;
    FourBlochVector p = geodesic_point(frame, s);
    FourBlochVector q = deform_point(p, prob);
    samples.push_back({s, p, q});
  }
  return samples;
}

}  // namespace qgeo
