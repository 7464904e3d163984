#include "qgeo/metric.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "qgeo/rng.hpp"
#include "test_support.hpp"

using namespace qgeo;

namespace {

HermitianOperator direction_sigma(const Vec3& n) {
  const auto s = pauli_basis();
  ComplexMatrix m(2);
  for (int k = 0; k < 3; ++k) m = m + s[k].matrix().scaled(n[k]);
  return HermitianOperator(m);
}

}  // namespace

TEST_CASE("tangent operator must be traceless") {
  ComplexMatrix m(2);
  m(0, 0) = 0.1;
  m(1, 1) = 0.1;
  CHECK_THROWS_AS(TangentOperator{HermitianOperator(m)}, ValidationError);
}

TEST_CASE("pure state chart validation") {
  CHECK_THROWS_AS(PureStateChart({0.5, 0.6}, {0.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(PureStateChart({1.5, -0.5}, {0.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(PureStateChart({0.5, 0.5}, {0.0}), ValidationError);
  CHECK_NOTHROW(PureStateChart({0.25, 0.75}, {0.0, 1.0}));
}

TEST_CASE("bures point stays in the half-radius ball") {
  // Boundary point: b = sqrt(1/4 - x^2) collapses (up to sqrt of rounding).
  const BuresPoint pt({0.3, 0.0, 0.4});
  CHECK(pt.b() < 1e-8);
  CHECK_THROWS_AS(BuresPoint({0.6, 0.0, 0.0}), ValidationError);
  // x^2 + b^2 = 1/4 on the chart.
  const BuresPoint interior({0.1, 0.2, -0.1});
  CHECK(dot(interior.x(), interior.x()) + interior.b() * interior.b() ==
        doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("raise reference values") {
  const DensityOperator mixed = density_from_bloch(BlochVector(0, 0, 0));
  CounterRng rng(3, 1);
  const HermitianOperator b = test::random_hermitian(rng, 2);
  // rho = I/2 halves the form.
  const HermitianOperator half = raise(mixed, b);
  CHECK(half.matrix().max_abs_diff(b.matrix().scaled(0.5)) == 0.0);

  ComplexMatrix d(2);
  d(0, 0) = 0.3;
  d(1, 1) = 0.7;
  const DensityOperator rho{HermitianOperator(d)};
  // (rho I + I rho)/2 = rho.
  CHECK(raise(rho, HermitianOperator(ComplexMatrix::identity(2)))
            .matrix()
            .max_abs_diff(rho.matrix()) == 0.0);
  // (rho s1 + s1 rho)/2 has 0.5 off the diagonal.
  const HermitianOperator r = raise(rho, pauli_basis()[0]);
  CHECK(r.matrix()(0, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.matrix()(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("lower at the maximally mixed state doubles") {
  const DensityOperator mixed = density_from_bloch(BlochVector(0, 0, 0));
  CounterRng rng(4, 0);
  const TangentOperator a{test::random_tangent2(rng)};
  const HermitianOperator x = lower(mixed, a);
  CHECK(x.matrix().max_abs_diff(a.matrix().scaled(2.0)) < 1e-12);
}

TEST_CASE("raise and lower are inverse") {
  CounterRng rng(5, 0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DensityOperator rho = test::random_density(rng, 0.95);
    const TangentOperator a{test::random_tangent2(rng)};
    const HermitianOperator back = raise(rho, lower(rho, a));
    worst = std::max(worst, back.matrix().max_abs_diff(a.matrix()));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("lower closed form along the polarization direction") {
  // For rho = (I + m n.sigma)/2 and A = n.sigma, the solution is
  // X = 2(-m I + n.sigma)/(1 - m^2).
  CounterRng rng(6, 0);
  for (int i = 0; i < 200; ++i) {
    const Vec3 n = rng.unit_vector3();
    const double m = 0.97 * rng.next_unit();
    const DensityOperator rho = density_from_bloch(BlochVector(scaled(n, m)));
    const HermitianOperator ns = direction_sigma(n);
    const HermitianOperator x = lower(rho, TangentOperator{ns});

    const double denom = 1.0 - m * m;
    const ComplexMatrix expected =
        (ns.matrix() - ComplexMatrix::identity(2).scaled(m)).scaled(2.0 / denom);
    CHECK(x.matrix().max_abs_diff(expected) < 1e-10);
  }
}

TEST_CASE("lower rejects singular states") {
  const DensityOperator pure = density_from_bloch(BlochVector(0.0, 0.0, 1.0));
  CounterRng rng(7, 0);
  const TangentOperator a{test::random_tangent2(rng)};
  CHECK_THROWS_AS(lower(pure, a), SingularState);
}

TEST_CASE("line element operator on diagonal data") {
  ComplexMatrix d(2);
  d(0, 0) = 0.3;
  d(1, 1) = 0.7;
  const DensityOperator rho{HermitianOperator(d)};
  ComplexMatrix t(2);
  t(0, 0) = 0.01;
  t(1, 1) = -0.01;
  const double ds2 = line_element_operator(rho, TangentOperator{HermitianOperator(t)});
  CHECK(ds2 == doctest::Approx(0.0001 / 0.3 + 0.0001 / 0.7).epsilon(1e-12));

  ComplexMatrix zero(2);
  CHECK(line_element_operator(rho, TangentOperator{HermitianOperator(zero)}) == 0.0);
}

TEST_CASE("bloch line element reference values") {
  CHECK(line_element_bloch(BlochVector(0, 0, 0), {0.1, 0.2, -0.2}) ==
        doctest::Approx(0.09).epsilon(1e-15));
  CHECK(line_element_bloch(BlochVector(0.5, 0, 0), {0.1, 0, 0}) ==
        doctest::Approx(0.013333333333333334).epsilon(1e-15));
  CHECK(line_element_bloch(BlochVector(0.5, 0, 0), {0.0, 0.1, 0}) ==
        doctest::Approx(0.01).epsilon(1e-15));
  CHECK_THROWS_AS(line_element_bloch(BlochVector(1.0, 0, 0), {0.1, 0, 0}),
                  SingularState);
}

TEST_CASE("depolarized line element reference values") {
  const BlochVector p(0.5, 0, 0);
  const Vec3 dp{0.1, 0, 0};
  CHECK(line_element_depolarized(p, dp, 0.0) == line_element_bloch(p, dp));
  CHECK(line_element_depolarized(p, dp, 0.75) == 0.0);
  CHECK(line_element_depolarized(p, dp, 0.375) ==
        doctest::Approx(0.0026666666666666666).epsilon(1e-15));
  CHECK_THROWS_AS(line_element_depolarized(p, dp, 1.5), ValidationError);
}

TEST_CASE("depolarized line element equals contracted-chart evaluation") {
  CounterRng rng(8, 0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const BlochVector p = test::random_bloch(rng, 0.95);
    const Vec3 dp = scaled(rng.unit_vector3(), 1e-3);
    const double prob = rng.next_unit();
    const double f = 1.0 - 4.0 * prob / 3.0;
    const double direct = line_element_depolarized(p, dp, prob);
    const double via_chart =
        line_element_bloch(BlochVector(scaled(p.p(), f)), scaled(dp, f));
    worst = std::max(worst, std::abs(direct - via_chart));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("monotonicity of the depolarized line element") {
  CounterRng rng(9, 0);
  for (int i = 0; i < 500; ++i) {
    const BlochVector p = test::random_bloch(rng, 0.99);
    const Vec3 dp = scaled(rng.unit_vector3(), 1e-3);
    const double ds2 = line_element_bloch(p, dp);
    for (int g = 0; g <= 10; ++g) {
      const double prob = g / 10.0;
      CHECK(line_element_depolarized(p, dp, prob) <= ds2 + 1e-12);
    }
  }
}

TEST_CASE("radial decomposition identity") {
  // dm n + m(1 - m^2) dn = (1 - m^2) dP + (P.dP) P with P = m n.
  CounterRng rng(10, 0);
  for (int i = 0; i < 500; ++i) {
    Vec3 p = rng.ball3(0.99);
    if (norm(p) < 1e-3) p = Vec3{0.1, 0.0, 0.0};
    const Vec3 dp = scaled(rng.unit_vector3(), 1e-3);
    const double m = norm(p);
    const Vec3 n = scaled(p, 1.0 / m);
    const double dm = dot(n, dp);
    const Vec3 dn = scaled(sub(dp, scaled(n, dm)), 1.0 / m);
    const double m2 = m * m;

    const Vec3 lhs = add(scaled(n, dm), scaled(dn, m * (1.0 - m2)));
    const Vec3 rhs = add(scaled(dp, 1.0 - m2), scaled(p, dot(p, dp)));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(lhs[k] - rhs[k]) < 1e-12);
  }
}

TEST_CASE("fubini-study overlap reference values") {
  const PureStateChart psi({0.25, 0.75}, {0.3, -0.2});
  CHECK(fubini_study_overlap(psi, psi) == 0.0);

  const PureStateChart e1({1.0, 0.0}, {0.0, 0.0});
  const PureStateChart e2({0.0, 1.0}, {0.0, 0.0});
  CHECK(fubini_study_overlap(e1, e2) == 1.0);
  CHECK_THROWS_AS(fubini_study_overlap(e1, PureStateChart({1.0}, {0.0})),
                  DimensionMismatch);
}

TEST_CASE("fubini-study quadratic form") {
  const PureStateChart uniform({0.5, 0.5}, {0.0, 0.0});
  const double h = 1e-3;
  CHECK(fubini_study_quadratic(uniform, {h, -h}, {0.0, 0.0}) ==
        doctest::Approx(h * h).epsilon(1e-14));
  CHECK(fubini_study_quadratic(uniform, {0.0, 0.0}, {0.0, 0.0}) == 0.0);

  // Global phase moves are gauge: no contribution.
  CHECK(std::abs(fubini_study_quadratic(uniform, {0.0, 0.0}, {0.7, 0.7})) < 1e-15);

  CHECK_THROWS_AS(fubini_study_quadratic(uniform, {h, h}, {0.0, 0.0}),
                  ValidationError);
  const PureStateChart corner({1.0, 0.0}, {0.0, 0.0});
  CHECK_THROWS_AS(fubini_study_quadratic(corner, {-h, h}, {0.0, 0.0}),
                  ZeroProbability);
}

TEST_CASE("fubini-study gauge invariance of the quadratic form") {
  CounterRng rng(14, 0);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> probs(3), phases(3), dp(3), dphi(3);
    double total = 0.0;
    for (auto& v : probs) total += (v = rng.next_unit() + 0.2);
    for (auto& v : probs) v /= total;
    for (auto& v : phases) v = rng.next_gaussian();
    dp = {1e-3, -2e-3, 1e-3};
    for (auto& v : dphi) v = 1e-3 * rng.next_gaussian();
    const PureStateChart chart(probs, phases);
    const double base = fubini_study_quadratic(chart, dp, dphi);
    std::vector<double> shifted = dphi;
    for (auto& v : shifted) v += 0.37;
    CHECK(std::abs(fubini_study_quadratic(chart, dp, shifted) - base) < 1e-12);
  }
}

TEST_CASE("pure state line element and the factor-4 relation") {
  const PureStateChart psi({0.25, 0.75}, {0.1, 0.4});
  CHECK(pure_state_line_element(psi, psi) == 0.0);

  const PureStateChart e1({1.0, 0.0}, {0.0, 0.0});
  const PureStateChart e2({0.0, 1.0}, {0.0, 0.0});
  CHECK(pure_state_line_element(e1, e2) == doctest::Approx(4.0).epsilon(1e-15));

  // Exact algebraic identity with 4x the overlap deficit, not just a limit.
  CounterRng rng(15, 0);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> p1(3), f1(3), p2(3), f2(3);
    double t1 = 0.0, t2 = 0.0;
    for (auto& v : p1) t1 += (v = rng.next_unit() + 0.1);
    for (auto& v : p1) v /= t1;
    for (auto& v : p2) t2 += (v = rng.next_unit() + 0.1);
    for (auto& v : p2) v /= t2;
    for (auto& v : f1) v = rng.next_gaussian();
    for (auto& v : f2) v = rng.next_gaussian();
    const PureStateChart a(p1, f1), b(p2, f2);
    const double lhs = pure_state_line_element(a, b);
    const double rhs = 4.0 * fubini_study_overlap(a, b);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + rhs));
  }
}

TEST_CASE("bures distance reference values") {
  // d(rho, rho): the bracket cancels to rounding noise, and the outer square
  // root turns ~1e-16 of noise into ~1e-8.
  const DensityOperator rho = density_from_bloch(BlochVector(0.3, -0.2, 0.1));
  CHECK(bures_distance(rho, rho) < 1e-7);

  // Orthogonal pure states sit at the maximal distance sqrt(2).
  const DensityOperator plus = density_from_bloch(BlochVector(1.0, 0.0, 0.0));
  const DensityOperator minus = density_from_bloch(BlochVector(-1.0, 0.0, 0.0));
  CHECK(bures_distance(plus, minus) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  CounterRng rng(16, 0);
  for (int i = 0; i < 1000; ++i) {
    const DensityOperator a = test::random_density(rng, 0.999);
    const DensityOperator b = test::random_density(rng, 0.999);
    CHECK(std::abs(bures_distance(a, b) - bures_distance(b, a)) < 1e-12);
  }
}

TEST_CASE("bures line element reference values and chart equivalence") {
  CHECK(bures_line_element(BuresPoint({0, 0, 0}), {0.1, 0, 0}) ==
        doctest::Approx(0.01).epsilon(1e-15));
  CHECK_THROWS_AS(bures_line_element(BuresPoint({0.5, 0, 0}), {0.1, 0, 0}),
                  SingularState);

  // Half-radius chart: ds_B^2(x, dx) = ds^2(2x, 2dx)/4.
  CounterRng rng(17, 0);
  for (int i = 0; i < 500; ++i) {
    const Vec3 x = rng.ball3(0.49);
    const Vec3 dx = scaled(rng.unit_vector3(), 1e-3);
    const double lhs = bures_line_element(BuresPoint(x), dx);
    const double rhs =
        line_element_bloch(BlochVector(scaled(x, 2.0)), scaled(dx, 2.0)) / 4.0;
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + rhs));
  }
}

TEST_CASE("line elements are nonnegative over random samples") {
  CounterRng rng(18, 0);
  for (int i = 0; i < 2000; ++i) {
    const BlochVector p = test::random_bloch(rng, 0.99);
    const Vec3 dp = scaled(rng.unit_vector3(), 1e-3);
    CHECK(line_element_bloch(p, dp) >= 0.0);
    CHECK(line_element_depolarized(p, dp, rng.next_unit()) >= 0.0);
    const Vec3 x = rng.ball3(0.49);
    CHECK(bures_line_element(BuresPoint(x), dp) >= 0.0);
  }
}
