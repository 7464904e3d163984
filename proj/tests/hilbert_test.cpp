#include "qgeo/hilbert.hpp"

#include <cmath>

#include "doctest.h"
#include "test_support.hpp"

using namespace qgeo;

TEST_CASE("complex matrix arithmetic") {
  ComplexMatrix a = ComplexMatrix::identity(2);
  a(0, 1) = Complex(1.0, 2.0);
  const ComplexMatrix b = a + a;
  CHECK(b(0, 1) == Complex(2.0, 4.0));
  CHECK((b - a).max_abs_diff(a) == 0.0);

  const ComplexMatrix c = a * ComplexMatrix::identity(2);
  CHECK(c.max_abs_diff(a) == 0.0);
  CHECK(a.adjoint()(1, 0) == Complex(1.0, -2.0));
  CHECK(a.trace() == Complex(2.0, 0.0));

  CHECK_THROWS_AS(a + ComplexMatrix::identity(3), DimensionMismatch);
  CHECK_THROWS_AS(ComplexMatrix(0), ValidationError);
}

TEST_CASE("hermitian construction symmetrizes exactly") {
  ComplexMatrix m(2);
  m(0, 0) = Complex(1.0, 0.5);  // imaginary part discarded on the diagonal
  m(0, 1) = Complex(0.25, 0.75);
  m(1, 0) = Complex(0.5, 0.125);
  m(1, 1) = 2.0;
  const HermitianOperator h(m);
  CHECK(h.matrix()(0, 0) == Complex(1.0, 0.0));
  CHECK(h.matrix()(1, 0) == std::conj(h.matrix()(0, 1)));
  CHECK(h.trace() == 3.0);
}

TEST_CASE("pauli basis algebra") {
  const auto s = pauli_basis();

  CHECK(s[0].matrix()(0, 1) == Complex(1.0, 0.0));
  CHECK(s[0].matrix()(1, 0) == Complex(1.0, 0.0));
  CHECK(s[0].matrix()(0, 0) == Complex(0.0, 0.0));

  for (int i = 0; i < 3; ++i) {
    CHECK(s[i].trace() == 0.0);
    const ComplexMatrix sq = s[i].matrix() * s[i].matrix();
    CHECK(sq.max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
    for (int j = 0; j < 3; ++j) {
      const double expected = i == j ? 2.0 : 0.0;
      CHECK((s[i].matrix() * s[j].matrix()).trace().real() ==
            doctest::Approx(expected).epsilon(1e-15));
    }
  }

  // s1 s2 = i s3
  const ComplexMatrix prod = s[0].matrix() * s[1].matrix();
  CHECK(prod.max_abs_diff(s[2].matrix().scaled(Complex(0.0, 1.0))) == 0.0);
}

TEST_CASE("density operator validation") {
  ComplexMatrix bad_trace(2);
  bad_trace(0, 0) = 0.6;
  bad_trace(1, 1) = 0.6;
  CHECK_THROWS_AS(DensityOperator{HermitianOperator(bad_trace)}, ValidationError);

  ComplexMatrix indefinite(2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityOperator{HermitianOperator(indefinite)}, ValidationError);

  ComplexMatrix ok(2);
  ok(0, 0) = 0.5;
  ok(1, 1) = 0.5;
  const DensityOperator rho{HermitianOperator(ok)};
  CHECK(rho.purity() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("bloch vector ball membership") {
  CHECK_NOTHROW(BlochVector(0.0, 0.0, 1.0));
  CHECK_THROWS_AS(BlochVector(1.1, 0.0, 0.0), ValidationError);
}

TEST_CASE("density_from_bloch reference points") {
  const DensityOperator center = density_from_bloch(BlochVector(0.0, 0.0, 0.0));
  CHECK(center.matrix().max_abs_diff(ComplexMatrix::identity(2).scaled(0.5)) == 0.0);

  const DensityOperator north = density_from_bloch(BlochVector(0.0, 0.0, 1.0));
  CHECK(north.matrix()(0, 0) == Complex(1.0, 0.0));
  CHECK(north.matrix()(1, 1) == Complex(0.0, 0.0));

  const DensityOperator x = density_from_bloch(BlochVector(0.6, 0.0, 0.0));
  CHECK(x.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(x.matrix()(0, 1).real() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(x.matrix()(0, 1).imag() == 0.0);
}

TEST_CASE("density_from_bloch spectrum is (1 +/- m)/2") {
  CounterRng rng(11, 0);
  for (int i = 0; i < 200; ++i) {
    const BlochVector p = test::random_bloch(rng, 0.999);
    const double m = p.norm();
    const Eigensystem es = eigendecompose(density_from_bloch(p).op());
    CHECK(std::abs(es.eigenvalues[0] - 0.5 * (1.0 - m)) < 1e-12);
    CHECK(std::abs(es.eigenvalues[1] - 0.5 * (1.0 + m)) < 1e-12);
  }
}

TEST_CASE("bloch chart round trip") {
  CHECK(bloch_from_density(density_from_bloch(BlochVector(0, 0, 0))).norm() == 0.0);
  const BlochVector north =
      bloch_from_density(density_from_bloch(BlochVector(0.0, 0.0, 1.0)));
  CHECK(north[2] == 1.0);

  CounterRng rng(12, 0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const BlochVector p = test::random_bloch(rng, 0.999999);
    const BlochVector q = bloch_from_density(density_from_bloch(p));
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(p[k] - q[k]));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("bloch chart rejects wrong dimension") {
  CHECK_THROWS_AS(bloch_from_density(bell_state(BellKind::PhiPlus)),
                  DimensionMismatch);
}

TEST_CASE("bell states") {
  const DensityOperator phi = bell_state(BellKind::PhiPlus);
  CHECK(phi.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(phi.matrix()(0, 3).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(phi.matrix()(1, 1) == Complex(0.0, 0.0));

  const BellKind kinds[] = {BellKind::PhiPlus, BellKind::PhiMinus,
                            BellKind::PsiPlus, BellKind::PsiMinus};
  ComplexMatrix sum(4);
  for (BellKind kind : kinds) {
    const DensityOperator rho = bell_state(kind);
    CHECK(rho.op().trace() == doctest::Approx(1.0).epsilon(1e-15));
    // Rank-1 projector: idempotent and pure.
    CHECK((rho.matrix() * rho.matrix()).max_abs_diff(rho.matrix()) < 1e-12);
    CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-14));
    sum = sum + rho.matrix();
  }
  CHECK(sum.max_abs_diff(ComplexMatrix::identity(4)) < 1e-15);

  // Mutual orthogonality.
  const DensityOperator psi = bell_state(BellKind::PsiMinus);
  CHECK((phi.matrix() * psi.matrix()).trace().real() == 0.0);
}

TEST_CASE("bell kind parsing") {
  CHECK(bell_kind_from_string("phi+") == BellKind::PhiPlus);
  CHECK(bell_kind_from_string("φ−") == BellKind::PhiMinus);
  CHECK(bell_kind_from_string("psi+") == BellKind::PsiPlus);
  CHECK(bell_kind_from_string("ψ-") == BellKind::PsiMinus);
  CHECK(to_string(BellKind::PsiMinus) == "psi-");
  CHECK_THROWS_AS(bell_kind_from_string("sigma+"), ParseError);
}

TEST_CASE("eigendecompose reference spectra") {
  ComplexMatrix d(2);
  d(0, 0) = 0.3;
  d(1, 1) = 0.7;
  const Eigensystem es = eigendecompose(HermitianOperator(d));
  CHECK(es.eigenvalues[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(es.eigenvalues[1] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(std::abs(es.eigenvectors(0, 0)) == doctest::Approx(1.0).epsilon(1e-15));

  const Eigensystem pauli = eigendecompose(pauli_basis()[0]);
  CHECK(pauli.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(pauli.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("eigendecompose reconstruction on random hermitians") {
  CounterRng rng(13, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 3);
    const HermitianOperator h = test::random_hermitian(rng, n);
    const Eigensystem es = eigendecompose(h);

    for (std::size_t k = 1; k < es.eigenvalues.size(); ++k)
      CHECK(es.eigenvalues[k - 1] <= es.eigenvalues[k]);

    ComplexMatrix lambda(n);
    for (int k = 0; k < n; ++k) lambda(k, k) = es.eigenvalues[k];
    const ComplexMatrix rebuilt =
        es.eigenvectors * lambda * es.eigenvectors.adjoint();
    CHECK((rebuilt - h.matrix()).frobenius_norm() < 1e-10);

    const ComplexMatrix gram = es.eigenvectors.adjoint() * es.eigenvectors;
    CHECK((gram - ComplexMatrix::identity(n)).frobenius_norm() < 1e-10);
  }
}
