#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "structmat/counterexample.hpp"
#include "structmat/errors.hpp"
#include "structmat/spectral.hpp"

using namespace structmat;
namespace oracle = structmat::testing;

TEST_CASE("minimum real eigenvalue") {
  const DenseMatrix rot = DenseMatrix::from_real_rows({{0, -1}, {1, 0}});
  CHECK_FALSE(min_real_eigenvalue(rot).has_value());  // min of empty set = +inf

  CHECK(*min_real_eigenvalue(DenseMatrix::identity(5)) == doctest::Approx(1.0));

  // l(A(k+2,k,t)) = 1 - (1-t)^(1/(k+2))
  for (int k = 1; k <= 8; ++k)
    for (const auto& t : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      const DenseMatrix a = build_counterexample({k + 2, k, t}).to_dense();
      const double want = 1.0 - std::pow(1.0 - to_double(t), 1.0 / (k + 2));
      REQUIRE(min_real_eigenvalue(a).has_value());
      CHECK(std::abs(*min_real_eigenvalue(a) - want) <= 1e-10);
    }
}

TEST_CASE("spectrum report fields") {
  const DenseMatrix a = DenseMatrix::from_real_rows({{1, 2}, {0, 1}});
  const SpectrumReport r = spectrum_report(a);
  CHECK(r.eigenvalues.size() == 2);
  CHECK(r.positive_stable);
  CHECK(r.min_real_part == doctest::Approx(1.0));
  CHECK(r.kellogg_margin == doctest::Approx(std::acos(-1.0) / 2.0));
  REQUIRE(r.min_real_eigenvalue.has_value());
  CHECK(*r.min_real_eigenvalue == doctest::Approx(1.0));
}

TEST_CASE("omega and tau verdicts") {
  const OmegaTauReport herm = is_omega_tau(DenseMatrix::from_real_rows({{2, 1}, {1, 2}}));
  CHECK(herm.omega.holds);
  CHECK(herm.tau.holds);

  const DenseMatrix a10 = build_counterexample({10, 2, Rational(1, 2)}).to_dense();
  const OmegaTauReport lead = is_omega_tau(a10, OmegaTauMode::leading_principal);
  CHECK(lead.tau.holds);

  const OmegaTauReport neg = is_omega_tau(DenseMatrix::from_real_rows({{-1}}));
  CHECK(neg.omega.holds);
  CHECK_FALSE(neg.tau.holds);

  CHECK_THROWS_AS(is_omega_tau(DenseMatrix::identity(13)), capability_error);
}

TEST_CASE("omega flags sections without real spectrum") {
  // A 2x2 rotation block inside a 3x3 matrix: the subset {1,2} has no real
  // eigenvalue, so eigenvalue monotonicity fails with that witness.
  DenseMatrix a(3);
  a.set(1, 1, 0.0);
  a.set(1, 2, -1.0);
  a.set(2, 1, 1.0);
  a.set(2, 2, 0.0);
  a.set(3, 3, 1.0);
  const OmegaTauReport rep = is_omega_tau(a);
  CHECK_FALSE(rep.omega.holds);
  REQUIRE(rep.omega.witness.has_value());
}

TEST_CASE("Hermitian samples satisfy omega exhaustively") {
  std::mt19937_64 rng(59);
  for (int rep = 0; rep < 10; ++rep) {
    DenseMatrix b = oracle::random_real_matrix(rng, 5);
    DenseMatrix a = b + b.transpose();
    CHECK(is_omega_tau(a).omega.holds);
  }
}

TEST_CASE("P-matrices avoid the closed negative real axis") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 30; ++rep) {
    const DenseMatrix a = oracle::random_p_matrix(rng, 5);
    const auto l = min_real_eigenvalue(a);
    if (l) CHECK(*l > 0.0);
  }
}

TEST_CASE("Kellogg wedge") {
  const ClassReport ok = kellogg_wedge_check(DenseMatrix::from_real_rows({{1, 2}, {0, 1}}));
  CHECK(ok.holds);

  CHECK_THROWS_AS(kellogg_wedge_check(DenseMatrix::from_real_rows({{1}})), argument_error);
  CHECK_THROWS_AS(kellogg_wedge_check(DenseMatrix::from_real_rows({{0, 1}, {1, 1}})),
                  argument_error);

  // The order-44 member is a P-matrix by construction (consecutive-index
  // minors are powers of t); the exhaustive scan is out of reach, so the
  // caller certifies.
  const DenseMatrix big = build_counterexample({44, 21, Rational(1, 2)}).to_dense();
  CHECK(kellogg_wedge_check(big, PMatrixCertificate::assume).holds);

  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 20; ++rep) {
    const DenseMatrix a = oracle::random_p_matrix(rng, 4);
    CHECK(kellogg_wedge_check(a).holds);
  }
}

TEST_CASE("eigenvalues of sections satisfy the determinant recurrence") {
  // Cross-engine consistency: each section eigenvalue is a root of the
  // determinant polynomial evaluated through the linear recurrence.
  for (const int n : {6, 12, 17}) {
    const int k = 2;
    const double t = 0.5;
    const DenseMatrix a = build_counterexample({n, k, Rational(1, 2)}).to_dense();
    for (Complex lambda : eigenvalues(a)) {
      double scale = 1.0;
      for (int j = 0; j <= n; ++j)
        scale = std::max(scale, std::abs(d_poly_eval(k, t, j, lambda)));
      CHECK(std::abs(d_poly_eval(k, t, n, lambda)) <= 1e-6 * scale);
    }
  }
}
