#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "structmat/eigensolve.hpp"
#include "structmat/errors.hpp"

using namespace structmat;
using structmat::testing::leverrier_char_poly;
using structmat::testing::random_real_matrix;

TEST_CASE("spectrum of simple matrices") {
  const DenseMatrix d = DenseMatrix::from_real_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  const auto eigs = eigenvalues(d);
  REQUIRE(eigs.size() == 3);
  CHECK(eigs[0].real() == doctest::Approx(1.0));
  CHECK(eigs[1].real() == doctest::Approx(2.0));
  CHECK(eigs[2].real() == doctest::Approx(3.0));

  const DenseMatrix rot = DenseMatrix::from_real_rows({{0, -1}, {1, 0}});
  const auto reigs = eigenvalues(rot);
  CHECK(reigs[0].imag() == doctest::Approx(-1.0));
  CHECK(reigs[1].imag() == doctest::Approx(1.0));
  CHECK(std::abs(reigs[0].real()) <= 1e-14);
}

TEST_CASE("real input pairs conjugates exactly") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 100; ++rep) {
    const DenseMatrix a = random_real_matrix(rng, 7);
    auto eigs = eigenvalues(a);
    // Pair each eigenvalue with a bitwise conjugate partner.
    std::vector<bool> used(eigs.size(), false);
    for (size_t i = 0; i < eigs.size(); ++i) {
      if (used[i] || eigs[i].imag() == 0.0) continue;
      bool found = false;
      for (size_t j = 0; j < eigs.size(); ++j) {
        if (j == i || used[j]) continue;
        if (eigs[j].real() == eigs[i].real() && eigs[j].imag() == -eigs[i].imag()) {
          used[i] = used[j] = true;
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("block diagonal spectra merge") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const DenseMatrix a = random_real_matrix(rng, 4);
    const DenseMatrix b = random_real_matrix(rng, 3);
    auto all = eigenvalues(block_diag(a, b));
    auto ea = eigenvalues(a);
    auto eb = eigenvalues(b);
    ea.insert(ea.end(), eb.begin(), eb.end());
    std::sort(ea.begin(), ea.end(), [](Complex x, Complex y) {
      return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    for (size_t i = 0; i < all.size(); ++i) CHECK(std::abs(all[i] - ea[i]) <= 1e-9);
  }
}

TEST_CASE("eigenpair backward error") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 10; ++rep) {
    const DenseMatrix a = random_real_matrix(rng, 8);
    const double norm = p_norm(a, PNorm::infinity);
    for (const Eigenpair& pair : eigenpairs(a)) {
      const std::vector<Complex> av = mat_vec(a, pair.vector);
      double res = 0.0;
      for (size_t i = 0; i < av.size(); ++i)
        res = std::max(res, std::abs(av[i] - pair.value * pair.vector[i]));
      CHECK(res / norm <= 1e-10);
    }
  }
}

TEST_CASE("char poly examples") {
  const DenseMatrix d = DenseMatrix::from_real_rows({{1, 0}, {0, 2}});
  const auto c = char_poly(d);  // x^2 - 3x + 2
  CHECK(c[0].real() == doctest::Approx(2.0));
  CHECK(c[1].real() == doctest::Approx(-3.0));
  CHECK(c[2].real() == doctest::Approx(1.0));

  const DenseMatrix rot = DenseMatrix::from_real_rows({{0, -1}, {1, 0}});
  const auto cr = char_poly(rot);  // x^2 + 1
  CHECK(cr[0].real() == doctest::Approx(1.0));
  CHECK(std::abs(cr[1]) <= 1e-14);
  CHECK(cr[2].real() == doctest::Approx(1.0));
}

TEST_CASE("char poly agrees with the trace oracle") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    const DenseMatrix a = random_real_matrix(rng, 6);
    const auto fast = char_poly(a);
    const auto oracle = leverrier_char_poly(a);
    double scale = 0.0;
    for (const Complex v : oracle) scale = std::max(scale, std::abs(v));
    for (size_t i = 0; i < fast.size(); ++i)
      CHECK(std::abs(fast[i] - oracle[i]) <= 1e-8 * std::max(1.0, scale));
  }
}

TEST_CASE("polynomial roots recover planted roots") {
  // (x-1)(x-2)(x+3) = x^3 - 7x + 6
  const auto roots = poly_roots(std::vector<double>{6.0, -7.0, 0.0, 1.0});
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].real() == doctest::Approx(-3.0));
  CHECK(roots[1].real() == doctest::Approx(1.0));
  CHECK(roots[2].real() == doctest::Approx(2.0));

  CHECK_THROWS_AS(poly_roots(std::vector<double>{5.0}), argument_error);
  // Leading zeros are stripped before building the companion matrix.
  const auto r2 = poly_roots(std::vector<double>{-4.0, 0.0, 1.0, 0.0});
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].real() == doctest::Approx(-2.0));
  CHECK(r2[1].real() == doctest::Approx(2.0));
}

TEST_CASE("wide dynamic range roots survive balancing") {
  // Coefficients spanning several orders of magnitude; planted roots.
  std::vector<double> poly{1.0};  // constant
  const std::vector<double> planted{1e-3, 0.5, 40.0, 2000.0};
  std::vector<double> coeffs{1.0};
  for (double r : planted) {
    std::vector<double> next(coeffs.size() + 1, 0.0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= r * coeffs[i];
    }
    coeffs = std::move(next);
  }
  const auto roots = poly_roots(coeffs);
  for (double r : planted) {
    double best = 1e300;
    for (Complex z : roots) best = std::min(best, std::abs(z - r));
    CHECK(best <= 1e-9 * std::max(1.0, r));
  }
}
