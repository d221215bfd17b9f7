#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "structmat/errors.hpp"
#include "structmat/predicates.hpp"
#include "structmat/toeplitz.hpp"

using namespace structmat;
namespace oracle = structmat::testing;

TEST_CASE("band sections and symbols") {
  const ToeplitzBand shift = ToeplitzBand::from_powers({{1, 1.0}});
  CHECK(std::abs(shift.symbol(std::polar(1.0, 0.7)) - std::polar(1.0, 0.7)) <= 1e-15);

  const ToeplitzBand eye = ToeplitzBand::from_powers({{0, 1.0}});
  const DenseMatrix s = eye.section(4);
  for (int i = 1; i <= 4; ++i) CHECK(s.at(i, i) == Complex(1.0));

  const CurveSamples curve = symbol_curve(shift, 256);
  CHECK(curve.points.size() == 257);
  CHECK(curve.points.front() == curve.points.back());
  for (Complex p : curve.points) CHECK(std::abs(std::abs(p) - 1.0) <= 1e-12);

  CHECK_THROWS_AS(symbol_curve(shift, 4), argument_error);
}

TEST_CASE("counterexample symbol curve passes the negative point") {
  const int k = 3;
  const double t = 0.2;
  const CurveSamples curve = symbol_curve(k, t, 512);
  const double negpoint = -(1.0 - t) / (k + 2 - (k + 1) * t);
  // theta = pi is on the grid: s = -1 lands exactly on the sample.
  double best = 1e300;
  for (Complex p : curve.points) best = std::min(best, std::abs(p - Complex(negpoint)));
  CHECK(best <= 1e-9);
}

TEST_CASE("winding membership") {
  const ToeplitzBand shift = ToeplitzBand::from_powers({{1, 1.0}});
  CHECK(winding_spectrum_member(shift, Complex(0.0, 0.0)));
  CHECK_FALSE(winding_spectrum_member(shift, Complex(2.0, 0.0)));

  // The negative symbol value lies on the curve itself.
  const int k = 3;
  const double t = 0.2;
  const double negpoint = -(1.0 - t) / (k + 2 - (k + 1) * t);
  CHECK(winding_spectrum_member(k, t, Complex(negpoint, 0.0)));
}

TEST_CASE("Day membership for the symmetric tridiagonal oracle band") {
  // F = s^2 + 1, G = s, H = 1: roots of s^2 - lambda s + 1 tie in modulus
  // exactly on the segment [-2, 2].
  RationalSymbol sym;
  sym.f = {Complex(1.0), Complex(0.0), Complex(1.0)};
  sym.g = {Complex(0.0), Complex(1.0)};
  sym.h = {Complex(1.0)};
  CHECK(sym.p() == 1);

  CHECK(day_limit_member(sym, Complex(0.0, 0.0)).is_member);
  CHECK_FALSE(day_limit_member(sym, Complex(3.0, 0.0)).is_member);
  for (int g = 0; g < 100; ++g) {
    const double lambda = -3.0 + 6.0 * g / 99.0;
    const bool want = std::abs(lambda) <= 2.0;
    CHECK(day_limit_member(sym, Complex(lambda, 0.0), 1e-8).is_member == want);
  }
  // Off-axis probes are outside.
  CHECK_FALSE(day_limit_member(sym, Complex(0.5, 0.7)).is_member);
}

TEST_CASE("Day membership fails at the negative symbol point") {
  for (int k = 1; k <= 10; ++k)
    for (double t : {0.25, 0.5, 0.75}) {
      const RationalSymbol sym = counterexample_symbol(k, t);
      const double negpoint = -(1.0 - t) / (k + 2 - (k + 1) * t);
      const DayResult d = day_limit_member(sym, Complex(negpoint, 0.0), 1e-8);
      CHECK_FALSE(d.is_member);
      CHECK(d.gap > 1e-7);  // bounded away from the tie tolerance
    }
}

TEST_CASE("Day membership at the degenerate lambda is an error") {
  const RationalSymbol sym = counterexample_symbol(2, 0.5);
  CHECK_THROWS_AS(day_limit_member(sym, Complex(0.0, 0.0)), argument_error);
}

TEST_CASE("the t=0 negative axis stays outside the limit set") {
  // The Biernacki reduction applies to (1+s)(F - lambda G H), whose extra
  // factor plants a root at s = -1 for every lambda. At the star's branch
  // point lambda = -1/(k+2) that artificial root is exactly where the tie
  // happens, so the limit-set criterion on R = F - lambda G H itself sees a
  // simple strictly-minimal root there and real negative points stay outside.
  const int k = 3;
  const RationalSymbol sym = counterexample_symbol(k, 0.0);
  const DayResult at_branch = day_limit_member(sym, Complex(-1.0 / (k + 2), 0.0), 1e-6);
  CHECK_FALSE(at_branch.is_member);
  CHECK(at_branch.gap > 0.1);
  for (double lam : {-0.8, -0.4, -0.1})
    CHECK_FALSE(day_limit_member(sym, Complex(lam, 0.0), 1e-6).is_member);
}

TEST_CASE("Biernacki star radii") {
  CHECK(biernacki_star(1, 1).radius_max == doctest::Approx(2.0));
  CHECK(biernacki_star(1, 1).ray_count == 2);
  CHECK(biernacki_star(1, 2).radius_max == doctest::Approx(3.0 * std::pow(2.0, -2.0 / 3.0)));
  CHECK(biernacki_star(2, 3).radius_max ==
        doctest::Approx(5.0 * std::pow(2.0, -0.4) * std::pow(3.0, -0.6)));
  CHECK_THROWS_AS(biernacki_star(2, 4), argument_error);
  CHECK_THROWS_AS(biernacki_star(0, 1), argument_error);
}

TEST_CASE("Biernacki radius matches the Day branch point for the oracle band") {
  // For s + 1/s the star is the segment [-2, 2]: membership through the Day
  // criterion flips exactly at radius 2 = the star radius.
  RationalSymbol sym;
  sym.f = {Complex(1.0), Complex(0.0), Complex(1.0)};
  sym.g = {Complex(0.0), Complex(1.0)};
  sym.h = {Complex(1.0)};
  const double r = biernacki_star(1, 1).radius_max;
  CHECK(day_limit_member(sym, Complex(r - 1e-4, 0.0)).is_member);
  CHECK_FALSE(day_limit_member(sym, Complex(r + 1e-4, 0.0)).is_member);
}

TEST_CASE("finite section sweep") {
  const ToeplitzBand eye = ToeplitzBand::from_powers({{0, 1.0}});
  const SectionSpectra s = finite_section_sweep(eye, {2, 5, 9});
  for (const auto& spectrum : s.spectra)
    for (Complex l : spectrum) CHECK(std::abs(l - Complex(1.0)) <= 1e-12);

  CHECK_THROWS_AS(finite_section_sweep(eye, {5, 5}), argument_error);

  const SectionSpectra one = finite_section_sweep(3, Rational(1, 2), {1});
  CHECK(one.spectra[0].size() == 1);
  CHECK(std::abs(one.spectra[0][0] - Complex(1.0)) <= 1e-12);  // a_0 = 1
}

TEST_CASE("Gohberg-Semencul reconstruction") {
  const DenseMatrix eye = DenseMatrix::identity(4);
  std::vector<Complex> x{1.0, 0.0, 0.0, 0.0}, y{0.0, 0.0, 0.0, 1.0};
  const DenseMatrix inv = gohberg_semencul_inverse(eye, x, y);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(std::abs(inv.at(i, j) - eye.at(i, j)) <= 1e-14);

  // Random well-conditioned Toeplitz matrices against the direct inverse.
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 28);
    std::vector<double> diag(2 * n - 1);
    for (double& v : diag) v = dist(rng);
    DenseMatrix t(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) t.set(i, j, diag[i - j + n - 1]);
    for (int i = 1; i <= n; ++i) t.set(i, i, t.at(i, i) + 3.0);  // keep well conditioned
    std::vector<Complex> e1(n, 0.0), en(n, 0.0);
    e1[0] = 1.0;
    en[n - 1] = 1.0;
    const std::vector<Complex> xs = solve(t, e1), ys = solve(t, en);
    const DenseMatrix gs = gohberg_semencul_inverse(t, xs, ys);
    const DenseMatrix direct = inverse(t);
    double err = 0.0, scale = p_norm(direct, PNorm::infinity);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) err = std::max(err, std::abs(gs.at(i, j) - direct.at(i, j)));
    CHECK(err <= 1e-9 * std::max(1.0, scale));
  }

  // Guards: non-Toeplitz input, wrong solutions, vanishing x_0.
  CHECK_THROWS_AS(
      gohberg_semencul_inverse(DenseMatrix::from_real_rows({{1, 0}, {0, 2}}),
                               std::vector<Complex>{1.0, 0.0}, std::vector<Complex>{0.0, 0.5}),
      argument_error);
  CHECK_THROWS_AS(gohberg_semencul_inverse(eye, std::vector<Complex>{0.5, 0.0, 0.0, 0.0}, y),
                  argument_error);
}

TEST_CASE("closed-form x and y for the counterexample family") {
  // n = k+2 base case, verified exactly inside the builder.
  const XYPair base = counterexample_xy({3, 1, Rational(1, 2)});
  CHECK(base.x == std::vector<Rational>{Rational(2), Rational(-2), Rational(2)});
  CHECK(base.y == std::vector<Rational>{Rational(1), Rational(-1), Rational(2)});

  for (int k : {1, 2, 5, 10})
    for (int n : {k + 2, k + 5, 2 * k + 2, 40})
      for (const Rational& t : {Rational(1, 4), Rational(1, 2)}) {
        if (n < k + 2) continue;
        const XYPair xy = counterexample_xy({n, k, t});  // throws on residual failure
        // y has exactly k+2 nonzero trailing entries.
        int nonzero = 0;
        for (const Rational& v : xy.y)
          if (v != 0) ++nonzero;
        CHECK(nonzero == std::min(n, k + 2));
        for (int i = 0; i < n - k - 2; ++i) CHECK(xy.y[i] == 0);
      }

  CHECK_THROWS_AS(counterexample_xy({2, 1, Rational(1, 2)}), argument_error);
}

TEST_CASE("x/y magnitude comparison behind the checkerboard argument") {
  // |x_l y_{-m}| >= |x_{n-m} y_{l-n}| whenever m >= 1 and n - m > l.
  for (int k : {1, 3})
    for (int n : {k + 2, k + 6, 2 * k + 2}) {
      const XYPair xy = counterexample_xy({n, k, Rational(1, 2)});
      auto xv = [&](int l) { return std::abs(to_double(xy.x[l])); };
      auto yv = [&](int m) {
        const int idx = n - 1 + m;
        return idx >= 0 ? std::abs(to_double(xy.y[idx])) : 0.0;  // y vanishes below -n+1
      };
      for (int m = 1; m < n; ++m)
        for (int l = 0; l < n - m; ++l)
          CHECK(xv(l) * yv(-m) >= xv(n - m) * yv(l - n) - 1e-12);
    }
}

TEST_CASE("Gohberg-Semencul inverse of the family is checkerboard") {
  for (int k : {2, 4})
    for (const Rational& t : {Rational(1, 4), Rational(1, 2)}) {
      const int n = 2 * k + 2;
      const XYPair xy = counterexample_xy({n, k, t});
      std::vector<Complex> x(n), y(n);
      for (int i = 0; i < n; ++i) {
        x[i] = to_double(xy.x[i]);
        y[i] = to_double(xy.y[i]);
      }
      const DenseMatrix a = build_counterexample({n, k, t}).to_dense();
      const DenseMatrix inv = gohberg_semencul_inverse(a, x, y);
      CHECK(is_checkerboard(inv, 1e-9).holds);
    }
}
