#include <doctest.h>

#include <cmath>
#include <random>

#include "structmat/eigensolve.hpp"
#include "structmat/errors.hpp"
#include "structmat/invertibility.hpp"
#include "structmat/spline.hpp"

using namespace structmat;

namespace {

KnotSequence random_knots(std::mt19937_64& rng, int n, int k, double stress) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  KnotSequence t;
  t.order = k;
  t.knots.resize(n + k);
  t.knots[0] = 0.0;
  for (int i = 1; i < n + k; ++i) t.knots[i] = t.knots[i - 1] + std::exp(unit(rng) * stress);
  return t;
}

}  // namespace

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int m = 1; m <= 8; ++m) {
    const auto [x, w] = gauss_legendre(m);
    for (int deg = 0; deg <= 2 * m - 1; ++deg) {
      double got = 0.0;
      for (int q = 0; q < m; ++q) got += w[q] * std::pow(x[q], deg);
      const double want = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      CHECK(std::abs(got - want) <= 1e-13);
    }
  }
}

TEST_CASE("order-1 splines are interval indicators") {
  const KnotSequence t = KnotSequence::uniform(4, 1, 0.0, 4.0);
  CHECK(bspline_eval(t, 2, 1.5) == doctest::Approx(1.0));
  CHECK(bspline_eval(t, 2, 2.5) == doctest::Approx(0.0));
  CHECK(bspline_eval(t, 2, 1.0) == doctest::Approx(1.0));  // left-closed
  CHECK(bspline_eval(t, 2, 2.0) == doctest::Approx(0.0));  // right-open
  CHECK(bspline_eval(t, 4, 4.0) == doctest::Approx(1.0));  // last interval closes

  CHECK_THROWS_AS(bspline_eval(t, 2, 4.5), argument_error);
  CHECK_THROWS_AS(bspline_eval(t, 0, 1.0), argument_error);
}

TEST_CASE("order-2 hat peaks at one") {
  const KnotSequence t = KnotSequence::uniform(5, 2, 0.0, 6.0);
  // B_{i,2} peaks at the middle knot of its support.
  CHECK(bspline_eval(t, 2, 2.0) == doctest::Approx(1.0));
  CHECK(bspline_eval(t, 2, 1.5) == doctest::Approx(0.5));
}

TEST_CASE("partition of unity on the full-support interval") {
  std::mt19937_64 rng(7);
  for (int k = 1; k <= 4; ++k) {
    const int n = 12;
    const KnotSequence t = random_knots(rng, n, k, 2.0);
    const double lo = t.knots[k - 1], hi = t.knots[n];
    for (int g = 0; g < 1000; ++g) {
      const double x = lo + (hi - lo) * (g + 0.5) / 1000.0;
      double sum = 0.0;
      for (int i = 1; i <= n; ++i) sum += bspline_eval(t, i, x);
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("gram matrix of order 1 is the identity") {
  std::mt19937_64 rng(11);
  const KnotSequence t = random_knots(rng, 6, 1, 1.5);
  const GramMatrix g = gram_matrix(t);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      CHECK(g.matrix.at(i, j).real() == doctest::Approx(i == j ? 1.0 : 0.0));
}

TEST_CASE("gram matrix of order 2 on uniform knots") {
  const GramMatrix g = gram_matrix(KnotSequence::uniform(10, 2));
  // Interior rows: diagonal 2/3, neighbours 1/6.
  for (int i = 3; i <= 8; ++i) {
    CHECK(g.matrix.at(i, i).real() == doctest::Approx(2.0 / 3.0));
    CHECK(g.matrix.at(i, i + 1).real() == doctest::Approx(1.0 / 6.0));
    CHECK(g.matrix.at(i, i - 1).real() == doctest::Approx(1.0 / 6.0));
  }
}

TEST_CASE("gram band width is exactly the order") {
  std::mt19937_64 rng(13);
  for (int k = 1; k <= 4; ++k) {
    const int n = 10;
    const GramMatrix g = gram_matrix(random_knots(rng, n, k, 3.0));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (std::abs(i - j) >= k)
          CHECK(g.matrix.at(i, j) == Complex(0.0));
        else if (std::abs(i - j) == k - 1 && k >= 2)
          CHECK(g.matrix.at(i, j).real() > 0.0);
  }
}

TEST_CASE("unscaled row sums integrate the splines") {
  // Row i of the unscaled Gram is integral of B_i * (sum_j B_j) =
  // integral of B_i over the full-support region; checked on knots whose
  // B_i supports lie inside [t_k, t_{n+1}].
  std::mt19937_64 rng(17);
  const int k = 3, n = 12;
  const KnotSequence t = random_knots(rng, n, k, 1.0);
  const GramMatrix g = gram_matrix(t);
  const auto [nodes, weights] = gauss_legendre(k + 1);
  for (int i = k; i <= n - k + 1; ++i) {
    double row = 0.0;
    for (int j = 1; j <= n; ++j) row += g.matrix.at(i, j).real();
    row *= (t.knots[i + k - 1] - t.knots[i - 1]) / k;  // undo the scaling
    double integral = 0.0;
    for (int m = i; m < i + k; ++m) {
      const double a = t.knots[m - 1], b = t.knots[m];
      for (size_t q = 0; q < nodes.size(); ++q) {
        const double x = 0.5 * (a + b) + 0.5 * (b - a) * nodes[q];
        integral += 0.5 * (b - a) * weights[q] * bspline_eval(t, i, x);
      }
    }
    CHECK(std::abs(row - integral) <= 1e-10);
  }
}

TEST_CASE("symmetrization") {
  std::mt19937_64 rng(19);
  const KnotSequence t = random_knots(rng, 9, 3, 2.5);
  const GramMatrix g = gram_matrix(t);
  const SymmetrizedGram sym = symmetrize(g);

  // H = D^-1 G D is symmetric and similar to G.
  const auto spec_g = eigenvalues(g.matrix);
  const auto spec_h = eigenvalues(sym.h);
  for (size_t i = 0; i < spec_g.size(); ++i) {
    CHECK(std::abs(spec_g[i] - spec_h[i]) <= 1e-9 * std::max(1.0, std::abs(spec_g[i])));
    CHECK(spec_g[i].real() > 0.0);  // positive spectrum
    CHECK(std::abs(spec_g[i].imag()) <= 1e-9);
  }

  // k = 1: D recovers the row scaling and H = I.
  std::mt19937_64 rng2(23);
  const GramMatrix g1 = gram_matrix(random_knots(rng2, 5, 1, 2.0));
  const SymmetrizedGram sym1 = symmetrize(g1);
  for (int i = 1; i <= 5; ++i) CHECK(sym1.h.at(i, i).real() == doctest::Approx(1.0));

  // k = 2 uniform: already symmetric, D constant.
  const SymmetrizedGram sym2 = symmetrize(gram_matrix(KnotSequence::uniform(8, 2)));
  for (size_t i = 1; i < sym2.d.size(); ++i) CHECK(sym2.d[i] == doctest::Approx(sym2.d[0]));
}

TEST_CASE("degenerate knots are rejected") {
  KnotSequence t;
  t.order = 2;
  t.knots = {0.0, 1.0, 1.0, 1.0, 2.0, 3.0};  // t_2 = t_4 degenerate for k = 2
  CHECK_THROWS_AS(gram_matrix(t), argument_error);
}

TEST_CASE("conjecture experiment") {
  const ConjectureReport k1 = deboor_conjecture_experiment(1, 8, 20, 0);
  for (const ConjectureSample& s : k1.samples)
    CHECK(s.inv_norm_inf == doctest::Approx(1.0));  // identity Gram

  const ConjectureReport k2 = deboor_conjecture_experiment(2, 10, 30, 0);
  CHECK(k2.samples.size() == 10);
  CHECK(k2.max_inv_norm_inf < 3.0 + 1e-9);  // classical bound for order 2
  CHECK(k2.min_lambda_min > 0.0);

  const ConjectureReport k3 = deboor_conjecture_experiment(3, 12, 30, 0);
  CHECK(std::isfinite(k3.max_inv_norm_inf));
  for (const ConjectureSample& s : k3.samples) {
    CHECK(s.lambda_min > 1e-3);  // spectral floor stays comfortably positive
    CHECK(s.cond_d >= 1.0);
    CHECK(std::isfinite(s.symmetrized_bound));
  }

  // Determinism per seed.
  const ConjectureReport again = deboor_conjecture_experiment(3, 12, 30, 0);
  for (size_t i = 0; i < again.samples.size(); ++i) {
    CHECK(again.samples[i].seed == k3.samples[i].seed);
    CHECK(again.samples[i].inv_norm_inf == k3.samples[i].inv_norm_inf);
  }

  CHECK_THROWS_AS(deboor_conjecture_experiment(5, 4, 30, 0), argument_error);
}

TEST_CASE("uniform gram matrices pass the oscillatory bound for orders 2..4") {
  for (int k = 2; k <= 4; ++k) {
    const GramMatrix g = gram_matrix(KnotSequence::uniform(14, k));
    const SymmetrizedGram sym = symmetrize(g);
    const OscillatoryBound b = oscillatory_inverse_bound(
        sym.h, k == 2 ? StructureCertificate::verify : StructureCertificate::assume);
    CHECK(b.holds);
  }
}
