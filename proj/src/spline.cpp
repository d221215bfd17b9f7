#include "structmat/spline.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "structmat/eigensolve.hpp"
#include "structmat/errors.hpp"

namespace structmat {

void KnotSequence::validate() const {
  if (order < 1) throw argument_error("spline order must be positive");
  const int n = dimension();
  if (n < 1) throw argument_error("knot sequence too short for its order");
  for (size_t i = 1; i < knots.size(); ++i)
    if (knots[i] < knots[i - 1]) throw argument_error("knots must be nondecreasing");
  for (int i = 0; i + order < static_cast<int>(knots.size()); ++i)
    if (!(knots[i] < knots[i + order])) {
      std::ostringstream os;
      os << "degenerate knots: t_" << i + 1 << " = t_" << i + 1 + order;
      throw argument_error(os.str());
    }
}

KnotSequence KnotSequence::uniform(int dimension, int order, double a, double b) {
  KnotSequence t;
  t.order = order;
  const int count = dimension + order;
  t.knots.resize(count);
  for (int i = 0; i < count; ++i) t.knots[i] = a + (b - a) * i / (count - 1);
  t.validate();
  return t;
}

double bspline_eval(const KnotSequence& t, int i, double x) {
  t.validate();
  const int k = t.order, n = t.dimension();
  if (i < 1 || i > n) throw argument_error("B-spline index out of range");
  const double lo = t.knots.front(), hi = t.knots.back();
  if (x < lo || x > hi) throw argument_error("evaluation point outside the knot range");
  // values[m] holds B_{i+m,1}(x) for m = 0..k-1, then the triangle collapses.
  std::vector<double> values(k, 0.0);
  const auto knot = [&](int idx) { return t.knots[idx - 1]; };  // 1-based
  for (int m = 0; m < k; ++m) {
    const int j = i + m;
    const double a = knot(j), b = knot(j + 1);
    const bool inside = (a <= x && x < b) || (x == hi && a < b && b == hi);
    values[m] = inside ? 1.0 : 0.0;
  }
  for (int ord = 2; ord <= k; ++ord) {
    for (int m = 0; m + ord - 1 < k; ++m) {
      const int j = i + m;
      const double den1 = knot(j + ord - 1) - knot(j);
      const double den2 = knot(j + ord) - knot(j + 1);
      const double w1 = den1 > 0.0 ? (x - knot(j)) / den1 : 0.0;
      const double w2 = den2 > 0.0 ? (knot(j + ord) - x) / den2 : 0.0;
      values[m] = w1 * values[m] + w2 * values[m + 1];
    }
  }
  return values[0];
}

namespace {

// Newton iteration on Legendre polynomials from Chebyshev initial guesses.
void legendre_value_derivative(int m, double x, double* p, double* dp) {
  double p0 = 1.0, p1 = x;
  if (m == 0) {
    *p = 1.0;
    *dp = 0.0;
    return;
  }
  for (int j = 2; j <= m; ++j) {
    const double pj = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = pj;
  }
  *p = p1;
  *dp = m * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int points) {
  if (points < 1) throw argument_error("quadrature needs at least one node");
  std::vector<double> x(points), w(points);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < points; ++i) {
    double xi = std::cos(pi * (i + 0.75) / (points + 0.5));
    if (points == 1) xi = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p, dp;
      legendre_value_derivative(points, xi, &p, &dp);
      if (points == 1) break;
      const double step = p / dp;
      xi -= step;
      if (std::abs(step) < 1e-15) break;
    }
    double p, dp;
    legendre_value_derivative(points, xi, &p, &dp);
    x[i] = xi;
    w[i] = points == 1 ? 2.0 : 2.0 / ((1.0 - xi * xi) * dp * dp);
  }
  return {x, w};
}

GramMatrix gram_matrix(const KnotSequence& t) {
  t.validate();
  const int k = t.order, n = t.dimension();
  const auto [nodes, weights] = gauss_legendre(k);
  DenseMatrix m(n);
  const auto knot = [&](int idx) { return t.knots[idx - 1]; };
  for (int interval = 1; interval < static_cast<int>(t.knots.size()); ++interval) {
    const double a = knot(interval), b = knot(interval + 1);
    if (!(b > a)) continue;
    const int first = std::max(1, interval - k + 1), last = std::min(n, interval);
    if (first > last) continue;
    for (int q = 0; q < k; ++q) {
      const double xq = 0.5 * (a + b) + 0.5 * (b - a) * nodes[q];
      const double wq = 0.5 * (b - a) * weights[q];
      std::vector<double> vals(last - first + 1);
      for (int i = first; i <= last; ++i) vals[i - first] = bspline_eval(t, i, xq);
      for (int i = first; i <= last; ++i)
        for (int j = first; j <= last; ++j)
          m.set(i, j, m.at(i, j) + wq * vals[i - first] * vals[j - first]);
    }
  }
  for (int i = 1; i <= n; ++i) {
    const double scale = k / (knot(i + k) - knot(i));
    for (int j = 1; j <= n; ++j) m.set(i, j, scale * m.at(i, j).real());
  }
  return GramMatrix{std::move(m), t};
}

SymmetrizedGram symmetrize(const GramMatrix& g) {
  const int k = g.knots.order, n = g.knots.dimension();
  SymmetrizedGram out;
  out.d.resize(n);
  for (int i = 1; i <= n; ++i)
    out.d[i - 1] = std::sqrt(k / (g.knots.knots[i + k - 1] - g.knots.knots[i - 1]));
  out.h = DenseMatrix(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out.h.set(i, j, g.matrix.at(i, j).real() * out.d[j - 1] / out.d[i - 1]);
  // Symmetrize exactly against roundoff; the skew part is at rounding level.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const double v = 0.5 * (out.h.at(i, j).real() + out.h.at(j, i).real());
      out.h.set(i, j, v);
      out.h.set(j, i, v);
    }
  return out;
}

ConjectureReport deboor_conjecture_experiment(int k, int knot_samples, int n_max,
                                              std::uint64_t seed) {
  if (k < 1 || k > 4) throw argument_error("experiment covers orders 1..4");
  if (n_max < 2 * k + 2) throw argument_error("n_max too small");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> stress_dist(0.0, 10.0);
  std::uniform_int_distribution<int> n_dist(2 * k + 2, n_max);
  ConjectureReport rep;
  rep.max_inv_norm_inf = 0.0;
  rep.min_lambda_min = std::numeric_limits<double>::infinity();
  for (int sample = 0; sample < knot_samples; ++sample) {
    const std::uint64_t sample_seed = rng();
    std::mt19937_64 local(sample_seed);
    const int n = n_dist(local);
    const double stress = stress_dist(local);
    KnotSequence t;
    t.order = k;
    t.knots.resize(n + k);
    double pos = 0.0;
    t.knots[0] = 0.0;
    for (int i = 1; i < n + k; ++i) {
      pos += std::exp(unit(local) * stress);
      t.knots[i] = pos;
    }
    const GramMatrix g = gram_matrix(t);
    const SymmetrizedGram sym = symmetrize(g);
    ConjectureSample row;
    row.seed = sample_seed;
    row.n = n;
    row.k = k;
    row.inv_norm_inf = p_norm(inverse(g.matrix), PNorm::infinity);
    const std::vector<double> spec = eigenvalues_hermitian(sym.h);
    row.lambda_min = spec.front();
    const auto [dmin, dmax] = std::minmax_element(sym.d.begin(), sym.d.end());
    row.cond_d = *dmax / *dmin;
    row.symmetrized_bound =
        p_norm(sym.h, PNorm::infinity) / (row.lambda_min * row.lambda_min);
    rep.samples.push_back(row);
    rep.max_inv_norm_inf = std::max(rep.max_inv_norm_inf, row.inv_norm_inf);
    rep.min_lambda_min = std::min(rep.min_lambda_min, row.lambda_min);
  }
  return rep;
}

}  // namespace structmat
