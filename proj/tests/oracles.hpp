// Test-only oracles and generators, independent of the library paths they
// cross-check.
#ifndef STRUCTMAT_TESTS_ORACLES_HPP_
#define STRUCTMAT_TESTS_ORACLES_HPP_

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "structmat/matrix.hpp"
#include "structmat/predicates.hpp"

namespace structmat::testing {

// Faddeev-LeVerrier: characteristic polynomial from traces alone, no
// eigenvalues involved. Ascending coefficients, monic.
inline std::vector<Complex> leverrier_char_poly(const DenseMatrix& a) {
  const int n = a.order();
  std::vector<Complex> c(n + 1, 0.0);
  c[n] = 1.0;
  DenseMatrix m = a;  // M_1 = A
  auto trace = [n](const DenseMatrix& x) {
    Complex tr = 0.0;
    for (int i = 1; i <= n; ++i) tr += x.at(i, i);
    return tr;
  };
  c[n - 1] = -trace(m);
  for (int step = 2; step <= n; ++step) {
    // M_k = A (M_{k-1} + c_{n-k+1} I)
    DenseMatrix shifted = m;
    for (int i = 1; i <= n; ++i) shifted.set(i, i, shifted.at(i, i) + c[n - step + 1]);
    m = a * shifted;
    c[n - step] = -trace(m) / static_cast<double>(step);
  }
  return c;
}

// Taylor coefficients of an analytic function by trapezoid quadrature on a
// circle of the given radius (spectrally accurate for radii inside the
// nearest singularity).
inline std::vector<Complex> series_coefficients(const std::function<Complex(Complex)>& f,
                                                int count, double radius = 0.5,
                                                int grid = 1024) {
  std::vector<Complex> out(count, 0.0);
  const double pi = std::acos(-1.0);
  for (int g = 0; g < grid; ++g) {
    const double th = 2.0 * pi * g / grid;
    const Complex s = std::polar(radius, th);
    const Complex v = f(s);
    for (int m = 0; m < count; ++m) out[m] += v * std::polar(1.0, -m * th);
  }
  for (int m = 0; m < count; ++m) out[m] /= grid * std::pow(radius, m);
  return out;
}

inline DenseMatrix random_real_matrix(std::mt19937_64& rng, int n, double lo = -1.0,
                                      double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  DenseMatrix a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.set(i, j, dist(rng));
  return a;
}

// Rejection sampling: uniform entries plus a growing diagonal shift until all
// principal minors are positive.
inline DenseMatrix random_p_matrix(std::mt19937_64& rng, int n) {
  for (;;) {
    DenseMatrix a = random_real_matrix(rng, n);
    for (double shift = 0.0; shift <= 4.0; shift += 0.25) {
      DenseMatrix b = a;
      for (int i = 1; i <= n; ++i) b.set(i, i, a.at(i, i) + shift);
      if (is_p_matrix(b).holds) return b;
    }
  }
}

// Symmetric positive definite (hence sign-symmetric P), optionally scaled by
// a positive diagonal, which preserves both properties but de-symmetrizes.
inline DenseMatrix random_sign_symmetric_p(std::mt19937_64& rng, int n, bool scale) {
  const DenseMatrix b = random_real_matrix(rng, n);
  DenseMatrix spd = b.transpose() * b;
  for (int i = 1; i <= n; ++i) spd.set(i, i, spd.at(i, i) + 0.3);
  if (!scale) return spd;
  std::uniform_real_distribution<double> d(0.2, 3.0);
  DenseMatrix out(n);
  for (int i = 1; i <= n; ++i) {
    const double di = d(rng);
    for (int j = 1; j <= n; ++j) out.set(i, j, di * spd.at(i, j));
  }
  return out;
}

// L L^T with positive bidiagonal L: symmetric positive definite tridiagonal
// with positive off-diagonals, totally nonnegative by the Cauchy-Binet
// factorization, hence oscillatory. Entries are kept exact (the sampled
// doubles are exact binary rationals) so minor scans of powers stay exact.
inline DenseMatrix random_oscillatory_tridiag(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> diag(0.5, 2.0), sub(0.1, 1.5);
  std::vector<Rational> d(n), l(n, Rational(0));
  for (int i = 0; i < n; ++i) d[i] = Rational(diag(rng));
  for (int i = 1; i < n; ++i) l[i] = Rational(sub(rng));
  std::vector<Rational> e(static_cast<size_t>(n) * n, Rational(0));
  for (int i = 1; i <= n; ++i) {
    const Rational& li = l[i - 1];
    e[(i - 1) * n + (i - 1)] =
        d[i - 1] * d[i - 1] + (i > 1 ? li * li * d[i - 2] * d[i - 2] : Rational(0));
    if (i > 1) {
      const Rational off = li * d[i - 2] * d[i - 2];
      e[(i - 1) * n + (i - 2)] = off;
      e[(i - 2) * n + (i - 1)] = off;
    }
  }
  return DenseMatrix::from_exact(n, std::move(e));
}

// Nested-block construction: both halves get a recursively built ultrametric
// diagonal block, the off-diagonal block is a constant below both halves'
// levels. A positive diagonal bump makes it strictly ultrametric.
inline void fill_ultrametric(std::mt19937_64& rng, DenseMatrix& a, int lo, int hi, double level) {
  if (lo == hi) {
    a.set(lo, lo, level);
    return;
  }
  std::uniform_real_distribution<double> up(0.05, 0.5);
  std::uniform_int_distribution<int> cut(lo, hi - 1);
  const int mid = cut(rng);
  const double next = level + up(rng);
  for (int i = lo; i <= mid; ++i)
    for (int j = mid + 1; j <= hi; ++j) {
      a.set(i, j, level);
      a.set(j, i, level);
    }
  fill_ultrametric(rng, a, lo, mid, next);
  fill_ultrametric(rng, a, mid + 1, hi, next);
}

inline DenseMatrix random_strictly_ultrametric(std::mt19937_64& rng, int n) {
  DenseMatrix a(n);
  fill_ultrametric(rng, a, 1, n, 0.1);
  std::uniform_real_distribution<double> bump(0.05, 0.6);
  for (int i = 1; i <= n; ++i) a.set(i, i, a.at(i, i) + bump(rng));
  return a;
}

// Sum of principal minors of each order, straight from the definition; the
// independent route to the Newton report quantities (n small).
inline std::vector<double> principal_minor_sums(const DenseMatrix& a) {
  const int n = a.order();
  std::vector<double> b(n + 1, 0.0);
  b[0] = 1.0;
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int lo) {
    for (int v = lo; v <= n; ++v) {
      idx.push_back(v);
      const IndexSet s{std::vector<int>(idx)};
      b[idx.size()] += minor(a, s, s).real();
      rec(v + 1);
      idx.pop_back();
    }
  };
  rec(1);
  return b;
}

}  // namespace structmat::testing

#endif  // STRUCTMAT_TESTS_ORACLES_HPP_
