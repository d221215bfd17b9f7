#include "structmat/counterexample.hpp"

#include <cmath>
#include <sstream>

#include "structmat/errors.hpp"
#include "structmat/predicates.hpp"

namespace structmat {

DenseMatrix ToeplitzHessenberg::to_dense() const {
  const int n = order();
  std::vector<Rational> entries(static_cast<size_t>(n) * n, Rational(0));
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) entries[(i - 1) * n + (j - 1)] = first_row[j - i];
    if (i > 1) entries[(i - 1) * n + (i - 2)] = 1;
  }
  return DenseMatrix::from_exact(n, std::move(entries));
}

std::vector<double> ToeplitzHessenberg::first_row_double() const {
  std::vector<double> r(first_row.size());
  for (size_t i = 0; i < first_row.size(); ++i) r[i] = to_double(first_row[i]);
  return r;
}

namespace {

template <typename Scalar>
std::vector<Scalar> entries_from_minors_impl(const std::vector<Scalar>& d) {
  if (d.empty()) throw argument_error("need at least one leading minor");
  std::vector<Scalar> a(d.size());
  // d_0 = 1 implied; peel a_{m-1} off the Laplace expansion of d_m.
  for (size_t m = 1; m <= d.size(); ++m) {
    Scalar acc = d[m - 1];
    for (size_t j = 1; j < m; ++j) {
      const Scalar term = a[j - 1] * d[m - j - 1];
      if (j % 2 == 1)
        acc -= term;
      else
        acc += term;
    }
    a[m - 1] = (m % 2 == 1) ? acc : -acc;
  }
  return a;
}

}  // namespace

std::vector<Rational> entries_from_minors(const std::vector<Rational>& d) {
  return entries_from_minors_impl(d);
}

std::vector<double> entries_from_minors(const std::vector<double>& d) {
  return entries_from_minors_impl(d);
}

std::vector<Rational> counterexample_first_row(int n, int k, const Rational& t) {
  if (n < 1) throw argument_error("order must be positive");
  if (k < 1) throw argument_error("k must be positive");
  std::vector<Rational> d(n);
  Rational power = 1;
  for (int m = 1; m <= n; ++m) {
    d[m - 1] = power;  // t^((m-k-1)_+)
    if (m >= k + 1) power *= t;
  }
  return entries_from_minors(d);
}

ToeplitzHessenberg build_counterexample(const CounterexampleParams& p) {
  if (!(p.t > 0 && p.t < 1))
    throw argument_error("t must lie in (0,1); use build_limit for t -> 0");
  return ToeplitzHessenberg{counterexample_first_row(p.n, p.k, p.t)};
}

ToeplitzHessenberg build_limit(int k) {
  if (k < 1) throw argument_error("k must be positive");
  const int n = 2 * k + 2;
  std::vector<Rational> row(n, Rational(0));
  row[0] = 1;
  const int sign = (k % 2 == 0) ? 1 : -1;
  row[k + 1] = sign;
  row[k + 2] = sign;
  return ToeplitzHessenberg{std::move(row)};
}

Complex symbol_eval(int k, double t, Complex s) {
  Complex sum = 0.0;
  Complex pw = 1.0;
  for (int j = 1; j <= k + 1; ++j) {
    pw *= -s;
    sum += pw;
  }
  const Complex num = 1.0 + t * s;
  const Complex den = s * (1.0 + (1.0 - t) * sum);
  if (std::abs(den) < 1e-14 * std::max(1.0, std::abs(num))) {
    std::ostringstream os;
    os << "symbol pole at s = (" << s.real() << ", " << s.imag() << ")";
    throw pole_error(os.str(), s);
  }
  return num / den;
}

Complex d_poly_eval(int k, double t, int j, Complex lambda) {
  if (j < 0) throw argument_error("D_j index must be nonnegative");
  if (k < 1) throw argument_error("k must be positive");
  // Seeds D_0..D_{k+1} are (1-lambda)^j; the recurrence produces the rest
  // (in particular D_{k+2} = (1-lambda)^{k+2} - (1-t)).
  std::vector<Complex> d(static_cast<size_t>(std::max(j, k + 1)) + 1);
  Complex pw = 1.0;
  const Complex base = 1.0 - lambda;
  for (int m = 0; m <= k + 1; ++m) {
    d[m] = pw;
    pw *= base;
  }
  for (int m = k + 2; m <= j; ++m) {
    Complex tail = 0.0;
    for (int l = 2; l <= k + 2; ++l) tail += d[m - l];
    d[m] = -(lambda - t) * d[m - 1] - lambda * (1.0 - t) * tail;
  }
  return d[j];
}

PsiEtaPolys psi_eta_polys(int k) {
  if (k < 1) throw argument_error("k must be positive");
  PsiEtaPolys out;
  // psi_k = (1+x)^(k+3) - (k+1)(1+x) + k, ascending in x.
  out.psi.assign(static_cast<size_t>(k) + 4, Int(0));
  for (int j = 0; j <= k + 3; ++j) out.psi[j] = binomial(k + 3, j);
  out.psi[0] += Int(k) - Int(k + 1);
  out.psi[1] -= Int(k + 1);
  // eta_k = 2 x^(k+2) + sum_{j=2..k+3} C(k+3,j) x^(k+3-j).
  out.eta.assign(static_cast<size_t>(k) + 3, Int(0));
  out.eta[k + 2] = 2;
  for (int j = 2; j <= k + 3; ++j) out.eta[k + 3 - j] = binomial(k + 3, j);
  return out;
}

InstabilityCertificate instability_certificate(int k) {
  if (k < 1) throw argument_error("k must be positive");
  const PsiEtaPolys pe = psi_eta_polys(k);
  std::vector<Rational> descending(pe.eta.size());
  for (size_t i = 0; i < pe.eta.size(); ++i)
    descending[i] = Rational(pe.eta[pe.eta.size() - 1 - i]);
  // Rows/columns 2..5 of the Hurwitz pattern (i,j) -> a_{2j-i}; for k < 3 the
  // matrix itself is smaller than 5x5 and the pattern pads with zeros.
  const int d = static_cast<int>(descending.size()) - 1;
  std::vector<Rational> block(16, Rational(0));
  for (int i = 2; i <= 5; ++i)
    for (int j = 2; j <= 5; ++j) {
      const int m = 2 * j - i;
      if (m >= 0 && m <= d) block[(i - 2) * 4 + (j - 2)] = descending[m];
    }
  const DenseMatrix h = DenseMatrix::from_exact(4, std::move(block));
  const auto det = minor_exact(h, IndexSet::full(4), IndexSet::full(4));
  if (!det) throw numerical_error("Hurwitz minor must be available exactly");

  const Int kk(k);
  const Int cubic = 3 * kk * kk * kk - 49 * kk * kk - 210 * kk - 318;
  Rational closed = Rational(cubic) * (kk + 4) * (kk + 4) * (kk + 5);
  closed *= Rational(binomial(k + 3, 2) * binomial(k + 3, 4) * binomial(k + 3, 6));
  closed = -closed / 132300;

  InstabilityCertificate cert;
  cert.minor_value = *det;
  cert.closed_form_value = closed;
  cert.negative = cert.minor_value < 0;
  return cert;
}

}  // namespace structmat
