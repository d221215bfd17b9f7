#include "structmat/eigensolve.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "structmat/errors.hpp"

namespace structmat {

namespace {

Eigen::MatrixXcd to_eigen(const DenseMatrix& a) {
  const int n = a.order();
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a.at(i + 1, j + 1);
  return m;
}

Eigen::MatrixXd to_eigen_real(const DenseMatrix& a) {
  const int n = a.order();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a.at(i + 1, j + 1).real();
  return m;
}

// Parlett-Reinsch balancing (Numer. Math. 13, 1969): diagonal similarity by
// powers of two, so eigenvalues are preserved exactly in floating point.
template <typename Matrix>
void balance(Matrix& m) {
  const int n = static_cast<int>(m.rows());
  const double gamma = 0.9;
  bool changed;
  do {
    changed = false;
    for (int i = 0; i < n; ++i) {
      double row_norm = 0.0, col_norm = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        row_norm += std::abs(m(i, j));
        col_norm += std::abs(m(j, i));
      }
      if (row_norm == 0.0 || col_norm == 0.0) continue;
      int exponent = 0;
      std::frexp(row_norm / col_norm, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col_norm, exponent);
      const double scaled_row = std::ldexp(row_norm, -exponent);
      if (scaled_col + scaled_row < gamma * (col_norm + row_norm)) {
        changed = true;
        m.row(i) *= std::ldexp(1.0, -exponent);
        m.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  } while (changed);
}

void sort_spectrum(std::vector<Complex>& v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

std::vector<Complex> eigenvalues(const DenseMatrix& a) {
  const int n = a.order();
  std::vector<Complex> out(n);
  if (a.is_real()) {
    Eigen::MatrixXd m = to_eigen_real(a);
    balance(m);
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
      throw numerical_error("real QR iteration failed to converge");
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  } else {
    Eigen::MatrixXcd m = to_eigen(a);
    balance(m);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
      throw numerical_error("complex QR iteration failed to converge");
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  }
  sort_spectrum(out);
  return out;
}

std::vector<Eigenpair> eigenpairs(const DenseMatrix& a) {
  const int n = a.order();
  Eigen::MatrixXcd m = to_eigen(a);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success)
    throw numerical_error("complex QR iteration failed to converge");
  std::vector<Eigenpair> out(n);
  for (int i = 0; i < n; ++i) {
    out[i].value = es.eigenvalues()(i);
    out[i].vector.resize(n);
    for (int j = 0; j < n; ++j) out[i].vector[j] = es.eigenvectors()(j, i);
  }
  std::sort(out.begin(), out.end(), [](const Eigenpair& x, const Eigenpair& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return out;
}

std::vector<double> eigenvalues_hermitian(const DenseMatrix& a, double herm_tol) {
  const int n = a.order();
  const double scale = std::max(1.0, p_norm(a, PNorm::infinity));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (std::abs(a.at(i, j) - std::conj(a.at(j, i))) > herm_tol * scale)
        throw argument_error("matrix is not Hermitian to tolerance");
  Eigen::MatrixXcd m = to_eigen(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw numerical_error("Hermitian eigensolve failed");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

namespace {

template <typename Scalar>
std::vector<Complex> poly_roots_impl(const std::vector<Scalar>& ascending) {
  int degree = static_cast<int>(ascending.size()) - 1;
  while (degree > 0 && std::abs(Complex(ascending[degree])) == 0.0) --degree;
  if (degree <= 0) throw argument_error("root finding needs a nonconstant polynomial");
  using Matrix =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix companion = Matrix::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = Scalar(1);
  for (int i = 0; i < degree; ++i)
    companion(i, degree - 1) = -ascending[i] / ascending[degree];
  balance(companion);
  std::vector<Complex> roots(degree);
  if constexpr (std::is_same_v<Scalar, double>) {
    Eigen::EigenSolver<Matrix> es(companion, false);
    if (es.info() != Eigen::Success) throw numerical_error("companion eigensolve failed");
    for (int i = 0; i < degree; ++i) roots[i] = es.eigenvalues()(i);
  } else {
    Eigen::ComplexEigenSolver<Matrix> es(companion, false);
    if (es.info() != Eigen::Success) throw numerical_error("companion eigensolve failed");
    for (int i = 0; i < degree; ++i) roots[i] = es.eigenvalues()(i);
  }
  sort_spectrum(roots);
  return roots;
}

}  // namespace

std::vector<Complex> poly_roots(const std::vector<Complex>& ascending) {
  bool real = true;
  for (Complex c : ascending)
    if (c.imag() != 0.0) {
      real = false;
      break;
    }
  if (real) {
    std::vector<double> rc(ascending.size());
    for (size_t i = 0; i < ascending.size(); ++i) rc[i] = ascending[i].real();
    return poly_roots_impl(rc);
  }
  return poly_roots_impl(ascending);
}

std::vector<Complex> poly_roots(const std::vector<double>& ascending) {
  return poly_roots_impl(ascending);
}

std::vector<Complex> char_poly(const DenseMatrix& a) {
  const std::vector<Complex> lambda = eigenvalues(a);
  std::vector<Complex> c{1.0};  // ascending; c[i] multiplies x^i
  for (Complex l : lambda) {
    // multiply by (x - l)
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= l * c[i];
    }
    c = std::move(next);
  }
  if (a.is_real())
    for (Complex& v : c) v = Complex(v.real(), 0.0);
  return c;
}

double spectral_radius(const DenseMatrix& a) {
  double r = 0.0;
  for (Complex l : eigenvalues(a)) r = std::max(r, std::abs(l));
  return r;
}

}  // namespace structmat
