#include "structmat/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "structmat/errors.hpp"

namespace structmat {

void IndexSet::validate(int n) const {
  for (size_t m = 0; m < indices.size(); ++m) {
    if (indices[m] < 1 || indices[m] > n) {
      std::ostringstream os;
      os << "index " << indices[m] << " out of range 1.." << n;
      throw argument_error(os.str());
    }
    if (m > 0 && indices[m] <= indices[m - 1])
      throw argument_error("index set must be strictly increasing");
  }
}

IndexSet IndexSet::full(int n) { return range(1, n); }

IndexSet IndexSet::range(int lo, int hi) {
  IndexSet s;
  for (int i = lo; i <= hi; ++i) s.indices.push_back(i);
  return s;
}

DenseMatrix::DenseMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Complex(0.0)) {
  if (n < 1) throw argument_error("matrix order must be positive");
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n);
  m.exact_.assign(static_cast<size_t>(n) * n, Rational(0));
  for (int i = 1; i <= n; ++i) {
    m.a_[m.idx(i, i)] = 1.0;
    m.exact_[m.idx(i, i)] = 1;
  }
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int n = static_cast<int>(rows.size());
  DenseMatrix m(n);
  int i = 1;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw argument_error("matrix must be square");
    int j = 1;
    for (Complex v : row) m.a_[m.idx(i, j++)] = v;
    ++i;
  }
  m.check_finite();
  return m;
}

DenseMatrix DenseMatrix::from_real_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  DenseMatrix m(n);
  m.exact_.assign(static_cast<size_t>(n) * n, Rational(0));
  int i = 1;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw argument_error("matrix must be square");
    int j = 1;
    for (double v : row) {
      m.a_[m.idx(i, j)] = v;
      // Doubles written in source are exact binary rationals.
      m.exact_[m.idx(i, j)] = Rational(v);
      ++j;
    }
    ++i;
  }
  m.check_finite();
  return m;
}

DenseMatrix DenseMatrix::from_exact(int n, std::vector<Rational> entries) {
  if (static_cast<int>(entries.size()) != n * n)
    throw argument_error("entry count does not match order");
  DenseMatrix m(n);
  for (size_t i = 0; i < entries.size(); ++i) m.a_[i] = to_double(entries[i]);
  m.exact_ = std::move(entries);
  m.check_finite();
  return m;
}

void DenseMatrix::set(int i, int j, Complex v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw argument_error("matrix entries must be finite");
  a_[idx(i, j)] = v;
  exact_.clear();
}

void DenseMatrix::set_exact(int i, int j, const Rational& v) {
  if (exact_.empty()) {
    for (const Complex& e : a_)
      if (e != Complex(0.0)) throw argument_error("cannot attach exact entries to a float matrix");
    exact_.assign(a_.size(), Rational(0));
  }
  exact_[idx(i, j)] = v;
  a_[idx(i, j)] = to_double(v);
}

bool DenseMatrix::is_real(double tol) const {
  for (const Complex& v : a_)
    if (std::abs(v.imag()) > tol) return false;
  return true;
}

void DenseMatrix::check_finite() const {
  for (const Complex& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw argument_error("matrix entries must be finite");
}

DenseMatrix DenseMatrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
  rows.validate(n_);
  cols.validate(n_);
  if (rows.size() != cols.size() || rows.empty())
    throw argument_error("submatrix extraction needs equal nonempty index sets");
  DenseMatrix s(rows.size());
  const bool exact = has_exact();
  if (exact) s.exact_.assign(s.a_.size(), Rational(0));
  for (int i = 1; i <= rows.size(); ++i)
    for (int j = 1; j <= cols.size(); ++j) {
      s.a_[s.idx(i, j)] = a_[idx(rows.indices[i - 1], cols.indices[j - 1])];
      if (exact) s.exact_[s.idx(i, j)] = exact_[idx(rows.indices[i - 1], cols.indices[j - 1])];
    }
  return s;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(n_);
  if (has_exact()) t.exact_.assign(a_.size(), Rational(0));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      t.a_[t.idx(j, i)] = a_[idx(i, j)];
      if (has_exact()) t.exact_[t.idx(j, i)] = exact_[idx(i, j)];
    }
  return t;
}

DenseMatrix DenseMatrix::conjugate_transpose() const {
  DenseMatrix t = transpose();
  for (Complex& v : t.a_) v = std::conj(v);
  return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (rhs.n_ != n_) throw argument_error("order mismatch in matrix product");
  DenseMatrix p(n_);
  const bool exact = has_exact() && rhs.has_exact();
  if (exact) p.exact_.assign(a_.size(), Rational(0));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      Complex acc = 0.0;
      for (int l = 1; l <= n_; ++l) acc += a_[idx(i, l)] * rhs.a_[rhs.idx(l, j)];
      p.a_[p.idx(i, j)] = acc;
      if (exact) {
        Rational r = 0;
        for (int l = 1; l <= n_; ++l) r += exact_[idx(i, l)] * rhs.exact_[rhs.idx(l, j)];
        p.exact_[p.idx(i, j)] = r;
        p.a_[p.idx(i, j)] = to_double(r);
      }
    }
  return p;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
  if (rhs.n_ != n_) throw argument_error("order mismatch in matrix sum");
  DenseMatrix s(n_);
  const bool exact = has_exact() && rhs.has_exact();
  if (exact) s.exact_.assign(a_.size(), Rational(0));
  for (size_t i = 0; i < a_.size(); ++i) {
    s.a_[i] = a_[i] + rhs.a_[i];
    if (exact) {
      s.exact_[i] = exact_[i] + rhs.exact_[i];
      s.a_[i] = to_double(s.exact_[i]);
    }
  }
  return s;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
  if (rhs.n_ != n_) throw argument_error("order mismatch in matrix difference");
  DenseMatrix s(n_);
  const bool exact = has_exact() && rhs.has_exact();
  if (exact) s.exact_.assign(a_.size(), Rational(0));
  for (size_t i = 0; i < a_.size(); ++i) {
    s.a_[i] = a_[i] - rhs.a_[i];
    if (exact) {
      s.exact_[i] = exact_[i] - rhs.exact_[i];
      s.a_[i] = to_double(s.exact_[i]);
    }
  }
  return s;
}

namespace {

// Determinant by partial-pivoted elimination on a scratch copy.
Complex det_float(std::vector<Complex> m, int n) {
  Complex det = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    double best = std::abs(m[c * n + c]);
    for (int r = c + 1; r < n; ++r) {
      const double v = std::abs(m[r * n + c]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != c) {
      for (int j = c; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
      det = -det;
    }
    det *= m[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      const Complex f = m[r * n + c] / m[c * n + c];
      if (f == Complex(0.0)) continue;
      for (int j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

Rational det_exact(std::vector<Rational> m, int n) {
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r * n + c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = c; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
      det = -det;
    }
    det *= m[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      if (m[r * n + c] == 0) continue;
      const Rational f = m[r * n + c] / m[c * n + c];
      for (int j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

}  // namespace

std::optional<Rational> minor_exact(const DenseMatrix& a, const IndexSet& rows,
                                    const IndexSet& cols, int order_limit) {
  if (!a.has_exact()) return std::nullopt;
  if (rows.size() != cols.size()) throw argument_error("minor needs equal row/column cardinality");
  rows.validate(a.order());
  cols.validate(a.order());
  if (rows.empty()) return Rational(1);
  const int m = rows.size();
  if (m > order_limit) return std::nullopt;
  std::vector<Rational> sub(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      sub[i * m + j] = a.exact_at(rows.indices[i], cols.indices[j]);
  return det_exact(std::move(sub), m);
}

Complex minor(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw argument_error("minor needs equal row/column cardinality");
  rows.validate(a.order());
  cols.validate(a.order());
  if (rows.empty()) return 1.0;
  if (auto exact = minor_exact(a, rows, cols)) return Complex(to_double(*exact));
  const int m = rows.size();
  std::vector<Complex> sub(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sub[i * m + j] = a.at(rows.indices[i], cols.indices[j]);
  return det_float(std::move(sub), m);
}

Complex determinant(const DenseMatrix& a) {
  return minor(a, IndexSet::full(a.order()), IndexSet::full(a.order()));
}

double p_norm(const DenseMatrix& a, PNorm p) {
  const int n = a.order();
  switch (p) {
    case PNorm::one: {
      double best = 0.0;
      for (int j = 1; j <= n; ++j) {
        double s = 0.0;
        for (int i = 1; i <= n; ++i) s += std::abs(a.at(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case PNorm::infinity: {
      double best = 0.0;
      for (int i = 1; i <= n; ++i) {
        double s = 0.0;
        for (int j = 1; j <= n; ++j) s += std::abs(a.at(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case PNorm::two: {
      // Largest singular value as sqrt(lambda_max(A* A)); one eigenvalue
      // engine serves every norm.
      Eigen::MatrixXcd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a.at(i + 1, j + 1);
      Eigen::MatrixXcd g = m.adjoint() * m;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
      const double top = es.eigenvalues().maxCoeff();
      return std::sqrt(std::max(0.0, top));
    }
  }
  return 0.0;
}

std::vector<Complex> solve(const DenseMatrix& a, const std::vector<Complex>& b, double rel_tol) {
  const int n = a.order();
  if (static_cast<int>(b.size()) != n) throw argument_error("right-hand side length mismatch");
  std::vector<Complex> m(static_cast<size_t>(n) * n);
  double scale = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      m[(i - 1) * n + (j - 1)] = a.at(i, j);
      scale = std::max(scale, std::abs(a.at(i, j)));
    }
  std::vector<Complex> x = b;
  const double tol = rel_tol * std::max(scale, 1.0);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    double best = std::abs(m[c * n + c]);
    for (int r = c + 1; r < n; ++r) {
      const double v = std::abs(m[r * n + c]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best <= tol)
      throw singular_error("matrix singular to working tolerance", c + 1);
    if (piv != c) {
      for (int j = c; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
      std::swap(x[piv], x[c]);
    }
    for (int r = c + 1; r < n; ++r) {
      const Complex f = m[r * n + c] / m[c * n + c];
      if (f == Complex(0.0)) continue;
      for (int j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
      x[r] -= f * x[c];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    Complex acc = x[r];
    for (int j = r + 1; j < n; ++j) acc -= m[r * n + j] * x[j];
    x[r] = acc / m[r * n + r];
  }
  return x;
}

DenseMatrix inverse(const DenseMatrix& a, double rel_tol) {
  const int n = a.order();
  DenseMatrix inv(n);
  for (int j = 1; j <= n; ++j) {
    std::vector<Complex> e(n, 0.0);
    e[j - 1] = 1.0;
    const std::vector<Complex> col = solve(a, e, rel_tol);
    for (int i = 1; i <= n; ++i) inv.set(i, j, col[i - 1]);
  }
  return inv;
}

DenseMatrix inverse_exact(const DenseMatrix& a) {
  if (!a.has_exact()) throw argument_error("exact inverse needs an exact matrix");
  const int n = a.order();
  std::vector<Rational> m(static_cast<size_t>(n) * 2 * n, Rational(0));
  const int w = 2 * n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i * w + j] = a.exact_at(i + 1, j + 1);
    m[i * w + n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r * w + c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw singular_error("matrix is exactly singular", c + 1);
    if (piv != c)
      for (int j = 0; j < w; ++j) std::swap(m[piv * w + j], m[c * w + j]);
    const Rational d = m[c * w + c];
    for (int j = 0; j < w; ++j) m[c * w + j] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r * w + c] == 0) continue;
      const Rational f = m[r * w + c];
      for (int j = 0; j < w; ++j) m[r * w + j] -= f * m[c * w + j];
    }
  }
  std::vector<Rational> entries(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries[i * n + j] = m[i * w + n + j];
  return DenseMatrix::from_exact(n, std::move(entries));
}

DenseMatrix block_diag(const DenseMatrix& a, const DenseMatrix& b) {
  const int n = a.order(), m = b.order();
  DenseMatrix d(n + m);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) d.set(i, j, a.at(i, j));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) d.set(n + i, n + j, b.at(i, j));
  return d;
}

std::vector<Complex> mat_vec(const DenseMatrix& a, const std::vector<Complex>& x) {
  const int n = a.order();
  if (static_cast<int>(x.size()) != n) throw argument_error("vector length mismatch");
  std::vector<Complex> y(n, 0.0);
  for (int i = 1; i <= n; ++i) {
    Complex acc = 0.0;
    for (int j = 1; j <= n; ++j) acc += a.at(i, j) * x[j - 1];
    y[i - 1] = acc;
  }
  return y;
}

std::vector<double> mat_vec_real(const DenseMatrix& a, const std::vector<double>& x) {
  std::vector<Complex> cx(x.begin(), x.end());
  const std::vector<Complex> cy = mat_vec(a, cx);
  std::vector<double> y(cy.size());
  for (size_t i = 0; i < cy.size(); ++i) y[i] = cy[i].real();
  return y;
}

}  // namespace structmat
