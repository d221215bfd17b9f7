#ifndef STRUCTMAT_MATRIX_HPP_
#define STRUCTMAT_MATRIX_HPP_

#include <complex>
#include <initializer_list>
#include <optional>
#include <vector>

#include "structmat/rational.hpp"

namespace structmat {

using Complex = std::complex<double>;

// Index sets are 1-based and strictly increasing, matching the classical
// submatrix notation A(alpha, beta). The empty set is allowed: A[<empty>] = 1.
struct IndexSet {
  std::vector<int> indices;

  IndexSet() = default;
  IndexSet(std::initializer_list<int> list) : indices(list) {}
  explicit IndexSet(std::vector<int> v) : indices(std::move(v)) {}

  int size() const { return static_cast<int>(indices.size()); }
  bool empty() const { return indices.empty(); }
  bool operator==(const IndexSet&) const = default;

  // Sorted, distinct, within 1..n.
  void validate(int n) const;

  static IndexSet full(int n);
  static IndexSet range(int lo, int hi);  // {lo, ..., hi}
};

// Square complex matrix, the carrier for every family in this project.
// Matrices built from rational data additionally keep their entries over Q;
// minors and inverses of such matrices can then be computed exactly.
class DenseMatrix {
 public:
  DenseMatrix() : n_(0) {}
  explicit DenseMatrix(int n);

  static DenseMatrix identity(int n);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static DenseMatrix from_real_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix from_exact(int n, std::vector<Rational> entries);

  int order() const { return n_; }

  // 1-based accessors.
  Complex at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, Complex v);
  void set_exact(int i, int j, const Rational& v);

  bool has_exact() const { return !exact_.empty(); }
  const Rational& exact_at(int i, int j) const { return exact_[idx(i, j)]; }
  void drop_exact() { exact_.clear(); }

  bool is_real(double tol = 0.0) const;

  DenseMatrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
  DenseMatrix transpose() const;
  DenseMatrix conjugate_transpose() const;
  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix operator+(const DenseMatrix& rhs) const;
  DenseMatrix operator-(const DenseMatrix& rhs) const;

  // NaN/Inf entries are rejected on construction and mutation.
  void check_finite() const;

 private:
  int idx(int i, int j) const { return (i - 1) * n_ + (j - 1); }

  int n_;
  std::vector<Complex> a_;
  std::vector<Rational> exact_;  // empty unless all entries are real rationals
};

enum class PNorm { one, two, infinity };

// det A(rows, cols); 1 for empty index sets. Uses exact rational elimination
// when the matrix carries exact entries and the minor order permits.
Complex minor(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols);

// Exact route; available only for exact matrices within the order limit.
std::optional<Rational> minor_exact(const DenseMatrix& a, const IndexSet& rows,
                                    const IndexSet& cols, int order_limit = 64);

Complex determinant(const DenseMatrix& a);

double p_norm(const DenseMatrix& a, PNorm p);

// Partial-pivoted solve; throws singular_error when a pivot falls below
// rel_tol * max|a(i,j)|.
std::vector<Complex> solve(const DenseMatrix& a, const std::vector<Complex>& b,
                           double rel_tol = 1e-12);
DenseMatrix inverse(const DenseMatrix& a, double rel_tol = 1e-12);

// Exact inverse over Q; throws singular_error on exact singularity.
DenseMatrix inverse_exact(const DenseMatrix& a);

DenseMatrix block_diag(const DenseMatrix& a, const DenseMatrix& b);

std::vector<Complex> mat_vec(const DenseMatrix& a, const std::vector<Complex>& x);
std::vector<double> mat_vec_real(const DenseMatrix& a, const std::vector<double>& x);

}  // namespace structmat

#endif  // STRUCTMAT_MATRIX_HPP_
