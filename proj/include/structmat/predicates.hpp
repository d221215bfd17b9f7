#ifndef STRUCTMAT_PREDICATES_HPP_
#define STRUCTMAT_PREDICATES_HPP_

#include <vector>

#include "structmat/report.hpp"

namespace structmat {

struct PredicateOptions {
  // Exhaustive minor scans cost up to 2^n (or 4^n) determinants; orders above
  // this are rejected with a capability error.
  int exhaustive_limit = 16;
  // Floating-point fallback: comparisons are made against
  // tolerance * max(1, largest |minor| encountered). Irrelevant for exact
  // (rational) matrices, whose verdicts are decided over Q.
  double tolerance = 1e-10;
};

// All principal minors positive; witness is the first failing subset in
// lexicographic order.
ClassReport is_p_matrix(const DenseMatrix& a, const PredicateOptions& opts = {});

// Generalized Hadamard-Fisher inequality A[a]A[b] >= A[a|b]A[a&b] over all
// subset pairs. By the Gantmacher-Krein-Carlson theorem this characterizes
// GKK within the P-matrices, so is_gkk is the same scan.
ClassReport hadamard_fisher_check(const DenseMatrix& a, const PredicateOptions& opts = {});
ClassReport is_gkk(const DenseMatrix& a, const PredicateOptions& opts = {});

// Products A[a,b] A[b,a]: the weak variant restricts to almost-principal
// pairs (#a = #b = #(a|b) - 1), the strong one takes all equal-cardinality
// pairs. The dispersal form interpolates: pairs with #a - #(a&b) <= d.
ClassReport is_weakly_sign_symmetric(const DenseMatrix& a, const PredicateOptions& opts = {});
ClassReport is_sign_symmetric(const DenseMatrix& a, const PredicateOptions& opts = {});
ClassReport sign_symmetry_up_to_dispersal(const DenseMatrix& a, int d,
                                          const PredicateOptions& opts = {});

ClassReport is_totally_nonnegative(const DenseMatrix& a, const PredicateOptions& opts = {});
ClassReport is_totally_positive(const DenseMatrix& a, const PredicateOptions& opts = {});

// Totally nonnegative with some power totally positive. A nonsingular TN
// matrix is oscillatory iff A^(n-1) is TP, so only that power is scanned;
// symmetric tridiagonal input short-circuits through the classical Jacobi
// matrix criterion (nonsingular, TN via contiguous minors, positive
// off-diagonals) and so supports any order.
ClassReport is_oscillatory(const DenseMatrix& a, const PredicateOptions& opts = {});

// A = rI - P with P >= 0 entrywise and spectral_radius(P) < r.
ClassReport is_m_matrix(const DenseMatrix& a, double tol = 1e-10);

ClassReport is_ultrametric(const DenseMatrix& a);
ClassReport is_strictly_ultrametric(const DenseMatrix& a);

enum class DominanceMode { row, column };
ClassReport is_diagonally_dominant(const DenseMatrix& a, DominanceMode mode, bool strict);

// Every entry with |a(i,j)| > tol carries sign (-1)^(i-j).
ClassReport is_checkerboard(const DenseMatrix& a, double tol = 1e-12);

// Hurwitz matrix of f(x) = a_0 x^d + a_1 x^(d-1) + ... + a_d (descending
// input): the d x d array with entry (i,j) = a_{2j-i}, a_m = 0 outside 0..d.
DenseMatrix hurwitz_matrix(const std::vector<Rational>& descending);
DenseMatrix hurwitz_matrix(const std::vector<double>& descending);

// Newton-type report: b_j = sum of all principal minors of order j (the j-th
// elementary symmetric function of the eigenvalues), c_j = b_j / C(n,j),
// gap_j = c_j^2 - c_{j-1} c_{j+1}. Reported, never asserted.
struct NewtonGap {
  int j;
  double c_j;
  double gap;  // defined for 1 <= j <= n-1; c_j rows carry gap = NaN at ends
};
struct NewtonReport {
  std::vector<double> c;         // c_0..c_n
  std::vector<NewtonGap> gaps;   // j = 1..n-1
};
NewtonReport newton_inequality_report(const DenseMatrix& a);

}  // namespace structmat

#endif  // STRUCTMAT_PREDICATES_HPP_
