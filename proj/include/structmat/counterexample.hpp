#ifndef STRUCTMAT_COUNTEREXAMPLE_HPP_
#define STRUCTMAT_COUNTEREXAMPLE_HPP_

#include <vector>

#include "structmat/matrix.hpp"

namespace structmat {

// Parameters of the Toeplitz Hessenberg family A(n, k, t): the order-n
// leading section of the infinite matrix whose leading principal minors are
// d_m = t^((m-k-1)_+). t = 0 is admitted only through the dedicated limit
// constructor below.
struct CounterexampleParams {
  int n;
  int k;
  Rational t;
};

// Upper Toeplitz Hessenberg matrix: first row a_0, a_1, ..., unit first
// subdiagonal, zeros below. Entries kept exact (rational).
struct ToeplitzHessenberg {
  std::vector<Rational> first_row;

  int order() const { return static_cast<int>(first_row.size()); }
  DenseMatrix to_dense() const;
  std::vector<double> first_row_double() const;
};

// Solves the unit lower triangular system
//   d_m = sum_{j=1..m} (-1)^(j-1) a_{j-1} d_{m-j},   d_0 = 1,
// for the first row realizing the prescribed leading principal minors.
std::vector<Rational> entries_from_minors(const std::vector<Rational>& d);
std::vector<double> entries_from_minors(const std::vector<double>& d);

ToeplitzHessenberg build_counterexample(const CounterexampleParams& p);

// The t->0+ limit of the order-(2k+2) member: first column (1,1,0,...,0),
// first row (1, 0 x k, (-1)^k, (-1)^k, 0 x (k-1)).
ToeplitzHessenberg build_limit(int k);

// Symbol of the infinite family at a point:
//   S(s) = (1 + t s) / (s (1 + (1-t) sum_{j=1..k+1} (-s)^j)).
Complex symbol_eval(int k, double t, Complex s);

// D_j(lambda) = det(A(j,k,t) - lambda I), evaluated by the linear recurrence
//   D_j + (lambda - t) D_{j-1} + lambda (1-t) sum_{l=2..k+2} D_{j-l} = 0,
// j >= k+2, seeded with D_j = (1-lambda)^j for j <= k+1.
Complex d_poly_eval(int k, double t, int j, Complex lambda);

// psi_k(x) = (1+x)^(k+3) - (k+1)(1+x) + k and its reversal
// eta_k(x) = x^(k+3) psi_k(1/x) = 2 x^(k+2) + sum_{j=2..k+3} C(k+3,j) x^(k+3-j).
// Coefficients ascending, exact.
struct PsiEtaPolys {
  std::vector<Int> psi;
  std::vector<Int> eta;
};
PsiEtaPolys psi_eta_polys(int k);

// The 4x4 minor H_k[2:5] of the Hurwitz matrix of eta_k, computed two ways:
// exact determinant and the closed form
//   -(1/132300)(3k^3-49k^2-210k-318)(k+4)^2(k+5) C(k+3,2) C(k+3,4) C(k+3,6).
// Negative value certifies a root of eta_k in the right half plane.
struct InstabilityCertificate {
  Rational minor_value;
  Rational closed_form_value;
  bool negative;
};
InstabilityCertificate instability_certificate(int k);

// Convenience: first row of A(n,k,t) extended to arbitrary length via the
// minor recurrence (used by finite sections of any order).
std::vector<Rational> counterexample_first_row(int n, int k, const Rational& t);

}  // namespace structmat

#endif  // STRUCTMAT_COUNTEREXAMPLE_HPP_
