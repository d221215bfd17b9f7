#ifndef STRUCTMAT_EIGENSOLVE_HPP_
#define STRUCTMAT_EIGENSOLVE_HPP_

#include <vector>

#include "structmat/matrix.hpp"

namespace structmat {

// Full spectrum of a dense matrix: Parlett-Reinsch balancing followed by
// Schur decomposition (Hessenberg reduction + shifted QR). Real input yields
// exactly conjugate-paired output. Sorted by (re, im) for reproducibility.
std::vector<Complex> eigenvalues(const DenseMatrix& a);

struct Eigenpair {
  Complex value;
  std::vector<Complex> vector;  // unit 2-norm
};

std::vector<Eigenpair> eigenpairs(const DenseMatrix& a);

// Hermitian fast path (input validated to tolerance); ascending.
std::vector<double> eigenvalues_hermitian(const DenseMatrix& a, double herm_tol = 1e-12);

// Roots of c[0] + c[1] x + ... + c[d] x^d via the balanced companion matrix.
// Leading zero coefficients are stripped; degree-0 input is an error.
std::vector<Complex> poly_roots(const std::vector<Complex>& ascending);
std::vector<Complex> poly_roots(const std::vector<double>& ascending);

// Monic characteristic polynomial, ascending coefficients, built from the
// spectrum in product form. Real input produces real coefficients.
std::vector<Complex> char_poly(const DenseMatrix& a);

double spectral_radius(const DenseMatrix& a);

}  // namespace structmat

#endif  // STRUCTMAT_EIGENSOLVE_HPP_
