#ifndef STRUCTMAT_INVERTIBILITY_HPP_
#define STRUCTMAT_INVERTIBILITY_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "structmat/predicates.hpp"

namespace structmat {

// Hilbert matrix H(i,j) = 1/(i+j-1) and its companion C(i,j) = 1/max(i,j),
// both exact.
DenseMatrix hilbert_matrix(int n);
DenseMatrix hilbert_companion_matrix(int n);

struct FamilyPoint {
  int n;
  double norm_inf;      // of A_n
  double inv_norm_inf;  // of A_n^-1
  double min_sigma;     // extreme eigenvalues of the (Hermitian) A_n
  double max_sigma;
};

struct FamilyCurve {
  std::string family;
  std::vector<FamilyPoint> points;
};

// CSV contract: "n,norm_inf,inv_norm_inf,min_sigma,max_sigma".
void write_csv(std::ostream& os, const FamilyCurve& curve);

enum class ShiftBase { hilbert, companion };

// The family A_n = (alpha I + base_n)^-1: bounded norms and spectra bounded
// away from zero, while inv_norm_inf = |alpha I + base_n|_inf grows like
// log n. The signature of unbounded inverse collections.
FamilyCurve shifted_inverse_family(ShiftBase base, double alpha, const std::vector<int>& orders);

// For strictly ultrametric input, the inverse must be a symmetric strictly
// row diagonally dominant M-matrix.
ClassReport mms_inverse_check(const DenseMatrix& a);

// Hermitian Toeplitz family A_k = T_k T_k^* with S(T_k) = 1 + s + c s^k,
// |c| > 2, k >= 3. Records the spectral floor from the symbol, per-order
// inf-norms, and the exact leading (k-1) x (k-1) block of the inverse of the
// infinite operator, whose entries are (-1)^(i-j) min(i,j).
struct SymbolProductReport {
  double grid_min_symbol_sq;
  std::vector<FamilyPoint> sections;  // min/max sigma from the section solve
  DenseMatrix inverse_block;
  double inverse_block_norm1;
};
SymbolProductReport symbol_product_experiment(Complex c, int k, const std::vector<int>& orders,
                                              int grid_size = 1024);

// Entrywise geometric-decay certificate |inv(i,j)| <= K r^|i-j| for the
// inverse of a banded matrix. certified is false when no r < 1 works.
struct DecayFit {
  bool certified;
  double k;
  double r;
  double max_residual;  // max over entries of |inv(i,j)| - K r^|i-j|
};
DecayFit demko_decay_check(const DenseMatrix& a, int band_width);

enum class StructureCertificate { verify, assume };

// |A^-1|_inf <= |A|_inf / lambda_min^2 for oscillatory Hermitian A. The
// oscillatory precondition is either verified through the predicate (cheap
// only at small orders or for tridiagonal input) or certified by the caller.
struct OscillatoryBound {
  double bound;
  double actual;
  bool holds;
};
OscillatoryBound oscillatory_inverse_bound(const DenseMatrix& a,
                                           StructureCertificate cert = StructureCertificate::verify);

// de Boor's lemma: for nonsingular totally nonnegative A with A x = y and
// strictly alternating x and y (sign (-1)^(i-1)), |A^-1|_inf <= |x|_inf / min|y_i|.
double deboor_lemma_bound(const DenseMatrix& a, const std::vector<double>& x,
                          const std::vector<double>& y,
                          StructureCertificate cert = StructureCertificate::verify);

// Smallest eigenvalue and eigenvector of a symmetric matrix by inverse
// iteration seeded with the alternating vector.
struct MinEigenpair {
  double value;
  std::vector<double> vector;  // scaled to unit inf-norm, first entry positive
};
MinEigenpair min_eigenpair(const DenseMatrix& a);

}  // namespace structmat

#endif  // STRUCTMAT_INVERTIBILITY_HPP_
