#ifndef STRUCTMAT_SPLINE_HPP_
#define STRUCTMAT_SPLINE_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "structmat/matrix.hpp"

namespace structmat {

// Knot sequence t_1 <= ... <= t_{n+k} for splines of order k (degree k-1);
// nondegenerate means t_i < t_{i+k} so every B-spline has interior support.
struct KnotSequence {
  std::vector<double> knots;
  int order = 0;  // k

  int dimension() const { return static_cast<int>(knots.size()) - order; }
  void validate() const;

  static KnotSequence uniform(int dimension, int order, double a = 0.0, double b = 1.0);
};

// Value of the i-th B-spline of order k by the two-term recurrence from
// order-1 indicators; the right endpoint closes the final interval.
double bspline_eval(const KnotSequence& t, int i, double x);

// Gram matrix G(i,j) = k/(t_{i+k} - t_i) * integral of B_i B_j, assembled by
// Gauss-Legendre with k nodes per knot interval (exact for the degree-2k-2
// products). Banded with band width k.
struct GramMatrix {
  DenseMatrix matrix;
  KnotSequence knots;
};
GramMatrix gram_matrix(const KnotSequence& t);

// Diagonal symmetrization G = D H D^-1 with D(i,i) = sqrt(k/(t_{i+k}-t_i)).
struct SymmetrizedGram {
  std::vector<double> d;  // diagonal of D
  DenseMatrix h;
};
SymmetrizedGram symmetrize(const GramMatrix& g);

// Seeded sweep over wild knot meshes (spacings exp(u * stress), u uniform in
// [-1,1], stress up to 10): records the norm of the Gram inverse and the
// spectral floor of the symmetrized matrix. Reports; asserts nothing.
struct ConjectureSample {
  std::uint64_t seed;
  int n;
  int k;
  double inv_norm_inf;     // |G^-1|_inf
  double lambda_min;       // of H (= of G)
  double cond_d;           // max d_i / min d_i
  double symmetrized_bound;  // |H|_inf / lambda_min^2, the bound Theorem-2-style
};
struct ConjectureReport {
  std::vector<ConjectureSample> samples;
  double max_inv_norm_inf;
  double min_lambda_min;
};
ConjectureReport deboor_conjecture_experiment(int k, int knot_samples, int n_max,
                                              std::uint64_t seed);

// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int points);

}  // namespace structmat

#endif  // STRUCTMAT_SPLINE_HPP_
