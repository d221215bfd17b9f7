#ifndef STRUCTMAT_TOEPLITZ_HPP_
#define STRUCTMAT_TOEPLITZ_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "structmat/counterexample.hpp"
#include "structmat/matrix.hpp"

namespace structmat {

// Banded Toeplitz operator described by its symbol, the Laurent polynomial
// S(s) = sum_j coeff(j) s^j over a finite power window. The order-n section
// has entries A(i,j) = coeff(j - i).
class ToeplitzBand {
 public:
  ToeplitzBand(int min_power, std::vector<Complex> coeffs);
  static ToeplitzBand from_powers(const std::vector<std::pair<int, Complex>>& terms);

  Complex coeff(int power) const;
  int min_power() const { return min_power_; }
  int max_power() const { return min_power_ + static_cast<int>(coeffs_.size()) - 1; }

  Complex symbol(Complex s) const;
  DenseMatrix section(int n) const;

 private:
  int min_power_;
  std::vector<Complex> coeffs_;
};

struct CurveSamples {
  std::vector<double> theta;    // closed: last parameter repeats the first
  std::vector<Complex> points;
};

CurveSamples symbol_curve(const ToeplitzBand& band, int grid_size);
// Curve of the counterexample family's rational symbol.
CurveSamples symbol_curve(int k, double t, int grid_size);

// Membership of lambda in the spectrum of the infinite operator: on the
// sampled curve (within on_curve_tol), or of nonzero winding number about it.
// The argument sum is refined adaptively until each step turns by < pi/4.
bool winding_spectrum_member(const std::function<Complex(double)>& symbol_at_theta,
                             Complex lambda, int initial_grid = 512,
                             double on_curve_tol = 1e-9);
bool winding_spectrum_member(const ToeplitzBand& band, Complex lambda);
bool winding_spectrum_member(int k, double t, Complex lambda);

// Rational symbol F / (G H) in the annulus between the roots of G (inner)
// and H (outer); p = deg G. The Day limit-set test depends only on these
// three polynomials (ascending coefficients).
struct RationalSymbol {
  std::vector<Complex> f;
  std::vector<Complex> g;
  std::vector<Complex> h;
  int p() const;
};

RationalSymbol counterexample_symbol(int k, double t);

// lambda belongs to the limit set of section eigenvalues iff the p-th and
// (p+1)-st smallest-modulus roots of R = F - lambda G H tie. gap is the
// modulus separation actually observed.
struct DayResult {
  bool is_member;
  double gap;
};
DayResult day_limit_member(const RationalSymbol& sym, Complex lambda, double tol = 1e-8);

// Equal-modulus locus for the symbol s^-p + s^q (p, q coprime): a star of
// (p+q) rays of length (p+q) p^(-p/(p+q)) q^(-q/(p+q)).
struct BiernackiStar {
  double radius_max;
  int ray_count;
};
BiernackiStar biernacki_star(int p, int q);

struct SectionSpectra {
  std::vector<int> orders;
  std::vector<std::vector<Complex>> spectra;
};

SectionSpectra finite_section_sweep(const ToeplitzBand& band, const std::vector<int>& orders);
SectionSpectra finite_section_sweep(int k, const Rational& t, const std::vector<int>& orders);

// Gohberg-Semencul formula: reconstructs T^-1 from the solutions of
// T x = e_1 and T y = e_n. y is passed as (y_{-n+1}, ..., y_0).
DenseMatrix gohberg_semencul_inverse(const DenseMatrix& toeplitz,
                                     const std::vector<Complex>& x,
                                     const std::vector<Complex>& y);

// Closed-form x and y for the counterexample family (n >= k+2), verified
// exactly against A x = e_1, A y = e_n before returning.
struct XYPair {
  std::vector<Rational> x;  // x_0..x_{n-1}
  std::vector<Rational> y;  // y_{-n+1}..y_0
};
XYPair counterexample_xy(const CounterexampleParams& p);

}  // namespace structmat

#endif  // STRUCTMAT_TOEPLITZ_HPP_
