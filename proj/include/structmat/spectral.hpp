#ifndef STRUCTMAT_SPECTRAL_HPP_
#define STRUCTMAT_SPECTRAL_HPP_

#include <optional>

#include "structmat/eigensolve.hpp"
#include "structmat/predicates.hpp"
#include "structmat/report.hpp"

namespace structmat {

// An eigenvalue counts as real when |Im| <= tol_imag_rel * inf-norm(A).
inline constexpr double kRealAxisTolRel = 1e-8;

// l(A) = min of the real spectrum, nullopt when sigma(A) avoids the axis.
std::optional<double> min_real_eigenvalue(const DenseMatrix& a);

SpectrumReport spectrum_report(const DenseMatrix& a);

enum class OmegaTauMode {
  // Checks l(A(alpha)) <= l(A(beta)) < inf for every nonempty beta inside
  // alpha; cost 2^n eigensolves, so the order is capped.
  exhaustive,
  // Checks only the chain of leading principal sections. For families whose
  // principal minors factor over separated index runs this already decides
  // eigenvalue monotonicity.
  leading_principal,
};

struct OmegaTauReport {
  ClassReport omega;
  ClassReport tau;  // omega plus l(A) >= 0
};

OmegaTauReport is_omega_tau(const DenseMatrix& a,
                            OmegaTauMode mode = OmegaTauMode::exhaustive,
                            int exhaustive_limit = 12);

// Some families are P-matrices by theorem at orders far beyond what the
// exhaustive scan can verify; callers certify that themselves.
enum class PMatrixCertificate { verify, assume };

// Kellogg wedge: every eigenvalue of a P-matrix satisfies
// |arg(lambda)| < pi - pi/n. Defined for n >= 2.
ClassReport kellogg_wedge_check(const DenseMatrix& a,
                                PMatrixCertificate cert = PMatrixCertificate::verify);

}  // namespace structmat

#endif  // STRUCTMAT_SPECTRAL_HPP_
