#include "structmat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "structmat/errors.hpp"

namespace structmat {

namespace {

std::optional<double> min_real_of(const std::vector<Complex>& spectrum, double tol_imag) {
  std::optional<double> best;
  for (Complex l : spectrum)
    if (std::abs(l.imag()) <= tol_imag)
      if (!best || l.real() < *best) best = l.real();
  return best;
}

}  // namespace

std::optional<double> min_real_eigenvalue(const DenseMatrix& a) {
  const double tol_imag = kRealAxisTolRel * p_norm(a, PNorm::infinity);
  return min_real_of(eigenvalues(a), tol_imag);
}

SpectrumReport spectrum_report(const DenseMatrix& a) {
  SpectrumReport r;
  r.eigenvalues = eigenvalues(a);
  const double tol_imag = kRealAxisTolRel * p_norm(a, PNorm::infinity);
  r.min_real_eigenvalue = min_real_of(r.eigenvalues, tol_imag);
  double min_re = std::numeric_limits<double>::infinity();
  double max_arg = 0.0;
  for (Complex l : r.eigenvalues) {
    min_re = std::min(min_re, l.real());
    max_arg = std::max(max_arg, std::abs(std::arg(l)));
  }
  r.min_real_part = min_re;
  r.positive_stable = min_re > 0.0;
  const double pi = std::acos(-1.0);
  r.kellogg_margin = pi - pi / a.order() - max_arg;
  return r;
}

namespace {

// Lexicographic enumeration over nonempty subsets of a fixed sorted set.
bool for_each_subset_of(const std::vector<int>& base,
                        const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<bool(size_t)> rec = [&](size_t lo) -> bool {
    for (size_t m = lo; m < base.size(); ++m) {
      cur.push_back(base[m]);
      if (!visit(cur)) return false;
      if (!rec(m + 1)) return false;
      cur.pop_back();
    }
    return true;
  };
  return rec(0);
}

uint32_t mask_of(const std::vector<int>& s) {
  uint32_t m = 0;
  for (int v : s) m |= 1u << (v - 1);
  return m;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

OmegaTauReport is_omega_tau(const DenseMatrix& a, OmegaTauMode mode, int exhaustive_limit) {
  const int n = a.order();
  OmegaTauReport rep;
  rep.omega.class_name = "omega";
  rep.tau.class_name = "tau";
  rep.omega.holds = true;
  // Ties between l-values (triangular sections, repeated blocks) come back
  // from the eigensolver with rounding-level jitter; monotonicity is judged
  // with matching slack.
  const double slack = 1e-9 * std::max(1.0, p_norm(a, PNorm::infinity));
  rep.omega.tolerance_used = slack;
  rep.tau.tolerance_used = slack;

  double l_full = kInf;

  if (mode == OmegaTauMode::leading_principal) {
    std::vector<double> l(n + 1, kInf);
    for (int m = 1; m <= n; ++m) {
      const IndexSet s = IndexSet::range(1, m);
      const DenseMatrix sub = m == n ? a : a.submatrix(s, s);
      const auto lm = min_real_eigenvalue(sub);
      if (!lm) {
        rep.omega.holds = false;
        rep.omega.witness = Witness{s, s, {}, "leading section has no real eigenvalue"};
        break;
      }
      l[m] = *lm;
      if (m > 1 && l[m] > l[m - 1] + slack) {
        rep.omega.holds = false;
        rep.omega.witness =
            Witness{s, IndexSet::range(1, m - 1), {l[m], l[m - 1]},
                    "l of larger leading section exceeds that of the smaller"};
        break;
      }
    }
    l_full = l[n];
  } else {
    if (n > exhaustive_limit) {
      std::ostringstream os;
      os << "exhaustive omega/tau scan needs 2^" << n << " eigensolves; limit is "
         << exhaustive_limit;
      throw capability_error(os.str());
    }
    // l(A(alpha)) for every nonempty subset, cached by bitmask.
    std::vector<double> l(size_t{1} << n, kInf);
    std::vector<bool> finite(size_t{1} << n, false);
    const std::vector<int> everything = IndexSet::full(n).indices;
    for_each_subset_of(everything, [&](const std::vector<int>& s) {
      const IndexSet idx(s);
      const DenseMatrix sub =
          static_cast<int>(s.size()) == n ? a : a.submatrix(idx, idx);
      const auto lm = min_real_eigenvalue(sub);
      const uint32_t m = mask_of(s);
      if (lm) {
        l[m] = *lm;
        finite[m] = true;
      }
      return true;
    });
    l_full = l[(size_t{1} << n) - 1];
    for_each_subset_of(everything, [&](const std::vector<int>& alpha) {
      const uint32_t ma = mask_of(alpha);
      return for_each_subset_of(alpha, [&](const std::vector<int>& beta) {
        const uint32_t mb = mask_of(beta);
        if (!finite[mb] || l[ma] > l[mb] + slack) {
          rep.omega.holds = false;
          rep.omega.witness = Witness{IndexSet(alpha), IndexSet(beta),
                                      {l[ma], l[mb]},
                                      finite[mb] ? "l(alpha) > l(beta)"
                                                 : "nested section has no real eigenvalue"};
          return false;
        }
        return true;
      });
    });
  }

  rep.tau.holds = rep.omega.holds && l_full >= -slack;
  if (!rep.tau.holds) {
    if (rep.omega.witness)
      rep.tau.witness = rep.omega.witness;
    else
      rep.tau.witness =
          Witness{IndexSet::full(n), IndexSet::full(n), {l_full}, "l(A) < 0"};
  }
  return rep;
}

ClassReport kellogg_wedge_check(const DenseMatrix& a, PMatrixCertificate cert) {
  const int n = a.order();
  if (n < 2) throw argument_error("Kellogg wedge is defined for order >= 2");
  if (cert == PMatrixCertificate::verify) {
    const ClassReport p = is_p_matrix(a);
    if (!p.holds) throw argument_error("Kellogg wedge check needs a P-matrix");
  }
  const SpectrumReport sr = spectrum_report(a);
  ClassReport out;
  out.class_name = "kellogg-wedge";
  out.holds = sr.kellogg_margin > 0.0;
  if (!out.holds) {
    double worst_arg = 0.0;
    Complex worst = 0.0;
    for (Complex l : sr.eigenvalues)
      if (std::abs(std::arg(l)) > worst_arg) {
        worst_arg = std::abs(std::arg(l));
        worst = l;
      }
    out.witness = Witness{{}, {}, {worst, sr.kellogg_margin},
                          "eigenvalue within pi/n of the negative real axis"};
  }
  return out;
}

}  // namespace structmat
