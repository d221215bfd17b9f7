#include "structmat/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "structmat/eigensolve.hpp"
#include "structmat/errors.hpp"

namespace structmat {

namespace {

void require_scannable(const DenseMatrix& a, const PredicateOptions& opts, const char* what) {
  if (a.order() > opts.exhaustive_limit) {
    std::ostringstream os;
    os << what << " is exhaustive (cost ~2^" << a.order() << " minors); order " << a.order()
       << " exceeds the limit " << opts.exhaustive_limit;
    throw capability_error(os.str());
  }
}

// Enumerates nonempty subsets of {1..n} as sorted index vectors in
// lexicographic sequence order: {1}, {1,2}, ..., {1,..,n}, {1,2,4}, ... .
// Witness reports stay deterministic because scans follow this order.
bool for_each_subset_lex(int n, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<bool(int)> rec = [&](int lo) -> bool {
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      if (!visit(cur)) return false;
      if (!rec(v + 1)) return false;
      cur.pop_back();
    }
    return true;
  };
  return rec(1);
}

uint32_t mask_of(const std::vector<int>& s) {
  uint32_t m = 0;
  for (int v : s) m |= 1u << (v - 1);
  return m;
}

IndexSet set_of_mask(uint32_t m, int n) {
  IndexSet s;
  for (int v = 1; v <= n; ++v)
    if (m & (1u << (v - 1))) s.indices.push_back(v);
  return s;
}

// Per-minor magnitude gauge: product of row maxima of the submatrix. The
// rounding error of a small determinant is proportional to this, not to the
// largest minor in the scan, so each minor is classified on its own scale.
double minor_gauge(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  double g = 1.0;
  for (int i : rows.indices) {
    double row_max = 0.0;
    for (int j : cols.indices) row_max = std::max(row_max, std::abs(a.at(i, j)));
    g *= row_max;
  }
  return g;
}

// Cache of all principal minors, indexed by subset bitmask. Exact when the
// matrix carries rational entries.
struct PrincipalMinors {
  bool exact = false;
  std::vector<Rational> exact_vals;
  std::vector<double> vals;
  std::vector<double> gauges;

  static PrincipalMinors compute(const DenseMatrix& a) {
    const int n = a.order();
    PrincipalMinors pm;
    pm.exact = a.has_exact();
    const size_t count = size_t{1} << n;
    if (pm.exact) pm.exact_vals.resize(count);
    pm.vals.resize(count);
    pm.gauges.assign(count, 1.0);
    pm.vals[0] = 1.0;
    if (pm.exact) pm.exact_vals[0] = 1;
    for (uint32_t m = 1; m < count; ++m) {
      const IndexSet s = set_of_mask(m, n);
      if (pm.exact) {
        pm.exact_vals[m] = *minor_exact(a, s, s, n);
        pm.vals[m] = to_double(pm.exact_vals[m]);
      } else {
        pm.vals[m] = minor(a, s, s).real();
        pm.gauges[m] = minor_gauge(a, s, s);
      }
    }
    return pm;
  }

  // -1 / 0 / +1 classification of minor(mask).
  int sign(uint32_t mask, double tol) const {
    if (exact) {
      const Rational& r = exact_vals[mask];
      return r > 0 ? 1 : (r < 0 ? -1 : 0);
    }
    const double v = vals[mask];
    if (v > tol * gauges[mask]) return 1;
    if (v < -tol * gauges[mask]) return -1;
    return 0;
  }

  // Pair comparison used by the Hadamard-Fisher scan; exact when possible.
  bool product_ge(uint32_t a1, uint32_t a2, uint32_t b1, uint32_t b2, double tol) const {
    if (exact) return exact_vals[a1] * exact_vals[a2] >= exact_vals[b1] * exact_vals[b2];
    const double lhs = vals[a1] * vals[a2], rhs = vals[b1] * vals[b2];
    const double slack = gauges[a1] * gauges[a2] + gauges[b1] * gauges[b2];
    return lhs >= rhs - tol * slack;
  }
};

ClassReport minor_sign_violation(const std::string& cls, const IndexSet& rows,
                                 const IndexSet& cols, Complex value, const std::string& note,
                                 double tol) {
  ClassReport r;
  r.class_name = cls;
  r.holds = false;
  r.witness = Witness{rows, cols, {value}, note};
  r.tolerance_used = tol;
  return r;
}

ClassReport pass(const std::string& cls, double tol) {
  ClassReport r;
  r.class_name = cls;
  r.holds = true;
  r.tolerance_used = tol;
  return r;
}

}  // namespace

ClassReport is_p_matrix(const DenseMatrix& a, const PredicateOptions& opts) {
  require_scannable(a, opts, "P-matrix test");
  const PrincipalMinors pm = PrincipalMinors::compute(a);
  const double tol = pm.exact ? 0.0 : opts.tolerance;
  ClassReport out = pass("P", tol);
  for_each_subset_lex(a.order(), [&](const std::vector<int>& s) {
    const uint32_t m = mask_of(s);
    if (pm.sign(m, opts.tolerance) <= 0) {
      out = minor_sign_violation("P", IndexSet(s), IndexSet(s), pm.vals[m],
                                 "principal minor not positive", tol);
      return false;
    }
    return true;
  });
  return out;
}

ClassReport hadamard_fisher_check(const DenseMatrix& a, const PredicateOptions& opts) {
  require_scannable(a, opts, "Hadamard-Fisher test");
  ClassReport p = is_p_matrix(a, opts);
  if (!p.holds) {
    p.class_name = "GKK";
    if (p.witness) p.witness->note = "not a P-matrix: " + p.witness->note;
    return p;
  }
  const PrincipalMinors pm = PrincipalMinors::compute(a);
  const double tol = pm.exact ? 0.0 : opts.tolerance;
  const int n = a.order();
  ClassReport out = pass("GKK", tol);
  for_each_subset_lex(n, [&](const std::vector<int>& alpha) {
    const uint32_t ma = mask_of(alpha);
    return for_each_subset_lex(n, [&](const std::vector<int>& beta) {
      const uint32_t mb = mask_of(beta);
      if (!pm.product_ge(ma, mb, ma | mb, ma & mb, opts.tolerance)) {
        ClassReport r;
        r.class_name = "GKK";
        r.holds = false;
        r.tolerance_used = tol;
        r.witness = Witness{IndexSet(alpha), IndexSet(beta),
                            {pm.vals[ma], pm.vals[mb], pm.vals[ma | mb], pm.vals[ma & mb]},
                            "A[a]A[b] < A[a|b]A[a&b]"};
        out = r;
        return false;
      }
      return true;
    });
  });
  return out;
}

ClassReport is_gkk(const DenseMatrix& a, const PredicateOptions& opts) {
  return hadamard_fisher_check(a, opts);
}

namespace {

// Shared scan for the sign-symmetry family. Visits equal-cardinality pairs
// (alpha, beta) with dispersal #alpha - #(alpha&beta) <= d and requires
// A[alpha,beta] A[beta,alpha] >= 0.
ClassReport sign_symmetry_scan(const DenseMatrix& a, int d, const std::string& cls,
                               bool almost_principal_only, const PredicateOptions& opts) {
  require_scannable(a, opts, "sign-symmetry test");
  const int n = a.order();
  const bool exact = a.has_exact();
  const double tol = exact ? 0.0 : opts.tolerance;
  ClassReport out = pass(cls, tol);
  for_each_subset_lex(n, [&](const std::vector<int>& alpha) {
    return for_each_subset_lex(n, [&](const std::vector<int>& beta) {
      if (alpha.size() != beta.size()) return true;
      const uint32_t ma = mask_of(alpha), mb = mask_of(beta);
      const int dispersal = static_cast<int>(alpha.size()) - std::popcount(ma & mb);
      if (almost_principal_only) {
        const int union_size = std::popcount(ma | mb);
        if (static_cast<int>(alpha.size()) != union_size - 1) return true;
      } else if (dispersal > d) {
        return true;
      }
      const IndexSet sa(alpha), sb(beta);
      bool bad;
      Complex v1, v2;
      if (exact) {
        const Rational r1 = *minor_exact(a, sa, sb, n);
        const Rational r2 = *minor_exact(a, sb, sa, n);
        bad = r1 * r2 < 0;
        v1 = to_double(r1);
        v2 = to_double(r2);
      } else {
        v1 = minor(a, sa, sb);
        v2 = minor(a, sb, sa);
        const double prod = (v1 * v2).real();
        const double gauge = minor_gauge(a, sa, sb) * minor_gauge(a, sb, sa);
        bad = prod < -opts.tolerance * gauge;
      }
      if (bad) {
        out = ClassReport{cls, false,
                          Witness{sa, sb, {v1, v2}, "A[a,b]A[b,a] < 0"}, tol};
        return false;
      }
      return true;
    });
  });
  return out;
}

}  // namespace

ClassReport is_weakly_sign_symmetric(const DenseMatrix& a, const PredicateOptions& opts) {
  return sign_symmetry_scan(a, 1, "weakly-sign-symmetric", true, opts);
}

ClassReport is_sign_symmetric(const DenseMatrix& a, const PredicateOptions& opts) {
  return sign_symmetry_scan(a, a.order(), "sign-symmetric", false, opts);
}

ClassReport sign_symmetry_up_to_dispersal(const DenseMatrix& a, int d,
                                          const PredicateOptions& opts) {
  if (d < 0) throw argument_error("dispersal bound must be nonnegative");
  std::ostringstream cls;
  cls << "sign-symmetric-dispersal-" << d;
  return sign_symmetry_scan(a, d, cls.str(), false, opts);
}

namespace {

// Enumerates equal-cardinality pairs (rows, cols) in lexicographic order and
// classifies each minor. stop_on(sign) decides whether a sign violates.
ClassReport all_minors_scan(const DenseMatrix& a, const std::string& cls, bool require_positive,
                            const PredicateOptions& opts) {
  require_scannable(a, opts, "total-sign test");
  const int n = a.order();
  const bool exact = a.has_exact();
  const double tol = exact ? 0.0 : opts.tolerance;
  ClassReport out = pass(cls, tol);
  for_each_subset_lex(n, [&](const std::vector<int>& rows) {
    return for_each_subset_lex(n, [&](const std::vector<int>& cols) {
      if (rows.size() != cols.size()) return true;
      const IndexSet sr(rows), sc(cols);
      int sign;
      Complex shown;
      if (exact) {
        const Rational r = *minor_exact(a, sr, sc, n);
        sign = r > 0 ? 1 : (r < 0 ? -1 : 0);
        shown = to_double(r);
      } else {
        const double v = minor(a, sr, sc).real();
        const double gauge = minor_gauge(a, sr, sc);
        sign = v > opts.tolerance * gauge ? 1 : (v < -opts.tolerance * gauge ? -1 : 0);
        shown = v;
      }
      const bool bad = require_positive ? sign <= 0 : sign < 0;
      if (bad) {
        out = ClassReport{cls, false,
                          Witness{sr, sc, {shown},
                                  require_positive ? "minor not positive" : "negative minor"},
                          tol};
        return false;
      }
      return true;
    });
  });
  return out;
}

bool is_tridiagonal(const DenseMatrix& a) {
  for (int i = 1; i <= a.order(); ++i)
    for (int j = 1; j <= a.order(); ++j)
      if (std::abs(i - j) > 1 && a.at(i, j) != Complex(0.0)) return false;
  return true;
}

// Jacobi-matrix test: a tridiagonal matrix with nonnegative entries is TN iff
// every contiguous principal minor is nonnegative; it is oscillatory iff in
// addition it is nonsingular and all first sub/superdiagonal entries are
// positive (Gantmacher-Krein criterion). Works at any order.
ClassReport tridiagonal_oscillatory(const DenseMatrix& a, const PredicateOptions& opts) {
  const int n = a.order();
  const double tol = opts.tolerance;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(1, i - 1); j <= std::min(n, i + 1); ++j) {
      const Complex v = a.at(i, j);
      if (std::abs(v.imag()) > tol || v.real() < -tol)
        return minor_sign_violation("oscillatory", IndexSet{i}, IndexSet{j}, v,
                                    "negative or non-real entry", tol);
    }
  for (int i = 1; i < n; ++i)
    if (a.at(i, i + 1).real() <= tol || a.at(i + 1, i).real() <= tol)
      return minor_sign_violation("oscillatory", IndexSet{i}, IndexSet{i + 1},
                                  a.at(i, i + 1), "off-diagonal entry not positive", tol);
  // det A[i:j] via the three-term recurrence, per starting index i.
  double scale = 1.0;
  for (int i = 1; i <= n; ++i) {
    double dm2 = 1.0, dm1 = a.at(i, i).real();
    if (dm1 < -tol * scale)
      return minor_sign_violation("oscillatory", IndexSet{i}, IndexSet{i}, dm1,
                                  "contiguous principal minor negative", tol);
    for (int j = i + 1; j <= n; ++j) {
      const double d = a.at(j, j).real() * dm1 -
                       a.at(j - 1, j).real() * a.at(j, j - 1).real() * dm2;
      scale = std::max(scale, std::abs(d));
      if (d < -tol * scale)
        return minor_sign_violation("oscillatory", IndexSet::range(i, j), IndexSet::range(i, j),
                                    d, "contiguous principal minor negative", tol);
      dm2 = dm1;
      dm1 = d;
      if (i == 1 && j == n && d <= tol * scale)
        return minor_sign_violation("oscillatory", IndexSet::full(n), IndexSet::full(n), d,
                                    "singular", tol);
    }
  }
  return pass("oscillatory", tol);
}

}  // namespace

ClassReport is_totally_nonnegative(const DenseMatrix& a, const PredicateOptions& opts) {
  return all_minors_scan(a, "totally-nonnegative", false, opts);
}

ClassReport is_totally_positive(const DenseMatrix& a, const PredicateOptions& opts) {
  return all_minors_scan(a, "totally-positive", true, opts);
}

ClassReport is_oscillatory(const DenseMatrix& a, const PredicateOptions& opts) {
  const int n = a.order();
  if (is_tridiagonal(a) && n > 2) return tridiagonal_oscillatory(a, opts);
  ClassReport tn = is_totally_nonnegative(a, opts);
  if (!tn.holds) {
    tn.class_name = "oscillatory";
    return tn;
  }
  const Complex det = determinant(a);
  if (std::abs(det) <= opts.tolerance)
    return minor_sign_violation("oscillatory", IndexSet::full(n), IndexSet::full(n), det,
                                "singular", a.has_exact() ? 0.0 : opts.tolerance);
  // For nonsingular TN matrices, oscillatory is equivalent to A^(n-1) TP.
  DenseMatrix power = a;
  for (int l = 2; l <= std::max(1, n - 1); ++l) power = power * a;
  ClassReport tp = is_totally_positive(power, opts);
  tp.class_name = "oscillatory";
  if (tp.witness) tp.witness->note = "power A^(n-1) not totally positive: " + tp.witness->note;
  return tp;
}

ClassReport is_m_matrix(const DenseMatrix& a, double tol) {
  const int n = a.order();
  if (!a.is_real(0.0)) throw argument_error("M-matrix test needs a real matrix");
  double scale = 1.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) scale = std::max(scale, std::abs(a.at(i, j).real()));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && a.at(i, j).real() > tol * scale)
        return minor_sign_violation("M", IndexSet{i}, IndexSet{j}, a.at(i, j),
                                    "positive off-diagonal entry", tol);
  double r = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= n; ++i) r = std::max(r, a.at(i, i).real());
  DenseMatrix p(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      p.set(i, j, i == j ? r - a.at(i, i).real() : std::max(0.0, -a.at(i, j).real()));
  const double rho = spectral_radius(p);
  if (rho >= r - tol * scale) {
    ClassReport rep{"M", false, Witness{{}, {}, {rho, r}, "spectral_radius(rI - A) >= r"}, tol};
    return rep;
  }
  return pass("M", tol);
}

namespace {

ClassReport ultrametric_impl(const DenseMatrix& a, bool strict) {
  const std::string cls = strict ? "strictly-ultrametric" : "ultrametric";
  const int n = a.order();
  const double tol = 0.0;  // comparisons are on raw entries
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Complex v = a.at(i, j);
      if (v.imag() != 0.0 || v.real() < 0.0)
        return minor_sign_violation(cls, IndexSet{i}, IndexSet{j}, v,
                                    "entry not real nonnegative", tol);
      if (a.at(i, j) != a.at(j, i))
        return minor_sign_violation(cls, IndexSet{i}, IndexSet{j}, v, "not symmetric", tol);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (a.at(i, j).real() < std::min(a.at(i, k).real(), a.at(k, j).real())) {
          ClassReport r{cls, false,
                        Witness{IndexSet{i}, IndexSet{j},
                                {a.at(i, j), a.at(i, k), a.at(k, j)},
                                "a(i,j) < min(a(i,k), a(k,j))"},
                        tol};
          return r;
        }
  for (int i = 1; i <= n; ++i) {
    double row_max = 0.0;
    int arg = 0;
    for (int k = 1; k <= n; ++k)
      if (k != i && a.at(i, k).real() > row_max) {
        row_max = a.at(i, k).real();
        arg = k;
      }
    const double d = a.at(i, i).real();
    const bool bad = strict ? d <= row_max && n > 1 : d < row_max;
    if (n == 1 && strict && d <= 0.0)
      return minor_sign_violation(cls, IndexSet{1}, IndexSet{1}, d, "diagonal not positive", tol);
    if (bad)
      return minor_sign_violation(cls, IndexSet{i}, IndexSet{arg == 0 ? i : arg}, d,
                                  strict ? "diagonal does not strictly dominate row max"
                                         : "diagonal below off-diagonal row max",
                                  tol);
  }
  return pass(cls, tol);
}

}  // namespace

ClassReport is_ultrametric(const DenseMatrix& a) { return ultrametric_impl(a, false); }

ClassReport is_strictly_ultrametric(const DenseMatrix& a) { return ultrametric_impl(a, true); }

ClassReport is_diagonally_dominant(const DenseMatrix& a, DominanceMode mode, bool strict) {
  const int n = a.order();
  std::string cls = mode == DominanceMode::row ? "row-diagonally-dominant"
                                               : "column-diagonally-dominant";
  if (strict) cls = "strictly-" + cls;
  for (int i = 1; i <= n; ++i) {
    double off = 0.0;
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      off += std::abs(mode == DominanceMode::row ? a.at(i, j) : a.at(j, i));
    }
    const double d = a.at(i, i).real();
    const bool bad = strict ? d <= off : d < off;
    if (bad) {
      ClassReport r{cls, false,
                    Witness{IndexSet{i}, IndexSet{i}, {d, off},
                            "diagonal vs off-diagonal absolute sum"},
                    0.0};
      return r;
    }
  }
  return pass(cls, 0.0);
}

ClassReport is_checkerboard(const DenseMatrix& a, double tol) {
  const int n = a.order();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Complex v = a.at(i, j);
      if (std::abs(v) <= tol) continue;
      if (std::abs(v.imag()) > tol)
        return minor_sign_violation("checkerboard", IndexSet{i}, IndexSet{j}, v,
                                    "non-real entry", tol);
      const int want = ((i - j) % 2 == 0) ? 1 : -1;
      if ((v.real() > 0 ? 1 : -1) != want)
        return minor_sign_violation("checkerboard", IndexSet{i}, IndexSet{j}, v,
                                    "entry sign differs from (-1)^(i-j)", tol);
    }
  return pass("checkerboard", tol);
}

namespace {

template <typename Scalar>
DenseMatrix hurwitz_impl(const std::vector<Scalar>& descending) {
  const int d = static_cast<int>(descending.size()) - 1;
  if (d < 1) throw argument_error("Hurwitz matrix needs degree >= 1");
  if (descending[0] == Scalar(0)) throw argument_error("leading coefficient must be nonzero");
  std::vector<Rational> entries(static_cast<size_t>(d) * d, Rational(0));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      const int m = 2 * j - i;
      if (m >= 0 && m <= d) entries[(i - 1) * d + (j - 1)] = Rational(descending[m]);
    }
  return DenseMatrix::from_exact(d, std::move(entries));
}

}  // namespace

DenseMatrix hurwitz_matrix(const std::vector<Rational>& descending) {
  return hurwitz_impl(descending);
}

DenseMatrix hurwitz_matrix(const std::vector<double>& descending) {
  return hurwitz_impl(descending);
}

NewtonReport newton_inequality_report(const DenseMatrix& a) {
  const int n = a.order();
  const std::vector<Complex> lambda = eigenvalues(a);
  // Elementary symmetric functions of the spectrum, built incrementally.
  std::vector<Complex> e(static_cast<size_t>(n) + 1, 0.0);
  e[0] = 1.0;
  int used = 0;
  for (Complex l : lambda) {
    ++used;
    for (int j = used; j >= 1; --j) e[j] += l * e[j - 1];
  }
  NewtonReport rep;
  rep.c.resize(n + 1);
  for (int j = 0; j <= n; ++j)
    rep.c[j] = e[j].real() / to_double(Rational(binomial(n, j)));
  for (int j = 1; j <= n - 1; ++j) {
    NewtonGap g;
    g.j = j;
    g.c_j = rep.c[j];
    g.gap = rep.c[j] * rep.c[j] - rep.c[j - 1] * rep.c[j + 1];
    rep.gaps.push_back(g);
  }
  return rep;
}

}  // namespace structmat
