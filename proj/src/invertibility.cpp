#include "structmat/invertibility.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "structmat/eigensolve.hpp"
#include "structmat/errors.hpp"
#include "structmat/report.hpp"
#include "structmat/toeplitz.hpp"

namespace structmat {

DenseMatrix hilbert_matrix(int n) {
  if (n < 1) throw argument_error("order must be positive");
  std::vector<Rational> e(static_cast<size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) e[(i - 1) * n + (j - 1)] = Rational(1, i + j - 1);
  return DenseMatrix::from_exact(n, std::move(e));
}

DenseMatrix hilbert_companion_matrix(int n) {
  if (n < 1) throw argument_error("order must be positive");
  std::vector<Rational> e(static_cast<size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) e[(i - 1) * n + (j - 1)] = Rational(1, std::max(i, j));
  return DenseMatrix::from_exact(n, std::move(e));
}

void write_csv(std::ostream& os, const FamilyCurve& curve) {
  os << "n,norm_inf,inv_norm_inf,min_sigma,max_sigma\n";
  for (const FamilyPoint& p : curve.points)
    os << p.n << ',' << format_double(p.norm_inf) << ',' << format_double(p.inv_norm_inf) << ','
       << format_double(p.min_sigma) << ',' << format_double(p.max_sigma) << '\n';
}

FamilyCurve shifted_inverse_family(ShiftBase base, double alpha, const std::vector<int>& orders) {
  if (alpha <= 0.0) throw argument_error("shift must be positive");
  FamilyCurve curve;
  curve.family = base == ShiftBase::hilbert ? "hilbert-shift" : "companion-shift";
  for (int n : orders) {
    DenseMatrix shifted =
        base == ShiftBase::hilbert ? hilbert_matrix(n) : hilbert_companion_matrix(n);
    for (int i = 1; i <= n; ++i) shifted.set(i, i, shifted.at(i, i) + alpha);
    const DenseMatrix a = inverse(shifted);
    const std::vector<double> spec = eigenvalues_hermitian(shifted, 1e-9);
    FamilyPoint p;
    p.n = n;
    p.norm_inf = p_norm(a, PNorm::infinity);
    p.inv_norm_inf = p_norm(shifted, PNorm::infinity);
    p.min_sigma = 1.0 / spec.back();   // spectrum of the inverse family
    p.max_sigma = 1.0 / spec.front();
    curve.points.push_back(p);
  }
  return curve;
}

ClassReport mms_inverse_check(const DenseMatrix& a) {
  const ClassReport strict = is_strictly_ultrametric(a);
  if (!strict.holds) {
    std::ostringstream os;
    os << "input is not strictly ultrametric";
    if (strict.witness) os << " (" << strict.witness->note << ")";
    throw argument_error(os.str());
  }
  const DenseMatrix inv = a.has_exact() && a.order() <= 64 ? inverse_exact(a) : inverse(a);
  ClassReport out;
  out.class_name = "mms-inverse";
  const double scale = std::max(1.0, p_norm(inv, PNorm::infinity));
  for (int i = 1; i <= a.order(); ++i)
    for (int j = i + 1; j <= a.order(); ++j)
      if (std::abs(inv.at(i, j) - inv.at(j, i)) > 1e-10 * scale) {
        out.holds = false;
        out.witness = Witness{IndexSet{i}, IndexSet{j}, {inv.at(i, j), inv.at(j, i)},
                              "inverse not symmetric"};
        return out;
      }
  ClassReport dd = is_diagonally_dominant(inv, DominanceMode::row, /*strict=*/true);
  if (!dd.holds) {
    dd.class_name = out.class_name;
    if (dd.witness) dd.witness->note = "inverse not strictly row dominant: " + dd.witness->note;
    return dd;
  }
  ClassReport m = is_m_matrix(inv);
  if (!m.holds) {
    m.class_name = out.class_name;
    if (m.witness) m.witness->note = "inverse not an M-matrix: " + m.witness->note;
    return m;
  }
  out.holds = true;
  return out;
}

SymbolProductReport symbol_product_experiment(Complex c, int k, const std::vector<int>& orders,
                                              int grid_size) {
  if (std::abs(c) <= 2.0)
    throw argument_error("|c| must exceed 2 to keep the symbol away from zero");
  if (k < 3) throw argument_error("k must be at least 3");
  SymbolProductReport rep;
  // Band of A = T T^*: powers 0, +-1, +-(k-1), +-k of the symbol
  // (1 + s + c s^k)(1 + s^-1 + conj(c) s^-k).
  const ToeplitzBand band = ToeplitzBand::from_powers({{0, 2.0 + std::norm(c)},
                                                       {1, 1.0},
                                                       {-1, 1.0},
                                                       {k, c},
                                                       {-k, std::conj(c)},
                                                       {k - 1, c},
                                                       {-(k - 1), std::conj(c)}});
  const double pi = std::acos(-1.0);
  rep.grid_min_symbol_sq = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_size; ++i) {
    const Complex s = std::polar(1.0, 2.0 * pi * i / grid_size);
    const Complex ts = 1.0 + s + c * std::pow(s, k);
    rep.grid_min_symbol_sq = std::min(rep.grid_min_symbol_sq, std::norm(ts));
  }
  for (int n : orders) {
    const DenseMatrix a = band.section(n);
    const std::vector<double> spec = eigenvalues_hermitian(a);
    FamilyPoint p;
    p.n = n;
    p.norm_inf = p_norm(a, PNorm::infinity);
    // For Hermitian sections the 1- and inf-norms of the inverse agree.
    p.inv_norm_inf = p_norm(inverse(a), PNorm::infinity);
    p.min_sigma = spec.front();
    p.max_sigma = spec.back();
    rep.sections.push_back(p);
  }
  // Leading (k-1) block of the inverse of the infinite operator. With
  // S(T^-1) = 1 - s + s^2 - ... below order k-1, the block of T^*-1 T^-1 is
  // exactly (-1)^(i-j) min(i,j), independently of c.
  rep.inverse_block = DenseMatrix(k - 1);
  for (int i = 1; i <= k - 1; ++i)
    for (int j = 1; j <= k - 1; ++j)
      rep.inverse_block.set(i, j, ((i - j) % 2 == 0 ? 1.0 : -1.0) * std::min(i, j));
  rep.inverse_block_norm1 = p_norm(rep.inverse_block, PNorm::one);
  return rep;
}

DecayFit demko_decay_check(const DenseMatrix& a, int band_width) {
  const int n = a.order();
  if (band_width < 1) throw argument_error("band width must be positive");
  const double scale = std::max(1.0, p_norm(a, PNorm::infinity));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (std::abs(i - j) >= band_width && std::abs(a.at(i, j)) > 1e-14 * scale) {
        std::ostringstream os;
        os << "matrix is not banded with width " << band_width << ": entry (" << i << "," << j
           << ") is nonzero";
        throw argument_error(os.str());
      }
  const DenseMatrix inv = inverse(a);
  // Least-squares fit of log|inv(i,j)| against |i-j|, then lift K so the
  // bound holds entrywise.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const double v = std::abs(inv.at(i, j));
      if (v <= 1e-14) continue;
      const double x = std::abs(i - j), y = std::log(v);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++count;
    }
  DecayFit fit{};
  if (count < 2 || sxx * count - sx * sx == 0.0) {
    // Inverse is essentially diagonal; any r certifies.
    fit.certified = true;
    fit.r = 0.5;
    fit.k = 0.0;
    for (int i = 1; i <= n; ++i) fit.k = std::max(fit.k, std::abs(inv.at(i, i)));
    fit.max_residual = 0.0;
    return fit;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.r = std::exp(slope);
  if (fit.r >= 1.0) {
    fit.certified = false;
    fit.k = 0.0;
    fit.max_residual = std::numeric_limits<double>::infinity();
    return fit;
  }
  fit.k = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const double v = std::abs(inv.at(i, j));
      if (v == 0.0) continue;
      fit.k = std::max(fit.k, v / std::pow(fit.r, std::abs(i - j)));
    }
  fit.max_residual = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      fit.max_residual = std::max(fit.max_residual, std::abs(inv.at(i, j)) -
                                                        fit.k * std::pow(fit.r, std::abs(i - j)));
  fit.certified = true;
  return fit;
}

namespace {

void require_oscillatory(const DenseMatrix& a, StructureCertificate cert, const char* who) {
  if (cert == StructureCertificate::assume) return;
  const ClassReport r = is_oscillatory(a);
  if (!r.holds) {
    std::ostringstream os;
    os << who << " needs an oscillatory matrix";
    if (r.witness) os << " (" << r.witness->note << ")";
    throw argument_error(os.str());
  }
}

}  // namespace

OscillatoryBound oscillatory_inverse_bound(const DenseMatrix& a, StructureCertificate cert) {
  const int n = a.order();
  const double scale = std::max(1.0, p_norm(a, PNorm::infinity));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (std::abs(a.at(i, j) - std::conj(a.at(j, i))) > 1e-12 * scale)
        throw argument_error("oscillatory bound needs a Hermitian matrix");
  require_oscillatory(a, cert, "oscillatory bound");
  const std::vector<double> spec = eigenvalues_hermitian(a);
  const double lambda_min = spec.front();
  if (lambda_min <= 0.0)
    throw argument_error("oscillatory matrices have positive spectra; lambda_min <= 0");
  OscillatoryBound out;
  out.bound = p_norm(a, PNorm::infinity) / (lambda_min * lambda_min);
  out.actual = p_norm(inverse(a), PNorm::infinity);
  out.holds = out.actual <= out.bound * (1.0 + 1e-9);
  return out;
}

double deboor_lemma_bound(const DenseMatrix& a, const std::vector<double>& x,
                          const std::vector<double>& y, StructureCertificate cert) {
  const int n = a.order();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw argument_error("vector length mismatch");
  if (cert == StructureCertificate::verify) {
    const ClassReport tn = is_totally_nonnegative(a);
    if (!tn.holds) throw argument_error("de Boor's lemma needs a totally nonnegative matrix");
    if (std::abs(determinant(a)) == 0.0)
      throw argument_error("de Boor's lemma needs a nonsingular matrix");
  }
  for (int i = 0; i < n; ++i) {
    const double want = (i % 2 == 0) ? 1.0 : -1.0;
    if (x[i] == 0.0 || y[i] == 0.0 || x[i] * want <= 0.0 || y[i] * want <= 0.0) {
      std::ostringstream os;
      os << "sign pattern (-1)^(i-1) violated at index " << i + 1;
      throw argument_error(os.str());
    }
  }
  const std::vector<double> ax = mat_vec_real(a, x);
  double denom_scale = std::max(1.0, p_norm(a, PNorm::infinity));
  double x_scale = 0.0;
  for (double v : x) x_scale = std::max(x_scale, std::abs(v));
  for (int i = 0; i < n; ++i)
    if (std::abs(ax[i] - y[i]) > 1e-10 * denom_scale * std::max(1.0, x_scale))
      throw argument_error("A x = y does not hold to tolerance");
  double xmax = 0.0, ymin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    xmax = std::max(xmax, std::abs(x[i]));
    ymin = std::min(ymin, std::abs(y[i]));
  }
  return xmax / ymin;
}

MinEigenpair min_eigenpair(const DenseMatrix& a) {
  const int n = a.order();
  const std::vector<double> spec = eigenvalues_hermitian(a);
  const double lam = spec.front();
  const double scale = std::max(1.0, p_norm(a, PNorm::infinity));
  double delta = 1e-10 * scale;
  for (int attempt = 0; attempt < 8; ++attempt, delta *= 100.0) {
    DenseMatrix shifted = a;
    for (int i = 1; i <= n; ++i) shifted.set(i, i, a.at(i, i) - (lam - delta));
    std::vector<Complex> v(n);
    for (int i = 0; i < n; ++i) v[i] = (i % 2 == 0) ? 1.0 : -1.0;  // alternating seed
    try {
      for (int iter = 0; iter < 100; ++iter) {
        std::vector<Complex> w = solve(shifted, v, 1e-15);
        double wmax = 0.0;
        for (Complex c : w) wmax = std::max(wmax, std::abs(c));
        for (Complex& c : w) c /= wmax;
        v = std::move(w);
        const std::vector<Complex> av = mat_vec(a, v);
        double res = 0.0;
        for (int i = 0; i < n; ++i) res = std::max(res, std::abs(av[i] - lam * v[i]));
        if (res <= 1e-12 * scale) {
          MinEigenpair out;
          out.value = lam;
          out.vector.resize(n);
          int first_nonzero = 0;
          for (int i = 0; i < n; ++i)
            if (std::abs(v[i]) > 1e-300) {
              first_nonzero = i;
              break;
            }
          const double sign = v[first_nonzero].real() >= 0 ? 1.0 : -1.0;
          for (int i = 0; i < n; ++i) out.vector[i] = sign * v[i].real();
          return out;
        }
      }
    } catch (const singular_error&) {
      // Shift collided with the eigenvalue; back off and retry.
    }
  }
  throw numerical_error("inverse iteration stalled on the minimal eigenvalue");
}

}  // namespace structmat
