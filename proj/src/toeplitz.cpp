#include "structmat/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "structmat/eigensolve.hpp"
#include "structmat/errors.hpp"

namespace structmat {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ToeplitzBand::ToeplitzBand(int min_power, std::vector<Complex> coeffs)
    : min_power_(min_power), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw argument_error("band needs at least one coefficient");
}

ToeplitzBand ToeplitzBand::from_powers(const std::vector<std::pair<int, Complex>>& terms) {
  if (terms.empty()) throw argument_error("band needs at least one coefficient");
  int lo = terms[0].first, hi = terms[0].first;
  for (const auto& [p, c] : terms) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  std::vector<Complex> coeffs(static_cast<size_t>(hi - lo + 1), Complex(0.0));
  for (const auto& [p, c] : terms) coeffs[p - lo] += c;
  return ToeplitzBand(lo, std::move(coeffs));
}

Complex ToeplitzBand::coeff(int power) const {
  if (power < min_power_ || power > max_power()) return 0.0;
  return coeffs_[power - min_power_];
}

Complex ToeplitzBand::symbol(Complex s) const {
  // Horner over the window, scaled by s^min_power.
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc * std::pow(s, min_power_);
}

DenseMatrix ToeplitzBand::section(int n) const {
  DenseMatrix a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.set(i, j, coeff(j - i));
  return a;
}

namespace {

CurveSamples curve_from_callable(const std::function<Complex(double)>& f, int grid_size) {
  if (grid_size < 8) throw argument_error("curve grid must have at least 8 points");
  CurveSamples c;
  c.theta.reserve(grid_size + 1);
  c.points.reserve(grid_size + 1);
  for (int i = 0; i < grid_size; ++i) {
    const double th = 2.0 * kPi * i / grid_size;
    c.theta.push_back(th);
    c.points.push_back(f(th));
  }
  c.theta.push_back(2.0 * kPi);
  c.points.push_back(c.points.front());
  return c;
}

}  // namespace

CurveSamples symbol_curve(const ToeplitzBand& band, int grid_size) {
  return curve_from_callable(
      [&band](double th) { return band.symbol(std::polar(1.0, th)); }, grid_size);
}

CurveSamples symbol_curve(int k, double t, int grid_size) {
  return curve_from_callable(
      [k, t](double th) { return symbol_eval(k, t, std::polar(1.0, th)); }, grid_size);
}

bool winding_spectrum_member(const std::function<Complex(double)>& symbol_at_theta,
                             Complex lambda, int initial_grid, double on_curve_tol) {
  int grid = std::max(initial_grid, 8);
  const int max_grid = 1 << 20;
  while (true) {
    double total = 0.0;
    bool too_coarse = false;
    double min_dist = std::numeric_limits<double>::infinity();
    Complex prev = symbol_at_theta(0.0) - lambda;
    min_dist = std::min(min_dist, std::abs(prev));
    for (int i = 1; i <= grid; ++i) {
      const double th = 2.0 * kPi * i / grid;
      const Complex cur = symbol_at_theta(th) - lambda;
      min_dist = std::min(min_dist, std::abs(cur));
      const double step = std::arg(cur / prev);
      if (std::abs(step) >= kPi / 4.0) {
        too_coarse = true;
        break;
      }
      total += step;
      prev = cur;
    }
    if (min_dist <= on_curve_tol) return true;
    if (!too_coarse) {
      const long wind = std::lround(total / (2.0 * kPi));
      return wind != 0;
    }
    if (grid >= max_grid)
      throw numerical_error("winding refinement exceeded the grid cap");
    grid *= 2;
  }
}

bool winding_spectrum_member(const ToeplitzBand& band, Complex lambda) {
  return winding_spectrum_member(
      [&band](double th) { return band.symbol(std::polar(1.0, th)); }, lambda);
}

bool winding_spectrum_member(int k, double t, Complex lambda) {
  return winding_spectrum_member(
      [k, t](double th) { return symbol_eval(k, t, std::polar(1.0, th)); }, lambda);
}

namespace {

int true_degree(const std::vector<Complex>& c, double rel_tol = 0.0) {
  double scale = 0.0;
  for (Complex v : c) scale = std::max(scale, std::abs(v));
  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && std::abs(c[d]) <= rel_tol * scale) --d;
  if (scale == 0.0) return -1;
  return d;
}

std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Complex poly_eval(const std::vector<Complex>& c, Complex x) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void validate_symbol(const RationalSymbol& sym) {
  if (true_degree(sym.f) < 0) throw argument_error("F must be nonzero");
  if (sym.p() < 1) throw argument_error("Day criterion needs deg G >= 1");
  // Coprimality of F with G and H, probed at their roots.
  double fscale = 0.0;
  for (Complex v : sym.f) fscale = std::max(fscale, std::abs(v));
  for (const auto* q : {&sym.g, &sym.h}) {
    if (true_degree(*q) < 1) continue;
    for (Complex r : poly_roots(*q))
      if (std::abs(poly_eval(sym.f, r)) <= 1e-9 * fscale * std::max(1.0, std::abs(r)))
        throw argument_error("F shares a root with G*H");
  }
}

}  // namespace

int RationalSymbol::p() const { return std::max(0, true_degree(g)); }

RationalSymbol counterexample_symbol(int k, double t) {
  RationalSymbol sym;
  sym.f = {Complex(1.0), Complex(t)};
  sym.g = {Complex(0.0), Complex(1.0)};
  sym.h.assign(static_cast<size_t>(k) + 2, Complex(0.0));
  sym.h[0] = 1.0;
  for (int j = 1; j <= k + 1; ++j) sym.h[j] = (j % 2 == 0 ? 1.0 : -1.0) * (1.0 - t);
  return sym;
}

DayResult day_limit_member(const RationalSymbol& sym, Complex lambda, double tol) {
  validate_symbol(sym);
  const int p = sym.p();
  std::vector<Complex> r = poly_mul(sym.g, sym.h);
  for (Complex& c : r) c *= -lambda;
  r.resize(std::max(r.size(), sym.f.size()), Complex(0.0));
  for (size_t i = 0; i < sym.f.size(); ++i) r[i] += sym.f[i];
  const int deg = true_degree(r, 1e-12);
  if (deg < p + 1) {
    std::ostringstream os;
    os << "R = F - lambda G H degenerates to degree " << deg << " < p+1 = " << p + 1;
    throw argument_error(os.str());
  }
  r.resize(deg + 1);
  std::vector<Complex> roots = poly_roots(r);
  std::sort(roots.begin(), roots.end(),
            [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  const double rp = std::abs(roots[p - 1]);
  const double rq = std::abs(roots[p]);
  DayResult out;
  out.gap = rq - rp;
  out.is_member = out.gap <= tol * std::max(1.0, rp);
  return out;
}

BiernackiStar biernacki_star(int p, int q) {
  if (p < 1 || q < 1) throw argument_error("star parameters must be positive");
  if (std::gcd(p, q) != 1) throw argument_error("star parameters must be coprime");
  const double m = p + q;
  BiernackiStar s;
  s.radius_max = m * std::pow(p, -p / m) * std::pow(q, -q / m);
  s.ray_count = p + q;
  return s;
}

SectionSpectra finite_section_sweep(const ToeplitzBand& band, const std::vector<int>& orders) {
  SectionSpectra out;
  int prev = 0;
  for (int n : orders) {
    if (n <= prev) throw argument_error("orders must be strictly ascending");
    prev = n;
    out.orders.push_back(n);
    out.spectra.push_back(eigenvalues(band.section(n)));
  }
  return out;
}

SectionSpectra finite_section_sweep(int k, const Rational& t, const std::vector<int>& orders) {
  if (orders.empty()) throw argument_error("need at least one order");
  SectionSpectra out;
  const int top = *std::max_element(orders.begin(), orders.end());
  const std::vector<Rational> row = counterexample_first_row(top, k, t);
  int prev = 0;
  for (int n : orders) {
    if (n <= prev) throw argument_error("orders must be strictly ascending");
    prev = n;
    DenseMatrix a(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j) a.set(i, j, to_double(row[j - i]));
      if (i > 1) a.set(i, i - 1, 1.0);
    }
    out.orders.push_back(n);
    out.spectra.push_back(eigenvalues(a));
  }
  return out;
}

DenseMatrix gohberg_semencul_inverse(const DenseMatrix& t, const std::vector<Complex>& x,
                                     const std::vector<Complex>& y) {
  const int n = t.order();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw argument_error("x and y must have the matrix order");
  double scale = std::max(1.0, p_norm(t, PNorm::infinity));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i > 1 && j > 1 && std::abs(t.at(i, j) - t.at(i - 1, j - 1)) > 1e-12 * scale)
        throw argument_error("matrix is not Toeplitz");
  if (std::abs(x[0]) < 1e-12)
    throw argument_error("Gohberg-Semencul formula needs x_0 bounded away from zero");
  // Residual preconditions T x = e_1, T y = e_n.
  const std::vector<Complex> tx = mat_vec(t, x), ty = mat_vec(t, y);
  double rx = 0.0, ry = 0.0;
  for (int i = 0; i < n; ++i) {
    rx = std::max(rx, std::abs(tx[i] - (i == 0 ? Complex(1.0) : Complex(0.0))));
    ry = std::max(ry, std::abs(ty[i] - (i == n - 1 ? Complex(1.0) : Complex(0.0))));
  }
  double vec_scale = 0.0;
  for (int i = 0; i < n; ++i)
    vec_scale = std::max({vec_scale, std::abs(x[i]), std::abs(y[i])});
  const double allowed = 1e-10 * std::max(1.0, scale * vec_scale);
  if (rx > allowed || ry > allowed) {
    std::ostringstream os;
    os << "solution residuals too large for the formula: |Tx-e1| = " << rx
       << ", |Ty-en| = " << ry;
    throw argument_error(os.str());
  }
  // y as given is (y_{-n+1}, ..., y_0); y_m for -n < m <= 0 sits at y[n-1+m].
  auto ym = [&](int m) { return y[n - 1 + m]; };
  DenseMatrix inv(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      // (L(x) U(y))(i,j) = sum_l x_{i-l} y_{l-j} over l <= min(i,j)
      Complex first = 0.0;
      for (int l = 1; l <= std::min(i, j); ++l) first += x[i - l] * ym(l - j);
      // (L2(y) U2(x))(i,j) = sum_l y_{-n+i-l} x_{n-j+l} over l < min(i,j)
      Complex second = 0.0;
      for (int l = 1; l <= std::min(i, j) - 1; ++l) second += ym(-n + i - l) * x[n - j + l];
      inv.set(i, j, (first - second) / x[0]);
    }
  return inv;
}

XYPair counterexample_xy(const CounterexampleParams& p) {
  if (p.n < p.k + 2) throw argument_error("closed forms need n >= k+2");
  if (!(p.t > 0 && p.t < 1)) throw argument_error("t must lie in (0,1)");
  const int n = p.n, k = p.k;
  const Rational s = Rational(1) / p.t;
  XYPair xy;
  xy.x.resize(n);
  Rational spow = s;  // s^(l+1)
  for (int l = 0; l <= n - k - 2; ++l) {
    xy.x[l] = (l % 2 == 0) ? spow : -spow;
    spow *= s;
  }
  Rational cap = 1;
  for (int i = 0; i < n - k - 1; ++i) cap *= s;  // s^(n-k-1)
  for (int l = std::max(0, n - k - 1); l <= n - 1; ++l)
    xy.x[l] = (l % 2 == 0) ? cap : -cap;
  xy.y.assign(n, Rational(0));
  auto set_y = [&](int m, const Rational& v) { xy.y[n - 1 + m] = v; };
  set_y(0, s);
  for (int m = -1; m >= std::max(-k - 1, -n + 1); --m)
    set_y(m, ((m + 1) % 2 == 0) ? Rational(1) - s : s - Rational(1));
  // Exact verification of A x = e_1 and A y = e_n.
  const ToeplitzHessenberg th = build_counterexample(p);
  const DenseMatrix a = th.to_dense();
  for (int i = 1; i <= n; ++i) {
    Rational accx = 0, accy = 0;
    for (int j = 1; j <= n; ++j) {
      accx += a.exact_at(i, j) * xy.x[j - 1];
      accy += a.exact_at(i, j) * xy.y[j - 1];
    }
    if (accx != (i == 1 ? 1 : 0) || accy != (i == n ? 1 : 0))
      throw numerical_error("closed-form x/y failed the exact residual check");
  }
  return xy;
}

}  // namespace structmat
