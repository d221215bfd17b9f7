// Command-line driver: every experiment in the library behind a subcommand,
// with JSON/CSV artifacts suitable for plotting or re-validation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "structmat/counterexample.hpp"
#include "structmat/errors.hpp"
#include "structmat/invertibility.hpp"
#include "structmat/predicates.hpp"
#include "structmat/report.hpp"
#include "structmat/spectral.hpp"
#include "structmat/spline.hpp"
#include "structmat/toeplitz.hpp"

using json = nlohmann::json;
using namespace structmat;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("STRUCTMAT_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw argument_error("cannot open output file " + path);
  os << text;
}

DenseMatrix load_matrix(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw argument_error("cannot open matrix file " + path);
  std::stringstream buf;
  buf << is.rdbuf();
  return matrix_from_json(buf.str());
}

json spectrum_json(const DenseMatrix& a) { return json::parse(to_json(spectrum_report(a))); }

json class_json(const ClassReport& r) { return json::parse(to_json(r)); }

json day_json(const DayResult& d) {
  json j;
  j["is_member"] = d.is_member;
  j["gap"] = d.gap;
  return j;
}

std::string spectra_csv(const SectionSpectra& sweep) {
  std::ostringstream os;
  os << "order,re,im\n";
  for (size_t i = 0; i < sweep.orders.size(); ++i)
    for (Complex l : sweep.spectra[i])
      os << sweep.orders[i] << ',' << format_double(l.real()) << ',' << format_double(l.imag())
         << '\n';
  return os.str();
}

std::string curve_csv(const CurveSamples& curve) {
  std::ostringstream os;
  os << "theta,re,im\n";
  for (size_t i = 0; i < curve.theta.size(); ++i)
    os << format_double(curve.theta[i]) << ',' << format_double(curve.points[i].real()) << ','
       << format_double(curve.points[i].imag()) << '\n';
  return os.str();
}

ClassReport run_class(const std::string& cls, const DenseMatrix& a,
                      const PredicateOptions& opts, double checker_tol) {
  if (cls == "P" || cls == "p") return is_p_matrix(a, opts);
  if (cls == "GKK" || cls == "gkk") return is_gkk(a, opts);
  if (cls == "weak-sign-symmetric") return is_weakly_sign_symmetric(a, opts);
  if (cls == "sign-symmetric") return is_sign_symmetric(a, opts);
  if (cls.rfind("dispersal:", 0) == 0)
    return sign_symmetry_up_to_dispersal(a, std::stoi(cls.substr(10)), opts);
  if (cls == "tn") return is_totally_nonnegative(a, opts);
  if (cls == "tp") return is_totally_positive(a, opts);
  if (cls == "oscillatory") return is_oscillatory(a, opts);
  if (cls == "m") return is_m_matrix(a);
  if (cls == "ultrametric") return is_ultrametric(a);
  if (cls == "strictly-ultrametric") return is_strictly_ultrametric(a);
  if (cls == "row-dd") return is_diagonally_dominant(a, DominanceMode::row, false);
  if (cls == "row-dd-strict") return is_diagonally_dominant(a, DominanceMode::row, true);
  if (cls == "col-dd") return is_diagonally_dominant(a, DominanceMode::column, false);
  if (cls == "col-dd-strict") return is_diagonally_dominant(a, DominanceMode::column, true);
  if (cls == "checkerboard") return is_checkerboard(a, checker_tol);
  if (cls == "omega") return is_omega_tau(a).omega;
  if (cls == "tau") return is_omega_tau(a).tau;
  if (cls == "kellogg") return kellogg_wedge_check(a);
  throw argument_error("unknown class " + cls);
}

int run(int argc, char** argv) {
  CLI::App app{"structured-matrix laboratory"};
  app.require_subcommand(1);

  PredicateOptions opts;
  double tol_day = 1e-8;
  double tol_checkerboard = 1e-12;
  app.add_option("--tol-predicate", opts.tolerance,
                 "float fallback tolerance for minor scans (default 1e-10)");
  app.add_option("--exhaustive-limit", opts.exhaustive_limit,
                 "max order for exhaustive scans (default 16)");
  app.add_option("--tol-day", tol_day, "modulus-tie tolerance for Day membership (default 1e-8)");
  app.add_option("--tol-checkerboard", tol_checkerboard,
                 "zero threshold for sign-pattern checks (default 1e-12)");

  std::string out_path;
  app.add_option("--out", out_path, "output file; stdout when omitted")->capture_default_str();

  // classify
  auto* classify = app.add_subcommand("classify", "membership tests on a matrix file");
  std::string classify_file, classes;
  classify->add_option("--file", classify_file, "matrix JSON")->required();
  classify->add_option("--classes", classes, "comma-separated class list")->required();

  // counterexample
  auto* cex = app.add_subcommand("counterexample", "build the GKK tau family member");
  int cex_n = 0, cex_k = 0;
  std::string cex_t = "1/2";
  bool cex_spectrum = false, cex_limit = false, cex_xy = false;
  cex->add_option("--n", cex_n, "order");
  cex->add_option("--k", cex_k, "gap parameter")->required();
  cex->add_option("--t", cex_t, "t as p/q or decimal in (0,1)");
  cex->add_flag("--limit", cex_limit, "build the t->0 limit of order 2k+2");
  cex->add_flag("--spectrum", cex_spectrum, "include the spectrum report");
  cex->add_flag("--xy", cex_xy, "include the closed-form x and y vectors");

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "spectrum report of a matrix file");
  std::string spec_file;
  spec->add_option("--file", spec_file, "matrix JSON")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "finite-section spectra and symbol curve");
  int sweep_k = 0;
  std::string sweep_t = "1/2";
  std::vector<int> sweep_orders;
  std::string sweep_curve, sweep_spectra, sweep_day;
  int sweep_grid = 512;
  sweep->add_option("--k", sweep_k)->required();
  sweep->add_option("--t", sweep_t)->required();
  sweep->add_option("--orders", sweep_orders, "ascending section orders")
      ->required()
      ->delimiter(',');
  sweep->add_option("--curve", sweep_curve, "symbol curve CSV path");
  sweep->add_option("--spectra", sweep_spectra, "per-order spectra CSV path");
  sweep->add_option("--day-stats", sweep_day, "per-order Day gap statistics CSV path");
  sweep->add_option("--grid", sweep_grid, "curve grid size (default 512)");

  // hurwitz-cert
  auto* hc = app.add_subcommand("hurwitz-cert", "Hurwitz minor instability certificate");
  int hc_k = 0;
  hc->add_option("--k", hc_k)->required();

  // invertibility
  auto* inv = app.add_subcommand("invertibility", "bounded-invertibility family sweeps");
  std::string inv_family = "companion";
  double inv_alpha = 1.0;
  double inv_c = 3.0;
  int inv_k = 5;
  std::vector<int> inv_orders;
  inv->add_option("--family", inv_family, "companion | hilbert | symbol-product");
  inv->add_option("--alpha", inv_alpha, "diagonal shift");
  inv->add_option("--c", inv_c, "symbol-product coefficient (real, |c|>2)");
  inv->add_option("--k", inv_k, "symbol-product power");
  inv->add_option("--orders", inv_orders)->required()->delimiter(',');

  // toeplitz-limit
  auto* tl = app.add_subcommand("toeplitz-limit", "Day limit-set membership probes");
  int tl_k = 0;
  std::string tl_t = "1/2";
  std::vector<double> tl_lambda;
  bool tl_negpoint = false;
  int tl_bp = 0, tl_bq = 0;
  tl->add_option("--k", tl_k);
  tl->add_option("--t", tl_t);
  tl->add_option("--lambda", tl_lambda, "probe point re,im")->delimiter(',');
  tl->add_flag("--negpoint", tl_negpoint, "probe the symbol value at s=-1");
  tl->add_option("--biernacki", tl_bp, "star parameter p (with --q)");
  tl->add_option("--q", tl_bq, "star parameter q");

  // spline
  auto* sp = app.add_subcommand("spline", "B-spline Gram assembly and mesh sweep");
  int sp_k = 2, sp_n = 0, sp_samples = 0, sp_nmax = 40;
  std::string sp_knots;
  sp->add_option("--k", sp_k, "spline order");
  sp->add_option("--uniform", sp_n, "dimension for a uniform knot sequence");
  sp->add_option("--knots", sp_knots, "JSON array of knots");
  sp->add_option("--experiment", sp_samples, "number of wild meshes to sweep");
  sp->add_option("--n-max", sp_nmax, "max dimension for the sweep");

  // newton-report
  auto* nr = app.add_subcommand("newton-report", "Newton-type gaps of the minor averages");
  std::string nr_file;
  int nr_n = 0, nr_k = 0;
  std::string nr_t = "1/2";
  nr->add_option("--file", nr_file, "matrix JSON");
  nr->add_option("--n", nr_n, "counterexample order");
  nr->add_option("--k", nr_k, "counterexample k");
  nr->add_option("--t", nr_t, "counterexample t");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (classify->parsed()) {
    const DenseMatrix a = load_matrix(classify_file);
    json out = json::array();
    std::stringstream ss(classes);
    std::string cls;
    while (std::getline(ss, cls, ','))
      out.push_back(class_json(run_class(cls, a, opts, tol_checkerboard)));
    emit(out_path, out.dump(2));
    return 0;
  }

  if (cex->parsed()) {
    ToeplitzHessenberg th =
        cex_limit ? build_limit(cex_k)
                  : build_counterexample({cex_n, cex_k, parse_rational(cex_t)});
    const DenseMatrix a = th.to_dense();
    json out;
    out["matrix"] = json::parse(matrix_to_json(a));
    if (cex_spectrum) out["spectrum"] = spectrum_json(a);
    if (cex_xy) {
      const XYPair xy = counterexample_xy({cex_n, cex_k, parse_rational(cex_t)});
      json jx = json::array(), jy = json::array();
      for (const Rational& v : xy.x) jx.push_back(rational_to_string(v));
      for (const Rational& v : xy.y) jy.push_back(rational_to_string(v));
      out["x"] = jx;
      out["y"] = jy;
    }
    emit(out_path, out.dump(2));
    return 0;
  }

  if (spec->parsed()) {
    emit(out_path, spectrum_json(load_matrix(spec_file)).dump(2));
    return 0;
  }

  if (sweep->parsed()) {
    const Rational t = parse_rational(sweep_t);
    const double td = to_double(t);
    if (!sweep_curve.empty()) {
      std::ofstream os(sweep_curve, std::ios::binary);
      if (!os) throw argument_error("cannot open " + sweep_curve);
      os << curve_csv(symbol_curve(sweep_k, td, sweep_grid));
    }
    const SectionSpectra spectra = finite_section_sweep(sweep_k, t, sweep_orders);
    if (!sweep_spectra.empty()) {
      std::ofstream os(sweep_spectra, std::ios::binary);
      if (!os) throw argument_error("cannot open " + sweep_spectra);
      os << spectra_csv(spectra);
    }
    json summary;
    summary["orders"] = sweep_orders;
    if (!sweep_day.empty()) {
      const RationalSymbol sym = counterexample_symbol(sweep_k, td);
      std::ostringstream os;
      os << "order,mean_gap,max_gap\n";
      json stats = json::array();
      for (size_t i = 0; i < spectra.orders.size(); ++i) {
        double sum = 0.0, worst = 0.0;
        for (Complex l : spectra.spectra[i]) {
          const DayResult d = day_limit_member(sym, l, tol_day);
          sum += d.gap;
          worst = std::max(worst, d.gap);
        }
        const double mean = sum / spectra.spectra[i].size();
        os << spectra.orders[i] << ',' << format_double(mean) << ',' << format_double(worst)
           << '\n';
        stats.push_back({{"order", spectra.orders[i]}, {"mean_gap", mean}, {"max_gap", worst}});
      }
      std::ofstream f(sweep_day, std::ios::binary);
      if (!f) throw argument_error("cannot open " + sweep_day);
      f << os.str();
      summary["day_stats"] = stats;
    }
    emit(out_path, summary.dump(2));
    return 0;
  }

  if (hc->parsed()) {
    const InstabilityCertificate cert = instability_certificate(hc_k);
    json out;
    out["k"] = hc_k;
    out["minor"] = rational_to_string(cert.minor_value);
    out["closed_form"] = rational_to_string(cert.closed_form_value);
    out["minor_double"] = to_double(cert.minor_value);
    out["negative"] = cert.negative;
    emit(out_path, out.dump(2));
    return 0;
  }

  if (inv->parsed()) {
    std::ostringstream os;
    if (inv_family == "symbol-product") {
      const SymbolProductReport rep = symbol_product_experiment(inv_c, inv_k, inv_orders);
      FamilyCurve curve{"symbol-product", rep.sections};
      write_csv(os, curve);
      os << "# grid_min_symbol_sq," << format_double(rep.grid_min_symbol_sq) << '\n';
      os << "# inverse_block_norm1," << format_double(rep.inverse_block_norm1) << '\n';
    } else {
      const ShiftBase base =
          inv_family == "hilbert" ? ShiftBase::hilbert : ShiftBase::companion;
      if (inv_family != "hilbert" && inv_family != "companion")
        throw argument_error("unknown family " + inv_family);
      write_csv(os, shifted_inverse_family(base, inv_alpha, inv_orders));
    }
    emit(out_path, os.str());
    return 0;
  }

  if (tl->parsed()) {
    json out;
    if (tl_bp > 0) {
      const BiernackiStar star = biernacki_star(tl_bp, tl_bq);
      out["radius_max"] = star.radius_max;
      out["ray_count"] = star.ray_count;
    } else {
      const double td = to_double(parse_rational(tl_t));
      const RationalSymbol sym = counterexample_symbol(tl_k, td);
      Complex lambda;
      if (tl_negpoint)
        lambda = Complex(-(1.0 - td) / (tl_k + 2 - (tl_k + 1) * td), 0.0);
      else if (tl_lambda.size() == 2)
        lambda = Complex(tl_lambda[0], tl_lambda[1]);
      else
        throw argument_error("give --lambda re,im or --negpoint");
      out = day_json(day_limit_member(sym, lambda, tol_day));
      out["lambda"] = {lambda.real(), lambda.imag()};
    }
    emit(out_path, out.dump(2));
    return 0;
  }

  if (sp->parsed()) {
    if (sp_samples > 0) {
      const ConjectureReport rep =
          deboor_conjecture_experiment(sp_k, sp_samples, sp_nmax, default_seed());
      std::ostringstream os;
      os << "seed,n,k,inv_norm_inf,lambda_min\n";
      for (const ConjectureSample& s : rep.samples)
        os << s.seed << ',' << s.n << ',' << s.k << ',' << format_double(s.inv_norm_inf) << ','
           << format_double(s.lambda_min) << '\n';
      emit(out_path, os.str());
      return 0;
    }
    KnotSequence t;
    if (!sp_knots.empty()) {
      std::ifstream is(sp_knots);
      if (!is) throw argument_error("cannot open " + sp_knots);
      json j = json::parse(is);
      t.order = sp_k;
      for (double v : j) t.knots.push_back(v);
    } else if (sp_n > 0) {
      t = KnotSequence::uniform(sp_n, sp_k);
    } else {
      throw argument_error("give --uniform N, --knots file, or --experiment count");
    }
    const GramMatrix g = gram_matrix(t);
    emit(out_path, matrix_to_json(g.matrix));
    return 0;
  }

  if (nr->parsed()) {
    DenseMatrix a = nr_file.empty()
                        ? build_counterexample({nr_n, nr_k, parse_rational(nr_t)}).to_dense()
                        : load_matrix(nr_file);
    const NewtonReport rep = newton_inequality_report(a);
    json rows = json::array();
    json violations = json::array();
    for (const NewtonGap& g : rep.gaps) {
      rows.push_back({{"j", g.j}, {"c_j", g.c_j}, {"gap", g.gap}});
      if (g.gap < 0.0) violations.push_back(g.j);
    }
    json out;
    out["c"] = rep.c;
    out["gaps"] = rows;
    out["violations"] = violations;
    emit(out_path, out.dump(2));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const argument_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const capability_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    nlohmann::json diag;
    diag["error"] = e.what();
    std::cerr << diag.dump() << '\n';
    return 3;
  }
}
