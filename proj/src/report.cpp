#include "structmat/report.hpp"

#include <charconv>

#include <json.hpp>

#include "structmat/errors.hpp"

namespace structmat {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

json complex_json(Complex v) { return json::array({v.real(), v.imag()}); }

json index_set_json(const IndexSet& s) {
  json a = json::array();
  for (int v : s.indices) a.push_back(v);
  return a;
}

}  // namespace

std::string to_json(const ClassReport& r) {
  json j;
  j["class"] = r.class_name;
  j["holds"] = r.holds;
  if (r.witness) {
    json w;
    w["rows"] = index_set_json(r.witness->rows);
    w["cols"] = index_set_json(r.witness->cols);
    json vals = json::array();
    for (Complex v : r.witness->values) vals.push_back(complex_json(v));
    w["values"] = vals;
    if (!r.witness->note.empty()) w["note"] = r.witness->note;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["tolerance"] = r.tolerance_used;
  return j.dump();
}

std::string to_json(const SpectrumReport& r) {
  json j;
  json eigs = json::array();
  for (Complex l : r.eigenvalues) eigs.push_back(complex_json(l));
  j["eigenvalues"] = eigs;
  if (r.min_real_eigenvalue)
    j["min_real_eigenvalue"] = *r.min_real_eigenvalue;
  else
    j["min_real_eigenvalue"] = nullptr;  // min of empty set = +inf
  j["positive_stable"] = r.positive_stable;
  j["min_real_part"] = r.min_real_part;
  j["kellogg_margin"] = r.kellogg_margin;
  return j.dump();
}

DenseMatrix matrix_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("order") || !j.contains("entries"))
    throw argument_error("matrix JSON needs `order` and `entries`");
  const int n = j["order"].get<int>();
  const auto& entries = j["entries"];
  if (static_cast<int>(entries.size()) != n * n)
    throw argument_error("entry count does not match order");
  bool all_exact = true;
  for (const auto& e : entries)
    if (!e.is_object()) all_exact = false;
  if (all_exact) {
    std::vector<Rational> vals;
    vals.reserve(entries.size());
    for (const auto& e : entries) {
      const Int num(e.at("num").is_string() ? e.at("num").get<std::string>()
                                            : std::to_string(e.at("num").get<long long>()));
      const Int den(e.at("den").is_string() ? e.at("den").get<std::string>()
                                            : std::to_string(e.at("den").get<long long>()));
      if (den == 0) throw argument_error("zero denominator in matrix JSON");
      vals.emplace_back(num, den);
    }
    return DenseMatrix::from_exact(n, std::move(vals));
  }
  DenseMatrix a(n);
  int i = 1, col = 1;
  for (const auto& e : entries) {
    Complex v;
    if (e.is_array()) {
      if (e.size() != 2) throw argument_error("complex entry must be [re, im]");
      v = Complex(e[0].get<double>(), e[1].get<double>());
    } else if (e.is_number()) {
      v = Complex(e.get<double>(), 0.0);
    } else if (e.is_object()) {
      const double num = e.at("num").is_string()
                             ? std::stod(e.at("num").get<std::string>())
                             : e.at("num").get<double>();
      const double den = e.at("den").is_string()
                             ? std::stod(e.at("den").get<std::string>())
                             : e.at("den").get<double>();
      v = Complex(num / den, 0.0);
    } else {
      throw argument_error("unsupported matrix entry");
    }
    a.set(i, col, v);
    if (++col > n) {
      col = 1;
      ++i;
    }
  }
  return a;
}

std::string matrix_to_json(const DenseMatrix& a) {
  json j;
  j["order"] = a.order();
  json entries = json::array();
  for (int i = 1; i <= a.order(); ++i)
    for (int col = 1; col <= a.order(); ++col) {
      if (a.has_exact()) {
        const Rational& r = a.exact_at(i, col);
        json e;
        e["num"] = numerator(r).str();
        e["den"] = denominator(r).str();
        entries.push_back(e);
      } else {
        entries.push_back(complex_json(a.at(i, col)));
      }
    }
  j["entries"] = entries;
  return j.dump();
}

}  // namespace structmat
