#ifndef STRUCTMAT_REPORT_HPP_
#define STRUCTMAT_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "structmat/matrix.hpp"

namespace structmat {

// Where a membership test fails, the witness pins down a re-evaluatable
// violation: index sets plus the offending minor/entry values.
struct Witness {
  IndexSet rows;
  IndexSet cols;
  std::vector<Complex> values;
  std::string note;
};

struct ClassReport {
  std::string class_name;
  bool holds = false;
  std::optional<Witness> witness;  // present iff holds is false
  double tolerance_used = 0.0;     // 0 when the verdict was decided exactly
};

struct SpectrumReport {
  std::vector<Complex> eigenvalues;
  // min of the real spectrum; nullopt encodes the "min of empty set = +inf"
  // convention.
  std::optional<double> min_real_eigenvalue;
  bool positive_stable = false;
  double min_real_part = 0.0;
  double kellogg_margin = 0.0;  // pi - pi/n - max |arg lambda|
};

std::string to_json(const ClassReport& r);
std::string to_json(const SpectrumReport& r);

// Matrix file format: {"order": n, "entries": [...]} row-major, entries
// either [re, im] or exact {"num": p, "den": q}.
DenseMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const DenseMatrix& a);

std::string format_double(double v);  // shortest round-trip decimal

}  // namespace structmat

#endif  // STRUCTMAT_REPORT_HPP_
