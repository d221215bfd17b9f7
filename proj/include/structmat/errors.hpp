#ifndef STRUCTMAT_ERRORS_HPP_
#define STRUCTMAT_ERRORS_HPP_

#include <complex>
#include <stdexcept>
#include <string>

namespace structmat {

// Caller passed something outside an operation's contract.
class argument_error : public std::invalid_argument {
 public:
  explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// Request is well-formed but above a configured exhaustive limit.
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// Elimination hit a pivot below tolerance; index is 1-based.
class singular_error : public std::runtime_error {
 public:
  singular_error(const std::string& what, int pivot_index)
      : std::runtime_error(what), pivot_index(pivot_index) {}
  int pivot_index;
};

// An iterative numerical routine failed to converge or lost accuracy.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Symbol evaluated at (or too close to) one of its poles.
class pole_error : public std::runtime_error {
 public:
  pole_error(const std::string& what, std::complex<double> where)
      : std::runtime_error(what), where(where) {}
  std::complex<double> where;
};

}  // namespace structmat

#endif  // STRUCTMAT_ERRORS_HPP_
