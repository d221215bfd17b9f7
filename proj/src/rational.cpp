#include "structmat/rational.hpp"

#include <sstream>

#include "structmat/errors.hpp"

namespace structmat {

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // divides exactly: r is C(n-k+i, i) after this step
  }
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw argument_error("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw argument_error("malformed rational: " + text);
    return Rational{Int(num), Int(den)};
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(Int(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  bool negative = false;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits = digits.substr(1);
  }
  if (digits.empty()) throw argument_error("malformed decimal: " + text);
  Int num(digits);
  Int den = 1;
  for (size_t i = 0; i < text.size() - dot - 1; ++i) den *= 10;
  Rational r(num, den);
  return negative ? -r : r;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

}  // namespace structmat
