#ifndef XE_INTEGER_HPP
#define XE_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace xe {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

/// Raised when two objects built for different scroll parameters meet.
class ParameterMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an identity that must hold exactly (e.g. integrality of a
/// Riemann-Roch value) is violated.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class UnsupportedError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Binomial coefficient C(n, k) for integer n (zero when n < k or k < 0).
/// Only the non-negative-top branch is needed by the closed forms here.
inline Integer binomial(const Integer& n, long k) {
  if (k < 0 || n < k) return 0;
  Integer r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

/// Exact division that throws when the remainder is non-zero.
inline Integer exact_div(const Integer& num, long den, const char* what) {
  Integer q = num / den;
  if (q * den != num) {
    throw ConsistencyError(std::string(what) + ": " + num.str() + " is not divisible by " +
                           std::to_string(den));
  }
  return q;
}

inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace xe

#endif  // XE_INTEGER_HPP
