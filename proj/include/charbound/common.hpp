#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace charbound {

// 64-bit significand on x86-64 (x87 extended precision).
using Real = long double;

using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown when a caller violates a documented precondition. The CLI maps it
// to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Real to_real(const BigInt& z);
Real to_real(const Rational& r);

// Exact rational with the same value as a finite binary float.
Rational to_rational(Real x);

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - floor_div(a, b) * b;
}

// Formats with `digits` significant digits, '.' decimal separator regardless
// of the global locale.
std::string format_real(Real x, int digits = 10);

}  // namespace charbound
