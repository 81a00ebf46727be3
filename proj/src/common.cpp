#include "charbound/common.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace charbound {

Real to_real(const BigInt& z) {
  const mpz_srcptr raw = z.get_mpz_t();
  const std::size_t limbs = mpz_size(raw);
  Real acc = 0;
  for (std::size_t k = limbs; k-- > 0;) {
    acc = std::ldexp(acc, GMP_NUMB_BITS) + static_cast<Real>(mpz_getlimbn(raw, k));
  }
  return sgn(z) < 0 ? -acc : acc;
}

Real to_real(const Rational& r) {
  return to_real(BigInt(r.get_num())) / to_real(BigInt(r.get_den()));
}

Rational to_rational(Real x) {
  if (!std::isfinite(x)) throw UsageError("to_rational: non-finite value");
  int exponent = 0;
  Real mantissa = std::frexp(x, &exponent);
  // Shift the full 64-bit significand into an integer.
  constexpr int kDigits = std::numeric_limits<Real>::digits;
  mantissa = std::ldexp(mantissa, kDigits);
  exponent -= kDigits;
  const bool negative = mantissa < 0;
  Real magnitude = negative ? -mantissa : mantissa;
  BigInt integer = 0;
  // Split into two 32-bit halves; each half is exactly representable.
  const Real high = std::floor(std::ldexp(magnitude, -32));
  const Real low = magnitude - std::ldexp(high, 32);
  integer = BigInt(static_cast<unsigned long>(high));
  integer <<= 32;
  integer += static_cast<unsigned long>(low);
  if (negative) integer = -integer;
  Rational out(integer);
  if (exponent >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  out.canonicalize();
  return out;
}

std::string format_real(Real x, int digits) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  // printf-family conversions honour LC_NUMERIC; this binary never calls
  // setlocale, so the "C" locale and its '.' separator are in effect.
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

}  // namespace charbound
