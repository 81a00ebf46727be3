#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "charbound/common.hpp"

namespace charbound {

/// Exact element of Q(i): real and imaginary parts are canonical rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long re, long im = 0) : re_(re), im_(im) {}

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational conj() const { return {re_, -im_}; }
  std::complex<Real> to_complex() const { return {to_real(re_), to_real(im_)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  GaussianRational& operator*=(const BigInt& k) {
    re_ *= k;
    im_ *= k;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator*(GaussianRational a, const BigInt& k) { return a *= k; }
  friend GaussianRational operator*(const BigInt& k, GaussianRational a) { return a *= k; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "re_num/re_den,im_num/im_den" (denominator omitted when it is 1).
  std::string to_string() const;

  /// Parses the two comma-separated rationals written by to_string.
  static GaussianRational parse(const std::string& re, const std::string& im);

 private:
  Rational re_;
  Rational im_;
};

using ApproxComplex = std::complex<Real>;

/// Operations the periodic-function and triangular-sum templates need from a
/// value type. Exact types compare exactly; approximate ones use guards.
template <class V>
struct ValueTraits;

template <>
struct ValueTraits<GaussianRational> {
  static constexpr bool exact = true;
  using Norm = Rational;
  static GaussianRational zero() { return {}; }
  static Norm norm(const GaussianRational& v) { return v.norm(); }
  static Real norm_real(const GaussianRational& v) { return to_real(v.norm()); }
  static GaussianRational scale(const GaussianRational& v, std::int64_t k) { return v * BigInt(static_cast<long>(k)); }
  static GaussianRational scale(const GaussianRational& v, const BigInt& k) { return v * k; }
  static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
  static ApproxComplex approx(const GaussianRational& v) { return v.to_complex(); }
};

template <>
struct ValueTraits<ApproxComplex> {
  static constexpr bool exact = false;
  using Norm = Real;
  static ApproxComplex zero() { return {}; }
  static Norm norm(const ApproxComplex& v) { return std::norm(v); }
  static Real norm_real(const ApproxComplex& v) { return std::norm(v); }
  static ApproxComplex scale(const ApproxComplex& v, std::int64_t k) { return v * static_cast<Real>(k); }
  static ApproxComplex scale(const ApproxComplex& v, const BigInt& k) { return v * to_real(k); }
  static bool is_zero(const ApproxComplex& v) { return v == ApproxComplex{}; }
  static ApproxComplex approx(const ApproxComplex& v) { return v; }
};

}  // namespace charbound
