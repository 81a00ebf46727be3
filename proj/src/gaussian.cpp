#include "charbound/gaussian.hpp"

namespace charbound {

namespace {

Rational parse_rational(const std::string& text) {
  Rational out;
  if (text.empty() || out.set_str(text, 10) != 0 || sgn(out.get_den()) == 0) {
    throw UsageError("malformed rational: '" + text + "'");
  }
  out.canonicalize();
  return out;
}

}  // namespace

std::string GaussianRational::to_string() const { return re_.get_str() + "," + im_.get_str(); }

GaussianRational GaussianRational::parse(const std::string& re, const std::string& im) {
  return {parse_rational(re), parse_rational(im)};
}

}  // namespace charbound
