#include "dwt/log_scalar.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace dwt {

LogScalar LogScalar::from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("LogScalar::from_double: non-finite value");
  }
  LogScalar r;
  if (x == 0.0) return r;
  r.sign_ = x > 0 ? 1 : -1;
  r.ln_magnitude_ = std::log(std::fabs(x));
  return r;
}

LogScalar LogScalar::from_log(double ln_magnitude, int sign) {
  if (sign < -1 || sign > 1) {
    throw std::invalid_argument("LogScalar::from_log: sign must be -1, 0 or +1");
  }
  LogScalar r;
  if (sign == 0) return r;
  if (std::isnan(ln_magnitude)) {
    throw std::invalid_argument("LogScalar::from_log: NaN magnitude");
  }
  if (ln_magnitude == -std::numeric_limits<double>::infinity()) return r;
  r.sign_ = sign;
  r.ln_magnitude_ = ln_magnitude;
  return r;
}

double LogScalar::log10_magnitude() const { return ln_magnitude_ / std::numbers::ln10; }

double LogScalar::to_double() const {
  if (sign_ == 0) return 0.0;
  if (std::fabs(ln_magnitude_) >= kLogScalarDoubleLimit) {
    throw LogScalarRangeError("LogScalar " + to_string() + " is outside double range");
  }
  return sign_ * std::exp(ln_magnitude_);
}

LogScalar::Scientific LogScalar::scientific() const {
  if (sign_ == 0) return {0.0, 0};
  const double l10 = log10_magnitude();
  double exponent = std::floor(l10);
  double mantissa = std::pow(10.0, l10 - exponent);
  if (mantissa >= 10.0) {  // rounding at the decade boundary
    mantissa /= 10.0;
    exponent += 1.0;
  }
  return {sign_ * mantissa, static_cast<long>(exponent)};
}

std::string LogScalar::to_string(int significant_digits) const {
  if (sign_ == 0) return "0";
  const Scientific s = scientific();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*fe%+ld", significant_digits > 0 ? significant_digits - 1 : 0,
                s.mantissa, s.exponent);
  return buf;
}

LogScalar LogScalar::operator-() const {
  LogScalar r = *this;
  r.sign_ = -r.sign_;
  return r;
}

LogScalar& LogScalar::operator*=(const LogScalar& rhs) {
  if (sign_ == 0 || rhs.sign_ == 0) {
    *this = LogScalar();
    return *this;
  }
  sign_ *= rhs.sign_;
  ln_magnitude_ += rhs.ln_magnitude_;
  return *this;
}

LogScalar& LogScalar::operator/=(const LogScalar& rhs) {
  if (rhs.sign_ == 0) throw std::domain_error("LogScalar division by zero");
  if (sign_ == 0) return *this;
  sign_ *= rhs.sign_;
  ln_magnitude_ -= rhs.ln_magnitude_;
  return *this;
}

LogScalar& LogScalar::operator+=(const LogScalar& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = rhs;
    return *this;
  }
  const bool this_larger = ln_magnitude_ >= rhs.ln_magnitude_;
  const LogScalar& big = this_larger ? *this : rhs;
  const LogScalar& small = this_larger ? rhs : *this;
  const double ratio = std::exp(small.ln_magnitude_ - big.ln_magnitude_);  // in [0, 1]
  LogScalar r;
  if (big.sign_ == small.sign_) {
    r.sign_ = big.sign_;
    r.ln_magnitude_ = big.ln_magnitude_ + std::log1p(ratio);
  } else {
    if (ratio == 1.0) {
      *this = LogScalar();
      return *this;
    }
    r.sign_ = big.sign_;
    r.ln_magnitude_ = big.ln_magnitude_ + std::log1p(-ratio);
  }
  *this = r;
  return *this;
}

LogScalar& LogScalar::operator-=(const LogScalar& rhs) { return *this += -rhs; }

LogScalar LogScalar::pow(double exponent) const {
  if (sign_ == 0) {
    if (exponent <= 0) throw std::domain_error("LogScalar: zero to a non-positive power");
    return LogScalar();
  }
  if (sign_ < 0 && exponent != std::floor(exponent)) {
    throw std::domain_error("LogScalar: negative base with non-integer exponent");
  }
  LogScalar r;
  r.ln_magnitude_ = ln_magnitude_ * exponent;
  r.sign_ = 1;
  if (sign_ < 0 && std::fmod(std::fabs(exponent), 2.0) == 1.0) r.sign_ = -1;
  return r;
}

LogScalar LogScalar::abs() const {
  LogScalar r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

LogScalar LogScalar::inverse() const { return LogScalar::from_log(0.0) / *this; }

bool operator<(const LogScalar& a, const LogScalar& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  if (a.sign_ == 0) return false;
  return a.sign_ > 0 ? a.ln_magnitude_ < b.ln_magnitude_ : a.ln_magnitude_ > b.ln_magnitude_;
}

}  // namespace dwt
