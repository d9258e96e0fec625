#pragma once

#include <stdexcept>
#include <string>

namespace dwt {

/// Thrown when a LogScalar is too large or too small to become a double.
class LogScalarRangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// A real number stored as sign and natural-log magnitude.
///
/// Tunneling splittings and periods in the Fock regime span hundreds of
/// decades (10^-636 .. 10^635), far outside double range. Products, quotients
/// and powers are exact in log space; sums use log-sum-exp.
class LogScalar {
 public:
  /// Zero.
  constexpr LogScalar() = default;

  static LogScalar from_double(double x);
  /// sign * exp(ln_magnitude); sign must be -1, 0 or +1.
  static LogScalar from_log(double ln_magnitude, int sign = 1);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  /// Natural log of |x|. Meaningless for zero.
  double ln_magnitude() const { return ln_magnitude_; }
  double log10_magnitude() const;

  /// Converts to double; throws LogScalarRangeError when |ln x| >= 700.
  double to_double() const;

  /// Mantissa in [1, 10) and decimal exponent, for display of huge values.
  struct Scientific {
    double mantissa;
    long exponent;
  };
  Scientific scientific() const;
  /// e.g. "1.15e+635"
  std::string to_string(int significant_digits = 3) const;

  LogScalar operator-() const;
  LogScalar& operator*=(const LogScalar& rhs);
  LogScalar& operator/=(const LogScalar& rhs);
  LogScalar& operator+=(const LogScalar& rhs);
  LogScalar& operator-=(const LogScalar& rhs);

  friend LogScalar operator*(LogScalar lhs, const LogScalar& rhs) { return lhs *= rhs; }
  friend LogScalar operator/(LogScalar lhs, const LogScalar& rhs) { return lhs /= rhs; }
  friend LogScalar operator+(LogScalar lhs, const LogScalar& rhs) { return lhs += rhs; }
  friend LogScalar operator-(LogScalar lhs, const LogScalar& rhs) { return lhs -= rhs; }

  LogScalar pow(double exponent) const;
  LogScalar abs() const;
  LogScalar inverse() const;

  friend bool operator==(const LogScalar& a, const LogScalar& b) {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.ln_magnitude_ == b.ln_magnitude_);
  }
  friend bool operator<(const LogScalar& a, const LogScalar& b);

 private:
  int sign_ = 0;
  double ln_magnitude_ = 0.0;
};

/// Largest |ln x| that to_double() accepts.
inline constexpr double kLogScalarDoubleLimit = 700.0;

}  // namespace dwt
