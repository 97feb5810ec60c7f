#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cycram {

/// Extended precision (x87 80-bit on the supported toolchains) for margins.
using Real = long double;

/// Signed real stored as (sign, ln |x|). Products and powers never overflow
/// for magnitudes up to e^(1e4000); sums use log-sum-exp.
class LogScalar {
 public:
  LogScalar() = default;  // zero

  static LogScalar zero() { return {}; }
  static LogScalar from(Real x);
  static LogScalar from_log(Real log_magnitude, int sign = 1);

  int sign() const noexcept { return sign_; }
  /// -inf exactly when sign() == 0.
  Real log_magnitude() const noexcept { return log_mag_; }
  /// Overflows to ±inf or underflows to 0 when outside Real's range.
  Real to_real() const;
  /// log10 |x|; -inf for zero.
  Real log10_magnitude() const;
  /// Scientific notation with the given number of significant digits, safe for any magnitude.
  std::string to_string(int digits = 15) const;

  LogScalar operator-() const;
  friend LogScalar operator*(const LogScalar& a, const LogScalar& b);
  friend LogScalar operator/(const LogScalar& a, const LogScalar& b);
  friend LogScalar operator+(const LogScalar& a, const LogScalar& b);
  friend LogScalar operator-(const LogScalar& a, const LogScalar& b) { return a + (-b); }

  /// Real power of a non-negative value; DomainError for a negative base.
  LogScalar pow(Real exponent) const;
  /// Natural log as a LogScalar; DomainError for non-positive values.
  LogScalar ln() const;

  friend bool operator==(const LogScalar& a, const LogScalar& b) {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.log_mag_ == b.log_mag_);
  }
  friend bool operator<(const LogScalar& a, const LogScalar& b);
  friend bool operator>(const LogScalar& a, const LogScalar& b) { return b < a; }

 private:
  LogScalar(int sign, Real log_mag) : sign_(sign), log_mag_(log_mag) {}

  int sign_ = 0;
  Real log_mag_ = -std::numeric_limits<Real>::infinity();
};

/// Expression tree over +, ×, pow and ln, evaluated in the log domain.
class Expr {
 public:
  Expr(LogScalar value);  // NOLINT(google-explicit-constructor)
  Expr(Real value);       // NOLINT(google-explicit-constructor)
  Expr(double value) : Expr(static_cast<Real>(value)) {}  // NOLINT
  Expr(int value) : Expr(static_cast<Real>(value)) {}     // NOLINT

  friend Expr operator+(Expr a, Expr b);
  friend Expr operator*(Expr a, Expr b);
  friend Expr pow(Expr base, Expr exponent);
  friend Expr ln(Expr arg);

  LogScalar eval() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline LogScalar log_eval(const Expr& e) { return e.eval(); }

/// Central-difference gradient of fn at point.
std::vector<double> finite_diff(const std::function<double(std::span<const double>)>& fn,
                                std::span<const double> point, double step);

/// Smallest integer k with k >= x, treating x within 1e-9 of an integer as
/// that integer (so 0.25 * 12 gives 3, not 4).
long ceil_tolerant(double x);
/// Largest integer k with k <= x, with the same tolerance.
long floor_tolerant(double x);

}  // namespace cycram
