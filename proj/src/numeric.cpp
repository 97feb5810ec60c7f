#include "cycram/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <variant>

#include "cycram/errors.hpp"

namespace cycram {
namespace {

constexpr Real kNegInf = -std::numeric_limits<Real>::infinity();

}  // namespace

LogScalar LogScalar::from(Real x) {
  if (std::isnan(x)) throw DomainError("LogScalar from NaN");
  if (x == 0) return {};
  return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
}

LogScalar LogScalar::from_log(Real log_magnitude, int sign) {
  if (std::isnan(log_magnitude)) throw DomainError("LogScalar from NaN log magnitude");
  if (sign == 0 || log_magnitude == kNegInf) return {};
  return {sign > 0 ? 1 : -1, log_magnitude};
}

Real LogScalar::to_real() const {
  if (sign_ == 0) return 0;
  return static_cast<Real>(sign_) * std::exp(log_mag_);
}

Real LogScalar::log10_magnitude() const { return log_mag_ / std::log(static_cast<Real>(10)); }

std::string LogScalar::to_string(int digits) const {
  if (sign_ == 0) return "0";
  const Real l10 = log10_magnitude();
  Real exponent = std::floor(l10);
  Real mantissa = std::pow(static_cast<Real>(10), l10 - exponent);
  // Rounding the mantissa can carry into the next decade.
  const Real scale = std::pow(static_cast<Real>(10), digits - 1);
  if (std::round(mantissa * scale) >= 10 * scale) {
    mantissa /= 10;
    exponent += 1;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s%.*Lfe%+.0Lf", sign_ < 0 ? "-" : "", digits - 1, mantissa,
                exponent);
  return buf;
}

LogScalar LogScalar::operator-() const { return {-sign_, log_mag_}; }

LogScalar operator*(const LogScalar& a, const LogScalar& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return {};
  return {a.sign_ * b.sign_, a.log_mag_ + b.log_mag_};
}

LogScalar operator/(const LogScalar& a, const LogScalar& b) {
  if (b.sign_ == 0) throw DomainError("division by zero");
  if (a.sign_ == 0) return {};
  return {a.sign_ * b.sign_, a.log_mag_ - b.log_mag_};
}

LogScalar operator+(const LogScalar& a, const LogScalar& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  const bool a_larger = a.log_mag_ >= b.log_mag_;
  const LogScalar& hi = a_larger ? a : b;
  const LogScalar& lo = a_larger ? b : a;
  const Real d = lo.log_mag_ - hi.log_mag_;  // <= 0
  if (hi.sign_ == lo.sign_) return {hi.sign_, hi.log_mag_ + std::log1p(std::exp(d))};
  if (d == 0) return {};
  // log(1 - e^d): expm1 keeps precision when d is close to zero
  const Real diff = d > -0.6931471805599453L ? std::log(-std::expm1(d)) : std::log1p(-std::exp(d));
  return {hi.sign_, hi.log_mag_ + diff};
}

bool operator<(const LogScalar& a, const LogScalar& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  if (a.sign_ == 0) return false;
  return a.sign_ > 0 ? a.log_mag_ < b.log_mag_ : a.log_mag_ > b.log_mag_;
}

LogScalar LogScalar::pow(Real exponent) const {
  if (sign_ < 0) throw DomainError("real power of a negative value");
  if (sign_ == 0) {
    if (exponent > 0) return {};
    throw DomainError("non-positive power of zero");
  }
  return {1, log_mag_ * exponent};
}

LogScalar LogScalar::ln() const {
  if (sign_ <= 0) throw DomainError("logarithm of a non-positive value");
  return from(log_mag_);
}

struct Expr::Node {
  enum class Op { leaf, add, mul, pow, ln };
  Op op = Op::leaf;
  LogScalar value;
  std::shared_ptr<const Node> lhs, rhs;
};

Expr::Expr(LogScalar value)
    : node_(std::make_shared<const Node>(Node{Node::Op::leaf, value, nullptr, nullptr})) {}

Expr::Expr(Real value) : Expr(LogScalar::from(value)) {}

Expr operator+(Expr a, Expr b) {
  return Expr(std::make_shared<const Expr::Node>(
      Expr::Node{Expr::Node::Op::add, {}, std::move(a.node_), std::move(b.node_)}));
}

Expr operator*(Expr a, Expr b) {
  return Expr(std::make_shared<const Expr::Node>(
      Expr::Node{Expr::Node::Op::mul, {}, std::move(a.node_), std::move(b.node_)}));
}

Expr pow(Expr base, Expr exponent) {
  return Expr(std::make_shared<const Expr::Node>(
      Expr::Node{Expr::Node::Op::pow, {}, std::move(base.node_), std::move(exponent.node_)}));
}

Expr ln(Expr arg) {
  return Expr(std::make_shared<const Expr::Node>(
      Expr::Node{Expr::Node::Op::ln, {}, std::move(arg.node_), nullptr}));
}

LogScalar Expr::eval() const {
  std::function<LogScalar(const Node&)> walk = [&](const Node& n) -> LogScalar {
    switch (n.op) {
      case Node::Op::leaf:
        return n.value;
      case Node::Op::add:
        return walk(*n.lhs) + walk(*n.rhs);
      case Node::Op::mul:
        return walk(*n.lhs) * walk(*n.rhs);
      case Node::Op::pow: {
        const LogScalar exponent = walk(*n.rhs);
        const Real e = exponent.to_real();
        if (!std::isfinite(e)) throw DomainError("exponent not representable as a real");
        return walk(*n.lhs).pow(e);
      }
      case Node::Op::ln:
        return walk(*n.lhs).ln();
    }
    return {};
  };
  return walk(*node_);
}

std::vector<double> finite_diff(const std::function<double(std::span<const double>)>& fn,
                                std::span<const double> point, double step) {
  std::vector<double> x(point.begin(), point.end());
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double saved = x[i];
    x[i] = saved + step;
    const double up = fn(x);
    x[i] = saved - step;
    const double down = fn(x);
    x[i] = saved;
    grad[i] = (up - down) / (2 * step);
  }
  return grad;
}

long ceil_tolerant(double x) {
  const double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x))) return static_cast<long>(r);
  return static_cast<long>(std::ceil(x));
}

long floor_tolerant(double x) {
  const double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x))) return static_cast<long>(r);
  return static_cast<long>(std::floor(x));
}

}  // namespace cycram
