#include <doctest.h>

#include <cmath>

#include "cycram/errors.hpp"
#include "cycram/numeric.hpp"

using namespace cycram;

TEST_CASE("LogScalar arithmetic") {
  const LogScalar a = LogScalar::from(6);
  const LogScalar b = LogScalar::from(-2);
  CHECK(static_cast<double>((a * b).to_real()) == doctest::Approx(-12));
  CHECK(static_cast<double>((a / b).to_real()) == doctest::Approx(-3));
  CHECK(static_cast<double>((a + b).to_real()) == doctest::Approx(4));
  CHECK(static_cast<double>((b - a).to_real()) == doctest::Approx(-8));
  CHECK((a - a).sign() == 0);
  CHECK(LogScalar::zero().sign() == 0);
  CHECK(b < a);
  CHECK(LogScalar::from(-5) < LogScalar::from(-1));
  CHECK_THROWS_AS(b.pow(0.5), DomainError);
  CHECK_THROWS_AS(LogScalar::zero().ln(), DomainError);
  CHECK(static_cast<double>(LogScalar::from(8).pow(1.0L / 3).to_real()) == doctest::Approx(2));
}

TEST_CASE("LogScalar round trip") {
  for (double x : {1e-300, 3.5e-12, 0.125, 1.0, 7.0, 123456.789, 6.02e23, 1e300}) {
    for (double s : {1.0, -1.0}) {
      const long double v = s * x;
      const long double back = LogScalar::from(v).to_real();
      CHECK(std::fabs(back - v) <= 1e-15L * std::fabs(v));
    }
  }
}

TEST_CASE("huge magnitudes") {
  // 2^(16*4) * 8 * 4
  const LogScalar c = LogScalar::from_log(64 * std::log(2.0L)) * LogScalar::from(32);
  CHECK(std::fabs(c.log_magnitude() - (64 * std::log(2.0L) + std::log(32.0L))) < 1e-15L);

  const long double ln_r = std::log(1e6L);
  const Expr e = pow(Expr(1e6), Expr(120)) * pow(ln(Expr(1e6)), Expr(2));
  const LogScalar v = e.eval();
  CHECK(v.sign() == 1);
  CHECK(std::isfinite(static_cast<double>(v.log_magnitude())));
  CHECK(std::fabs(v.log_magnitude() - (120 * ln_r + 2 * std::log(ln_r))) < 1e-12L);

  // 1 + 1e-300: the exponent is ln(1 + 1e-300) which is 1e-300 to all digits
  const LogScalar s = LogScalar::from(1) + LogScalar::from(1e-300L);
  CHECK(s.log_magnitude() > 0);
  CHECK(std::fabs(s.log_magnitude() / 1e-300L - 1) < 1e-15L);

  const LogScalar big = LogScalar::from_log(1e6);
  CHECK(std::fabs((big * big).log_magnitude() - 2e6L) < 1e-9L);
  CHECK(std::isinf(static_cast<double>(big.to_real())));
  CHECK(big.to_string(5).find("e+434294") != std::string::npos);
}

TEST_CASE("finite_diff") {
  auto linear = [](std::span<const double> p) { return 3 * p[0] - 2 * p[1] + 1; };
  const std::vector<double> at{0.7, -1.3};
  const auto g = finite_diff(linear, at, 1e-3);
  CHECK(g[0] == doctest::Approx(3).epsilon(1e-9));
  CHECK(g[1] == doctest::Approx(-2).epsilon(1e-9));

  auto quad = [](std::span<const double> p) { return p[0] * p[0]; };
  const std::vector<double> x{2.0};
  for (double h : {1e-1, 1e-2}) {
    CHECK(std::fabs(finite_diff(quad, x, h)[0] - 4) < 10 * h * h);
  }
}

TEST_CASE("tolerant rounding") {
  CHECK(ceil_tolerant(0.25 * 12) == 3);
  CHECK(ceil_tolerant(3.0000001) == 4);
  CHECK(ceil_tolerant(2.1) == 3);
  CHECK(floor_tolerant(0.1 * 30) == 3);
  CHECK(floor_tolerant(2.9999999999999) == 3);
  CHECK(floor_tolerant(2.9) == 2);
}
