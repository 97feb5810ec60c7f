#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycram/numeric.hpp"

namespace cycram {

inline constexpr Real kLambda = 0.017L;

/// (1 - delta)(1 - (7n/N')^lambda) p N'^2, clamped to 0 when N' <= 7n.
Real claim2_bound(Real nprime, Real n, Real p, Real delta, Real lambda = kLambda);

/// 20 (7n)^(lambda - 1) / 11 + 20 (1/11)^(2 - lambda) + (10/11)^(2 - lambda).
Real claim2_aa_value(Real n, Real lambda = kLambda);
/// The same expression without its first term (the n -> infinity limit).
Real claim2_aa_limit(Real lambda = kLambda);

struct Claim2Step {
  Real value_at_nprime = 0;  // 20 N'^(lambda - 1) / 11 + ... before using N' >= 7n
  Real value = 0;            // inequality (aa) at n
  Real margin = 0;           // 1 - value
  bool holds = false;        // value <= 1
};
Claim2Step claim2_step_check(Real nprime, Real n, Real lambda = kLambda);

/// Smallest integer n >= 1 for which (aa) holds; nullopt when the limit is >= 1.
std::optional<long long> claim2_min_n(Real lambda = kLambda);

struct AaScanRow {
  Real lambda = 0;
  Real limit = 0;
  Real margin = 0;  // 1 - limit
};
/// Limit margins at lo, lo + step, ..., up to hi (inclusive within step / 2).
std::vector<AaScanRow> claim2_scan(Real lo, Real hi, Real step);
int sign_changes(const std::vector<AaScanRow>& rows);

struct IneqAReport {
  int d = 59;
  int f = 2;
  Real lambda = kLambda;
  Real ln_r = 0;
  Real ln_n = 0;
  LogScalar lhs;     // (1 - sqrt(11(d+3)/(r^f ln r))) (1 - 7^lambda / r^(d lambda))
  LogScalar rhs;     // (1 - 1/r)(1 + n^(-1/4))
  LogScalar margin;  // lhs - rhs; positive is the contradiction the argument needs
  bool contradiction = false;
  Real delta = 0;    // sqrt(11(d+3)/(r^f ln r))
  bool delta_below_one = false;
  std::string note;
};

/// DomainError unless r >= 2 and n >= 2.
IneqAReport ineqA_check(Real r, Real n, int d = 59, int f = 2, Real lambda = kLambda);
/// Log-domain variant for astronomically large r and n.
IneqAReport ineqA_check_log(Real ln_r, Real ln_n, int d = 59, int f = 2, Real lambda = kLambda);

struct UpperConstant {
  LogScalar value;
  int exponent = 0;  // power of r
};
/// (1 + n^(-1/4)) r^(2d + f) ln^2 r.
UpperConstant even_upper_constant(Real r, Real n, int d = 59, int f = 2);
/// 2^(16 r^2) * 8 r^2.
LogScalar odd_upper_constant(int r);

/// (1 - delta) p u w.
Real hole_bound(Real u, Real w, Real p, Real delta);

/// sqrt(6 ln(c1 e / c3) / (c2 c3)) with c1 given by its natural log.
Real delta_threshold_log(Real ln_c1, Real c2, Real c3);

struct DeltaReport {
  std::string instance;
  Real ln_c1 = 0;
  Real c2 = 0;
  Real c3 = 0;
  Real threshold = 0;      // with the e / c3 correction
  Real coarse = 0;         // sqrt(6 ln c1 / (c2 c3)) as in the argument's chain
  Real delta = 0;          // chosen delta, 0 when the instance only asks for existence
  bool admissible = false; // a delta in (threshold, 1) exists, or the chosen one lies there
};
/// Odd construction: c1 = 2^(8 r^2), c2 = 8 r^2, c3 = 6 ln 2.
DeltaReport odd_delta_report(int r);
/// Even construction: c1 = r^d, c2 = r^f ln^2 r, c3 = 6/11, delta = sqrt(11(d+3)/(r^f ln r)).
DeltaReport even_delta_report(Real r, int d = 59, int f = 2);

struct RecursionCheck {
  int s = 0;
  Real lhs_log2 = 0;  // log2((1 - alpha) alpha^(s-2) 2^(8 s^2 - 1))
  Real rhs_log2 = 0;  // 8 (s - 1)^2
  bool holds = false;
};
/// (1 - alpha) alpha^(s-2) 2^(8s^2 - 1) >= 2^(8(s-1)^2) for s >= 2.
RecursionCheck peeling_recursion_check(int s, Real alpha = 0.033L);

}  // namespace cycram
