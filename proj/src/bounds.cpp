#include "cycram/bounds.hpp"

#include <cmath>
#include <string>

#include "cycram/errors.hpp"

namespace cycram {

Real claim2_bound(Real nprime, Real n, Real p, Real delta, Real lambda) {
  if (nprime < 1 || n < 1) throw DomainError("claim2_bound needs N', n >= 1");
  if (nprime <= 7 * n) return 0;
  return (1 - delta) * (1 - std::pow(7 * n / nprime, lambda)) * p * nprime * nprime;
}

Real claim2_aa_limit(Real lambda) {
  return 20 * std::pow(1.0L / 11, 2 - lambda) + std::pow(10.0L / 11, 2 - lambda);
}

Real claim2_aa_value(Real n, Real lambda) {
  if (n < 1) throw DomainError("claim2_aa_value needs n >= 1");
  return 20 * std::pow(7 * n, lambda - 1) / 11 + claim2_aa_limit(lambda);
}

Claim2Step claim2_step_check(Real nprime, Real n, Real lambda) {
  if (nprime < 1 || n < 1) throw DomainError("claim2_step_check needs N', n >= 1");
  Claim2Step out;
  out.value_at_nprime = 20 * std::pow(nprime, lambda - 1) / 11 + claim2_aa_limit(lambda);
  out.value = claim2_aa_value(n, lambda);
  out.margin = 1 - out.value;
  out.holds = out.value <= 1;
  return out;
}

std::optional<long long> claim2_min_n(Real lambda) {
  if (!(lambda > 0 && lambda < 1)) throw DomainError("lambda must lie in (0, 1)");
  if (claim2_aa_limit(lambda) >= 1) return std::nullopt;
  long long hi = 1;
  while (claim2_aa_value(static_cast<Real>(hi), lambda) > 1) {
    if (hi > (1LL << 61)) return std::nullopt;
    hi *= 2;
  }
  long long lo = hi / 2;  // fails (or 0)
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    if (claim2_aa_value(static_cast<Real>(mid), lambda) <= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::vector<AaScanRow> claim2_scan(Real lo, Real hi, Real step) {
  if (!(step > 0) || hi < lo) throw DomainError("scan range needs lo <= hi and a positive step");
  std::vector<AaScanRow> rows;
  const long count = std::lround(static_cast<double>((hi - lo) / step));
  for (long k = 0; k <= count; ++k) {
    const Real lambda = lo + step * static_cast<Real>(k);
    const Real limit = claim2_aa_limit(lambda);
    rows.push_back({lambda, limit, 1 - limit});
  }
  return rows;
}

int sign_changes(const std::vector<AaScanRow>& rows) {
  int changes = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if ((rows[i - 1].margin > 0) != (rows[i].margin > 0)) ++changes;
  }
  return changes;
}

IneqAReport ineqA_check_log(Real ln_r, Real ln_n, int d, int f, Real lambda) {
  if (!(ln_r >= std::log(2.0L) - 1e-15L)) throw DomainError("ineqA_check needs r >= 2");
  if (!(ln_n >= std::log(2.0L) - 1e-15L)) throw DomainError("ineqA_check needs n >= 2");
  IneqAReport rep;
  rep.d = d;
  rep.f = f;
  rep.lambda = lambda;
  rep.ln_r = ln_r;
  rep.ln_n = ln_n;
  const LogScalar one = LogScalar::from(1);
  const Real ln_a = 0.5L * (std::log(11.0L * (d + 3)) - f * ln_r - std::log(ln_r));
  const LogScalar a = LogScalar::from_log(ln_a);
  const LogScalar b = LogScalar::from_log(lambda * std::log(7.0L) - d * lambda * ln_r);
  const LogScalar c = LogScalar::from_log(-ln_r);
  const LogScalar e = LogScalar::from_log(-ln_n / 4);
  rep.lhs = (one - a) * (one - b);
  rep.rhs = (one - c) * (one + e);
  rep.margin = rep.lhs - rep.rhs;
  rep.contradiction = rep.margin.sign() > 0;
  rep.delta = std::exp(ln_a);
  rep.delta_below_one = ln_a < 0;
  if (!rep.delta_below_one) {
    rep.note = "delta >= 1 at this r: the quasi-random lemma does not apply, comparison reported only";
  } else if (!rep.contradiction) {
    rep.note = "lhs <= rhs: no contradiction at this (r, n)";
  } else {
    rep.note = "lhs > rhs: contradiction obtained";
  }
  return rep;
}

IneqAReport ineqA_check(Real r, Real n, int d, int f, Real lambda) {
  if (!(r >= 2)) throw DomainError("ineqA_check needs r >= 2 (ln r must be positive)");
  if (!(n >= 2)) throw DomainError("ineqA_check needs n >= 2");
  return ineqA_check_log(std::log(r), std::log(n), d, f, lambda);
}

UpperConstant even_upper_constant(Real r, Real n, int d, int f) {
  if (!(r >= 2)) throw DomainError("even_upper_constant needs r >= 2");
  if (!(n >= 1)) throw DomainError("even_upper_constant needs n >= 1");
  const Real ln_r = std::log(r);
  const LogScalar factor = LogScalar::from(1) + LogScalar::from_log(-std::log(n) / 4);
  const LogScalar power = LogScalar::from_log((2 * d + f) * ln_r);
  const LogScalar ln2 = LogScalar::from_log(2 * std::log(ln_r));
  return {factor * power * ln2, 2 * d + f};
}

LogScalar odd_upper_constant(int r) {
  if (r < 2) throw DomainError("odd_upper_constant needs r >= 2");
  const Real rr = static_cast<Real>(r) * r;
  return LogScalar::from_log(16 * rr * std::log(2.0L)) * LogScalar::from(8 * rr);
}

Real hole_bound(Real u, Real w, Real p, Real delta) {
  if (u < 0 || w < 0) throw DomainError("hole_bound needs u, w >= 0");
  return (1 - delta) * p * u * w;
}

Real delta_threshold_log(Real ln_c1, Real c2, Real c3) {
  if (!(c2 > 0 && c3 > 0)) throw DomainError("delta threshold needs c2, c3 > 0");
  const Real inner = ln_c1 + 1 - std::log(c3);
  if (inner < 0) throw DomainError("delta threshold needs c1 e / c3 >= 1");
  return std::sqrt(6 * inner / (c2 * c3));
}

DeltaReport odd_delta_report(int r) {
  if (r < 2) throw DomainError("odd_delta_report needs r >= 2");
  DeltaReport rep;
  rep.instance = "odd r=" + std::to_string(r);
  const Real rr = static_cast<Real>(r) * r;
  rep.ln_c1 = 8 * rr * std::log(2.0L);
  rep.c2 = 8 * rr;
  rep.c3 = 6 * std::log(2.0L);
  rep.threshold = delta_threshold_log(rep.ln_c1, rep.c2, rep.c3);
  rep.coarse = std::sqrt(6 * rep.ln_c1 / (rep.c2 * rep.c3));
  rep.admissible = rep.threshold < 1;
  return rep;
}

DeltaReport even_delta_report(Real r, int d, int f) {
  if (!(r >= 2)) throw DomainError("even_delta_report needs r >= 2");
  DeltaReport rep;
  rep.instance = "even d=" + std::to_string(d) + " f=" + std::to_string(f);
  const Real ln_r = std::log(r);
  rep.ln_c1 = d * ln_r;
  rep.c2 = std::exp(f * ln_r) * ln_r * ln_r;
  rep.c3 = 6.0L / 11;
  rep.threshold = delta_threshold_log(rep.ln_c1, rep.c2, rep.c3);
  rep.coarse = std::sqrt(6 * rep.ln_c1 / (rep.c2 * rep.c3));
  rep.delta = std::sqrt(11.0L * (d + 3) / (std::exp(f * ln_r) * ln_r));
  rep.admissible = rep.delta > rep.threshold && rep.delta < 1;
  return rep;
}

RecursionCheck peeling_recursion_check(int s, Real alpha) {
  if (s < 2) throw DomainError("peeling recursion check needs s >= 2");
  if (!(alpha > 0 && alpha < 1)) throw DomainError("alpha must lie in (0, 1)");
  RecursionCheck rc;
  rc.s = s;
  const Real ss = static_cast<Real>(s);
  rc.lhs_log2 = std::log2(1 - alpha) + (ss - 2) * std::log2(alpha) + 8 * ss * ss - 1;
  rc.rhs_log2 = 8 * (ss - 1) * (ss - 1);
  rc.holds = rc.lhs_log2 >= rc.rhs_log2;
  return rc;
}

}  // namespace cycram
