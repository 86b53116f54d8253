#include "arcbeta/identities.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace arcbeta {

namespace {
constexpr double kLn2 = 0.69314718055994530942;
}

SupportInterval::SupportInterval(double r1, double r2) : r1_(r1), r2_(r2) {
  if (!(std::isfinite(r1) && std::isfinite(r2) && r1 < r2)) {
    throw std::domain_error("SupportInterval requires finite r1 < r2");
  }
}

const char* identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::kShiftedBeta: return "shifted-beta";
    case IdentityKind::kSplitUpper: return "split-upper";
    case IdentityKind::kSplitLower: return "split-lower";
    case IdentityKind::kHalfInterval: return "half-interval";
  }
  return "unknown";
}

double shifted_beta_integral_closed(const SupportInterval& iv, const ShapeParams& sp) {
  double s = sp.s(), t = sp.t();
  return std::exp((s + t - 1.0) * std::log(iv.width()) + log_beta(sp.s(), sp.t()));
}

double split_integral_upper_closed(const SupportInterval& iv, const ShapeParams& sp) {
  double s = sp.s(), t = sp.t();
  return std::exp(-kLn2 + (2.0 * s + t - 2.0) * std::log(0.5 * iv.width()) +
                  log_beta(sp.s(), PositiveReal{0.5 * t}));
}

double split_integral_lower_closed(const SupportInterval& iv, const ShapeParams& sp) {
  // Same quantity as the upper integral; evaluated through the same code
  // path so the two are bitwise identical.
  return split_integral_upper_closed(iv, sp);
}

double half_interval_beta_corrected(const ShapeParams& sp) {
  return beta(sp.s(), sp.t());
}

namespace {

// pow with the 0^0 = 1 convention so unit exponents cost nothing at the
// endpoints; base is always > 0 on interior nodes.
inline double powm1(double base, double exponent) {
  return exponent == 0.0 ? 1.0 : std::pow(base, exponent);
}

struct RawIntegral {
  OffsetIntegrand f;
  double a;
  double b;
  double scale;  // applied to the oracle before comparing to the closed form
};

RawIntegral raw_integral(IdentityKind kind, const SupportInterval& iv,
                         const ShapeParams& sp) {
  double s = sp.s(), t = sp.t();
  switch (kind) {
    case IdentityKind::kShiftedBeta:
      return {[s, t](double, double from_a, double to_b) {
                return powm1(from_a, s - 1.0) * powm1(to_b, t - 1.0);
              },
              iv.r1(), iv.r2(), 1.0};
    case IdentityKind::kSplitUpper: {
      // Integrand on (rbar, r2); x - r1 = (x - rbar) + (rbar - r1).
      double left_gap = iv.midpoint() - iv.r1();
      return {[s, t, left_gap](double, double from_a, double to_b) {
                return powm1(left_gap + from_a, s - 1.0) *
                       powm1(from_a, t - 1.0) * powm1(to_b, s - 1.0);
              },
              iv.midpoint(), iv.r2(), 1.0};
    }
    case IdentityKind::kSplitLower: {
      // Integrand on (r1, rbar); r2 - x = (rbar - x) + (r2 - rbar).
      double right_gap = iv.r2() - iv.midpoint();
      return {[s, t, right_gap](double, double from_a, double to_b) {
                return powm1(from_a, s - 1.0) * powm1(to_b, t - 1.0) *
                       powm1(right_gap + to_b, s - 1.0);
              },
              iv.r1(), iv.midpoint(), 1.0};
    }
    case IdentityKind::kHalfInterval:
      // int_0^{1/2} x^{s-1} (1/2-x)^{2t-1} (1-x)^{s-1} dx, scaled by
      // 2^{2s+2t-1}; 1 - x = (1/2 - x) + 1/2 on (0, 1/2).
      return {[s, t](double, double from_a, double to_b) {
                return powm1(from_a, s - 1.0) * powm1(to_b, 2.0 * t - 1.0) *
                       powm1(0.5 + to_b, s - 1.0);
              },
              0.0, 0.5, std::exp2(2.0 * s + 2.0 * t - 1.0)};
  }
  throw std::logic_error("unreachable identity kind");
}

double closed_value(IdentityKind kind, const SupportInterval& iv,
                    const ShapeParams& sp) {
  switch (kind) {
    case IdentityKind::kShiftedBeta: return shifted_beta_integral_closed(iv, sp);
    case IdentityKind::kSplitUpper: return split_integral_upper_closed(iv, sp);
    case IdentityKind::kSplitLower: return split_integral_lower_closed(iv, sp);
    case IdentityKind::kHalfInterval: return half_interval_beta_corrected(sp);
  }
  throw std::logic_error("unreachable identity kind");
}

}  // namespace

IdentityReport verify_identity(IdentityKind kind, const SupportInterval& iv,
                               const ShapeParams& sp, double rel_threshold) {
  if (!(rel_threshold > 0.0)) {
    throw std::domain_error("verify_identity requires rel_threshold > 0");
  }
  RawIntegral raw = raw_integral(kind, iv, sp);
  QuadratureEstimate oracle = integrate(raw.f, raw.a, raw.b);
  oracle.value *= raw.scale;
  oracle.abs_error_estimate *= raw.scale;

  IdentityReport report{kind, iv, sp, closed_value(kind, iv, sp), oracle};
  report.abs_diff = std::fabs(report.closed_value - oracle.value);
  report.rel_diff = report.abs_diff / std::fabs(report.closed_value);
  report.passed = report.abs_diff <=
                  std::fmax(rel_threshold * std::fabs(report.closed_value),
                            kIdentityAbsFloor);
  return report;
}

const std::vector<SupportInterval>& sweep_intervals() {
  static const std::vector<SupportInterval> intervals = {
      {0.0, 1.0}, {-1.0, 1.0}, {1.0, 3.0}, {-5.0, 2.0}};
  return intervals;
}

const std::vector<double>& sweep_shape_values() {
  static const std::vector<double> values = {0.3, 0.5, 1.0, 1.5, 2.5, 7.0};
  return values;
}

std::vector<IdentityReport> run_identity_sweep(IdentityKind kind,
                                               double rel_threshold) {
  std::vector<IdentityReport> reports;
  const auto& shapes = sweep_shape_values();
  if (kind == IdentityKind::kHalfInterval) {
    // The half-interval identity is already pinned to (0, 1/2); only the
    // shape pair varies.
    SupportInterval unit{0.0, 1.0};
    for (double s : shapes) {
      for (double t : shapes) {
        reports.push_back(verify_identity(kind, unit, {s, t}, rel_threshold));
      }
    }
    return reports;
  }
  for (const SupportInterval& iv : sweep_intervals()) {
    for (double s : shapes) {
      for (double t : shapes) {
        reports.push_back(verify_identity(kind, iv, {s, t}, rel_threshold));
      }
    }
  }
  if (kind == IdentityKind::kSplitUpper || kind == IdentityKind::kSplitLower) {
    // The two worked-example rows: 0.5 B(3/2,3/4) and 10 pi.
    reports.push_back(
        verify_identity(kind, {1.0, 3.0}, {1.5, 1.5}, rel_threshold));
    reports.push_back(
        verify_identity(kind, {-1.0, 3.0}, {0.5, 7.0}, rel_threshold));
  }
  return reports;
}

}  // namespace arcbeta
