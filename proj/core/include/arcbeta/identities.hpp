#ifndef ARCBETA_IDENTITIES_HPP
#define ARCBETA_IDENTITIES_HPP

#include <string>
#include <vector>

#include "arcbeta/quadrature.hpp"
#include "arcbeta/special_functions.hpp"

// Closed-form evaluators for the shifted and split beta-type integrals on a
// bounded interval [r1, r2], plus a harness that checks each closed form
// against the quadrature oracle.

namespace arcbeta {

// The bounded support [r1, r2], r1 < r2, both finite.
class SupportInterval {
 public:
  SupportInterval(double r1, double r2);

  double r1() const { return r1_; }
  double r2() const { return r2_; }
  double width() const { return r2_ - r1_; }
  double midpoint() const { return 0.5 * (r1_ + r2_); }

 private:
  double r1_;
  double r2_;
};

// The beta exponent pair (s, t), both strictly positive.
class ShapeParams {
 public:
  ShapeParams(double s, double t) : s_(s), t_(t) {}

  PositiveReal s() const { return s_; }
  PositiveReal t() const { return t_; }

 private:
  PositiveReal s_;
  PositiveReal t_;
};

enum class IdentityKind {
  kShiftedBeta,   // int_{r1}^{r2} (x-r1)^{s-1} (r2-x)^{t-1} dx
  kSplitUpper,    // int_{rbar}^{r2} (x-r1)^{s-1} (x-rbar)^{t-1} (r2-x)^{s-1} dx
  kSplitLower,    // int_{r1}^{rbar} (x-r1)^{s-1} (rbar-x)^{t-1} (r2-x)^{s-1} dx
  kHalfInterval,  // 2^{2s+2t-1} int_0^{1/2} x^{s-1} (1/2-x)^{2t-1} (1-x)^{s-1} dx
};

const char* identity_name(IdentityKind kind);

// Closed value of the shifted integral: (r2-r1)^{s+t-1} B(s,t).
double shifted_beta_integral_closed(const SupportInterval& iv, const ShapeParams& sp);

// Closed value of the upper split integral: (1/2) ((r2-r1)/2)^{2s+t-2} B(s, t/2).
double split_integral_upper_closed(const SupportInterval& iv, const ShapeParams& sp);

// The lower split integral equals the upper one; same expression.
double split_integral_lower_closed(const SupportInterval& iv, const ShapeParams& sp);

// The half-interval identity holds only with the prefactor 2^{2s+2t-1}; with
// it the closed value reduces to B(s,t), which is what this returns. The
// verification harness scales the raw quadrature by the prefactor.
double half_interval_beta_corrected(const ShapeParams& sp);

struct IdentityReport {
  IdentityKind identity;
  SupportInterval interval;
  ShapeParams shape;
  double closed_value = 0.0;
  QuadratureEstimate oracle;  // scaled to the closed form's normalization
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  bool passed = false;
};

// Absolute floor applied when the compared value is near zero.
constexpr double kIdentityAbsFloor = 1e-12;

// Evaluates the named closed form and its raw integral via the quadrature
// oracle. Never throws on mismatch (passed = false instead); quadrature
// convergence failure propagates as ConvergenceError.
IdentityReport verify_identity(IdentityKind kind, const SupportInterval& iv,
                               const ShapeParams& sp, double rel_threshold);

// The standard verification grid: 4 intervals x 36 shape pairs.
const std::vector<SupportInterval>& sweep_intervals();
const std::vector<double>& sweep_shape_values();

// Runs the full grid for one identity. The split sweeps also include the two
// worked-example rows ([1,3] s=t=3/2 and [-1,3] s=1/2 t=7).
std::vector<IdentityReport> run_identity_sweep(IdentityKind kind, double rel_threshold);

}  // namespace arcbeta

#endif  // ARCBETA_IDENTITIES_HPP
