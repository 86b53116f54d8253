#ifndef ARCBETA_DISTRIBUTION_HPP
#define ARCBETA_DISTRIBUTION_HPP

#include <cstdint>
#include <vector>

#include "arcbeta/identities.hpp"

// The generalized beta distribution on [r1, r2] with density proportional to
// (x-r1)^{s-1} (r2-x)^{t-1}. The s = t case is the generalized arcsine
// distribution; s = t = 1/2 on [0, 1] is the standard arcsine distribution.

namespace arcbeta {

class GeneralizedBetaDist {
 public:
  GeneralizedBetaDist(const SupportInterval& support, const ShapeParams& shape);

  const SupportInterval& support() const { return support_; }
  const ShapeParams& shape() const { return shape_; }

  // (s+t-1) ln(r2-r1) + ln B(s,t), cached at construction.
  double log_normalizer() const { return log_normalizer_; }

  bool is_generalized_arcsine() const;  // s == t
  bool is_standard_arcsine() const;     // s == t == 1/2 on [0, 1]

  // Density. Zero outside (r1, r2). At an endpoint the pointwise limit is
  // used: +inf when the local exponent is negative, the finite limit when it
  // is zero, and 0 when positive.
  double pdf(double x) const;
  double log_pdf(double x) const;  // -inf outside the support

  // I_{(x-r1)/(r2-r1)}(s,t), clamped to 0 below r1 and 1 above r2.
  double cdf(double x) const;

  // r1 + (r2-r1) * inv_reg_inc_beta(p, s, t); endpoints map to endpoints.
  double quantile(double p) const;

  // r1 + s/(s+t) (r2-r1); the midpoint when s = t.
  double mean() const;

  // Closed-form central moment, s = t only: 0 for odd k, and
  // (r2-r1)^{2n} B(s, n+1/2) / (2^{2s+2n-1} B(s,s)) for k = 2n, in log space.
  // Throws std::invalid_argument for s != t (use central_moment_numeric).
  double central_moment(int k) const;

  // (r2-r1)^{2n} (2n)! / (16^n (n!)^2), s = t = 1/2 only. n = 0 returns 1.
  double standard_arcsine_central_moment(int n) const;

  // Quadrature of int (x - mean)^k pdf(x) dx; works for any shape.
  double central_moment_numeric(int k) const;

  // n inverse-transform samples, strictly inside (r1, r2), deterministic for
  // a fixed seed (SplitMix64 driving quantile()). Concurrent callers must use
  // distinct seeds; the generator state is local to the call.
  std::vector<double> sample(std::int64_t n, std::uint64_t seed) const;

 private:
  SupportInterval support_;
  ShapeParams shape_;
  double log_normalizer_;
};

enum class MomentMethod { kClosed, kQuadrature };

struct MomentRow {
  int k;
  double mu_k;
  MomentMethod method;
};

// Rows k = 1..max_k; closed-form values when s = t, quadrature otherwise.
std::vector<MomentRow> moment_table(const GeneralizedBetaDist& dist, int max_k);

}  // namespace arcbeta

#endif  // ARCBETA_DISTRIBUTION_HPP
