#ifndef ARCBETA_QUADRATURE_HPP
#define ARCBETA_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>

// Numerical-integration oracle for finite intervals, tolerant of power-law
// endpoint singularities x^alpha with alpha > -1. Tanh-sinh (double
// exponential) transformation with level doubling; nodes are strictly
// interior, so integrands may be unbounded at the endpoints.

namespace arcbeta {

struct QuadratureEstimate {
  double value = 0.0;
  double abs_error_estimate = 0.0;  // last successive-level difference
  std::int64_t evaluations = 0;
};

// Thrown when the level budget is exhausted before the tolerance is met.
// Carries the best estimate reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadratureEstimate best)
      : std::runtime_error(what), best_(best) {}
  const QuadratureEstimate& best_estimate() const { return best_; }

 private:
  QuadratureEstimate best_;
};

// Integrand receiving, besides the abscissa x, the distances from_a = x - a
// and to_b = b - x computed to full relative precision. Integrands with
// endpoint singularities should build their singular factors from the
// distances; x itself loses precision next to a nonzero endpoint.
using OffsetIntegrand = std::function<double(double x, double from_a, double to_b)>;

constexpr double kDefaultQuadTol = 1e-12;
constexpr int kMaxQuadLevel = 12;

// Integrates f over (a, b). Stops when two successive refinement levels agree
// to tol * max(1, |value|) and reports that difference as the error estimate.
// Deterministic for fixed inputs. Throws ConvergenceError past level 12.
QuadratureEstimate integrate(const OffsetIntegrand& f, double a, double b,
                             double tol = kDefaultQuadTol);

// Plain-integrand convenience overload.
QuadratureEstimate integrate(const std::function<double(double)>& f, double a,
                             double b, double tol = kDefaultQuadTol);

}  // namespace arcbeta

#endif  // ARCBETA_QUADRATURE_HPP
