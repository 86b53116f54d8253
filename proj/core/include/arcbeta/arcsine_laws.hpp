#ifndef ARCBETA_ARCSINE_LAWS_HPP
#define ARCBETA_ARCSINE_LAWS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "arcbeta/distribution.hpp"

// Monte Carlo check of the third arcsine law: the fraction of time at which
// a symmetric random walk attains its running maximum converges in law to
// the standard arcsine distribution.

namespace arcbeta {

struct WalkConfig {
  std::int64_t steps = 1000;  // >= 2
  std::int64_t paths = 1;     // >= 1
  std::uint64_t seed = 0;
};

// For each path: a +/-1 walk of cfg.steps steps starting at 0, the FIRST
// index attaining the running maximum (index 0 included), returned as
// index/steps in [0, 1]. Each path draws from its own generator seeded with
// split_seed(cfg.seed, path), so results are reproducible regardless of how
// paths are partitioned across workers. Output is ordered by path index.
std::vector<double> simulate_argmax_fractions(const WalkConfig& cfg);

struct KsReport {
  double statistic = 0.0;       // sup |F_emp - F|
  std::int64_t n = 0;
  double critical_at_1pct = 0.0;  // 1.63 / sqrt(n), asymptotic
  bool passed = false;            // statistic < critical_at_1pct
};

// One-sample two-sided Kolmogorov-Smirnov statistic of the samples against
// dist's CDF. Throws std::domain_error on an empty sample set.
KsReport ks_against(std::span<const double> samples, const GeneralizedBetaDist& dist);

}  // namespace arcbeta

#endif  // ARCBETA_ARCSINE_LAWS_HPP
