#pragma once

#include <cstdint>
#include <vector>

#include "wgorder/baseline.hpp"

namespace wgorder {

/// W-G(alpha, beta, gamma) over a baseline F:
///   G(x) = 1 - exp(-alpha * w(gamma x)^beta),   w = F / (1 - F).
/// beta = 1 is the Exponential-G special case.
struct WeibullGParams {
  double alpha;
  double beta;
  double gamma;
  BaselineModel baseline;

  WeibullGParams(double alpha, double beta, double gamma, BaselineModel baseline);

  OddsFunction odds() const { return OddsFunction(baseline, gamma); }

  friend bool operator==(const WeibullGParams&, const WeibullGParams&) = default;
};

struct FlaggedProbability {
  double value;
  bool saturated;
};

double wg_cdf(const WeibullGParams& p, double x);
/// Same as wg_cdf but clamps to 1 and raises the flag when the odds saturate.
FlaggedProbability wg_cdf_flagged(const WeibullGParams& p, double x);
double wg_survival(const WeibullGParams& p, double x);
/// alpha * w(gamma x)^beta, i.e. -ln of the survival.
double wg_cumulative_hazard(const WeibullGParams& p, double x);
double wg_pdf(const WeibullGParams& p, double x);
/// alpha gamma beta w(gamma x)^(beta-1) w'(gamma x). Returns +inf (never NaN)
/// where w^(beta-1) diverges, i.e. beta < 1 at x = 0.
double wg_hazard(const WeibullGParams& p, double x);
double wg_quantile(const WeibullGParams& p, double u);
/// The x with survival(x) = exp(log_survival); log_survival <= 0.
double wg_survival_inverse_log(const WeibullGParams& p, double log_survival);
/// Inverse-transform draws from Rng(seed).
std::vector<double> wg_sample(const WeibullGParams& p, std::uint64_t seed, std::size_t count);

}  // namespace wgorder
