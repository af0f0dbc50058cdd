#include "wgorder/weibull_g.hpp"

#include <cmath>
#include <limits>

#include "wgorder/error.hpp"
#include "wgorder/random.hpp"

namespace wgorder {
namespace {

void require_argument(double x) {
  if (!(x >= 0.0)) throw DomainError("W-G argument must be >= 0, got " + std::to_string(x));
}

// w^e, with 0^0 = 1 and 0^(negative) = +inf.
double odds_power(double w, double e) {
  if (w == 0.0) return e == 0.0 ? 1.0 : (e > 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  return std::pow(w, e);
}

}  // namespace

WeibullGParams::WeibullGParams(double alpha_, double beta_, double gamma_, BaselineModel baseline_)
    : alpha(alpha_), beta(beta_), gamma(gamma_), baseline(std::move(baseline_)) {
  for (auto [v, name] : {std::pair{alpha, "alpha"}, std::pair{beta, "beta"}, std::pair{gamma, "gamma"}}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ParameterError(std::string("W-G parameter ") + name + " must be positive, got " + std::to_string(v));
    }
  }
}

double wg_cumulative_hazard(const WeibullGParams& p, double x) {
  require_argument(x);
  return p.alpha * odds_power(p.odds()(x), p.beta);
}

double wg_cdf(const WeibullGParams& p, double x) { return -std::expm1(-wg_cumulative_hazard(p, x)); }

FlaggedProbability wg_cdf_flagged(const WeibullGParams& p, double x) {
  try {
    return {wg_cdf(p, x), false};
  } catch (const SaturationError&) {
    return {1.0, true};
  }
}

double wg_survival(const WeibullGParams& p, double x) { return std::exp(-wg_cumulative_hazard(p, x)); }

double wg_hazard(const WeibullGParams& p, double x) {
  require_argument(x);
  const Jet3 w = p.baseline.odds_jet(p.gamma * x);
  const double lead = odds_power(w.value(), p.beta - 1.0);
  if (std::isinf(lead)) return std::numeric_limits<double>::infinity();
  return p.alpha * p.gamma * p.beta * lead * w[1];
}

double wg_pdf(const WeibullGParams& p, double x) { return wg_hazard(p, x) * wg_survival(p, x); }

double wg_survival_inverse_log(const WeibullGParams& p, double log_survival) {
  if (!(log_survival <= 0.0)) throw DomainError("log survival must be <= 0");
  const double t = std::pow(-log_survival / p.alpha, 1.0 / p.beta);
  return p.baseline.odds_inverse(t) / p.gamma;
}

double wg_quantile(const WeibullGParams& p, double u) {
  if (!(u >= 0.0 && u < 1.0)) throw DomainError("W-G quantile level must lie in [0, 1), got " + std::to_string(u));
  return wg_survival_inverse_log(p, std::log1p(-u));
}

std::vector<double> wg_sample(const WeibullGParams& p, std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<double> out(count);
  for (auto& v : out) v = wg_quantile(p, rng.uniform());
  return out;
}

}  // namespace wgorder
