#include "wgorder/systems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wgorder/error.hpp"
#include "wgorder/random.hpp"

namespace wgorder {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::independent: return "independent";
    case Regime::shocked: return "shocked";
    case Regime::copula: return "copula";
  }
  return "unknown";
}

SystemSpec::SystemSpec(std::vector<WeibullGParams> units, std::optional<std::vector<double>> shock_probs,
                       std::optional<ArchimedeanGenerator> generator, std::optional<OutlierSplit> outlier_split)
    : units_(std::move(units)),
      shock_probs_(std::move(shock_probs)),
      generator_(std::move(generator)),
      outlier_split_(outlier_split) {
  if (units_.empty()) throw ParameterError("a system needs at least one unit");
  for (std::size_t i = 1; i < units_.size(); ++i) {
    if (units_[i].beta != units_[0].beta) throw ParameterError("all units of a system must share beta");
    if (!(units_[i].baseline == units_[0].baseline)) {
      throw ParameterError("all units of a system must share the baseline");
    }
  }
  if (shock_probs_) {
    if (shock_probs_->size() != units_.size()) {
      throw ParameterError("shock_probs must have one entry per unit (" + std::to_string(units_.size()) + ")");
    }
    for (double p : *shock_probs_) {
      if (!(p > 0.0 && p <= 1.0)) throw ParameterError("shock probabilities must lie in (0, 1], got " + std::to_string(p));
    }
  }
  if (shock_probs_ && generator_) throw ParameterError("a system cannot combine random shocks with a copula");
  if (outlier_split_) {
    const auto [n1, n2] = *outlier_split_;
    if (n1 == 0 || n2 == 0 || n1 + n2 != units_.size()) {
      throw ParameterError("outlier_split must be two positive block sizes summing to " +
                           std::to_string(units_.size()));
    }
    for (std::size_t i = 0; i < units_.size(); ++i) {
      const std::size_t head = i < n1 ? 0 : n1;
      if (!(units_[i] == units_[head])) {
        throw ParameterError("outlier_split requires identical units within each block (unit " + std::to_string(i) +
                             " differs)");
      }
    }
  }
}

SystemSpec SystemSpec::from_vectors(const std::vector<double>& alphas, const std::vector<double>& gammas, double beta,
                                    const BaselineModel& baseline) {
  if (alphas.size() != gammas.size()) throw DimensionError("alpha and gamma vectors differ in length");
  std::vector<WeibullGParams> units;
  units.reserve(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) units.emplace_back(alphas[i], beta, gammas[i], baseline);
  return SystemSpec(std::move(units));
}

Regime SystemSpec::regime() const {
  if (generator_) return Regime::copula;
  if (shock_probs_) return Regime::shocked;
  return Regime::independent;
}

std::vector<double> SystemSpec::alphas() const {
  std::vector<double> out;
  for (const auto& u : units_) out.push_back(u.alpha);
  return out;
}

std::vector<double> SystemSpec::gammas() const {
  std::vector<double> out;
  for (const auto& u : units_) out.push_back(u.gamma);
  return out;
}

double SystemSpec::shock_product() const {
  double p = 1.0;
  if (shock_probs_) {
    for (double v : *shock_probs_) p *= v;
  }
  return p;
}

SystemSpec SystemSpec::with_shocks(std::vector<double> probs) const {
  return SystemSpec(units_, std::move(probs), generator_, outlier_split_);
}

SystemSpec SystemSpec::with_generator(ArchimedeanGenerator g) const {
  return SystemSpec(units_, shock_probs_, std::move(g), outlier_split_);
}

SystemSpec SystemSpec::with_outlier_split(OutlierSplit split) const {
  return SystemSpec(units_, shock_probs_, generator_, split);
}

double min_cumulative_hazard(const SystemSpec& sys, double x) {
  double h = 0.0;
  for (const auto& u : sys.units()) h += wg_cumulative_hazard(u, x);
  return h;
}

double min_log_survival(const SystemSpec& sys, double x) {
  switch (sys.regime()) {
    case Regime::independent:
      return -min_cumulative_hazard(sys, x);
    case Regime::shocked: {
      const double log_p = std::log(sys.shock_product());
      return x == 0.0 ? log_p : log_p - min_cumulative_hazard(sys, x);
    }
    case Regime::copula: {
      const auto& g = *sys.generator();
      double t = 0.0;
      for (const auto& u : sys.units()) t += g.phi_of_log(-wg_cumulative_hazard(u, x));
      return g.log_psi(t);
    }
  }
  return 0.0;
}

double min_survival(const SystemSpec& sys, double x) { return std::exp(min_log_survival(sys, x)); }

double min_hazard(const SystemSpec& sys, double x) {
  if (sys.regime() == Regime::copula) {
    throw UnsupportedRegimeError("hazard rate of the minimum is not available in the copula regime");
  }
  double h = 0.0;
  for (const auto& u : sys.units()) h += wg_hazard(u, x);
  return h;
}

double min_pdf(const SystemSpec& sys, double x) { return min_hazard(sys, x) * min_survival(sys, x); }

double min_log_pdf(const SystemSpec& sys, double x) {
  const double h = min_hazard(sys, x);
  return (h > 0.0 ? std::log(h) : -std::numeric_limits<double>::infinity()) + min_log_survival(sys, x);
}

std::vector<MinDraw> min_sample(const SystemSpec& sys, std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<MinDraw> out;
  out.reserve(count);
  const auto& units = sys.units();
  const Regime regime = sys.regime();

  std::optional<double> clayton_theta;
  if (regime == Regime::copula) {
    const auto& g = *sys.generator();
    if (g.family() == GeneratorFamily::clayton) {
      clayton_theta = g.theta();
    } else if (g.family() != GeneratorFamily::independence) {
      throw GeneratorError("sampling is not supported for generator " + g.describe());
    }
  }

  for (std::size_t k = 0; k < count; ++k) {
    bool atom = false;
    if (regime == Regime::shocked) {
      for (double p : *sys.shock_probs()) atom |= !rng.bernoulli(p);
    }
    double m = std::numeric_limits<double>::infinity();
    if (clayton_theta) {
      // Marshall-Olkin: V ~ Gamma(1/theta, scale theta) has Laplace transform psi,
      // so U_i = psi(E_i / V) are joined by the Clayton copula. U_i is the
      // survival level of unit i.
      const double theta = *clayton_theta;
      const double v = rng.gamma(1.0 / theta, theta);
      for (const auto& u : units) {
        const double log_level = sys.generator()->log_psi(rng.exponential() / v);
        m = std::min(m, wg_survival_inverse_log(u, log_level));
      }
    } else {
      for (const auto& u : units) m = std::min(m, wg_quantile(u, rng.uniform()));
    }
    out.push_back(atom ? MinDraw{0.0, true} : MinDraw{m, false});
  }
  return out;
}

}  // namespace wgorder
