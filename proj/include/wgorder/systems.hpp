#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wgorder/copula.hpp"
#include "wgorder/weibull_g.hpp"

namespace wgorder {

enum class Regime { independent, shocked, copula };
std::string to_string(Regime r);

/// Block sizes of a multiple-outlier sample: units [0, n1) share one
/// parameter set and units [n1, n1 + n2) share another.
struct OutlierSplit {
  std::size_t n1;
  std::size_t n2;
  friend bool operator==(const OutlierSplit&, const OutlierSplit&) = default;
};

/// An n-unit heterogeneous W-G sample whose minimum is the lifetime of a
/// series system. Units share beta and the baseline. Optional random shocks
/// (unit i effectively lives I_i T_i with P(I_i = 1) = p_i) or an
/// Archimedean survival copula; never both.
class SystemSpec {
 public:
  explicit SystemSpec(std::vector<WeibullGParams> units, std::optional<std::vector<double>> shock_probs = std::nullopt,
                      std::optional<ArchimedeanGenerator> generator = std::nullopt,
                      std::optional<OutlierSplit> outlier_split = std::nullopt);

  /// Convenience: per-unit alpha and gamma over a common beta and baseline.
  static SystemSpec from_vectors(const std::vector<double>& alphas, const std::vector<double>& gammas, double beta,
                                 const BaselineModel& baseline);

  const std::vector<WeibullGParams>& units() const { return units_; }
  const std::optional<std::vector<double>>& shock_probs() const { return shock_probs_; }
  const std::optional<ArchimedeanGenerator>& generator() const { return generator_; }
  const std::optional<OutlierSplit>& outlier_split() const { return outlier_split_; }

  std::size_t size() const { return units_.size(); }
  Regime regime() const;
  double beta() const { return units_.front().beta; }
  const BaselineModel& baseline() const { return units_.front().baseline; }
  std::vector<double> alphas() const;
  std::vector<double> gammas() const;
  /// Product of the shock probabilities; 1 without shocks.
  double shock_product() const;

  SystemSpec with_shocks(std::vector<double> probs) const;
  SystemSpec with_generator(ArchimedeanGenerator g) const;
  SystemSpec with_outlier_split(OutlierSplit split) const;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;

 private:
  std::vector<WeibullGParams> units_;
  std::optional<std::vector<double>> shock_probs_;
  std::optional<ArchimedeanGenerator> generator_;
  std::optional<OutlierSplit> outlier_split_;
};

/// Sum over units of alpha_i w(gamma_i x)^beta.
double min_cumulative_hazard(const SystemSpec& sys, double x);
/// P(X_{1:n} > x). Shocked: prod(p) exp(-sum ...) for x > 0 and prod(p) at
/// x = 0 (the atom of mass 1 - prod(p) sits at 0). Copula: psi(sum phi(S_k(x))).
double min_survival(const SystemSpec& sys, double x);
double min_log_survival(const SystemSpec& sys, double x);
/// Sum of unit hazards for x > 0 (shocks do not change it). Copula regime
/// throws UnsupportedRegimeError.
double min_hazard(const SystemSpec& sys, double x);
/// Density of the absolutely continuous part: hazard * survival.
double min_pdf(const SystemSpec& sys, double x);
double min_log_pdf(const SystemSpec& sys, double x);

struct MinDraw {
  double value;
  bool atom;  // failed at 0 because some shock indicator was 0
  friend bool operator==(const MinDraw&, const MinDraw&) = default;
};

/// Monte Carlo draws of the minimum. Copula sampling covers independence
/// and Clayton (gamma-frailty construction); other generators throw GeneratorError.
std::vector<MinDraw> min_sample(const SystemSpec& sys, std::uint64_t seed, std::size_t count);

}  // namespace wgorder
