#pragma once

#include <string>
#include <vector>

#include "wgorder/jet.hpp"

namespace wgorder {

enum class BaselineFamily { exponential, weibull, burr_xii, lomax };

/// Baseline lifetime law F on (0, inf). Every family is written through its
/// cumulative hazard L(x) = -ln(1 - F(x)):
///
///   exponential(rate)     L = rate * x
///   weibull(rate, shape)  L = rate * x^shape
///   burr_xii(c, k)        L = k * ln(1 + x^c)       F = 1 - (1 + x^c)^-k
///   lomax(a)              L = a * ln(1 + x)
///
/// so that the odds are w(x) = F / (1 - F) = expm1(L(x)), which keeps full
/// relative precision near x = 0 where F is tiny.
class BaselineModel {
 public:
  static BaselineModel exponential(double rate);
  static BaselineModel weibull(double rate, double shape);
  static BaselineModel burr_xii(double c, double k);
  static BaselineModel lomax(double a);
  /// Builds from a family name ("exponential", "weibull", "burr", "lomax")
  /// and its positional parameter list.
  static BaselineModel from_name(const std::string& family, const std::vector<double>& params);

  BaselineFamily family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  /// Config-file family name.
  std::string name() const;
  std::string describe() const;

  double cdf(double x) const;
  double survival(double x) const;
  double pdf(double x) const;
  double hazard(double x) const;
  double quantile(double p) const;

  double cumulative_hazard(double x) const;
  Jet3 cumulative_hazard_jet(double x) const;
  /// Inverse of the cumulative hazard: the x with L(x) = s.
  double cumulative_hazard_inverse(double s) const;

  /// Unscaled odds w(t) and its first three derivatives. Throws
  /// SaturationError when F(t) > 1 - 1e-12.
  Jet3 odds_jet(double t) const;
  double odds(double t) const;
  /// The t >= 0 with w(t) = odds.
  double odds_inverse(double odds) const;

  friend bool operator==(const BaselineModel&, const BaselineModel&) = default;

 private:
  BaselineModel(BaselineFamily family, std::vector<double> params);

  BaselineFamily family_;
  std::vector<double> params_;
};

/// Cumulative hazard beyond which F exceeds 1 - 1e-12.
inline constexpr double kSaturationCumulativeHazard = 27.631021115928547;  // 12 ln 10

double baseline_cdf(const BaselineModel& model, double x);

/// x -> w(gamma * x), the odds link of a scale-gamma baseline.
class OddsFunction {
 public:
  OddsFunction(BaselineModel model, double gamma);

  const BaselineModel& model() const { return model_; }
  double gamma() const { return gamma_; }

  double operator()(double x) const;
  /// d^order/dx^order of w(gamma x), order in {1, 2, 3}. Analytic for all
  /// four families; throws DomainError when the result is not finite.
  double derivative(double x, int order) const;
  Jet3 jet(double x) const;

 private:
  BaselineModel model_;
  double gamma_;
};

double odds(const OddsFunction& ofn, double x);
double odds_derivative(const OddsFunction& ofn, double x, int order);

}  // namespace wgorder
