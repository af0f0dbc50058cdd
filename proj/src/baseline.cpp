#include "wgorder/baseline.hpp"

#include <cmath>
#include <sstream>

#include "wgorder/error.hpp"

namespace wgorder {
namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ParameterError(std::string("baseline parameter ") + what +
                         " must be positive and finite, got " + std::to_string(v));
  }
}

void require_argument(double x) {
  if (!(x >= 0.0)) throw DomainError("baseline argument must be >= 0, got " + std::to_string(x));
}

}  // namespace

BaselineModel::BaselineModel(BaselineFamily family, std::vector<double> params)
    : family_(family), params_(std::move(params)) {}

BaselineModel BaselineModel::exponential(double rate) {
  require_positive(rate, "rate");
  return BaselineModel(BaselineFamily::exponential, {rate});
}

BaselineModel BaselineModel::weibull(double rate, double shape) {
  require_positive(rate, "rate");
  require_positive(shape, "shape");
  return BaselineModel(BaselineFamily::weibull, {rate, shape});
}

BaselineModel BaselineModel::burr_xii(double c, double k) {
  require_positive(c, "c");
  require_positive(k, "k");
  return BaselineModel(BaselineFamily::burr_xii, {c, k});
}

BaselineModel BaselineModel::lomax(double a) {
  require_positive(a, "a");
  return BaselineModel(BaselineFamily::lomax, {a});
}

BaselineModel BaselineModel::from_name(const std::string& family, const std::vector<double>& params) {
  auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      throw ParameterError("baseline family '" + family + "' takes " + std::to_string(n) +
                           " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (family == "exponential") {
    expect(1);
    return exponential(params[0]);
  }
  if (family == "weibull") {
    expect(2);
    return weibull(params[0], params[1]);
  }
  if (family == "burr") {
    expect(2);
    return burr_xii(params[0], params[1]);
  }
  if (family == "lomax") {
    expect(1);
    return lomax(params[0]);
  }
  throw ParameterError("unknown baseline family '" + family + "'");
}

std::string BaselineModel::name() const {
  switch (family_) {
    case BaselineFamily::exponential: return "exponential";
    case BaselineFamily::weibull: return "weibull";
    case BaselineFamily::burr_xii: return "burr";
    case BaselineFamily::lomax: return "lomax";
  }
  return "unknown";
}

std::string BaselineModel::describe() const {
  std::ostringstream os;
  os << name() << '(';
  for (std::size_t i = 0; i < params_.size(); ++i) os << (i ? ", " : "") << params_[i];
  os << ')';
  return os.str();
}

Jet3 BaselineModel::cumulative_hazard_jet(double x) const {
  require_argument(x);
  switch (family_) {
    case BaselineFamily::exponential:
      return params_[0] * Jet3::variable(x);
    case BaselineFamily::weibull:
      return params_[0] * Jet3::power(x, params_[1]);
    case BaselineFamily::burr_xii:
      return params_[1] * Jet3::power(x, params_[0]).log1p();
    case BaselineFamily::lomax:
      return params_[0] * Jet3::variable(x).log1p();
  }
  return {};
}

double BaselineModel::cumulative_hazard(double x) const {
  require_argument(x);
  switch (family_) {
    case BaselineFamily::exponential: return params_[0] * x;
    case BaselineFamily::weibull: return params_[0] * std::pow(x, params_[1]);
    case BaselineFamily::burr_xii: return params_[1] * std::log1p(std::pow(x, params_[0]));
    case BaselineFamily::lomax: return params_[0] * std::log1p(x);
  }
  return 0.0;
}

double BaselineModel::cumulative_hazard_inverse(double s) const {
  if (!(s >= 0.0)) throw DomainError("cumulative hazard must be >= 0, got " + std::to_string(s));
  switch (family_) {
    case BaselineFamily::exponential: return s / params_[0];
    case BaselineFamily::weibull: return std::pow(s / params_[0], 1.0 / params_[1]);
    case BaselineFamily::burr_xii: return std::pow(std::expm1(s / params_[1]), 1.0 / params_[0]);
    case BaselineFamily::lomax: return std::expm1(s / params_[0]);
  }
  return 0.0;
}

double BaselineModel::cdf(double x) const { return -std::expm1(-cumulative_hazard(x)); }

double BaselineModel::survival(double x) const { return std::exp(-cumulative_hazard(x)); }

double BaselineModel::hazard(double x) const { return cumulative_hazard_jet(x)[1]; }

double BaselineModel::pdf(double x) const {
  const Jet3 h = cumulative_hazard_jet(x);
  return h[1] * std::exp(-h.value());
}

double BaselineModel::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("quantile level must lie in [0, 1), got " + std::to_string(p));
  return cumulative_hazard_inverse(-std::log1p(-p));
}

Jet3 BaselineModel::odds_jet(double t) const {
  const Jet3 h = cumulative_hazard_jet(t);
  if (h.value() > kSaturationCumulativeHazard) throw SaturationError(t);
  return h.expm1();
}

double BaselineModel::odds(double t) const {
  const double h = cumulative_hazard(t);
  if (h > kSaturationCumulativeHazard) throw SaturationError(t);
  return std::expm1(h);
}

double BaselineModel::odds_inverse(double w) const {
  if (!(w >= 0.0)) throw DomainError("odds must be >= 0, got " + std::to_string(w));
  return cumulative_hazard_inverse(std::log1p(w));
}

double baseline_cdf(const BaselineModel& model, double x) { return model.cdf(x); }

OddsFunction::OddsFunction(BaselineModel model, double gamma) : model_(std::move(model)), gamma_(gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ParameterError("odds scale gamma must be positive, got " + std::to_string(gamma));
  }
}

double OddsFunction::operator()(double x) const {
  try {
    return model_.odds(gamma_ * x);
  } catch (const SaturationError&) {
    throw SaturationError(x);
  }
}

Jet3 OddsFunction::jet(double x) const {
  Jet3 j;
  try {
    j = model_.odds_jet(gamma_ * x);
  } catch (const SaturationError&) {
    throw SaturationError(x);
  }
  double scale = 1.0;
  for (std::size_t k = 1; k < 4; ++k) {
    scale *= gamma_;
    j.d[k] *= scale;
  }
  return j;
}

double OddsFunction::derivative(double x, int order) const {
  if (order < 1 || order > 3) throw DomainError("odds derivative order must be 1, 2 or 3");
  const double v = jet(x)[order];
  if (!std::isfinite(v)) {
    throw DomainError("odds derivative of order " + std::to_string(order) + " is not finite at x = " +
                      std::to_string(x));
  }
  return v;
}

double odds(const OddsFunction& ofn, double x) { return ofn(x); }

double odds_derivative(const OddsFunction& ofn, double x, int order) { return ofn.derivative(x, order); }

}  // namespace wgorder
