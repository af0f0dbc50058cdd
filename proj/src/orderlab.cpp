#include "wgorder/orderlab.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wgorder/error.hpp"

namespace wgorder {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::st: return "st";
    case Relation::hr: return "hr";
    case Relation::lr: return "lr";
  }
  return "unknown";
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::fails: return "fails";
    case VerdictStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

Relation parse_relation(const std::string& s) {
  if (s == "st") return Relation::st;
  if (s == "hr") return Relation::hr;
  if (s == "lr") return Relation::lr;
  throw DomainError("unknown order relation '" + s + "' (expected st, hr or lr)");
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::increasing: return "increasing";
    case Trend::decreasing: return "decreasing";
    case Trend::flat: return "flat";
    case Trend::non_monotone: return "non-monotone";
  }
  return "unknown";
}

namespace {

void require_same_regime(const SystemSpec& a, const SystemSpec& b) {
  if (a.regime() != b.regime()) {
    throw ConfigurationError("cannot compare a " + to_string(a.regime()) + " system with a " + to_string(b.regime()) +
                             " system");
  }
}

void require_density_regime(const SystemSpec& a, Relation r) {
  if (a.regime() == Regime::copula) {
    throw UnsupportedRegimeError(to_string(r) + " order needs hazards, which the copula regime does not provide");
  }
}

OrderVerdict make(Relation r, VerdictStatus s, std::optional<OrderWitness> w = std::nullopt) {
  return {r, s, std::move(w), kOrderTolerance};
}

OrderVerdict inconclusive(Relation r, double x, const std::string& what) {
  return make(r, VerdictStatus::inconclusive, OrderWitness{x, 0.0, 0.0, what});
}

// Shocked minima carry atoms 1 - prod(p) at 0; both hr and lr need the
// survival ratio not to drop there.
std::optional<OrderVerdict> shock_step(Relation r, const SystemSpec& a, const SystemSpec& b) {
  if (a.regime() != Regime::shocked) return std::nullopt;
  const double pa = a.shock_product(), pb = b.shock_product();
  if (pa > pb * (1.0 + 1e-12)) {
    return make(r, VerdictStatus::fails, OrderWitness{0.0, pa, pb, "step at x = 0: prod(p_a) > prod(p_b)"});
  }
  return std::nullopt;
}

struct LogPoint {
  double x;
  double a;
  double b;
};

// Pairwise check that b - a is nondecreasing over ascending x.
std::optional<OrderWitness> find_log_ratio_drop(const std::vector<LogPoint>& pts, const std::string& what) {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double r0 = pts[i].b - pts[i].a;
    const double r1 = pts[i + 1].b - pts[i + 1].a;
    const double scale = std::abs(pts[i].a) + std::abs(pts[i].b) + std::abs(pts[i + 1].a) + std::abs(pts[i + 1].b);
    if (r1 < r0 - kOrderTolerance * std::max(1.0, scale)) return OrderWitness{pts[i + 1].x, r0, r1, what};
  }
  return std::nullopt;
}

}  // namespace

OrderVerdict check_st(const SystemSpec& a, const SystemSpec& b, const Grid& grid) {
  require_same_regime(a, b);
  for (double x : grid.xs()) {
    double sa = 0.0, sb = 0.0;
    try {
      sa = min_survival(a, x);
      sb = min_survival(b, x);
    } catch (const SaturationError&) {
      return inconclusive(Relation::st, x, "odds saturated");
    }
    if (!std::isfinite(sa) || !std::isfinite(sb)) return inconclusive(Relation::st, x, "non-finite survival");
    if (sa > sb + kOrderTolerance) {
      return make(Relation::st, VerdictStatus::fails, OrderWitness{x, sa, sb, "survival of a exceeds survival of b"});
    }
  }
  return make(Relation::st, VerdictStatus::holds);
}

OrderVerdict check_hr(const SystemSpec& a, const SystemSpec& b, const Grid& grid) {
  require_same_regime(a, b);
  require_density_regime(a, Relation::hr);
  if (auto step = shock_step(Relation::hr, a, b)) return *step;

  std::vector<LogPoint> log_survival;
  log_survival.reserve(grid.size());
  for (double x : grid.xs()) {
    double ha = 0.0, hb = 0.0;
    try {
      ha = min_hazard(a, x);
      hb = min_hazard(b, x);
      log_survival.push_back({x, min_log_survival(a, x), min_log_survival(b, x)});
    } catch (const SaturationError&) {
      return inconclusive(Relation::hr, x, "odds saturated");
    }
    if (!std::isfinite(ha) || !std::isfinite(hb)) return inconclusive(Relation::hr, x, "non-finite hazard");
    if (!std::isfinite(log_survival.back().a) || !std::isfinite(log_survival.back().b)) {
      return inconclusive(Relation::hr, x, "survival underflow");
    }
    if (ha < hb - kOrderTolerance * std::max({1.0, ha, hb})) {
      return make(Relation::hr, VerdictStatus::fails, OrderWitness{x, ha, hb, "hazard of a below hazard of b"});
    }
  }
  if (auto w = find_log_ratio_drop(log_survival, "log survival ratio b/a decreases")) {
    return make(Relation::hr, VerdictStatus::fails, w);
  }
  return make(Relation::hr, VerdictStatus::holds);
}

OrderVerdict check_lr(const SystemSpec& a, const SystemSpec& b, const Grid& grid) {
  require_same_regime(a, b);
  require_density_regime(a, Relation::lr);
  if (auto step = shock_step(Relation::lr, a, b)) return *step;

  std::vector<LogPoint> log_pdf;
  log_pdf.reserve(grid.size());
  for (double x : grid.xs()) {
    LogPoint p{x, 0.0, 0.0};
    try {
      p.a = min_log_pdf(a, x);
      p.b = min_log_pdf(b, x);
    } catch (const SaturationError&) {
      return inconclusive(Relation::lr, x, "odds saturated");
    }
    if (!std::isfinite(p.a) || !std::isfinite(p.b)) return inconclusive(Relation::lr, x, "zero or non-finite density");
    log_pdf.push_back(p);
  }
  if (auto w = find_log_ratio_drop(log_pdf, "log density ratio b/a decreases")) {
    return make(Relation::lr, VerdictStatus::fails, w);
  }
  return make(Relation::lr, VerdictStatus::holds);
}

OrderVerdict check_order(Relation r, const SystemSpec& a, const SystemSpec& b, const Grid& grid) {
  switch (r) {
    case Relation::st: return check_st(a, b, grid);
    case Relation::hr: return check_hr(a, b, grid);
    case Relation::lr: return check_lr(a, b, grid);
  }
  throw DomainError("unknown relation");
}

MonotonicityReport monotonicity_report(std::span<const double> xs, std::span<const double> values) {
  if (xs.size() != values.size()) throw DimensionError("monotonicity report: xs and values differ in length");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw EvaluationError("monotonicity report: non-finite value", xs[i]);
  }
  MonotonicityReport report{Trend::flat, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double d = values[i + 1] - values[i];
    const double slack = kOrderTolerance * std::max({1.0, std::abs(values[i]), std::abs(values[i + 1])});
    const StepWitness step{xs[i], xs[i + 1], values[i], values[i + 1]};
    if (d > slack && !report.rise) report.rise = step;
    if (d < -slack && !report.fall) report.fall = step;
  }
  if (report.rise && report.fall) {
    report.trend = Trend::non_monotone;
  } else if (report.rise) {
    report.trend = Trend::increasing;
  } else if (report.fall) {
    report.trend = Trend::decreasing;
  }
  return report;
}

MonotonicityReport monotonicity_report(const std::function<double(double)>& f, std::span<const double> xs) {
  std::vector<double> values(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) values[i] = f(xs[i]);
  return monotonicity_report(xs, values);
}

}  // namespace wgorder
