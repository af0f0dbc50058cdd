#include "wgorder/copula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wgorder/error.hpp"
#include "wgorder/numeric.hpp"

namespace wgorder {

ArchimedeanGenerator ArchimedeanGenerator::independence() { return {GeneratorFamily::independence, 0.0}; }

ArchimedeanGenerator ArchimedeanGenerator::clayton(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw ParameterError("clayton theta must be > 0, got " + std::to_string(theta));
  }
  return {GeneratorFamily::clayton, theta};
}

ArchimedeanGenerator ArchimedeanGenerator::gumbel(double theta) {
  if (!(theta >= 1.0) || !std::isfinite(theta)) {
    throw ParameterError("gumbel theta must be >= 1, got " + std::to_string(theta));
  }
  return {GeneratorFamily::gumbel, theta};
}

ArchimedeanGenerator ArchimedeanGenerator::from_name(const std::string& family, std::optional<double> theta) {
  if (family == "independence") return independence();
  if (family != "clayton" && family != "gumbel") throw ParameterError("unknown copula family '" + family + "'");
  if (!theta) throw ParameterError("copula family '" + family + "' requires theta");
  return family == "clayton" ? clayton(*theta) : gumbel(*theta);
}

std::string ArchimedeanGenerator::name() const {
  switch (family_) {
    case GeneratorFamily::independence: return "independence";
    case GeneratorFamily::clayton: return "clayton";
    case GeneratorFamily::gumbel: return "gumbel";
  }
  return "unknown";
}

std::string ArchimedeanGenerator::describe() const {
  if (family_ == GeneratorFamily::independence) return name();
  std::ostringstream os;
  os << name() << '(' << theta_ << ')';
  return os.str();
}

double ArchimedeanGenerator::log_psi(double t) const {
  if (!(t >= 0.0)) throw GeneratorError("generator argument must be >= 0, got " + std::to_string(t));
  switch (family_) {
    case GeneratorFamily::independence: return -t;
    case GeneratorFamily::clayton: return -std::log1p(theta_ * t) / theta_;
    case GeneratorFamily::gumbel: return -std::pow(t, 1.0 / theta_);
  }
  return 0.0;
}

double ArchimedeanGenerator::psi(double t) const { return std::exp(log_psi(t)); }

double ArchimedeanGenerator::phi_of_log(double log_u) const {
  if (!(log_u <= 0.0)) throw DomainError("phi requires u in (0, 1]");
  switch (family_) {
    case GeneratorFamily::independence: return -log_u;
    case GeneratorFamily::clayton: return std::expm1(-theta_ * log_u) / theta_;
    case GeneratorFamily::gumbel: return std::pow(-log_u, theta_);
  }
  return 0.0;
}

double ArchimedeanGenerator::phi(double u) const {
  if (!(u > 0.0 && u <= 1.0)) throw DomainError("phi requires u in (0, 1], got " + std::to_string(u));
  return phi_of_log(std::log(u));
}

double psi(const ArchimedeanGenerator& g, double t) { return g.psi(t); }
double phi(const ArchimedeanGenerator& g, double u) { return g.phi(u); }

std::function<double(double)> compose_phi_psi(const ArchimedeanGenerator& outer, const ArchimedeanGenerator& inner) {
  return [outer, inner](double t) { return outer.phi_of_log(inner.log_psi(t)); };
}

std::vector<double> default_generator_grid() { return log_spaced(1e-4, 50.0, 60); }

std::vector<std::pair<double, double>> default_pair_grid() {
  // A 20 x 20 sub-lattice of the square, corners and diagonal included.
  const auto g = default_generator_grid();
  constexpr std::size_t kSide = 20;
  std::vector<std::pair<double, double>> out;
  out.reserve(kSide * kSide);
  for (std::size_t i = 0; i < kSide; ++i) {
    for (std::size_t j = 0; j < kSide; ++j) {
      out.emplace_back(g[i * (g.size() - 1) / (kSide - 1)], g[j * (g.size() - 1) / (kSide - 1)]);
    }
  }
  return out;
}

std::vector<std::pair<double, double>> pair_grid(std::span<const double> points) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i; j < points.size(); ++j) out.emplace_back(points[i], points[j]);
  }
  return out;
}

CheckResult super_additive_check(const ScalarFunction& f, std::span<const std::pair<double, double>> pairs) {
  for (const auto& [x, y] : pairs) {
    const double lhs = f(x + y);
    const double rhs = f(x) + f(y);
    if (std::isnan(lhs) || std::isnan(rhs) || lhs == -HUGE_VAL || rhs == -HUGE_VAL) {
      throw EvaluationError("super-additivity check: non-finite value", x + y);
    }
    // f(x + y) overflowing to +inf satisfies the inequality for any rhs.
    if (lhs == HUGE_VAL) continue;
    if (rhs == HUGE_VAL) return {false, CheckWitness{x, y, lhs, rhs}};
    if (lhs < rhs - 1e-9 * std::max(1.0, std::abs(lhs))) return {false, CheckWitness{x, y, lhs, rhs}};
  }
  return {true, std::nullopt};
}

namespace {

CheckResult log_convexity_from_logs(std::span<const double> grid, const std::function<double(double)>& log_f) {
  std::vector<double> xs, ls;
  for (double t : grid) {
    const double l = log_f(t);
    if (!std::isfinite(l)) continue;
    xs.push_back(t);
    ls.push_back(l);
  }
  if (xs.size() < 3) throw DimensionError("log-convexity check needs at least 3 usable grid points");
  const auto dd = divided_differences(xs, ls, 2);
  for (std::size_t i = 0; i < dd.size(); ++i) {
    if (dd[i] < -1e-9) return {false, CheckWitness{xs[i + 1], 2.0, dd[i], 0.0}};
  }
  return {true, std::nullopt};
}

}  // namespace

CheckResult log_convexity_check(const ScalarFunction& psi_fn, std::span<const double> grid) {
  return log_convexity_from_logs(grid, [&](double t) {
    const double v = psi_fn(t);
    return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
  });
}

CheckResult log_convexity_check(const ArchimedeanGenerator& g, std::span<const double> grid) {
  return log_convexity_from_logs(grid, [&](double t) { return g.log_psi(t); });
}

CheckResult d_monotone_check(const ScalarFunction& psi_fn, int d, std::span<const double> grid) {
  if (d < 2) throw DomainError("d-monotonicity needs d >= 2");
  if (d > 6) throw UnsupportedOrderError("d-monotonicity check supports d <= 6, got " + std::to_string(d));
  if (grid.size() < 2) throw DimensionError("d-monotonicity check needs at least 2 grid points");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double gap = grid[i + 1] - grid[i];
    for (double h : {gap, 0.5 * gap, 0.25 * gap}) {
      for (int k = 0; k <= d; ++k) {
        const double signed_diff = ((k % 2) ? -1.0 : 1.0) * forward_difference(psi_fn, grid[i], h, k);
        if (signed_diff < -1e-7) return {false, CheckWitness{grid[i], static_cast<double>(k), signed_diff, h}};
      }
    }
  }
  return {true, std::nullopt};
}

CheckResult d_monotone_check(const ArchimedeanGenerator& g, int d, std::span<const double> grid) {
  return d_monotone_check([&g](double t) { return g.psi(t); }, d, grid);
}

}  // namespace wgorder
