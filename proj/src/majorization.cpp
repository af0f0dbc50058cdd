#include "wgorder/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wgorder/error.hpp"
#include "wgorder/numeric.hpp"
#include "wgorder/random.hpp"

namespace wgorder {

ParamVector::ParamVector(std::vector<double> entries) : entries_(std::move(entries)) {
  for (double v : entries_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ParameterError("parameter vector entries must be positive, got " + std::to_string(v));
    }
  }
}

double ParamVector::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0.0); }

bool majorizes(const ParamVector& x, const ParamVector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("majorization needs equal lengths, got " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
  }
  auto xs = x.entries();
  auto ys = y.entries();
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  double sx = 0.0, sy = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    sx += xs[j];
    sy += ys[j];
    if (j + 1 < xs.size() && sx > sy + kMajorizationTolerance) return false;
  }
  return std::abs(sx - sy) <= kMajorizationTolerance;
}

Cone cone_membership(const ParamVector& x) {
  bool dec = true, inc = true;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] < x[i + 1]) dec = false;
    if (x[i] > x[i + 1]) inc = false;
  }
  if (dec && inc) return Cone::both;
  if (dec) return Cone::decreasing;
  if (inc) return Cone::increasing;
  return Cone::neither;
}

std::string to_string(Cone c) {
  switch (c) {
    case Cone::decreasing: return "decreasing";
    case Cone::increasing: return "increasing";
    case Cone::both: return "both";
    case Cone::neither: return "neither";
  }
  return "unknown";
}

ParamVector arrange(const ParamVector& x, Cone target) {
  auto e = x.entries();
  if (target == Cone::decreasing) {
    std::sort(e.begin(), e.end(), std::greater<>());
  } else if (target == Cone::increasing) {
    std::sort(e.begin(), e.end());
  } else {
    throw DomainError("can only arrange into the decreasing or increasing cone");
  }
  return ParamVector(std::move(e));
}

std::pair<ParamVector, ParamVector> random_majorization_pair(std::uint64_t seed, const ParamVector& base,
                                                             std::size_t steps, Cone cone) {
  Rng rng(seed);
  auto y = base.entries();
  const std::size_t n = y.size();
  for (std::size_t s = 0; s < steps && n >= 2; ++s) {
    std::size_t i = rng.integer(0, n - 1);
    std::size_t j = rng.integer(0, n - 2);
    if (j >= i) ++j;
    if (y[i] < y[j]) std::swap(i, j);
    // Move at most half the gap so the two entries never cross.
    const double delta = 0.5 * (y[i] - y[j]) * rng.uniform();
    y[i] -= delta;
    y[j] += delta;
  }
  return {arrange(base, cone), arrange(ParamVector(std::move(y)), cone)};
}

std::string to_string(SchurClass c) {
  switch (c) {
    case SchurClass::consistent_convex: return "consistent-convex";
    case SchurClass::consistent_concave: return "consistent-concave";
    case SchurClass::constant: return "constant";
    case SchurClass::mixed: return "mixed";
  }
  return "unknown";
}

SchurProbeResult schur_probe(const std::function<double(const ParamVector&)>& f, std::size_t dim, std::size_t trials,
                             std::uint64_t seed) {
  if (dim < 1) throw DimensionError("schur probe needs dim >= 1");
  SchurProbeResult result{SchurClass::constant, std::nullopt, std::nullopt};
  auto evaluate = [&f](const ParamVector& v) {
    const double r = f(v);
    if (!std::isfinite(r)) {
      std::string msg = "schur probe: non-finite value at (";
      for (std::size_t i = 0; i < v.size(); ++i) msg += (i ? ", " : "") + std::to_string(v[i]);
      throw EvaluationError(msg + ")", v[0]);
    }
    return r;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    std::vector<double> base(dim);
    for (auto& b : base) b = rng.uniform(0.5, 3.0);
    const auto steps = static_cast<std::size_t>(rng.integer(1, 5));
    auto [x, y] = random_majorization_pair(derive_seed(seed ^ 0x5bd1e995ULL, t), ParamVector(base), steps);
    const double fx = evaluate(x), fy = evaluate(y);
    const double diff = fx - fy;
    const double slack = 1e-9 * std::max({1.0, std::abs(fx), std::abs(fy)});
    if (diff > slack && !result.increase) result.increase = SchurWitness{x, y, diff};
    if (diff < -slack && !result.decrease) result.decrease = SchurWitness{x, y, diff};
  }
  if (result.increase && result.decrease) {
    result.classification = SchurClass::mixed;
  } else if (result.increase) {
    result.classification = SchurClass::consistent_convex;
  } else if (result.decrease) {
    result.classification = SchurClass::consistent_concave;
  }
  return result;
}

CheckResult r_convexity_check(const ScalarFunction& f, int r, std::span<const double> grid) {
  if (r < 1) throw DomainError("r-convexity order must be >= 1");
  if (grid.size() < static_cast<std::size_t>(r) + 2) {
    throw DimensionError("r-convexity check of order " + std::to_string(r) + " needs at least " +
                         std::to_string(r + 2) + " grid points");
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i] < grid[i + 1])) throw DimensionError("r-convexity grid must be strictly increasing");
  }
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = f(grid[i]);
    if (!std::isfinite(values[i])) throw EvaluationError("r-convexity check: non-finite value", grid[i]);
  }
  const auto dd = divided_differences(grid, values, r);
  for (std::size_t i = 0; i < dd.size(); ++i) {
    if (dd[i] < -1e-9) return {false, CheckWitness{grid[i], static_cast<double>(r), dd[i], 0.0}};
  }
  return {true, std::nullopt};
}

}  // namespace wgorder
