#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "wgorder/grid.hpp"
#include "wgorder/systems.hpp"

namespace wgorder {

/// Usual stochastic, hazard rate and likelihood ratio orders.
enum class Relation { st, hr, lr };
enum class VerdictStatus { holds, fails, inconclusive };

std::string to_string(Relation r);
std::string to_string(VerdictStatus s);
Relation parse_relation(const std::string& s);

struct OrderWitness {
  double x;
  double lhs;
  double rhs;
  std::string what;
};

/// Outcome of comparing X (system a) with Y (system b) on a grid.
/// fails always carries a witness; inconclusive carries the offending point.
struct OrderVerdict {
  Relation relation;
  VerdictStatus status;
  std::optional<OrderWitness> witness;
  double tolerance;

  bool holds() const { return status == VerdictStatus::holds; }
};

inline constexpr double kOrderTolerance = 1e-9;

/// a <=_st b: survival of a never exceeds survival of b (+1e-9) on the grid.
OrderVerdict check_st(const SystemSpec& a, const SystemSpec& b, const Grid& grid);

/// a <=_hr b: hazard of a dominates hazard of b (slack 1e-9 relative to the
/// larger hazard, floor 1), the survival ratio b/a is nondecreasing on the
/// grid (checked on log survivals), and for shocked systems the ratio does
/// not drop at x = 0, i.e. prod(p_a) <= prod(p_b).
OrderVerdict check_hr(const SystemSpec& a, const SystemSpec& b, const Grid& grid);

/// a <=_lr b: the density ratio pdf_b / pdf_a is nondecreasing on the grid,
/// compared in log space with slack 1e-9 scaled by the log-density
/// magnitudes. Shocked systems also need prod(p_a) <= prod(p_b), which lr
/// implies through st at 0+. Zero or non-finite densities give inconclusive.
OrderVerdict check_lr(const SystemSpec& a, const SystemSpec& b, const Grid& grid);

OrderVerdict check_order(Relation r, const SystemSpec& a, const SystemSpec& b, const Grid& grid);

enum class Trend { increasing, decreasing, flat, non_monotone };
std::string to_string(Trend t);

struct StepWitness {
  double x_from;
  double x_to;
  double from;
  double to;
};

struct MonotonicityReport {
  Trend trend;
  std::optional<StepWitness> rise;  // first significant increase
  std::optional<StepWitness> fall;  // first significant decrease

  /// Nonincreasing: decreasing or flat.
  bool nonincreasing() const { return trend == Trend::decreasing || trend == Trend::flat; }
  bool nondecreasing() const { return trend == Trend::increasing || trend == Trend::flat; }
};

/// Classifies values over ascending xs by pairwise steps with slack
/// 1e-9 * max(1, |v_i|, |v_{i+1}|). Non-finite values throw EvaluationError.
MonotonicityReport monotonicity_report(std::span<const double> xs, std::span<const double> values);
MonotonicityReport monotonicity_report(const std::function<double(double)>& f, std::span<const double> xs);

}  // namespace wgorder
