#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wgorder/copula.hpp"

namespace wgorder {

/// Positive parameter vector (alpha, lambda, gamma or delta of a sample).
class ParamVector {
 public:
  explicit ParamVector(std::vector<double> entries);
  ParamVector(std::initializer_list<double> entries) : ParamVector(std::vector<double>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<double>& entries() const { return entries_; }
  double sum() const;

  friend bool operator==(const ParamVector&, const ParamVector&) = default;

 private:
  std::vector<double> entries_;
};

/// Absolute tolerance on partial and total sums in majorizes().
inline constexpr double kMajorizationTolerance = 1e-9;

/// x majorizes y: with both sorted increasingly, every partial sum of x is
/// <= the matching partial sum of y, and the totals agree.
bool majorizes(const ParamVector& x, const ParamVector& y);

/// Ordered positive cones: decreasing entries (D+), increasing entries (E+).
enum class Cone { decreasing, increasing, both, neither };

Cone cone_membership(const ParamVector& x);
std::string to_string(Cone c);
/// Sorts entries into the requested cone (decreasing or increasing).
ParamVector arrange(const ParamVector& x, Cone target);

/// Returns (x, y) with y obtained from base by `steps` random transfers from a
/// larger entry to a smaller one that never cross, so majorizes(x, y) holds
/// and totals are preserved. Both are arranged into `cone`.
std::pair<ParamVector, ParamVector> random_majorization_pair(std::uint64_t seed, const ParamVector& base,
                                                             std::size_t steps, Cone cone = Cone::decreasing);

enum class SchurClass { consistent_convex, consistent_concave, constant, mixed };
std::string to_string(SchurClass c);

struct SchurWitness {
  ParamVector x;
  ParamVector y;
  double difference;  // f(x) - f(y)
};

struct SchurProbeResult {
  SchurClass classification;
  std::optional<SchurWitness> increase;  // a pair with f(x) > f(y)
  std::optional<SchurWitness> decrease;  // a pair with f(x) < f(y)
};

/// Samples `trials` majorization pairs x >=m y in dimension `dim` and
/// classifies the sign pattern of f(x) - f(y). This corroborates or refutes
/// Schur-convexity; it never proves it.
SchurProbeResult schur_probe(const std::function<double(const ParamVector&)>& f, std::size_t dim, std::size_t trials,
                             std::uint64_t seed);

/// r-th divided differences of f over the strictly increasing grid must all
/// be >= -1e-9 (r-convexity: the r-th derivative is nonnegative).
CheckResult r_convexity_check(const ScalarFunction& f, int r, std::span<const double> grid);

}  // namespace wgorder
