#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wgorder {

/// Evaluation grid in the plotting variable y in (0, 1), mapped to the
/// lifetime axis by x = -ln y. xs() is ascending in x.
class Grid {
 public:
  static constexpr double kDefaultYMin = 0.01;
  static constexpr double kDefaultYMax = 0.99;
  static constexpr std::size_t kDefaultPoints = 500;
  static constexpr std::size_t kWitnessPoints = 2000;

  /// `points` equally spaced y values on [y_min, y_max].
  static Grid uniform(double y_min = kDefaultYMin, double y_max = kDefaultYMax, std::size_t points = kDefaultPoints);
  explicit Grid(std::vector<double> y_points);

  std::span<const double> ys() const { return ys_; }
  /// x = -ln y for every point, ascending.
  std::span<const double> xs() const { return xs_; }
  std::size_t size() const { return ys_.size(); }
  double y_min() const { return ys_.front(); }
  double y_max() const { return ys_.back(); }

 private:
  std::vector<double> ys_;
  std::vector<double> xs_;
};

}  // namespace wgorder
