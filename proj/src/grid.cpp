#include "wgorder/grid.hpp"

#include <cmath>
#include <string>

#include "wgorder/error.hpp"

namespace wgorder {

Grid Grid::uniform(double y_min, double y_max, std::size_t points) {
  if (points < 2) throw DimensionError("a grid needs at least 2 points");
  if (!(y_min < y_max)) throw DomainError("grid needs y_min < y_max");
  std::vector<double> ys(points);
  for (std::size_t i = 0; i < points; ++i) {
    ys[i] = y_min + (y_max - y_min) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  ys.back() = y_max;
  return Grid(std::move(ys));
}

Grid::Grid(std::vector<double> y_points) : ys_(std::move(y_points)) {
  if (ys_.size() < 2) throw DimensionError("a grid needs at least 2 points");
  for (std::size_t i = 0; i < ys_.size(); ++i) {
    if (!(ys_[i] > 0.0 && ys_[i] < 1.0)) {
      throw DomainError("grid points must lie in (0, 1), got " + std::to_string(ys_[i]));
    }
    if (i > 0 && !(ys_[i - 1] < ys_[i])) throw DomainError("grid points must be strictly increasing");
  }
  xs_.reserve(ys_.size());
  for (auto it = ys_.rbegin(); it != ys_.rend(); ++it) xs_.push_back(-std::log(*it));
}

}  // namespace wgorder
