#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace wgorder {

/// Divided differences of the given order over consecutive points:
/// out[i] = f[x_i, ..., x_{i+order}]. Requires strictly increasing xs.
inline std::vector<double> divided_differences(std::span<const double> xs, std::span<const double> ys, int order) {
  std::vector<double> cur(ys.begin(), ys.end());
  for (int k = 1; k <= order; ++k) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      next[i] = (cur[i + 1] - cur[i]) / (xs[i + static_cast<std::size_t>(k)] - xs[i]);
    }
    cur = std::move(next);
  }
  return cur;
}

/// Undivided forward difference Delta_h^k f(t) = sum_j (-1)^(k-j) C(k,j) f(t + j h).
template <class F>
double forward_difference(const F& f, double t, double h, int k) {
  double sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binom * f(t + j * h);
    binom = binom * (k - j) / (j + 1);
  }
  return sum;
}

/// n points log-spaced on [lo, hi], lo > 0.
inline std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = n == 1 ? lo : std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace wgorder
