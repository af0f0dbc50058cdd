#pragma once

#include <array>
#include <cmath>

namespace wgorder {

// Value and first three derivatives of a scalar function at one point.
// Composition follows Faa di Bruno truncated at third order.
struct Jet3 {
  std::array<double, 4> d{};

  double value() const { return d[0]; }
  double operator[](int k) const { return d[static_cast<std::size_t>(k)]; }

  static Jet3 constant(double c) { return {{c, 0.0, 0.0, 0.0}}; }
  static Jet3 variable(double x) { return {{x, 1.0, 0.0, 0.0}}; }

  /// x^p for the independent variable x >= 0. Derivative terms whose
  /// falling-factorial coefficient vanishes are exactly zero, even at x = 0.
  static Jet3 power(double x, double p) {
    Jet3 out;
    double coeff = 1.0;
    for (int k = 0; k < 4; ++k) {
      out.d[static_cast<std::size_t>(k)] = coeff == 0.0 ? 0.0 : coeff * std::pow(x, p - k);
      coeff *= (p - k);
    }
    return out;
  }

  /// f(u) given f and its first three derivatives at u.value().
  Jet3 compose(double f0, double f1, double f2, double f3) const {
    const double u1 = d[1], u2 = d[2], u3 = d[3];
    return {{f0, f1 * u1, f2 * u1 * u1 + f1 * u2,
             f3 * u1 * u1 * u1 + 3.0 * f2 * u1 * u2 + f1 * u3}};
  }

  Jet3 expm1() const {
    const double e = std::exp(d[0]);
    return compose(std::expm1(d[0]), e, e, e);
  }

  Jet3 log1p() const {
    const double inv = 1.0 / (1.0 + d[0]);
    return compose(std::log1p(d[0]), inv, -inv * inv, 2.0 * inv * inv * inv);
  }

  friend Jet3 operator*(double s, const Jet3& j) {
    return {{s * j.d[0], s * j.d[1], s * j.d[2], s * j.d[3]}};
  }
};

}  // namespace wgorder
