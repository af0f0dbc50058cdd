#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wgorder {

enum class GeneratorFamily { independence, clayton, gumbel };

/// Archimedean generator psi with inverse phi.
///
///   independence  psi(t) = exp(-t)
///   clayton(th)   psi(t) = (1 + th t)^(-1/th),  th > 0
///   gumbel(th)    psi(t) = exp(-t^(1/th)),      th >= 1
///
/// All three are strictly positive on [0, inf), so phi is the plain inverse.
class ArchimedeanGenerator {
 public:
  static ArchimedeanGenerator independence();
  static ArchimedeanGenerator clayton(double theta);
  static ArchimedeanGenerator gumbel(double theta);
  static ArchimedeanGenerator from_name(const std::string& family, std::optional<double> theta);

  GeneratorFamily family() const { return family_; }
  double theta() const { return theta_; }
  std::string name() const;
  std::string describe() const;

  double psi(double t) const;
  double log_psi(double t) const;
  double phi(double u) const;
  /// phi(exp(log_u)) without forming exp(log_u); stays finite when u underflows.
  double phi_of_log(double log_u) const;

  friend bool operator==(const ArchimedeanGenerator&, const ArchimedeanGenerator&) = default;

 private:
  ArchimedeanGenerator(GeneratorFamily family, double theta) : family_(family), theta_(theta) {}

  GeneratorFamily family_;
  double theta_;
};

double psi(const ArchimedeanGenerator& g, double t);
double phi(const ArchimedeanGenerator& g, double u);

/// t -> phi_outer(psi_inner(t)); the function whose super-additivity orders
/// two Archimedean copulas.
std::function<double(double)> compose_phi_psi(const ArchimedeanGenerator& outer,
                                              const ArchimedeanGenerator& inner);

struct CheckWitness {
  double x;
  double y;  // second coordinate for pair checks, derivative order for grid checks
  double lhs;
  double rhs;
};

struct CheckResult {
  bool passed;
  std::optional<CheckWitness> witness;
  explicit operator bool() const { return passed; }
};

using ScalarFunction = std::function<double(double)>;

/// 60 log-spaced points on [1e-4, 50].
std::vector<double> default_generator_grid();
/// 400 pairs taken evenly from the Cartesian square of default_generator_grid():
/// every third point or so in each coordinate, both ends included.
std::vector<std::pair<double, double>> default_pair_grid();
/// Every unordered pair (x_i, x_j), i <= j, of the given points.
std::vector<std::pair<double, double>> pair_grid(std::span<const double> points);

/// Grid falsifier for f(x + y) >= f(x) + f(y). The 1e-9 slack is scaled by
/// max(1, |f(x + y)|) so that rounding in large values is not reported.
/// f(x + y) = +inf counts as satisfied; NaN or -inf throws EvaluationError.
CheckResult super_additive_check(const ScalarFunction& f, std::span<const std::pair<double, double>> pairs);

/// Second divided differences of ln psi on the grid must be >= -1e-9.
/// Points where psi is zero or ln psi is not finite are skipped.
CheckResult log_convexity_check(const ScalarFunction& psi, std::span<const double> grid);
CheckResult log_convexity_check(const ArchimedeanGenerator& g, std::span<const double> grid);

/// d-monotonicity falsifier. At every grid point t with local step h (the gap
/// to the next point, also h/2 and h/4) the signed forward differences
/// (-1)^k Delta_h^k psi(t) must be >= -1e-7 for k = 0..d. Orders d-1 and d
/// encode "the (d-2)-th signed derivative is nonincreasing and convex".
/// d must lie in [2, 6].
CheckResult d_monotone_check(const ScalarFunction& psi, int d, std::span<const double> grid);
CheckResult d_monotone_check(const ArchimedeanGenerator& g, int d, std::span<const double> grid);

}  // namespace wgorder
