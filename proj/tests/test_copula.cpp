#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "wgorder/copula.hpp"
#include "wgorder/error.hpp"

using namespace wgorder;
using Catch::Approx;

namespace {

std::vector<ArchimedeanGenerator> generators() {
  return {ArchimedeanGenerator::independence(), ArchimedeanGenerator::clayton(0.3), ArchimedeanGenerator::clayton(1.0),
          ArchimedeanGenerator::clayton(4.0),   ArchimedeanGenerator::gumbel(1.0),  ArchimedeanGenerator::gumbel(2.5)};
}

}  // namespace

TEST_CASE("generator examples") {
  for (const auto& g : generators()) CHECK(psi(g, 0.0) == 1.0);
  CHECK(psi(ArchimedeanGenerator::independence(), 1.0) == Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(phi(ArchimedeanGenerator::clayton(1.0), 0.25) == Approx(3.0).epsilon(1e-14));
  CHECK(psi(ArchimedeanGenerator::clayton(2.0), 4.0) == Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(psi(ArchimedeanGenerator::gumbel(2.0), 4.0) == Approx(std::exp(-2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(ArchimedeanGenerator::clayton(0.0), ParameterError);
  CHECK_THROWS_AS(ArchimedeanGenerator::gumbel(0.5), ParameterError);
  CHECK_THROWS(phi(ArchimedeanGenerator::clayton(1.0), 0.0));
  CHECK_THROWS(phi(ArchimedeanGenerator::clayton(1.0), 1.5));
  CHECK_THROWS(psi(ArchimedeanGenerator::clayton(1.0), -1.0));
  CHECK(ArchimedeanGenerator::from_name("clayton", 2.0) == ArchimedeanGenerator::clayton(2.0));
  CHECK_THROWS(ArchimedeanGenerator::from_name("frank", 2.0));
}

TEST_CASE("psi and phi invert each other") {
  for (const auto& g : generators()) {
    for (int i = 1; i < 100; ++i) {
      const double u = 0.01 * i;
      CHECK(std::abs(psi(g, phi(g, u)) - u) < 1e-10);
    }
    for (double lu : {-1e-8, -0.3, -5.0, -100.0}) {
      const double t = g.phi_of_log(lu);
      CHECK(std::isfinite(t));
      CHECK(g.log_psi(t) == Approx(lu).epsilon(1e-10));
    }
  }
}

TEST_CASE("psi is strictly decreasing and vanishes at infinity") {
  const auto grid = default_generator_grid();
  for (const auto& g : generators()) {
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) CHECK(psi(g, grid[i + 1]) < psi(g, grid[i]));
    CHECK(psi(g, 1e12) < 1e-3);
  }
}

TEST_CASE("default grids") {
  const auto grid = default_generator_grid();
  REQUIRE(grid.size() == 60);
  CHECK(grid.front() == Approx(1e-4));
  CHECK(grid.back() == Approx(50.0));
  const auto pairs = default_pair_grid();
  CHECK(pairs.size() == 400);
  CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair(grid.back(), grid.back())) != pairs.end());
  const std::vector<double> pts = {1, 2, 3};
  CHECK(pair_grid(pts).size() == 6);
}

TEST_CASE("super-additivity examples") {
  const auto pairs = default_pair_grid();
  CHECK(super_additive_check([](double x) { return x; }, pairs));
  CHECK(super_additive_check([](double x) { return x * x; }, pairs));

  const std::vector<std::pair<double, double>> unit = {{1.0, 1.0}};
  const auto r = super_additive_check([](double x) { return std::sqrt(x); }, unit);
  CHECK_FALSE(r);
  REQUIRE(r.witness);
  CHECK(r.witness->x == 1.0);
  CHECK(r.witness->y == 1.0);
  CHECK(r.witness->lhs == Approx(std::sqrt(2.0)));
  CHECK(r.witness->rhs == Approx(2.0));
  CHECK_FALSE(super_additive_check([](double x) { return std::sqrt(x); }, pairs));

  CHECK_THROWS_AS(super_additive_check([](double) { return std::nan(""); }, unit), EvaluationError);
}

TEST_CASE("identical generators compose to the identity") {
  const auto pairs = default_pair_grid();
  for (const auto& g : generators()) {
    const auto f = compose_phi_psi(g, g);
    for (double t : {1e-3, 0.5, 7.0, 40.0}) CHECK(f(t) == Approx(t).epsilon(1e-9));
    CHECK(super_additive_check(f, pairs));
  }
}

TEST_CASE("known generator orderings") {
  const auto pairs = default_pair_grid();
  // Clayton family: phi_b(psi_a) is super-additive when theta_b >= theta_a.
  CHECK(super_additive_check(
      compose_phi_psi(ArchimedeanGenerator::clayton(3.0), ArchimedeanGenerator::clayton(1.0)), pairs));
  CHECK_FALSE(super_additive_check(
      compose_phi_psi(ArchimedeanGenerator::clayton(1.0), ArchimedeanGenerator::clayton(3.0)), pairs));
  // Gumbel: phi_b(psi_a)(t) = t^(theta_b / theta_a), super-additive iff the exponent is >= 1.
  CHECK(super_additive_check(compose_phi_psi(ArchimedeanGenerator::gumbel(2.0), ArchimedeanGenerator::gumbel(1.5)),
                             pairs));
  CHECK_FALSE(super_additive_check(
      compose_phi_psi(ArchimedeanGenerator::gumbel(1.5), ArchimedeanGenerator::gumbel(2.0)), pairs));
}

TEST_CASE("log-convexity examples") {
  const auto grid = default_generator_grid();
  CHECK(log_convexity_check(ArchimedeanGenerator::independence(), grid));
  CHECK(log_convexity_check(ArchimedeanGenerator::clayton(2.0), grid));
  CHECK_FALSE(log_convexity_check([](double t) { return std::exp(-t * t); }, grid));
  // Gumbel with theta > 1 has ln psi = -t^(1/theta), which is convex.
  CHECK(log_convexity_check(ArchimedeanGenerator::gumbel(2.0), grid));
}

TEST_CASE("d-monotonicity examples") {
  const auto grid = default_generator_grid();
  for (int d = 2; d <= 6; ++d) CHECK(d_monotone_check(ArchimedeanGenerator::independence(), d, grid));
  CHECK(d_monotone_check(ArchimedeanGenerator::clayton(1.0), 3, grid));
  CHECK(d_monotone_check(ArchimedeanGenerator::gumbel(2.0), 4, grid));

  std::vector<double> lin;
  for (int i = 0; i <= 40; ++i) lin.push_back(0.05 * i);
  CHECK_FALSE(d_monotone_check([](double t) { return std::max(0.0, 1.0 - t); }, 4, lin));

  CHECK_THROWS_AS(d_monotone_check(ArchimedeanGenerator::independence(), 7, grid), UnsupportedOrderError);
  CHECK_THROWS(d_monotone_check(ArchimedeanGenerator::independence(), 1, grid));
}
