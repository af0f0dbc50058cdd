#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "wgorder/baseline.hpp"
#include "wgorder/error.hpp"
#include "wgorder/grid.hpp"
#include "wgorder/majorization.hpp"

using namespace wgorder;
using Catch::Approx;

namespace {

ParamVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.1, 3.0);
  std::vector<double> v(n);
  for (auto& e : v) e = u(rng);
  return ParamVector(v);
}

double max_entry(const ParamVector& v) { return *std::max_element(v.entries().begin(), v.entries().end()); }

}  // namespace

TEST_CASE("majorization examples") {
  CHECK(majorizes({4, 1, 1}, {3, 1.5, 1.5}));
  CHECK_FALSE(majorizes({3, 1.5, 1.5}, {4, 1, 1}));
  CHECK(majorizes({1, 1}, {1, 1}));
  CHECK_FALSE(majorizes({1, 2}, {2, 0.5}));
  CHECK(majorizes({0.95, 0.3, 0.1}, {0.95, 0.25, 0.15}));
  CHECK(majorizes({3, 3, 1}, {2.5, 2.5, 2}));
  CHECK_THROWS_AS(majorizes({1, 2}, {1, 1, 1}), DimensionError);
  CHECK_THROWS_AS(ParamVector({1.0, -1.0}), ParameterError);
}

TEST_CASE("majorization is a preorder") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto x = random_vector(rng, 4);
    CHECK(majorizes(x, x));
    auto perm = x.entries();
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(majorizes(x, ParamVector(perm)));
    CHECK(majorizes(ParamVector(perm), x));

    const auto [a, b] = random_majorization_pair(rng(), x, 3);
    const auto [b2, c] = random_majorization_pair(rng(), b, 3);
    CHECK(majorizes(a, c));
    (void)b2;
  }
}

TEST_CASE("cone membership") {
  CHECK(cone_membership({3, 1.5, 1.5}) == Cone::decreasing);
  CHECK(cone_membership({1, 1, 1}) == Cone::both);
  CHECK(cone_membership({1, 3, 2}) == Cone::neither);
  CHECK(cone_membership({0.5, 2}) == Cone::increasing);
  CHECK(arrange({1, 3, 2}, Cone::decreasing) == ParamVector({3, 2, 1}));
  CHECK(arrange({1, 3, 2}, Cone::increasing) == ParamVector({1, 2, 3}));
}

TEST_CASE("random pairs majorize and conserve totals") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + t % 5;
    const auto base = random_vector(rng, n);
    const Cone cone = t % 2 ? Cone::increasing : Cone::decreasing;
    const auto [x, y] = random_majorization_pair(rng(), base, 1 + t % 7, cone);
    CHECK(majorizes(x, y));
    CHECK(std::abs(x.sum() - y.sum()) < 1e-12);
    CHECK(std::abs(x.sum() - base.sum()) < 1e-12);
    CHECK((cone_membership(x) == cone || cone_membership(x) == Cone::both));
    CHECK((cone_membership(y) == cone || cone_membership(y) == Cone::both));
  }
  const auto [x, y] = random_majorization_pair(1, {3, 2, 1}, 0);
  CHECK(x == y);
}

TEST_CASE("schur probe classifications") {
  const auto sum = [](const ParamVector& v) { return v.sum(); };
  CHECK(schur_probe(sum, 4, 200, 1).classification == SchurClass::constant);
  CHECK(schur_probe(max_entry, 4, 200, 1).classification == SchurClass::consistent_convex);
  CHECK(schur_probe([](const ParamVector& v) { return -max_entry(v); }, 4, 200, 1).classification ==
        SchurClass::consistent_concave);

  // First coordinate is not symmetric, so pairs disagree.
  const auto first = [](const ParamVector& v) { return v[0] - v[1]; };
  const auto mixed = schur_probe(first, 3, 200, 5);
  CHECK(mixed.classification == SchurClass::mixed);
  CHECK(mixed.increase.has_value());
  CHECK(mixed.decrease.has_value());
}

TEST_CASE("schur probe of the negation is dual") {
  const auto sq = [](const ParamVector& v) {
    double s = 0;
    for (double e : v.entries()) s += e * e;
    return s;
  };
  for (std::uint64_t seed : {1u, 2u, 9u}) {
    const auto a = schur_probe(sq, 5, 100, seed);
    const auto b = schur_probe([&](const ParamVector& v) { return -sq(v); }, 5, 100, seed);
    CHECK(a.classification == SchurClass::consistent_convex);
    CHECK(b.classification == SchurClass::consistent_concave);
  }
}

TEST_CASE("r-convexity examples") {
  std::vector<double> grid;
  for (int i = 1; i <= 100; ++i) grid.push_back(0.1 * i);
  CHECK(r_convexity_check([](double x) { return x * x; }, 2, grid));
  const auto sqrt_check = r_convexity_check([](double x) { return std::sqrt(x); }, 2, grid);
  CHECK_FALSE(sqrt_check);
  REQUIRE(sqrt_check.witness);
  CHECK(sqrt_check.witness->lhs < -1e-9);
  CHECK(r_convexity_check([](double x) { return x * x * x; }, 3, grid));
  CHECK_FALSE(r_convexity_check([](double x) { return -x; }, 1, grid));
  CHECK_THROWS_AS(r_convexity_check([](double x) { return x; }, 2, std::vector<double>{1, 2, 3}), DimensionError);

  const auto y_grid = Grid::uniform();
  const auto xs = y_grid.xs();
  const OddsFunction w(BaselineModel::weibull(0.02, 2.0), 1.0);
  for (int r = 1; r <= 3; ++r) CHECK(r_convexity_check([&](double x) { return w(x); }, r, xs));
}
