#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wgorder/error.hpp"
#include "wgorder/weibull_g.hpp"

using namespace wgorder;
using Catch::Approx;

namespace {

const BaselineModel kExp1 = BaselineModel::exponential(1.0);

std::vector<BaselineModel> baselines() {
  return {kExp1, BaselineModel::weibull(0.5, 1.5), BaselineModel::burr_xii(3.0, 0.35), BaselineModel::lomax(2.0)};
}

}  // namespace

TEST_CASE("parameters must be positive") {
  CHECK_THROWS_AS(WeibullGParams(0.0, 1.0, 1.0, kExp1), ParameterError);
  CHECK_THROWS_AS(WeibullGParams(1.0, -1.0, 1.0, kExp1), ParameterError);
  CHECK_THROWS_AS(WeibullGParams(1.0, 1.0, std::nan(""), kExp1), ParameterError);
}

TEST_CASE("cdf and survival examples") {
  const WeibullGParams p11(1.0, 1.0, 1.0, kExp1), p22(2.0, 2.0, 1.0, kExp1);
  CHECK(wg_cdf(p22, 0.0) == 0.0);
  CHECK(wg_survival(p22, 0.0) == 1.0);
  CHECK(wg_cdf(p11, std::log(2.0)) == Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(wg_cdf(p11, std::log(2.0)) == Approx(0.632121).margin(1e-6));
  CHECK(wg_cdf(p22, std::log(2.0)) == Approx(0.864665).margin(1e-6));
  CHECK(wg_hazard(WeibullGParams(2.0, 1.0, 1.0, kExp1), 0.0) == Approx(2.0));
}

TEST_CASE("hazard diverges explicitly for beta below one at zero") {
  const WeibullGParams p(1.0, 0.5, 1.0, kExp1);
  CHECK(wg_hazard(p, 0.0) == HUGE_VAL);
  CHECK(std::isfinite(wg_hazard(p, 1e-8)));
}

TEST_CASE("pdf equals hazard times survival") {
  for (const auto& b : baselines()) {
    for (double beta : {0.5, 1.0, 2.0, 5.0}) {
      const WeibullGParams p(1.3, beta, 0.8, b);
      for (double x = 0.01; x < 5.0; x += 0.07) {
        CHECK(std::abs(wg_pdf(p, x) - wg_hazard(p, x) * wg_survival(p, x)) < 1e-12);
      }
    }
  }
}

TEST_CASE("pdf integrates to one") {
  // Beyond the odds saturation point the density is dropped; the survival
  // there bounds what is lost.
  const WeibullGParams p(1.0, 2.0, 1.0, kExp1);
  const double edge = kSaturationCumulativeHazard;
  CHECK(wg_survival(p, edge * (1 - 1e-9)) < 1e-300);
  const auto pdf_or_zero = [&](double x) {
    try {
      return wg_pdf(p, x);
    } catch (const SaturationError&) {
      return 0.0;
    }
  };
  CHECK(oracle::integrate(pdf_or_zero, 0.0, 40.0) == Approx(1.0).margin(1e-5));
  for (const auto& b : baselines()) {
    for (double beta : {1.0, 2.0, 5.0}) {
      const WeibullGParams q(0.7, beta, 1.4, b);
      const double hi = wg_quantile(q, 1.0 - 1e-12);
      INFO(b.describe() << " beta=" << beta);
      CHECK(oracle::integrate([&](double x) { return wg_pdf(q, x); }, 0.0, hi) == Approx(1.0).margin(1e-5));
    }
  }
}

TEST_CASE("cdf is a distribution function on grids") {
  for (const auto& b : baselines()) {
    for (double beta : {0.5, 1.0, 2.0, 5.0}) {
      const WeibullGParams p(1.0, beta, 1.0, b);
      CHECK(wg_cdf(p, 0.0) == 0.0);
      double prev = 0.0;
      for (double x = 0.05; x < 30.0; x *= 1.1) {
        const auto f = wg_cdf_flagged(p, x);
        CHECK(f.value >= prev);
        prev = f.value;
      }
      CHECK(wg_cdf_flagged(p, 1e6).value == Approx(1.0).margin(1e-9));
    }
  }
}

TEST_CASE("saturated cdf clamps with a flag") {
  const WeibullGParams p(1.0, 1.0, 1.0, kExp1);
  const auto f = wg_cdf_flagged(p, 100.0);
  CHECK(f.saturated);
  CHECK(f.value == 1.0);
  CHECK_FALSE(wg_cdf_flagged(p, 1.0).saturated);
  CHECK_THROWS_AS(wg_cdf(p, 100.0), SaturationError);
}

TEST_CASE("exponential-G reduction and scale coherence") {
  for (const auto& b : baselines()) {
    const WeibullGParams p1(1.7, 1.0, 1.0, b);
    const OddsFunction w(b, 1.0);
    for (double x : {0.1, 0.5, 2.0}) CHECK(wg_cdf(p1, x) == Approx(1.0 - std::exp(-1.7 * w(x))).epsilon(1e-12));

    const WeibullGParams scaled(0.9, 2.5, 1.6, b), unit(0.9, 2.5, 1.0, b);
    for (double x : {0.1, 0.5, 2.0}) CHECK(wg_cdf(scaled, x) == wg_cdf(unit, 1.6 * x));
  }
}

TEST_CASE("quantile inverts the cdf") {
  const WeibullGParams p11(1.0, 1.0, 1.0, kExp1);
  CHECK(wg_quantile(p11, 0.0) == 0.0);
  CHECK(wg_quantile(p11, 1.0 - std::exp(-1.0)) == Approx(std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(wg_quantile(p11, 1.0), DomainError);
  CHECK_THROWS_AS(wg_quantile(p11, -0.1), DomainError);
  for (const auto& b : baselines()) {
    for (double beta : {0.5, 1.0, 3.0}) {
      const WeibullGParams p(2.0, beta, 0.6, b);
      for (int i = 1; i <= 19; ++i) {
        const double u = 0.05 * i;
        CHECK(std::abs(wg_cdf(p, wg_quantile(p, u)) - u) < 1e-10);
      }
    }
  }
}

TEST_CASE("survival inverse in log space") {
  const WeibullGParams p(1.2, 2.0, 1.1, BaselineModel::burr_xii(3.0, 0.35));
  for (double ls : {-1e-6, -0.5, -3.0, -25.0}) {
    const double x = wg_survival_inverse_log(p, ls);
    CHECK(-wg_cumulative_hazard(p, x) == Approx(ls).epsilon(1e-10));
  }
}

TEST_CASE("sampling is deterministic and matches the cdf") {
  const WeibullGParams p(1.0, 1.0, 1.0, kExp1);
  CHECK(wg_sample(p, 7, 3) == wg_sample(p, 7, 3));
  CHECK(wg_sample(p, 7, 3) != wg_sample(p, 8, 3));

  const auto draws = wg_sample(p, 11, 100000);
  CHECK(1.0 - oracle::empirical_survival(draws, std::log(2.0)) == Approx(0.632).margin(0.005));
  CHECK(oracle::ks_statistic(draws, [&](double x) { return wg_cdf(p, x); }) < 0.01);

  const WeibullGParams q(0.5, 3.0, 2.0, BaselineModel::burr_xii(3.0, 0.35));
  const auto more = wg_sample(q, 12, 100000);
  CHECK(oracle::ks_statistic(more, [&](double x) { return wg_cdf_flagged(q, x).value; }) < 0.01);
}
