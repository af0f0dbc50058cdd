#include "wgorder/theorems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "wgorder/error.hpp"
#include "wgorder/majorization.hpp"
#include "wgorder/numeric.hpp"
#include "wgorder/random.hpp"

namespace wgorder {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::t3_1: return "t3.1";
    case TheoremId::t3_2: return "t3.2";
    case TheoremId::t3_3: return "t3.3";
    case TheoremId::t3_4: return "t3.4";
    case TheoremId::t3_5: return "t3.5";
    case TheoremId::t3_6: return "t3.6";
    case TheoremId::t3_7: return "t3.7";
  }
  return "unknown";
}

TheoremId parse_theorem(const std::string& s) {
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (auto id : {TheoremId::t3_1, TheoremId::t3_2, TheoremId::t3_3, TheoremId::t3_4, TheoremId::t3_5, TheoremId::t3_6,
                  TheoremId::t3_7}) {
    if (lower == to_string(id)) return id;
  }
  throw DomainError("unknown theorem '" + s + "' (expected t3.1 ... t3.7)");
}

Relation concluded_relation(TheoremId id) {
  switch (id) {
    case TheoremId::t3_3:
    case TheoremId::t3_5: return Relation::lr;
    case TheoremId::t3_6:
    case TheoremId::t3_7: return Relation::st;
    default: return Relation::hr;
  }
}

Regime required_regime(TheoremId id) {
  switch (id) {
    case TheoremId::t3_4:
    case TheoremId::t3_5: return Regime::shocked;
    case TheoremId::t3_6:
    case TheoremId::t3_7: return Regime::copula;
    default: return Regime::independent;
  }
}

std::string to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::hypothesis_not_met: return "hypothesis-not-met";
    case CertifyStatus::holds: return "holds";
    case CertifyStatus::fails: return "fails";
    case CertifyStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kShapeGridPoints = 500;
// Generated baselines keep L(gamma x) below this on the grid, well clear of
// the odds saturation point.
constexpr double kMaxGeneratedHazard = 0.9 * kSaturationCumulativeHazard;

bool varies_scale(TheoremId id) { return id == TheoremId::t3_2 || id == TheoremId::t3_7; }
bool multiple_outlier(TheoremId id) { return id == TheoremId::t3_3 || id == TheoremId::t3_5; }

double min_beta(TheoremId id) {
  switch (id) {
    case TheoremId::t3_2: return 2.0;
    case TheoremId::t3_6: return 0.0;
    default: return 1.0;
  }
}

bool in_cone(const ParamVector& v, Cone c) {
  const Cone m = cone_membership(v);
  return m == c || m == Cone::both;
}

bool share_cone(const std::vector<ParamVector>& vs) {
  for (Cone c : {Cone::decreasing, Cone::increasing}) {
    if (std::all_of(vs.begin(), vs.end(), [c](const ParamVector& v) { return in_cone(v, c); })) return true;
  }
  return false;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

void check_odds_shape(TheoremId id, const BaselineModel& baseline, const std::vector<double>& ts,
                      std::vector<std::string>& unmet) {
  const OddsFunction w(baseline, 1.0);
  try {
    const ScalarFunction f = [&w](double t) { return w(t); };
    if (id != TheoremId::t3_6) {
      if (!r_convexity_check(f, 2, ts)) unmet.push_back("baseline odds are not convex");
    }
    // w'' nondecreasing, i.e. nonnegative third divided differences.
    if (id == TheoremId::t3_2 && !r_convexity_check(f, 3, ts)) unmet.push_back("baseline odds are not 2-convex");
    if (multiple_outlier(id)) {
      const auto elasticity = monotonicity_report([&w](double t) { return t * w.derivative(t, 1) / w(t); }, ts);
      if (!elasticity.nonincreasing()) unmet.push_back("t w'(t) / w(t) is not decreasing");
      const auto curvature =
          monotonicity_report([&w](double t) { return t * w.derivative(t, 2) / w.derivative(t, 1); }, ts);
      if (!curvature.nonincreasing()) unmet.push_back("t w''(t) / w'(t) is not decreasing");
    }
  } catch (const SaturationError& e) {
    unmet.push_back(std::string("baseline odds saturate on the checked range: ") + e.what());
  } catch (const EvaluationError& e) {
    unmet.push_back(std::string("baseline odds shape not evaluable: ") + e.what());
  }
}

// Super-additivity is probed on the generator grid stretched to the largest
// copula argument sum(phi_1(S_k(x))) the configuration reaches on the grid.
std::vector<std::pair<double, double>> copula_pairs(const SystemSpec& a, const Grid& grid) {
  const auto& g1 = *a.generator();
  double reach = 50.0;
  for (double x : grid.xs()) {
    double total = 0.0;
    for (const auto& u : a.units()) total += g1.phi_of_log(-wg_cumulative_hazard(u, x));
    if (std::isfinite(total)) reach = std::max(reach, total);
  }
  return pair_grid(log_spaced(1e-4, reach, 60));
}

}  // namespace

HypothesisReport check_hypotheses(TheoremId id, const SystemSpec& a, const SystemSpec& b, const Grid& grid) {
  HypothesisReport report;
  auto& unmet = report.unmet;
  const Regime want = required_regime(id);
  if (a.regime() != want || b.regime() != want) {
    unmet.push_back("both systems must be in the " + to_string(want) + " regime");
    return report;
  }
  if (a.size() != b.size()) {
    unmet.push_back("systems differ in size");
    return report;
  }
  if (a.beta() != b.beta()) unmet.push_back("systems differ in beta");
  if (!(a.baseline() == b.baseline())) unmet.push_back("systems differ in baseline");
  if (a.beta() < min_beta(id)) unmet.push_back("beta = " + fmt(a.beta()) + " is below " + fmt(min_beta(id)));

  const ParamVector alpha(a.alphas()), lambda(b.alphas()), gamma(a.gammas()), delta(b.gammas());
  if (varies_scale(id)) {
    if (!(alpha == lambda)) unmet.push_back("scale-alpha vectors must coincide");
    if (!majorizes(gamma, delta)) unmet.push_back("gamma does not majorize delta");
    if (!share_cone({alpha, gamma, delta})) unmet.push_back("alpha, gamma, delta do not share an ordered cone");
  } else {
    if (!(gamma == delta)) unmet.push_back("gamma vectors must coincide");
    if (!majorizes(alpha, lambda)) unmet.push_back("alpha does not majorize lambda");
    if (!share_cone({alpha, lambda, gamma})) unmet.push_back("alpha, lambda, gamma do not share an ordered cone");
  }

  if (multiple_outlier(id)) {
    if (!a.outlier_split() || !b.outlier_split()) {
      unmet.push_back("both systems must follow a multiple-outlier model");
    } else if (!(*a.outlier_split() == *b.outlier_split())) {
      unmet.push_back("outlier block sizes differ");
    }
  }
  if (want == Regime::shocked && a.shock_product() > b.shock_product()) {
    unmet.push_back("prod(p) = " + fmt(a.shock_product()) + " exceeds prod(p*) = " + fmt(b.shock_product()));
  }
  if (want == Regime::copula) {
    const auto& g1 = *a.generator();
    const auto& g2 = *b.generator();
    try {
      if (!super_additive_check(compose_phi_psi(g2, g1), copula_pairs(a, grid))) {
        unmet.push_back("phi_2 o psi_1 is not super-additive");
      }
    } catch (const SaturationError&) {
      unmet.push_back("odds saturate on the grid");
    }
    if (!log_convexity_check(g2, default_generator_grid())) unmet.push_back("psi_2 is not log-convex");
  }

  if (id != TheoremId::t3_6 && unmet.empty()) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto* v : {&gamma, &delta}) {
      for (double g : v->entries()) {
        lo = std::min(lo, g * grid.xs().front());
        hi = std::max(hi, g * grid.xs().back());
      }
    }
    check_odds_shape(id, a.baseline(), log_spaced(lo, hi, kShapeGridPoints), unmet);
  }
  return report;
}

Certification certify(TheoremId id, const SystemSpec& a, const SystemSpec& b, const Grid& grid) {
  Certification c{CertifyStatus::hypothesis_not_met, check_hypotheses(id, a, b, grid), std::nullopt};
  if (!c.hypotheses.met()) return c;
  c.verdict = check_order(concluded_relation(id), a, b, grid);
  switch (c.verdict->status) {
    case VerdictStatus::holds: c.status = CertifyStatus::holds; break;
    case VerdictStatus::fails: c.status = CertifyStatus::fails; break;
    case VerdictStatus::inconclusive: c.status = CertifyStatus::inconclusive; break;
  }
  return c;
}

namespace {

std::vector<double> uniform_vector(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

// Scales a baseline so that L(t_max) lands at a drawn level in [1, 15].
BaselineModel draw_baseline(Rng& rng, TheoremId id, double t_max) {
  const double level = rng.uniform(1.0, 15.0);
  const auto exponential = [&] { return BaselineModel::exponential(level / t_max); };
  const auto weibull = [&](double k_lo, double k_hi) {
    const double k = rng.uniform(k_lo, k_hi);
    return BaselineModel::weibull(level / std::pow(t_max, k), k);
  };
  const auto burr = [&] {
    const double c = rng.uniform(1.5, 4.0);
    return BaselineModel::burr_xii(c, rng.uniform(std::max(1.0 / c, 0.2), 1.0));
  };
  switch (id) {
    case TheoremId::t3_2: return rng.bernoulli(0.5) ? exponential() : weibull(2.0, 3.0);
    case TheoremId::t3_3:
    case TheoremId::t3_5: return rng.bernoulli(0.8) ? burr() : BaselineModel::lomax(1.0);
    case TheoremId::t3_6:
      switch (rng.integer(0, 3)) {
        case 0: return exponential();
        case 1: return weibull(0.5, 3.0);
        case 2: return burr();
        default: return BaselineModel::lomax(rng.uniform(0.5, 3.0));
      }
    default: return rng.bernoulli(0.5) ? exponential() : weibull(1.0, 3.0);
  }
}

ArchimedeanGenerator draw_generator(Rng& rng) {
  switch (rng.integer(0, 2)) {
    case 0: return ArchimedeanGenerator::independence();
    case 1: return ArchimedeanGenerator::clayton(rng.uniform(0.2, 3.0));
    default: return ArchimedeanGenerator::gumbel(rng.uniform(1.0, 3.0));
  }
}

std::vector<double> repeat_blocks(double first, double second, std::size_t n1, std::size_t n2) {
  std::vector<double> v(n1, first);
  v.insert(v.end(), n2, second);
  return v;
}

struct Candidate {
  SystemSpec a;
  SystemSpec b;
};

Candidate draw_candidate(TheoremId id, Rng& rng, const VerifyOptions& opts) {
  const std::size_t n = rng.integer(2, 5);
  const Cone cone = rng.bernoulli(0.5) ? Cone::decreasing : Cone::increasing;
  const double beta = id == TheoremId::t3_2 ? rng.uniform(2.0, 6.0)
                      : id == TheoremId::t3_6 ? rng.uniform(0.5, 6.0)
                                              : rng.uniform(1.0, 6.0);
  const double x_max = opts.grid.xs().back();

  std::vector<double> alpha, lambda, gamma, delta;
  std::optional<OutlierSplit> split;
  if (multiple_outlier(id)) {
    const std::size_t n1 = rng.integer(1, n - 1);
    split = OutlierSplit{n1, n - n1};
    double a1 = rng.uniform(0.5, 3.0), a2 = rng.uniform(0.5, 3.0);
    double g1 = rng.uniform(0.5, 2.0), g2 = rng.uniform(0.5, 2.0);
    // First block holds the larger values in the decreasing cone.
    const bool first_high = cone == Cone::decreasing;
    if ((a1 < a2) == first_high) std::swap(a1, a2);
    if ((g1 < g2) == first_high) std::swap(g1, g2);
    // lambda = t alpha + (1 - t) mean(alpha) is a doubly stochastic image of alpha.
    const double mean = (static_cast<double>(n1) * a1 + static_cast<double>(n - n1) * a2) / static_cast<double>(n);
    const double t = rng.uniform();
    alpha = repeat_blocks(a1, a2, n1, n - n1);
    lambda = repeat_blocks(mean + t * (a1 - mean), mean + t * (a2 - mean), n1, n - n1);
    gamma = delta = repeat_blocks(g1, g2, n1, n - n1);
  } else if (varies_scale(id)) {
    alpha = lambda = arrange(ParamVector(uniform_vector(rng, n, 0.5, 3.0)), cone).entries();
    auto [g, d] = random_majorization_pair(rng.bits(), ParamVector(uniform_vector(rng, n, 0.5, 2.0)),
                                           rng.integer(1, 5), cone);
    gamma = g.entries();
    delta = d.entries();
  } else {
    gamma = delta = arrange(ParamVector(uniform_vector(rng, n, 0.5, 2.0)), cone).entries();
    auto [x, y] = random_majorization_pair(rng.bits(), ParamVector(uniform_vector(rng, n, 0.5, 3.0)),
                                           rng.integer(1, 5), cone);
    alpha = x.entries();
    lambda = y.entries();
  }
  const double t_max = *std::max_element(gamma.begin(), gamma.end()) * x_max;
  const auto baseline = draw_baseline(rng, id, t_max);

  SystemSpec a = SystemSpec::from_vectors(alpha, gamma, beta, baseline);
  SystemSpec b = SystemSpec::from_vectors(lambda, delta, beta, baseline);
  if (split) {
    a = a.with_outlier_split(*split);
    b = b.with_outlier_split(*split);
  }
  if (required_regime(id) == Regime::shocked) {
    auto p = uniform_vector(rng, n, 0.5, 1.0);
    auto q = uniform_vector(rng, n, 0.5, 1.0);
    const auto product = [](const std::vector<double>& v) {
      double r = 1.0;
      for (double x : v) r *= x;
      return r;
    };
    if (product(p) > product(q)) std::swap(p, q);
    a = a.with_shocks(p);
    b = b.with_shocks(q);
  }
  if (required_regime(id) == Regime::copula) {
    auto [g1, g2] = opts.generators ? *opts.generators : std::pair{draw_generator(rng), draw_generator(rng)};
    a = a.with_generator(g1);
    b = b.with_generator(g2);
  }
  return {std::move(a), std::move(b)};
}

bool within_saturation_margin(const SystemSpec& s, double x_max) {
  for (const auto& u : s.units()) {
    if (u.baseline.cumulative_hazard(u.gamma * x_max) > kMaxGeneratedHazard) return false;
  }
  return true;
}

Json witness_json(const std::optional<OrderWitness>& w) {
  if (!w) return nullptr;
  return Json{{"x", w->x}, {"lhs", w->lhs}, {"rhs", w->rhs}, {"what", w->what}};
}

}  // namespace

Json to_json(const OrderVerdict& v) {
  return Json{{"relation", to_string(v.relation)},
              {"status", to_string(v.status)},
              {"tolerance", v.tolerance},
              {"witness", witness_json(v.witness)}};
}

TheoremReport verify_theorem(TheoremId id, std::uint64_t seed, std::size_t trials, const VerifyOptions& opts) {
  if (trials < 1) throw ParameterError("verify needs at least one trial");
  if (opts.generators && required_regime(id) == Regime::copula) {
    const auto& [g1, g2] = *opts.generators;
    if (!super_additive_check(compose_phi_psi(g2, g1), default_pair_grid()) ||
        !log_convexity_check(g2, default_generator_grid())) {
      throw GenerationExhaustedError("generator pair (" + g1.describe() + ", " + g2.describe() +
                                     ") violates the copula hypotheses");
    }
  }
  TheoremReport report{id, seed, trials, 0, 0, 0, 0, {}};
  const Relation concluded = concluded_relation(id);
  const bool copula = required_regime(id) == Regime::copula;
  const double x_max = opts.grid.xs().back();

  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t trial_seed = derive_seed(seed, i);
    Rng rng(trial_seed);
    std::optional<Candidate> chosen;
    std::size_t attempts = 0;
    while (!chosen && attempts < opts.max_attempts) {
      ++attempts;
      auto c = draw_candidate(id, rng, opts);
      if (!within_saturation_margin(c.a, x_max) || !within_saturation_margin(c.b, x_max)) continue;
      if (check_hypotheses(id, c.a, c.b, opts.grid).met()) chosen = std::move(c);
    }
    if (!chosen) {
      throw GenerationExhaustedError("no admissible configuration for " + to_string(id) + " trial " +
                                     std::to_string(i) + " after " + std::to_string(attempts) + " attempts");
    }

    auto st = check_st(chosen->a, chosen->b, opts.grid);
    std::optional<OrderVerdict> hr, lr;
    if (!copula) {
      hr = check_hr(chosen->a, chosen->b, opts.grid);
      lr = check_lr(chosen->a, chosen->b, opts.grid);
    }
    const OrderVerdict& main = concluded == Relation::st ? st : concluded == Relation::hr ? *hr : *lr;
    switch (main.status) {
      case VerdictStatus::holds: ++report.passes; break;
      case VerdictStatus::fails: ++report.failures; break;
      case VerdictStatus::inconclusive: ++report.inconclusive; break;
    }
    const bool lr_without_hr = lr && hr && lr->holds() && !hr->holds();
    const bool hr_without_st = hr && hr->holds() && !st.holds();
    if (lr_without_hr || hr_without_st) ++report.hierarchy_violations;
    report.records.push_back(
        TrialRecord{i, trial_seed, attempts, std::move(chosen->a), std::move(chosen->b), main, st, hr, lr});
  }
  return report;
}

std::string TheoremReport::text() const {
  std::ostringstream os;
  os << "theorem " << to_string(theorem) << " (concludes " << to_string(concluded_relation(theorem)) << ", "
     << to_string(required_regime(theorem)) << " regime)\n";
  os << "seed " << seed << ", trials " << trials << "\n";
  os << "passes " << passes << ", failures " << failures << ", inconclusive " << inconclusive << "\n";
  os << "hierarchy violations " << hierarchy_violations << "\n";
  for (const auto& r : records) {
    os << "trial " << r.index << " seed " << r.seed << " attempts " << r.attempts << ": "
       << to_string(r.concluded.relation) << " " << to_string(r.concluded.status);
    if (r.concluded.status != VerdictStatus::holds) {
      if (r.concluded.witness) {
        os << " at x = " << fmt(r.concluded.witness->x) << " (" << r.concluded.witness->what << ")";
      }
      os << "\n  a = " << to_json(r.a).dump() << "\n  b = " << to_json(r.b).dump();
    }
    os << "\n";
  }
  return os.str();
}

Json TheoremReport::json() const {
  Json recs = Json::array();
  for (const auto& r : records) {
    Json verdicts{{"st", to_json(r.st)}};
    if (r.hr) verdicts["hr"] = to_json(*r.hr);
    if (r.lr) verdicts["lr"] = to_json(*r.lr);
    recs.push_back(Json{{"index", r.index},
                        {"seed", r.seed},
                        {"attempts", r.attempts},
                        {"a", to_json(r.a)},
                        {"b", to_json(r.b)},
                        {"concluded", to_json(r.concluded)},
                        {"verdicts", verdicts}});
  }
  return Json{{"theorem", to_string(theorem)},
              {"relation", to_string(concluded_relation(theorem))},
              {"regime", to_string(required_regime(theorem))},
              {"seed", seed},
              {"trials", trials},
              {"passes", passes},
              {"failures", failures},
              {"inconclusive", inconclusive},
              {"hierarchy_violations", hierarchy_violations},
              {"records", recs}};
}

}  // namespace wgorder
