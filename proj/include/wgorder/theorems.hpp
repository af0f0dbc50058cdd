#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wgorder/config.hpp"
#include "wgorder/orderlab.hpp"

namespace wgorder {

/// The seven comparison results for series-system minima:
///   t3_1  alpha >=m lambda, common gamma             -> hr   (independent)
///   t3_2  gamma >=m delta, common alpha, beta >= 2   -> hr   (independent)
///   t3_3  multiple-outlier alpha >=m lambda          -> lr   (independent)
///   t3_4  t3_1 under random shocks                   -> hr
///   t3_5  t3_3 under random shocks                   -> lr
///   t3_6  t3_1 with Archimedean copulas              -> st
///   t3_7  t3_2 with Archimedean copulas              -> st
enum class TheoremId { t3_1, t3_2, t3_3, t3_4, t3_5, t3_6, t3_7 };

std::string to_string(TheoremId id);
/// Accepts "t3.1" ... "t3.7", case-insensitive.
TheoremId parse_theorem(const std::string& s);
Relation concluded_relation(TheoremId id);
Regime required_regime(TheoremId id);

struct HypothesisReport {
  std::vector<std::string> unmet;
  bool met() const { return unmet.empty(); }
};

/// Checks every hypothesis of `id` for the pair (a, b) = (X system, Y system).
/// Odds-shape conditions are checked on 500 log-spaced points covering
/// gamma * x for every unit gamma and every grid x.
HypothesisReport check_hypotheses(TheoremId id, const SystemSpec& a, const SystemSpec& b, const Grid& grid);

enum class CertifyStatus { hypothesis_not_met, holds, fails, inconclusive };
std::string to_string(CertifyStatus s);

struct Certification {
  CertifyStatus status;
  HypothesisReport hypotheses;
  std::optional<OrderVerdict> verdict;  // absent when hypotheses are unmet
};

/// Runs the concluded order check only when every hypothesis holds.
Certification certify(TheoremId id, const SystemSpec& a, const SystemSpec& b, const Grid& grid);

struct VerifyOptions {
  Grid grid = Grid::uniform();
  /// Fixed (psi_1, psi_2) for t3_6 / t3_7; random admissible pairs otherwise.
  std::optional<std::pair<ArchimedeanGenerator, ArchimedeanGenerator>> generators;
  std::size_t max_attempts = 200;
};

struct TrialRecord {
  std::size_t index;
  std::uint64_t seed;
  std::size_t attempts;
  SystemSpec a;
  SystemSpec b;
  OrderVerdict concluded;
  // Hierarchy probes; hr and lr are absent in the copula regime.
  OrderVerdict st;
  std::optional<OrderVerdict> hr;
  std::optional<OrderVerdict> lr;
};

struct TheoremReport {
  TheoremId theorem;
  std::uint64_t seed;
  std::size_t trials;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::size_t inconclusive = 0;
  /// lr-holds without hr-holds, or hr-holds without st-holds.
  std::size_t hierarchy_violations = 0;
  std::vector<TrialRecord> records;

  std::string text() const;
  Json json() const;
};

/// Draws `trials` random configurations satisfying the hypotheses of `id`
/// (trial i uses derive_seed(seed, i)), certifies each and tallies the
/// concluded order. Throws GenerationExhaustedError when a trial finds no
/// admissible configuration within opts.max_attempts draws.
TheoremReport verify_theorem(TheoremId id, std::uint64_t seed, std::size_t trials, const VerifyOptions& opts = {});

Json to_json(const OrderVerdict& v);

}  // namespace wgorder
