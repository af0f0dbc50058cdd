#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "wgorder/config.hpp"
#include "wgorder/orderlab.hpp"

namespace wgorder {

enum class CounterexampleId { ce_3_1, ce_3_2 };

std::string to_string(CounterexampleId id);
CounterexampleId parse_counterexample(const std::string& s);

// Presets. In ce-3.1 the second vector of each pair is the alpha-type scale
// (lambda) of the Y system, not a second gamma: its total matches the X
// system's alpha (6 = 6, 1.35 = 1.35) and gamma stays at (2, 1.5, 1.5).

/// Burr XII(c = 3, k = 0.35).
BaselineModel ce31_baseline();
/// alpha = (4, 1, 1) vs lambda = (3, 1.5, 1.5), beta = 5, gamma = (2, 1.5, 1.5).
std::pair<SystemSpec, SystemSpec> ce31_outlier_pair();
/// alpha = (0.95, 0.3, 0.1) vs lambda = (0.95, 0.25, 0.15), same beta and gamma.
std::pair<SystemSpec, SystemSpec> ce31_general_pair();
/// Weibull(rate 0.02, shape 2).
BaselineModel ce32_baseline();
/// beta = 3.4, alpha = (3, 3, 1); gamma = (3, 3, 1) vs delta = (2.5, 2.5, 2).
std::pair<SystemSpec, SystemSpec> ce32_pair();

/// One figure panel sampled on a grid. Rows follow the grid's y order.
///
/// Shape panels hold a function of x and are classified along ascending x.
/// Ratio panels hold g/h = pdf_a / pdf_b (the plotted quantity); they are
/// classified through ln(pdf_b / pdf_a) along ascending x, so "increasing"
/// means a <=_lr b on the grid.
struct Panel {
  std::string id;        // "fig1a", ...
  std::string quantity;  // human-readable description of value
  bool ratio;
  std::vector<double> ys;
  std::vector<double> xs;
  std::vector<double> values;
  MonotonicityReport report;
};

std::vector<Panel> counterexample_panels(CounterexampleId id, const Grid& grid);
/// Full resolved configuration of a preset, as embedded in output files.
Json counterexample_config(CounterexampleId id);

/// Grid used for reproduction unless overridden: 2000 points on [0.01, 0.99].
Grid reproduction_grid();

struct ReproduceOutput {
  std::vector<Panel> panels;
  std::vector<std::filesystem::path> files;  // panel CSVs, then the summary
};

/// Writes <id>_<panel>.csv (columns y,x,value after '#' header lines that carry
/// the seed and configuration) per panel, plus <id>_summary.txt with every
/// classification. Output is byte-identical for identical inputs. Throws
/// IoError when a file cannot be written.
ReproduceOutput reproduce(CounterexampleId id, const std::filesystem::path& outdir, const Grid& grid,
                          std::uint64_t seed);

/// %.17g, the format used for every number the tools write.
std::string format_number(double v);

}  // namespace wgorder
