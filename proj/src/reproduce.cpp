#include "wgorder/reproduce.hpp"

#include <cstdio>
#include <fstream>
#include <functional>

#include "wgorder/error.hpp"

namespace wgorder {

std::string to_string(CounterexampleId id) { return id == CounterexampleId::ce_3_1 ? "ce-3.1" : "ce-3.2"; }

CounterexampleId parse_counterexample(const std::string& s) {
  if (s == "ce-3.1") return CounterexampleId::ce_3_1;
  if (s == "ce-3.2") return CounterexampleId::ce_3_2;
  throw DomainError("unknown counterexample '" + s + "' (expected ce-3.1 or ce-3.2)");
}

BaselineModel ce31_baseline() { return BaselineModel::burr_xii(3.0, 0.35); }

std::pair<SystemSpec, SystemSpec> ce31_outlier_pair() {
  const std::vector<double> gamma{2.0, 1.5, 1.5};
  const OutlierSplit split{1, 2};
  return {SystemSpec::from_vectors({4.0, 1.0, 1.0}, gamma, 5.0, ce31_baseline()).with_outlier_split(split),
          SystemSpec::from_vectors({3.0, 1.5, 1.5}, gamma, 5.0, ce31_baseline()).with_outlier_split(split)};
}

std::pair<SystemSpec, SystemSpec> ce31_general_pair() {
  const std::vector<double> gamma{2.0, 1.5, 1.5};
  return {SystemSpec::from_vectors({0.95, 0.3, 0.1}, gamma, 5.0, ce31_baseline()),
          SystemSpec::from_vectors({0.95, 0.25, 0.15}, gamma, 5.0, ce31_baseline())};
}

BaselineModel ce32_baseline() { return BaselineModel::weibull(0.02, 2.0); }

std::pair<SystemSpec, SystemSpec> ce32_pair() {
  const std::vector<double> alpha{3.0, 3.0, 1.0};
  const OutlierSplit split{2, 1};
  return {SystemSpec::from_vectors(alpha, {3.0, 3.0, 1.0}, 3.4, ce32_baseline()).with_outlier_split(split),
          SystemSpec::from_vectors(alpha, {2.5, 2.5, 2.0}, 3.4, ce32_baseline()).with_outlier_split(split)};
}

Grid reproduction_grid() { return Grid::uniform(Grid::kDefaultYMin, Grid::kDefaultYMax, Grid::kWitnessPoints); }

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

Panel shape_panel(std::string id, std::string quantity, const Grid& grid, const std::function<double(double)>& f) {
  Panel p{std::move(id), std::move(quantity), false, {}, {}, {}, {}};
  for (double y : grid.ys()) {
    p.ys.push_back(y);
    p.xs.push_back(-std::log(y));
    p.values.push_back(f(p.xs.back()));
  }
  p.report = monotonicity_report(grid.xs(), std::vector<double>(p.values.rbegin(), p.values.rend()));
  return p;
}

Panel ratio_panel(std::string id, const Grid& grid, const std::pair<SystemSpec, SystemSpec>& systems) {
  Panel p{std::move(id), "g/h = pdf_a(x) / pdf_b(x)", true, {}, {}, {}, {}};
  std::vector<double> log_ratio;  // ln(pdf_b / pdf_a), ascending x
  for (double x : grid.xs()) log_ratio.push_back(min_log_pdf(systems.second, x) - min_log_pdf(systems.first, x));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    p.ys.push_back(grid.ys()[i]);
    p.xs.push_back(-std::log(p.ys.back()));
    p.values.push_back(std::exp(-log_ratio[grid.size() - 1 - i]));
  }
  p.report = monotonicity_report(grid.xs(), log_ratio);
  return p;
}

Json pair_json(const std::pair<SystemSpec, SystemSpec>& systems) {
  return Json{{"a", to_json(systems.first)}, {"b", to_json(systems.second)}};
}

std::string witness_text(const MonotonicityReport& r) {
  // Non-monotone panels report the first drop; a pure trend reports nothing.
  if (r.trend != Trend::non_monotone) return "";
  const auto& w = r.fall ? r.fall : r.rise;
  return format_number(w->x_to);
}

}  // namespace

std::vector<Panel> counterexample_panels(CounterexampleId id, const Grid& grid) {
  std::vector<Panel> panels;
  if (id == CounterexampleId::ce_3_1) {
    const OddsFunction w(ce31_baseline(), 1.0);
    panels.push_back(shape_panel("fig1a", "w'(x)", grid, [&](double x) { return w.derivative(x, 1); }));
    panels.push_back(
        shape_panel("fig1b", "x w'(x) / w(x)", grid, [&](double x) { return x * w.derivative(x, 1) / w(x); }));
    panels.push_back(shape_panel("fig1c", "x w''(x) / w'(x)", grid,
                                 [&](double x) { return x * w.derivative(x, 2) / w.derivative(x, 1); }));
    panels.push_back(ratio_panel("fig2a", grid, ce31_outlier_pair()));
    panels.push_back(ratio_panel("fig2b", grid, ce31_general_pair()));
  } else {
    const OddsFunction w(ce32_baseline(), 1.0);
    panels.push_back(shape_panel("fig3a", "w'(x)", grid, [&](double x) { return w.derivative(x, 1); }));
    panels.push_back(shape_panel("fig3b", "w''(x)", grid, [&](double x) { return w.derivative(x, 2); }));
    panels.push_back(ratio_panel("fig3c", grid, ce32_pair()));
  }
  return panels;
}

Json counterexample_config(CounterexampleId id) {
  if (id == CounterexampleId::ce_3_1) {
    return Json{{"counterexample", to_string(id)},
                {"baseline", to_json(ce31_baseline())},
                {"outlier_pair", pair_json(ce31_outlier_pair())},
                {"general_pair", pair_json(ce31_general_pair())}};
  }
  return Json{{"counterexample", to_string(id)}, {"baseline", to_json(ce32_baseline())}, {"pair", pair_json(ce32_pair())}};
}

ReproduceOutput reproduce(CounterexampleId id, const std::filesystem::path& outdir, const Grid& grid,
                          std::uint64_t seed) {
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) throw IoError(outdir.string() + ": cannot create directory: " + ec.message());

  ReproduceOutput out{counterexample_panels(id, grid), {}};
  const std::string config = counterexample_config(id).dump();
  const std::string grid_line = "# grid y in [" + format_number(grid.y_min()) + ", " + format_number(grid.y_max()) +
                                "], " + std::to_string(grid.size()) + " points, x = -ln y\n";

  const auto write = [&](const std::filesystem::path& file, const std::string& content) {
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError(file.string() + ": cannot open for writing");
    os << content;
    os.flush();
    if (!os) throw IoError(file.string() + ": write failed");
    out.files.push_back(file);
  };

  std::string summary = "# wgorder reproduce " + to_string(id) + "\n# seed " + std::to_string(seed) + "\n" +
                        grid_line + "# config " + config + "\npanel,file,quantity,classification,witness_x\n";
  for (const auto& p : out.panels) {
    const std::string name = to_string(id) + "_" + p.id + ".csv";
    std::string csv = "# wgorder reproduce " + to_string(id) + " " + p.id + "\n# seed " + std::to_string(seed) +
                      "\n" + grid_line + "# value " + p.quantity + "\n# config " + config + "\ny,x,value\n";
    for (std::size_t i = 0; i < p.ys.size(); ++i) {
      csv += format_number(p.ys[i]) + "," + format_number(p.xs[i]) + "," + format_number(p.values[i]) + "\n";
    }
    write(outdir / name, csv);
    const std::string axis = p.ratio ? " (ln pdf_b/pdf_a along x)" : " (along x)";
    summary += p.id + "," + name + ",\"" + p.quantity + axis + "\"," + to_string(p.report.trend) + "," +
               witness_text(p.report) + "\n";
  }
  write(outdir / (to_string(id) + "_summary.txt"), summary);
  return out;
}

}  // namespace wgorder
