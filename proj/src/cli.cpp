#include "wgorder/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wgorder/config.hpp"
#include "wgorder/error.hpp"
#include "wgorder/majorization.hpp"
#include "wgorder/reproduce.hpp"
#include "wgorder/theorems.hpp"

namespace wgorder {
namespace {

const char* const kExitCodeHelp =
    "Exit codes:\n"
    "  0  order holds / all theorem trials passed / success\n"
    "  1  order fails / a theorem trial failed / x does not majorize y\n"
    "  2  inconclusive (saturation, underflow, zero density)\n"
    "  3  configuration error (missing or malformed file, incompatible systems)\n"
    "  4  usage error\n"
    "  5  I/O error\n"
    "  6  hypothesis generation exhausted\n";

class UsageError : public Error {
 public:
  using Error::Error;
};

struct GridFlags {
  std::size_t points = Grid::kDefaultPoints;
  double y_min = Grid::kDefaultYMin;
  double y_max = Grid::kDefaultYMax;

  Grid grid() const {
    try {
      return Grid::uniform(y_min, y_max, points);
    } catch (const Error& e) {
      throw UsageError(std::string("invalid grid flags: ") + e.what());
    }
  }
  std::string describe() const {
    return "grid y in [" + format_number(y_min) + ", " + format_number(y_max) + "], " + std::to_string(points) +
           " points";
  }
};

void add_grid_flags(CLI::App* cmd, GridFlags& g) {
  cmd->add_option("--grid-points", g.points, "Number of grid points")->capture_default_str();
  cmd->add_option("--y-min", g.y_min, "Smallest y of the grid (x = -ln y)")->capture_default_str();
  cmd->add_option("--y-max", g.y_max, "Largest y of the grid")->capture_default_str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError(path + ": cannot open for writing");
  os << content;
  os.flush();
  if (!os) throw IoError(path + ": write failed");
}

ArchimedeanGenerator parse_generator_flag(const std::string& s) {
  const auto colon = s.find(':');
  std::optional<double> theta;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      theta = std::stod(s.substr(colon + 1), &used);
      if (used != s.size() - colon - 1) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
      throw UsageError("bad generator '" + s + "' (expected FAMILY or FAMILY:THETA)");
    }
  }
  try {
    return ArchimedeanGenerator::from_name(s.substr(0, colon), theta);
  } catch (const Error& e) {
    throw UsageError(std::string("bad generator '") + s + "': " + e.what());
  }
}

int status_code(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::holds: return kExitHolds;
    case VerdictStatus::fails: return kExitFails;
    case VerdictStatus::inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_check(const std::string& relation, const std::string& path_a, const std::string& path_b,
              const GridFlags& flags, const std::string& out_path, std::ostream& out) {
  Relation r;
  try {
    r = parse_relation(relation);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const Grid grid = flags.grid();
  const SystemSpec a = load_system_file(path_a);
  const SystemSpec b = load_system_file(path_b);
  const OrderVerdict v = check_order(r, a, b, grid);

  std::ostringstream os;
  os << "# wgorder check " << to_string(r) << "\n";
  os << "# " << flags.describe() << "\n";
  os << "# a " << path_a << " spec " << spec_hash(to_json(a)) << " " << to_json(a).dump() << "\n";
  os << "# b " << path_b << " spec " << spec_hash(to_json(b)) << " " << to_json(b).dump() << "\n";
  os << "a <=_" << to_string(r) << " b: " << to_string(v.status) << "\n";
  if (v.witness) {
    os << "witness x = " << format_number(v.witness->x) << " lhs = " << format_number(v.witness->lhs)
       << " rhs = " << format_number(v.witness->rhs) << " (" << v.witness->what << ")\n";
  }
  os << "tolerance " << format_number(v.tolerance) << "\n";
  out << os.str();
  if (!out_path.empty()) write_file(out_path, os.str());
  return status_code(v.status);
}

int cmd_reproduce(const std::string& id, const std::string& outdir, const GridFlags& flags, std::uint64_t seed,
                  std::ostream& out) {
  CounterexampleId ce;
  try {
    ce = parse_counterexample(id);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto result = reproduce(ce, outdir, flags.grid(), seed);
  for (const auto& p : result.panels) {
    out << p.id << ": " << to_string(p.report.trend);
    if (p.report.trend == Trend::non_monotone) {
      const auto& w = p.report.fall ? p.report.fall : p.report.rise;
      out << " (witness x = " << format_number(w->x_to) << ")";
    }
    out << "\n";
  }
  for (const auto& f : result.files) out << "wrote " << f.string() << "\n";
  return kExitHolds;
}

int cmd_verify(const std::string& id, std::size_t trials, std::uint64_t seed, const GridFlags& flags,
               const std::string& copula1, const std::string& copula2, const std::string& out_path,
               std::ostream& out) {
  TheoremId theorem;
  try {
    theorem = parse_theorem(id);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (trials < 1) throw UsageError("--trials must be at least 1");
  VerifyOptions opts;
  opts.grid = flags.grid();
  if (!copula1.empty() || !copula2.empty()) {
    if (copula1.empty() || copula2.empty()) throw UsageError("--copula1 and --copula2 go together");
    opts.generators = std::pair{parse_generator_flag(copula1), parse_generator_flag(copula2)};
  }
  const auto report = verify_theorem(theorem, seed, trials, opts);
  out << report.text();
  if (!out_path.empty()) {
    Json j = report.json();
    j["grid"] = Json{{"y_min", flags.y_min}, {"y_max", flags.y_max}, {"points", flags.points}};
    write_file(out_path, j.dump(2) + "\n");
  }
  if (report.failures > 0) return kExitFails;
  if (report.inconclusive > 0) return kExitInconclusive;
  return kExitHolds;
}

int cmd_sample(const std::string& path, std::size_t count, std::uint64_t seed, const std::string& out_path,
               std::ostream& out) {
  if (count == 0) throw UsageError("--count must be at least 1");
  const SystemSpec sys = load_system_file(path);
  const Json config = to_json(sys);
  const auto draws = min_sample(sys, seed, count);
  std::string csv = "# wgorder sample\n# seed " + std::to_string(seed) + "\n# spec_hash " + spec_hash(config) +
                    "\n# config " + config.dump() + "\nindex,value,atom\n";
  for (std::size_t i = 0; i < draws.size(); ++i) {
    csv += std::to_string(i) + "," + format_number(draws[i].value) + "," + (draws[i].atom ? "1" : "0") + "\n";
  }
  if (out_path.empty()) {
    out << csv;
  } else {
    write_file(out_path, csv);
    out << "wrote " << count << " draws to " << out_path << "\n";
  }
  return kExitHolds;
}

// check-majorize x1 x2 ... -- y1 y2 ...
// Parsed by hand: "--" and negative-looking tokens confuse option parsers.
int cmd_check_majorize(const std::vector<std::string>& args, std::ostream& out) {
  std::vector<double> x, y;
  bool second = false;
  for (const auto& a : args) {
    if (a == "--") {
      if (second) throw UsageError("check-majorize takes a single '--' separator");
      second = true;
      continue;
    }
    if (a == "-h" || a == "--help") {
      out << "Usage: wgorder check-majorize X1 X2 ... -- Y1 Y2 ...\n"
             "Exit 0 when x majorizes y, 1 otherwise.\n";
      return kExitHolds;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(a, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != a.size()) throw UsageError("check-majorize: '" + a + "' is not a number");
    (second ? y : x).push_back(v);
  }
  if (!second || x.empty() || y.empty()) throw UsageError("usage: wgorder check-majorize X... -- Y...");
  if (x.size() != y.size()) throw UsageError("check-majorize: x and y differ in length");
  ParamVector px = [&] {
    try {
      return ParamVector(x);
    } catch (const Error& e) {
      throw UsageError(std::string("check-majorize: ") + e.what());
    }
  }();
  ParamVector py = [&] {
    try {
      return ParamVector(y);
    } catch (const Error& e) {
      throw UsageError(std::string("check-majorize: ") + e.what());
    }
  }();
  const bool m = majorizes(px, py);
  const auto show = [](const ParamVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_number(v[i]);
    return s + ")";
  };
  out << "x = " << show(px) << " cone " << to_string(cone_membership(px)) << "\n";
  out << "y = " << show(py) << " cone " << to_string(cone_membership(py)) << "\n";
  out << "x majorizes y: " << (m ? "yes" : "no") << "\n";
  return m ? kExitHolds : kExitFails;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && args.front() == "check-majorize") {
    return cmd_check_majorize(std::vector<std::string>(args.begin() + 1, args.end()), out);
  }

  CLI::App app{"Stochastic comparison of series systems with Weibull-G components", "wgorder"};
  app.footer(std::string("\n") + kExitCodeHelp);
  app.require_subcommand(1);

  GridFlags check_grid, verify_grid;
  GridFlags reproduce_grid{Grid::kWitnessPoints, Grid::kDefaultYMin, Grid::kDefaultYMax};
  std::string relation, path_a, path_b, out_path, id, sample_path, copula1, copula2;
  std::uint64_t seed = 0;
  std::size_t trials = 100, count = 0;

  auto* check = app.add_subcommand("check", "Check a <=_st|hr|lr b between two system configs");
  check->add_option("relation", relation, "st, hr or lr")->required();
  check->add_option("a", path_a, "System config of X (JSON)")->required();
  check->add_option("b", path_b, "System config of Y (JSON)")->required();
  check->add_option("--out", out_path, "Also write the report here");
  add_grid_flags(check, check_grid);

  auto* repro = app.add_subcommand("reproduce", "Write figure-panel CSVs of a counterexample preset");
  repro->add_option("id", id, "ce-3.1 or ce-3.2")->required();
  repro->add_option("--out", out_path, "Output directory")->required();
  repro->add_option("--seed", seed, "Seed recorded in the outputs")->capture_default_str();
  add_grid_flags(repro, reproduce_grid);

  auto* verify = app.add_subcommand("verify", "Randomized verification of a comparison theorem");
  verify->add_option("id", id, "t3.1 ... t3.7")->required();
  verify->add_option("--trials", trials, "Number of random configurations")->capture_default_str();
  verify->add_option("--seed", seed, "Base seed")->capture_default_str();
  verify->add_option("--copula1", copula1, "Fixed psi_1 for t3.6/t3.7, FAMILY[:THETA]");
  verify->add_option("--copula2", copula2, "Fixed psi_2 for t3.6/t3.7, FAMILY[:THETA]");
  verify->add_option("--out", out_path, "Write the JSON report here");
  add_grid_flags(verify, verify_grid);

  auto* sample = app.add_subcommand("sample", "Monte Carlo draws of a system minimum as CSV");
  sample->add_option("config", sample_path, "System config (JSON)")->required();
  sample->add_option("--count", count, "Number of draws")->required();
  sample->add_option("--seed", seed, "Seed")->capture_default_str();
  sample->add_option("--out", out_path, "CSV file (stdout when omitted)");

  app.add_subcommand("check-majorize", "Test whether X majorizes Y: check-majorize X... -- Y...");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  if (check->parsed()) return cmd_check(relation, path_a, path_b, check_grid, out_path, out);
  if (repro->parsed()) return cmd_reproduce(id, out_path, reproduce_grid, seed, out);
  if (verify->parsed()) return cmd_verify(id, trials, seed, verify_grid, copula1, copula2, out_path, out);
  if (sample->parsed()) return cmd_sample(sample_path, count, seed, out_path, out);
  throw UsageError("check-majorize takes X... -- Y...");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const GenerationExhaustedError& e) {
    err << "generation exhausted: " << e.what() << "\n";
    return kExitGeneration;
  } catch (const Error& e) {
    // Configuration problems and anything the library rejects about the inputs.
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace wgorder
