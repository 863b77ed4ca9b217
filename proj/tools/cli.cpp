#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "transversal/examples.hpp"
#include "transversal/manifold_io.hpp"
#include "transversal/measure.hpp"
#include "transversal/report.hpp"
#include "transversal/scan.hpp"
#include "transversal/strata.hpp"
#include "transversal/tangency.hpp"

namespace transversal::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string manifold;
  std::string example;
  int count = 0;  // 0: per-kind default
  double eps = 0.01;
  int n = 0;
  int d = 0;
  double scale = 0.0;  // 0: per-kind default
  double spacing = 1.0;
};

struct MeasureOptions {
  int nodes = kDefaultMeasureNodes;
  double tau = kDefaultTau;
  double delta = kDefaultDelta;
};

struct Input {
  ChartAtlas atlas;
  std::optional<ExampleSpec> spec;
};

void add_example_flags(CLI::App* app, InputOptions& in) {
  app->add_option("--count", in.count, "Number of components (default 2 for sigma0/sigma2, else 1)");
  app->add_option("--eps", in.eps, "Neck parameter for sigma2 (<= 0.01)");
  app->add_option("--n", in.n, "Ambient dimension (default 3 for curves, d+2 for spheres)");
  app->add_option("--d", in.d, "Sphere dimension for sphere/sphere-chain (default 2)");
  app->add_option("--scale", in.scale, "Component radius (default 1/4, 4^-n for sphere-chain)");
  app->add_option("--spacing", in.spacing, "Distance between component centers");
}

void add_input_flags(CLI::App* app, InputOptions& in) {
  auto* manifold = app->add_option("--manifold", in.manifold, "Manifold specification file");
  auto* example = app->add_option("--example", in.example,
                                   "Build a shipped example instead: sigma0, sigma2, sphere-chain, circle, sphere");
  manifold->excludes(example);
  add_example_flags(app, in);
}

void add_measure_flags(CLI::App* app, MeasureOptions& m) {
  app->add_option("--nodes", m.nodes, "Quadrature nodes per parameter axis");
  app->add_option("--tau", m.tau, "Relative tangency tolerance");
  app->add_option("--delta", m.delta, "Exceptional fraction threshold");
}

ExampleSpec make_spec(const std::string& kind_name, const InputOptions& in) {
  ExampleSpec spec;
  try {
    spec.kind = parse_example_kind(kind_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool curve = spec.kind == ExampleKind::kSigma0 || spec.kind == ExampleKind::kSigma2 ||
                     spec.kind == ExampleKind::kSingleCircle;
  spec.d = curve ? 1 : (in.d > 0 ? in.d : 2);
  if (curve && in.d > 0 && in.d != 1) throw UsageError(kind_name + " is a curve; --d must be 1");
  spec.n = in.n > 0 ? in.n : (curve ? 3 : spec.d + 2);
  const bool multi = spec.kind == ExampleKind::kSigma0 || spec.kind == ExampleKind::kSigma2;
  spec.count = in.count > 0 ? in.count : (multi ? 2 : 1);
  spec.eps = in.eps;
  if (in.scale > 0.0) spec.scale = in.scale;
  spec.spacing = in.spacing;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

Input load_input(const InputOptions& in) {
  Input input;
  if (!in.example.empty()) {
    input.spec = make_spec(in.example, in);
    input.atlas = build(*input.spec);
    return input;
  }
  if (in.manifold.empty()) throw UsageError("one of --manifold or --example is required");
  try {
    input.atlas = read_manifold_file(in.manifold);
  } catch (const ManifoldFileError& e) {
    throw UsageError(in.manifold + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  return input;
}

Json spec_json(const ExampleSpec& spec) {
  return Json{{"kind", to_string(spec.kind)}, {"n", spec.n},         {"d", spec.d},
              {"count", spec.count},          {"eps", spec.eps},     {"scale", spec.resolved_scale()},
              {"spacing", spec.spacing}};
}

Json input_json(const InputOptions& in, const Input& input) {
  Json j;
  if (input.spec) {
    j["example"] = spec_json(*input.spec);
  } else {
    j["manifold"] = in.manifold;
  }
  j["d"] = input.atlas.d();
  j["n"] = input.atlas.n();
  j["charts"] = input.atlas.size();
  return j;
}

Json measure_json(const MeasureOptions& m) {
  return Json{{"nodes_per_axis", m.nodes}, {"tau", m.tau}, {"delta", m.delta}};
}

void validate(const MeasureOptions& m) {
  if (m.nodes < 4) throw UsageError("--nodes must be >= 4");
  if (!(m.tau > 0.0)) throw UsageError("--tau must be positive");
  if (!(m.delta > 0.0 && m.delta < 1.0)) throw UsageError("--delta must lie in (0, 1)");
}

MeasureParams to_params(const MeasureOptions& m) { return MeasureParams{m.nodes, m.tau, m.delta}; }

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Json metadata() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) now = static_cast<std::time_t>(std::atoll(epoch));
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return Json{{"tool", "transversal"}, {"version", kVersion}, {"generated_at", buf}};
}

void emit(const Json& payload, const std::string& path, std::ostream& out) {
  Json doc = payload;
  doc["metadata"] = metadata();
  if (path.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << doc.dump(2) << '\n';
}

// Center grid aligned with the component centers of an example: every
// predicted plane passes through grid nodes.
CenterGrid example_grid(const ExampleSpec& spec) {
  const int per_unit = spec.n <= 3 ? 20 : 8;
  const double h = spec.spacing;
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(spec.n, -0.5 * h);
  Eigen::VectorXd hi = Eigen::VectorXd::Constant(spec.n, 0.5 * h);
  hi[0] = (spec.count - 0.5) * h;
  std::vector<int> nodes(spec.n, per_unit + 1);
  nodes[0] = per_unit * spec.count + 1;
  return CenterGrid(Box(lo, hi), nodes);
}

// Cube around the sample bounding box with an odd node count, so the box
// center is a node.
CenterGrid default_grid(const ChartAtlas& atlas, const std::vector<int>& centers) {
  const auto grids = build_measure_grids(atlas, 16);
  const Box bbox = sample_bounding_box(grids, 0.0);
  const Eigen::VectorXd mid = 0.5 * (bbox.lo + bbox.hi);
  const double half = 1.5 * 0.5 * (bbox.hi - bbox.lo).maxCoeff();
  const Eigen::VectorXd lo = (mid.array() - half).matrix();
  const Eigen::VectorXd hi = (mid.array() + half).matrix();
  std::vector<int> nodes = centers;
  for (int& c : nodes) c += (c % 2 == 0) ? 1 : 0;
  return CenterGrid(Box(lo, hi), nodes);
}

CenterGrid resolve_grid(const Input& input, const std::vector<double>& box, const std::vector<int>& centers,
                        bool centers_given) {
  const int n = input.atlas.n();
  if (!centers.empty() && centers.size() != 1 && static_cast<int>(centers.size()) != n) {
    throw UsageError("--centers takes 1 or n values");
  }
  for (int c : centers) {
    if (c < 4) throw UsageError("--centers must be >= 4");
  }
  if (!box.empty()) {
    if (static_cast<int>(box.size()) != 2 * n) throw UsageError("--box needs 2n numbers: lo1,hi1,...,lon,hin");
    Eigen::VectorXd lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
      lo[j] = box[2 * j];
      hi[j] = box[2 * j + 1];
    }
    try {
      return CenterGrid(Box(lo, hi), centers);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (input.spec && !centers_given) return example_grid(*input.spec);
  return default_grid(input.atlas, centers);
}

Json grid_json(const CenterGrid& g) {
  Json nodes = Json::array();
  for (int c : g.nodes_per_axis) nodes.push_back(c);
  return Json{{"box", to_json(g.box)}, {"nodes_per_axis", nodes}};
}

// Keys outside any section belong to the subcommand being run, so one flat
// file works with `transversal analyze --config run.toml`.
class SubcommandConfig : public CLI::ConfigTOML {
 public:
  std::string subcommand;

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::vector<CLI::ConfigItem> items = CLI::ConfigTOML::from_config(input);
    if (subcommand.empty()) return items;
    for (auto& item : items) {
      if (item.parents.empty() && item.name != "++" && item.name != "--") item.parents = {subcommand};
    }
    return items;
  }
};

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  InputOptions input;
  MeasureOptions measure;
  std::vector<double> center;
  int grid = 0;
  std::string out;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out) {
  validate(o.measure);
  const Input input = load_input(o.input);
  const ChartAtlas& atlas = input.atlas;
  if (static_cast<int>(o.center.size()) != atlas.n()) {
    throw UsageError("--center needs " + std::to_string(atlas.n()) + " coordinates");
  }
  const Eigen::VectorXd a = to_vector(o.center);
  const int grid = o.grid > 0 ? o.grid : (atlas.d() == 1 ? 64 : 16);
  if (grid < 2) throw UsageError("--grid must be >= 2");

  const MeasureEstimate estimate = nontransverse_measure(atlas, a, o.measure.nodes, o.measure.tau);
  const bool exceptional = is_exceptional(estimate, o.measure.delta);
  const AtlasCriticalPointSet critical = find_critical_points(atlas, a, grid);

  Json points = Json::array();
  for (const auto& cp : critical.points) {
    Json entry = to_json(cp.point);
    entry["chart"] = cp.chart;
    const Parametrization& chart = atlas[cp.chart];
    if (is_degenerate_sphere(cp.point.p, a)) {
      entry["transverse_residual"] = nullptr;
      entry["transverse_rank"] = nullptr;
    } else {
      entry["transverse_residual"] = is_sphere_transverse(chart, a, cp.point.x, o.measure.tau);
      entry["transverse_rank"] = rank_oracle(chart, a, cp.point.x);
    }
    points.push_back(entry);
  }

  Json config{{"command", "analyze"},
              {"input", input_json(o.input, input)},
              {"center", o.center},
              {"grid_per_axis", grid},
              {"measure", measure_json(o.measure)},
              {"newton", Json{{"tau", kDefaultNewtonTau}, {"max_iter", kDefaultNewtonIterations}}}};
  Json payload{{"config", config},
               {"result", Json{{"measure", to_json(estimate)},
                               {"verdict", exceptional ? "exceptional" : "not exceptional"},
                               {"critical_points", points},
                               {"critical_point_seeds", critical.seeds},
                               {"continuum", critical.continuum}}}};
  emit(payload, o.out, out);
  if (!o.out.empty()) {
    out << "critical points: " << critical.points.size() << (critical.continuum ? " (continuum)" : "")
        << "\nmeasure: " << format_double(estimate.value) << " of " << format_double(estimate.total)
        << " (fraction " << format_double(estimate.fraction) << ")\nverdict: "
        << (exceptional ? "exceptional" : "not exceptional") << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- scan

struct ScanOptions {
  InputOptions input;
  MeasureOptions measure;
  std::vector<double> box;
  std::vector<int> centers{25};
  bool centers_given = false;
  double link = 0.0;
  std::string out;
  std::string table;
};

ScanReport run_scan(const Input& input, const CenterGrid& grid, const MeasureOptions& m, double link) {
  ScanReport report = scan_centers(input.atlas, grid, to_params(m));
  fit_exceptional_planes(report, link);
  return report;
}

void print_planes(const ScanReport& report, std::ostream& out) {
  out << "exceptional centers: " << report.exceptional.size() << " of " << report.centers.size() << '\n'
      << "fitted planes (dim " << report.n - report.d - 1 << "): " << report.fits.size() << '\n';
  for (std::size_t c = 0; c < report.fits.size(); ++c) {
    const auto& fit = report.fits[c];
    out << "  plane " << c << ": base " << to_json(fit.plane.base).dump() << ", residual "
        << format_double(fit.residual) << ", points " << report.clusters[c].size() << '\n';
  }
}

int cmd_scan(const ScanOptions& o, std::ostream& out) {
  validate(o.measure);
  if (o.link < 0.0) throw UsageError("--link must be positive");
  const Input input = load_input(o.input);
  const CenterGrid grid = resolve_grid(input, o.box, o.centers, o.centers_given);
  const ScanReport report = run_scan(input, grid, o.measure, o.link);

  Json config{{"command", "scan"},
              {"input", input_json(o.input, input)},
              {"grid", grid_json(grid)},
              {"measure", measure_json(o.measure)},
              {"linking_radius", report.linking_radius}};
  emit(Json{{"config", config}, {"result", to_json(report)}}, o.out, out);
  if (!o.table.empty()) {
    std::ofstream table(o.table);
    if (!table) throw UsageError("cannot write " + o.table);
    write_center_table(table, report);
  }
  if (!o.out.empty()) print_planes(report, out);
  return kOk;
}

// ---------------------------------------------------------------- build-example

struct BuildOptions {
  std::string kind;
  InputOptions input;
  std::string out;
  std::string points;
  int points_per_chart = 64;
};

int cmd_build_example(const BuildOptions& o, std::ostream& out) {
  const ExampleSpec spec = make_spec(o.kind, o.input);
  if (o.points_per_chart < 1) throw UsageError("--points-per-chart must be >= 1");
  const ChartAtlas atlas = build(spec);
  std::ostringstream header;
  header << "example " << spec_json(spec).dump();
  if (o.out.empty()) {
    write_manifold(out, atlas, {header.str()});
  } else {
    write_manifold_file(o.out, atlas, {header.str()});
    out << "wrote " << atlas.size() << " charts to " << o.out << '\n';
  }
  if (!o.points.empty()) {
    std::ofstream file(o.points);
    if (!file) throw UsageError("cannot write " + o.points);
    file << "chart";
    for (int j = 0; j < atlas.n(); ++j) file << ",p" << (j + 1);
    file << '\n';
    for (std::size_t c = 0; c < atlas.size(); ++c) {
      const MeasureGrid g = build_measure_grid(
          atlas[c], std::max(4, static_cast<int>(std::lround(std::pow(o.points_per_chart, 1.0 / atlas.d())))));
      for (Eigen::Index k = 0; k < g.size(); ++k) {
        if (!g.valid[k]) continue;
        file << c;
        for (int j = 0; j < atlas.n(); ++j) file << ',' << format_double(g.points(j, k));
        file << '\n';
      }
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  InputOptions input;
  MeasureOptions measure;
  std::uint64_t seed = 0;
  int trials = 100;
  int instances = 1000;
  std::vector<double> box;
  std::vector<int> centers{25};
  bool centers_given = false;
  std::string out;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  validate(o.measure);
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  if (o.instances < 2) throw UsageError("--instances must be >= 2");
  const Input input = load_input(o.input);
  const ChartAtlas& atlas = input.atlas;

  Json checks = Json::array();
  std::string first_failure;
  auto record = [&](const std::string& name, bool pass, Json detail) {
    checks.push_back(Json{{"name", name}, {"pass", pass}, {"detail", std::move(detail)}});
    out << (pass ? "PASS " : "FAIL ") << name << '\n';
    if (!pass && first_failure.empty()) first_failure = name;
  };

  Claim1Options claim1;
  claim1.trials = o.trials;
  claim1.seed = o.seed;
  claim1.nodes_per_axis = o.measure.nodes;
  claim1.tau = o.measure.tau;
  const Claim1Report c1 = claim1_diagnostic(atlas, claim1);
  record("claim1", c1.pass(), to_json(c1));

  const DichotomyReport dichotomy =
      normal_plane_dichotomy_battery(atlas.n(), o.instances, o.instances / 10, o.seed);
  record("normal-plane-dichotomy", dichotomy.pass(), to_json(dichotomy));

  const CenterGrid grid = resolve_grid(input, o.box, o.centers, o.centers_given);
  const ScanReport scan = run_scan(input, grid, o.measure, 0.0);
  const double tol = 1.5 * grid.max_spacing();
  Json scan_detail{{"scan", to_json(scan)}};
  bool scan_pass = true;
  for (const auto& fit : scan.fits) {
    if (fit.plane.dim() != atlas.n() - atlas.d() - 1) scan_pass = false;
  }
  if (input.spec) {
    const auto predicted = predicted_planes(*input.spec, grid.box);
    const ContainmentReport containment = verify_containment(predicted, scan.exceptional_centers(), tol);
    std::vector<bool> covered(predicted.size(), false);
    for (std::size_t i = 0; i < containment.nearest.size(); ++i) {
      if (containment.distances[i] <= tol) covered[containment.nearest[i]] = true;
    }
    const bool all_covered = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    scan_pass = scan_pass && containment.pass && all_covered && scan.fits.size() == predicted.size();
    scan_detail["predicted_planes"] = predicted.size();
    scan_detail["containment"] = to_json(containment);
  } else {
    std::vector<AffinePlane> fitted;
    for (const auto& fit : scan.fits) fitted.push_back(fit.plane);
    const ContainmentReport containment = verify_containment(fitted, scan.exceptional_centers(), tol);
    scan_pass = scan_pass && containment.pass;
    scan_detail["containment"] = to_json(containment);
  }
  record("containment", scan_pass, scan_detail);

  Json config{{"command", "verify"},
              {"input", input_json(o.input, input)},
              {"seed", o.seed},
              {"trials", o.trials},
              {"dichotomy_instances", o.instances},
              {"grid", grid_json(grid)},
              {"measure", measure_json(o.measure)},
              {"containment_tolerance", tol}};
  emit(Json{{"config", config}, {"result", Json{{"checks", checks}, {"pass", first_failure.empty()}}}},
       o.out, out);
  if (!first_failure.empty()) {
    err << "verification failed: " << first_failure << '\n';
    return kViolation;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exceptional sphere centers of parametrized submanifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI config file; keys are subcommand flags, command-line flags override");
  auto formatter = std::make_shared<SubcommandConfig>();
  app.config_formatter(formatter);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Critical points, transversality and measure for one center");
  add_input_flags(analyze_cmd, analyze.input);
  add_measure_flags(analyze_cmd, analyze.measure);
  analyze_cmd->add_option("--center", analyze.center, "Sphere center a (n comma-separated values)")
      ->required()
      ->delimiter(',');
  analyze_cmd->add_option("--grid", analyze.grid, "Newton seeds per parameter axis");
  analyze_cmd->add_option("--out", analyze.out, "JSON report path (stdout if omitted)");

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Scan a grid of centers and fit exceptional planes");
  add_input_flags(scan_cmd, scan.input);
  add_measure_flags(scan_cmd, scan.measure);
  scan_cmd->add_option("--box", scan.box, "Center box lo1,hi1,...,lon,hin")->delimiter(',');
  auto* scan_centers_opt =
      scan_cmd->add_option("--centers", scan.centers, "Centers per axis (1 or n values)")->delimiter(',');
  scan_cmd->add_option("--link", scan.link, "Single-linkage radius (default 1.5 x grid spacing)");
  scan_cmd->add_option("--out", scan.out, "JSON report path (stdout if omitted)");
  scan_cmd->add_option("--table", scan.table, "Per-center CSV table path");

  BuildOptions build_opts;
  auto* build_cmd = app.add_subcommand("build-example", "Write a shipped example as a manifold file");
  build_cmd->add_option("kind", build_opts.kind, "sigma0, sigma2, sphere-chain, circle, sphere")->required();
  add_example_flags(build_cmd, build_opts.input);
  build_cmd->add_option("--out", build_opts.out, "Manifold file path (stdout if omitted)");
  build_cmd->add_option("--points", build_opts.points, "Optional point-cloud CSV path");
  build_cmd->add_option("--points-per-chart", build_opts.points_per_chart, "Approximate samples per chart");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the structural diagnostics; exit 3 on violation");
  add_input_flags(verify_cmd, verify.input);
  add_measure_flags(verify_cmd, verify.measure);
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_option("--trials", verify.trials, "Random (a, P) trials per Grassmann dimension");
  verify_cmd->add_option("--instances", verify.instances, "Normal-plane dichotomy instances");
  verify_cmd->add_option("--box", verify.box, "Center box lo1,hi1,...,lon,hin")->delimiter(',');
  auto* verify_centers_opt =
      verify_cmd->add_option("--centers", verify.centers, "Centers per axis (1 or n values)")->delimiter(',');
  verify_cmd->add_option("--out", verify.out, "JSON report path (stdout if omitted)");

  for (const auto& a : args) {
    if (!a.empty() && a.front() != '-') {
      formatter->subcommand = a;
      break;
    }
  }
  std::vector<std::string> storage{"transversal"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(analyze, out);
    if (scan_cmd->parsed()) {
      scan.centers_given = scan_centers_opt->count() > 0;
      return cmd_scan(scan, out);
    }
    if (build_cmd->parsed()) return cmd_build_example(build_opts, out);
    if (verify_cmd->parsed()) {
      verify.centers_given = verify_centers_opt->count() > 0;
      return cmd_verify(verify, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ExprError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const DegenerateClusterError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const DegenerateSphereError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace transversal::cli
