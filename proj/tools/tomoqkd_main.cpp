#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tomoqkd/scenarios.hpp"

// Exit codes: 0 success, 1 quantitative-check failure / no crossing,
// 2 usage error, 3 internal invariant violation.

namespace {

using tomoqkd::Axis;
using tomoqkd::AxisSpec;
using tomoqkd::SourceParams;
using tomoqkd::SweepRow;
using tomoqkd::YieldReport;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_params(const SourceParams& p) {
  if (!(p.ratio > 0) || !std::isfinite(p.ratio))
    throw UsageError("--ratio must be > 0");
  if (!(p.g >= 0) || !std::isfinite(p.g)) throw UsageError("--g must be >= 0");
  if (!(p.v >= 0 && p.v <= 1)) throw UsageError("--v must be in [0, 1]");
  if (!(p.noise >= 0 && p.noise <= 1))
    throw UsageError("--noise must be in [0, 1]");
}

std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x + 0.0);  // +0.0 kills -0
  return buf;
}
std::string fmt4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x + 0.0);
  return buf;
}

ordered_json report_json(const YieldReport& r) {
  auto basis_json = [](const tomoqkd::BasisReport& b) {
    return ordered_json{{"basis", tomoqkd::basis_name(b.basis)},
                        {"i_ab", b.i_ab},
                        {"i_ae_max", b.i_ae_max},
                        {"yield", b.yield},
                        {"optimal_params",
                         {b.optimal_params[0], b.optimal_params[1]}}};
  };
  return ordered_json{
      {"params",
       {{"ratio", r.params.ratio},
        {"g", r.params.g},
        {"V", r.params.v},
        {"F", r.params.noise}}},
      {"coefficients",
       {{"alpha", r.coefficients.alpha},
        {"beta1", r.coefficients.beta1},
        {"beta2", r.coefficients.beta2},
        {"gamma", r.coefficients.gamma}}},
      {"bases",
       {{"z", basis_json(r.z)}, {"x", basis_json(r.x)}, {"y", basis_json(r.y)}}},
      {"overall_yield", r.overall_yield},
      {"entangled", r.entangled}};
}

int cmd_analyze(const SourceParams& params, const std::string& format) {
  check_params(params);
  const YieldReport r = tomoqkd::analyze(params);
  if (format == "json") {
    std::cout << report_json(r).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "ratio,g,V,F,i_ab_z,i_ae_z,yield_z,i_ab_xy,i_ae_xy,yield_xy,"
                 "overall_yield\n";
    std::cout << fmt6(params.ratio) << ',' << fmt6(params.g) << ','
              << fmt6(params.v) << ',' << fmt6(params.noise) << ','
              << fmt6(r.z.i_ab) << ',' << fmt6(r.z.i_ae_max) << ','
              << fmt6(r.z.yield) << ',' << fmt6(r.x.i_ab) << ','
              << fmt6(r.x.i_ae_max) << ',' << fmt6(r.x.yield) << ','
              << fmt6(r.overall_yield) << "\n";
  } else {
    std::cout << "parameters: R/T=" << params.ratio << " g=" << params.g
              << " V=" << params.v << " F=" << params.noise << "\n";
    std::cout << "coefficients: alpha=" << fmt6(r.coefficients.alpha)
              << " beta1=" << fmt6(r.coefficients.beta1)
              << " beta2=" << fmt6(r.coefficients.beta2)
              << " gamma=" << fmt6(r.coefficients.gamma) << "\n";
    std::cout << "entangled: " << (r.entangled ? "yes" : "no") << "\n\n";
    std::cout << "basis   I(A;B)    max I(A;E)  yield\n";
    for (const auto* b : {&r.z, &r.x, &r.y}) {
      std::cout << tomoqkd::basis_name(b->basis) << "       "
                << fmt6(b->i_ab) << "  " << fmt6(b->i_ae_max) << "    "
                << fmt6(b->yield) << "\n";
    }
    std::cout << "\noverall yield: " << fmt6(r.overall_yield) << "\n";
  }
  return 0;
}

struct Table1Row {
  double g, v;
  double i_ab_z, i_ae_z, yield_z;
  double i_ab_xy, i_ae_xy, yield_xy;
  double overall;
};

// Reference values for R/T = 1.1.
const std::vector<Table1Row> kTable1 = {
    {0.10, 0.60, 0.3478, 0.6070, -0.2592, 0.1872, 0.4320, -0.2448, 0.0},
    {0.02, 0.40, 0.7598, 0.7550, 0.0048, 0.1085, 0.1088, -0.0003, 0.0016},
    {0.10, 0.84, 0.3478, 0.3528, -0.0050, 0.3869, 0.3755, 0.0114, 0.0076},
    {0.10, 0.90, 0.3478, 0.2845, 0.0633, 0.4525, 0.3321, 0.1204, 0.1014},
};

constexpr double kTolIab = 5e-4;
constexpr double kTolIae = 2e-3;
constexpr double kTolYield = 2e-3;

int cmd_table1(const std::string& format) {
  bool all_pass = true;
  std::vector<YieldReport> reports;
  for (const Table1Row& row : kTable1)
    reports.push_back(tomoqkd::analyze({1.1, row.g, row.v, 0.0}));

  auto residuals_ok = [&](const Table1Row& ref, const YieldReport& r) {
    return std::abs(r.z.i_ab - ref.i_ab_z) <= kTolIab &&
           std::abs(r.x.i_ab - ref.i_ab_xy) <= kTolIab &&
           std::abs(r.z.i_ae_max - ref.i_ae_z) <= kTolIae &&
           std::abs(r.x.i_ae_max - ref.i_ae_xy) <= kTolIae &&
           std::abs(r.z.yield - ref.yield_z) <= kTolYield &&
           std::abs(r.x.yield - ref.yield_xy) <= kTolYield &&
           std::abs(r.overall_yield - ref.overall) <= kTolYield;
  };

  if (format == "csv") {
    std::cout << "row,g,V,i_ab_z,i_ae_z,yield_z,i_ab_xy,i_ae_xy,yield_xy,"
                 "overall,paper_overall,residual\n";
    for (size_t i = 0; i < kTable1.size(); ++i) {
      const Table1Row& ref = kTable1[i];
      const YieldReport& r = reports[i];
      std::cout << (i + 1) << ',' << fmt6(ref.g) << ',' << fmt6(ref.v) << ','
                << fmt6(r.z.i_ab) << ',' << fmt6(r.z.i_ae_max) << ','
                << fmt6(r.z.yield) << ',' << fmt6(r.x.i_ab) << ','
                << fmt6(r.x.i_ae_max) << ',' << fmt6(r.x.yield) << ','
                << fmt6(r.overall_yield) << ',' << fmt6(ref.overall) << ','
                << fmt6(std::abs(r.overall_yield - ref.overall)) << "\n";
      if (!residuals_ok(ref, r)) all_pass = false;
    }
  } else if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < kTable1.size(); ++i) {
      const Table1Row& ref = kTable1[i];
      const YieldReport& r = reports[i];
      const bool pass = residuals_ok(ref, r);
      if (!pass) all_pass = false;
      rows.push_back(ordered_json{{"g", ref.g},
                                  {"V", ref.v},
                                  {"computed", report_json(r)},
                                  {"paper_overall", ref.overall},
                                  {"residual",
                                   std::abs(r.overall_yield - ref.overall)},
                                  {"pass", pass}});
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "Table 1 reproduction (R/T = 1.1); computed / reference / "
                 "|residual|\n\n";
    for (size_t i = 0; i < kTable1.size(); ++i) {
      const Table1Row& ref = kTable1[i];
      const YieldReport& r = reports[i];
      const bool pass = residuals_ok(ref, r);
      if (!pass) all_pass = false;
      auto cell = [](double got, double want) {
        std::ostringstream os;
        os << fmt4(got) << "/" << fmt4(want) << "/"
           << fmt4(std::abs(got - want));
        return os.str();
      };
      std::cout << "row " << (i + 1) << "  g=" << ref.g << " V=" << ref.v
                << (pass ? "  [pass]" : "  [FAIL]") << "\n";
      std::cout << "  z : I(A;B) " << cell(r.z.i_ab, ref.i_ab_z)
                << "  max I(A;E) " << cell(r.z.i_ae_max, ref.i_ae_z)
                << "  yield " << cell(r.z.yield, ref.yield_z) << "\n";
      std::cout << "  xy: I(A;B) " << cell(r.x.i_ab, ref.i_ab_xy)
                << "  max I(A;E) " << cell(r.x.i_ae_max, ref.i_ae_xy)
                << "  yield " << cell(r.x.yield, ref.yield_xy) << "\n";
      std::cout << "  overall " << cell(r.overall_yield, ref.overall) << "\n";
    }
    std::cout << (all_pass ? "\nall rows within tolerance\n"
                           : "\nsome rows out of tolerance\n");
  }
  return all_pass ? 0 : kExitCheckFailed;
}

AxisSpec parse_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw UsageError("malformed --axis spec '" + text +
                     "' (expected name=min:max:steps)");
  const std::string name = text.substr(0, eq);
  AxisSpec spec;
  if (name == "ratio")
    spec.axis = Axis::Ratio;
  else if (name == "g")
    spec.axis = Axis::G;
  else if (name == "v")
    spec.axis = Axis::V;
  else if (name == "f" || name == "noise")
    spec.axis = Axis::F;
  else
    throw UsageError("unknown axis '" + name + "' in --axis");
  const std::string rest = text.substr(eq + 1);
  double lo, hi;
  int steps;
  char colon1, colon2;
  std::istringstream is(rest);
  if (!(is >> lo >> colon1 >> hi >> colon2 >> steps) || colon1 != ':' ||
      colon2 != ':' || !is.eof() || steps < 1)
    throw UsageError("malformed --axis range '" + rest +
                     "' (expected min:max:steps)");
  spec.min = lo;
  spec.max = hi;
  spec.steps = steps;
  return spec;
}

int cmd_sweep(const SourceParams& fixed, const std::vector<std::string>& axes,
              const std::string& format, const std::string& out_path) {
  if (axes.empty()) throw UsageError("sweep needs at least one --axis");
  tomoqkd::SweepSpec spec;
  spec.fixed = fixed;
  for (const std::string& a : axes) spec.axes.push_back(parse_axis(a));

  const std::vector<SweepRow> rows = tomoqkd::sweep(spec);

  std::ostringstream os;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const SweepRow& r : rows)
      arr.push_back(ordered_json{{"ratio", r.params.ratio},
                                 {"g", r.params.g},
                                 {"V", r.params.v},
                                 {"F", r.params.noise},
                                 {"i_ab_z", r.i_ab_z},
                                 {"i_ae_z", r.i_ae_z},
                                 {"yield_z", r.yield_z},
                                 {"i_ab_xy", r.i_ab_xy},
                                 {"i_ae_xy", r.i_ae_xy},
                                 {"yield_xy", r.yield_xy},
                                 {"overall_yield", r.overall}});
    os << arr.dump(2) << "\n";
  } else {
    os << "ratio,g,V,F,i_ab_z,i_ae_z,yield_z,i_ab_xy,i_ae_xy,yield_xy,"
          "overall_yield\n";
    for (const SweepRow& r : rows)
      os << fmt6(r.params.ratio) << ',' << fmt6(r.params.g) << ','
         << fmt6(r.params.v) << ',' << fmt6(r.params.noise) << ','
         << fmt6(r.i_ab_z) << ',' << fmt6(r.i_ae_z) << ',' << fmt6(r.yield_z)
         << ',' << fmt6(r.i_ab_xy) << ',' << fmt6(r.i_ae_xy) << ','
         << fmt6(r.yield_xy) << ',' << fmt6(r.overall) << "\n";
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open --out file '" + out_path + "'");
    f << os.str();
  } else {
    std::cout << os.str();
  }
  return 0;
}

int cmd_threshold(char moving, const SourceParams& fixed) {
  tomoqkd::ThresholdQuery q;
  q.moving = moving;
  q.fixed = fixed;
  try {
    const tomoqkd::ThresholdResult res = tomoqkd::find_threshold(q);
    std::cout << "crossing " << (moving == 'v' ? "V" : "F") << " = "
              << fmt4(res.crossing) << "\n";
    std::cout << "bracket: yield " << fmt6(res.low_yield)
              << " on the zero side, " << fmt6(res.high_yield)
              << " on the positive side\n";
    return 0;
  } catch (const std::runtime_error& err) {
    const std::string what = err.what();
    if (what.rfind("no crossing", 0) == 0) {
      std::cout << what << "\n";
      return kExitCheckFailed;
    }
    throw;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Security yield of tomographic QKD with a quantum-dot "
               "entangled-photon source"};
  app.require_subcommand(1);

  SourceParams params;
  std::string format = "table";
  std::uint64_t seed = 0;
  std::vector<std::string> axis_specs;
  std::string out_path;
  std::string moving;

  auto add_param_flags = [&](CLI::App* cmd, bool require_main) {
    auto* r = cmd->add_option("--ratio", params.ratio, "beamsplitter ratio R/T");
    auto* g = cmd->add_option("--g", params.g, "second-order correlation g");
    auto* v = cmd->add_option("--v", params.v, "wave-packet overlap V");
    cmd->add_option("--noise", params.noise, "white-noise fraction F");
    cmd->add_option("--seed", seed, "seed for stochastic components");
    if (require_main) {
      r->required();
      g->required();
      v->required();
    }
  };

  auto* analyze = app.add_subcommand("analyze", "yield report for one point");
  add_param_flags(analyze, true);
  analyze->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "json"}));

  auto* table1 = app.add_subcommand("table1", "reference-table reproduction");
  table1->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "json"}));

  auto* sweepcmd = app.add_subcommand("sweep", "grid sweep to CSV/JSON");
  add_param_flags(sweepcmd, false);
  sweepcmd->add_option("--axis", axis_specs, "axis spec name=min:max:steps");
  sweepcmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  sweepcmd->add_option("--out", out_path, "write output to file");

  auto* threshold = app.add_subcommand("threshold", "zero-yield crossing");
  add_param_flags(threshold, false);
  threshold->add_option("--moving", moving, "moving parameter: v or f")
      ->required()
      ->check(CLI::IsMember({"v", "f"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(params, format);
    if (app.got_subcommand(table1)) return cmd_table1(format);
    if (app.got_subcommand(sweepcmd)) {
      check_params(params);
      return cmd_sweep(params, axis_specs,
                       format == "table" ? "csv" : format, out_path);
    }
    if (app.got_subcommand(threshold)) {
      check_params(params);
      return cmd_threshold(moving[0], params);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
