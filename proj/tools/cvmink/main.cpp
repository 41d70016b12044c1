#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "format.hpp"
#include "io.hpp"
#include "proptest.hpp"
#include "record.hpp"
#include "sweep.hpp"
#include "threshold.hpp"

namespace {

using namespace cvmink;
using namespace cvmink::cli;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnphysical = 2;
constexpr int kExitPropertyFailure = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalyzeArgs {
  bool tmtss = false;
  std::optional<double> d, r, nbar, ell;
  std::optional<double> n1, n2, ms, mc;
  std::string cm_path;
  std::string spec_path;
  std::string out_path;
};

struct SweepArgs {
  std::string spec_path;
  std::string out_path;
  unsigned threads = 0;
};

struct ThresholdArgs {
  std::string spec_path;
  std::optional<double> d, r, nbar, ell;
  std::string axis = "r";
  std::vector<double> bracket;
};

struct ProptestArgs {
  std::uint64_t seed = 42;
  int cases = 1000;
  std::string suite;
};

void append_csv(const std::string& path, const AnalysisRecord& rec) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  if (fresh) out << csv_header() << '\n';
  out << csv_row(rec) << '\n';
}

AnalysisRecord analyze_source(const AnalyzeArgs& a) {
  const bool standard = a.n1 || a.n2 || a.ms || a.mc;
  const int sources = int(a.tmtss) + int(standard) + int(!a.cm_path.empty()) +
                      int(!a.spec_path.empty());
  if (sources != 1) {
    throw UsageError(
        "analyze needs exactly one state source: --tmtss, --n1/--n2/--ms/--mc, --cm or --spec");
  }
  if (a.tmtss) {
    return analyze(TmtssParams{a.d.value_or(0.0), a.r.value_or(0.0), a.nbar.value_or(0.0)},
                   a.ell);
  }
  if (standard) {
    const StandardFormParams defaults;
    return analyze(build_standard_cm({a.n1.value_or(defaults.n1), a.n2.value_or(defaults.n2),
                                      a.ms.value_or(defaults.ms), a.mc.value_or(defaults.mc)}));
  }
  if (!a.cm_path.empty()) return analyze(cm_from_json(read_json_file(a.cm_path)));
  const TmtssRequest req = tmtss_from_json(read_json_file(a.spec_path));
  return analyze(req.params, req.ell);
}

int run_analyze(const AnalyzeArgs& a) {
  const AnalysisRecord rec = analyze_source(a);
  std::cout << to_json(rec).dump(2) << '\n';
  if (!rec.is_physical()) {
    std::cerr << "error: unphysical state, "
              << (rec.min_symplectic
                      ? "minimum symplectic eigenvalue " + format_real(*rec.min_symplectic) +
                            " < 1/2"
                      : std::string("covariance matrix is not positive definite"))
              << '\n';
    return kExitUnphysical;
  }
  if (!a.out_path.empty()) append_csv(a.out_path, rec);
  return kExitOk;
}

int run_sweep_cmd(const SweepArgs& a) {
  const SweepSpec spec = sweep_spec_from_json(read_json_file(a.spec_path));
  const auto rows = run_sweep(spec, a.threads);
  if (a.out_path.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream out(a.out_path);
    if (!out) throw std::runtime_error(a.out_path + ": cannot open for writing");
    write_csv(out, rows);
  }
  return kExitOk;
}

int run_threshold(const ThresholdArgs& a) {
  std::map<std::string, double> fixed;
  std::optional<FiberParams> channel;
  std::string axis = a.axis;
  std::vector<double> bracket = a.bracket;
  if (!a.spec_path.empty()) {
    const nlohmann::json j = read_json_file(a.spec_path);
    if (!j.is_object()) throw ParseError(a.spec_path + ": threshold spec must be an object");
    for (const char* key : {"d", "r", "nbar", "ell"}) {
      if (j.contains(key)) fixed[key] = json_number(j, key);
    }
    if (j.contains("fixed")) {
      for (const auto& [k, v] : j.at("fixed").items()) {
        if (!is_sweep_parameter(k) || !v.is_number()) {
          throw ParseError(a.spec_path + ": bad fixed parameter \"" + k + "\"");
        }
        fixed[k] = v.get<double>();
      }
    }
    if (j.contains("axis")) axis = j.at("axis").get<std::string>();
    if (j.contains("bracket")) bracket = j.at("bracket").get<std::vector<double>>();
    if (j.contains("channel")) {
      const auto& ch = j.at("channel");
      channel = FiberParams{0.0, json_number(ch, "t1"), json_number(ch, "t2")};
    }
  }
  for (const auto& [name, value] : {std::pair{"d", a.d}, std::pair{"r", a.r},
                                     std::pair{"nbar", a.nbar}, std::pair{"ell", a.ell}}) {
    if (value) fixed[name] = *value;
  }
  if (!is_sweep_parameter(axis)) throw UsageError("unknown axis \"" + axis + "\"");
  if (bracket.size() != 2) throw UsageError("--bracket needs two values");
  fixed.erase(axis);
  const BisectionResult res = find_threshold(fixed, axis, bracket[0], bracket[1], channel);
  std::cout << format_real(res.root) << '\n';
  return kExitOk;
}

int run_proptest(const ProptestArgs& a) {
  if (a.cases < 1) throw UsageError("--cases must be at least 1");
  std::vector<PropertyResult> results;
  if (a.suite.empty()) {
    results = run_property_suites(a.seed, a.cases);
  } else {
    results.push_back(run_property_suite(a.suite, a.seed, a.cases));
  }
  std::cout << format_report(results);
  for (const auto& r : results) {
    if (!r.passed()) return kExitPropertyFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian two-mode entanglement via Minkowski-space invariants"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report on a single state");
  auto* tmtss_flag = analyze_cmd->add_flag("--tmtss", an.tmtss, "State from TMTSS parameters");
  analyze_cmd->add_option("-d", an.d, "Dissipation d")->needs(tmtss_flag);
  analyze_cmd->add_option("-r", an.r, "Squeezing r")->needs(tmtss_flag);
  analyze_cmd->add_option("--nbar", an.nbar, "Thermal photon number")->needs(tmtss_flag);
  analyze_cmd->add_option("--ell", an.ell, "Fiber length (asymmetric channel)")
      ->needs(tmtss_flag);
  analyze_cmd->add_option("--n1", an.n1, "Standard form n1");
  analyze_cmd->add_option("--n2", an.n2, "Standard form n2");
  analyze_cmd->add_option("--ms", an.ms, "Standard form ms");
  analyze_cmd->add_option("--mc", an.mc, "Standard form mc");
  analyze_cmd->add_option("--cm", an.cm_path, "Covariance matrix JSON file");
  analyze_cmd->add_option("--spec", an.spec_path, "TMTSS parameter JSON file");
  analyze_cmd->add_option("--out", an.out_path, "Append the record to this CSV");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a parameter grid to CSV");
  sweep_cmd->add_option("--spec", sw.spec_path, "Sweep spec JSON file")->required();
  sweep_cmd->add_option("--out", sw.out_path, "Output CSV (default stdout)");
  sweep_cmd->add_option("--threads", sw.threads, "Worker threads (0 = all cores)");

  ThresholdArgs th;
  auto* threshold_cmd =
      app.add_subcommand("threshold", "Bisect the separability boundary along one axis");
  threshold_cmd->add_option("--spec", th.spec_path, "Threshold spec JSON file");
  threshold_cmd->add_option("-d", th.d, "Dissipation d");
  threshold_cmd->add_option("-r", th.r, "Squeezing r");
  threshold_cmd->add_option("--nbar", th.nbar, "Thermal photon number");
  threshold_cmd->add_option("--ell", th.ell, "Fiber length");
  threshold_cmd->add_option("--axis", th.axis, "Parameter to bisect along")
      ->check(CLI::IsMember({"d", "r", "nbar", "ell"}));
  threshold_cmd->add_option("--bracket", th.bracket, "Interval lo hi")->expected(2);

  ProptestArgs pt;
  auto* proptest_cmd = app.add_subcommand("proptest", "Run the property suites");
  proptest_cmd->add_option("--seed", pt.seed, "Base random seed");
  proptest_cmd->add_option("--cases", pt.cases, "Cases per suite");
  proptest_cmd->add_option("--suite", pt.suite, "Run only this suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(an);
    if (*sweep_cmd) return run_sweep_cmd(sw);
    if (*threshold_cmd) return run_threshold(th);
    if (*proptest_cmd) return run_proptest(pt);
  } catch (const UnphysicalState& e) {
    std::cerr << "error: " << e.what() << " (minimum symplectic eigenvalue "
              << format_real(e.min_symplectic()) << ")\n";
    return kExitUnphysical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
