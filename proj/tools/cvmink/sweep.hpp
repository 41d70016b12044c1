#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "record.hpp"

namespace cvmink::cli {

/// One swept parameter: count >= 2 evenly spaced values from start to stop.
struct Axis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 2;

  /// Endpoints are returned exactly.
  std::vector<double> values() const;
};

/// A grid over the TMTSS knobs {d, r, nbar, ell}. Parameters not named in
/// fixed or axes default to 0; ell is only applied when named. An explicit
/// channel (t1, t2) overrides the ell preset.
struct SweepSpec {
  std::map<std::string, double> fixed;
  std::vector<Axis> axes;
  std::optional<FiberParams> channel;

  /// Throws ParseError describing the first violated rule.
  void validate() const;
  size_t size() const;
};

/// A point of parameter space, as the sweep and threshold commands see it.
struct ParamPoint {
  double d = 0.0;
  double r = 0.0;
  double nbar = 0.0;
  std::optional<double> ell;
  std::optional<FiberParams> channel;

  void set(const std::string& name, double value);
  StandardFormParams state() const;
  AnalysisRecord analyze() const;
};

bool is_sweep_parameter(const std::string& name);

/// {"fixed": {...}, "axes": [{"name", "start", "stop", "count"}, ...],
///  "channel": {"ell"} | {"t1", "t2"[, "ell"]}}
SweepSpec sweep_spec_from_json(const nlohmann::json& j);

/// Row-major over axes (the first axis varies slowest). Grid points are
/// evaluated on up to `threads` workers (0 = hardware concurrency); the
/// result order does not depend on the worker count.
std::vector<AnalysisRecord> run_sweep(const SweepSpec& spec, unsigned threads = 0);

void write_csv(std::ostream& out, const std::vector<AnalysisRecord>& rows);

}  // namespace cvmink::cli
