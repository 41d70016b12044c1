#include "threshold.hpp"

#include "io.hpp"
#include "sweep.hpp"

namespace cvmink::cli {

BisectionResult find_threshold(const std::map<std::string, double>& fixed,
                               const std::string& axis, double lo, double hi,
                               const std::optional<FiberParams>& channel) {
  if (!is_sweep_parameter(axis)) {
    throw ParseError("unknown threshold axis \"" + axis + "\"");
  }
  ParamPoint base;
  for (const auto& [name, value] : fixed) {
    if (name != axis) base.set(name, value);
  }
  base.channel = channel;
  const auto separability = [&](double x) {
    ParamPoint p = base;
    p.set(axis, x);
    const LocalInvariants inv = local_invariants(build_standard_cm(p.state()));
    return static_cast<double>(interval_separability(inv));
  };
  return bisect(separability, lo, hi);
}

}  // namespace cvmink::cli
