#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cvmink/cvmink.hpp"

namespace cvmink::cli {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string counterexample;  // first failure only

  bool passed() const { return failures == 0; }
};

/// Seams for mutation testing: the suites call the library through these.
struct PropertyHooks {
  std::function<LocalInvariants(const LocalInvariants&)> partial_transpose =
      [](const LocalInvariants& inv) { return cvmink::partial_transpose(inv); };
};

/// Runs every property suite. Each suite draws from its own generator seeded
/// by (seed, suite index), so results do not depend on which suites run or
/// in what order.
std::vector<PropertyResult> run_property_suites(std::uint64_t seed, int cases,
                                                const PropertyHooks& hooks = {});

/// Names of the suites, in run order.
std::vector<std::string> property_suite_names();

/// Runs one named suite; throws std::invalid_argument for unknown names.
PropertyResult run_property_suite(const std::string& name, std::uint64_t seed, int cases,
                                  const PropertyHooks& hooks = {});

std::string format_report(const std::vector<PropertyResult>& results);

/// A covariance matrix as the JSON accepted by `analyze --cm`.
std::string dump_cm(const CovarianceMatrix& v);

}  // namespace cvmink::cli
