#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "cvmink/errors.hpp"
#include "cvmink/states.hpp"

namespace cvmink::cli {

class NoSignChange : public Error {
 public:
  using Error::Error;
};

struct BisectionResult {
  double root = 0.0;
  double value = 0.0;  ///< f(root)
  int iterations = 0;
};

/// Bisection for f(x) = 0 on [lo, hi]. Stops once |f| <= ftol or the
/// bracket is narrower than xtol. Throws NoSignChange if f(lo) and f(hi)
/// share a sign (and neither is already within ftol of zero).
template <class F>
BisectionResult bisect(F&& f, double lo, double hi, double ftol = 1e-10,
                       double xtol = 1e-8) {
  if (lo > hi) std::swap(lo, hi);
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (std::abs(f_lo) <= ftol) return {lo, f_lo, 0};
  if (std::abs(f_hi) <= ftol) return {hi, f_hi, 0};
  if ((f_lo < 0) == (f_hi < 0)) {
    throw NoSignChange("no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  BisectionResult res;
  while (true) {
    const double mid = lo + (hi - lo) / 2;
    const double f_mid = f(mid);
    ++res.iterations;
    if (std::abs(f_mid) <= ftol || (hi - lo) / 2 <= xtol) {
      res.root = mid;
      res.value = f_mid;
      return res;
    }
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
}

/// Root of the separability interval along one TMTSS parameter, all others
/// held at `fixed` (missing ones default to 0, ell only applied if named).
BisectionResult find_threshold(const std::map<std::string, double>& fixed,
                               const std::string& axis, double lo, double hi,
                               const std::optional<FiberParams>& channel = std::nullopt);

}  // namespace cvmink::cli
