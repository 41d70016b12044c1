#include "cvmink/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cvmink {
namespace {

constexpr Real kQuarter = 0.25L;
constexpr Real kCoordinateTol = 1e-9L;

}  // namespace

MinkowskiCoords coordinates(const LocalInvariants& inv) {
  const Real a = inv.i1 - kQuarter;
  if (a <= kCoordinateTol) {
    throw CoordinateSingularity("Minkowski coordinates undefined: I1 <= 1/4");
  }
  if (inv.i2 <= kCoordinateTol) {
    throw CoordinateSingularity("Minkowski coordinates undefined: I2 <= 0");
  }
  const Real t = a - inv.i4 / (2 * inv.i2);
  const Real y = a + inv.i3;
  const Real y_tilde = a - inv.i3;

  MinkowskiCoords out;
  out.dt2 = t * t * inv.i2 / a;
  out.dx2 = (inv.i4 * inv.i4 / (4 * inv.i2) - inv.i1 * inv.i3 * inv.i3) / a;
  out.dy2 = y * y / (4 * a);
  out.dy2_tilde = y_tilde * y_tilde / (4 * a);
  return out;
}

std::optional<MinkowskiCoords> try_coordinates(const LocalInvariants& inv) {
  try {
    return coordinates(inv);
  } catch (const CoordinateSingularity&) {
    return std::nullopt;
  }
}

Real interval_physical(const LocalInvariants& inv) {
  return det_via_invariants(inv) - seralian(inv) / 4 + 1.0L / 16;
}

Real interval_separability(const LocalInvariants& inv) {
  // (n+^2 - 1/4)(n-^2 - 1/4) expanded with n+^2 n-^2 = det V~ and
  // n+^2 + n-^2 = sigma_V~; no square roots needed.
  const LocalInvariants pt = partial_transpose(inv);
  return det_via_invariants(pt) - seralian(pt) / 4 + 1.0L / 16;
}

Intervals intervals(const LocalInvariants& inv) {
  return {interval_physical(inv), interval_separability(inv)};
}

std::pair<double, double> tmtss_separatrix(double n) {
  if (!(n >= 0.5)) {
    throw std::domain_error("tmtss_separatrix requires n >= 1/2");
  }
  const double m = n - 0.5;
  return {-m, m};
}

double fiber_separatrix_residual(double n1p, double n2p, double mcp) {
  const double m2 = mcp * mcp;
  const double plus = (n1p + 0.5) * (n2p + 0.5) - m2;
  const double minus = (n1p - 0.5) * (n2p - 0.5) - m2;
  return std::min(std::abs(plus), std::abs(minus));
}

}  // namespace cvmink
