#pragma once

#include <optional>
#include <utility>

#include "cvmink/covariance.hpp"

namespace cvmink {

/// Squared Minkowski coordinates of a state. (dt2, dx2, dy2) span the
/// physicality cone, (dt2, dx2, dy2_tilde) the separability cone.
/// dx2 is not guaranteed to be non-negative.
struct MinkowskiCoords {
  Real dt2 = 0;
  Real dx2 = 0;
  Real dy2 = 0;
  Real dy2_tilde = 0;
};

struct Intervals {
  Real ds2 = 0;        ///< physicality interval, >= 0 for physical states
  Real ds2_tilde = 0;  ///< separability interval, < 0 iff entangled
};

/// The coordinates carry a (I1 - 1/4)^-1 prefactor and divide by I2; throws
/// CoordinateSingularity when I1 <= 1/4 + 1e-9 or I2 <= 1e-9.
MinkowskiCoords coordinates(const LocalInvariants& inv);

/// As coordinates(), with nullopt in place of the exception.
std::optional<MinkowskiCoords> try_coordinates(const LocalInvariants& inv);

/// delta s^2 = det V - sigma_V / 4 + 1/16 = det(V + E/2).
Real interval_physical(const LocalInvariants& inv);

/// delta s~^2 = det(V~ + E/2) = (n~+^2 - 1/4)(n~-^2 - 1/4), from the
/// invariants of V (the transposition is applied internally).
Real interval_separability(const LocalInvariants& inv);

Intervals intervals(const LocalInvariants& inv);

/// Separability boundary m_c = -(n - 1/2), +(n - 1/2) of the symmetric
/// thermal squeezed family (m_s = 0). Requires n >= 1/2.
std::pair<double, double> tmtss_separatrix(double n);

/// Distance of a fiber-output state (n1', n2', m_c') from the separatrix
/// (n1' +- 1/2)(n2' +- 1/2) = m_c'^2, minimised over the two sign branches.
double fiber_separatrix_residual(double n1p, double n2p, double mcp);

}  // namespace cvmink
