#pragma once

#include <cstdint>
#include <random>

#include "cvmink/covariance.hpp"

namespace cvmink {

/// Seeded generator used by every sampler. Callers own and pass it
/// explicitly; there is no global random state.
using Rng = std::mt19937_64;

/// Two-mode thermal squeezed state knobs: dissipation d, squeezing r and
/// thermal photon number nbar.
struct TmtssParams {
  double d = 0.0;
  double r = 0.0;
  double nbar = 0.0;
};

/// Transmission of the two arms of a lossy fiber link.
struct FiberParams {
  double ell = 0.0;
  double t1 = 1.0;
  double t2 = 1.0;

  /// T1 = 1, T2 = exp(-ell).
  static FiberParams asymmetric(double ell);
  /// Lossless, the ell = 0 case.
  static FiberParams symmetric() { return {}; }
};

/// diag(S1, S2), each block [[alpha, beta], [conj(beta), conj(alpha)]] with
/// |alpha|^2 - |beta|^2 = 1.
struct LocalSymplectic {
  Matrix2c s1 = Matrix2c::Identity();
  Matrix2c s2 = Matrix2c::Identity();

  Matrix4c assembled() const;
};

/// (1 - e^-p) / p, continuous through p = 0.
double loss_factor(double p);

/// n = (h1 + h2)/4, m_s = 0, m_c = (h1 - h2)/4 with
/// h_i = e^-p_i + d (2 nbar + 1) (1 - e^-p_i)/p_i, p_1,2 = d +- 2r.
StandardFormParams tmtss(const TmtssParams& p);

/// Two-mode squeezed vacuum, the d -> 0 limit of tmtss:
/// (cosh 2r / 2, cosh 2r / 2, 0, -sinh 2r / 2).
StandardFormParams tmsv(double r);

/// Product of two thermal states with mean photon numbers nbar1, nbar2.
StandardFormParams thermal_product(double nbar1, double nbar2);

/// Pure-loss channel on each arm: n_i' = (n_i - 1/2) T_i^2 + 1/2,
/// m' = m T1 T2 for both m_c and m_s. Throws InvalidTransmission unless
/// both T_i lie in (0, 1].
StandardFormParams lossy_fiber(const StandardFormParams& sp, const FiberParams& f);

/// alpha_j = e^{i theta_j} cosh r_j, beta_j = e^{i phi_j} sinh r_j.
LocalSymplectic make_local_symplectic(double theta1, double r1, double phi1,
                                      double theta2, double r2, double phi2);

/// S_L^dag V S_L.
CovarianceMatrix apply_local(const CovarianceMatrix& v, const LocalSymplectic& s);

/// Angles uniform on [0, 2 pi), squeezing uniform on [0, 1.5].
LocalSymplectic random_local_symplectic(Rng& rng);

/// Physical standard-form parameters: n_i uniform on [1/2, 3], m_s and m_c
/// uniform on [-2, 2], rejected until classify_physical accepts them.
StandardFormParams random_standard_form(Rng& rng);

/// random_standard_form, optionally conjugated by a random local symplectic.
CovarianceMatrix random_physical_state(Rng& rng, bool conjugate = true);
CovarianceMatrix random_physical_state(std::uint64_t seed);

/// Classical noise covariance A A^dag, A built from random complex blocks of
/// the [[a, b], [conj(b), conj(a)]] pattern, scaled to spectral norm
/// uniform on (0, 1].
CovarianceMatrix random_noise_cm(Rng& rng);

}  // namespace cvmink
