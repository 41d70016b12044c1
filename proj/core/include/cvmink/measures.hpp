#pragma once

#include <string_view>

#include "cvmink/covariance.hpp"

namespace cvmink {

enum class MeasureKind {
  kMinkowskiDistance,
  kLogNegativity,
  kEofSymmetric,
  kEofLowerBound,
};

std::string_view to_string(MeasureKind kind);

/// x = 2 sqrt(ds~^2 / (n~+^2 - 1/4) + 1/4), which equals 2 n~- of the
/// partially transposed state. Entanglement measures of the family
/// E = f(x) take a decreasing f on (0, 1].
///
/// When n~+^2 - 1/4 <= 1e-12 the quotient is 0/0 (V~ has a pure-vacuum-like
/// upper eigenvalue) and x is taken as 2 n~- directly. Throws
/// DegenerateArgument only when n~+^2 < 1/4 - 1e-12, which no physical
/// state produces.
double unified_argument(const LocalInvariants& inv_of_v);

/// f(x) = c+ log2 c+ - c- log2 c-, c+-(x) = (x^-1/2 +- x^1/2)^2 / 4.
/// Returns 0 for x >= 1.
double eof_function(double x);

/// max(0, -ln x); zero unless the state is ENTANGLED.
double log_negativity(const LocalInvariants& inv);

struct EofSymmetric {
  double bits = 0.0;
  /// x > 1: the state is separable and bits is 0 by convention.
  bool separable = false;
};

/// Entanglement of formation (bits) of a symmetric state, |I1 - I2| <= 1e-9.
/// Throws AsymmetricState otherwise.
EofSymmetric eof_symmetric(const LocalInvariants& inv);

/// eof_function(unified_argument(inv)) regardless of symmetry: a lower bound
/// on the entanglement of formation.
double eof_lower_bound(const LocalInvariants& inv);

/// |ds~^2| for entangled states, 0 otherwise.
double minkowski_distance_measure(const LocalInvariants& inv);

/// Dispatch by kind. kEofSymmetric throws AsymmetricState for asymmetric
/// states.
double measure(MeasureKind kind, const LocalInvariants& inv);

/// V = P + V' for classical Gaussian noise with covariance P.
/// Throws NonPsdNoise if P has an eigenvalue below -1e-10.
CovarianceMatrix noise_convolution_cm(const CovarianceMatrix& v_prime,
                                      const CovarianceMatrix& noise);

}  // namespace cvmink
