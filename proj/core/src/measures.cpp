#include "cvmink/measures.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "cvmink/minkowski.hpp"

namespace cvmink {
namespace {

constexpr Real kDegenerateTol = 1e-12L;
constexpr Real kSymmetryTol = 1e-9L;

bool entangled(const LocalInvariants& inv) {
  return interval_separability(inv) <= -kBoundaryTol;
}

double xlog2x(double c) { return c > 0.0 ? c * std::log2(c) : 0.0; }

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::kMinkowskiDistance:
      return "mink_dist";
    case MeasureKind::kLogNegativity:
      return "log_neg";
    case MeasureKind::kEofSymmetric:
      return "eof_symmetric";
    case MeasureKind::kEofLowerBound:
      return "eof_bound";
  }
  return "unknown";
}

double unified_argument(const LocalInvariants& inv_of_v) {
  const SymplecticPair sp = symplectic_eigenvalues(partial_transpose(inv_of_v));
  const Real denom = sp.n_plus * sp.n_plus - 0.25L;
  if (denom > kDegenerateTol) {
    const Real inner = interval_separability(inv_of_v) / denom + 0.25L;
    return static_cast<double>(2 * std::sqrt(std::max<Real>(inner, 0)));
  }
  if (denom >= -kDegenerateTol) {
    return static_cast<double>(2 * sp.n_minus);
  }
  throw DegenerateArgument(
      "larger symplectic eigenvalue of the transposed state is below 1/2");
}

double eof_function(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("eof_function requires x > 0");
  }
  if (x >= 1.0) return 0.0;
  const double s = std::sqrt(x);
  const double c_plus = (1.0 / s + s) * (1.0 / s + s) / 4.0;
  const double c_minus = (1.0 / s - s) * (1.0 / s - s) / 4.0;
  return xlog2x(c_plus) - xlog2x(c_minus);
}

double log_negativity(const LocalInvariants& inv) {
  if (!entangled(inv)) return 0.0;
  return std::max(0.0, -std::log(unified_argument(inv)));
}

EofSymmetric eof_symmetric(const LocalInvariants& inv) {
  if (std::abs(inv.i1 - inv.i2) > kSymmetryTol) {
    throw AsymmetricState("closed-form EoF needs I1 == I2");
  }
  EofSymmetric out;
  if (!entangled(inv)) {
    out.separable = unified_argument(inv) > 1.0 + kBoundaryTol;
    return out;
  }
  out.bits = eof_function(unified_argument(inv));
  return out;
}

double eof_lower_bound(const LocalInvariants& inv) {
  if (!entangled(inv)) return 0.0;
  return eof_function(unified_argument(inv));
}

double minkowski_distance_measure(const LocalInvariants& inv) {
  const Real ds2t = interval_separability(inv);
  return ds2t <= -kBoundaryTol ? static_cast<double>(-ds2t) : 0.0;
}

double measure(MeasureKind kind, const LocalInvariants& inv) {
  switch (kind) {
    case MeasureKind::kMinkowskiDistance:
      return minkowski_distance_measure(inv);
    case MeasureKind::kLogNegativity:
      return log_negativity(inv);
    case MeasureKind::kEofSymmetric:
      return eof_symmetric(inv).bits;
    case MeasureKind::kEofLowerBound:
      return eof_lower_bound(inv);
  }
  return 0.0;
}

CovarianceMatrix noise_convolution_cm(const CovarianceMatrix& v_prime,
                                      const CovarianceMatrix& noise) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(noise.entries(),
                                             Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -kPsdTol) {
    throw NonPsdNoise("noise covariance is not positive semidefinite");
  }
  return CovarianceMatrix(v_prime.entries() + noise.entries());
}

}  // namespace cvmink
