#pragma once

#include <complex>
#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "cvmink/errors.hpp"

namespace cvmink {

// The invariant algebra (det V, seralian, intervals) cancels terms of size
// I1*I2 down to O(1/16); for strongly squeezed states I1*I2 ~ 1e8, so the
// invariants and everything derived from them are carried in extended
// precision.
using Real = long double;

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix<Complex, 2, 2>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;

inline constexpr double kHermitianTol = 1e-12;
/// Smallest eigenvalue >= -kPsdTol counts as positive semidefinite,
/// >= +kPsdTol as positive definite.
inline constexpr double kPsdTol = 1e-10;
/// |deciding scalar| <= kBoundaryTol classifies a state as BOUNDARY.
inline constexpr double kBoundaryTol = 1e-9;
inline constexpr double kSymplecticTol = 1e-9;

/// Constant matrices of the (a1^dag, a1, a2^dag, a2) mode basis.
namespace basis {
Matrix2c Z();  ///< diag(1, -1)
Matrix2c X();  ///< anti-diagonal of ones
Matrix4c E();  ///< diag(Z, Z)
Matrix4c T();  ///< diag(I, X), the partial mirror reflection of mode 2
}  // namespace basis

/// Hermitian 4x4 covariance matrix in the (a1^dag, a1, a2^dag, a2) ordering.
///
/// Construction checks Hermiticity to kHermitianTol (relative to the largest
/// entry) and then stores the exactly Hermitian part, so every instance
/// satisfies entries(i, j) == conj(entries(j, i)) bit for bit.
class CovarianceMatrix {
 public:
  /// The vacuum, diag(1/2, 1/2, 1/2, 1/2).
  CovarianceMatrix();
  explicit CovarianceMatrix(const Matrix4c& entries);

  const Matrix4c& entries() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  Matrix2c v1() const { return m_.topLeftCorner<2, 2>(); }
  Matrix2c v2() const { return m_.bottomRightCorner<2, 2>(); }
  Matrix2c c() const { return m_.topRightCorner<2, 2>(); }

  bool is_real(double tol = 0.0) const;

  friend bool operator==(const CovarianceMatrix& a, const CovarianceMatrix& b) {
    return a.m_ == b.m_;
  }

 private:
  Matrix4c m_;
};

struct StandardFormParams {
  double n1 = 0.5;
  double n2 = 0.5;
  double ms = 0.0;
  double mc = 0.0;

  friend bool operator==(const StandardFormParams&,
                         const StandardFormParams&) = default;
};

/// Local symplectic invariants: I1 = det V1, I2 = det V2, I3 = det C,
/// I4 = tr(V1 Z C Z V2 Z C^dag Z).
struct LocalInvariants {
  Real i1 = 0;
  Real i2 = 0;
  Real i3 = 0;
  Real i4 = 0;
};

/// Symplectic eigenvalues, n_plus >= n_minus > 0.
struct SymplecticPair {
  Real n_plus = 0;
  Real n_minus = 0;
};

enum class StateKind {
  kUnphysical,
  kPhysical,  // strictly inside the purity cone
  kSeparable,
  kEntangled,
  kBoundary,
};

std::string_view to_string(StateKind kind);
std::optional<StateKind> state_kind_from_string(std::string_view s);

struct Classification {
  StateKind kind = StateKind::kUnphysical;
  /// The deciding scalar: delta s^2 for physicality, delta s~^2 for
  /// separability.
  double detail = 0.0;
  /// Set when V1 + Z/2 is singular and the Schur-complement test could not
  /// run; the verdict then rests on the symplectic-eigenvalue test alone.
  bool schur_skipped = false;
};

/// Both physicality criteria, evaluated independently.
struct PhysicalityCheck {
  bool schur_ok = false;
  bool schur_skipped = false;
  bool symplectic_ok = false;
  /// Smallest symplectic eigenvalue of V; NaN when V is not positive definite.
  double min_symplectic = 0.0;
};

CovarianceMatrix build_standard_cm(const StandardFormParams& p);

/// Reads back (n1, n2, ms, mc) when V has the standard-form block pattern
/// with real entries (to within tol); nullopt otherwise.
std::optional<StandardFormParams> as_standard_form(const CovarianceMatrix& v,
                                                   double tol = 1e-12);

/// Throws InvalidCovariance if I1..I4 carry an imaginary part above 1e-10,
/// which cannot happen for the covariance matrix of two bosonic modes.
LocalInvariants local_invariants(const CovarianceMatrix& v);

CovarianceMatrix partial_transpose(const CovarianceMatrix& v);

/// Invariants of T V T given those of V: I3 flips sign.
LocalInvariants partial_transpose(const LocalInvariants& inv);

/// Closed-form symplectic eigenvalues of the matrix whose invariants are
/// passed in. To get the spectrum of V~, pass partial_transpose(inv).
SymplecticPair symplectic_eigenvalues(const LocalInvariants& inv);

/// Symplectic spectrum computed numerically from the matrix: with V = L L^dag
/// (Cholesky), the Hermitian matrix L^dag E L has eigenvalues +-n_k.
/// Throws UnphysicalState if V is not positive definite.
SymplecticPair symplectic_spectrum(const CovarianceMatrix& v);

/// det V = I1 I2 + I3^2 - I4.
Real det_via_invariants(const LocalInvariants& inv);

/// sigma_V = I1 + I2 + 2 I3.
Real seralian(const LocalInvariants& inv);

/// P = 1 / (4 sqrt(det V)); throws UnphysicalState if det V < 1/16 - 1e-10.
double purity(const CovarianceMatrix& v);
double purity(const LocalInvariants& inv);

PhysicalityCheck physicality_criteria(const CovarianceMatrix& v);

/// kUnphysical, kBoundary (pure, |delta s^2| <= kBoundaryTol) or kPhysical.
Classification classify_physical(const CovarianceMatrix& v);

/// kSeparable, kEntangled or kBoundary by the sign of delta s~^2.
/// Throws UnphysicalState on unphysical input.
Classification classify_separable(const CovarianceMatrix& v);

/// Separability verdict from invariants alone, skipping the physicality
/// check. Callers must already know the state is physical.
Classification classify_separable(const LocalInvariants& inv);

}  // namespace cvmink
