#include "cvmink/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "cvmink/minkowski.hpp"

namespace cvmink {
namespace {

using ComplexL = std::complex<Real>;
using Matrix2cl = Eigen::Matrix<ComplexL, 2, 2>;

Matrix2cl widen(const Matrix2c& m) { return m.cast<ComplexL>(); }

ComplexL det2(const Matrix2cl& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

Real real_part(ComplexL value, const char* name) {
  const Real scale = std::max<Real>(1, std::abs(value.real()));
  if (std::abs(value.imag()) > 1e-10L * scale) {
    throw InvalidCovariance(std::string("invariant ") + name +
                            " has a non-negligible imaginary part");
  }
  return value.real();
}

double max_abs(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }

double min_eigenvalue(const Matrix2c& m) {
  Eigen::SelfAdjointEigenSolver<Matrix2c> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double min_eigenvalue(const Matrix4c& m) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

namespace basis {

Matrix2c Z() {
  Matrix2c z = Matrix2c::Zero();
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

Matrix2c X() {
  Matrix2c x = Matrix2c::Zero();
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

Matrix4c E() {
  Matrix4c e = Matrix4c::Zero();
  e.topLeftCorner<2, 2>() = Z();
  e.bottomRightCorner<2, 2>() = Z();
  return e;
}

Matrix4c T() {
  Matrix4c t = Matrix4c::Zero();
  t.topLeftCorner<2, 2>() = Matrix2c::Identity();
  t.bottomRightCorner<2, 2>() = X();
  return t;
}

}  // namespace basis

CovarianceMatrix::CovarianceMatrix() : m_(Matrix4c::Identity() * 0.5) {}

CovarianceMatrix::CovarianceMatrix(const Matrix4c& entries) {
  if (!entries.allFinite()) {
    throw NonHermitianInput(std::numeric_limits<double>::quiet_NaN());
  }
  const Matrix4c adj = entries.adjoint();
  const double residue = (entries - adj).cwiseAbs().maxCoeff();
  if (residue > kHermitianTol * std::max(1.0, max_abs(entries))) {
    throw NonHermitianInput(residue);
  }
  m_ = (entries + adj) * 0.5;
}

bool CovarianceMatrix::is_real(double tol) const {
  return m_.imag().cwiseAbs().maxCoeff() <= tol;
}

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::kUnphysical:
      return "UNPHYSICAL";
    case StateKind::kPhysical:
      return "PHYSICAL";
    case StateKind::kSeparable:
      return "SEPARABLE";
    case StateKind::kEntangled:
      return "ENTANGLED";
    case StateKind::kBoundary:
      return "BOUNDARY";
  }
  return "UNKNOWN";
}

std::optional<StateKind> state_kind_from_string(std::string_view s) {
  for (auto k : {StateKind::kUnphysical, StateKind::kPhysical,
                 StateKind::kSeparable, StateKind::kEntangled,
                 StateKind::kBoundary}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

CovarianceMatrix build_standard_cm(const StandardFormParams& p) {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = m(1, 1) = p.n1;
  m(2, 2) = m(3, 3) = p.n2;
  Matrix2c c;
  c << p.ms, p.mc, p.mc, p.ms;
  m.topRightCorner<2, 2>() = c;
  m.bottomLeftCorner<2, 2>() = c.adjoint();
  return CovarianceMatrix(m);
}

std::optional<StandardFormParams> as_standard_form(const CovarianceMatrix& v,
                                                   double tol) {
  if (!v.is_real(tol)) return std::nullopt;
  const Matrix4c& m = v.entries();
  StandardFormParams p{m(0, 0).real(), m(2, 2).real(), m(0, 2).real(),
                       m(0, 3).real()};
  const double diff = (build_standard_cm(p).entries() - m).cwiseAbs().maxCoeff();
  if (diff <= tol) return p;
  return std::nullopt;
}

LocalInvariants local_invariants(const CovarianceMatrix& v) {
  const Matrix2cl v1 = widen(v.v1());
  const Matrix2cl v2 = widen(v.v2());
  const Matrix2cl c = widen(v.c());
  const Matrix2cl z = widen(basis::Z());
  const Matrix2cl zcz = z * c * z;
  const Matrix2cl product = v1 * zcz * v2 * zcz.adjoint();

  LocalInvariants inv;
  inv.i1 = real_part(det2(v1), "I1");
  inv.i2 = real_part(det2(v2), "I2");
  inv.i3 = real_part(det2(c), "I3");
  inv.i4 = real_part(product.trace(), "I4");
  return inv;
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& v) {
  const Matrix4c t = basis::T();
  return CovarianceMatrix(t * v.entries() * t);
}

LocalInvariants partial_transpose(const LocalInvariants& inv) {
  return {inv.i1, inv.i2, -inv.i3, inv.i4};
}

SymplecticPair symplectic_eigenvalues(const LocalInvariants& inv) {
  // Written with the sign convention of the transposed state: feeding in
  // I3' = -I3 turns the familiar ((I1+I2)/2 - I3') form into sigma/2.
  const Real i3t = -inv.i3;
  const Real half_sum = (inv.i1 + inv.i2) / 2 - i3t;
  const Real half_diff = (inv.i1 - inv.i2) / 2;
  Real disc = half_diff * half_diff - (inv.i1 + inv.i2) * i3t + inv.i4;
  if (disc < 0) {
    const Real scale = std::max<Real>(1, std::abs(inv.i4) + std::abs(inv.i1 * inv.i2));
    if (disc < -1e-10L * scale) {
      throw NegativeDiscriminant("symplectic discriminant is negative: " +
                                 std::to_string(static_cast<double>(disc)));
    }
    disc = 0;
  }
  const Real root = std::sqrt(disc);
  const Real plus2 = half_sum + root;
  // det V = n+^2 n-^2 avoids cancelling half_sum against root.
  const Real det = det_via_invariants(inv);
  Real minus2 = plus2 > 0 ? det / plus2 : half_sum - root;
  if (plus2 < 0 || minus2 < 0) {
    const Real scale = std::max<Real>(1, std::abs(half_sum));
    if (plus2 < -1e-12L * scale || minus2 < -1e-12L * scale) {
      throw NegativeSquaredEigenvalue(
          "squared symplectic eigenvalue is negative");
    }
    minus2 = std::max<Real>(minus2, 0);
  }
  return {std::sqrt(std::max<Real>(plus2, 0)), std::sqrt(minus2)};
}

SymplecticPair symplectic_spectrum(const CovarianceMatrix& v) {
  Eigen::LLT<Matrix4c> llt(v.entries());
  if (llt.info() != Eigen::Success || min_eigenvalue(v.entries()) < kPsdTol) {
    throw UnphysicalState("covariance matrix is not positive definite",
                          std::numeric_limits<double>::quiet_NaN());
  }
  const Matrix4c l = llt.matrixL();
  const Matrix4c m = l.adjoint() * basis::E() * l;
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(m, Eigen::EigenvaluesOnly);
  Eigen::Vector4d mags = es.eigenvalues().cwiseAbs();
  std::sort(mags.data(), mags.data() + 4);
  // Eigenvalues come in +-n pairs; average each pair.
  return {(mags(2) + mags(3)) / 2, (mags(0) + mags(1)) / 2};
}

Real det_via_invariants(const LocalInvariants& inv) {
  return inv.i1 * inv.i2 + inv.i3 * inv.i3 - inv.i4;
}

Real seralian(const LocalInvariants& inv) {
  return inv.i1 + inv.i2 + 2 * inv.i3;
}

double purity(const LocalInvariants& inv) {
  const Real det = det_via_invariants(inv);
  if (det < 1.0L / 16 - 1e-10L) {
    throw UnphysicalState("det V below 1/16: purity would exceed one",
                          std::numeric_limits<double>::quiet_NaN());
  }
  return static_cast<double>(std::min<Real>(1, 1 / (4 * std::sqrt(det))));
}

double purity(const CovarianceMatrix& v) { return purity(local_invariants(v)); }

PhysicalityCheck physicality_criteria(const CovarianceMatrix& v) {
  PhysicalityCheck check;

  // (a) V1 + Z/2 > 0 and S(V + E/2) >= 0.
  const Matrix4c shifted = v.entries() + basis::E() * 0.5;
  const Matrix2c upper = shifted.topLeftCorner<2, 2>();
  const double upper_min = min_eigenvalue(upper);
  if (upper_min >= kPsdTol) {
    const Matrix2c b = shifted.topRightCorner<2, 2>();
    const Matrix2c schur = shifted.bottomRightCorner<2, 2>() -
                           b.adjoint() * upper.inverse() * b;
    const Matrix2c herm = (schur + schur.adjoint()) * 0.5;
    check.schur_ok = min_eigenvalue(herm) >= -kPsdTol;
  } else if (upper_min >= -kPsdTol) {
    check.schur_skipped = true;
  } else {
    check.schur_ok = false;
  }

  // (b) smallest symplectic eigenvalue >= 1/2.
  try {
    const SymplecticPair sp = symplectic_spectrum(v);
    check.min_symplectic = static_cast<double>(sp.n_minus);
    check.symplectic_ok = sp.n_minus >= 0.5L - kSymplecticTol;
  } catch (const UnphysicalState&) {
    check.min_symplectic = std::numeric_limits<double>::quiet_NaN();
    check.symplectic_ok = false;
  }
  return check;
}

Classification classify_physical(const CovarianceMatrix& v) {
  const PhysicalityCheck check = physicality_criteria(v);
  Classification out;
  out.schur_skipped = check.schur_skipped;
  const bool physical =
      check.symplectic_ok && (check.schur_skipped || check.schur_ok);
  LocalInvariants inv;
  try {
    inv = local_invariants(v);
  } catch (const InvalidCovariance&) {
    out.kind = StateKind::kUnphysical;
    out.detail = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.detail = static_cast<double>(interval_physical(inv));
  if (!physical) {
    out.kind = StateKind::kUnphysical;
  } else if (std::abs(out.detail) <= kBoundaryTol) {
    out.kind = StateKind::kBoundary;
  } else {
    out.kind = StateKind::kPhysical;
  }
  return out;
}

Classification classify_separable(const LocalInvariants& inv) {
  Classification out;
  out.detail = static_cast<double>(interval_separability(inv));
  if (out.detail >= kBoundaryTol) {
    out.kind = StateKind::kSeparable;
  } else if (out.detail <= -kBoundaryTol) {
    out.kind = StateKind::kEntangled;
  } else {
    out.kind = StateKind::kBoundary;
  }
  return out;
}

Classification classify_separable(const CovarianceMatrix& v) {
  const Classification phys = classify_physical(v);
  if (phys.kind == StateKind::kUnphysical) {
    throw UnphysicalState("separability is undefined for an unphysical state",
                          physicality_criteria(v).min_symplectic);
  }
  Classification out = classify_separable(local_invariants(v));
  out.schur_skipped = phys.schur_skipped;
  return out;
}

}  // namespace cvmink
