#include "cvmink/states.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace cvmink {
namespace {

Matrix2c symplectic_block(Complex alpha, Complex beta) {
  Matrix2c b;
  b << alpha, beta, std::conj(beta), std::conj(alpha);
  return b;
}

bool valid_transmission(double t) { return t > 0.0 && t <= 1.0; }

}  // namespace

FiberParams FiberParams::asymmetric(double ell) {
  return {ell, 1.0, std::exp(-ell)};
}

Matrix4c LocalSymplectic::assembled() const {
  Matrix4c s = Matrix4c::Zero();
  s.topLeftCorner<2, 2>() = s1;
  s.bottomRightCorner<2, 2>() = s2;
  return s;
}

double loss_factor(double p) {
  if (std::abs(p) < 1e-4) {
    return 1.0 - p / 2.0 + p * p / 6.0 - p * p * p / 24.0;
  }
  return -std::expm1(-p) / p;
}

StandardFormParams tmtss(const TmtssParams& p) {
  const double noise = p.d * (2.0 * p.nbar + 1.0);
  const auto h = [&](double pi) { return std::exp(-pi) + noise * loss_factor(pi); };
  const double h1 = h(p.d + 2.0 * p.r);
  const double h2 = h(p.d - 2.0 * p.r);
  const double n = (h1 + h2) / 4.0;
  return {n, n, 0.0, (h1 - h2) / 4.0};
}

StandardFormParams tmsv(double r) {
  const double n = std::cosh(2.0 * r) / 2.0;
  return {n, n, 0.0, -std::sinh(2.0 * r) / 2.0};
}

StandardFormParams thermal_product(double nbar1, double nbar2) {
  return {nbar1 + 0.5, nbar2 + 0.5, 0.0, 0.0};
}

StandardFormParams lossy_fiber(const StandardFormParams& sp, const FiberParams& f) {
  if (!valid_transmission(f.t1) || !valid_transmission(f.t2)) {
    throw InvalidTransmission("fiber transmissions must lie in (0, 1]");
  }
  const double t12 = f.t1 * f.t2;
  return {(sp.n1 - 0.5) * f.t1 * f.t1 + 0.5, (sp.n2 - 0.5) * f.t2 * f.t2 + 0.5,
          sp.ms * t12, sp.mc * t12};
}

LocalSymplectic make_local_symplectic(double theta1, double r1, double phi1,
                                      double theta2, double r2, double phi2) {
  LocalSymplectic s;
  s.s1 = symplectic_block(std::polar(std::cosh(r1), theta1),
                          std::polar(std::sinh(r1), phi1));
  s.s2 = symplectic_block(std::polar(std::cosh(r2), theta2),
                          std::polar(std::sinh(r2), phi2));
  return s;
}

CovarianceMatrix apply_local(const CovarianceMatrix& v, const LocalSymplectic& s) {
  const Matrix4c sl = s.assembled();
  return CovarianceMatrix(sl.adjoint() * v.entries() * sl);
}

LocalSymplectic random_local_symplectic(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> squeeze(0.0, 1.5);
  const double theta1 = angle(rng), r1 = squeeze(rng), phi1 = angle(rng);
  const double theta2 = angle(rng), r2 = squeeze(rng), phi2 = angle(rng);
  return make_local_symplectic(theta1, r1, phi1, theta2, r2, phi2);
}

StandardFormParams random_standard_form(Rng& rng) {
  std::uniform_real_distribution<double> occupation(0.5, 3.0);
  std::uniform_real_distribution<double> correlation(-2.0, 2.0);
  while (true) {
    StandardFormParams p;
    p.n1 = occupation(rng);
    p.n2 = occupation(rng);
    p.ms = correlation(rng);
    p.mc = correlation(rng);
    if (classify_physical(build_standard_cm(p)).kind != StateKind::kUnphysical) {
      return p;
    }
  }
}

CovarianceMatrix random_physical_state(Rng& rng, bool conjugate) {
  const CovarianceMatrix v = build_standard_cm(random_standard_form(rng));
  if (!conjugate) return v;
  return apply_local(v, random_local_symplectic(rng));
}

CovarianceMatrix random_physical_state(std::uint64_t seed) {
  Rng rng(seed);
  return random_physical_state(rng, true);
}

CovarianceMatrix random_noise_cm(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix4c a;
  for (int bi = 0; bi < 2; ++bi) {
    for (int bj = 0; bj < 2; ++bj) {
      const Complex alpha(gauss(rng), gauss(rng));
      const Complex beta(gauss(rng), gauss(rng));
      a.block<2, 2>(2 * bi, 2 * bj) = symplectic_block(alpha, beta);
    }
  }
  Matrix4c p = a * a.adjoint();
  p = (p + p.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(p, Eigen::EigenvaluesOnly);
  const double norm = es.eigenvalues()(3);
  // 1 - unit(rng) lies in (0, 1].
  const double target = 1.0 - unit(rng);
  return CovarianceMatrix(p * (target / norm));
}

}  // namespace cvmink
