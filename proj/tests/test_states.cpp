#include <cmath>

#include <gtest/gtest.h>

#include "cvmink/cvmink.hpp"
#include "oracles.hpp"

using namespace cvmink;

namespace {

LocalInvariants inv_of(const StandardFormParams& p) { return local_invariants(build_standard_cm(p)); }

TEST(Tmtss, MatchesClosedFormOracle) {
  for (double d : {0.3, 2.5, 4.0})
    for (double r : {0.0, 0.7, 1.25, 3.0})
      for (double nbar : {0.0, 0.5, 1.5}) {
        const StandardFormParams p = tmtss({d, r, nbar});
        const long double h1 = oracle::tmtss_h(d, nbar, d + 2 * r);
        const long double h2 = oracle::tmtss_h(d, nbar, d - 2 * r);
        EXPECT_EQ(p.n1, p.n2);
        EXPECT_EQ(p.ms, 0.0);
        EXPECT_NEAR(p.n1, (h1 + h2) / 4, 1e-12L * (h1 + h2));
        EXPECT_NEAR(p.mc, (h1 - h2) / 4, 1e-12L * (h1 + h2));
      }
}

TEST(Tmtss, ZeroSqueezingIsUncorrelated) {
  const StandardFormParams p = tmtss({1.3, 0.0, 0.7});
  EXPECT_EQ(p.mc, 0.0);
  EXPECT_EQ(classify_separable(build_standard_cm(p)).kind, StateKind::kSeparable);
}

TEST(Tmtss, VanishingDissipationGivesTmsv) {
  for (double r : {0.2, 1.0, 2.0}) {
    const StandardFormParams p = tmtss({1e-12, r, 0.0});
    EXPECT_NEAR(p.n1, std::cosh(2 * r) / 2, 1e-9 * p.n1);
    EXPECT_NEAR(p.mc, -std::sinh(2 * r) / 2, 1e-9 * p.n1);
  }
}

TEST(Tmtss, RemovableSingularity) {
  // p2 = d - 2r = 0.
  const StandardFormParams at = tmtss({2.0, 1.0, 0.5});
  const StandardFormParams near = tmtss({2.0, 1.0 + 1e-9, 0.5});
  EXPECT_TRUE(std::isfinite(at.n1));
  EXPECT_NEAR(at.n1, near.n1, 1e-8);
  EXPECT_NEAR(at.mc, near.mc, 1e-8);
}

TEST(Tmtss, ThresholdPointThroughFiber) {
  const StandardFormParams p = lossy_fiber(tmtss({2.5, 1.25, 0.5}), FiberParams::asymmetric(0.5));
  EXPECT_NEAR(interval_separability(inv_of(p)), 0.0L, 1e-3L);
}

TEST(LossFactor, SeriesAndClosedFormAgree) {
  for (double p : {-2e-4, -1e-4, -1e-6, 0.0, 1e-6, 1e-4, 2e-4}) {
    const long double ref = p == 0 ? 1.0L : -std::expm1(-static_cast<long double>(p)) / p;
    EXPECT_NEAR(loss_factor(p), ref, 1e-15L) << "p " << p;
  }
  EXPECT_NEAR(loss_factor(-6.0), (1 - std::exp(6.0)) / -6.0, 1e-12);
}

TEST(Tmsv, Examples) {
  EXPECT_EQ(tmsv(0.0), StandardFormParams{});
  const StandardFormParams p = tmsv(1.0);
  EXPECT_NEAR(p.n1, 1.8810, 1e-4);
  EXPECT_NEAR(p.mc, -1.8134, 1e-4);
  for (double r = 0; r <= 3; r += 0.25) EXPECT_NEAR(purity(build_standard_cm(tmsv(r))), 1.0, 1e-9);
}

TEST(LossyFiber, ZeroLengthIsIdentity) {
  const StandardFormParams p = tmtss({2.5, 3, 0.5});
  EXPECT_EQ(lossy_fiber(p, FiberParams::asymmetric(0.0)), p);
  EXPECT_EQ(lossy_fiber(p, FiberParams::symmetric()), p);
}

TEST(LossyFiber, OpaqueModeDecaysToVacuum) {
  const StandardFormParams p = tmtss({2.5, 3, 0.5});
  const StandardFormParams out = lossy_fiber(p, {0.0, 1.0, 1e-9});
  EXPECT_NEAR(out.n2, 0.5, 1e-12);
  EXPECT_NEAR(out.mc, p.mc * 1e-9, 1e-15);
  EXPECT_NE(classify_separable(build_standard_cm(out)).kind, StateKind::kEntangled);
}

TEST(LossyFiber, ShrinksEntanglementAtFigureFourPoint) {
  const StandardFormParams p = tmtss({2.5, 3, 0.5});
  const long double sym = interval_separability(inv_of(p));
  const long double asym = interval_separability(inv_of(lossy_fiber(p, FiberParams::asymmetric(0.5))));
  ASSERT_LT(sym, 0.0L);
  ASSERT_LT(asym, 0.0L);
  EXPECT_LT(std::abs(asym), std::abs(sym));
}

TEST(LossyFiber, RejectsBadTransmission) {
  const StandardFormParams p{};
  EXPECT_THROW(lossy_fiber(p, {0.0, 0.0, 1.0}), InvalidTransmission);
  EXPECT_THROW(lossy_fiber(p, {0.0, 1.0, 1.5}), InvalidTransmission);
  EXPECT_THROW(lossy_fiber(p, FiberParams::asymmetric(-1.0)), InvalidTransmission);
}

TEST(LocalSymplectic, ZerosGiveIdentity) {
  EXPECT_TRUE(make_local_symplectic(0, 0, 0, 0, 0, 0).assembled().isApprox(Matrix4c::Identity()));
}

TEST(LocalSymplectic, BlockInvariants) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const LocalSymplectic s = random_local_symplectic(rng);
    for (const Matrix2c& b : {s.s1, s.s2}) {
      EXPECT_NEAR(std::norm(b(0, 0)) - std::norm(b(0, 1)), 1.0, 1e-12);
      EXPECT_EQ(b(1, 0), std::conj(b(0, 1)));
      EXPECT_EQ(b(1, 1), std::conj(b(0, 0)));
    }
    const Matrix4c sl = s.assembled();
    const Matrix4c inv = sl.inverse();
    EXPECT_LT((inv - basis::E() * sl.adjoint() * basis::E()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(ApplyLocal, IdentityLeavesStateUnchanged) {
  const CovarianceMatrix v = build_standard_cm(tmtss({2.5, 1, 0.2}));
  EXPECT_TRUE(apply_local(v, LocalSymplectic{}).entries().isApprox(v.entries()));
}

TEST(ApplyLocal, VacuumStaysPure) {
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const CovarianceMatrix out = apply_local(CovarianceMatrix{}, random_local_symplectic(rng));
    EXPECT_NEAR(purity(out), 1.0, 1e-9);
    EXPECT_NEAR(interval_physical(local_invariants(out)), 0.0L, 1e-9L);
  }
}

TEST(ApplyLocal, TmsvSeparabilityIntervalUnchanged) {
  Rng rng(14);
  const CovarianceMatrix v = build_standard_cm(tmsv(1.0));
  const long double before = interval_separability(local_invariants(v));
  for (int i = 0; i < 50; ++i) {
    const CovarianceMatrix w = apply_local(v, random_local_symplectic(rng));
    EXPECT_NEAR(interval_separability(local_invariants(w)), before, 1e-8L * std::abs(before));
    EXPECT_NE(classify_physical(w).kind, StateKind::kUnphysical);
  }
}

TEST(RandomPhysicalState, Deterministic) {
  EXPECT_EQ(random_physical_state(std::uint64_t{99}), random_physical_state(std::uint64_t{99}));
  EXPECT_FALSE(random_physical_state(std::uint64_t{99}) == random_physical_state(std::uint64_t{100}));
}

TEST(RandomPhysicalState, AllPhysicalAndBothClassesOccur) {
  Rng rng(15);
  int entangled = 0, separable = 0;
  for (int i = 0; i < 10000; ++i) {
    const CovarianceMatrix v = random_physical_state(rng);
    ASSERT_NE(classify_physical(v).kind, StateKind::kUnphysical);
    const StateKind k = classify_separable(local_invariants(v)).kind;
    entangled += k == StateKind::kEntangled;
    separable += k == StateKind::kSeparable;
  }
  EXPECT_GT(entangled, 100);
  EXPECT_GT(separable, 100);
}

TEST(RandomNoise, PsdWithBoundedNorm) {
  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    const CovarianceMatrix p = random_noise_cm(rng);
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(p.entries(), Eigen::EigenvaluesOnly);
    EXPECT_GE(es.eigenvalues()(0), -1e-12);
    EXPECT_LE(es.eigenvalues()(3), 1.0 + 1e-12);
    EXPECT_GT(es.eigenvalues()(3), 0.0);
  }
}

}  // namespace
