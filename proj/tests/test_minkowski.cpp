#include <cmath>

#include <gtest/gtest.h>

#include "cvmink/cvmink.hpp"
#include "oracles.hpp"

using namespace cvmink;

namespace {

LocalInvariants inv_of(const StandardFormParams& p) { return local_invariants(build_standard_cm(p)); }

// det(V~ + E/2) computed directly from the transposed matrix.
long double direct_separability(const CovarianceMatrix& v) {
  return oracle::lu_det(oracle::index_swap_transpose(v.entries()) + basis::E() * 0.5);
}

TEST(Coordinates, TmtssClosedForm) {
  const StandardFormParams p = tmtss({2.5, 1.7, 0.3});
  const long double n2 = p.n1 * p.n1, m2 = p.mc * p.mc, a = n2 - 0.25L;
  const MinkowskiCoords c = coordinates(inv_of(p));
  EXPECT_NEAR(c.dt2, n2 * std::pow(a - m2, 2) / a, 1e-10L * c.dt2);
  EXPECT_NEAR(c.dy2_tilde, std::pow(a + m2, 2) / (4 * a), 1e-10L * c.dy2_tilde);
  EXPECT_NEAR(c.dx2, 0.0L, 1e-9L);
}

TEST(Coordinates, ThermalProductConesCoincide) {
  const MinkowskiCoords c = coordinates(inv_of(thermal_product(1.0, 1.0)));
  EXPECT_NEAR(c.dx2, 0.0L, 1e-12L);
  EXPECT_EQ(c.dy2, c.dy2_tilde);
}

TEST(Coordinates, Tmsv) {
  const StandardFormParams p = tmsv(1.0);
  const MinkowskiCoords c = coordinates(inv_of(p));
  EXPECT_NEAR(c.dt2, 0.0L, 1e-9L);
  EXPECT_NEAR(c.dy2, 0.0L, 1e-9L);
  EXPECT_NEAR(c.dy2_tilde, p.mc * p.mc, 1e-9);
  EXPECT_NEAR(c.dy2_tilde, std::pow(std::sinh(2.0), 2) / 4, 1e-9);
}

TEST(Coordinates, SingularAtVacuum) {
  const LocalInvariants vac = inv_of({});
  EXPECT_THROW(coordinates(vac), CoordinateSingularity);
  EXPECT_FALSE(try_coordinates(vac));
  EXPECT_THROW(coordinates({0.25L + 1e-12L, 1, 0, 0}), CoordinateSingularity);
  EXPECT_THROW(coordinates({1, 0, 0, 0}), CoordinateSingularity);
}

TEST(Coordinates, ReproduceIntervalsOnConjugatedStates) {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const LocalInvariants inv = local_invariants(random_physical_state(rng));
    const auto c = try_coordinates(inv);
    ASSERT_TRUE(c);
    const long double scale =
        std::max({1.0L, std::abs(c->dt2), std::abs(c->dx2), std::abs(c->dy2), c->dy2_tilde});
    EXPECT_NEAR(c->dt2 - c->dx2 - c->dy2, interval_physical(inv), 1e-9L * scale);
    EXPECT_NEAR(c->dt2 - c->dx2 - c->dy2_tilde, interval_separability(inv), 1e-9L * scale);
  }
}

TEST(IntervalPhysical, Examples) {
  EXPECT_EQ(interval_physical(inv_of({})), 0.0L);
  EXPECT_NEAR(interval_physical(inv_of(thermal_product(1.0, 1.0))), 4.0L, 1e-13L);
  for (double r = 0; r <= 3.0; r += 0.5) {
    EXPECT_NEAR(interval_physical(inv_of(tmsv(r))), 0.0L, 1e-9L) << "r " << r;
  }
}

TEST(IntervalPhysical, IsDeterminantOfShiftedMatrix) {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const CovarianceMatrix v = random_physical_state(rng);
    const long double ref = oracle::lu_det(v.entries() + basis::E() * 0.5);
    EXPECT_NEAR(interval_physical(local_invariants(v)), ref,
                1e-9L * std::max(1.0L, std::abs(ref)));
    EXPECT_GE(interval_physical(local_invariants(v)), -1e-9L);
  }
}

TEST(IntervalSeparability, Examples) {
  EXPECT_EQ(interval_separability(inv_of({})), 0.0L);
  EXPECT_NEAR(interval_separability(inv_of(tmsv(1.0))), -3.2886L, 1e-4L);
  EXPECT_NEAR(interval_separability(inv_of(tmsv(1.0))),
              direct_separability(build_standard_cm(tmsv(1.0))), 1e-10L);
  EXPECT_NEAR(interval_separability(inv_of(thermal_product(1.0, 1.0))), 4.0L, 1e-13L);
}

TEST(IntervalSeparability, ProductOfTransposedSpectrum) {
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    const CovarianceMatrix v = random_physical_state(rng);
    const auto [p, m] = oracle::symplectic_pair(partial_transpose(v).entries());
    const long double ref = (static_cast<long double>(p) * p - 0.25L) * (m * m - 0.25L);
    EXPECT_NEAR(interval_separability(local_invariants(v)), ref,
                1e-7L * std::max(1.0L, std::abs(ref)));
  }
}

TEST(Intervals, BundlesBoth) {
  const LocalInvariants inv = inv_of(tmtss({2.5, 3, 0.5}));
  const Intervals iv = intervals(inv);
  EXPECT_EQ(iv.ds2, interval_physical(inv));
  EXPECT_EQ(iv.ds2_tilde, interval_separability(inv));
}

TEST(TmtssSeparatrix, Examples) {
  EXPECT_EQ(tmtss_separatrix(0.5), std::make_pair(-0.0, 0.0));
  const auto [lo, hi] = tmtss_separatrix(1.0);
  EXPECT_DOUBLE_EQ(lo, -0.5);
  EXPECT_DOUBLE_EQ(hi, 0.5);
  EXPECT_THROW(tmtss_separatrix(0.4), std::domain_error);
}

TEST(TmtssSeparatrix, IntervalVanishesOnBoundary) {
  for (double n = 0.5; n <= 20; n += 0.37) {
    const auto [lo, hi] = tmtss_separatrix(n);
    for (double mc : {lo, hi}) {
      EXPECT_NEAR(interval_separability(inv_of({n, n, 0, mc})), 0.0L, 1e-10L)
          << "n " << n << " mc " << mc;
    }
  }
}

TEST(FiberSeparatrixResidual, Examples) {
  EXPECT_EQ(fiber_separatrix_residual(0.5, 0.5, 0), 0.0);
  EXPECT_EQ(fiber_separatrix_residual(1, 1, 0.5), 0.0);
  EXPECT_GT(fiber_separatrix_residual(1, 1, 0.3), 0.1);
}

TEST(FiberSeparatrixResidual, ZeroImpliesBoundaryInterval) {
  // Put the fiber output on the (-,-) branch by construction.
  for (double n1 = 0.6; n1 < 5; n1 += 0.7) {
    for (double n2 = 0.55; n2 < 5; n2 += 0.9) {
      const double mc = -std::sqrt((n1 - 0.5) * (n2 - 0.5));
      EXPECT_LE(fiber_separatrix_residual(n1, n2, mc), 1e-12);
      EXPECT_LE(std::abs(interval_separability(inv_of({n1, n2, 0, mc}))), 1e-9L);
    }
  }
}

}  // namespace
