#include <cmath>

#include <gtest/gtest.h>

#include "cvmink/cvmink.hpp"
#include "oracles.hpp"

using namespace cvmink;

namespace {

const StandardFormParams kVacuum{};
const StandardFormParams kThermal1 = thermal_product(1.0, 1.0);

double sinh2_sq_over_4(double r) { return std::pow(std::sinh(2 * r), 2) / 4; }

TEST(CovarianceMatrix, DefaultIsVacuum) {
  const CovarianceMatrix v;
  EXPECT_TRUE(v.entries().isApprox(Matrix4c::Identity() * 0.5));
  EXPECT_EQ(v, build_standard_cm(kVacuum));
}

TEST(CovarianceMatrix, RejectsNonHermitian) {
  Matrix4c m = Matrix4c::Identity();
  m(0, 2) = 0.3;
  EXPECT_THROW(CovarianceMatrix{m}, NonHermitianInput);
  m(2, 0) = 0.3;
  EXPECT_NO_THROW(CovarianceMatrix{m});
}

TEST(CovarianceMatrix, SmallAsymmetryIsSymmetrized) {
  Matrix4c m = Matrix4c::Identity();
  m(0, 1) = Complex(0.2, 1e-14);
  m(1, 0) = 0.2;
  const CovarianceMatrix v(m);
  EXPECT_EQ(v(0, 1), std::conj(v(1, 0)));
}

TEST(BuildStandardCm, PlacesBlocks) {
  const CovarianceMatrix v = build_standard_cm({1, 1, 0.3, 0.4});
  EXPECT_TRUE(v.v1().isApprox(Matrix2c::Identity()));
  EXPECT_TRUE(v.v2().isApprox(Matrix2c::Identity()));
  Matrix2c c;
  c << 0.3, 0.4, 0.4, 0.3;
  EXPECT_TRUE(v.c().isApprox(c));
  EXPECT_TRUE(v.is_real());
}

TEST(BuildStandardCm, RoundTripsThroughStandardForm) {
  const StandardFormParams p{1.2, 0.8, -0.1, 0.5};
  const auto back = as_standard_form(build_standard_cm(p));
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, p);
  Rng rng(3);
  EXPECT_FALSE(as_standard_form(apply_local(build_standard_cm(p), random_local_symplectic(rng))));
}

TEST(LocalInvariants, Vacuum) {
  const LocalInvariants inv = local_invariants(CovarianceMatrix{});
  EXPECT_DOUBLE_EQ(inv.i1, 0.25);
  EXPECT_DOUBLE_EQ(inv.i2, 0.25);
  EXPECT_DOUBLE_EQ(inv.i3, 0.0);
  EXPECT_DOUBLE_EQ(inv.i4, 0.0);
}

TEST(LocalInvariants, I4MatchesExplicitProduct) {
  const CovarianceMatrix v = build_standard_cm({1, 1, 0.3, 0.4});
  EXPECT_NEAR(local_invariants(v).i4, 0.5L, 1e-15L);
  EXPECT_NEAR(oracle::invariants(v.entries()).i4, 0.5L, 1e-15L);
}

TEST(LocalInvariants, AgreeWithOracleOnRandomStates) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const CovarianceMatrix v = random_physical_state(rng);
    const LocalInvariants inv = local_invariants(v);
    const oracle::Invariants ref = oracle::invariants(v.entries());
    const long double s = std::max(1.0L, std::abs(ref.i4));
    EXPECT_NEAR(inv.i1, ref.i1, 1e-12L * std::max(1.0L, ref.i1));
    EXPECT_NEAR(inv.i2, ref.i2, 1e-12L * std::max(1.0L, ref.i2));
    EXPECT_NEAR(inv.i3, ref.i3, 1e-12L * std::max(1.0L, std::abs(ref.i3)));
    EXPECT_NEAR(inv.i4, ref.i4, 1e-12L * s);
  }
}

TEST(LocalInvariants, TmsvI3) {
  for (double r : {0.3, 1.0, 2.0}) {
    EXPECT_NEAR(local_invariants(build_standard_cm(tmsv(r))).i3, -sinh2_sq_over_4(r),
                1e-12 * sinh2_sq_over_4(r));
  }
}

TEST(PartialTranspose, VacuumFixed) {
  EXPECT_EQ(partial_transpose(CovarianceMatrix{}), CovarianceMatrix{});
}

TEST(PartialTranspose, MatchesIndexSwap) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const CovarianceMatrix v = random_physical_state(rng);
    EXPECT_TRUE(partial_transpose(v).entries().isApprox(oracle::index_swap_transpose(v.entries()),
                                                        1e-15));
  }
}

TEST(PartialTranspose, TmsvI3FlipsSign) {
  const CovarianceMatrix vt = partial_transpose(build_standard_cm(tmsv(1.0)));
  EXPECT_NEAR(oracle::invariants(vt.entries()).i3, 3.2886, 1e-4);
  EXPECT_NEAR(local_invariants(vt).i3, sinh2_sq_over_4(1.0), 1e-12);
}

TEST(PartialTranspose, InvariantOverloadMatchesMatrixOverload) {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const CovarianceMatrix v = random_physical_state(rng);
    const LocalInvariants a = partial_transpose(local_invariants(v));
    const LocalInvariants b = local_invariants(partial_transpose(v));
    EXPECT_NEAR(a.i3, b.i3, 1e-10L * std::max(1.0L, std::abs(b.i3)));
    EXPECT_NEAR(a.i4, b.i4, 1e-10L * std::max(1.0L, std::abs(b.i4)));
  }
}

TEST(SymplecticEigenvalues, Vacuum) {
  const SymplecticPair nu = symplectic_eigenvalues(local_invariants(CovarianceMatrix{}));
  EXPECT_NEAR(nu.n_plus, 0.5L, 1e-12L);
  EXPECT_NEAR(nu.n_minus, 0.5L, 1e-12L);
}

TEST(SymplecticEigenvalues, TransposedTmsv) {
  for (double r : {0.25, 1.0, 2.5}) {
    const StandardFormParams p = tmsv(r);
    const SymplecticPair nu =
        symplectic_eigenvalues(partial_transpose(local_invariants(build_standard_cm(p))));
    EXPECT_NEAR(nu.n_minus, std::exp(-2 * r) / 2, 1e-12);
    EXPECT_NEAR(nu.n_plus, p.n1 + std::abs(p.mc), 1e-9 * p.n1);
  }
}

TEST(SymplecticEigenvalues, ThermalProduct) {
  const SymplecticPair nu = symplectic_eigenvalues(local_invariants(build_standard_cm(kThermal1)));
  EXPECT_NEAR(nu.n_plus, 1.5L, 1e-12L);
  EXPECT_NEAR(nu.n_minus, 1.5L, 1e-12L);
}

TEST(SymplecticEigenvalues, MatchEigenvaluesOfEV) {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const CovarianceMatrix v = random_physical_state(rng);
    const auto [plus, minus] = oracle::symplectic_pair(v.entries());
    const SymplecticPair nu = symplectic_spectrum(v);
    EXPECT_NEAR(nu.n_plus, plus, 1e-8 * plus);
    EXPECT_NEAR(nu.n_minus, minus, 1e-8 * plus);
    const SymplecticPair via_inv = symplectic_eigenvalues(local_invariants(v));
    EXPECT_NEAR(via_inv.n_plus, plus, 1e-6 * plus);
  }
}

TEST(SymplecticEigenvalues, NegativeDiscriminantThrows) {
  EXPECT_THROW(symplectic_eigenvalues({1.0L, 1.0L, 0.0L, -1.0L}), NegativeDiscriminant);
}

TEST(SymplecticSpectrum, RejectsIndefinite) {
  EXPECT_THROW(symplectic_spectrum(build_standard_cm({0.5, 0.5, 1.0, 0.0})), UnphysicalState);
}

TEST(DetViaInvariants, ClosedForms) {
  EXPECT_NEAR(det_via_invariants(local_invariants(CovarianceMatrix{})), 1.0L / 16, 1e-15L);
  EXPECT_NEAR(det_via_invariants(local_invariants(build_standard_cm(kThermal1))), 81.0L / 16,
              1e-14L);
  for (double r : {0.5, 1.5, 3.0}) {
    const CovarianceMatrix v = build_standard_cm(tmsv(r));
    EXPECT_NEAR(det_via_invariants(local_invariants(v)), 1.0L / 16, 1e-10L);
    EXPECT_NEAR(oracle::lu_det(v.entries()), 1.0L / 16, 1e-9L);
  }
}

TEST(DetViaInvariants, MatchesLuDeterminant) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const CovarianceMatrix v = random_physical_state(rng);
    const long double ref = oracle::lu_det(v.entries());
    EXPECT_NEAR(det_via_invariants(local_invariants(v)), ref,
                1e-10L * std::max(1.0L, std::abs(ref)));
  }
}

TEST(Seralian, ClosedForms) {
  EXPECT_NEAR(seralian(local_invariants(CovarianceMatrix{})), 0.5L, 1e-15L);
  EXPECT_NEAR(seralian(local_invariants(build_standard_cm(tmsv(1.3)))), 0.5L, 1e-10L);
  EXPECT_NEAR(seralian(local_invariants(build_standard_cm(kThermal1))), 4.5L, 1e-14L);
}

TEST(Purity, ClosedForms) {
  EXPECT_DOUBLE_EQ(purity(CovarianceMatrix{}), 1.0);
  EXPECT_NEAR(purity(build_standard_cm(tmsv(2.0))), 1.0, 1e-9);
  EXPECT_NEAR(purity(build_standard_cm(kThermal1)), 1.0 / 9, 1e-15);
  const double single = 1.0 / (2 * 0.3 + 1);
  EXPECT_NEAR(purity(build_standard_cm(thermal_product(0.3, 0.7))),
              single / (2 * 0.7 + 1), 1e-15);
}

TEST(Purity, UnphysicalDeterminantThrows) {
  EXPECT_THROW(purity(LocalInvariants{0.01L, 0.01L, 0, 0}), UnphysicalState);
}

TEST(ClassifyPhysical, Examples) {
  const Classification vac = classify_physical(CovarianceMatrix{});
  EXPECT_EQ(vac.kind, StateKind::kBoundary);
  EXPECT_DOUBLE_EQ(vac.detail, 0.0);
  EXPECT_EQ(classify_physical(build_standard_cm({0.4, 0.4, 0, 0})).kind, StateKind::kUnphysical);
  EXPECT_EQ(classify_physical(build_standard_cm(kThermal1)).kind, StateKind::kPhysical);
  EXPECT_EQ(classify_physical(build_standard_cm(tmsv(1.0))).kind, StateKind::kBoundary);
}

TEST(ClassifyPhysical, TmtssGridIsPhysical) {
  for (double d : {0.0, 0.1, 1.0, 2.5, 5.0})
    for (double r = 0; r <= 3.0; r += 0.25)
      for (double nbar : {0.0, 0.5, 1.5}) {
        const CovarianceMatrix v = build_standard_cm(tmtss({d, r, nbar}));
        EXPECT_NE(classify_physical(v).kind, StateKind::kUnphysical)
            << "d " << d << " r " << r << " nbar " << nbar;
        EXPECT_GE(oracle::symplectic_pair(v.entries()).second, 0.5 - 1e-9);
      }
}

TEST(PhysicalityCriteria, AgreeOnUnphysicalCorrelations) {
  // Correlations too strong for the local noise.
  const PhysicalityCheck chk = physicality_criteria(build_standard_cm({1.0, 1.0, 0.0, 0.95}));
  EXPECT_FALSE(chk.schur_skipped);
  EXPECT_FALSE(chk.schur_ok);
  EXPECT_FALSE(chk.symplectic_ok);
  EXPECT_LT(chk.min_symplectic, 0.5);
}

TEST(ClassifySeparable, Examples) {
  const Classification vac = classify_separable(CovarianceMatrix{});
  EXPECT_TRUE(vac.kind == StateKind::kBoundary || vac.kind == StateKind::kSeparable);

  const Classification sq = classify_separable(build_standard_cm(tmsv(1.0)));
  EXPECT_EQ(sq.kind, StateKind::kEntangled);
  EXPECT_NEAR(sq.detail, -3.2886, 1e-4);
  EXPECT_NEAR(sq.detail, -sinh2_sq_over_4(1.0), 1e-9);

  const Classification th = classify_separable(build_standard_cm(kThermal1));
  EXPECT_EQ(th.kind, StateKind::kSeparable);
  EXPECT_NEAR(th.detail, 4.0, 1e-12);
}

TEST(ClassifySeparable, UnphysicalThrows) {
  EXPECT_THROW(classify_separable(build_standard_cm({0.4, 0.4, 0, 0})), UnphysicalState);
}

TEST(ClassifySeparable, AgreesWithTransposedSpectrum) {
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const CovarianceMatrix v = random_physical_state(rng);
    const StateKind k = classify_separable(v).kind;
    if (k == StateKind::kBoundary) continue;
    const double nm = oracle::symplectic_pair(partial_transpose(v).entries()).second;
    EXPECT_EQ(k == StateKind::kEntangled, nm < 0.5);
  }
}

TEST(StateKind, StringRoundTrip) {
  for (StateKind k : {StateKind::kUnphysical, StateKind::kPhysical, StateKind::kSeparable,
                      StateKind::kEntangled, StateKind::kBoundary}) {
    EXPECT_EQ(state_kind_from_string(to_string(k)), k);
  }
  EXPECT_FALSE(state_kind_from_string("entangled"));
}

}  // namespace
