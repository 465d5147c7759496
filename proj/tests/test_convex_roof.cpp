#include <gtest/gtest.h>

#include <entkit/convex_roof.hpp>
#include <entkit/ent_measure.hpp>
#include <entkit/errors.hpp>
#include <entkit/multi_ent.hpp>
#include <entkit/tgx_construct.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>

#include "golden.hpp"
#include "roof_checks.hpp"
#include "test_util.hpp"

using namespace entkit;
using entkit_test::max_abs;

namespace {

const PureMeasure kEnt = [](const StateVector& w) { return ent(w).ent; };

CMat reconstruct(const Decomposition& d) {
  const int n = d.members.front().dim();
  CMat out = CMat::Zero(n, n);
  for (std::size_t j = 0; j < d.members.size(); ++j)
    out += d.p[j] * d.members[j].amplitudes() * d.members[j].amplitudes().adjoint();
  return out;
}

DensityMatrix mixture(const ModeStructure& s, const CVec& a, const CVec& b, double p) {
  CMat rho = p * a * a.adjoint() + (1 - p) * b * b.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(s, rho);
}

CVec random_product(const ModeStructure& s, std::mt19937_64& rng) {
  CVec v = CVec::Ones(1);
  for (int nm : s.modes()) v = kron(v, random_pure_state(ModeStructure({nm}), rng).amplitudes());
  return v;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8f", x);
  return buf;
}

}  // namespace

TEST(Eigensystem, DescendingAndRanked) {
  std::mt19937_64 rng(71);
  const DensityMatrix rho = entkit_test::random_mixed(ModeStructure({2, 3}), 3, rng);
  const Eigensystem e = ranked_eigensystem(rho);
  EXPECT_EQ(e.rank(), 3);
  EXPECT_EQ(numerical_rank(rho), 3);
  for (int k = 1; k < e.rank(); ++k) EXPECT_GE(e.values(k - 1), e.values(k));
  EXPECT_NEAR(e.values.sum(), 1.0, 1e-12);
}

TEST(Decompose, IdentityGivesEigendecomposition) {
  std::mt19937_64 rng(72);
  const DensityMatrix rho = entkit_test::random_mixed(ModeStructure({2, 2}), 2, rng);
  const Eigensystem e = ranked_eigensystem(rho);
  const Decomposition d = decompose(rho, CMat::Identity(2, 2));
  ASSERT_EQ(d.members.size(), 2u);
  for (int k = 0; k < 2; ++k) {
    EXPECT_NEAR(d.p[k], e.values(k), 1e-12);
    EXPECT_TRUE(equal_up_to_phase(d.members[k].amplitudes(), e.vectors.col(k)));
  }
}

TEST(Decompose, ReconstructsRandomStates) {
  std::mt19937_64 rng(73);
  const ModeStructure s({2, 3});
  for (int i = 0; i < 100; ++i) {
    const int terms = 1 + i % 4;
    const DensityMatrix rho = entkit_test::random_mixed(s, terms, rng);
    const int D = numerical_rank(rho) + (i % 2);
    const Decomposition d = decompose(rho, random_unitary(D, rng));
    double total = 0.0;
    for (double p : d.p) {
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
    EXPECT_LT(max_abs(reconstruct(d) - rho.entries()), 1e-9);
  }
}

TEST(Decompose, EqualWeightsAtQuarterTurn) {
  const ModeStructure s({2, 2});
  const DensityMatrix rho =
      mixture(s, StateVector::basis(s, 1).amplitudes(), StateVector::basis(s, 4).amplitudes(), 0.5);
  const Decomposition d = decompose(rho, roof_unitary(std::numbers::pi / 4, 0.0));
  ASSERT_EQ(d.p.size(), 2u);
  EXPECT_NEAR(d.p[0], 0.5, 1e-12);
  EXPECT_NEAR(d.p[1], 0.5, 1e-12);
}

TEST(Decompose, RejectsBadUnitaries) {
  std::mt19937_64 rng(74);
  const DensityMatrix rho = entkit_test::random_mixed(ModeStructure({2, 2}), 2, rng);
  EXPECT_THROW(decompose(rho, CMat::Constant(2, 2, 1.0)), ValidationError);
  EXPECT_THROW(decompose(rho, CMat::Identity(1, 1)), std::invalid_argument);
}

TEST(RoofUnitary, IsUnitary) {
  for (double t : {0.0, 0.3, 1.2})
    for (double c : {0.0, 2.0, 5.5}) EXPECT_TRUE(is_unitary(roof_unitary(t, c), 1e-14));
}

TEST(Roof, RankOneIsPureValue) {
  const StateVector bell = state_from_levels(ModeStructure({2, 2}), {1, 4});
  const RoofResult r = roof_rank2(DensityMatrix::projector(bell), kEnt);
  EXPECT_EQ(r.rank, 1);
  EXPECT_EQ(r.value, ent(bell).ent);

  const StateVector ghz = state_from_levels(ModeStructure({2, 2, 2}), {1, 8});
  EXPECT_EQ(gm_roof(DensityMatrix::projector(ghz)).value, gm_ent(ghz).value);
  EXPECT_NEAR(gm_roof(DensityMatrix::projector(ghz)).value, 1.0, 1e-12);
}

TEST(Roof, ClassicalMixtureIsZero) {
  const ModeStructure s({2, 2});
  const DensityMatrix rho =
      mixture(s, StateVector::basis(s, 1).amplitudes(), StateVector::basis(s, 4).amplitudes(), 0.5);
  EXPECT_NEAR(roof_rank2(rho, kEnt).value, 0.0, 1e-12);
}

TEST(Roof, RejectsHighRank) {
  std::mt19937_64 rng(75);
  EXPECT_THROW(roof_rank2(entkit_test::random_mixed(ModeStructure({2, 2}), 3, rng), kEnt), UnsupportedRank);
}

TEST(Roof, SeparableMixturesAreNearZeroOnFineGrid) {
  std::mt19937_64 rng(76);
  std::uniform_real_distribution<double> pd(0.2, 0.8);
  RoofGrid fine{90, 90, true, 1e-6, 1};
  for (const char* m : {"2x2", "2x3", "2x2x2"}) {
    const ModeStructure s = ModeStructure::parse(m);
    for (int i = 0; i < 3; ++i) {
      const DensityMatrix rho = mixture(s, random_product(s, rng), random_product(s, rng), pd(rng));
      const RoofResult r = roof_rank2(rho, kEnt, fine);
      EXPECT_LE(r.grid_value, 1e-3) << m;
      EXPECT_LE(r.value, 1e-3) << m;
    }
  }
}

TEST(Roof, BoundedByEigendecompositionAndRefinementOnlyLowers) {
  std::mt19937_64 rng(77);
  const ModeStructure s({2, 2, 2});
  for (int i = 0; i < 8; ++i) {
    const DensityMatrix rho = entkit_test::random_mixed(s, 2, rng);
    const Eigensystem e = ranked_eigensystem(rho);
    const double eigen_avg = roof_average(e, s, kEnt, 0.0, 0.0);
    const RoofResult r = roof_rank2(rho, kEnt, RoofGrid{12, 12, true, 1e-6, 1});
    EXPECT_NEAR(r.surface(0, 0), eigen_avg, 1e-12);
    EXPECT_LE(r.grid_value, eigen_avg);
    EXPECT_LE(r.value, r.grid_value);
  }
}

TEST(Roof, ParallelGridMatchesSerial) {
  const DensityMatrix rho = entkit_test::seeded_rank2(ModeStructure({2, 3}), 5);
  const RoofResult a = roof_rank2(rho, kEnt, RoofGrid{15, 15, false, 1e-6, 1});
  const RoofResult b = roof_rank2(rho, kEnt, RoofGrid{15, 15, false, 1e-6, 4});
  EXPECT_EQ(a.surface, b.surface);
  EXPECT_EQ(a.grid_theta_index, b.grid_theta_index);
  EXPECT_EQ(a.grid_chi_index, b.grid_chi_index);
}

TEST(Roof, GridLayout) {
  const DensityMatrix rho = entkit_test::seeded_rank2(ModeStructure({2, 2}), 6);
  const RoofResult r = roof_rank2(rho, kEnt, RoofGrid{30, 30, false, 1e-6, 1});
  ASSERT_EQ(r.thetas.size(), 30u);
  ASSERT_EQ(r.chis.size(), 30u);
  EXPECT_EQ(r.thetas.front(), 0.0);
  EXPECT_NEAR(r.thetas.back(), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(r.chis[1], 2 * std::numbers::pi / 30, 1e-15);
  EXPECT_EQ(r.surface.rows(), 30);
  EXPECT_EQ(r.surface.cols(), 30);
}

TEST(Roof, Seeded223SurfaceGolden) {
  const ModeStructure s({2, 2, 3});
  const DensityMatrix rho = entkit_test::seeded_rank2(s, 2024);
  const RoofResult r = roof_rank2(rho, kEnt);
  EXPECT_GE(r.value, 0.0);
  EXPECT_LE(r.value, r.grid_value);
  std::string out = "structure,seed,grid_min,grid_theta_index,grid_chi_index,refined_min\n";
  out += "2x2x3,2024," + fixed(r.grid_value) + "," + std::to_string(r.grid_theta_index) + "," +
         std::to_string(r.grid_chi_index) + "," + fixed(r.value) + "\n";
  entkit_test::expect_golden("roof_223_seed2024.csv", out);
}

TEST(GmRoof, SharedProductCutGivesZero) {
  const ModeStructure s({2, 2, 2});
  CVec a = CVec::Zero(8), b = CVec::Zero(8);
  // both members are (something on modes 1,2) x |1> on mode 3
  a(indical_register({1, 1, 1}, s) - 1) = a(indical_register({2, 2, 1}, s) - 1) = 1 / std::sqrt(2.0);
  b(indical_register({1, 2, 1}, s) - 1) = b(indical_register({2, 1, 1}, s) - 1) = 1 / std::sqrt(2.0);
  EXPECT_NEAR(gm_roof(mixture(s, a, b, 0.3)).value, 0.0, 1e-12);
}

TEST(GmRoof, ConcurrenceArgminAgreesOnSeededStates) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto agreement = entkit_test::gm_argmin_agreement(entkit_test::seeded_rank2(ModeStructure({2, 2, 2}), seed), 30, 30);
    EXPECT_TRUE(agreement.agrees) << "seed " << seed << ": " << agreement.concurrence_at_gm_argmin << " vs "
                                  << agreement.neighborhood_max;
  }
}
