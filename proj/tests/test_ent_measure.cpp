#include <gtest/gtest.h>

#include <entkit/ent_measure.hpp>
#include <entkit/errors.hpp>
#include <entkit/param_states.hpp>
#include <entkit/tgx_construct.hpp>

#include <algorithm>
#include <cmath>
#include <thread>

#include "reference_data.hpp"
#include "test_util.hpp"

using namespace entkit;

namespace {

StateVector bell() { return state_from_levels(ModeStructure({2, 2}), {1, 4}); }

StateVector random_product(const ModeStructure& s, std::mt19937_64& rng) {
  CVec v = CVec::Ones(1);
  for (int nm : s.modes()) v = kron(v, random_pure_state(ModeStructure({nm}), rng).amplitudes());
  return StateVector::normalized(s, v);
}

CVec apply_random_locals(const ModeStructure& s, const CVec& psi, std::mt19937_64& rng) {
  CMat u = CMat::Identity(1, 1);
  for (int nm : s.modes()) u = kron(u, random_unitary(nm, rng));
  return u * psi;
}

}  // namespace

TEST(MinimumPhysicalPurity, PublishedValues) {
  EXPECT_NEAR(p_mp(4, 2), 0.5, 1e-15);
  EXPECT_NEAR(p_mp(4, 3), 3.0 / 8.0, 1e-15);
  EXPECT_NEAR(p_mp(6, 4), 5.0 / 18.0, 1e-15);
  EXPECT_EQ(p_mp_exact(6, 4), Rational(5, 18));
}

TEST(MinimumPhysicalPurity, MatchesBruteForceOccupations) {
  for (int L = 2; L <= 14; ++L) {
    for (int nm = 2; nm <= 7; ++nm) {
      const oracle::Fraction f = oracle::min_purity_bruteforce(L, nm);
      EXPECT_EQ(p_mp_exact(L, nm), Rational(f.num, f.den)) << "L=" << L << " n_m=" << nm;
      EXPECT_NEAR(p_mp(L, nm), f.value(), 1e-15);
    }
  }
}

TEST(Normalization, WorkedValuesFor223) {
  const ModeStructure s({2, 2, 3});
  for (std::size_t i = 0; i < entkit_test::kWalkOneMinusM.size(); ++i) {
    const int L = static_cast<int>(i) + 2;
    const auto [num, den] = entkit_test::kWalkOneMinusM[i];
    EXPECT_EQ(one_minus_M_exact(L, s), Rational(num, den));
    EXPECT_NEAR(1.0 - normalization_M(L, s), static_cast<double>(num) / den, 1e-12);
  }
  EXPECT_THROW(normalization_M(1, s), std::invalid_argument);
  EXPECT_THROW(normalization_M(4, ModeStructure({2, 3})), std::invalid_argument);
}

TEST(LstarSet, PublishedTable) {
  for (const auto& row : entkit_test::kLstarTable) {
    const ModeStructure s = ModeStructure::parse(row.modes);
    EXPECT_EQ(lstar_set(s), row.lstars) << row.modes;
    EXPECT_EQ(lstar_set_exact(s), row.lstars) << row.modes;
  }
}

TEST(LstarSet, MatchesBruteForceOracle) {
  for (const auto& row : entkit_test::kLstarTable) {
    const ModeStructure s = ModeStructure::parse(row.modes);
    if (s.n() > 20) continue;
    EXPECT_EQ(lstar_set(s), oracle::lstar_set(s.modes())) << row.modes;
  }
}

TEST(LstarSet, SingleModeRejected) {
  EXPECT_THROW(lstar_set(ModeStructure({4})), UnsupportedStructure);
  EXPECT_THROW(ent(StateVector::basis(ModeStructure({4}), 1)), UnsupportedStructure);
}

TEST(EntContext, NormalizationIndependentOfRepresentative) {
  for (const auto& row : entkit_test::kLstarTable) {
    const ModeStructure s = ModeStructure::parse(row.modes);
    const double M0 = make_ent_context(s).M;
    for (int L : row.lstars) EXPECT_NEAR(make_ent_context(s, L).M, M0, 1e-12) << row.modes << " L=" << L;
  }
  EXPECT_EQ(make_ent_context(ModeStructure({2, 2, 2})).lstar, 2);
  EXPECT_THROW(make_ent_context(ModeStructure({2, 2, 2}), 3), std::invalid_argument);
}

TEST(EntContext, RepresentativeDoesNotChangeEnt) {
  const ModeStructure s({3, 3, 3});
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const StateVector psi = random_pure_state(s, rng);
    const double base = ent(psi).ent;
    for (int L : {6, 9}) EXPECT_NEAR(ent(psi, make_ent_context(s, L)).ent, base, 1e-12);
  }
}

TEST(EntContext, MemoIsSharedAcrossThreads) {
  const ModeStructure s({2, 3, 3});
  std::vector<const EntContext*> seen(4, nullptr);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) pool.emplace_back([&, t] { seen[t] = &ent_context(s); });
  for (auto& th : pool) th.join();
  for (const auto* p : seen) EXPECT_EQ(p, seen.front());
  EXPECT_EQ(seen.front()->lstar, 6);
}

TEST(Ent, BellAndBasisStates) {
  EXPECT_NEAR(ent(bell()).ent, 1.0, EPS_MATCH);
  const ModeStructure s({2, 3, 4});
  for (int v = 1; v <= s.n(); ++v) EXPECT_NEAR(ent(StateVector::basis(s, v)).ent, 0.0, 1e-14);
}

TEST(Ent, TwoQubitThetaFamilyIsSinSquared) {
  const ThetaFamily fam{ModeStructure({2, 2}), {1, 4}};
  for (int i = 0; i <= 20; ++i) {
    const double th = fam.theta_max() * i / 20.0;
    EXPECT_NEAR(ent(theta_state(fam, th)).ent, std::pow(std::sin(2 * th), 2), 1e-12);
  }
}

TEST(Ent, ReductionPuritiesOfCanonical234State) {
  const ModeStructure s({2, 3, 4});
  const EntReport r = ent(state_from_levels(s, {1, 6, 11, 14, 17, 24}));
  ASSERT_EQ(r.reduction_purities.size(), 3u);
  EXPECT_NEAR(r.reduction_purities[0], 1.0 / 2.0, 1e-10);
  EXPECT_NEAR(r.reduction_purities[1], 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(r.reduction_purities[2], 5.0 / 18.0, 1e-10);
  EXPECT_NEAR(r.ent, 1.0, EPS_MATCH);
}

TEST(Ent, MatchesNaiveOracle) {
  std::mt19937_64 rng(22);
  for (const char* m : {"2x2", "2x3", "2x2x2", "3x3", "2x2x3", "2x3x3"}) {
    const ModeStructure s = ModeStructure::parse(m);
    for (int i = 0; i < 5; ++i) {
      const StateVector psi = random_pure_state(s, rng);
      EXPECT_NEAR(ent(psi).ent, oracle::ent(entkit_test::to_amps(psi.amplitudes()), s.modes()), 1e-12) << m;
    }
  }
}

TEST(Ent, UnitizedPuritiesInRange) {
  std::mt19937_64 rng(23);
  const ModeStructure s({2, 3, 4});
  for (int i = 0; i < 50; ++i) {
    const EntReport r = ent(random_pure_state(s, rng));
    for (std::size_t m = 0; m < r.unitized_purities.size(); ++m) {
      EXPECT_GE(r.unitized_purities[m], -EPS_MATCH);
      EXPECT_LE(r.unitized_purities[m], 1.0 + EPS_MATCH);
      EXPECT_NEAR(r.unitized_purities[m], unitized_purity(r.reduction_purities[m], s.modes()[m]), 1e-15);
    }
  }
}

TEST(EntProperty, BoundedOnHaarStates) {
  std::mt19937_64 rng(24);
  for (const auto& m : entkit_test::kSmallStructures) {
    const ModeStructure s = ModeStructure::parse(m);
    for (int i = 0; i < 200; ++i) {
      const double e = ent(random_pure_state(s, rng)).ent;
      EXPECT_GE(e, 0.0) << m;
      EXPECT_LE(e, 1.0 + 1e-9) << m;
    }
  }
}

TEST(EntProperty, LocalUnitaryInvariance) {
  std::mt19937_64 rng(25);
  for (const char* m : {"2x2", "2x3x4", "3x3", "2x2x2x2", "2x2x3"}) {
    const ModeStructure s = ModeStructure::parse(m);
    for (int i = 0; i < 40; ++i) {
      const StateVector psi = random_pure_state(s, rng);
      const StateVector moved(s, apply_random_locals(s, psi.amplitudes(), rng));
      EXPECT_NEAR(ent(moved).ent, ent(psi).ent, 1e-9) << m;
    }
  }
}

TEST(EntProperty, ZeroExactlyOnProducts) {
  std::mt19937_64 rng(26);
  for (const char* m : {"2x2", "2x3x4", "2x2x2x2", "3x5"}) {
    const ModeStructure s = ModeStructure::parse(m);
    for (int i = 0; i < 30; ++i) EXPECT_LT(ent(random_product(s, rng)).ent, 1e-9) << m;
    for (int i = 0; i < 30; ++i) {
      const EntReport r = ent(random_pure_state(s, rng));
      const bool mixed = std::any_of(r.reduction_purities.begin(), r.reduction_purities.end(),
                                     [](double p) { return p < 1.0 - 1e-6; });
      if (mixed) EXPECT_GT(r.ent, 0.0);
    }
  }
}

TEST(EntProperty, PerModeAuxiliaryIsConcave) {
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int nm : {2, 3, 4, 5}) {
    const ModeStructure s({nm});
    auto g = [nm](const CMat& rho) {
      const double p = (rho * rho).trace().real();
      return 1.0 - unitized_purity(p, nm);
    };
    for (int i = 0; i < 100; ++i) {
      const CMat a = entkit_test::random_mixed(s, 1 + i % 3, rng).entries();
      const CMat b = entkit_test::random_mixed(s, 1 + (i + 1) % 3, rng).entries();
      const double p = unit(rng);
      EXPECT_GE(g(p * a + (1 - p) * b), p * g(a) + (1 - p) * g(b) - 1e-9);
    }
  }
}

TEST(AlternativeEnt, ExtremesAndOrdering) {
  const ModeStructure s({2, 2, 3});
  EXPECT_NEAR(alternative_ent(state_from_levels(s, {1, 5, 8, 12})), 1.0, 1e-9);
  EXPECT_NEAR(alternative_ent(StateVector::basis(s, 7)), 0.0, 1e-12);

  std::mt19937_64 rng(28);
  int compared = 0, agreed = 0;
  for (int i = 0; i < 1000; ++i) {
    const StateVector a = random_pure_state(s, rng);
    const StateVector b = random_pure_state(s, rng);
    const double ea = ent(a).ent, eb = ent(b).ent;
    if (std::abs(ea - eb) <= 1e-6) continue;
    ++compared;
    if ((ea < eb) == (alternative_ent(a) < alternative_ent(b))) ++agreed;
  }
  ASSERT_GT(compared, 900);
  EXPECT_GE(static_cast<double>(agreed) / compared, 0.99);
}

TEST(SqueezedVacuum, ClosedForm) {
  EXPECT_EQ(ent_two_mode_squeezed(0.0), 0.0);
  EXPECT_NEAR(ent_two_mode_squeezed(40.0), 1.0, 1e-15);
  EXPECT_NEAR(ent_two_mode_squeezed(3.0), 1.0 - 1.0 / (2 * std::pow(std::cosh(3.0), 2) - 1), 1e-15);
  EXPECT_THROW(ent_two_mode_squeezed(-0.1), std::invalid_argument);
}

TEST(SqueezedVacuum, TruncatedFockSumConverges) {
  EXPECT_NEAR(squeezed_reduction_purity_truncated(1.0), 1.0 / (2 * std::pow(std::cosh(1.0), 2) - 1), 1e-8);
  for (double r : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    EXPECT_NEAR(squeezed_reduction_purity_truncated(r), squeezed_reduction_purity(r), 1e-8) << r;
  }
  // cutoff 200 is too short for r = 3; a longer sum converges
  EXPECT_NEAR(squeezed_reduction_purity_truncated(3.0, 800), squeezed_reduction_purity(3.0), 1e-8);
}

TEST(LognegGauge, PublishedTarget) {
  const LognegGauge g = logneg_gauge(0.999);
  EXPECT_NEAR(g.r_star, 3.80, 0.01);
  EXPECT_NEAR(g.log_negativity, 11.0, 0.1);
  const LognegGauge z = logneg_gauge(0.0);
  EXPECT_NEAR(z.r_star, 0.0, 1e-12);
  EXPECT_NEAR(z.log_negativity, 0.0, 1e-12);
  EXPECT_THROW(logneg_gauge(1.0), std::invalid_argument);
}

TEST(LognegGauge, RoundTrip) {
  for (int i = 0; i < 100; ++i) {
    const double target = 0.99 * i / 99.0;
    EXPECT_NEAR(ent_two_mode_squeezed(logneg_gauge(target).r_star), target, 1e-10);
  }
}
