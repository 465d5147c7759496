// Shared rank-2 convex-roof comparisons used by unit and acceptance tests.
#pragma once

#include <entkit/convex_roof.hpp>
#include <entkit/multi_ent.hpp>

#include <algorithm>
#include <random>

namespace entkit_test {

// p|psi1><psi1| + (1-p)|psi2><psi2| with random pure members and p in [0.2, 0.8].
inline entkit::DensityMatrix seeded_rank2(const entkit::ModeStructure& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const entkit::CVec a = entkit::random_pure_state(s, rng).amplitudes();
  const entkit::CVec b = entkit::random_pure_state(s, rng).amplitudes();
  const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  entkit::CMat rho = p * a * a.adjoint() + (1 - p) * b * b.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return entkit::DensityMatrix(s, rho);
}

struct ArgminAgreement {
  double concurrence_at_gm_argmin = 0.0;
  double concurrence_min = 0.0;
  double neighborhood_max = 0.0;  // largest concurrence average one grid cell around its own argmin
  bool agrees = false;
};

// Compares the GM-ent roof argmin with the GM-concurrence surface on the same
// grid. Agreement means the concurrence average at the GM-ent argmin is no
// larger than the concurrence surface one cell away from its own minimum.
inline ArgminAgreement gm_argmin_agreement(const entkit::DensityMatrix& rho, int n_theta, int n_chi) {
  entkit::RoofGrid grid{n_theta, n_chi, false, 1e-6, 1};
  const entkit::RoofResult gm = entkit::gm_roof(rho, grid);
  const entkit::RoofResult conc =
      entkit::roof_rank2(rho, [](const entkit::StateVector& w) { return entkit::gm_concurrence_pure(w).value; }, grid);
  ArgminAgreement out;
  out.concurrence_at_gm_argmin = conc.surface(gm.grid_theta_index, gm.grid_chi_index);
  out.concurrence_min = conc.grid_value;
  for (int di = -1; di <= 1; ++di) {
    const int i = conc.grid_theta_index + di;
    if (i < 0 || i >= n_theta) continue;
    for (int dj = -1; dj <= 1; ++dj) {
      const int j = (conc.grid_chi_index + dj + n_chi) % n_chi;
      out.neighborhood_max = std::max(out.neighborhood_max, conc.surface(i, j));
    }
  }
  out.agrees = out.concurrence_at_gm_argmin <= out.neighborhood_max + 1e-12;
  return out;
}

}  // namespace entkit_test
