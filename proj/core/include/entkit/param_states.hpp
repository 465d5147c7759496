/*
 * Parameterized pure states: theta families over level sets, hyperspherical
 * amplitudes, entanglement-preserving unitaries, Schmidt decomposition and
 * its reversal, and the closed-form 2x2x3 nonTGX family.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "entkit/tgx_construct.hpp"

namespace entkit {

std::vector<double> hyperspherical(const std::vector<double>& thetas);

struct ThetaFamily {
  ModeStructure structure;
  LevelSet base_levels;

  double theta_max() const;
};

StateVector theta_state(const ThetaFamily& family, double theta);
StateVector theta_state_multi(const ModeStructure& s, const LevelSet& levels, const std::vector<double>& thetas);

struct EpuSpec {
  std::vector<CMat> locals;
  std::vector<double> diag_phases;

  static EpuSpec identity(const ModeStructure& s);
};

EpuSpec random_epu(const ModeStructure& s, std::mt19937_64& rng);
EpuSpec random_epu(const ModeStructure& s, std::uint64_t seed);
CMat epu_matrix(const EpuSpec& spec);
StateVector apply_epu(const EpuSpec& spec, const StateVector& psi);
// (U1 x ... x UN) applied to psi without the diagonal phase factor.
CVec apply_local_unitaries(const std::vector<CMat>& locals, const ModeStructure& s, const CVec& psi);

inline constexpr double SCHMIDT_TOL = 1e-9;

struct SchmidtForm {
  Eigen::VectorXd lambda;  // descending
  CMat left;               // columns |u_l>
  CMat right;              // columns |v_l>
  bool separable = false;
  bool entangled = false;
  bool maximally_entangled = false;
};

SchmidtForm schmidt(const StateVector& psi);
// Coefficient matrix A = U diag(sigma) V^dagger read as a bipartite state.
StateVector reverse_schmidt(const CMat& U, const Eigen::VectorXd& sigma, const CMat& V);

// Ent of the theta family on {1,5,8,12} in 2x2x3, and its two-branch inverse.
inline constexpr double ENT_223_TRANSITION = 352.0 / 423.0;
double ent_formula_223(double theta);
double theta_of_ent_223(double ent);

// A unitary V with V core = target, built from completed eigenframes.
CMat v_epu(const StateVector& target, const StateVector& core);
CMat complete_frame(const CVec& first, double skip_threshold = 1e-8);

}  // namespace entkit
