/*
 * Pure-state decompositions of density matrices and brute-force rank-2
 * convex-roof minimization for any pure-state measure.
 */
#pragma once

#include <functional>
#include <vector>

#include "entkit/tensor_core.hpp"

namespace entkit {

inline constexpr double RANK_EPS = 1e-10;
inline constexpr double P_DROP = 1e-12;
inline constexpr int RMAX_ROOF = 2;

struct Eigensystem {
  Eigen::VectorXd values;  // descending, only those above RANK_EPS
  CMat vectors;            // matching columns
  int rank() const { return static_cast<int>(values.size()); }
};

Eigensystem ranked_eigensystem(const DensityMatrix& rho);
int numerical_rank(const DensityMatrix& rho);

struct Decomposition {
  std::vector<double> p;
  std::vector<StateVector> members;
  double dropped_mass = 0.0;
  CMat unitary;
};

// Members |w_j> proportional to sum_k U_jk sqrt(lambda_k) |e_k>.
Decomposition decompose(const DensityMatrix& rho, const CMat& U);
Decomposition decompose(const Eigensystem& eig, const ModeStructure& s, const CMat& U);

CMat roof_unitary(double theta, double chi);

using PureMeasure = std::function<double(const StateVector&)>;

struct RoofGrid {
  int n_theta = 30;
  int n_chi = 30;
  bool refine = true;
  double tolerance = 1e-6;
  int jobs = 1;
};

struct RoofResult {
  double value = 0.0;  // minimum average after refinement
  double theta = 0.0;
  double chi = 0.0;
  double grid_value = 0.0;  // minimum over grid points only
  int grid_theta_index = 0;
  int grid_chi_index = 0;
  int rank = 0;
  std::vector<double> thetas;
  std::vector<double> chis;
  Eigen::MatrixXd surface;  // surface(i, j) at (thetas[i], chis[j])
};

// Average of `measure` over the decomposition given by U(theta, chi).
double roof_average(const Eigensystem& eig, const ModeStructure& s, const PureMeasure& measure, double theta, double chi);

RoofResult roof_rank2(const DensityMatrix& rho, const PureMeasure& measure, const RoofGrid& grid = {});
RoofResult gm_roof(const DensityMatrix& rho, const RoofGrid& grid = {});

}  // namespace entkit
