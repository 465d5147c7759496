#include "entkit/convex_roof.hpp"

#include <cmath>
#include <numbers>

#include "entkit/errors.hpp"
#include "entkit/multi_ent.hpp"
#include "entkit/parallel.hpp"

namespace entkit {

Eigensystem ranked_eigensystem(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMat> es(rho.entries());
  const Eigen::VectorXd& vals = es.eigenvalues();
  std::vector<int> keep;
  for (int k = static_cast<int>(vals.size()) - 1; k >= 0; --k)
    if (vals(k) > RANK_EPS) keep.push_back(k);
  Eigensystem out;
  out.values.resize(static_cast<int>(keep.size()));
  out.vectors.resize(rho.dim(), static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.values(static_cast<int>(i)) = vals(keep[i]);
    out.vectors.col(static_cast<int>(i)) = es.eigenvectors().col(keep[i]);
  }
  return out;
}

int numerical_rank(const DensityMatrix& rho) { return ranked_eigensystem(rho).rank(); }

Decomposition decompose(const Eigensystem& eig, const ModeStructure& s, const CMat& U) {
  const int R = eig.rank();
  const int D = static_cast<int>(U.rows());
  if (U.cols() != D) throw ValidationError("decomposition unitary must be square");
  if (D < R) throw std::invalid_argument("decomposition unitary smaller than the rank");
  if (!is_unitary(U, 1e-10)) throw ValidationError("decomposition matrix is not unitary");

  Decomposition d;
  d.unitary = U;
  std::vector<CVec> raw;
  std::vector<double> weight;
  for (int j = 0; j < D; ++j) {
    CVec w = CVec::Zero(s.n());
    for (int k = 0; k < R; ++k) w += U(j, k) * std::sqrt(eig.values(k)) * eig.vectors.col(k);
    const double pj = w.squaredNorm();
    if (pj < P_DROP) {
      d.dropped_mass += pj;
      continue;
    }
    raw.push_back(std::move(w));
    weight.push_back(pj);
  }
  double total = 0.0;
  for (double w : weight) total += w;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    d.p.push_back(weight[j] / total);
    d.members.push_back(StateVector::normalized(s, raw[j]));
  }
  return d;
}

Decomposition decompose(const DensityMatrix& rho, const CMat& U) {
  return decompose(ranked_eigensystem(rho), rho.structure(), U);
}

CMat roof_unitary(double theta, double chi) {
  CMat u(2, 2);
  u(0, 0) = std::cos(theta);
  u(0, 1) = std::sin(theta) * std::polar(1.0, chi);
  u(1, 0) = -std::sin(theta) * std::polar(1.0, -chi);
  u(1, 1) = std::cos(theta);
  return u;
}

double roof_average(const Eigensystem& eig, const ModeStructure& s, const PureMeasure& measure, double theta, double chi) {
  const Decomposition d = decompose(eig, s, roof_unitary(theta, chi));
  double acc = 0.0;
  for (std::size_t j = 0; j < d.members.size(); ++j) acc += d.p[j] * measure(d.members[j]);
  return acc;
}

namespace {

template <typename F>
std::pair<double, double> golden_section(F&& f, double a, double b, double tol) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

}  // namespace

RoofResult roof_rank2(const DensityMatrix& rho, const PureMeasure& measure, const RoofGrid& grid) {
  if (grid.n_theta < 1 || grid.n_chi < 1) throw std::invalid_argument("roof grid needs at least one point per axis");
  const Eigensystem eig = ranked_eigensystem(rho);
  const ModeStructure& s = rho.structure();
  RoofResult res;
  res.rank = eig.rank();
  if (res.rank > RMAX_ROOF)
    throw UnsupportedRank("convex roof search supports rank <= " + std::to_string(RMAX_ROOF) + ", got rank " + std::to_string(res.rank));
  if (res.rank == 0) throw DefectError("density matrix has no eigenvalue above the rank cutoff");

  for (int i = 0; i < grid.n_theta; ++i)
    res.thetas.push_back(grid.n_theta == 1 ? 0.0 : (std::numbers::pi / 2) * i / (grid.n_theta - 1));
  for (int j = 0; j < grid.n_chi; ++j) res.chis.push_back(2.0 * std::numbers::pi * j / grid.n_chi);
  res.surface.resize(grid.n_theta, grid.n_chi);

  if (res.rank == 1) {
    const double v = measure(StateVector::normalized(s, eig.vectors.col(0)));
    res.surface.setConstant(v);
    res.value = res.grid_value = v;
    return res;
  }

  const std::size_t cells = static_cast<std::size_t>(grid.n_theta) * grid.n_chi;
  parallel_for(cells, grid.jobs, [&](std::size_t c) {
    const int i = static_cast<int>(c) / grid.n_chi;
    const int j = static_cast<int>(c) % grid.n_chi;
    res.surface(i, j) = roof_average(eig, s, measure, res.thetas[i], res.chis[j]);
  });

  // row-major scan with strict < keeps the smaller theta, then smaller chi
  res.grid_value = res.surface(0, 0);
  for (int i = 0; i < grid.n_theta; ++i)
    for (int j = 0; j < grid.n_chi; ++j)
      if (res.surface(i, j) < res.grid_value) {
        res.grid_value = res.surface(i, j);
        res.grid_theta_index = i;
        res.grid_chi_index = j;
      }
  res.value = res.grid_value;
  res.theta = res.thetas[res.grid_theta_index];
  res.chi = res.chis[res.grid_chi_index];
  if (!grid.refine) return res;

  const double dtheta = grid.n_theta > 1 ? res.thetas[1] : std::numbers::pi / 2;
  const double dchi = 2.0 * std::numbers::pi / grid.n_chi;
  for (int pass = 0; pass < 20; ++pass) {
    const double before = res.value;
    auto along_theta = [&](double t) { return roof_average(eig, s, measure, t, res.chi); };
    const auto [t, ft] = golden_section(along_theta, std::max(0.0, res.theta - dtheta),
                                        std::min(std::numbers::pi / 2, res.theta + dtheta), 1e-9);
    if (ft < res.value) {
      res.value = ft;
      res.theta = t;
    }
    auto along_chi = [&](double x) { return roof_average(eig, s, measure, res.theta, x); };
    const auto [x, fx] = golden_section(along_chi, res.chi - dchi, res.chi + dchi, 1e-9);
    if (fx < res.value) {
      res.value = fx;
      res.chi = std::fmod(x + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
    }
    if (before - res.value < grid.tolerance) break;
  }
  return res;
}

RoofResult gm_roof(const DensityMatrix& rho, const RoofGrid& grid) {
  return roof_rank2(rho, [](const StateVector& w) { return gm_ent(w).value; }, grid);
}

}  // namespace entkit
