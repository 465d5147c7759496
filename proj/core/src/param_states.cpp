#include "entkit/param_states.hpp"

#include <cmath>
#include <numbers>

#include "entkit/ent_measure.hpp"
#include "entkit/errors.hpp"

namespace entkit {

std::vector<double> hyperspherical(const std::vector<double>& thetas) {
  std::vector<double> x(thetas.size() + 1);
  double running = 1.0;
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    x[k] = running * std::cos(thetas[k]);
    running *= std::sin(thetas[k]);
  }
  x.back() = running;
  return x;
}

double ThetaFamily::theta_max() const {
  return std::acos(1.0 / std::sqrt(static_cast<double>(base_levels.size())));
}

StateVector theta_state(const ThetaFamily& family, double theta) {
  const int L = static_cast<int>(family.base_levels.size());
  if (L < 2) throw std::invalid_argument("theta family needs at least two levels");
  if (theta < -1e-15 || theta > family.theta_max() + 1e-12)
    throw std::invalid_argument("theta outside [0, theta_max]");
  const ModeStructure& s = family.structure;
  CVec amp = CVec::Zero(s.n());
  const double rest = std::sin(theta) / std::sqrt(L - 1.0);
  for (int k = 0; k < L; ++k) {
    const int v = family.base_levels[k];
    if (v < 1 || v > s.n()) throw IndexError("level " + std::to_string(v) + " outside 1.." + std::to_string(s.n()));
    amp(v - 1) = k == 0 ? std::cos(theta) : rest;
  }
  return StateVector::normalized(s, std::move(amp));
}

StateVector theta_state_multi(const ModeStructure& s, const LevelSet& levels, const std::vector<double>& thetas) {
  if (levels.size() != thetas.size() + 1) throw std::invalid_argument("need one angle fewer than levels");
  const std::vector<double> x = hyperspherical(thetas);
  CVec amp = CVec::Zero(s.n());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const int v = levels[k];
    if (v < 1 || v > s.n()) throw IndexError("level " + std::to_string(v) + " outside 1.." + std::to_string(s.n()));
    if (amp(v - 1) != Cx(0.0)) throw std::invalid_argument("level " + std::to_string(v) + " listed twice");
    amp(v - 1) = x[k];
  }
  return StateVector::normalized(s, std::move(amp));
}

EpuSpec EpuSpec::identity(const ModeStructure& s) {
  EpuSpec spec;
  for (int nm : s.modes()) spec.locals.push_back(CMat::Identity(nm, nm));
  spec.diag_phases.assign(s.n(), 0.0);
  return spec;
}

EpuSpec random_epu(const ModeStructure& s, std::mt19937_64& rng) {
  EpuSpec spec;
  for (int nm : s.modes()) spec.locals.push_back(random_unitary(nm, rng));
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (int k = 0; k < s.n(); ++k) spec.diag_phases.push_back(phase(rng));
  return spec;
}

EpuSpec random_epu(const ModeStructure& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_epu(s, rng);
}

namespace {

void check_spec(const EpuSpec& spec, const ModeStructure& s) {
  if (static_cast<int>(spec.locals.size()) != s.N()) throw std::invalid_argument("EPU needs one local unitary per mode");
  for (int m = 0; m < s.N(); ++m) {
    if (spec.locals[m].rows() != s.modes()[m] || spec.locals[m].cols() != s.modes()[m])
      throw std::invalid_argument("local unitary " + std::to_string(m + 1) + " has the wrong size");
    if (!is_unitary(spec.locals[m], 1e-10)) throw ValidationError("local " + std::to_string(m + 1) + " is not unitary");
  }
  if (static_cast<int>(spec.diag_phases.size()) != s.n()) throw std::invalid_argument("EPU needs one diagonal phase per level");
}

}  // namespace

CVec apply_local_unitaries(const std::vector<CMat>& locals, const ModeStructure& s, const CVec& psi) {
  CVec out = psi;
  int stride = s.n();
  for (int m = 0; m < s.N(); ++m) {
    const int nm = s.modes()[m];
    stride /= nm;
    const int block = nm * stride;
    CVec slice(nm);
    for (int outer = 0; outer < s.n(); outer += block) {
      for (int inner = 0; inner < stride; ++inner) {
        for (int a = 0; a < nm; ++a) slice(a) = out(outer + a * stride + inner);
        const CVec mixed = locals[m] * slice;
        for (int a = 0; a < nm; ++a) out(outer + a * stride + inner) = mixed(a);
      }
    }
  }
  return out;
}

CMat epu_matrix(const EpuSpec& spec) {
  CMat u = spec.locals.front();
  for (std::size_t m = 1; m < spec.locals.size(); ++m) u = kron(u, spec.locals[m]);
  for (int k = 0; k < u.cols(); ++k) u.col(k) *= std::polar(1.0, spec.diag_phases[k]);
  return u;
}

StateVector apply_epu(const EpuSpec& spec, const StateVector& psi) {
  const ModeStructure& s = psi.structure();
  check_spec(spec, s);
  CVec phased = psi.amplitudes();
  for (int k = 0; k < s.n(); ++k) phased(k) *= std::polar(1.0, spec.diag_phases[k]);
  return StateVector::normalized(s, apply_local_unitaries(spec.locals, s, phased));
}

SchmidtForm schmidt(const StateVector& psi) {
  const ModeStructure& s = psi.structure();
  if (s.N() != 2)
    throw std::invalid_argument("schmidt needs a bipartite state; group modes into two blocks with permute_modes first");
  const int n1 = s.modes()[0];
  const int n2 = s.modes()[1];
  CMat a(n1, n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) a(i, j) = psi.amplitudes()(i * n2 + j);
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtForm f;
  f.lambda = svd.singularValues();
  f.left = svd.matrixU();
  f.right = svd.matrixV();
  const int ns = static_cast<int>(f.lambda.size());
  int nonzero = 0;
  bool balanced = true;
  for (int l = 0; l < ns; ++l) {
    nonzero += f.lambda(l) > SCHMIDT_TOL;
    balanced = balanced && std::abs(f.lambda(l) - 1.0 / std::sqrt(static_cast<double>(ns))) <= SCHMIDT_TOL;
  }
  f.separable = f.lambda(0) >= 1.0 - SCHMIDT_TOL;
  f.entangled = nonzero > 1;
  f.maximally_entangled = balanced;
  return f;
}

StateVector reverse_schmidt(const CMat& U, const Eigen::VectorXd& sigma, const CMat& V) {
  if (!is_unitary(U, 1e-10) || !is_unitary(V, 1e-10)) throw ValidationError("reverse_schmidt needs unitary U and V");
  const int n1 = static_cast<int>(U.rows());
  const int n2 = static_cast<int>(V.rows());
  if (sigma.size() > std::min(n1, n2)) throw std::invalid_argument("too many Schmidt coefficients");
  if (sigma.size() > 0 && sigma.minCoeff() < 0.0) throw ValidationError("Schmidt coefficients must be nonnegative");
  if (std::abs(sigma.squaredNorm() - 1.0) > EPS_NORM) throw ValidationError("Schmidt coefficients must have unit 2-norm");
  CMat diag = CMat::Zero(n1, n2);
  for (int l = 0; l < sigma.size(); ++l) diag(l, l) = sigma(l);
  const CMat a = U * diag * V.adjoint();
  CVec amp(n1 * n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) amp(i * n2 + j) = a(i, j);
  return StateVector(ModeStructure({n1, n2}), std::move(amp));
}

double ent_formula_223(double theta) {
  if (theta < 0.0 || theta > std::numbers::pi / 2 + 1e-12) throw std::invalid_argument("theta outside [0, pi/2]");
  const double s2 = std::sin(theta) * std::sin(theta);
  return 16.0 / 423.0 * (75.0 * s2 - 53.0 * s2 * s2);
}

double theta_of_ent_223(double ent) {
  if (ent < 0.0 || ent > 1.0) throw std::invalid_argument("ent outside [0, 1]");
  const double c = 75.0 / 106.0;
  const double root = std::sqrt(std::max(0.0, c * c - 423.0 / 848.0 * ent));
  const double s2 = ent >= ENT_223_TRANSITION ? c + root : c - root;
  return std::asin(std::sqrt(std::clamp(s2, 0.0, 1.0)));
}

CMat complete_frame(const CVec& first, double skip_threshold) {
  const int n = static_cast<int>(first.size());
  CMat frame(n, n);
  frame.col(0) = first.normalized();
  int filled = 1;
  for (int k = 0; k < n && filled < n; ++k) {
    CVec v = CVec::Unit(n, k);
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < filled; ++j) v -= frame.col(j).dot(v) * frame.col(j);
    const double norm = v.norm();
    if (norm < skip_threshold) continue;
    frame.col(filled++) = v / norm;
  }
  if (filled != n) throw DefectError("frame completion produced too few vectors");
  return frame;
}

CMat v_epu(const StateVector& target, const StateVector& core) {
  if (target.structure() != core.structure()) throw std::invalid_argument("target and core live in different structures");
  const double et = ent_value(target);
  const double ec = ent_value(core);
  if (std::abs(et - ec) > 1e-6)
    throw std::invalid_argument("target and core ent differ (" + std::to_string(et) + " vs " + std::to_string(ec) + ")");
  return complete_frame(target.amplitudes()) * complete_frame(core.amplitudes()).adjoint();
}

}  // namespace entkit
