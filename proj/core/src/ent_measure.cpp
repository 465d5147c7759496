#include "entkit/ent_measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "entkit/errors.hpp"

namespace entkit {

double p_mp(int L, int n_m) {
  if (L < 1 || n_m < 2) throw std::invalid_argument("p_mp needs L >= 1 and n_m >= 2");
  const int q = L / n_m;
  const int r = L % n_m;
  const double hi = static_cast<double>(q + 1) / L;
  const double lo = static_cast<double>(q) / L;
  return r * hi * hi + (n_m - r) * lo * lo;
}

Rational p_mp_exact(int L, int n_m) {
  if (L < 1 || n_m < 2) throw std::invalid_argument("p_mp needs L >= 1 and n_m >= 2");
  const long long q = L / n_m;
  const long long r = L % n_m;
  return Rational(r * (q + 1) * (q + 1) + (n_m - r) * q * q, static_cast<long long>(L) * L);
}

namespace {

void check_L(int L, const ModeStructure& s) {
  if (s.N() < 2) throw UnsupportedStructure("ent needs at least two modes, got " + s.str());
  if (L < 2 || L > s.nbar_max())
    throw std::invalid_argument("L = " + std::to_string(L) + " outside 2.." + std::to_string(s.nbar_max()) + " for " + s.str());
}

}  // namespace

double normalization_M(int L, const ModeStructure& s) {
  check_L(L, s);
  double acc = 0.0;
  for (int nm : s.modes()) acc += (nm * p_mp(L, nm) - 1.0) / (nm - 1.0);
  return 1.0 - acc / s.N();
}

Rational one_minus_M_exact(int L, const ModeStructure& s) {
  check_L(L, s);
  Rational acc(0);
  for (int nm : s.modes()) acc += (Rational(nm) * p_mp_exact(L, nm) - 1) / Rational(nm - 1);
  return acc / Rational(s.N());
}

std::vector<int> lstar_set(const ModeStructure& s) {
  if (s.N() < 2) throw UnsupportedStructure("L* is undefined for a single mode (" + s.str() + ")");
  std::vector<double> gap;
  for (int L = 2; L <= s.nbar_max(); ++L) gap.push_back(1.0 - normalization_M(L, s));
  const double best = *std::min_element(gap.begin(), gap.end());
  const double tol = TOL_LSTAR * std::max(std::abs(best), 1.0);
  std::vector<int> out;
  for (std::size_t i = 0; i < gap.size(); ++i)
    if (gap[i] - best <= tol) out.push_back(static_cast<int>(i) + 2);
  return out;
}

std::vector<int> lstar_set_exact(const ModeStructure& s) {
  if (s.N() < 2) throw UnsupportedStructure("L* is undefined for a single mode (" + s.str() + ")");
  std::vector<Rational> gap;
  for (int L = 2; L <= s.nbar_max(); ++L) gap.push_back(one_minus_M_exact(L, s));
  const Rational best = *std::min_element(gap.begin(), gap.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < gap.size(); ++i)
    if (gap[i] == best) out.push_back(static_cast<int>(i) + 2);
  return out;
}

EntContext make_ent_context(const ModeStructure& s, std::optional<int> lstar) {
  EntContext ctx;
  ctx.structure = s;
  ctx.lstar_set = lstar_set(s);
  ctx.lstar = ctx.lstar_set.front();
  if (lstar) {
    if (std::find(ctx.lstar_set.begin(), ctx.lstar_set.end(), *lstar) == ctx.lstar_set.end())
      throw std::invalid_argument("L* = " + std::to_string(*lstar) + " is not in the L* set of " + s.str());
    ctx.lstar = *lstar;
  }
  ctx.M = normalization_M(ctx.lstar, s);
  for (int nm : s.modes()) ctx.pmp_per_mode.push_back(p_mp(ctx.lstar, nm));
  return ctx;
}

const EntContext& ent_context(const ModeStructure& s) {
  static std::shared_mutex mutex;
  static std::map<std::vector<int>, std::unique_ptr<const EntContext>> memo;
  {
    std::shared_lock<std::shared_mutex> lock(mutex);
    auto it = memo.find(s.modes());
    if (it != memo.end()) return *it->second;
  }
  auto fresh = std::make_unique<const EntContext>(make_ent_context(s));
  std::unique_lock<std::shared_mutex> lock(mutex);
  auto [it, inserted] = memo.emplace(s.modes(), std::move(fresh));
  return *it->second;
}

double unitized_purity(double purity, int n_m) { return (n_m * purity - 1.0) / (n_m - 1.0); }

double EntReport::display() const { return std::clamp(ent, 0.0, 1.0); }

double ent_from_purities(const std::vector<double>& purities, const EntContext& ctx) {
  const ModeStructure& s = ctx.structure;
  if (static_cast<int>(purities.size()) != s.N()) throw std::invalid_argument("one purity per mode required");
  double acc = 0.0;
  for (int m = 0; m < s.N(); ++m) acc += unitized_purity(purities[m], s.modes()[m]);
  return (1.0 - acc / s.N()) / ctx.M;
}

EntReport ent(const StateVector& psi, const EntContext& ctx) {
  if (psi.structure() != ctx.structure) throw std::invalid_argument("context structure differs from the state's");
  EntReport rep;
  rep.context = ctx;
  rep.reduction_purities = single_mode_purities(psi);
  for (int m = 0; m < ctx.structure.N(); ++m)
    rep.unitized_purities.push_back(unitized_purity(rep.reduction_purities[m], ctx.structure.modes()[m]));
  rep.ent = ent_from_purities(rep.reduction_purities, ctx);
  return rep;
}

EntReport ent(const StateVector& psi) {
  if (psi.structure().N() < 2) throw UnsupportedStructure("ent needs at least two modes, got " + psi.structure().str());
  return ent(psi, ent_context(psi.structure()));
}

double ent_value(const StateVector& psi) {
  const EntContext& ctx = ent_context(psi.structure());
  return ent_from_purities(single_mode_purities(psi), ctx);
}

double alternative_ent(const StateVector& psi) {
  const ModeStructure& s = psi.structure();
  const EntContext& ctx = ent_context(s);
  const std::vector<double> p = single_mode_purities(psi);
  double acc = 0.0;
  for (int m = 0; m < s.N(); ++m) {
    const double floor_p = ctx.pmp_per_mode[m];
    if (1.0 - floor_p <= 0.0) throw DefectError("minimum physical purity reached 1");
    acc += (p[m] - floor_p) / (1.0 - floor_p);
  }
  return 1.0 - acc / s.N();
}

double squeezed_reduction_purity(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("squeezing parameter must be finite and >= 0");
  const double c2 = std::cosh(r) * std::cosh(r);
  return 1.0 / (2.0 * c2 - 1.0);
}

double ent_two_mode_squeezed(double r) { return 1.0 - squeezed_reduction_purity(r); }

double squeezed_reduction_purity_truncated(double r, int cutoff) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("squeezing parameter must be finite and >= 0");
  if (cutoff < 1) throw std::invalid_argument("Fock cutoff must be positive");
  const double t4 = std::pow(std::tanh(r), 4);
  const double c4 = std::pow(std::cosh(r), 4);
  double term = 1.0 / c4;
  double sum = 0.0;
  for (int k = 0; k < cutoff; ++k) {
    sum += term;
    term *= t4;
  }
  return sum;
}

LognegGauge logneg_gauge(double ent_star) {
  if (!(ent_star >= 0.0)) throw std::invalid_argument("target ent must be >= 0");
  if (ent_star >= 1.0) throw std::invalid_argument("target ent 1 needs infinite squeezing");
  LognegGauge g;
  g.r_star = std::acosh(std::sqrt(0.5 * (1.0 / (1.0 - ent_star) + 1.0)));
  g.log_negativity = g.r_star / std::log(std::sqrt(2.0));
  return g;
}

}  // namespace entkit
