/*
 * The ent of pure multipartite states: minimum physical purity, the
 * normalization M(L), the L* search, unitized purities, the alternative ent,
 * and the two-mode squeezed vacuum closed forms.
 */
#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "entkit/tensor_core.hpp"

namespace entkit {

using Rational = boost::rational<long long>;

inline constexpr double TOL_LSTAR = 1e-9;

double p_mp(int L, int n_m);
Rational p_mp_exact(int L, int n_m);

double normalization_M(int L, const ModeStructure& s);
// 1 - M(L) in exact rational arithmetic.
Rational one_minus_M_exact(int L, const ModeStructure& s);

std::vector<int> lstar_set(const ModeStructure& s);
std::vector<int> lstar_set_exact(const ModeStructure& s);

struct EntContext {
  ModeStructure structure;
  std::vector<int> lstar_set;
  int lstar = 0;
  double M = 0.0;
  std::vector<double> pmp_per_mode;
};

// `lstar` picks the representative; it must belong to the L* set and
// defaults to the smallest member.
EntContext make_ent_context(const ModeStructure& s, std::optional<int> lstar = std::nullopt);
// Memoized default context, safe to call from several threads.
const EntContext& ent_context(const ModeStructure& s);

double unitized_purity(double purity, int n_m);

struct EntReport {
  double ent = 0.0;  // raw value
  std::vector<double> reduction_purities;
  std::vector<double> unitized_purities;
  EntContext context;

  double display() const;
};

EntReport ent(const StateVector& psi);
EntReport ent(const StateVector& psi, const EntContext& ctx);
double ent_value(const StateVector& psi);
// ent from per-mode reduction purities under a given context.
double ent_from_purities(const std::vector<double>& purities, const EntContext& ctx);

double alternative_ent(const StateVector& psi);

double ent_two_mode_squeezed(double r);
// Closed-form purity 1/(2cosh^2 r - 1) of either mode of the squeezed vacuum.
double squeezed_reduction_purity(double r);
// The same purity summed over the first `cutoff` Fock levels.
double squeezed_reduction_purity_truncated(double r, int cutoff = 200);

struct LognegGauge {
  double r_star = 0.0;
  double log_negativity = 0.0;
};
LognegGauge logneg_gauge(double ent_star);

}  // namespace entkit
