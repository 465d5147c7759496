#pragma once

#include <entkit/tensor_core.hpp>

#include "oracle.hpp"

namespace entkit_test {

inline oracle::Amps to_amps(const entkit::CVec& v) { return oracle::Amps(v.data(), v.data() + v.size()); }

inline entkit::CVec to_cvec(const oracle::Amps& a) {
  entkit::CVec v(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<int>(i)) = a[i];
  return v;
}

inline entkit::CMat to_cmat(const oracle::Mat& m) {
  entkit::CMat out(static_cast<int>(m.size()), static_cast<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = m[i][j];
  return out;
}

inline double max_abs(const entkit::CMat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline entkit::DensityMatrix random_mixed(const entkit::ModeStructure& s, int terms, std::mt19937_64& rng) {
  entkit::CMat rho = entkit::CMat::Zero(s.n(), s.n());
  std::uniform_real_distribution<double> w(0.1, 1.0);
  double total = 0.0;
  for (int t = 0; t < terms; ++t) {
    const double p = w(rng);
    const entkit::CVec v = entkit::random_pure_state(s, rng).amplitudes();
    rho += p * v * v.adjoint();
    total += p;
  }
  rho /= total;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return entkit::DensityMatrix(s, rho);
}

// Structures with N >= 2 and n <= 18, in published order.
inline const std::vector<std::string> kSmallStructures = {
    "2x2", "2x3", "2x4", "2x2x2", "3x3", "2x5", "2x6", "3x4", "2x2x3",
    "2x7", "3x5", "2x8", "4x4", "2x2x4", "2x2x2x2", "2x9", "3x6", "2x3x3"};

}  // namespace entkit_test
