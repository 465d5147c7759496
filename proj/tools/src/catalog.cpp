#include "catalog.hpp"

#include <entkit/ent_measure.hpp>

#include <algorithm>
#include <random>

namespace entkit::cli {

namespace {

void factorizations(int rest, int min_factor, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (rest == 1) {
    if (prefix.size() >= 2) out.push_back(prefix);
    return;
  }
  for (int f = min_factor; f <= rest; ++f) {
    if (rest % f) continue;
    prefix.push_back(f);
    factorizations(rest / f, f, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ModeStructure> structures_up_to(int max_n) {
  std::vector<ModeStructure> out;
  for (int n = 4; n <= max_n; ++n) {
    std::vector<std::vector<int>> found;
    std::vector<int> prefix;
    factorizations(n, 2, prefix, found);
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (auto& modes : found) out.emplace_back(std::move(modes));
  }
  return out;
}

std::vector<ModeStructure> all_sets_structures() {
  std::vector<ModeStructure> out;
  for (const char* m : {"2x2", "2x3", "2x4", "2x2x2", "3x3", "2x5", "2x6", "3x4", "2x2x3"})
    out.push_back(ModeStructure::parse(m));
  return out;
}

LevelSet canonical_row(const ModeStructure& s) {
  const LevelSetTable rows = a13(s, 1, lstar_set(s).front());
  return rows.empty() ? LevelSet{} : rows.front();
}

DensityMatrix seeded_rank2_mixture(const ModeStructure& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const CVec a = random_pure_state(s, rng).amplitudes();
  const CVec b = random_pure_state(s, rng).amplitudes();
  const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  CMat rho = p * a * a.adjoint() + (1 - p) * b * b.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(s, rho);
}

}  // namespace entkit::cli
