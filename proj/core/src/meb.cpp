#include "entkit/meb.hpp"

#include <cmath>
#include <numbers>

#include "entkit/errors.hpp"

namespace entkit {

CMat fourier(int L) {
  if (L < 1) throw std::invalid_argument("Fourier matrix needs L >= 1");
  CMat f(L, L);
  const double scale = 1.0 / std::sqrt(static_cast<double>(L));
  for (int j = 0; j < L; ++j)
    for (int k = 0; k < L; ++k) f(j, k) = std::polar(scale, -2.0 * std::numbers::pi * ((j * k) % L) / L);
  return f;
}

namespace {

std::vector<GeneratingSet> exact_covers(int n, const LevelSetTable& rows, std::size_t limit) {
  std::vector<std::vector<int>> containing(n + 1);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int v : rows[r]) containing[v].push_back(static_cast<int>(r));

  std::vector<GeneratingSet> covers;
  std::vector<char> covered(n + 1, 0);
  GeneratingSet current;

  auto search = [&](auto&& self) -> bool {
    int first = 1;
    while (first <= n && covered[first]) ++first;
    if (first > n) {
      covers.push_back(current);
      return limit != 0 && covers.size() >= limit;
    }
    for (int r : containing[first]) {
      const LevelSet& row = rows[r];
      bool clash = false;
      for (int v : row) clash = clash || covered[v];
      if (clash) continue;
      for (int v : row) covered[v] = 1;
      current.push_back(row);
      const bool stop = self(self);
      current.pop_back();
      for (int v : row) covered[v] = 0;
      if (stop) return true;
    }
    return false;
  };
  search(search);
  return covers;
}

}  // namespace

std::vector<GeneratingSet> generating_sets(const ModeStructure& s, int lstar, std::size_t limit) {
  if (s.n() % lstar != 0)
    throw std::invalid_argument("L* = " + std::to_string(lstar) + " does not divide n = " + std::to_string(s.n()) +
                                "; no cover by equal-size rows exists");
  return exact_covers(s.n(), a13_all(s, lstar), limit);
}

std::vector<GeneratingSet> generating_sets_mixed(const ModeStructure& s, std::size_t limit) {
  return exact_covers(s.n(), a13_all(s), limit);
}

MebBasis meb_expand(const ModeStructure& s, const GeneratingSet& gs) {
  std::vector<char> seen(s.n() + 1, 0);
  int total = 0;
  for (const LevelSet& row : gs) {
    for (int v : row) {
      if (v < 1 || v > s.n()) throw IndexError("level " + std::to_string(v) + " outside 1.." + std::to_string(s.n()));
      if (seen[v]) throw std::invalid_argument("generating set rows overlap at level " + std::to_string(v));
      seen[v] = 1;
      ++total;
    }
  }
  if (total != s.n()) throw std::invalid_argument("generating set does not cover every level");

  MebBasis basis;
  basis.structure = s;
  for (std::size_t j = 0; j < gs.size(); ++j) {
    const LevelSet& row = gs[j];
    const int L = static_cast<int>(row.size());
    const CMat f = fourier(L);
    for (int l = 0; l < L; ++l) {
      CVec amp = CVec::Zero(s.n());
      for (int k = 0; k < L; ++k) amp(row[k] - 1) = f(l, k);
      basis.states.push_back({static_cast<int>(j) + 1, l + 1, StateVector::normalized(s, std::move(amp))});
    }
  }
  return basis;
}

}  // namespace entkit
