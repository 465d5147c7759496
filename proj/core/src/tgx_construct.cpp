#include "entkit/tgx_construct.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "entkit/ent_measure.hpp"
#include "entkit/errors.hpp"
#include "entkit/parallel.hpp"

namespace entkit {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

std::vector<std::vector<int>> n_choose_k(const std::vector<int>& items, int k) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return out;
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i;
  while (true) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = items[pos[i]];
    out.push_back(std::move(pick));
    int i = k - 1;
    while (i >= 0 && pos[i] == n - k + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

TgxMask::TgxMask(const ModeStructure& s) : s_(s), bits_(static_cast<std::size_t>(s.n()) * s.n(), 0) {
  std::vector<MultiIndex> idx;
  idx.reserve(s.n());
  for (int v = 1; v <= s.n(); ++v) idx.push_back(inverse_indical(v, s));
  for (int a = 0; a < s.n(); ++a) {
    for (int b = 0; b < s.n(); ++b) {
      int differ = 0;
      for (int m = 0; m < s.N(); ++m) differ += idx[a][m] != idx[b][m];
      bits_[a * s.n() + b] = (a == b || differ >= 2) ? 1 : 0;
    }
  }
}

long long TgxMask::off_diagonal_true_count() const {
  long long count = 0;
  for (int a = 1; a <= s_.n(); ++a)
    for (int b = 1; b <= s_.n(); ++b) count += (a != b && (*this)(a, b));
  return count;
}

TgxMask tgx_mask(const ModeStructure& s) { return TgxMask(s); }

long long tgx_off_diagonal_count_formula(const ModeStructure& s) {
  return static_cast<long long>(s.n()) * (s.n() - 1 + s.N() - s.sum_of_sizes());
}

OccurrenceMatrix occurrence_matrix(const ModeStructure& s) {
  OccurrenceMatrix om;
  om.structure = s;
  om.width = s.sum_of_sizes();
  om.rows.reserve(s.n());
  for (int v = 1; v <= s.n(); ++v) {
    const MultiIndex a = inverse_indical(v, s);
    std::vector<int> row(om.width, 0);
    int offset = 0;
    for (int m = 0; m < s.N(); ++m) {
      row[offset + a[m] - 1] = 1;
      offset += s.modes()[m];
    }
    om.rows.push_back(std::move(row));
  }
  return om;
}

GoalsMatrix goals_matrix(const ModeStructure& s, int lstar) {
  const std::vector<int> set = lstar_set(s);
  if (std::find(set.begin(), set.end(), lstar) == set.end())
    throw std::invalid_argument("L* = " + std::to_string(lstar) + " is not in the L* set of " + s.str());
  GoalsMatrix g;
  g.structure = s;
  g.lstar = lstar;
  g.m_max = static_cast<int>(std::find(s.modes().begin(), s.modes().end(), s.n_max()) - s.modes().begin()) + 1;

  const int nmax = s.n_max();
  const int base = lstar / nmax;
  std::vector<int> positions(nmax);
  for (int i = 0; i < nmax; ++i) positions[i] = i + 1;
  for (const auto& raised : n_choose_k(positions, lstar % nmax)) {
    std::vector<int> row;
    for (int m = 1; m <= s.N(); ++m) {
      const int nm = s.modes()[m - 1];
      if (m != g.m_max) {
        row.insert(row.end(), nm, lstar / nm);
      } else {
        std::vector<int> block(nm, base);
        for (int p : raised) block[p - 1] += 1;
        row.insert(row.end(), block.begin(), block.end());
      }
    }
    g.rows.push_back(std::move(row));
  }
  return g;
}

LevelSetTable a13(const ModeStructure& s, int start, int lstar, A13Trace* trace) {
  if (start < 1 || start > s.n()) throw IndexError("start level " + std::to_string(start) + " outside 1.." + std::to_string(s.n()));
  const GoalsMatrix goals = goals_matrix(s, lstar);
  const TgxMask mask(s);
  const OccurrenceMatrix omega = occurrence_matrix(s);
  const std::set<std::vector<int>> goal_rows(goals.rows.begin(), goals.rows.end());

  std::vector<int> compatible;
  for (int k = 1; k <= s.n(); ++k)
    if (k != start && mask(k, start)) compatible.push_back(k);

  const int pick = lstar - 1;
  const std::uint64_t count = binomial(static_cast<int>(compatible.size()), pick);
  if (count > A13_COMBINATION_CAP)
    throw ResourceError("a13 for " + s.str() + " at L* = " + std::to_string(lstar) + " needs " + std::to_string(count) +
                        " candidate rows, above the cap of " + std::to_string(A13_COMBINATION_CAP));

  if (trace) {
    *trace = A13Trace{};
    trace->compatible_levels = compatible;
    trace->combination_count = count;
    for (auto& combo : n_choose_k(compatible, pick)) {
      LevelSet row{start};
      row.insert(row.end(), combo.begin(), combo.end());
      trace->candidates.push_back(std::move(row));
    }
  }

  // Depth-first over positions in `compatible`; pruning rows that already
  // fail the pairwise mask keeps the lexicographic order of the full
  // enumeration.
  LevelSetTable out;
  LevelSet row{start};
  const int width = omega.width;
  std::vector<int> sums(omega.rows[start - 1]);
  const int total = static_cast<int>(compatible.size());

  auto recurse = [&](auto&& self, int from) -> void {
    if (static_cast<int>(row.size()) == lstar) {
      if (trace) trace->pairwise_compatible.push_back(row);
      if (goal_rows.count(sums)) {
        LevelSet sorted = row;
        std::sort(sorted.begin(), sorted.end());
        if (trace) trace->maximally_entangled.push_back(row);
        out.push_back(std::move(sorted));
      }
      return;
    }
    const int needed = lstar - static_cast<int>(row.size());
    for (int i = from; i <= total - needed; ++i) {
      const int level = compatible[i];
      bool ok = true;
      for (std::size_t j = 1; j < row.size() && ok; ++j) ok = mask(level, row[j]);
      if (!ok) continue;
      row.push_back(level);
      for (int c = 0; c < width; ++c) sums[c] += omega.rows[level - 1][c];
      self(self, i + 1);
      for (int c = 0; c < width; ++c) sums[c] -= omega.rows[level - 1][c];
      row.pop_back();
    }
  };
  recurse(recurse, 0);

  if (out.empty())
    throw DefectError("a13 found no maximally entangled level set for " + s.str() + " from level " + std::to_string(start) +
                      " at L* = " + std::to_string(lstar));
  return out;
}

LevelSetTable a13_all(const ModeStructure& s, std::optional<int> lstar, int jobs) {
  const std::vector<int> lstars = lstar ? std::vector<int>{*lstar} : lstar_set(s);
  std::vector<std::pair<int, int>> work;
  for (int L : lstars)
    for (int start = 1; start <= s.n(); ++start) work.emplace_back(L, start);
  std::vector<LevelSetTable> parts(work.size());
  parallel_for(work.size(), jobs, [&](std::size_t i) { parts[i] = a13(s, work[i].second, work[i].first); });

  std::set<LevelSet> unique;
  for (const auto& part : parts) unique.insert(part.begin(), part.end());
  LevelSetTable out(unique.begin(), unique.end());
  std::stable_sort(out.begin(), out.end(), [](const LevelSet& a, const LevelSet& b) { return a.size() < b.size(); });
  return out;
}

StateVector state_from_levels(const ModeStructure& s, const LevelSet& levels, const std::vector<double>& phases) {
  if (levels.empty()) throw std::invalid_argument("level set is empty");
  if (!phases.empty() && phases.size() != levels.size()) throw std::invalid_argument("one phase per level required");
  CVec amp = CVec::Zero(s.n());
  const double a = 1.0 / std::sqrt(static_cast<double>(levels.size()));
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const int v = levels[k];
    if (v < 1 || v > s.n()) throw IndexError("level " + std::to_string(v) + " outside 1.." + std::to_string(s.n()));
    if (amp(v - 1) != Cx(0.0)) throw std::invalid_argument("level " + std::to_string(v) + " listed twice");
    amp(v - 1) = phases.empty() ? Cx(a) : std::polar(a, phases[k]);
  }
  return StateVector(s, std::move(amp));
}

LevelSet multiqudit_me(int d, int N) {
  if (d < 2 || N < 2) throw std::invalid_argument("multiqudit_me needs d >= 2 and N >= 2");
  long long n = 1;
  for (int i = 0; i < N; ++i) n *= d;
  const long long step = (n - 1) / (d - 1);
  LevelSet out;
  for (int k = 1; k <= d; ++k) out.push_back(static_cast<int>(1 + (k - 1) * step));
  return out;
}

}  // namespace entkit
