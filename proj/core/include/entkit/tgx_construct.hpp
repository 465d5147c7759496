/*
 * TGX-space machinery: the compatibility mask, occurrence and goals
 * matrices, the 13-step level-set search and the multiqudit closed form.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "entkit/tensor_core.hpp"

namespace entkit {

using LevelSet = std::vector<int>;
using LevelSetTable = std::vector<LevelSet>;

inline constexpr std::uint64_t A13_COMBINATION_CAP = 10'000'000;

std::uint64_t binomial(int n, int k);

// All k-subsets of `items` in lexicographic order of positions.
std::vector<std::vector<int>> n_choose_k(const std::vector<int>& items, int k);

class TgxMask {
 public:
  explicit TgxMask(const ModeStructure& s);

  const ModeStructure& structure() const { return s_; }
  // 1-based levels.
  bool operator()(int a, int b) const { return bits_[(a - 1) * s_.n() + (b - 1)] != 0; }
  long long off_diagonal_true_count() const;

 private:
  ModeStructure s_;
  std::vector<unsigned char> bits_;
};

TgxMask tgx_mask(const ModeStructure& s);
long long tgx_off_diagonal_count_formula(const ModeStructure& s);

struct OccurrenceMatrix {
  ModeStructure structure;
  int width = 0;
  std::vector<std::vector<int>> rows;  // row v-1 belongs to level v
};

OccurrenceMatrix occurrence_matrix(const ModeStructure& s);

struct GoalsMatrix {
  ModeStructure structure;
  int lstar = 0;
  int m_max = 0;  // 1-based
  std::vector<std::vector<int>> rows;
};

GoalsMatrix goals_matrix(const ModeStructure& s, int lstar);

// Intermediate artifacts of one a13 run, in enumeration order.
struct A13Trace {
  std::vector<int> compatible_levels;         // levels TGX-compatible with the start
  std::uint64_t combination_count = 0;        // candidate rows before filtering
  LevelSetTable candidates;                   // every candidate row (start prepended)
  LevelSetTable pairwise_compatible;          // rows passing the pairwise mask test
  LevelSetTable maximally_entangled;          // rows also matching a goals row
};

LevelSetTable a13(const ModeStructure& s, int start, int lstar, A13Trace* trace = nullptr);

// Union over all starts (and over every L* member unless one is given),
// sorted by row length and then lexicographically.
LevelSetTable a13_all(const ModeStructure& s, std::optional<int> lstar = std::nullopt, int jobs = 1);

StateVector state_from_levels(const ModeStructure& s, const LevelSet& levels,
                              const std::vector<double>& phases = {});

LevelSet multiqudit_me(int d, int N);

}  // namespace entkit
