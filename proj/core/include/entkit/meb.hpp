/*
 * Maximally entangled bases: exact covers of the levels by maximally
 * entangled TGX level sets, expanded with Fourier phases.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "entkit/tgx_construct.hpp"

namespace entkit {

CMat fourier(int L);

using GeneratingSet = std::vector<LevelSet>;

// Every exact cover of {1..n} by a13_all rows of length `lstar`. A nonzero
// `limit` stops the search after that many covers.
std::vector<GeneratingSet> generating_sets(const ModeStructure& s, int lstar, std::size_t limit = 0);
// Covers drawing rows of any length in the L* set.
std::vector<GeneratingSet> generating_sets_mixed(const ModeStructure& s, std::size_t limit = 0);

struct MebState {
  int generator = 0;  // 1-based row of the generating set
  int phase_index = 0;  // l in 1..L
  StateVector state;
};

struct MebBasis {
  ModeStructure structure;
  std::vector<MebState> states;
};

MebBasis meb_expand(const ModeStructure& s, const GeneratingSet& gs);

}  // namespace entkit
