// Structure listings and seeded inputs shared by the CLI commands.
#pragma once

#include <entkit/tensor_core.hpp>
#include <entkit/tgx_construct.hpp>

#include <cstdint>
#include <vector>

namespace entkit::cli {

// Every structure with at least two modes, all sizes >= 2 and 4 <= n <= max_n.
// Ordered by n, then mode count, then mode sizes (the order of the L* listing).
std::vector<ModeStructure> structures_up_to(int max_n);

// The nine systems whose full a13 tables are listed.
std::vector<ModeStructure> all_sets_structures();

// First a13 row from level 1 at the smallest L*.
LevelSet canonical_row(const ModeStructure& s);

// p|a><a| + (1-p)|b><b| with Haar members and p in [0.2, 0.8], all from one seed.
DensityMatrix seeded_rank2_mixture(const ModeStructure& s, std::uint64_t seed);

}  // namespace entkit::cli
