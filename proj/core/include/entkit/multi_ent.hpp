/*
 * Modal and partitional ent of mode groups, the ent vector and ent array,
 * net/absolute ent against an ensemble normalizer, and genuine-multipartite
 * (GM) ent for pure parents.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entkit/convex_roof.hpp"
#include "entkit/tensor_core.hpp"

namespace entkit {

inline constexpr double PURE_REDUCTION_TOL = 1e-8;

struct Partition {
  std::vector<ModeList> blocks;

  int T() const { return static_cast<int>(blocks.size()); }
  ModeList members() const;  // ascending
  std::string str() const;   // e.g. "(1|2,3)"
  bool operator==(const Partition& o) const { return blocks == o.blocks; }
};

// All partitions of `group` into exactly T blocks. Blocks are ordered by size
// and then lexicographically; partitions by their block-size profile and then
// lexicographically.
std::vector<Partition> set_partitions(const ModeList& group, int T);

// Block structure (n'_1, ..., n'_T) with n'_q the product of member sizes.
ModeStructure block_structure(const ModeStructure& s, const Partition& part);
// The same amplitudes with modes reordered so blocks are contiguous and read
// under the block structure.
StateVector regroup(const StateVector& psi, const Partition& part);

// Modal ent of a group whose reduction is pure.
double modal_ent(const StateVector& parent, const ModeList& group);
double modal_ent_formation(const DensityMatrix& rho, const RoofGrid& grid = {});

// Partitional ent of a pure parent; the partition must cover a group whose
// reduction is pure.
double partitional_ent(const StateVector& parent, const Partition& part);
// Convex roof of the partitional ent; rho lives on the partition's group
// (modes relabeled 1..S in ascending order of the original labels).
double partitional_ent_formation(const DensityMatrix& rho, const Partition& local_part, const RoofGrid& grid = {});

struct EntCell {
  std::optional<double> value;
  bool formation = false;  // reduction was mixed; value is a convex-roof estimate
  std::string note;        // reason when unavailable
};

struct EntVector {
  ModeStructure structure;
  // rows[k-2] holds the k-subsets in nCk order and their cells.
  std::vector<std::vector<ModeList>> groups;
  std::vector<std::vector<EntCell>> rows;
};

EntVector ent_vector(const StateVector& psi, const RoofGrid& grid = {});

struct PartitionalEntVector {
  ModeList group;
  // rows[T-2] holds all T-partitions of the group and their cells.
  std::vector<std::vector<Partition>> partitions;
  std::vector<std::vector<EntCell>> rows;
};

PartitionalEntVector partitional_ent_vector(const StateVector& psi, const ModeList& group, const RoofGrid& grid = {});

struct EntArray {
  ModeStructure structure;
  std::vector<std::vector<PartitionalEntVector>> rows;  // rows[k-2] over k-subsets

  std::size_t cell_count() const;
};

EntArray ent_array(const StateVector& psi, const RoofGrid& grid = {}, int jobs = 1);

double one_norm(const EntVector& v);  // throws if any cell is unavailable
double one_norm(const EntArray& a);

struct EnsembleOptions {
  int random_states = 1000;
  std::uint64_t seed = 1;
  bool include_a13 = true;
  bool include_meb = true;
  RoofGrid grid{};
  int jobs = 1;
};

struct Normalizer {
  double value = 0.0;
  std::string descriptor;
  std::size_t members = 0;   // ensemble members with a fully available norm
  std::size_t skipped = 0;   // members skipped for unavailable cells
  CVec maximizer;            // amplitudes of the member attaining the maximum
};

Normalizer net_ent_normalizer(const ModeStructure& s, const EnsembleOptions& opts = {});
Normalizer abs_ent_normalizer(const ModeStructure& s, const EnsembleOptions& opts = {});

// Approximate: divides by an ensemble maximum, a lower bound on the true one.
double net_ent(const StateVector& psi, const Normalizer& norm, const RoofGrid& grid = {});
double abs_ent(const StateVector& psi, const Normalizer& norm, const RoofGrid& grid = {});

struct GmResult {
  double value = 0.0;
  Partition argmin;
};

GmResult gm_ent(const StateVector& psi);
GmResult gm_k_ent(const StateVector& psi, int k);
GmResult gm_concurrence_pure(const StateVector& psi);

}  // namespace entkit
