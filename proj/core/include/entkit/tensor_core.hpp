/*
 * Multipartite indexing, state containers, partial traces and mode
 * permutations. Basis labels, mode labels and multi-index components are
 * 1-based in every public signature; storage is 0-based.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace entkit {

using Cx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double EPS_NORM = 1e-10;
inline constexpr double EPS_MATCH = 1e-9;

using MultiIndex = std::vector<int>;
using ModeList = std::vector<int>;

class ModeStructure {
 public:
  ModeStructure() = default;
  explicit ModeStructure(std::vector<int> modes);

  // Accepts "2,2,3" or "2x2x3".
  static ModeStructure parse(const std::string& text);

  int N() const { return static_cast<int>(modes_.size()); }
  int n() const { return n_; }
  int n_max() const { return n_max_; }
  int nbar_max() const { return n_ / n_max_; }
  // 1-based mode label.
  int size_of(int mode) const;
  int sum_of_sizes() const;
  const std::vector<int>& modes() const { return modes_; }
  std::string str() const;

  bool operator==(const ModeStructure& o) const { return modes_ == o.modes_; }
  bool operator!=(const ModeStructure& o) const { return !(*this == o); }
  bool operator<(const ModeStructure& o) const { return modes_ < o.modes_; }

 private:
  std::vector<int> modes_;
  int n_ = 1;
  int n_max_ = 1;
};

int indical_register(const MultiIndex& a, const ModeStructure& s);
MultiIndex inverse_indical(int v, const ModeStructure& s);

class StateVector {
 public:
  // Validates length and unit norm within EPS_NORM.
  StateVector(ModeStructure s, CVec amplitudes);
  static StateVector normalized(ModeStructure s, CVec amplitudes);
  static StateVector basis(ModeStructure s, int level);

  const ModeStructure& structure() const { return s_; }
  const CVec& amplitudes() const { return amp_; }
  Cx amplitude(int level) const;
  int dim() const { return static_cast<int>(amp_.size()); }

 private:
  struct Unchecked {};
  StateVector(ModeStructure s, CVec amplitudes, Unchecked);
  ModeStructure s_;
  CVec amp_;
};

class DensityMatrix {
 public:
  // Validates Hermiticity, unit trace and positivity within EPS_NORM.
  DensityMatrix(ModeStructure s, CMat entries);
  // Skips validation; for results of trace-preserving maps on valid inputs.
  static DensityMatrix trusted(ModeStructure s, CMat entries);
  static DensityMatrix projector(const StateVector& psi);

  const ModeStructure& structure() const { return s_; }
  const CMat& entries() const { return m_; }
  Cx entry(int a, int b) const;
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  struct Unchecked {};
  DensityMatrix(ModeStructure s, CMat entries, Unchecked);
  ModeStructure s_;
  CMat m_;
};

double purity(const DensityMatrix& rho);

// Reduction onto `keep` (ascending labels), modes kept in original order.
DensityMatrix partial_trace(const DensityMatrix& rho, const ModeList& keep);
// Same reduction computed straight from the amplitudes of a pure state.
DensityMatrix partial_trace(const StateVector& psi, const ModeList& keep);

// Relabels modes so that new mode j is old mode m[j]; m is a permutation.
DensityMatrix permute_modes(const DensityMatrix& rho, const ModeList& m);
StateVector permute_modes(const StateVector& psi, const ModeList& m);
CMat mode_permutation_matrix(const ModeStructure& s, const ModeList& m);

DensityMatrix reduced_for_modes(const DensityMatrix& rho, const ModeList& m);
DensityMatrix reduced_for_modes(const StateVector& psi, const ModeList& m);

// Purities of every single-mode reduction of a pure state.
std::vector<double> single_mode_purities(const StateVector& psi);

ModeStructure sub_structure(const ModeStructure& s, const ModeList& m);

CVec random_gaussian_vector(int dim, std::mt19937_64& rng);
StateVector random_pure_state(const ModeStructure& s, std::uint64_t seed);
StateVector random_pure_state(const ModeStructure& s, std::mt19937_64& rng);
CMat random_unitary(int dim, std::mt19937_64& rng);

CMat kron(const CMat& a, const CMat& b);
CVec kron(const CVec& a, const CVec& b);

bool is_unitary(const CMat& u, double tol = 1e-12);

// |<a|b>| >= 1 - tol
bool equal_up_to_phase(const CVec& a, const CVec& b, double tol = 1e-10);

}  // namespace entkit
