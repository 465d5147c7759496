#include "entkit/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entkit/errors.hpp"

namespace entkit {

ModeStructure::ModeStructure(std::vector<int> modes) : modes_(std::move(modes)) {
  if (modes_.empty()) throw UnsupportedStructure("mode structure needs at least one mode");
  long long n = 1;
  for (std::size_t m = 0; m < modes_.size(); ++m) {
    if (modes_[m] < 2)
      throw UnsupportedStructure("mode " + std::to_string(m + 1) + " has size " +
                                 std::to_string(modes_[m]) + "; every mode needs at least 2 levels");
    n *= modes_[m];
    if (n > (1LL << 24)) throw UnsupportedStructure("total dimension too large");
  }
  n_ = static_cast<int>(n);
  n_max_ = *std::max_element(modes_.begin(), modes_.end());
}

ModeStructure ModeStructure::parse(const std::string& text) {
  std::vector<int> modes;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw std::invalid_argument("malformed mode list '" + text + "'");
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("malformed mode list '" + text + "'");
    modes.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == 'x' || c == 'X') {
      flush();
    } else if (c != ' ') {
      token.push_back(c);
    }
  }
  flush();
  return ModeStructure(std::move(modes));
}

int ModeStructure::size_of(int mode) const {
  if (mode < 1 || mode > N()) throw IndexError("mode label " + std::to_string(mode) + " out of range 1.." + std::to_string(N()));
  return modes_[mode - 1];
}

int ModeStructure::sum_of_sizes() const { return std::accumulate(modes_.begin(), modes_.end(), 0); }

std::string ModeStructure::str() const {
  std::ostringstream os;
  for (std::size_t m = 0; m < modes_.size(); ++m) os << (m ? "x" : "") << modes_[m];
  return os.str();
}

int indical_register(const MultiIndex& a, const ModeStructure& s) {
  if (static_cast<int>(a.size()) != s.N())
    throw IndexError("multi-index has " + std::to_string(a.size()) + " components for " + std::to_string(s.N()) + " modes");
  int v = 0;
  for (int m = 0; m < s.N(); ++m) {
    const int nm = s.modes()[m];
    if (a[m] < 1 || a[m] > nm)
      throw IndexError("component " + std::to_string(a[m]) + " of mode " + std::to_string(m + 1) + " outside 1.." + std::to_string(nm));
    v = v * nm + (a[m] - 1);
  }
  return v + 1;
}

MultiIndex inverse_indical(int v, const ModeStructure& s) {
  if (v < 1 || v > s.n()) throw IndexError("level " + std::to_string(v) + " outside 1.." + std::to_string(s.n()));
  MultiIndex a(s.N());
  int rest = v - 1;
  for (int m = s.N() - 1; m >= 0; --m) {
    a[m] = rest % s.modes()[m] + 1;
    rest /= s.modes()[m];
  }
  return a;
}

StateVector::StateVector(ModeStructure s, CVec amplitudes, Unchecked)
    : s_(std::move(s)), amp_(std::move(amplitudes)) {}

StateVector::StateVector(ModeStructure s, CVec amplitudes) : StateVector(std::move(s), std::move(amplitudes), Unchecked{}) {
  if (amp_.size() != s_.n())
    throw ValidationError("state has " + std::to_string(amp_.size()) + " amplitudes, structure " + s_.str() + " needs " + std::to_string(s_.n()));
  const double norm2 = amp_.squaredNorm();
  if (std::abs(norm2 - 1.0) > EPS_NORM) throw ValidationError("state is not normalized (norm^2 = " + std::to_string(norm2) + ")");
}

StateVector StateVector::normalized(ModeStructure s, CVec amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw ValidationError("cannot normalize the zero vector");
  amplitudes /= norm;
  return StateVector(std::move(s), std::move(amplitudes));
}

StateVector StateVector::basis(ModeStructure s, int level) {
  if (level < 1 || level > s.n()) throw IndexError("level " + std::to_string(level) + " outside 1.." + std::to_string(s.n()));
  CVec a = CVec::Zero(s.n());
  a(level - 1) = 1.0;
  return StateVector(std::move(s), std::move(a), Unchecked{});
}

Cx StateVector::amplitude(int level) const {
  if (level < 1 || level > dim()) throw IndexError("level " + std::to_string(level) + " outside 1.." + std::to_string(dim()));
  return amp_(level - 1);
}

DensityMatrix::DensityMatrix(ModeStructure s, CMat entries, Unchecked) : s_(std::move(s)), m_(std::move(entries)) {}

DensityMatrix::DensityMatrix(ModeStructure s, CMat entries) : DensityMatrix(std::move(s), std::move(entries), Unchecked{}) {
  if (m_.rows() != s_.n() || m_.cols() != s_.n())
    throw ValidationError("density matrix shape does not match structure " + s_.str());
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > EPS_NORM) throw ValidationError("density matrix is not Hermitian");
  if (std::abs(m_.trace() - Cx(1.0)) > EPS_NORM) throw ValidationError("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMat> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -EPS_NORM) throw ValidationError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::trusted(ModeStructure s, CMat entries) {
  return DensityMatrix(std::move(s), std::move(entries), Unchecked{});
}

DensityMatrix DensityMatrix::projector(const StateVector& psi) {
  return DensityMatrix(psi.structure(), psi.amplitudes() * psi.amplitudes().adjoint(), Unchecked{});
}

Cx DensityMatrix::entry(int a, int b) const {
  if (a < 1 || a > dim() || b < 1 || b > dim()) throw IndexError("density matrix entry out of range");
  return m_(a - 1, b - 1);
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_ab|^2 for Hermitian rho
  return rho.entries().squaredNorm();
}

namespace {

void check_labels(const ModeStructure& s, const ModeList& m) {
  if (m.empty()) throw std::invalid_argument("mode list is empty");
  std::vector<char> seen(s.N() + 1, 0);
  for (int label : m) {
    if (label < 1 || label > s.N())
      throw IndexError("mode label " + std::to_string(label) + " outside 1.." + std::to_string(s.N()));
    if (seen[label]) throw std::invalid_argument("mode label " + std::to_string(label) + " repeated");
    seen[label] = 1;
  }
}

// For the kept/traced split, full[t * nk + k] is the 0-based parent index whose
// kept modes read k and traced modes read t (both mixed-radix, original order).
struct Split {
  int nk = 1;
  int nt = 1;
  std::vector<int> full;
};

Split split_indices(const ModeStructure& s, const ModeList& keep) {
  std::vector<char> kept(s.N(), 0);
  for (int label : keep) kept[label - 1] = 1;
  Split sp;
  for (int m = 0; m < s.N(); ++m) (kept[m] ? sp.nk : sp.nt) *= s.modes()[m];
  sp.full.resize(s.n());
  for (int v = 0; v < s.n(); ++v) {
    int rest = v;
    int k = 0, t = 0, kw = 1, tw = 1;
    for (int m = s.N() - 1; m >= 0; --m) {
      const int digit = rest % s.modes()[m];
      rest /= s.modes()[m];
      if (kept[m]) {
        k += digit * kw;
        kw *= s.modes()[m];
      } else {
        t += digit * tw;
        tw *= s.modes()[m];
      }
    }
    sp.full[t * sp.nk + k] = v;
  }
  return sp;
}

std::vector<int> permutation_map(const ModeStructure& s, const ModeList& m) {
  std::vector<int> map(s.n());
  const ModeStructure target = sub_structure(s, m);
  for (int v = 1; v <= s.n(); ++v) {
    const MultiIndex a = inverse_indical(v, s);
    MultiIndex b(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) b[j] = a[m[j] - 1];
    map[v - 1] = indical_register(b, target) - 1;
  }
  return map;
}

void check_permutation(const ModeStructure& s, const ModeList& m) {
  check_labels(s, m);
  if (static_cast<int>(m.size()) != s.N()) throw std::invalid_argument("mode list is not a permutation of all modes");
}

}  // namespace

ModeStructure sub_structure(const ModeStructure& s, const ModeList& m) {
  check_labels(s, m);
  std::vector<int> sizes;
  sizes.reserve(m.size());
  for (int label : m) sizes.push_back(s.modes()[label - 1]);
  return ModeStructure(std::move(sizes));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const ModeList& keep) {
  const ModeStructure& s = rho.structure();
  check_labels(s, keep);
  if (!std::is_sorted(keep.begin(), keep.end()))
    throw std::invalid_argument("partial_trace needs ascending labels; use reduced_for_modes for other orders");
  const Split sp = split_indices(s, keep);
  const CMat& r = rho.entries();
  CMat out = CMat::Zero(sp.nk, sp.nk);
  for (int t = 0; t < sp.nt; ++t) {
    const int* row = &sp.full[t * sp.nk];
    for (int b = 0; b < sp.nk; ++b)
      for (int a = 0; a < sp.nk; ++a) out(a, b) += r(row[a], row[b]);
  }
  return DensityMatrix::trusted(sub_structure(s, keep), std::move(out));
}

DensityMatrix partial_trace(const StateVector& psi, const ModeList& keep) {
  const ModeStructure& s = psi.structure();
  check_labels(s, keep);
  if (!std::is_sorted(keep.begin(), keep.end()))
    throw std::invalid_argument("partial_trace needs ascending labels; use reduced_for_modes for other orders");
  const Split sp = split_indices(s, keep);
  CMat x(sp.nk, sp.nt);
  for (int t = 0; t < sp.nt; ++t)
    for (int k = 0; k < sp.nk; ++k) x(k, t) = psi.amplitudes()(sp.full[t * sp.nk + k]);
  return DensityMatrix::trusted(sub_structure(s, keep), x * x.adjoint());
}

DensityMatrix permute_modes(const DensityMatrix& rho, const ModeList& m) {
  check_permutation(rho.structure(), m);
  const std::vector<int> map = permutation_map(rho.structure(), m);
  const CMat& r = rho.entries();
  CMat out(r.rows(), r.cols());
  for (int b = 0; b < r.cols(); ++b)
    for (int a = 0; a < r.rows(); ++a) out(map[a], map[b]) = r(a, b);
  return DensityMatrix::trusted(sub_structure(rho.structure(), m), std::move(out));
}

StateVector permute_modes(const StateVector& psi, const ModeList& m) {
  check_permutation(psi.structure(), m);
  const std::vector<int> map = permutation_map(psi.structure(), m);
  CVec out(psi.dim());
  for (int a = 0; a < psi.dim(); ++a) out(map[a]) = psi.amplitudes()(a);
  return StateVector::normalized(sub_structure(psi.structure(), m), std::move(out));
}

CMat mode_permutation_matrix(const ModeStructure& s, const ModeList& m) {
  check_permutation(s, m);
  const std::vector<int> map = permutation_map(s, m);
  CMat p = CMat::Zero(s.n(), s.n());
  for (int a = 0; a < s.n(); ++a) p(map[a], a) = 1.0;
  return p;
}

namespace {

// Position of each requested label within the ascending list, as a permutation.
ModeList relative_order(const ModeList& m) {
  ModeList sorted = m;
  std::sort(sorted.begin(), sorted.end());
  ModeList order(m.size());
  for (std::size_t j = 0; j < m.size(); ++j)
    order[j] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), m[j]) - sorted.begin()) + 1;
  return order;
}

}  // namespace

DensityMatrix reduced_for_modes(const DensityMatrix& rho, const ModeList& m) {
  check_labels(rho.structure(), m);
  ModeList sorted = m;
  std::sort(sorted.begin(), sorted.end());
  DensityMatrix r = partial_trace(rho, sorted);
  if (sorted == m) return r;
  return permute_modes(r, relative_order(m));
}

DensityMatrix reduced_for_modes(const StateVector& psi, const ModeList& m) {
  check_labels(psi.structure(), m);
  ModeList sorted = m;
  std::sort(sorted.begin(), sorted.end());
  DensityMatrix r = partial_trace(psi, sorted);
  if (sorted == m) return r;
  return permute_modes(r, relative_order(m));
}

std::vector<double> single_mode_purities(const StateVector& psi) {
  std::vector<double> p(psi.structure().N());
  for (int m = 1; m <= psi.structure().N(); ++m) p[m - 1] = purity(partial_trace(psi, {m}));
  return p;
}

CVec random_gaussian_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVec v(dim);
  for (int k = 0; k < dim; ++k) {
    const double re = g(rng);
    const double im = g(rng);
    v(k) = Cx(re, im);
  }
  return v;
}

StateVector random_pure_state(const ModeStructure& s, std::mt19937_64& rng) {
  return StateVector::normalized(s, random_gaussian_vector(s.n(), rng));
}

StateVector random_pure_state(const ModeStructure& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_pure_state(s, rng);
}

CMat random_unitary(int dim, std::mt19937_64& rng) {
  CMat z(dim, dim);
  for (int c = 0; c < dim; ++c) z.col(c) = random_gaussian_vector(dim, rng);
  Eigen::HouseholderQR<CMat> qr(z);
  CMat q = qr.householderQ() * CMat::Identity(dim, dim);
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVec kron(const CVec& a, const CVec& b) {
  CVec out(a.size() * b.size());
  for (int i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

bool is_unitary(const CMat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return ((u.adjoint() * u - CMat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol);
}

bool equal_up_to_phase(const CVec& a, const CVec& b, double tol) {
  if (a.size() != b.size()) return false;
  return std::abs(a.dot(b)) >= 1.0 - tol;
}

}  // namespace entkit
