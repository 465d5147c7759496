#include "entkit/multi_ent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entkit/ent_measure.hpp"
#include "entkit/errors.hpp"
#include "entkit/meb.hpp"
#include "entkit/parallel.hpp"
#include "entkit/tgx_construct.hpp"

namespace entkit {

ModeList Partition::members() const {
  ModeList all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t q = 0; q < blocks.size(); ++q) {
    if (q) os << "|";
    for (std::size_t i = 0; i < blocks[q].size(); ++i) os << (i ? "," : "") << blocks[q][i];
  }
  os << ")";
  return os.str();
}

namespace {

bool block_less(const ModeList& a, const ModeList& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::size_t> profile(const Partition& p) {
  std::vector<std::size_t> sizes;
  for (const auto& b : p.blocks) sizes.push_back(b.size());
  return sizes;
}

}  // namespace

std::vector<Partition> set_partitions(const ModeList& group, int T) {
  const int S = static_cast<int>(group.size());
  std::vector<Partition> out;
  if (T < 1 || T > S) return out;
  ModeList sorted = group;
  std::sort(sorted.begin(), sorted.end());

  // restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i-1])
  std::vector<int> label(S, 0);
  auto emit = [&] {
    Partition p;
    p.blocks.assign(T, {});
    for (int i = 0; i < S; ++i) p.blocks[label[i]].push_back(sorted[i]);
    std::sort(p.blocks.begin(), p.blocks.end(), block_less);
    out.push_back(std::move(p));
  };
  auto grow = [&](auto&& self, int i, int used) -> void {
    if (i == S) {
      if (used == T) emit();
      return;
    }
    if (used + (S - i) < T) return;
    for (int l = 0; l <= std::min(used, T - 1); ++l) {
      label[i] = l;
      self(self, i + 1, std::max(used, l + 1));
    }
  };
  if (S > 0) grow(grow, 1, 1);

  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    const auto pa = profile(a), pb = profile(b);
    if (pa != pb) return pa < pb;
    return a.blocks < b.blocks;
  });
  return out;
}

ModeStructure block_structure(const ModeStructure& s, const Partition& part) {
  std::vector<int> sizes;
  for (const auto& block : part.blocks) {
    int size = 1;
    for (int m : block) size *= s.size_of(m);
    sizes.push_back(size);
  }
  return ModeStructure(std::move(sizes));
}

StateVector regroup(const StateVector& psi, const Partition& part) {
  ModeList order;
  for (const auto& block : part.blocks) order.insert(order.end(), block.begin(), block.end());
  if (static_cast<int>(order.size()) != psi.structure().N())
    throw std::invalid_argument("regroup needs a partition of every mode");
  const StateVector permuted = permute_modes(psi, order);
  return StateVector(block_structure(psi.structure(), part), permuted.amplitudes());
}

namespace {

ModeList sorted_group(const ModeList& g) {
  ModeList s = g;
  std::sort(s.begin(), s.end());
  return s;
}

void require_pure(const DensityMatrix& reduction, const ModeList& group, const char* formation_name) {
  const double p = purity(reduction);
  if (p < 1.0 - PURE_REDUCTION_TOL) {
    std::ostringstream os;
    os << "reduction to modes (";
    for (std::size_t i = 0; i < group.size(); ++i) os << (i ? "," : "") << group[i];
    os << ") is mixed (purity " << p << "); use " << formation_name;
    throw std::invalid_argument(os.str());
  }
}

// Partitional ent from the block purities of a pure parent.
double partitional_from_parent(const StateVector& parent, const Partition& part) {
  const ModeStructure blocks = block_structure(parent.structure(), part);
  const EntContext& ctx = ent_context(blocks);
  std::vector<double> purities;
  for (const auto& block : part.blocks) purities.push_back(purity(partial_trace(parent, sorted_group(block))));
  return ent_from_purities(purities, ctx);
}

Partition localize(const Partition& part, const ModeList& group_sorted) {
  Partition local;
  for (const auto& block : part.blocks) {
    ModeList b;
    for (int m : block)
      b.push_back(static_cast<int>(std::lower_bound(group_sorted.begin(), group_sorted.end(), m) - group_sorted.begin()) + 1);
    local.blocks.push_back(std::move(b));
  }
  return local;
}

}  // namespace

double modal_ent(const StateVector& parent, const ModeList& group) {
  const ModeStructure& s = parent.structure();
  if (group.size() < 2) throw std::invalid_argument("modal ent needs at least two modes in the group");
  const ModeList g = sorted_group(group);
  if (static_cast<int>(g.size()) == s.N()) {
    sub_structure(s, group);  // label validation
    return ent_value(parent);
  }
  require_pure(partial_trace(parent, g), g, "modal_ent_formation");
  const EntContext& ctx = ent_context(sub_structure(s, g));
  std::vector<double> purities;
  for (int m : g) purities.push_back(purity(partial_trace(parent, {m})));
  return ent_from_purities(purities, ctx);
}

double modal_ent_formation(const DensityMatrix& rho, const RoofGrid& grid) {
  return roof_rank2(rho, [](const StateVector& w) { return ent_value(w); }, grid).value;
}

double partitional_ent(const StateVector& parent, const Partition& part) {
  if (part.T() < 2) throw std::invalid_argument("partitional ent needs at least two blocks");
  const ModeList g = part.members();
  sub_structure(parent.structure(), g);
  if (static_cast<int>(g.size()) < parent.structure().N())
    require_pure(partial_trace(parent, g), g, "partitional_ent_formation");
  return partitional_from_parent(parent, part);
}

double partitional_ent_formation(const DensityMatrix& rho, const Partition& local_part, const RoofGrid& grid) {
  return roof_rank2(rho, [&](const StateVector& w) { return partitional_from_parent(w, local_part); }, grid).value;
}

namespace {

// Evaluates `pure_value` when the reduction is pure, otherwise a rank-limited
// convex roof of `member_value` over the reduction.
template <typename PureFn, typename MemberFn>
EntCell evaluate_cell(const DensityMatrix& reduction, bool whole, PureFn&& pure_value, MemberFn&& member_value,
                      const RoofGrid& grid) {
  EntCell cell;
  if (whole || purity(reduction) >= 1.0 - PURE_REDUCTION_TOL) {
    cell.value = pure_value();
    return cell;
  }
  cell.formation = true;
  const int rank = numerical_rank(reduction);
  if (rank > RMAX_ROOF) {
    cell.note = "reduction rank " + std::to_string(rank) + " exceeds " + std::to_string(RMAX_ROOF);
    return cell;
  }
  cell.value = roof_rank2(reduction, member_value, grid).value;
  return cell;
}

}  // namespace

EntVector ent_vector(const StateVector& psi, const RoofGrid& grid) {
  const ModeStructure& s = psi.structure();
  if (s.N() < 2) throw UnsupportedStructure("ent vector needs at least two modes");
  EntVector v;
  v.structure = s;
  ModeList all(s.N());
  std::iota(all.begin(), all.end(), 1);
  for (int k = 2; k <= s.N(); ++k) {
    std::vector<ModeList> groups = n_choose_k(all, k);
    std::vector<EntCell> cells;
    for (const auto& g : groups) {
      const bool whole = k == s.N();
      const DensityMatrix red = whole ? DensityMatrix::projector(psi) : partial_trace(psi, g);
      cells.push_back(evaluate_cell(
          red, whole, [&] { return whole ? ent_value(psi) : modal_ent(psi, g); },
          [](const StateVector& w) { return ent_value(w); }, grid));
    }
    v.groups.push_back(std::move(groups));
    v.rows.push_back(std::move(cells));
  }
  return v;
}

PartitionalEntVector partitional_ent_vector(const StateVector& psi, const ModeList& group, const RoofGrid& grid) {
  const ModeStructure& s = psi.structure();
  if (group.size() < 2) throw std::invalid_argument("partitional ent vector needs at least two modes");
  PartitionalEntVector xi;
  xi.group = sorted_group(group);
  sub_structure(s, xi.group);
  const bool whole = static_cast<int>(xi.group.size()) == s.N();
  const DensityMatrix red = whole ? DensityMatrix::projector(psi) : partial_trace(psi, xi.group);
  const bool pure = whole || purity(red) >= 1.0 - PURE_REDUCTION_TOL;
  const int S = static_cast<int>(xi.group.size());
  for (int T = 2; T <= S; ++T) {
    std::vector<Partition> parts = set_partitions(xi.group, T);
    std::vector<EntCell> cells;
    for (const auto& p : parts) {
      const Partition local = localize(p, xi.group);
      cells.push_back(evaluate_cell(
          red, pure, [&] { return partitional_from_parent(psi, p); },
          [&local](const StateVector& w) { return partitional_from_parent(w, local); }, grid));
    }
    xi.partitions.push_back(std::move(parts));
    xi.rows.push_back(std::move(cells));
  }
  return xi;
}

std::size_t EntArray::cell_count() const {
  std::size_t count = 0;
  for (const auto& row : rows)
    for (const auto& xi : row)
      for (const auto& r : xi.rows) count += r.size();
  return count;
}

EntArray ent_array(const StateVector& psi, const RoofGrid& grid, int jobs) {
  const ModeStructure& s = psi.structure();
  if (s.N() < 2) throw UnsupportedStructure("ent array needs at least two modes");
  EntArray a;
  a.structure = s;
  ModeList all(s.N());
  std::iota(all.begin(), all.end(), 1);
  for (int k = 2; k <= s.N(); ++k) {
    const std::vector<ModeList> groups = n_choose_k(all, k);
    std::vector<PartitionalEntVector> row(groups.size());
    parallel_for(groups.size(), jobs, [&](std::size_t i) { row[i] = partitional_ent_vector(psi, groups[i], grid); });
    a.rows.push_back(std::move(row));
  }
  return a;
}

namespace {

double cell_sum(const std::vector<EntCell>& cells) {
  double acc = 0.0;
  for (const auto& c : cells) {
    if (!c.value) throw std::invalid_argument("norm undefined: a cell is unavailable (" + c.note + ")");
    acc += std::abs(*c.value);
  }
  return acc;
}

}  // namespace

double one_norm(const EntVector& v) {
  double acc = 0.0;
  for (const auto& row : v.rows) acc += cell_sum(row);
  return acc;
}

double one_norm(const EntArray& a) {
  double acc = 0.0;
  for (const auto& row : a.rows)
    for (const auto& xi : row)
      for (const auto& r : xi.rows) acc += cell_sum(r);
  return acc;
}

namespace {

template <typename NormFn>
Normalizer ensemble_max(const ModeStructure& s, const EnsembleOptions& opts, const char* what, NormFn&& norm_of) {
  std::vector<StateVector> members;
  std::size_t a13_count = 0, meb_count = 0;
  if (opts.include_a13) {
    for (const auto& row : a13_all(s)) members.push_back(state_from_levels(s, row));
    a13_count = members.size();
  }
  if (opts.include_meb) {
    for (int L : lstar_set(s)) {
      if (s.n() % L != 0) continue;
      for (const auto& gs : generating_sets(s, L, 16))
        for (auto& st : meb_expand(s, gs).states) members.push_back(std::move(st.state));
    }
    meb_count = members.size() - a13_count;
  }
  std::mt19937_64 rng(opts.seed);
  for (int r = 0; r < opts.random_states; ++r) members.push_back(random_pure_state(s, rng));

  std::vector<std::optional<double>> norms(members.size());
  parallel_for(members.size(), opts.jobs, [&](std::size_t i) {
    try {
      norms[i] = norm_of(members[i]);
    } catch (const std::invalid_argument&) {
      norms[i].reset();
    }
  });

  Normalizer out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!norms[i]) {
      ++out.skipped;
      continue;
    }
    ++out.members;
    if (*norms[i] > out.value) {
      out.value = *norms[i];
      out.maximizer = members[i].amplitudes();
    }
  }
  std::ostringstream os;
  os << what << " ensemble max over " << s.str() << ": a13=" << a13_count << " meb=" << meb_count
     << " random=" << opts.random_states << " seed=" << opts.seed << " grid=" << opts.grid.n_theta << "x"
     << opts.grid.n_chi << " (approximate lower bound on the true maximum)";
  out.descriptor = os.str();
  if (out.members == 0 || out.value <= 0.0) throw std::invalid_argument("ensemble produced no usable normalizer");
  return out;
}

}  // namespace

Normalizer net_ent_normalizer(const ModeStructure& s, const EnsembleOptions& opts) {
  return ensemble_max(s, opts, "net ent", [&](const StateVector& m) { return one_norm(ent_vector(m, opts.grid)); });
}

Normalizer abs_ent_normalizer(const ModeStructure& s, const EnsembleOptions& opts) {
  return ensemble_max(s, opts, "absolute ent", [&](const StateVector& m) { return one_norm(ent_array(m, opts.grid)); });
}

double net_ent(const StateVector& psi, const Normalizer& norm, const RoofGrid& grid) {
  return one_norm(ent_vector(psi, grid)) / norm.value;
}

double abs_ent(const StateVector& psi, const Normalizer& norm, const RoofGrid& grid) {
  return one_norm(ent_array(psi, grid)) / norm.value;
}

namespace {

template <typename F>
GmResult minimize_over(const std::vector<Partition>& parts, F&& value_of) {
  if (parts.empty()) throw std::invalid_argument("no partitions to minimize over");
  GmResult best;
  best.value = value_of(parts.front());
  best.argmin = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const double v = value_of(parts[i]);
    if (v < best.value) {
      best.value = v;
      best.argmin = parts[i];
    }
  }
  return best;
}

ModeList all_modes(const ModeStructure& s) {
  ModeList all(s.N());
  std::iota(all.begin(), all.end(), 1);
  return all;
}

}  // namespace

GmResult gm_ent(const StateVector& psi) { return gm_k_ent(psi, 2); }

GmResult gm_k_ent(const StateVector& psi, int k) {
  const ModeStructure& s = psi.structure();
  if (k < 2 || k > s.N()) throw std::invalid_argument("k must lie in 2..N");
  return minimize_over(set_partitions(all_modes(s), k), [&](const Partition& p) { return partitional_from_parent(psi, p); });
}

GmResult gm_concurrence_pure(const StateVector& psi) {
  const ModeStructure& s = psi.structure();
  if (s.N() < 2) throw UnsupportedStructure("GM concurrence needs at least two modes");
  return minimize_over(set_partitions(all_modes(s), 2), [&](const Partition& p) {
    const double pa = purity(partial_trace(psi, p.blocks.front()));
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - pa)));
  });
}

}  // namespace entkit
