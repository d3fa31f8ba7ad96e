#include "tork/koszul.hpp"

#include "tork/parallel.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace tork {

namespace {

// i-subsets of {0..m-1} as masks, lexicographic on sorted elements.
void append_subsets(int m, int start, int remaining, FaceMask current, std::vector<FaceMask>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int v = start; v <= m - remaining; ++v) {
    append_subsets(m, v + 1, remaining - 1, current | (FaceMask{1} << v), out);
  }
}

struct SubsetIndex {
  std::vector<FaceMask> subsets;
  std::unordered_map<FaceMask, std::size_t> rank;
};

std::vector<SubsetIndex> exterior_bases(int m, int max_size) {
  std::vector<SubsetIndex> out(static_cast<std::size_t>(max_size + 1));
  for (int i = 0; i <= max_size; ++i) {
    auto& idx = out[static_cast<std::size_t>(i)];
    append_subsets(m, 0, i, 0, idx.subsets);
    idx.rank.reserve(idx.subsets.size());
    for (std::size_t k = 0; k < idx.subsets.size(); ++k) idx.rank.emplace(idx.subsets[k], k);
  }
  return out;
}

void require_valid(const GradedModule& module) {
  const auto violations = validate(module);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid module: " + violations.front().message +
                                (violations.size() > 1
                                     ? " (and " + std::to_string(violations.size() - 1) + " more)"
                                     : std::string{}));
  }
}

// Column-major access to v_i : M_t -> M_{t+1}, i.e. the transposed operators.
class OperatorColumns {
 public:
  explicit OperatorColumns(const GradedModule& module)
      : module_(module),
        transposed_(static_cast<std::size_t>(module.num_vars()),
                    std::vector<SparseMatrix>(module.num_levels() > 0 ? module.num_levels() - 1 : 0)),
        ready_(transposed_.size(), std::vector<bool>(transposed_.empty() ? 0 : transposed_[0].size(), false)) {}

  const SparseMatrix& columns(int var, std::size_t level) {
    auto& slot = transposed_[static_cast<std::size_t>(var)][level];
    if (!ready_[static_cast<std::size_t>(var)][level]) {
      slot = module_.mult(var, level).transpose();
      ready_[static_cast<std::size_t>(var)][level] = true;
    }
    return slot;
  }

 private:
  const GradedModule& module_;
  std::vector<std::vector<SparseMatrix>> transposed_;
  std::vector<std::vector<bool>> ready_;
};

KoszulStrand build_strand(const GradedModule& module, std::size_t j,
                          const std::vector<SubsetIndex>& exterior) {
  const int m = module.num_vars();
  const int imax = static_cast<int>(std::min<std::size_t>(j, static_cast<std::size_t>(m)));
  OperatorColumns ops(module);

  KoszulStrand s;
  s.j = j;
  s.dims.resize(static_cast<std::size_t>(imax + 1));
  for (int i = 0; i <= imax; ++i) {
    s.dims[static_cast<std::size_t>(i)] =
        module.dim(j - static_cast<std::size_t>(i)) * exterior[static_cast<std::size_t>(i)].subsets.size();
  }
  s.d.emplace_back(0, s.dims[0]);
  for (int i = 1; i <= imax; ++i) {
    const std::size_t level = j - static_cast<std::size_t>(i);  // source level in M
    const std::size_t src_dim = module.dim(level);
    const std::size_t dst_dim = module.dim(level + 1);
    std::vector<MatrixEntry> entries;
    if (src_dim != 0 && dst_dim != 0 && level + 1 < module.num_levels()) {
      const auto& subsets = exterior[static_cast<std::size_t>(i)].subsets;
      const auto& lower_rank = exterior[static_cast<std::size_t>(i - 1)].rank;
      for (std::size_t si = 0; si < subsets.size(); ++si) {
        const FaceMask subset = subsets[si];
        int k = 0;
        for (FaceMask rest = subset; rest != 0; rest &= rest - 1, ++k) {
          const FaceMask bit = rest & -rest;
          const int var = std::countr_zero(bit);
          const std::size_t ti = lower_rank.at(subset & ~bit);
          const bool negative = (k % 2) == 1;  // (-1)^{k-1} with 1-based k
          const auto& cols = ops.columns(var, level);
          for (std::size_t b = 0; b < src_dim; ++b) {
            auto rows = cols.row_cols(b);
            auto vals = cols.row_values(b);
            for (std::size_t e = 0; e < rows.size(); ++e) {
              entries.push_back({ti * dst_dim + rows[e], si * src_dim + b,
                                 negative ? Rational(-vals[e]) : vals[e]});
            }
          }
        }
      }
    }
    s.d.emplace_back(s.dims[static_cast<std::size_t>(i - 1)], s.dims[static_cast<std::size_t>(i)],
                     std::move(entries));
  }
  return s;
}

}  // namespace

KoszulStrand strand(const GradedModule& module, std::size_t j) {
  require_valid(module);
  const int imax = static_cast<int>(std::min<std::size_t>(j, static_cast<std::size_t>(module.num_vars())));
  return build_strand(module, j, exterior_bases(module.num_vars(), imax));
}

bool differentials_square_to_zero(const KoszulStrand& s) {
  for (std::size_t i = 0; i + 1 < s.d.size(); ++i) {
    if (!compose(s.d[i], s.d[i + 1]).is_zero()) return false;
  }
  return true;
}

BettiTable betti_table(const GradedModule& module, std::optional<std::size_t> j_max,
                       const KoszulOptions& options) {
  require_valid(module);
  const int m = module.num_vars();
  const std::size_t last =
      j_max.value_or(module.is_zero() ? 0 : module.top_level() + static_cast<std::size_t>(m));
  const auto exterior = exterior_bases(m, m);

  BettiTable table(m, last);
  std::vector<std::vector<std::size_t>> columns(last + 1);
  parallel_for(last + 1, options.jobs, [&](std::size_t j) {
    const KoszulStrand s = build_strand(module, j, exterior);
    if (options.verify_dd && !differentials_square_to_zero(s)) {
      throw std::logic_error("Koszul differential does not square to zero on strand " +
                             std::to_string(j));
    }
    const std::size_t top = s.dims.size() - 1;
    std::vector<std::size_t> ranks(top + 2, 0);
    for (std::size_t i = 1; i <= top; ++i) ranks[i] = rank(s.d[i]);
    auto& column = columns[j];
    column.resize(top + 1);
    for (std::size_t i = 0; i <= top; ++i) column[i] = s.dims[i] - ranks[i] - ranks[i + 1];
  });
  for (std::size_t j = 0; j <= last; ++j) {
    for (std::size_t i = 0; i < columns[j].size(); ++i) {
      table.set(static_cast<int>(i), j, columns[j][i]);
    }
  }
  return table;
}

BettiTable stanley_reisner_betti(const SimplicialComplex& k, const KoszulOptions& options) {
  const auto m = static_cast<std::size_t>(k.num_vertices());
  return betti_table(stanley_reisner(k, std::max<std::size_t>(m, 1)), m, options);
}

}  // namespace tork
