#include "tork/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace tork {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_start_(rows + 1, 0) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols) {
  build(std::move(entries), false);
}

SparseMatrix SparseMatrix::accumulate(std::size_t rows, std::size_t cols,
                                      std::vector<MatrixEntry> entries) {
  SparseMatrix out;
  out.rows_ = rows;
  out.cols_ = cols;
  out.build(std::move(entries), true);
  return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<MatrixEntry> entries;
  entries.reserve(n);
  for (std::size_t k = 0; k < n; ++k) entries.push_back({k, k, Rational(1)});
  return SparseMatrix(n, n, std::move(entries));
}

void SparseMatrix::build(std::vector<MatrixEntry> entries, bool sum_duplicates) {
  if (cols_ > UINT32_MAX) throw std::invalid_argument("matrix has too many columns");
  for (const auto& e : entries) {
    if (e.row >= rows_ || e.col >= cols_) {
      throw std::invalid_argument("matrix entry (" + std::to_string(e.row) + ", " +
                                  std::to_string(e.col) + ") outside " +
                                  std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }
  std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  row_start_.assign(rows_ + 1, 0);
  col_index_.clear();
  values_.clear();
  col_index_.reserve(entries.size());
  values_.reserve(entries.size());

  std::vector<std::size_t> row_of;
  row_of.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size();) {
    std::size_t r = entries[k].row;
    std::size_t c = entries[k].col;
    Rational v = std::move(entries[k].value);
    std::size_t next = k + 1;
    while (next < entries.size() && entries[next].row == r && entries[next].col == c) {
      if (!sum_duplicates) {
        throw std::invalid_argument("duplicate matrix entry at (" + std::to_string(r) + ", " +
                                    std::to_string(c) + ")");
      }
      v += entries[next].value;
      ++next;
    }
    k = next;
    if (v == 0) continue;
    row_of.push_back(r);
    col_index_.push_back(static_cast<std::uint32_t>(c));
    values_.push_back(std::move(v));
  }
  for (std::size_t r : row_of) ++row_start_[r + 1];
  std::partial_sum(row_start_.begin(), row_start_.end(), row_start_.begin());
}

std::span<const std::uint32_t> SparseMatrix::row_cols(std::size_t r) const {
  return {col_index_.data() + row_start_[r], row_start_[r + 1] - row_start_[r]};
}

std::span<const Rational> SparseMatrix::row_values(std::size_t r) const {
  return {values_.data() + row_start_[r], row_start_[r + 1] - row_start_[r]};
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  auto cols = row_cols(r);
  auto it = std::lower_bound(cols.begin(), cols.end(), static_cast<std::uint32_t>(c));
  if (it == cols.end() || *it != c) return Rational(0);
  return row_values(r)[static_cast<std::size_t>(it - cols.begin())];
}

std::vector<MatrixEntry> SparseMatrix::entries() const {
  std::vector<MatrixEntry> out;
  out.reserve(values_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k) {
      out.push_back({r, col_index_[k], values_[k]});
    }
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<MatrixEntry> t;
  t.reserve(values_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k) {
      t.push_back({col_index_[k], r, values_[k]});
    }
  }
  return SparseMatrix(cols_, rows_, std::move(t));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_start_ == b.row_start_ &&
         a.col_index_ == b.col_index_ && a.values_ == b.values_;
}

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// row - factor * pivot, where both rows share their leading column and the
// pivot is normalized to a leading 1.
SparseRow eliminate_lead(const SparseRow& row, const SparseRow& pivot) {
  const Rational factor = row.front().second;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 1;
  std::size_t b = 1;
  Rational scratch;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      scratch = -factor * pivot[b].second;
      out.emplace_back(pivot[b].first, scratch);
      ++b;
    } else {
      scratch = row[a].second - factor * pivot[b].second;
      if (scratch != 0) out.emplace_back(row[a].first, scratch);
      ++a;
      ++b;
    }
  }
  return out;
}

// Leading-term Gaussian elimination of one connected block.
std::size_t block_rank(std::vector<SparseRow> rows, std::size_t num_cols) {
  std::sort(rows.begin(), rows.end(),
            [](const SparseRow& x, const SparseRow& y) { return x.size() < y.size(); });
  std::vector<std::int64_t> pivot_of(num_cols, -1);
  std::vector<SparseRow> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      const auto lead = row.front().first;
      const auto p = pivot_of[lead];
      if (p < 0) {
        const Rational inv = 1 / row.front().second;
        for (auto& [c, v] : row) v *= inv;
        pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      row = eliminate_lead(row, pivots[static_cast<std::size_t>(p)]);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t rank(const SparseMatrix& a) {
  if (a.is_zero()) return 0;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();

  DisjointSets sets(nr + nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (auto c : a.row_cols(r)) sets.unite(r, nr + c);
  }

  // Bucket nonempty rows and their columns by component root.
  std::vector<std::int64_t> block_of(nr + nc, -1);
  std::vector<std::vector<std::size_t>> block_rows;
  std::vector<std::vector<std::uint32_t>> block_cols;
  for (std::size_t r = 0; r < nr; ++r) {
    if (a.row_cols(r).empty()) continue;
    const auto root = sets.find(r);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<std::int64_t>(block_rows.size());
      block_rows.emplace_back();
      block_cols.emplace_back();
    }
    block_rows[static_cast<std::size_t>(block_of[root])].push_back(r);
  }
  std::vector<std::uint32_t> col_count(nc, 0);
  for (std::size_t r = 0; r < nr; ++r) {
    for (auto c : a.row_cols(r)) ++col_count[c];
  }
  for (std::size_t c = 0; c < nc; ++c) {
    if (col_count[c] == 0) continue;
    block_cols[static_cast<std::size_t>(block_of[sets.find(nr + c)])].push_back(
        static_cast<std::uint32_t>(c));
  }

  std::size_t total = 0;
  std::vector<std::uint32_t> local(nc, 0);
  for (std::size_t b = 0; b < block_rows.size(); ++b) {
    const auto& rows = block_rows[b];
    auto& cols = block_cols[b];
    if (rows.size() == 1 || cols.size() == 1) {
      total += 1;
      continue;
    }
    // Sparse columns first keeps fill-in low.
    std::stable_sort(cols.begin(), cols.end(), [&](std::uint32_t x, std::uint32_t y) {
      return col_count[x] < col_count[y];
    });
    for (std::size_t k = 0; k < cols.size(); ++k) local[cols[k]] = static_cast<std::uint32_t>(k);

    std::vector<SparseRow> block;
    block.reserve(rows.size());
    for (auto r : rows) {
      SparseRow row;
      auto rc = a.row_cols(r);
      auto rv = a.row_values(r);
      row.reserve(rc.size());
      for (std::size_t k = 0; k < rc.size(); ++k) row.emplace_back(local[rc[k]], rv[k]);
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      block.push_back(std::move(row));
    }
    total += block_rank(std::move(block), cols.size());
  }
  return total;
}

std::size_t nullity(const SparseMatrix& a) { return a.cols() - rank(a); }

SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("compose: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
  std::vector<MatrixEntry> out;
  std::vector<Rational> acc(b.cols());
  std::vector<bool> touched(b.cols(), false);
  std::vector<std::uint32_t> touched_list;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto ac = a.row_cols(r);
    auto av = a.row_values(r);
    for (std::size_t k = 0; k < ac.size(); ++k) {
      auto bc = b.row_cols(ac[k]);
      auto bv = b.row_values(ac[k]);
      for (std::size_t l = 0; l < bc.size(); ++l) {
        if (!touched[bc[l]]) {
          touched[bc[l]] = true;
          touched_list.push_back(bc[l]);
          acc[bc[l]] = 0;
        }
        acc[bc[l]] += av[k] * bv[l];
      }
    }
    for (auto c : touched_list) {
      if (acc[c] != 0) out.push_back({r, c, acc[c]});
      touched[c] = false;
    }
    touched_list.clear();
  }
  return SparseMatrix(a.rows(), b.cols(), std::move(out));
}

}  // namespace tork
