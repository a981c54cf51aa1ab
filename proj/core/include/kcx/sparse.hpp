#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "kcx/error.hpp"

namespace kcx {

// Row-major sparse matrix over dense integer indices. Entries within a row
// are sorted by column and unique; zero values are never stored (structural
// sparsity: "has an entry" means "value != 0").
template <typename T>
class SparseRowMatrix {
 public:
  struct Entry {
    std::int32_t col;
    T value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseRowMatrix() = default;
  SparseRowMatrix(std::size_t n_rows, std::size_t n_cols)
      : n_cols_(static_cast<std::int32_t>(n_cols)), rows_(n_rows) {}

  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return static_cast<std::size_t>(n_cols_); }

  // Accumulates into (r, c). Call finalize() before reads.
  void add(std::size_t r, std::size_t c, T v) {
    rows_[r].push_back(Entry{static_cast<std::int32_t>(c), v});
  }

  // Sorts rows, merges duplicate columns, drops zeros.
  void finalize() {
    for (auto& row : rows_) {
      std::sort(row.begin(), row.end(),
                [](const Entry& a, const Entry& b) { return a.col < b.col; });
      std::size_t out = 0;
      for (std::size_t i = 0; i < row.size();) {
        std::int32_t col = row[i].col;
        T acc{};
        while (i < row.size() && row[i].col == col) acc += row[i++].value;
        if (acc != T{}) row[out++] = Entry{col, acc};
      }
      row.resize(out);
      row.shrink_to_fit();
    }
  }

  std::span<const Entry> row(std::size_t r) const { return rows_[r]; }

  T get(std::size_t r, std::size_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::int32_t>(c),
                               [](const Entry& e, std::int32_t col) { return e.col < col; });
    return (it != row.end() && it->col == static_cast<std::int32_t>(c)) ? it->value : T{};
  }

  T row_total(std::size_t r) const {
    T s{};
    for (const auto& e : rows_[r]) s += e.value;
    return s;
  }

  std::vector<T> col_totals() const {
    std::vector<T> totals(n_cols(), T{});
    for (const auto& row : rows_)
      for (const auto& e : row) totals[static_cast<std::size_t>(e.col)] += e.value;
    return totals;
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.size();
    return n;
  }

  SparseRowMatrix<T> transposed() const {
    SparseRowMatrix<T> t(n_cols(), n_rows());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& e : rows_[r]) t.add(static_cast<std::size_t>(e.col), r, e.value);
    t.finalize();
    return t;
  }

  // Keeps the selected rows/columns (given as sorted old-index lists) and
  // renumbers. Used by pruning.
  SparseRowMatrix<T> select(std::span<const std::int32_t> keep_rows,
                            std::span<const std::int32_t> keep_cols) const {
    std::vector<std::int32_t> col_map(n_cols(), -1);
    for (std::size_t i = 0; i < keep_cols.size(); ++i)
      col_map[static_cast<std::size_t>(keep_cols[i])] = static_cast<std::int32_t>(i);
    SparseRowMatrix<T> out(keep_rows.size(), keep_cols.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i) {
      for (const auto& e : rows_[static_cast<std::size_t>(keep_rows[i])]) {
        std::int32_t nc = col_map[static_cast<std::size_t>(e.col)];
        if (nc >= 0) out.rows_[i].push_back(Entry{nc, e.value});
      }
    }
    return out;  // rows stay sorted; no duplicates possible
  }

  friend bool operator==(const SparseRowMatrix&, const SparseRowMatrix&) = default;

 private:
  std::int32_t n_cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace kcx
