#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mhc/cyclo.hpp"

namespace mhc {

/// Dense row-major matrix over a single cyclotomic field.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols, unsigned order);
  ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<CycloScalar> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned order() const { return order_; }

  CycloScalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const CycloScalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<CycloScalar>& entries() const { return entries_; }

  ScalarMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned order_ = 1;
  std::vector<CycloScalar> entries_;
};

/// Sparse row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, CycloScalar>>;

/// Exact rank. Column-ordered elimination: for each column the pivot is the
/// lowest-indexed remaining row with a nonzero entry there. Row updates for a
/// column run in parallel; the result does not depend on the thread count.
std::size_t rank(std::vector<SparseRow> rows, std::size_t cols);
std::size_t rank(const ScalarMatrix& m);

std::vector<SparseRow> to_sparse_rows(const ScalarMatrix& m);

namespace serial {

/// Reference dense Gaussian elimination with row swaps, same pivot rule.
std::size_t rank(ScalarMatrix m);

}  // namespace serial
}  // namespace mhc
