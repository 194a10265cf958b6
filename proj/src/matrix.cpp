#include "mhc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace mhc {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, unsigned order)
    : rows_(rows), cols_(cols), order_(order), entries_(rows * cols, CycloScalar::zero(order)) {}

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<CycloScalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw std::invalid_argument("matrix entry count must equal rows * cols");
  order_ = entries_.empty() ? 1 : entries_.front().order();
  for (const auto& e : entries_)
    if (e.order() != order_) throw std::invalid_argument("matrix entries must share one cyclotomic order");
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_, order_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<SparseRow> to_sparse_rows(const ScalarMatrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) rows[r].emplace_back(c, m.at(r, c));
  return rows;
}

namespace {

// row -= factor * pivot, where both have the same leading column and the
// pivot is normalized to a leading 1. The leading entry cancels exactly.
SparseRow eliminate(const SparseRow& row, const SparseRow& pivot) {
  const CycloScalar factor = row.front().second;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j >= pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i >= row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
      ++j;
    } else {
      CycloScalar v = row[i].second - factor * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank(std::vector<SparseRow> rows, std::size_t cols) {
  // buckets[c] holds the rows whose leading column is c.
  std::vector<std::vector<std::size_t>> buckets(cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    if (rows[r].back().first >= cols) throw std::out_of_range("sparse row column index out of range");
    buckets[rows[r].front().first].push_back(r);
  }
  std::size_t pivots = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    auto& bucket = buckets[c];
    if (bucket.empty()) continue;
    ++pivots;
    auto pivot_it = std::min_element(bucket.begin(), bucket.end());
    const std::size_t pivot_index = *pivot_it;
    *pivot_it = bucket.back();
    bucket.pop_back();
    SparseRow pivot = std::move(rows[pivot_index]);
    const CycloScalar lead_inv = pivot.front().second.inverse();
    for (auto& [col, value] : pivot) value *= lead_inv;

    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(bucket.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      const std::size_t r = bucket[static_cast<std::size_t>(k)];
      rows[r] = eliminate(rows[r], pivot);
    }
    std::sort(bucket.begin(), bucket.end());
    for (std::size_t r : bucket)
      if (!rows[r].empty()) buckets[rows[r].front().first].push_back(r);
    bucket.clear();
    bucket.shrink_to_fit();
  }
  return pivots;
}

std::size_t rank(const ScalarMatrix& m) { return rank(to_sparse_rows(m), m.cols()); }

namespace serial {

std::size_t rank(ScalarMatrix m) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r)
      if (!m.at(r, c).is_zero()) {
        found = r;
        break;
      }
    if (found == m.rows()) continue;
    if (found != pivot_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(found, k), m.at(pivot_row, k));
    const CycloScalar inv = m.at(pivot_row, c).inverse();
    for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
      if (m.at(r, c).is_zero()) continue;
      const CycloScalar factor = m.at(r, c) * inv;
      for (std::size_t k = c; k < m.cols(); ++k) m.at(r, k) -= factor * m.at(pivot_row, k);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace serial
}  // namespace mhc
