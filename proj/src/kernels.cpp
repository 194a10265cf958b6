#include "mhc/kernels.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "mhc/cochain.hpp"
#include "mhc/error.hpp"

namespace mhc {

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && value > cap / base)
      throw CapacityError("cochain table of size " + std::to_string(base) + "^" + std::to_string(exponent) +
                          " exceeds the limit " + std::to_string(cap));
    value *= base;
  }
  if (value > cap)
    throw CapacityError("cochain table of size " + std::to_string(value) + " exceeds the limit " +
                        std::to_string(cap));
  return value;
}

TupleIndexer::TupleIndexer(std::size_t group_order, std::size_t degree)
    : base_(group_order), degree_(degree), size_(1) {
  for (std::size_t i = 0; i < degree; ++i) size_ *= base_;
}

void TupleIndexer::decode(std::size_t index, std::vector<std::size_t>& tuple) const {
  tuple.resize(degree_);
  for (std::size_t k = degree_; k-- > 0;) {
    tuple[k] = index % base_;
    index /= base_;
  }
}

std::size_t TupleIndexer::encode(const std::vector<std::size_t>& tuple) const {
  std::size_t index = 0;
  for (std::size_t x : tuple) index = index * base_ + x;
  return index;
}

std::vector<CycloScalar> MonomialOperator::apply(const std::vector<CycloScalar>& input) const {
  if (input.size() != in_size) throw std::invalid_argument("operator applied to a table of the wrong size");
  std::vector<CycloScalar> out(source.size());
  for (std::size_t y = 0; y < source.size(); ++y) out[y] = scale[y] * input[source[y]];
  return out;
}

MonomialOperator identity_operator(std::size_t size, unsigned order) {
  MonomialOperator op;
  op.in_size = size;
  op.source.resize(size);
  for (std::size_t i = 0; i < size; ++i) op.source[i] = i;
  op.scale.assign(size, CycloScalar::one(order));
  return op;
}

MonomialOperator compose(const MonomialOperator& outer, const MonomialOperator& inner) {
  if (outer.in_size != inner.out_size()) throw std::invalid_argument("composing operators of mismatched sizes");
  MonomialOperator op;
  op.in_size = inner.in_size;
  op.source.resize(outer.out_size());
  op.scale.resize(outer.out_size());
  const auto total = static_cast<std::ptrdiff_t>(outer.out_size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto y = static_cast<std::size_t>(k);
    const std::size_t mid = outer.source[y];
    op.source[y] = inner.source[mid];
    op.scale[y] = outer.scale[y] * inner.scale[mid];
  }
  return op;
}

MonomialOperator scaled(MonomialOperator op, const CycloScalar& factor) {
  for (auto& s : op.scale) s *= factor;
  return op;
}

std::optional<std::size_t> first_difference(const MonomialOperator& a, const MonomialOperator& b) {
  if (a.in_size != b.in_size || a.out_size() != b.out_size()) return std::size_t{0};
  std::size_t first = std::numeric_limits<std::size_t>::max();
  const auto total = static_cast<std::ptrdiff_t>(a.out_size());
#pragma omp parallel for reduction(min : first) schedule(static)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto y = static_cast<std::size_t>(k);
    const bool same = a.scale[y] == b.scale[y] && (a.scale[y].is_zero() || a.source[y] == b.source[y]);
    if (!same) first = std::min(first, y);
  }
  if (first == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return first;
}

namespace {

// Fills an operator C^in_degree -> C^out_degree from a per-output rule.
template <class Rule>
MonomialOperator tabulate(const GroupTable& g, std::size_t in_degree, std::size_t out_degree, Rule rule) {
  const TupleIndexer in(g.order(), in_degree), out(g.order(), out_degree);
  MonomialOperator op;
  op.in_size = in.size();
  op.source.resize(out.size());
  op.scale.resize(out.size());
  const auto total = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel
  {
    std::vector<std::size_t> tuple, image;
#pragma omp for schedule(static)
    for (std::ptrdiff_t k = 0; k < total; ++k) {
      const auto y = static_cast<std::size_t>(k);
      out.decode(y, tuple);
      op.scale[y] = rule(tuple, image);
      op.source[y] = in.encode(image);
    }
  }
  return op;
}

}  // namespace

MonomialOperator coface_operator(const GroupTable& g, const Character& sigma, std::size_t n, std::size_t i) {
  if (i > n + 1) throw std::out_of_range("coface index out of range");
  const unsigned order = sigma.order();
  return tabulate(g, n, n + 1, [&](const std::vector<std::size_t>& t, std::vector<std::size_t>& img) {
    img.clear();
    if (i == 0) {
      img.assign(t.begin() + 1, t.end());
      return CycloScalar::one(order);
    }
    if (i == n + 1) {
      img.assign(t.begin(), t.end() - 1);
      return sigma(t.back());
    }
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k + 1 == i) {
        img.push_back(g.multiply(t[k], t[k + 1]));
        ++k;
      } else {
        img.push_back(t[k]);
      }
    }
    return CycloScalar::one(order);
  });
}

MonomialOperator codegeneracy_operator(const GroupTable& g, unsigned order, std::size_t n, std::size_t position) {
  if (n == 0 || position >= n) throw std::out_of_range("codegeneracy index out of range");
  return tabulate(g, n, n - 1, [&](const std::vector<std::size_t>& t, std::vector<std::size_t>& img) {
    img.assign(t.begin(), t.end());
    img.insert(img.begin() + static_cast<std::ptrdiff_t>(position), g.identity());
    return CycloScalar::one(order);
  });
}

MonomialOperator tau_operator(const GroupTable& g, const Character& sigma, std::size_t n) {
  if (n == 0) return identity_operator(1, sigma.order());
  return tabulate(g, n, n, [&](const std::vector<std::size_t>& t, std::vector<std::size_t>& img) {
    std::size_t product = g.identity();
    for (std::size_t x : t) product = g.multiply(product, x);
    img.clear();
    img.push_back(g.inverse(product));
    img.insert(img.end(), t.begin(), t.end() - 1);
    return sigma(t.back());
  });
}

std::vector<SparseRow> coboundary_rows(const GroupTable& g, const Character& sigma, std::size_t n) {
  const TupleIndexer in(g.order(), n), out(g.order(), n + 1);
  const unsigned order = sigma.order();
  std::vector<SparseRow> rows(out.size());
  const auto total = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel
  {
    std::vector<std::size_t> t, img;
    SparseRow terms;
#pragma omp for schedule(static)
    for (std::ptrdiff_t k = 0; k < total; ++k) {
      const auto y = static_cast<std::size_t>(k);
      out.decode(y, t);
      terms.clear();
      img.assign(t.begin() + 1, t.end());
      terms.emplace_back(in.encode(img), CycloScalar::one(order));
      for (std::size_t i = 1; i <= n; ++i) {
        img.clear();
        for (std::size_t j = 0; j < t.size(); ++j) {
          if (j + 1 == i) {
            img.push_back(g.multiply(t[j], t[j + 1]));
            ++j;
          } else {
            img.push_back(t[j]);
          }
        }
        terms.emplace_back(in.encode(img), CycloScalar::from_int(order, i % 2 == 0 ? 1 : -1));
      }
      img.assign(t.begin(), t.end() - 1);
      CycloScalar last = sigma(t.back());
      if (n % 2 == 0) last = -last;
      terms.emplace_back(in.encode(img), std::move(last));

      std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseRow& row = rows[y];
      for (auto& [col, value] : terms) {
        if (!row.empty() && row.back().first == col)
          row.back().second += value;
        else
          row.emplace_back(col, value);
        if (row.back().second.is_zero()) row.pop_back();
      }
    }
  }
  return rows;
}

std::vector<SparseRow> transpose_rows(const std::vector<SparseRow>& rows, std::size_t cols) {
  std::vector<SparseRow> out(cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) out.at(c).emplace_back(r, v);
  return out;
}

namespace serial {

ScalarMatrix coboundary_matrix(const GroupPtr& g, const Character& sigma, std::size_t n) {
  const TupleIndexer in(g->order(), n), out(g->order(), n + 1);
  ScalarMatrix m(out.size(), in.size(), sigma.order());
  for (std::size_t x = 0; x < in.size(); ++x) {
    const Cochain image = coboundary(Cochain::basis(g, n, sigma.order(), x), sigma);
    for (std::size_t y = 0; y < out.size(); ++y) m.at(y, x) = image[y];
  }
  return m;
}

}  // namespace serial
}  // namespace mhc
