#pragma once

// Data-parallel kernels over full cochain bases.
//
// Every structure map of the cosimplicial/cocyclic module on C(G) is monomial:
// each output entry is a scalar multiple of exactly one input entry. The
// builders below tabulate such maps (OpenMP over output entries), so identity
// checks on a full basis reduce to comparing tables. The coboundary is
// assembled row by row from its closed form. `serial::` holds reference
// implementations that apply the cochain-level operations to basis cochains
// one at a time; tests compare both routes.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mhc/cyclo.hpp"
#include "mhc/group.hpp"
#include "mhc/matrix.hpp"

namespace mhc {

/// |G|^k, or CapacityError when it exceeds `cap`.
std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap);

/// Mixed-radix encoding of G^n, first coordinate most significant.
class TupleIndexer {
 public:
  TupleIndexer(std::size_t group_order, std::size_t degree);
  std::size_t size() const { return size_; }
  std::size_t degree() const { return degree_; }
  void decode(std::size_t index, std::vector<std::size_t>& tuple) const;
  std::size_t encode(const std::vector<std::size_t>& tuple) const;

 private:
  std::size_t base_;
  std::size_t degree_;
  std::size_t size_;
};

struct MonomialOperator {
  std::size_t in_size = 0;
  std::vector<std::size_t> source;  // per output entry
  std::vector<CycloScalar> scale;   // per output entry

  std::size_t out_size() const { return source.size(); }
  /// Applies to a dense table of length in_size.
  std::vector<CycloScalar> apply(const std::vector<CycloScalar>& input) const;
};

MonomialOperator identity_operator(std::size_t size, unsigned order);
/// outer after inner.
MonomialOperator compose(const MonomialOperator& outer, const MonomialOperator& inner);
MonomialOperator scaled(MonomialOperator op, const CycloScalar& factor);
/// First output index where the two maps differ as linear maps, if any.
std::optional<std::size_t> first_difference(const MonomialOperator& a, const MonomialOperator& b);

/// delta_i : C^n -> C^{n+1}, 0 <= i <= n + 1.
MonomialOperator coface_operator(const GroupTable& g, const Character& sigma, std::size_t n, std::size_t i);
/// C^{n} -> C^{n-1}, inserting e at 0-based position `position` (< n).
MonomialOperator codegeneracy_operator(const GroupTable& g, unsigned order, std::size_t n, std::size_t position);
/// tau_n(F)(g_1..g_n) = F((g_1...g_n)^-1, g_1, ..., g_{n-1}) sigma(g_n); tau_0 = id.
MonomialOperator tau_operator(const GroupTable& g, const Character& sigma, std::size_t n);

using TauBuilder = std::function<MonomialOperator(const GroupTable&, const Character&, std::size_t)>;

/// Rows of the matrix of b : C^n -> C^{n+1} from the closed form
/// F(g_2..) + sum_i (-1)^i F(.., g_i g_{i+1}, ..) + (-1)^{n+1} F(g_1..g_n) sigma(g_{n+1}).
std::vector<SparseRow> coboundary_rows(const GroupTable& g, const Character& sigma, std::size_t n);

/// Column lists of the same matrix (entries of b(E_x) for each basis index x).
std::vector<SparseRow> transpose_rows(const std::vector<SparseRow>& rows, std::size_t cols);

namespace serial {

/// Matrix of b on C^n built column by column as the alternating coface sum
/// applied to each basis cochain.
ScalarMatrix coboundary_matrix(const GroupPtr& g, const Character& sigma, std::size_t n);

}  // namespace serial
}  // namespace mhc
