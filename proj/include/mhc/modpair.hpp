#pragma once

// Modular pairs (delta_g, sigma) for C(G): delta_g is evaluation at g, sigma a
// character acting as a diagonal group-like multiplier.

#include <cstddef>
#include <vector>

#include "mhc/group.hpp"
#include "mhc/mha.hpp"

namespace mhc {

struct ModularPair {
  GroupPtr group;
  std::size_t base_point = 0;
  Character sigma;
  bool mpi = false;
};

/// Index of S_(delta_g, sigma)(e_h) = e_{h^-1 g}. Also evaluates the defining
/// relation delta(a) S(h) = (delta (x) S) W_L(a, h) at a = e_g and throws
/// std::logic_error if the two disagree.
std::size_t twisted_antipode(const GroupTable& g, std::size_t base_point, const Character& sigma, std::size_t h);

/// Right-hand side of delta_g(a) S(h) = (delta_g (x) S) W_L(a, h), divided by
/// delta_g(a), for an arbitrary a with delta_g(a) != 0 and h = e_h.
/// Throws std::invalid_argument if delta_g(a) = 0.
AlgebraElement twisted_antipode_from_definition(const GroupPtr& g, std::size_t base_point,
                                                const AlgebraElement& a, std::size_t h);

/// sigma(g) = 1 and S^2 = Ad(sigma) on every basis element, evaluated by
/// applying the twisted antipode twice.
bool is_mpi(const GroupTable& g, std::size_t base_point, const Character& sigma);

/// All pairs with is_mpi true: base points ascending, then characters in
/// enumeration order. Candidates are restricted to central base points.
std::vector<ModularPair> enumerate_mpi(const GroupPtr& g);

/// The coarser predicate "G abelian or g = e", kept for comparison with
/// enumerate_mpi on nonabelian groups with nontrivial center.
bool abelian_or_identity(const GroupTable& g, std::size_t base_point);

}  // namespace mhc
