#pragma once

// Cochains F : G^n -> Q(zeta_N) of the cosimplicial module of C(G), the
// Hochschild coboundary, and the comparison with group cohomology.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mhc/cyclo.hpp"
#include "mhc/group.hpp"
#include "mhc/kernels.hpp"
#include "mhc/report.hpp"

namespace mhc {

/// Default bound on |G|^{n+1} for dimension computations.
inline constexpr std::size_t kDefaultCochainCap = 100000;

class Cochain {
 public:
  /// Zero cochain of the given degree; degree 0 is a single scalar.
  Cochain(GroupPtr group, std::size_t degree, unsigned order);
  Cochain(GroupPtr group, std::size_t degree, std::vector<CycloScalar> table);

  /// Indicator of the tuple with index `index`.
  static Cochain basis(GroupPtr group, std::size_t degree, unsigned order, std::size_t index);
  /// Entries a * zeta^k with a in [-3, 3] and k uniform.
  static Cochain random(GroupPtr group, std::size_t degree, unsigned order, std::mt19937_64& rng);

  const GroupPtr& group() const { return group_; }
  std::size_t degree() const { return degree_; }
  unsigned order() const { return order_; }
  std::size_t size() const { return table_.size(); }

  const CycloScalar& operator[](std::size_t index) const { return table_[index]; }
  CycloScalar& operator[](std::size_t index) { return table_[index]; }
  const CycloScalar& at(const std::vector<std::size_t>& tuple) const;
  const std::vector<CycloScalar>& table() const { return table_; }

  bool is_zero() const;
  Cochain& operator+=(const Cochain& rhs);
  Cochain& operator-=(const Cochain& rhs);
  Cochain& operator*=(const CycloScalar& factor);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(Cochain a, const CycloScalar& s) { return a *= s; }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.table_ == b.table_;
  }

 private:
  GroupPtr group_;
  std::size_t degree_;
  unsigned order_;
  std::vector<CycloScalar> table_;
};

/// (delta_0 F)(g_1..g_{n+1}) = F(g_2..g_{n+1});
/// (delta_i F) = F(g_1, .., g_i g_{i+1}, .., g_{n+1}) for 1 <= i <= n;
/// (delta_{n+1} F) = F(g_1..g_n) sigma(g_{n+1}). Throws std::out_of_range for i > n + 1.
Cochain coface(std::size_t i, const Cochain& f, const Character& sigma);

/// (sigma_j F)(g_1..g_{n-1}) = F(g_1, .., g_{j-1}, e, g_j, .., g_{n-1}), 1 <= j <= n.
Cochain codegeneracy(std::size_t j, const Cochain& f);

/// b = sum_i (-1)^i delta_i.
Cochain coboundary(const Cochain& f, const Character& sigma);
/// The same map evaluated entrywise from its closed form.
Cochain coboundary_closed_form(const Cochain& f, const Character& sigma);

/// Full-basis checks of the cosimplicial identities for every n <= n_max,
/// with 0-based codegeneracies s_j : C^{n+1} -> C^n (insert e before the
/// (j+1)-th argument):
///   coface_coface:             delta_j delta_i = delta_i delta_{j-1}, i < j
///   codegeneracy_codegeneracy: s_j s_i = s_i s_{j+1},                 i <= j
///   codegeneracy_coface:       s_j delta_i = delta_i s_{j-1} (i < j), id (i = j, j + 1),
///                              delta_{i-1} s_j (i > j + 1)
///   b_squared:                 b b = 0 on C^n
/// Throws CapacityError when |G|^{n_max+2} > cap.
Report verify_cosimplicial_identities(const GroupPtr& g, const Character& sigma, std::size_t n_max,
                                      std::size_t cap = kDefaultCochainCap);

/// Index of the first nonzero row of B_{n+1} B_n, if any (sparse product,
/// parallel over rows).
std::optional<std::size_t> coboundary_square_failure(const GroupTable& g, const Character& sigma, std::size_t n);

struct CohomologyResult {
  std::size_t degree = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_image_prev = 0;
  std::size_t dim = 0;
};

/// dim ker(b on C^n) - dim im(b on C^{n-1}). Throws CapacityError when
/// |G|^{n+1} > cap.
CohomologyResult hochschild_dim(const GroupPtr& g, const Character& sigma, std::size_t n,
                                std::size_t cap = kDefaultCochainCap);

/// Xi(F)(g_1..g_n) = F(g_n^-1, ..., g_1^-1).
Cochain xi_transform(const Cochain& f);
/// Xi scaled by (-1)^{n(n+1)/2}; this normalization is a cochain map.
Cochain signed_xi_transform(const Cochain& f);
/// Xi(bF) = xi_boundary_sign(n) d(Xi F) for F of degree n.
inline int xi_boundary_sign(std::size_t n) { return n % 2 == 0 ? -1 : 1; }

/// Group-cohomology differential with coefficients in Q(zeta_N) where g acts
/// by multiplication with sigma(g)^-1.
Cochain group_differential(const Cochain& phi, const Character& sigma);

/// Checks signed_xi(bF) = d(signed_xi F) on `trials` random cochains of degree n.
bool verify_xi_chain_map(const GroupPtr& g, const Character& sigma, std::size_t n, std::size_t trials,
                         std::uint64_t seed = 0x5eed);

}  // namespace mhc
