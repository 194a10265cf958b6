#pragma once

// The regular multiplier Hopf algebra C(G) of functions on a finite group,
// in the basis of point indicators e_g.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mhc/cyclo.hpp"
#include "mhc/group.hpp"
#include "mhc/report.hpp"

namespace mhc {

/// A function G -> Q(zeta_N); e_g is the indicator of g. Products are pointwise.
struct AlgebraElement {
  GroupPtr group;
  std::vector<CycloScalar> coeffs;

  static AlgebraElement basis(const GroupPtr& g, std::size_t element, unsigned order);
  static AlgebraElement zero(const GroupPtr& g, unsigned order);
  AlgebraElement operator*(const AlgebraElement& rhs) const;
  AlgebraElement operator+(const AlgebraElement& rhs) const;
  bool operator==(const AlgebraElement& rhs) const { return coeffs == rhs.coeffs; }
};

/// An element of C(G)^{(x)degree}; coefficient of e_{g1} (x) ... (x) e_{gn}
/// lives at index g1 |G|^{n-1} + ... + gn.
struct TensorElement {
  GroupPtr group;
  std::size_t degree = 0;
  std::vector<CycloScalar> coeffs;

  static TensorElement zero(const GroupPtr& g, std::size_t degree, unsigned order);
  bool operator==(const TensorElement& rhs) const { return degree == rhs.degree && coeffs == rhs.coeffs; }
};

/// Basis action W_R(e_p, e_h) = e_{p h^-1} (x) e_h, returned as the index pair.
inline std::pair<std::size_t, std::size_t> w_r_basis(const GroupTable& g, std::size_t p, std::size_t h) {
  return {g.multiply(p, g.inverse(h)), h};
}
/// Basis action W_L(e_p, e_h) = e_p (x) e_{p^-1 h}.
inline std::pair<std::size_t, std::size_t> w_l_basis(const GroupTable& g, std::size_t p, std::size_t h) {
  return {p, g.multiply(g.inverse(p), h)};
}

/// W_R(a, b) = Delta(a)(1 (x) b), bilinear. Throws std::invalid_argument on group mismatch.
TensorElement w_r(const AlgebraElement& a, const AlgebraElement& b);
/// W_L(a, b) = (a (x) 1)Delta(b), bilinear.
TensorElement w_l(const AlgebraElement& a, const AlgebraElement& b);

/// Full-basis verification of the multiplier Hopf algebra structure of C(G).
/// Check names: group_associative, w_r_bijective, w_l_bijective,
/// w_r_inverse_roundtrip, homomorphism, coassociativity, counit,
/// antipode, antipode_bijective, antipode_involutive.
Report verify_mha_axioms(const GroupTable& g);

/// The diagonal multiplier u(e_g) = f(g) e_g, with the checks certifying that
/// it is a group-like multiplier.
struct GrouplikeCertificate {
  std::vector<CycloScalar> multiplier;
  bool injective = false;       // f vanishes nowhere
  bool rr_comodule = false;     // (u (x) u) W_R(a, b) = W_R(u a, b) on all basis pairs
  bool coproduct = false;       // Delta(u)(e_a (x) e_b) = f(a) f(b) e_a (x) e_b
  bool certified() const { return injective && rr_comodule && coproduct; }
};

GrouplikeCertificate grouplike_from_values(const GroupTable& g, std::span<const CycloScalar> f);
GrouplikeCertificate grouplike_from_character(const Character& chi);

}  // namespace mhc
