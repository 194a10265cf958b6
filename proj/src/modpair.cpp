#include "mhc/modpair.hpp"

#include <stdexcept>

namespace mhc {

AlgebraElement twisted_antipode_from_definition(const GroupPtr& g, std::size_t base_point,
                                                const AlgebraElement& a, std::size_t h) {
  const unsigned order = a.coeffs.front().order();
  const CycloScalar& delta_a = a.coeffs[base_point];
  if (delta_a.is_zero()) throw std::invalid_argument("delta_g(a) vanishes; the relation does not determine S");
  const auto wl = w_l(a, AlgebraElement::basis(g, h, order));
  const std::size_t n = g->order();
  AlgebraElement out = AlgebraElement::zero(g, order);
  // (delta_g (x) S)(e_x (x) e_y) = [x = g] e_{y^-1}
  for (std::size_t y = 0; y < n; ++y) out.coeffs[g->inverse(y)] += wl.coeffs[base_point * n + y];
  const CycloScalar inv = delta_a.inverse();
  for (auto& c : out.coeffs) c *= inv;
  return out;
}

std::size_t twisted_antipode(const GroupTable& g, std::size_t base_point, const Character& sigma, std::size_t h) {
  const std::size_t closed = g.multiply(g.inverse(h), base_point);
  const auto check = twisted_antipode_from_definition(sigma.group, base_point,
                                                      AlgebraElement::basis(sigma.group, base_point, sigma.order()), h);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const bool expected_one = x == closed;
    if (!(expected_one ? check.coeffs[x].is_one() : check.coeffs[x].is_zero()))
      throw std::logic_error("twisted antipode closed form disagrees with its defining relation");
  }
  return closed;
}

bool is_mpi(const GroupTable& g, std::size_t base_point, const Character& sigma) {
  if (!sigma(base_point).is_one()) return false;
  // C(G) is commutative, so sigma h sigma^-1 = h and the condition is S^2 = id.
  for (std::size_t h = 0; h < g.order(); ++h) {
    const std::size_t once = twisted_antipode(g, base_point, sigma, h);
    if (twisted_antipode(g, base_point, sigma, once) != h) return false;
  }
  return true;
}

std::vector<ModularPair> enumerate_mpi(const GroupPtr& g) {
  const auto characters = enumerate_characters(g);
  std::vector<ModularPair> out;
  // S^2 e_h = e_{g^-1 h g}, so only central base points can qualify.
  for (std::size_t z : center(*g))
    for (const auto& chi : characters)
      if (chi(z).is_one()) out.push_back(ModularPair{g, z, chi, true});
  return out;
}

bool abelian_or_identity(const GroupTable& g, std::size_t base_point) {
  return base_point == g.identity() || g.is_abelian();
}

}  // namespace mhc
