#include "mhc/mha.hpp"

#include <atomic>
#include <stdexcept>

namespace mhc {
namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a != b && (a->order() != b->order() || a->names() != b->names()))
    throw std::invalid_argument("algebra elements live over different groups");
}

CheckEntry entry(std::string name, bool pass, std::vector<std::string> where = {}) {
  return CheckEntry{std::move(name), pass, std::nullopt, pass ? std::vector<std::string>{} : std::move(where)};
}

}  // namespace

AlgebraElement AlgebraElement::basis(const GroupPtr& g, std::size_t element, unsigned order) {
  AlgebraElement a = zero(g, order);
  a.coeffs.at(element) = CycloScalar::one(order);
  return a;
}

AlgebraElement AlgebraElement::zero(const GroupPtr& g, unsigned order) {
  return AlgebraElement{g, std::vector<CycloScalar>(g->order(), CycloScalar::zero(order))};
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
  require_same_group(group, rhs.group);
  AlgebraElement out = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] *= rhs.coeffs[i];
  return out;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  require_same_group(group, rhs.group);
  AlgebraElement out = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += rhs.coeffs[i];
  return out;
}

TensorElement TensorElement::zero(const GroupPtr& g, std::size_t degree, unsigned order) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < degree; ++i) size *= g->order();
  return TensorElement{g, degree, std::vector<CycloScalar>(size, CycloScalar::zero(order))};
}

TensorElement w_r(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_group(a.group, b.group);
  const GroupTable& g = *a.group;
  const std::size_t n = g.order();
  TensorElement out = TensorElement::zero(a.group, 2, a.coeffs.front().order());
  for (std::size_t p = 0; p < n; ++p) {
    if (a.coeffs[p].is_zero()) continue;
    for (std::size_t h = 0; h < n; ++h) {
      if (b.coeffs[h].is_zero()) continue;
      const auto [x, y] = w_r_basis(g, p, h);
      out.coeffs[x * n + y] += a.coeffs[p] * b.coeffs[h];
    }
  }
  return out;
}

TensorElement w_l(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_group(a.group, b.group);
  const GroupTable& g = *a.group;
  const std::size_t n = g.order();
  TensorElement out = TensorElement::zero(a.group, 2, a.coeffs.front().order());
  for (std::size_t p = 0; p < n; ++p) {
    if (a.coeffs[p].is_zero()) continue;
    for (std::size_t h = 0; h < n; ++h) {
      if (b.coeffs[h].is_zero()) continue;
      const auto [x, y] = w_l_basis(g, p, h);
      out.coeffs[x * n + y] += a.coeffs[p] * b.coeffs[h];
    }
  }
  return out;
}

Report verify_mha_axioms(const GroupTable& g) {
  const std::size_t n = g.order();
  const auto label = [&](std::initializer_list<std::size_t> xs) {
    std::vector<std::string> out;
    for (std::size_t x : xs) out.push_back(g.name(x));
    return out;
  };
  Report report;

  {
    std::vector<std::string> where;
    for (std::size_t a = 0; a < n && where.empty(); ++a)
      for (std::size_t b = 0; b < n && where.empty(); ++b)
        for (std::size_t c = 0; c < n && where.empty(); ++c)
          if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c))) where = label({a, b, c});
    report.push_back(entry("group_associative", where.empty(), where));
  }

  // W_R and W_L send basis pairs to basis pairs with coefficient 1; they are
  // bijections of H (x) H iff the induced map on index pairs is a permutation.
  const auto permutation_check = [&](auto basis_map, const char* name) {
    std::vector<std::atomic<int>> hits(n * n);
    const auto total = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for
    for (std::ptrdiff_t k = 0; k < total; ++k) {
      const auto [x, y] = basis_map(g, static_cast<std::size_t>(k) / n, static_cast<std::size_t>(k) % n);
      hits[x * n + y].fetch_add(1, std::memory_order_relaxed);
    }
    std::vector<std::string> where;
    for (std::size_t k = 0; k < n * n && where.empty(); ++k)
      if (hits[k].load() != 1) where = label({k / n, k % n});
    report.push_back(entry(name, where.empty(), where));
  };
  permutation_check(w_r_basis, "w_r_bijective");
  permutation_check(w_l_basis, "w_l_bijective");

  {
    // Inverse of W_R on the basis: e_x (x) e_y -> e_{x y} (x) e_y.
    std::vector<std::string> where;
    for (std::size_t p = 0; p < n && where.empty(); ++p)
      for (std::size_t h = 0; h < n && where.empty(); ++h) {
        const auto [x, y] = w_r_basis(g, p, h);
        if (g.multiply(x, y) != p || y != h) where = label({p, h});
      }
    report.push_back(entry("w_r_inverse_roundtrip", where.empty(), where));
  }

  {
    // W_R(ab, c) = W_R'(a, W_R(b, c)) with W_R'(a, b (x) c) = W_R(a, c)(b (x) 1),
    // on a = e_p, b = e_q, c = e_h. Both sides are 0 or a single basis tensor.
    std::vector<std::string> where;
    for (std::size_t p = 0; p < n && where.empty(); ++p)
      for (std::size_t q = 0; q < n && where.empty(); ++q)
        for (std::size_t h = 0; h < n && where.empty(); ++h) {
          const bool lhs_nonzero = p == q;
          const auto lhs = w_r_basis(g, p, h);
          const auto inner = w_r_basis(g, q, h);       // e_x (x) e_h
          const auto outer = w_r_basis(g, p, inner.second);
          const bool rhs_nonzero = outer.first == inner.first;
          const bool same = lhs_nonzero == rhs_nonzero && (!lhs_nonzero || lhs == outer);
          if (!same) where = label({p, q, h});
        }
    report.push_back(entry("homomorphism", where.empty(), where));
  }

  {
    // (Delta (x) id)Delta(e_g) via W_R twice and (id (x) Delta)Delta(e_g) via
    // W_L twice, compared as order-3 indicator tables.
    std::vector<int> left(n * n * n * n, 0), right(n * n * n * n, 0);
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const auto [u, zz] = w_r_basis(g, e, z);
          const auto [x, yy] = w_r_basis(g, u, y);
          left[((e * n + x) * n + yy) * n + zz] += 1;
          const std::size_t x2 = y;  // reuse loop variables as (x, y) for W_L
          const std::size_t y2 = z;
          const auto [a, rest] = w_l_basis(g, x2, e);
          const auto [b, c] = w_l_basis(g, y2, rest);
          right[((e * n + a) * n + b) * n + c] += 1;
        }
    std::vector<std::string> where;
    for (std::size_t k = 0; k < left.size() && where.empty(); ++k)
      if (left[k] != right[k]) where = label({k / (n * n * n), (k / (n * n)) % n, (k / n) % n, k % n});
    report.push_back(entry("coassociativity", where.empty(), where));
  }

  {
    // (eps (x) id)W_R(e_p, e_h) = e_p e_h and (id (x) eps)W_L(e_p, e_h) = e_p e_h.
    std::vector<std::string> where;
    for (std::size_t p = 0; p < n && where.empty(); ++p)
      for (std::size_t h = 0; h < n && where.empty(); ++h) {
        const auto r = w_r_basis(g, p, h);
        const auto l = w_l_basis(g, p, h);
        const bool expected = p == h;
        if ((r.first == g.identity()) != expected || (l.second == g.identity()) != expected ||
            (expected && (r.second != h || l.first != p)))
          where = label({p, h});
      }
    report.push_back(entry("counit", where.empty(), where));
  }

  {
    // m(S (x) id)W_R(e_p, e_h) = eps(e_p) e_h and m(id (x) S)W_L(e_p, e_h) = eps(e_h) e_p,
    // with S(e_g) = e_{g^-1}.
    std::vector<std::string> where;
    for (std::size_t p = 0; p < n && where.empty(); ++p)
      for (std::size_t h = 0; h < n && where.empty(); ++h) {
        const auto r = w_r_basis(g, p, h);
        const bool r_nonzero = g.inverse(r.first) == r.second;  // S(e_x) e_y
        const auto l = w_l_basis(g, p, h);
        const bool l_nonzero = l.first == g.inverse(l.second);  // e_x S(e_y)
        if (r_nonzero != (p == g.identity()) || l_nonzero != (h == g.identity())) where = label({p, h});
      }
    report.push_back(entry("antipode", where.empty(), where));
  }

  {
    std::vector<int> hits(n, 0);
    for (std::size_t x = 0; x < n; ++x) ++hits[g.inverse(x)];
    std::vector<std::string> where;
    for (std::size_t x = 0; x < n && where.empty(); ++x)
      if (hits[x] != 1) where = label({x});
    report.push_back(entry("antipode_bijective", where.empty(), where));
  }

  {
    std::vector<std::string> where;
    for (std::size_t x = 0; x < n && where.empty(); ++x)
      if (g.inverse(g.inverse(x)) != x) where = label({x});
    report.push_back(entry("antipode_involutive", where.empty(), where));
  }
  return report;
}

GrouplikeCertificate grouplike_from_values(const GroupTable& g, std::span<const CycloScalar> f) {
  if (f.size() != g.order()) throw std::invalid_argument("multiplier needs one value per group element");
  const std::size_t n = g.order();
  GrouplikeCertificate cert;
  cert.multiplier.assign(f.begin(), f.end());
  cert.injective = true;
  for (const auto& v : f) cert.injective = cert.injective && !v.is_zero();

  // (u (x) u)W_R(e_p, e_h) = f(p h^-1) f(h) e_{ph^-1} (x) e_h versus
  // W_R(u e_p, e_h) = f(p) e_{ph^-1} (x) e_h.
  std::atomic<bool> rr{true}, cop{true};
  const auto total = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const std::size_t p = static_cast<std::size_t>(k) / n, h = static_cast<std::size_t>(k) % n;
    const auto [x, y] = w_r_basis(g, p, h);
    if (!(f[x] * f[y] == f[p])) rr = false;
    // Delta(u) = sum_g f(g) sum_{ab = g} e_a (x) e_b.
    if (!(f[g.multiply(p, h)] == f[p] * f[h])) cop = false;
  }
  cert.rr_comodule = rr;
  cert.coproduct = cop;
  return cert;
}

GrouplikeCertificate grouplike_from_character(const Character& chi) {
  return grouplike_from_values(*chi.group, chi.values);
}

}  // namespace mhc
