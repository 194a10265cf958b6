#include "mhc/crossed.hpp"

#include <functional>

#include "mhc/error.hpp"

namespace mhc {

bool CrossedElement::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

CrossedAlgebra::CrossedAlgebra(unsigned modulus) : n_(modulus) {
  if (modulus < 2 || modulus > 12) throw ValidationError("crossed product modulus N must lie in [2, 12]");
}

std::size_t CrossedAlgebra::flip(std::size_t p) const {
  const Point q = point(p);
  return index({q[1], q[0]});
}

std::size_t CrossedAlgebra::add(std::size_t p, std::size_t q) const {
  const Point a = point(p), b = point(q);
  return index({a[0] + b[0], a[1] + b[1]});
}

std::size_t CrossedAlgebra::negate(std::size_t p) const {
  const Point a = point(p);
  return index({n_ - a[0], n_ - a[1]});
}

unsigned CrossedAlgebra::theta(std::size_t p, std::size_t q) const {
  const Point a = point(p), b = point(q);
  const long value = static_cast<long>(a[0]) * b[1] - static_cast<long>(a[1]) * b[0];
  return static_cast<unsigned>(((value % n_) + n_) % n_);
}

CrossedElement CrossedAlgebra::zero() const {
  return CrossedElement{std::vector<CycloScalar>(dimension(), CycloScalar::zero(n_))};
}

CrossedElement CrossedAlgebra::one() const {
  CrossedElement u = zero();
  for (std::size_t p = 0; p < points(); ++p) u.coeffs[p] = CycloScalar::one(n_);
  return u;
}

CrossedElement CrossedAlgebra::x() const {
  CrossedElement u = zero();
  for (std::size_t p = 0; p < points(); ++p) u.coeffs[points() + p] = CycloScalar::one(n_);
  return u;
}

CrossedElement CrossedAlgebra::basis(std::size_t i) const {
  CrossedElement u = zero();
  u.coeffs.at(i) = CycloScalar::one(n_);
  return u;
}

CrossedElement CrossedAlgebra::from_tables(const std::vector<CycloScalar>& f, const std::vector<CycloScalar>& h) const {
  if (f.size() != points() || h.size() != points()) throw std::invalid_argument("tables must have N^2 entries");
  CrossedElement u = zero();
  for (std::size_t p = 0; p < points(); ++p) {
    u.coeffs[p] = f[p].embed(n_);
    u.coeffs[points() + p] = h[p].embed(n_);
  }
  return u;
}

CrossedElement CrossedAlgebra::multiply(const CrossedElement& a, const CrossedElement& b) const {
  // e_p x^s * e_q x^t is nonzero only for q = p (s = 0) or q = p^ (s = 1),
  // and then equals e_p x^{s+t}.
  const std::size_t P = points();
  CrossedElement out = zero();
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    const std::size_t p = i % P;
    const bool s = i >= P;
    const std::size_t q = s ? flip(p) : p;
    out.coeffs[p + (s ? P : 0)] += a.coeffs[i] * b.coeffs[q];
    out.coeffs[p + (s ? 0 : P)] += a.coeffs[i] * b.coeffs[P + q];
  }
  return out;
}

CrossedTensor CrossedAlgebra::coproduct(const CrossedElement& a) const {
  const std::size_t P = points(), D = dimension();
  CrossedTensor out{std::vector<CycloScalar>(D * D, CycloScalar::zero(n_))};
  for (std::size_t c = 0; c < P; ++c) {
    const bool plain = !a.coeffs[c].is_zero(), twisted = !a.coeffs[P + c].is_zero();
    if (!plain && !twisted) continue;
    for (std::size_t u = 0; u < P; ++u) {
      const std::size_t v = add(c, negate(u));  // u + v = c
      if (plain) out.coeffs[u * D + v] += a.coeffs[c];
      if (twisted)
        out.coeffs[(P + u) * D + P + v] += a.coeffs[P + c] * CycloScalar::zeta(n_, -static_cast<long>(theta(u, v)));
    }
  }
  return out;
}

CrossedTensor CrossedAlgebra::tensor(const CrossedElement& a, const CrossedElement& b) const {
  const std::size_t D = dimension();
  CrossedTensor out{std::vector<CycloScalar>(D * D, CycloScalar::zero(n_))};
  for (std::size_t i = 0; i < D; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < D; ++j) out.coeffs[i * D + j] = a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

CrossedElement CrossedAlgebra::antipode(const CrossedElement& a) const {
  const std::size_t P = points();
  CrossedElement out = zero();
  for (std::size_t p = 0; p < P; ++p) {
    out.coeffs[negate(p)] += a.coeffs[p];
    out.coeffs[P + negate(flip(p))] += a.coeffs[P + p];
  }
  return out;
}

CycloScalar CrossedAlgebra::counit(const CrossedElement& a) const {
  const std::size_t zero_point = index({0, 0});
  return a.coeffs[zero_point] + a.coeffs[points() + zero_point];
}

bool CrossedAlgebra::verify_associative() const {
  const std::size_t D = dimension();
  std::vector<CrossedElement> basis_elems;
  for (std::size_t i = 0; i < D; ++i) basis_elems.push_back(basis(i));
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) {
      const CrossedElement ij = multiply(basis_elems[i], basis_elems[j]);
      for (std::size_t k = 0; k < D; ++k)
        if (!(multiply(ij, basis_elems[k]) == multiply(basis_elems[i], multiply(basis_elems[j], basis_elems[k]))))
          return false;
    }
  const CrossedElement u = one(), xx = multiply(x(), x());
  if (!(xx == u)) return false;
  for (const auto& b : basis_elems)
    if (!(multiply(u, b) == b) || !(multiply(b, u) == b)) return false;
  return true;
}

bool CrossedAlgebra::verify_hopf_axioms() const {
  const std::size_t D = dimension();
  std::vector<CrossedTensor> delta;
  for (std::size_t i = 0; i < D; ++i) delta.push_back(coproduct(basis(i)));

  const auto tensor_product = [&](const CrossedTensor& s, const CrossedTensor& t) {
    CrossedTensor out{std::vector<CycloScalar>(D * D, CycloScalar::zero(n_))};
    for (std::size_t a = 0; a < D * D; ++a) {
      if (s.coeffs[a].is_zero()) continue;
      for (std::size_t b = 0; b < D * D; ++b) {
        if (t.coeffs[b].is_zero()) continue;
        const CrossedElement l = multiply(basis(a / D), basis(b / D));
        const CrossedElement r = multiply(basis(a % D), basis(b % D));
        const CycloScalar c = s.coeffs[a] * t.coeffs[b];
        for (std::size_t i = 0; i < D; ++i) {
          if (l.coeffs[i].is_zero()) continue;
          for (std::size_t j = 0; j < D; ++j)
            if (!r.coeffs[j].is_zero()) out.coeffs[i * D + j] += c * l.coeffs[i] * r.coeffs[j];
        }
      }
    }
    return out;
  };

  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j)
      if (!(coproduct(multiply(basis(i), basis(j))) == tensor_product(delta[i], delta[j]))) return false;

  for (std::size_t e = 0; e < D; ++e) {
    std::vector<CycloScalar> left(D * D * D, CycloScalar::zero(n_)), right(D * D * D, CycloScalar::zero(n_));
    CrossedElement left_counit = zero(), right_counit = zero();
    CrossedElement left_antipode = zero(), right_antipode = zero();
    for (std::size_t ab = 0; ab < D * D; ++ab) {
      const CycloScalar& c = delta[e].coeffs[ab];
      if (c.is_zero()) continue;
      const std::size_t a = ab / D, b = ab % D;
      for (std::size_t k = 0; k < D * D; ++k) {
        if (!delta[a].coeffs[k].is_zero()) left[k * D + b] += c * delta[a].coeffs[k];
        if (!delta[b].coeffs[k].is_zero()) right[a * D * D + k] += c * delta[b].coeffs[k];
      }
      left_counit.coeffs[b] += c * counit(basis(a));
      right_counit.coeffs[a] += c * counit(basis(b));
      const CrossedElement sa = multiply(antipode(basis(a)), basis(b));
      const CrossedElement sb = multiply(basis(a), antipode(basis(b)));
      for (std::size_t k = 0; k < D; ++k) {
        left_antipode.coeffs[k] += c * sa.coeffs[k];
        right_antipode.coeffs[k] += c * sb.coeffs[k];
      }
    }
    if (left != right) return false;
    if (!(left_counit == basis(e)) || !(right_counit == basis(e))) return false;
    CrossedElement expected = one();
    for (auto& v : expected.coeffs) v *= counit(basis(e));
    if (!(left_antipode == expected) || !(right_antipode == expected)) return false;
  }
  return true;
}

CrossedElement crossed_product(std::size_t a, std::size_t b, unsigned modulus) {
  const CrossedAlgebra alg(modulus);
  return alg.multiply(alg.basis(a), alg.basis(b));
}

bool grouplike_check_crossed(const std::vector<CycloScalar>& f, const std::vector<CycloScalar>& h, unsigned modulus) {
  const CrossedAlgebra alg(modulus);
  const CrossedElement sigma = alg.from_tables(f, h);
  if (sigma.is_zero()) return false;
  return alg.coproduct(sigma) == alg.tensor(sigma, sigma);
}

namespace {

using LinearMap = std::function<CrossedElement(std::size_t)>;

bool mpi_from_antipode(const CrossedAlgebra& alg, Point base, const std::vector<CycloScalar>& f,
                       const LinearMap& twisted) {
  const unsigned n = alg.modulus();
  const std::size_t c = alg.index(base);
  if (!(f.at(c).embed(n) == CycloScalar::one(n))) return false;
  std::vector<CycloScalar> f_inv(f.size());
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (f[p].is_zero()) return false;
    f_inv[p] = f[p].embed(n).inverse();
  }
  const std::vector<CycloScalar> none(f.size(), CycloScalar::zero(n));
  const CrossedElement sigma = alg.from_tables(f, none), sigma_inv = alg.from_tables(f_inv, none);

  const auto apply = [&](const CrossedElement& a) {
    CrossedElement out = alg.zero();
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
      if (a.coeffs[i].is_zero()) continue;
      const CrossedElement image = twisted(i);
      for (std::size_t k = 0; k < alg.dimension(); ++k) out.coeffs[k] += a.coeffs[i] * image.coeffs[k];
    }
    return out;
  };
  for (std::size_t i = 0; i < alg.dimension(); ++i) {
    const CrossedElement b = alg.basis(i);
    if (!(apply(apply(b)) == alg.multiply(alg.multiply(sigma, b), sigma_inv))) return false;
  }
  return true;
}

}  // namespace

bool mpi_check_crossed(Point base, int eps_x, const std::vector<CycloScalar>& f, unsigned modulus) {
  const CrossedAlgebra alg(modulus);
  if (base[0] % modulus != base[1] % modulus) return false;
  const std::size_t c = alg.index(base), P = alg.points(), D = alg.dimension();
  const CycloScalar eps = CycloScalar::from_int(modulus, eps_x);
  // delta(e_p) = [p = c], delta(e_p x) = eps [p = c]
  const auto delta = [&](std::size_t i) {
    if (i % P != c) return CycloScalar::zero(modulus);
    return i < P ? CycloScalar::one(modulus) : eps;
  };
  std::vector<CrossedElement> images(D);
  for (std::size_t i = 0; i < D; ++i) {
    const CrossedTensor cop = alg.coproduct(alg.basis(i));
    CrossedElement out = alg.zero();
    for (std::size_t ab = 0; ab < D * D; ++ab) {
      if (cop.coeffs[ab].is_zero()) continue;
      const CycloScalar d = delta(ab / D);
      if (d.is_zero()) continue;
      const CrossedElement s = alg.antipode(alg.basis(ab % D));
      for (std::size_t k = 0; k < D; ++k) out.coeffs[k] += cop.coeffs[ab] * d * s.coeffs[k];
    }
    images[i] = std::move(out);
  }
  return mpi_from_antipode(alg, base, f, [&](std::size_t i) { return images[i]; });
}

bool mpi_check_crossed_closed_form(Point base, int eps_x, const std::vector<CycloScalar>& f, unsigned modulus) {
  const CrossedAlgebra alg(modulus);
  if (base[0] % modulus != base[1] % modulus) return false;
  const std::size_t c = alg.index(base), P = alg.points();
  const CycloScalar eps = CycloScalar::from_int(modulus, eps_x);
  // S(e_p) = e_{c-p}; S(e_p x) = S(x) S(e_p) = eps x e_{c-p} = eps e_{(c-p)^} x.
  return mpi_from_antipode(alg, base, f, [&](std::size_t i) {
    CrossedElement out = alg.zero();
    const std::size_t p = i % P, image = alg.add(c, alg.negate(p));
    if (i < P)
      out.coeffs[image] = CycloScalar::one(modulus);
    else
      out.coeffs[P + alg.flip(image)] = eps;
    return out;
  });
}

std::vector<CrossedCharacter> crossed_characters(unsigned modulus) {
  const CrossedAlgebra alg(modulus);
  std::vector<CrossedCharacter> out;
  for (unsigned a = 0; a < modulus; ++a)
    for (unsigned b = 0; b < modulus; ++b) {
      CrossedCharacter chi{a, b, {}};
      for (std::size_t p = 0; p < alg.points(); ++p) {
        const Point q = alg.point(p);
        chi.values.push_back(CycloScalar::zeta(modulus, static_cast<long>(a * q[0] + b * q[1])));
      }
      out.push_back(std::move(chi));
    }
  return out;
}

std::vector<GrouplikeRow> classify_grouplike(unsigned modulus) {
  const auto chars = crossed_characters(modulus);
  const std::size_t P = static_cast<std::size_t>(modulus) * modulus;
  struct Candidate {
    std::string label;
    std::vector<CycloScalar> values;
  };
  std::vector<Candidate> candidates{{"0", std::vector<CycloScalar>(P, CycloScalar::zero(modulus))}};
  for (const auto& chi : chars)
    candidates.push_back({"char:" + std::to_string(chi.a) + "," + std::to_string(chi.b), chi.values});

  const std::size_t k = candidates.size();
  std::vector<GrouplikeRow> rows(k * k);
  const auto total = static_cast<std::ptrdiff_t>(k * k);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const auto& f = candidates[static_cast<std::size_t>(idx) / k];
    const auto& h = candidates[static_cast<std::size_t>(idx) % k];
    rows[static_cast<std::size_t>(idx)] = GrouplikeRow{f.label, h.label, grouplike_check_crossed(f.values, h.values, modulus)};
  }
  return rows;
}

std::vector<MpiRow> classify_mpi(unsigned modulus) {
  const auto chars = crossed_characters(modulus);
  const std::size_t P = static_cast<std::size_t>(modulus) * modulus;
  std::vector<MpiRow> rows(P * 2 * chars.size());
  const auto total = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const auto i = static_cast<std::size_t>(idx);
    const std::size_t c = i / (2 * chars.size());
    const int eps = (i / chars.size()) % 2 == 0 ? 1 : -1;
    const auto& chi = chars[i % chars.size()];
    const Point base{static_cast<unsigned>(c / modulus), static_cast<unsigned>(c % modulus)};
    rows[i] = MpiRow{base, eps, chi.a, chi.b, mpi_check_crossed(base, eps, chi.values, modulus),
                     mpi_check_crossed_closed_form(base, eps, chi.values, modulus)};
  }
  return rows;
}

}  // namespace mhc
