#include "mhc/cocyclic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "mhc/error.hpp"
#include "mhc/matrix.hpp"

namespace mhc {

Cochain tau(const Cochain& f, const Character& sigma) {
  const std::size_t n = f.degree();
  if (n == 0) return f;
  const GroupTable& g = *f.group();
  const TupleIndexer idx(g.order(), n);
  std::vector<CycloScalar> table(idx.size());
  std::vector<std::size_t> t, src;
  for (std::size_t y = 0; y < idx.size(); ++y) {
    idx.decode(y, t);
    std::size_t product = g.identity();
    for (std::size_t x : t) product = g.multiply(product, x);
    src.assign(1, g.inverse(product));
    src.insert(src.end(), t.begin(), t.end() - 1);
    table[y] = f.at(src) * sigma(t.back());
  }
  return Cochain(f.group(), n, std::move(table));
}

bool is_cyclic_cochain(const Cochain& f, const Character& sigma) {
  Cochain t = tau(f, sigma);
  if (f.degree() % 2 == 1) t *= CycloScalar::from_int(f.order(), -1);
  return t == f;
}

Cochain cyclic_projector(const Cochain& f, const Character& sigma) {
  const std::size_t n = f.degree();
  const CycloScalar sign = CycloScalar::from_int(f.order(), n % 2 == 0 ? 1 : -1);
  Cochain acc = f, power = f;
  for (std::size_t k = 1; k <= n; ++k) {
    power = tau(power, sigma) * sign;
    acc += power;
  }
  return acc * CycloScalar::from_rational(f.order(), Rational(1, static_cast<long>(n + 1)));
}

namespace {

std::vector<std::string> tuple_names(const GroupTable& g, std::size_t degree, std::size_t index) {
  std::vector<std::size_t> t;
  TupleIndexer(g.order(), degree).decode(index, t);
  std::vector<std::string> out;
  for (std::size_t x : t) out.push_back(g.name(x));
  if (t.empty()) out.push_back(kEmptyTuple);
  return out;
}

CheckEntry make_entry(const GroupTable& g, std::string name, std::size_t n, std::size_t out_degree,
                      std::optional<std::size_t> failure) {
  CheckEntry e{std::move(name), !failure.has_value(), n, {}};
  if (failure) e.counterexample = tuple_names(g, out_degree, *failure);
  return e;
}

std::string indexed(const char* family, std::size_t p) { return std::string(family) + "[" + std::to_string(p) + "]"; }

// Drives both implementations. `check(name, n, out_degree, lhs, rhs)` receives
// the two sides as callables producing the same kind of object.
template <class Ops, class Check>
void run_suite(const Ops& ops, std::size_t n_max, Check&& check) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t p = 1; p <= n + 1; ++p)
      check(indexed("tau_coface", p), n, n + 1, ops.compose(ops.tau(n + 1), ops.coface(n, p)),
            ops.compose(ops.coface(n, p - 1), ops.tau(n)));
    check(std::string("tau_coface0"), n, n + 1, ops.compose(ops.tau(n + 1), ops.coface(n, 0)),
          ops.coface(n, n + 1));
    for (std::size_t p = 1; p <= n; ++p)
      check(indexed("tau_codegeneracy", p), n, n, ops.compose(ops.tau(n), ops.codegeneracy(n + 1, p)),
            ops.compose(ops.codegeneracy(n + 1, p - 1), ops.tau(n + 1)));
    check(std::string("tau_codegeneracy0"), n, n, ops.compose(ops.tau(n), ops.codegeneracy(n + 1, 0)),
          ops.compose(ops.codegeneracy(n + 1, n), ops.compose(ops.tau(n + 1), ops.tau(n + 1))));
    auto power = ops.tau(n);
    for (std::size_t k = 1; k <= n; ++k) power = ops.compose(ops.tau(n), power);
    check(std::string("tau_cyclic"), n, n, power, ops.identity(n));
  }
}

struct MonomialOps {
  const GroupTable& g;
  const Character& sigma;
  const TauBuilder& tau_builder;
  mutable std::map<std::size_t, MonomialOperator> tau_cache;

  MonomialOperator tau(std::size_t n) const {
    auto it = tau_cache.find(n);
    if (it == tau_cache.end()) it = tau_cache.emplace(n, tau_builder(g, sigma, n)).first;
    return it->second;
  }
  MonomialOperator coface(std::size_t n, std::size_t i) const { return coface_operator(g, sigma, n, i); }
  MonomialOperator codegeneracy(std::size_t n, std::size_t p) const {
    return codegeneracy_operator(g, sigma.order(), n, p);
  }
  MonomialOperator identity(std::size_t n) const {
    return identity_operator(TupleIndexer(g.order(), n).size(), sigma.order());
  }
  MonomialOperator compose(const MonomialOperator& a, const MonomialOperator& b) const { return mhc::compose(a, b); }
};

// Cochain-level maps, represented as functions on cochains.
using CochainMap = std::function<Cochain(const Cochain&)>;

struct CochainOps {
  const Character& sigma;
  CochainMap tau(std::size_t) const {
    return [s = sigma](const Cochain& f) { return mhc::tau(f, s); };
  }
  CochainMap coface(std::size_t, std::size_t i) const {
    return [s = sigma, i](const Cochain& f) { return mhc::coface(i, f, s); };
  }
  CochainMap codegeneracy(std::size_t, std::size_t p) const {
    return [p](const Cochain& f) { return mhc::codegeneracy(p + 1, f); };
  }
  CochainMap identity(std::size_t) const {
    return [](const Cochain& f) { return f; };
  }
  CochainMap compose(CochainMap a, CochainMap b) const {
    return [a = std::move(a), b = std::move(b)](const Cochain& f) { return a(b(f)); };
  }
};

}  // namespace

Report verify_cocyclic_identities(const GroupPtr& g, const Character& sigma, std::size_t n_max,
                                  const TauBuilder& tau_builder, std::size_t cap) {
  checked_power(g->order(), n_max + 1, cap);
  Report report;
  MonomialOps ops{*g, sigma, tau_builder, {}};
  run_suite(ops, n_max, [&](std::string name, std::size_t n, std::size_t out_degree, const MonomialOperator& lhs,
                            const MonomialOperator& rhs) {
    report.push_back(make_entry(*g, std::move(name), n, out_degree, first_difference(lhs, rhs)));
  });
  return report;
}

namespace serial {

Report verify_cocyclic_identities(const GroupPtr& g, const Character& sigma, std::size_t n_max) {
  Report report;
  CochainOps ops{sigma};
  const unsigned order = sigma.order();
  run_suite(ops, n_max, [&](std::string name, std::size_t n, std::size_t out_degree, const CochainMap& lhs,
                            const CochainMap& rhs) {
    // Input degree is recovered from the output degree of each family.
    const std::size_t in_degree = name.rfind("tau_codegeneracy", 0) == 0 ? n + 1 : n;
    std::optional<std::size_t> failure;
    const std::size_t size = TupleIndexer(g->order(), in_degree).size();
    for (std::size_t x = 0; x < size; ++x) {
      const Cochain basis = Cochain::basis(g, in_degree, order, x);
      const Cochain a = lhs(basis), b = rhs(basis);
      for (std::size_t y = 0; y < a.size(); ++y)
        if (!(a[y] == b[y])) {
          if (!failure || y < *failure) failure = y;
          break;
        }
    }
    report.push_back(make_entry(*g, std::move(name), n, out_degree, failure));
  });
  return report;
}

}  // namespace serial

namespace {

using SparseVector = SparseRow;

struct SignedCyclicOperator {
  MonomialOperator op;              // (-1)^n tau_n
  std::vector<std::size_t> preimage;  // preimage[source[y]] = y
};

SignedCyclicOperator signed_tau(const GroupTable& g, const Character& sigma, std::size_t n) {
  SignedCyclicOperator t;
  t.op = tau_operator(g, sigma, n);
  if (n % 2 == 1) t.op = scaled(std::move(t.op), CycloScalar::from_int(sigma.order(), -1));
  t.preimage.assign(t.op.out_size(), t.op.out_size());
  for (std::size_t y = 0; y < t.op.out_size(); ++y) {
    if (t.preimage[t.op.source[y]] != t.op.out_size()) throw std::logic_error("tau is not a permutation");
    t.preimage[t.op.source[y]] = y;
  }
  return t;
}

// Projections P e_x of indicator cochains, one per orbit of tau on indices;
// vanishing projections are dropped. Supports are disjoint, so the family is
// a basis of the cyclic subspace.
std::vector<SparseVector> cyclic_basis(const SignedCyclicOperator& t, std::size_t n, unsigned order) {
  const std::size_t size = t.op.out_size();
  const CycloScalar weight = CycloScalar::from_rational(order, Rational(1, static_cast<long>(n + 1)));
  std::vector<bool> seen(size, false);
  std::vector<SparseVector> basis;
  for (std::size_t x = 0; x < size; ++x) {
    if (seen[x]) continue;
    std::map<std::size_t, CycloScalar> acc;
    std::size_t cur = x;
    CycloScalar coeff = CycloScalar::one(order);
    for (std::size_t k = 0; k <= n; ++k) {
      seen[cur] = true;
      auto [it, inserted] = acc.try_emplace(cur, coeff);
      if (!inserted) it->second += coeff;
      // T e_cur = scale[y] e_y with y the unique preimage of cur.
      const std::size_t y = t.preimage[cur];
      coeff *= t.op.scale[y];
      cur = y;
    }
    SparseVector v;
    for (auto& [i, c] : acc)
      if (!c.is_zero()) v.emplace_back(i, c * weight);
    if (!v.empty()) basis.push_back(std::move(v));
  }
  return basis;
}

SparseVector apply_columns(const std::vector<SparseRow>& columns, const SparseVector& v, unsigned order) {
  std::map<std::size_t, CycloScalar> acc;
  for (const auto& [x, vx] : v)
    for (const auto& [y, byx] : columns[x]) {
      auto [it, inserted] = acc.try_emplace(y, CycloScalar::zero(order));
      it->second += byx * vx;
    }
  SparseVector out;
  for (auto& [y, c] : acc)
    if (!c.is_zero()) out.emplace_back(y, std::move(c));
  return out;
}

bool fixed_by(const SignedCyclicOperator& t, const SparseVector& w) {
  const auto lookup = [&](std::size_t i) -> const CycloScalar* {
    auto it = std::lower_bound(w.begin(), w.end(), i, [](const auto& e, std::size_t k) { return e.first < k; });
    return it != w.end() && it->first == i ? &it->second : nullptr;
  };
  for (const auto& [x, wx] : w) {
    const std::size_t y = t.preimage[x];
    const CycloScalar* wy = lookup(y);
    if (wy == nullptr || !(*wy == t.op.scale[y] * wx)) return false;
  }
  return true;
}

std::vector<SparseVector> image_of_cyclic(const GroupTable& g, const Character& sigma, std::size_t n) {
  const SignedCyclicOperator source = signed_tau(g, sigma, n);
  const SignedCyclicOperator target = signed_tau(g, sigma, n + 1);
  const auto columns = transpose_rows(coboundary_rows(g, sigma, n), source.op.out_size());
  std::vector<SparseVector> images;
  for (const auto& v : cyclic_basis(source, n, sigma.order())) {
    SparseVector w = apply_columns(columns, v, sigma.order());
    if (!fixed_by(target, w))
      throw CyclicityError("b maps a cyclic cochain of degree " + std::to_string(n) +
                           " outside the cyclic subspace");
    images.push_back(std::move(w));
  }
  return images;
}

}  // namespace

CohomologyResult cyclic_cohomology_dim(const GroupPtr& g, const Character& sigma, std::size_t n, std::size_t cap) {
  checked_power(g->order(), n + 1, cap);
  CohomologyResult r;
  r.degree = n;
  const std::size_t next = TupleIndexer(g->order(), n + 1).size();
  const auto images = image_of_cyclic(*g, sigma, n);
  r.dim_kernel = images.size() - rank(images, next);
  if (n > 0) r.dim_image_prev = rank(image_of_cyclic(*g, sigma, n - 1), next / g->order());
  r.dim = r.dim_kernel - r.dim_image_prev;
  return r;
}

}  // namespace mhc
