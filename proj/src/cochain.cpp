#include "mhc/cochain.hpp"

#include <stdexcept>

#include "mhc/matrix.hpp"

namespace mhc {

Cochain::Cochain(GroupPtr group, std::size_t degree, unsigned order)
    : group_(std::move(group)), degree_(degree), order_(order) {
  table_.assign(TupleIndexer(group_->order(), degree).size(), CycloScalar::zero(order));
}

Cochain::Cochain(GroupPtr group, std::size_t degree, std::vector<CycloScalar> table)
    : group_(std::move(group)), degree_(degree), table_(std::move(table)) {
  if (table_.size() != TupleIndexer(group_->order(), degree).size())
    throw std::invalid_argument("cochain table has the wrong length for its degree");
  order_ = table_.front().order();
}

Cochain Cochain::basis(GroupPtr group, std::size_t degree, unsigned order, std::size_t index) {
  Cochain f(std::move(group), degree, order);
  f.table_.at(index) = CycloScalar::one(order);
  return f;
}

Cochain Cochain::random(GroupPtr group, std::size_t degree, unsigned order, std::mt19937_64& rng) {
  Cochain f(std::move(group), degree, order);
  std::uniform_int_distribution<long> coeff(-3, 3), power(0, static_cast<long>(order) - 1);
  for (auto& v : f.table_) v = CycloScalar::zeta(order, power(rng)) * CycloScalar::from_int(order, coeff(rng));
  return f;
}

const CycloScalar& Cochain::at(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != degree_) throw std::invalid_argument("tuple length differs from cochain degree");
  return table_[TupleIndexer(group_->order(), degree_).encode(tuple)];
}

bool Cochain::is_zero() const {
  for (const auto& v : table_)
    if (!v.is_zero()) return false;
  return true;
}

Cochain& Cochain::operator+=(const Cochain& rhs) {
  if (rhs.degree_ != degree_) throw std::invalid_argument("adding cochains of different degrees");
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] += rhs.table_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs) {
  if (rhs.degree_ != degree_) throw std::invalid_argument("subtracting cochains of different degrees");
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] -= rhs.table_[i];
  return *this;
}

Cochain& Cochain::operator*=(const CycloScalar& factor) {
  for (auto& v : table_) v *= factor;
  return *this;
}

namespace {

// Builds a cochain of degree `degree` entry by entry from a tuple rule.
template <class Rule>
Cochain tabulate(const GroupPtr& g, std::size_t degree, unsigned order, Rule rule) {
  const TupleIndexer idx(g->order(), degree);
  std::vector<CycloScalar> table(idx.size(), CycloScalar::zero(order));
  std::vector<std::size_t> t;
  for (std::size_t y = 0; y < idx.size(); ++y) {
    idx.decode(y, t);
    table[y] = rule(t);
  }
  return Cochain(g, degree, std::move(table));
}

CycloScalar sign(unsigned order, std::size_t k) { return CycloScalar::from_int(order, k % 2 == 0 ? 1 : -1); }

}  // namespace

Cochain coface(std::size_t i, const Cochain& f, const Character& sigma) {
  const std::size_t n = f.degree();
  if (i > n + 1) throw std::out_of_range("coface index " + std::to_string(i) + " on degree " + std::to_string(n));
  const GroupTable& g = *f.group();
  return tabulate(f.group(), n + 1, f.order(), [&](const std::vector<std::size_t>& t) {
    if (i == 0) return f.at(std::vector<std::size_t>(t.begin() + 1, t.end()));
    if (i == n + 1) return f.at(std::vector<std::size_t>(t.begin(), t.end() - 1)) * sigma(t.back());
    std::vector<std::size_t> merged(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
    merged.push_back(g.multiply(t[i - 1], t[i]));
    merged.insert(merged.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
    return f.at(merged);
  });
}

Cochain codegeneracy(std::size_t j, const Cochain& f) {
  const std::size_t n = f.degree();
  if (j == 0 || j > n)
    throw std::out_of_range("codegeneracy index " + std::to_string(j) + " on degree " + std::to_string(n));
  const std::size_t e = f.group()->identity();
  return tabulate(f.group(), n - 1, f.order(), [&](const std::vector<std::size_t>& t) {
    std::vector<std::size_t> full(t);
    full.insert(full.begin() + static_cast<std::ptrdiff_t>(j - 1), e);
    return f.at(full);
  });
}

Cochain coboundary(const Cochain& f, const Character& sigma) {
  Cochain out(f.group(), f.degree() + 1, f.order());
  for (std::size_t i = 0; i <= f.degree() + 1; ++i) {
    const Cochain term = coface(i, f, sigma);
    if (i % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

Cochain coboundary_closed_form(const Cochain& f, const Character& sigma) {
  const std::size_t n = f.degree();
  const auto rows = coboundary_rows(*f.group(), sigma, n);
  std::vector<CycloScalar> table(rows.size(), CycloScalar::zero(f.order()));
  for (std::size_t y = 0; y < rows.size(); ++y)
    for (const auto& [x, coeff] : rows[y]) table[y] += coeff * f[x];
  return Cochain(f.group(), n + 1, std::move(table));
}

CohomologyResult hochschild_dim(const GroupPtr& g, const Character& sigma, std::size_t n, std::size_t cap) {
  checked_power(g->order(), n + 1, cap);
  CohomologyResult r;
  r.degree = n;
  const std::size_t cols = TupleIndexer(g->order(), n).size();
  r.dim_kernel = cols - rank(coboundary_rows(*g, sigma, n), cols);
  if (n > 0) r.dim_image_prev = rank(coboundary_rows(*g, sigma, n - 1), cols / g->order());
  r.dim = r.dim_kernel - r.dim_image_prev;
  return r;
}

Cochain xi_transform(const Cochain& f) {
  const GroupTable& g = *f.group();
  return tabulate(f.group(), f.degree(), f.order(), [&](const std::vector<std::size_t>& t) {
    std::vector<std::size_t> reversed(t.rbegin(), t.rend());
    for (auto& x : reversed) x = g.inverse(x);
    return f.at(reversed);
  });
}

Cochain signed_xi_transform(const Cochain& f) {
  const std::size_t n = f.degree();
  Cochain out = xi_transform(f);
  if ((n * (n + 1) / 2) % 2 == 1) out *= CycloScalar::from_int(f.order(), -1);
  return out;
}

Cochain group_differential(const Cochain& phi, const Character& sigma) {
  const std::size_t n = phi.degree();
  const GroupTable& g = *phi.group();
  const unsigned order = phi.order();
  return tabulate(phi.group(), n + 1, order, [&](const std::vector<std::size_t>& t) {
    CycloScalar acc = sigma(t.front()).inverse() * phi.at(std::vector<std::size_t>(t.begin() + 1, t.end()));
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<std::size_t> merged(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
      merged.push_back(g.multiply(t[i - 1], t[i]));
      merged.insert(merged.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
      acc += sign(order, i) * phi.at(merged);
    }
    acc += sign(order, n + 1) * phi.at(std::vector<std::size_t>(t.begin(), t.end() - 1));
    return acc;
  });
}

bool verify_xi_chain_map(const GroupPtr& g, const Character& sigma, std::size_t n, std::size_t trials,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const Cochain f = Cochain::random(g, n, sigma.order(), rng);
    if (!(signed_xi_transform(coboundary(f, sigma)) == group_differential(signed_xi_transform(f), sigma)))
      return false;
  }
  return true;
}

}  // namespace mhc

namespace mhc {

std::optional<std::size_t> coboundary_square_failure(const GroupTable& g, const Character& sigma, std::size_t n) {
  const auto inner = coboundary_rows(g, sigma, n);
  const auto outer = coboundary_rows(g, sigma, n + 1);
  std::size_t first = outer.size();
  const auto total = static_cast<std::ptrdiff_t>(outer.size());
#pragma omp parallel
  {
    const CycloScalar zero = CycloScalar::zero(sigma.order());
    std::vector<CycloScalar> acc(TupleIndexer(g.order(), n).size(), zero);
    std::vector<std::size_t> touched;
#pragma omp for schedule(static) reduction(min : first)
    for (std::ptrdiff_t k = 0; k < total; ++k) {
      const auto r = static_cast<std::size_t>(k);
      for (std::size_t x : touched) acc[x] = zero;
      touched.clear();
      for (const auto& [y, a] : outer[r])
        for (const auto& [x, b] : inner[y]) {
          acc[x] += a * b;
          touched.push_back(x);
        }
      for (std::size_t x : touched)
        if (!acc[x].is_zero()) {
          first = std::min(first, r);
          break;
        }
    }
  }
  if (first == outer.size()) return std::nullopt;
  return first;
}

Report verify_cosimplicial_identities(const GroupPtr& gp, const Character& sigma, std::size_t n_max,
                                      std::size_t cap) {
  checked_power(gp->order(), n_max + 2, cap);
  const GroupTable& g = *gp;
  const unsigned order = sigma.order();
  Report report;
  const auto record = [&](std::string name, std::size_t n, std::size_t out_degree, std::optional<std::size_t> failure) {
    CheckEntry e{std::move(name), !failure.has_value(), n, {}};
    if (failure) {
      std::vector<std::size_t> t;
      TupleIndexer(g.order(), out_degree).decode(*failure, t);
      for (std::size_t x : t) e.counterexample.push_back(g.name(x));
      if (t.empty()) e.counterexample.push_back(kEmptyTuple);
    }
    report.push_back(std::move(e));
  };
  const auto first_failure = [](std::optional<std::size_t> current, std::optional<std::size_t> next) {
    return current ? current : next;
  };
  const auto d = [&](std::size_t n, std::size_t i) { return coface_operator(g, sigma, n, i); };
  const auto s = [&](std::size_t n, std::size_t j) { return codegeneracy_operator(g, order, n + 1, j); };

  for (std::size_t n = 0; n <= n_max; ++n) {
    std::optional<std::size_t> failure;
    for (std::size_t j = 1; j <= n + 2; ++j)
      for (std::size_t i = 0; i < j; ++i)
        failure = first_failure(failure, first_difference(compose(d(n + 1, j), d(n, i)), compose(d(n + 1, i), d(n, j - 1))));
    record("coface_coface", n, n + 2, failure);

    failure.reset();
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        failure = first_failure(failure, first_difference(compose(s(n, j), s(n + 1, i)), compose(s(n, i), s(n + 1, j + 1))));
    record("codegeneracy_codegeneracy", n, n, failure);

    // s_j : C^{n+1} -> C^n after delta_i : C^n -> C^{n+1}.
    failure.reset();
    if (n >= 1) {
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n + 1; ++i) {
          const MonomialOperator lhs = compose(s(n, j), d(n, i));
          MonomialOperator rhs;
          if (i < j)
            rhs = compose(d(n - 1, i), s(n - 1, j - 1));
          else if (i == j || i == j + 1)
            rhs = identity_operator(lhs.in_size, order);
          else
            rhs = compose(d(n - 1, i - 1), s(n - 1, j));
          failure = first_failure(failure, first_difference(lhs, rhs));
        }
    } else {
      for (std::size_t i = 0; i <= 1; ++i)
        failure = first_failure(failure, first_difference(compose(s(0, 0), d(0, i)), identity_operator(1, order)));
    }
    record("codegeneracy_coface", n, n, failure);

    record("b_squared", n, n + 2, coboundary_square_failure(g, sigma, n));
  }
  return report;
}

}  // namespace mhc
