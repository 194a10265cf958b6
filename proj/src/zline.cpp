#include "mhc/zline.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "json.hpp"
#include "mhc/error.hpp"
#include "mhc/matrix.hpp"

namespace mhc {

CycloScalar parse_lambda(std::string_view text) {
  CycloScalar value;
  if (text.rfind("zeta:", 0) == 0) {
    const std::string rest(text.substr(5));
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw ParseError("expected zeta:N:k, got '" + std::string(text) + "'");
    long order = 0, k = 0;
    try {
      std::size_t used = 0;
      order = std::stol(rest.substr(0, colon), &used);
      if (used != colon) throw ParseError("bad order");
      const std::string kk = rest.substr(colon + 1);
      k = std::stol(kk, &used);
      if (used != kk.size()) throw ParseError("bad exponent");
    } catch (const std::exception&) {
      throw ParseError("expected zeta:N:k with integers N >= 1 and k, got '" + std::string(text) + "'");
    }
    if (order < 1 || order > 1000) throw ParseError("zeta order must lie in [1, 1000]");
    value = CycloScalar::zeta(static_cast<unsigned>(order), k);
  } else {
    value = CycloScalar::from_rational(1, parse_rational(text));
  }
  if (value.is_zero()) throw ValidationError("lambda must be nonzero");
  return value;
}

ZFunction ZFunction::finite_support(std::map<long, CycloScalar> values, unsigned order) {
  Term t{Kind::finite_support, CycloScalar::one(order), CycloScalar::one(order), 0, std::move(values), 0};
  return ZFunction(order, {std::move(t)});
}

ZFunction ZFunction::constant(const CycloScalar& value) {
  const unsigned order = value.order();
  return ZFunction(order, {Term{Kind::constant, value, CycloScalar::one(order), 0, {}, 0}});
}

ZFunction ZFunction::sigma_power(const CycloScalar& base, const CycloScalar& coefficient) {
  if (base.is_zero()) throw ValidationError("sigma_power base must be nonzero");
  auto [b, c] = lift_to_common_order(base, coefficient);
  const unsigned order = b.order();
  return ZFunction(order, {Term{Kind::sigma_power, c, b, 0, {}, 0}});
}

ZFunction ZFunction::step(unsigned order, long threshold) {
  return ZFunction(order, {Term{Kind::step, CycloScalar::one(order), CycloScalar::one(order), threshold, {}, 0}});
}

ZFunction ZFunction::table(std::map<long, CycloScalar> values, long window, unsigned order) {
  for (const auto& [n, v] : values)
    if (n < -window || n > window) throw ValidationError("table entry outside its window");
  return ZFunction(order, {Term{Kind::table, CycloScalar::one(order), CycloScalar::one(order), 0, std::move(values), window}});
}

CycloScalar ZFunction::operator()(long n) const {
  CycloScalar acc = CycloScalar::zero(order_);
  for (const auto& t : terms_) {
    switch (t.kind) {
      case Kind::finite_support:
      case Kind::table: {
        auto it = t.values.find(n);
        if (it != t.values.end()) acc += t.coefficient * it->second.embed(order_);
        break;
      }
      case Kind::constant:
        acc += t.coefficient.embed(order_);
        break;
      case Kind::sigma_power:
        acc += (t.coefficient * t.base.pow(n)).embed(order_);
        break;
      case Kind::step:
        if (n >= t.threshold) acc += t.coefficient.embed(order_);
        break;
    }
  }
  return acc;
}

ZFunction ZFunction::operator+(const ZFunction& rhs) const {
  const unsigned order = std::lcm(order_, rhs.order_);
  std::vector<Term> terms = terms_;
  terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
  return ZFunction(order, std::move(terms));
}

ZFunction parse_zfunction(std::string_view text, const CycloScalar& lambda) {
  const unsigned order = lambda.order();
  if (text == "step") return ZFunction::step(order);
  if (text.rfind("geom:", 0) == 0) {
    const std::string rest(text.substr(5));
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw ParseError("expected geom:a,b");
    const Rational a = parse_rational(rest.substr(0, comma));
    const Rational b = parse_rational(rest.substr(comma + 1));
    return ZFunction::constant(CycloScalar::from_rational(order, a)) +
           ZFunction::sigma_power(lambda.inverse(), CycloScalar::from_rational(order, b));
  }
  if (text.rfind("finite:", 0) == 0) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text.substr(7));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("finite: expects a JSON object: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("finite: expects a JSON object mapping integers to values");
    std::map<long, CycloScalar> values;
    for (const auto& [key, v] : j.items()) {
      long n = 0;
      try {
        std::size_t used = 0;
        n = std::stol(key, &used);
        if (used != key.size()) throw ParseError("bad key");
      } catch (const std::exception&) {
        throw ParseError("finite: key '" + key + "' is not an integer");
      }
      std::string repr;
      if (v.is_string())
        repr = v.get<std::string>();
      else if (v.is_number_integer())
        repr = std::to_string(v.get<long>());
      else
        throw ParseError("finite: values must be integers or rational strings");
      values.emplace(n, CycloScalar::from_rational(order, parse_rational(repr)));
    }
    return ZFunction::finite_support(std::move(values), order);
  }
  throw ParseError("unknown q function '" + std::string(text) + "' (expected step, finite:<json> or geom:a,b)");
}

CycloScalar DiagonalFamily::operator()(long m, long n) const {
  return m + n == 0 ? q(m) : CycloScalar::zero(q.order());
}

RecurrenceSolution solve_hh1_recurrence(const CycloScalar& lambda, const CycloScalar& c, long window) {
  if (lambda.is_zero()) throw ValidationError("lambda must be nonzero");
  if (window < 1) throw ValidationError("window must be at least 1");
  auto [l, cc] = lift_to_common_order(lambda, c);
  const unsigned order = l.order();
  RecurrenceSolution s;
  s.window = window;
  s.values.assign(static_cast<std::size_t>(2 * window + 1), CycloScalar::zero(order));
  const auto slot = [&](long n) -> CycloScalar& { return s.values[static_cast<std::size_t>(n + window)]; };
  slot(1) = cc;
  for (long n = 1; n < window; ++n) slot(n + 1) = cc + slot(n) * l;
  const CycloScalar inv = l.inverse();
  for (long n = 0; n > -window; --n) slot(n - 1) = (slot(n) - cc) * inv;

  s.matches_closed_form = true;
  const CycloScalar one = CycloScalar::one(order);
  if (l == one) {
    for (long n = -window; n <= window; ++n)
      s.matches_closed_form = s.matches_closed_form && slot(n) == cc * CycloScalar::from_int(order, n);
  } else {
    const CycloScalar beta = cc / (l - one);
    for (long n = -window; n <= window; ++n)
      s.matches_closed_form = s.matches_closed_form && slot(n) == beta * (l.pow(n) - one);
  }
  return s;
}

bool satisfies_hh1_recurrence(const RecurrenceSolution& f, const CycloScalar& lambda) {
  const long w = f.window;
  const CycloScalar l = lambda.embed(f.values.front().order());
  for (long n = -w; n <= w; ++n)
    for (long m = -w; m <= w; ++m) {
      if (n + m < -w || n + m > w) continue;
      if (!(f.at(n + m) == f.at(m) + f.at(n) * l.pow(m))) return false;
    }
  return true;
}

HH1Result hh1_z_dim(const CycloScalar& lambda, long window) {
  if (window < 2) throw ValidationError("window must be at least 2");
  if (lambda.is_zero()) throw ValidationError("lambda must be nonzero");
  const unsigned order = lambda.order();
  const std::size_t cols = static_cast<std::size_t>(2 * window + 1);
  const auto col = [&](long n) { return static_cast<std::size_t>(n + window); };

  std::vector<SparseRow> rows;
  for (long n = -window; n <= window; ++n)
    for (long m = -window; m <= window; ++m) {
      if (n + m < -window || n + m > window) continue;
      std::map<std::size_t, CycloScalar> acc;
      const auto add = [&](std::size_t c, const CycloScalar& v) {
        auto [it, inserted] = acc.try_emplace(c, v);
        if (!inserted) it->second += v;
      };
      add(col(n + m), CycloScalar::one(order));
      add(col(m), CycloScalar::from_int(order, -1));
      add(col(n), -lambda.pow(m));
      SparseRow row;
      for (auto& [c, v] : acc)
        if (!v.is_zero()) row.emplace_back(c, v);
      if (!row.empty()) rows.push_back(std::move(row));
    }

  HH1Result r;
  r.window = window;
  r.cocycle_dim = cols - rank(std::move(rows), cols);
  const CycloScalar one = CycloScalar::one(order);
  for (long n = -window; n <= window && r.coboundary_dim == 0; ++n)
    if (!(lambda.pow(n) == one)) r.coboundary_dim = 1;
  r.dim = r.cocycle_dim - r.coboundary_dim;
  if (!(lambda == one)) {
    const auto s = solve_hh1_recurrence(lambda, one, window);
    r.cocycles_are_coboundaries = r.cocycle_dim == 1 && s.matches_closed_form && satisfies_hh1_recurrence(s, lambda);
  }
  return r;
}

namespace {

// Nonzero residual points of the best candidate fit of g (indexed k + W).
std::vector<long> best_residual(const std::vector<CycloScalar>& g, const CycloScalar& lambda, long window) {
  const long third = (window + 2) / 3;
  std::vector<long> outer;
  for (long k = -window; k <= window; ++k)
    if (k <= -window + third - 1 || k >= window - third + 1) outer.push_back(k);
  const auto at = [&](long k) -> const CycloScalar& { return g[static_cast<std::size_t>(k + window)]; };
  const unsigned order = g.front().order();

  std::vector<std::pair<CycloScalar, CycloScalar>> candidates;
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (std::size_t j = i + 1; j < outer.size(); ++j) {
      const CycloScalar li = lambda.pow(outer[i]), lj = lambda.pow(outer[j]);
      if (li == lj) continue;
      const CycloScalar b = (at(outer[i]) - at(outer[j])) / (li - lj);
      candidates.emplace_back(at(outer[i]) - b * li, b);
    }
  if (candidates.empty())
    for (long k : outer) candidates.emplace_back(at(k), CycloScalar::zero(order));

  std::vector<long> best;
  bool first = true;
  for (const auto& [a, b] : candidates) {
    std::vector<long> support;
    for (long k = -window; k <= window; ++k)
      if (!(at(k) - a - b * lambda.pow(k)).is_zero()) support.push_back(k);
    if (first || support.size() < best.size()) best = std::move(support);
    first = false;
  }
  return best;
}

}  // namespace

EscapeResult tau2_escape_check(const ZFunction& q, const CycloScalar& lambda, long window) {
  if (window < 6) throw ValidationError("window must be at least 6");
  if (lambda.is_zero()) throw ValidationError("lambda must be nonzero");
  const unsigned order = std::lcm(q.order(), lambda.order());
  const CycloScalar l = lambda.embed(order);
  const DiagonalFamily f{q};
  const std::size_t side = static_cast<std::size_t>(2 * window + 1);
  // t[m][n] = tau_2 F(m, n)
  std::vector<std::vector<CycloScalar>> t(side, std::vector<CycloScalar>(side));
  for (long m = -window; m <= window; ++m)
    for (long n = -window; n <= window; ++n)
      t[static_cast<std::size_t>(m + window)][static_cast<std::size_t>(n + window)] =
          f(-m - n, m).embed(order) * l.pow(n);

  const std::size_t limit = static_cast<std::size_t>(2 * ((window + 2) / 3));
  EscapeResult result;
  const auto test = [&](const std::vector<CycloScalar>& slice, const char* axis, long fixed) {
    if (result.escapes) return;
    auto residual = best_residual(slice, l, window);
    if (residual.size() > limit) result = EscapeResult{true, axis, fixed, std::move(residual)};
  };
  for (long n = -window; n <= window; ++n) {
    std::vector<CycloScalar> slice(side);
    for (std::size_t i = 0; i < side; ++i) slice[i] = t[i][static_cast<std::size_t>(n + window)];
    test(slice, "m", n);
  }
  for (long m = -window; m <= window; ++m) test(t[static_cast<std::size_t>(m + window)], "n", m);
  return result;
}

}  // namespace mhc
