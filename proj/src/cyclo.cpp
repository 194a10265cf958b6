#include "mhc/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mhc/error.hpp"

namespace mhc {
namespace {

void trim(Polynomial& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Long division: a = q * b + r with deg r < deg b. b must be nonzero.
void poly_divmod(Polynomial a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational factor = a.back() / lead;
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

// Inverse of a modulo m via the extended Euclidean algorithm over Q[x].
Polynomial poly_inverse_mod(const Polynomial& a, const Polynomial& m) {
  Polynomial r0 = m, r1 = a;
  Polynomial s0{}, s1{Rational(1)};
  trim(r1);
  while (!r1.empty() && r1.size() > 1) {
    Polynomial q, r;
    poly_divmod(r0, r1, q, r);
    Polynomial s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw std::domain_error("element is not invertible modulo the cyclotomic polynomial");
  // r1 is a nonzero constant c with s1 * a == c (mod m).
  const Rational c = r1[0];
  for (auto& coeff : s1) coeff /= c;
  Polynomial q, rem;
  poly_divmod(s1, m, q, rem);
  return rem;
}

}  // namespace

Polynomial cyclotomic_polynomial(unsigned order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  Polynomial numerator(order + 1, Rational(0));
  numerator[0] = -1;
  numerator[order] = 1;
  for (unsigned d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    Polynomial q, r;
    poly_divmod(numerator, cyclotomic_polynomial(d), q, r);
    numerator = std::move(q);
  }
  return numerator;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto valid = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start >= part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.find_first_of("+-") != std::string::npos)
    throw ParseError("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Rational value;
  value.get_num() = mpz_class(num);
  value.get_den() = mpz_class(den);
  if (sgn(value.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
  value.canonicalize();
  return value;
}

// ---------------------------------------------------------------------------

CycloField::CycloField(unsigned order) : order_(order), modulus_(cyclotomic_polynomial(order)) {
  const std::size_t d = degree();
  // Products of two reduced residues have degree <= 2d - 2; roots of unity
  // need exponents up to N - 1.
  const std::size_t count = std::max<std::size_t>(2 * d, order);
  powers_.reserve(count);
  std::vector<Rational> current(d, Rational(0));
  current[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    powers_.push_back(current);
    // current *= x, then reduce the overflow coefficient with the monic modulus.
    Rational carry = current[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (sgn(carry) != 0)
      for (std::size_t i = 0; i < d; ++i) current[i] -= carry * modulus_[i];
  }
}

const CycloField& CycloField::get(unsigned order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CycloField>> registry;
  std::lock_guard lock(mutex);
  auto it = registry.find(order);
  if (it == registry.end())
    it = registry.emplace(order, std::unique_ptr<CycloField>(new CycloField(order))).first;
  return *it->second;
}

// ---------------------------------------------------------------------------

CycloScalar::CycloScalar() : CycloScalar(zero(1)) {}

CycloScalar CycloScalar::zero(unsigned order) {
  const CycloField& f = CycloField::get(order);
  return CycloScalar(&f, std::vector<Rational>(f.degree(), Rational(0)));
}

CycloScalar CycloScalar::one(unsigned order) { return from_rational(order, Rational(1)); }

CycloScalar CycloScalar::from_rational(unsigned order, const Rational& value) {
  CycloScalar out = zero(order);
  out.coeffs_[0] = value;
  return out;
}

CycloScalar CycloScalar::zeta(unsigned order, long k) {
  const CycloField& f = CycloField::get(order);
  const long n = static_cast<long>(order);
  const long reduced = ((k % n) + n) % n;
  return CycloScalar(&f, f.power_residue(static_cast<std::size_t>(reduced)));
}

CycloScalar CycloScalar::from_coefficients(unsigned order, std::vector<Rational> coeffs) {
  const CycloField& f = CycloField::get(order);
  const std::size_t d = f.degree();
  if (coeffs.size() <= d) {
    coeffs.resize(d, Rational(0));
    return CycloScalar(&f, std::move(coeffs));
  }
  Polynomial q, r;
  poly_divmod(std::move(coeffs), f.modulus(), q, r);
  r.resize(d, Rational(0));
  return CycloScalar(&f, std::move(r));
}

bool CycloScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

void CycloScalar::require_same_field(const CycloScalar& other) const {
  if (field_ != other.field_)
    throw std::invalid_argument("mismatched cyclotomic orders " + std::to_string(order()) + " and " +
                                std::to_string(other.order()) + "; embed into a common order first");
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloScalar operator*(const CycloScalar& lhs, const CycloScalar& rhs) {
  lhs.require_same_field(rhs);
  const std::size_t d = lhs.coeffs_.size();
  if (d == 1) return CycloScalar(lhs.field_, {lhs.coeffs_[0] * rhs.coeffs_[0]});
  std::vector<Rational> raw(2 * d - 1, Rational(0));
  bool any = false;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      raw[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      any = true;
    }
  }
  std::vector<Rational> out(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(d));
  if (any) {
    for (std::size_t k = d; k < raw.size(); ++k) {
      if (sgn(raw[k]) == 0) continue;
      const auto& residue = lhs.field_->power_residue(k);
      for (std::size_t t = 0; t < d; ++t)
        if (sgn(residue[t]) != 0) out[t] += raw[k] * residue[t];
    }
  }
  return CycloScalar(lhs.field_, std::move(out));
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& rhs) { return *this = *this * rhs; }
CycloScalar& CycloScalar::operator/=(const CycloScalar& rhs) { return *this = *this / rhs; }

bool operator==(const CycloScalar& lhs, const CycloScalar& rhs) {
  return lhs.field_ == rhs.field_ && lhs.coeffs_ == rhs.coeffs_;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" + std::to_string(order()) + ")");
  if (coeffs_.size() == 1) return CycloScalar(field_, {1 / coeffs_[0]});
  Polynomial a = coeffs_;
  trim(a);
  Polynomial inv = poly_inverse_mod(a, field_->modulus());
  inv.resize(coeffs_.size(), Rational(0));
  return CycloScalar(field_, std::move(inv));
}

CycloScalar CycloScalar::pow(long exponent) const {
  CycloScalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  CycloScalar result = one(order());
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CycloScalar CycloScalar::embed(unsigned target_order) const {
  if (target_order % order() != 0)
    throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order()) + ") into Q(zeta_" +
                                std::to_string(target_order) + ")");
  if (target_order == order()) return *this;
  const long step = static_cast<long>(target_order / order());
  CycloScalar out = zero(target_order);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    out += from_rational(target_order, coeffs_[i]) * zeta(target_order, step * static_cast<long>(i));
  }
  return out;
}

std::complex<double> CycloScalar::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  const double angle = 2.0 * std::numbers::pi / static_cast<double>(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    z += coeffs_[i].get_d() * std::polar(1.0, angle * static_cast<double>(i));
  return z;
}

std::string CycloScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << (sgn(coeffs_[i]) > 0 ? " + " : " - ");
    else if (sgn(coeffs_[i]) < 0) os << "-";
    const Rational mag = abs(coeffs_[i]);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) os << "z" << order() << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

std::pair<CycloScalar, CycloScalar> lift_to_common_order(const CycloScalar& a, const CycloScalar& b) {
  const unsigned common = std::lcm(a.order(), b.order());
  return {a.embed(common), b.embed(common)};
}

}  // namespace mhc
