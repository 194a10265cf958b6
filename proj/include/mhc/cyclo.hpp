#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored as its residue modulo the N-th cyclotomic polynomial,
// i.e. as a rational coefficient vector of length phi(N) in the power basis
// 1, zeta, ..., zeta^(phi(N)-1). Residues are always fully reduced, so
// equality is coefficient-wise equality.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mhc {

using Rational = mpq_class;
/// Dense polynomial over Q, lowest degree first.
using Polynomial = std::vector<Rational>;

/// Monic Phi_N, computed as (x^N - 1) / prod_{d | N, d < N} Phi_d.
Polynomial cyclotomic_polynomial(unsigned order);

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Shared, immutable per-order data: the modulus and the residues of x^k.
/// Instances live for the whole program and are safe to read concurrently.
class CycloField {
 public:
  static const CycloField& get(unsigned order);

  unsigned order() const { return order_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  const Polynomial& modulus() const { return modulus_; }

  /// Residue of x^k modulo Phi_N; valid for k < residue_count().
  const std::vector<Rational>& power_residue(std::size_t k) const { return powers_[k]; }
  std::size_t residue_count() const { return powers_.size(); }

 private:
  explicit CycloField(unsigned order);

  unsigned order_;
  Polynomial modulus_;
  std::vector<std::vector<Rational>> powers_;
};

class CycloScalar {
 public:
  /// Zero of Q = Q(zeta_1). Mostly useful as a placeholder in containers.
  CycloScalar();

  static CycloScalar zero(unsigned order);
  static CycloScalar one(unsigned order);
  static CycloScalar from_rational(unsigned order, const Rational& value);
  static CycloScalar from_int(unsigned order, long value) {
    return from_rational(order, Rational(value));
  }
  /// zeta_N^k for any integer k.
  static CycloScalar zeta(unsigned order, long k);
  /// Builds from a coefficient vector; shorter vectors are zero-padded, longer
  /// ones are reduced modulo Phi_N.
  static CycloScalar from_coefficients(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const { return field_->order(); }
  const CycloField& field() const { return *field_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True if the value lies in Q (all non-constant coefficients vanish).
  bool is_rational() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& rhs);
  CycloScalar& operator-=(const CycloScalar& rhs);
  CycloScalar& operator*=(const CycloScalar& rhs);
  CycloScalar& operator/=(const CycloScalar& rhs);

  friend CycloScalar operator+(CycloScalar lhs, const CycloScalar& rhs) { return lhs += rhs; }
  friend CycloScalar operator-(CycloScalar lhs, const CycloScalar& rhs) { return lhs -= rhs; }
  friend CycloScalar operator*(const CycloScalar& lhs, const CycloScalar& rhs);
  friend CycloScalar operator/(const CycloScalar& lhs, const CycloScalar& rhs) {
    return lhs * rhs.inverse();
  }
  friend bool operator==(const CycloScalar& lhs, const CycloScalar& rhs);

  /// Throws std::domain_error on zero.
  CycloScalar inverse() const;
  CycloScalar pow(long exponent) const;
  /// Image under Q(zeta_N) -> Q(zeta_M); requires N | M.
  CycloScalar embed(unsigned target_order) const;

  /// Display-only conversion; never used by the exact core.
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  CycloScalar(const CycloField* field, std::vector<Rational> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}

  void require_same_field(const CycloScalar& other) const;

  const CycloField* field_;
  std::vector<Rational> coeffs_;
};

/// Lifts both operands to Q(zeta_lcm(N, M)).
std::pair<CycloScalar, CycloScalar> lift_to_common_order(const CycloScalar& a,
                                                         const CycloScalar& b);

}  // namespace mhc
