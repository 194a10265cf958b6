#pragma once

// Computations over the integers G = Z on finite symmetric windows [-W, W].
// The group-like multiplier is sigma(n) = lambda^n for an exact nonzero lambda.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mhc/cyclo.hpp"

namespace mhc {

inline constexpr long kDefaultZWindow = 12;

/// "p/q" (or an integer) or "zeta:N:k". Throws ParseError, or ValidationError for 0.
CycloScalar parse_lambda(std::string_view text);

/// A function Z -> Q(zeta_N), given as a finite sum of structured terms.
class ZFunction {
 public:
  enum class Kind { finite_support, constant, sigma_power, step, table };

  struct Term {
    Kind kind;
    CycloScalar coefficient;
    CycloScalar base;                       // sigma_power: n -> coefficient * base^n
    long threshold = 0;                     // step: coefficient for n >= threshold
    std::map<long, CycloScalar> values;     // finite_support, table
    long window = 0;                        // table: defined on [-window, window], zero outside
  };

  static ZFunction finite_support(std::map<long, CycloScalar> values, unsigned order);
  static ZFunction constant(const CycloScalar& value);
  /// n -> coefficient * base^n.
  static ZFunction sigma_power(const CycloScalar& base, const CycloScalar& coefficient);
  /// 1 for n >= threshold, 0 otherwise.
  static ZFunction step(unsigned order, long threshold = 0);
  static ZFunction table(std::map<long, CycloScalar> values, long window, unsigned order);

  unsigned order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  CycloScalar operator()(long n) const;
  ZFunction operator+(const ZFunction& rhs) const;

 private:
  ZFunction(unsigned order, std::vector<Term> terms) : order_(order), terms_(std::move(terms)) {}
  unsigned order_;
  std::vector<Term> terms_;
};

/// CLI grammar for q: "step" | "finite:{\"n\": \"value\", ...}" | "geom:a,b"
/// (the function a + b lambda^-n). Values are rationals.
ZFunction parse_zfunction(std::string_view text, const CycloScalar& lambda);

/// The diagonal family F(m, n) = q(m) [m + n = 0] on Z^2.
struct DiagonalFamily {
  ZFunction q;
  CycloScalar operator()(long m, long n) const;
};

struct RecurrenceSolution {
  long window = 0;
  std::vector<CycloScalar> values;  // F(n) at index n + window
  bool matches_closed_form = false;   // beta (lambda^n - 1), or c n when lambda = 1
  const CycloScalar& at(long n) const { return values.at(static_cast<std::size_t>(n + window)); }
};

/// F(n + m) = F(m) + F(n) lambda^m with F(1) = c, propagated with m = 1 in
/// both directions. Throws ValidationError for lambda = 0 or W < 1.
RecurrenceSolution solve_hh1_recurrence(const CycloScalar& lambda, const CycloScalar& c, long window);

/// True iff the table satisfies the cocycle relation for every n, m with
/// n, m, n + m in the window.
bool satisfies_hh1_recurrence(const RecurrenceSolution& f, const CycloScalar& lambda);

struct HH1Result {
  long window = 0;
  std::size_t cocycle_dim = 0;    // solutions of the windowed cocycle system
  std::size_t coboundary_dim = 0; // span of n -> lambda^n - 1 on the window
  std::size_t dim = 0;
  bool cocycles_are_coboundaries = false;  // F(1)-fitted beta reproduces every window point
};

/// Windowed HH^1 over Z. Throws ValidationError for W < 2 or lambda = 0.
HH1Result hh1_z_dim(const CycloScalar& lambda, long window);

struct EscapeResult {
  bool escapes = false;
  /// The slice that escaped: "m" means n is fixed to `fixed` and m varies.
  std::string axis;
  long fixed = 0;
  /// Points of that slice where the best residual is nonzero.
  std::vector<long> witness;
};

/// Evaluates tau_2 F(m, n) = F(-m-n, m) lambda^n for F = DiagonalFamily{q} on
/// [-W, W]^2 and tests each row and column slice G against span{1, lambda^k}
/// plus finite support: candidate (a, b) are solved from pairs of points in
/// the outer thirds, and a slice escapes iff every candidate leaves more than
/// 2 ceil(W/3) nonzero residuals. Throws ValidationError for W < 6.
EscapeResult tau2_escape_check(const ZFunction& q, const CycloScalar& lambda, long window);

}  // namespace mhc
