#pragma once

// The crossed product C(Z_N^2) x Z_2: functions on Z_N^2 and a generator x
// with x^2 = 1 and f x = x f^ where f^(i1, i2) = f(i2, i1). The coproduct is
// the group one on functions and Delta(x) = sum_{p,q} zeta^theta(p,q) x e_p (x) x e_q
// with theta(p, q) = p1 q2 - p2 q1 mod N.
//
// Basis: e_p at index p, e_p x at index N^2 + p, where p = (p1, p2) has index p1 N + p2.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "mhc/cyclo.hpp"

namespace mhc {

using Point = std::array<unsigned, 2>;

struct CrossedElement {
  std::vector<CycloScalar> coeffs;
  bool operator==(const CrossedElement& rhs) const { return coeffs == rhs.coeffs; }
  bool is_zero() const;
};

/// Element of the algebraic tensor square; index a * dim + b.
struct CrossedTensor {
  std::vector<CycloScalar> coeffs;
  bool operator==(const CrossedTensor& rhs) const { return coeffs == rhs.coeffs; }
};

class CrossedAlgebra {
 public:
  /// Throws ValidationError unless 2 <= N <= 12.
  explicit CrossedAlgebra(unsigned modulus);

  unsigned modulus() const { return n_; }
  std::size_t points() const { return static_cast<std::size_t>(n_) * n_; }
  std::size_t dimension() const { return 2 * points(); }

  std::size_t index(Point p) const { return static_cast<std::size_t>(p[0] % n_) * n_ + p[1] % n_; }
  Point point(std::size_t index) const { return {static_cast<unsigned>(index / n_), static_cast<unsigned>(index % n_)}; }
  std::size_t flip(std::size_t p) const;
  std::size_t add(std::size_t p, std::size_t q) const;
  std::size_t negate(std::size_t p) const;
  /// p1 q2 - p2 q1 reduced into [0, N).
  unsigned theta(std::size_t p, std::size_t q) const;

  CrossedElement zero() const;
  CrossedElement one() const;
  CrossedElement x() const;
  CrossedElement basis(std::size_t index) const;
  /// sum_p f(p) e_p + sum_p h(p) e_p x.
  CrossedElement from_tables(const std::vector<CycloScalar>& f, const std::vector<CycloScalar>& h) const;

  CrossedElement multiply(const CrossedElement& a, const CrossedElement& b) const;
  CrossedTensor coproduct(const CrossedElement& a) const;
  CrossedTensor tensor(const CrossedElement& a, const CrossedElement& b) const;
  /// S(e_p) = e_-p, S(x) = x, extended anti-multiplicatively.
  CrossedElement antipode(const CrossedElement& a) const;
  /// eps(e_p) = eps(e_p x) = [p = 0].
  CycloScalar counit(const CrossedElement& a) const;

  /// Structure checks on the full basis: product associativity, unit, x^2 = 1,
  /// coassociativity, counit, antipode.
  bool verify_associative() const;
  bool verify_hopf_axioms() const;

 private:
  unsigned n_;
};

/// The product of two basis elements.
CrossedElement crossed_product(std::size_t a, std::size_t b, unsigned modulus);

/// sigma = f + h x is nonzero and Delta(sigma) = sigma (x) sigma.
bool grouplike_check_crossed(const std::vector<CycloScalar>& f, const std::vector<CycloScalar>& h,
                             unsigned modulus);

/// MPI test for delta(e_p) = [p = base], delta(x) = eps_x and sigma = f: the
/// twisted antipode S_delta(a) = delta(a_(1)) S(a_(2)) is computed from the
/// coproduct, and the pair is an MPI iff delta(sigma) = 1 and S_delta^2 equals
/// conjugation by sigma on every basis element. Off-diagonal base points do
/// not give algebra characters and return false.
bool mpi_check_crossed(Point base, int eps_x, const std::vector<CycloScalar>& f, unsigned modulus);

/// The same test with the closed form S_delta(e_p) = e_{base - p}, S_delta(x) = eps_x x.
bool mpi_check_crossed_closed_form(Point base, int eps_x, const std::vector<CycloScalar>& f, unsigned modulus);

/// Characters p -> zeta^{a p1 + b p2}, ordered by (a, b).
struct CrossedCharacter {
  unsigned a = 0, b = 0;
  std::vector<CycloScalar> values;
  bool symmetric() const { return a == b; }
};
std::vector<CrossedCharacter> crossed_characters(unsigned modulus);

struct GrouplikeRow {
  std::string f;  // "0" or "char:a,b"
  std::string h;
  bool grouplike = false;
};
/// All (f, h) with f, h in the characters together with 0.
std::vector<GrouplikeRow> classify_grouplike(unsigned modulus);

struct MpiRow {
  Point base{};
  int eps_x = 1;
  unsigned a = 0, b = 0;  // sigma = f = zeta^{a p1 + b p2}
  bool mpi = false;
  bool mpi_closed_form = false;
};
/// All base points, eps_x in {+1, -1}, and characters f.
std::vector<MpiRow> classify_mpi(unsigned modulus);

}  // namespace mhc
