#pragma once

// Finite groups given by Cayley tables, and their degree-one characters.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mhc/cyclo.hpp"

namespace mhc {

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

/// Largest group order accepted by build_group unless overridden.
inline constexpr std::size_t kDefaultGroupCap = 24;
/// Associativity is verified on construction up to this order.
inline constexpr std::size_t kAssociativityCheckLimit = 24;

class GroupTable {
 public:
  /// Validates the table: square, entries in range, two-sided identity,
  /// inverses, and associativity (order <= kAssociativityCheckLimit).
  /// Throws ValidationError. Canonical generators are chosen greedily when
  /// `generators` is empty.
  GroupTable(std::vector<std::string> names, std::vector<std::vector<std::size_t>> mul,
             std::vector<std::size_t> generators = {});

  /// Accepts any square table without validation. Intended for negative
  /// controls; inverses fall back to the first right inverse, or to the
  /// element itself when none exists.
  static GroupTable unchecked(std::vector<std::string> names, std::vector<std::vector<std::size_t>> mul);

  std::size_t order() const { return names_.size(); }
  std::size_t identity() const { return id_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return mul_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  const std::vector<std::size_t>& generators() const { return generators_; }
  std::size_t element_order(std::size_t a) const;
  /// Least common multiple of element orders; the cyclotomic order used for
  /// character values.
  unsigned exponent() const { return exponent_; }
  bool is_abelian() const;

  /// For every element, a (parent, generator) pair with
  /// element = parent * generators()[generator]; the identity maps to itself.
  const std::vector<std::pair<std::size_t, std::size_t>>& word_tree() const { return word_tree_; }

 private:
  GroupTable() = default;
  void finish(std::vector<std::size_t> generators);

  std::vector<std::string> names_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::size_t id_ = 0;
  std::vector<std::size_t> generators_;
  std::vector<std::pair<std::size_t, std::size_t>> word_tree_;
  unsigned exponent_ = 1;
};

/// Grammar: Z<n> | S3 | D4 | Q8 | <desc>x<desc> (left-associative).
/// Throws ParseError on malformed input, CapacityError above `cap`.
GroupPtr build_group(std::string_view descriptor, std::size_t cap = kDefaultGroupCap);

/// Parses `{"order": n, "mul": [[...]], "names": [...]}`; names are optional.
GroupPtr group_from_json(std::string_view json_text, std::size_t cap = kDefaultGroupCap);

/// Elements commuting with everything, ascending.
std::vector<std::size_t> center(const GroupTable& g);

/// |G / [G, G]|.
std::size_t abelianization_order(const GroupTable& g);

/// A multiplicative map G -> Q(zeta_N)^*, N = exponent(G).
struct Character {
  GroupPtr group;
  std::vector<CycloScalar> values;

  const CycloScalar& operator()(std::size_t g) const { return values[g]; }
  unsigned order() const { return values.front().order(); }
  bool is_trivial() const;
  /// Exponent k of zeta_N^k at each canonical generator. Throws
  /// ValidationError when a generator value is not an N-th root of unity.
  std::vector<long> exponents() const;
  /// Pointwise inverse character.
  Character inverse() const;
};

/// f(e) = 1 and f(gh) = f(g) f(h) for all pairs.
bool is_character(const GroupTable& g, std::span<const CycloScalar> values);

Character trivial_character(const GroupPtr& g);

/// Character with value zeta_N^{k_i} on the i-th canonical generator.
/// Throws ValidationError if the assignment is not multiplicative.
Character character_from_exponents(const GroupPtr& g, std::span<const long> exponents);

/// All characters, ordered lexicographically by generator exponents.
std::vector<Character> enumerate_characters(const GroupPtr& g);

}  // namespace mhc
