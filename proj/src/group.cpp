#include "mhc/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "json.hpp"

#include "mhc/error.hpp"

namespace mhc {
namespace {

using Table = std::vector<std::vector<std::size_t>>;

struct Built {
  std::vector<std::string> names;
  Table mul;
  std::vector<std::size_t> generators;
  bool product = false;
};

Built cyclic(std::size_t n) {
  Built b;
  b.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    b.names.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) b.mul[i][j] = (i + j) % n;
  }
  if (n > 1) b.generators = {1};
  return b;
}

// r^a s^b stored at a + n*b, with s r = r^{-1} s.
Built dihedral(std::size_t n) {
  Built b;
  const std::size_t size = 2 * n;
  b.mul.assign(size, std::vector<std::size_t>(size));
  for (std::size_t idx = 0; idx < size; ++idx) {
    const std::size_t a = idx % n, s = idx / n;
    std::string name = a == 0 ? "" : (a == 1 ? "r" : "r" + std::to_string(a));
    if (s == 1) name += "s";
    b.names.push_back(name.empty() ? "e" : name);
  }
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      const std::size_t a = x % n, s = x / n, c = y % n, t = y / n;
      const std::size_t rot = s == 0 ? (a + c) % n : (a + n - c) % n;
      b.mul[x][y] = rot + n * (s ^ t);
    }
  b.generators = {1, n};
  return b;
}

// Quaternion units u in {1, i, j, k} with sign, stored at 2*u + negative.
Built quaternion() {
  static constexpr int kUnitProduct[4][4][2] = {
      // {unit, sign} for row * column
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  Built b;
  b.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  b.mul.assign(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const auto& [unit, sign] = kUnitProduct[x / 2][y / 2];
      const bool negative = (sign < 0) != ((x % 2) != (y % 2));
      b.mul[x][y] = 2 * static_cast<std::size_t>(unit) + (negative ? 1 : 0);
    }
  b.generators = {2, 4};
  return b;
}

Built direct_product(const Built& left, const Built& right) {
  Built b;
  const std::size_t m = left.names.size(), n = right.names.size();
  b.mul.assign(m * n, std::vector<std::size_t>(m * n));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      std::string head = left.product ? left.names[a].substr(0, left.names[a].size() - 1)
                                      : "(" + left.names[a];
      b.names.push_back(head + "," + right.names[c] + ")");
    }
  for (std::size_t x = 0; x < m * n; ++x)
    for (std::size_t y = 0; y < m * n; ++y)
      b.mul[x][y] = left.mul[x / n][y / n] * n + right.mul[x % n][y % n];
  // Identities of the factors are index 0 for every built-in constructor.
  for (std::size_t g : left.generators) b.generators.push_back(g * n);
  for (std::size_t g : right.generators) b.generators.push_back(g);
  b.product = true;
  return b;
}

std::size_t parse_positive(std::string_view digits, std::string_view descriptor) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw ParseError("malformed group descriptor '" + std::string(descriptor) + "'");
  const std::size_t n = std::stoul(std::string(digits));
  if (n == 0) throw ParseError("cyclic group order must be positive in '" + std::string(descriptor) + "'");
  return n;
}

std::vector<std::size_t> closure(const GroupTable& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> out{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t s : gens) {
      const std::size_t next = g.multiply(out[i], s);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  return out;
}

}  // namespace

GroupTable::GroupTable(std::vector<std::string> names, Table mul, std::vector<std::size_t> generators) {
  const std::size_t n = names.size();
  if (n == 0) throw ValidationError("group must have at least one element");
  if (mul.size() != n) throw ValidationError("multiplication table must have one row per element");
  for (const auto& row : mul) {
    if (row.size() != n) throw ValidationError("multiplication table must be square");
    for (std::size_t v : row)
      if (v >= n) throw ValidationError("multiplication table entry out of range");
  }
  names_ = std::move(names);
  for (const auto& row : mul) mul_.insert(mul_.end(), row.begin(), row.end());

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = multiply(e, x) == x && multiply(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) throw ValidationError("multiplication table has no two-sided identity");
  id_ = *identity;

  inv_.assign(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (multiply(x, y) == id_ && multiply(y, x) == id_) {
        inv_[x] = y;
        break;
      }
  if (std::find(inv_.begin(), inv_.end(), n) != inv_.end())
    throw ValidationError("some element has no two-sided inverse");

  if (n <= kAssociativityCheckLimit)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
            throw ValidationError("multiplication table is not associative at (" + names_[a] + ", " +
                                  names_[b] + ", " + names_[c] + ")");

  auto seen = names_;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw ValidationError("element names must be distinct");

  finish(std::move(generators));
}

GroupTable GroupTable::unchecked(std::vector<std::string> names, Table mul) {
  GroupTable g;
  const std::size_t n = names.size();
  g.names_ = std::move(names);
  for (const auto& row : mul) g.mul_.insert(g.mul_.end(), row.begin(), row.end());
  if (g.mul_.size() != n * n) throw ValidationError("multiplication table must be square");
  g.id_ = 0;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = g.multiply(e, x) == x && g.multiply(x, e) == x;
    if (ok) {
      g.id_ = e;
      break;
    }
  }
  g.inv_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    g.inv_[x] = x;
    for (std::size_t y = 0; y < n; ++y)
      if (g.multiply(x, y) == g.id_) {
        g.inv_[x] = y;
        break;
      }
  }
  g.generators_.clear();
  g.word_tree_.assign(n, {g.id_, 0});
  g.exponent_ = 1;
  return g;
}

void GroupTable::finish(std::vector<std::size_t> generators) {
  const std::size_t n = order();
  if (generators.empty()) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x == id_) continue;
      if (closure(*this, generators_).size() == n) break;
      const auto current = closure(*this, generators_);
      if (std::find(current.begin(), current.end(), x) == current.end()) generators_.push_back(x);
    }
  } else {
    generators_ = std::move(generators);
  }
  if (closure(*this, generators_).size() != n) throw ValidationError("canonical generators do not generate the group");

  word_tree_.assign(n, {id_, 0});
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> queue;
  queue.push(id_);
  seen[id_] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop();
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      const std::size_t y = multiply(x, generators_[k]);
      if (!seen[y]) {
        seen[y] = true;
        word_tree_[y] = {x, k};
        queue.push(y);
      }
    }
  }

  exponent_ = 1;
  for (std::size_t x = 0; x < n; ++x) exponent_ = std::lcm(exponent_, static_cast<unsigned>(element_order(x)));
}

std::optional<std::size_t> GroupTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t GroupTable::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != id_; x = multiply(x, a)) {
    if (++k > order()) return 0;
  }
  return k;
}

bool GroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

GroupPtr build_group(std::string_view descriptor, std::size_t cap) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = descriptor.find('x', start);
    tokens.push_back(descriptor.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  std::vector<std::size_t> orders;
  for (auto tok : tokens) {
    if (tok == "S3") orders.push_back(6);
    else if (tok == "D4" || tok == "Q8") orders.push_back(8);
    else if (!tok.empty() && tok[0] == 'Z') orders.push_back(parse_positive(tok.substr(1), descriptor));
    else throw ParseError("malformed group descriptor '" + std::string(descriptor) + "'");
  }
  std::size_t total = 1;
  for (std::size_t o : orders) {
    total *= o;
    if (total > cap)
      throw CapacityError("group '" + std::string(descriptor) + "' exceeds the order cap of " + std::to_string(cap));
  }

  Built acc;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Built factor = tokens[i] == "S3" ? dihedral(3)
                   : tokens[i] == "D4" ? dihedral(4)
                   : tokens[i] == "Q8" ? quaternion()
                                       : cyclic(orders[i]);
    acc = i == 0 ? std::move(factor) : direct_product(acc, factor);
  }
  return std::make_shared<const GroupTable>(std::move(acc.names), std::move(acc.mul), std::move(acc.generators));
}

GroupPtr group_from_json(std::string_view json_text, std::size_t cap) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group table JSON: ") + e.what());
  }
  try {
    const std::size_t n = doc.at("order").get<std::size_t>();
    if (n > cap) throw CapacityError("group table of order " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
    Table mul = doc.at("mul").get<Table>();
    std::vector<std::string> names;
    if (doc.contains("names")) {
      names = doc.at("names").get<std::vector<std::string>>();
    } else {
      for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    }
    if (names.size() != n) throw ValidationError("names must list exactly 'order' elements");
    return std::make_shared<const GroupTable>(std::move(names), std::move(mul));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group table JSON: ") + e.what());
  }
}

std::vector<std::size_t> center(const GroupTable& g) {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (std::size_t x = 0; x < g.order() && central; ++x) central = g.multiply(z, x) == g.multiply(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::size_t abelianization_order(const GroupTable& g) {
  std::vector<std::size_t> commutators;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      commutators.push_back(g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b))));
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  return g.order() / closure(g, commutators).size();
}

// ---------------------------------------------------------------------------

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](const CycloScalar& v) { return v.is_one(); });
}

std::vector<long> Character::exponents() const {
  const unsigned n = order();
  std::vector<long> out;
  for (std::size_t gen : group->generators()) {
    std::optional<long> found;
    for (long k = 0; k < static_cast<long>(n) && !found; ++k)
      if (values[gen] == CycloScalar::zeta(n, k)) found = k;
    if (!found) throw ValidationError("character value at '" + group->name(gen) + "' is not a root of unity");
    out.push_back(*found);
  }
  return out;
}

Character Character::inverse() const {
  Character out{group, {}};
  out.values.reserve(values.size());
  for (const auto& v : values) out.values.push_back(v.inverse());
  return out;
}

bool is_character(const GroupTable& g, std::span<const CycloScalar> values) {
  if (values.size() != g.order()) return false;
  if (!values[g.identity()].is_one()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (!(values[a] * values[b] == values[g.multiply(a, b)])) return false;
  return true;
}

Character trivial_character(const GroupPtr& g) {
  return Character{g, std::vector<CycloScalar>(g->order(), CycloScalar::one(g->exponent()))};
}

namespace {

std::vector<CycloScalar> extend_from_generators(const GroupTable& g, const std::vector<CycloScalar>& images) {
  const unsigned n = g.exponent();
  std::vector<std::optional<CycloScalar>> memo(g.order());
  memo[g.identity()] = CycloScalar::one(n);
  const auto& tree = g.word_tree();
  std::vector<CycloScalar> out;
  out.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<std::size_t> path;
    std::size_t cur = x;
    while (!memo[cur]) {
      path.push_back(cur);
      cur = tree[cur].first;
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      memo[*it] = *memo[tree[*it].first] * images[tree[*it].second];
    out.push_back(*memo[x]);
  }
  return out;
}

}  // namespace

Character character_from_exponents(const GroupPtr& g, std::span<const long> exponents) {
  if (exponents.size() != g->generators().size())
    throw ValidationError("expected " + std::to_string(g->generators().size()) + " generator exponents, got " +
                          std::to_string(exponents.size()));
  std::vector<CycloScalar> images;
  for (long k : exponents) images.push_back(CycloScalar::zeta(g->exponent(), k));
  Character chi{g, extend_from_generators(*g, images)};
  if (!is_character(*g, chi.values)) throw ValidationError("generator exponents do not define a character");
  return chi;
}

std::vector<Character> enumerate_characters(const GroupPtr& g) {
  const unsigned n = g->exponent();
  const auto& gens = g->generators();
  // Generator images must be roots of unity of order dividing ord(gen).
  std::vector<long> step, count;
  for (std::size_t gen : gens) {
    const auto ord = static_cast<long>(g->element_order(gen));
    step.push_back(static_cast<long>(n) / ord);
    count.push_back(ord);
  }
  std::vector<Character> out;
  std::vector<long> digits(gens.size(), 0);
  while (true) {
    std::vector<CycloScalar> images;
    for (std::size_t i = 0; i < gens.size(); ++i) images.push_back(CycloScalar::zeta(n, digits[i] * step[i]));
    auto values = extend_from_generators(*g, images);
    if (is_character(*g, values)) out.push_back(Character{g, std::move(values)});
    std::size_t i = gens.size();
    while (i > 0 && ++digits[i - 1] == count[i - 1]) digits[--i] = 0;
    if (i == 0) break;
  }
  if (out.size() != abelianization_order(*g))
    throw std::logic_error("character count disagrees with the abelianization order");
  return out;
}

}  // namespace mhc
