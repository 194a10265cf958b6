#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "mhc/cyclo.hpp"
#include "mhc/error.hpp"

using namespace mhc;

namespace {

std::vector<long> as_longs(const Polynomial& p) {
  std::vector<long> out;
  for (const auto& c : p) {
    EXPECT_EQ(c.get_den(), 1);
    out.push_back(c.get_num().get_si());
  }
  return out;
}

int mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

CycloScalar random_scalar(unsigned order, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<Rational> coeffs(CycloField::get(order).degree());
  for (auto& c : coeffs) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return CycloScalar::from_coefficients(order, coeffs);
}

}  // namespace

TEST(Cyclotomic, SmallPolynomialsMatchTable) {
  const std::vector<std::pair<unsigned, std::vector<long>>> table = {
      {1, {-1, 1}},          {2, {1, 1}},
      {3, {1, 1, 1}},        {4, {1, 0, 1}},
      {5, {1, 1, 1, 1, 1}},  {6, {1, -1, 1}},
      {8, {1, 0, 0, 0, 1}},  {9, {1, 0, 0, 1, 0, 0, 1}},
      {10, {1, -1, 1, -1, 1}}, {12, {1, 0, -1, 0, 1}},
      {15, {1, -1, 0, 1, -1, 1, 0, -1, 1}},
  };
  for (const auto& [n, coeffs] : table) EXPECT_EQ(as_longs(cyclotomic_polynomial(n)), coeffs) << "N=" << n;
}

TEST(Cyclotomic, Phi105HasCoefficientMinusTwo) {
  const auto p = as_longs(cyclotomic_polynomial(105));
  ASSERT_EQ(p.size(), 49u);
  EXPECT_EQ(p[7], -2);
  EXPECT_EQ(p[41], -2);
}

TEST(Cyclotomic, DegreeIsEulerPhi) {
  for (unsigned n = 1; n <= 40; ++n) {
    unsigned phi = 0;
    for (unsigned k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    EXPECT_EQ(CycloField::get(n).degree(), phi) << n;
  }
}

TEST(CycloScalar, ZetaToTheOrderIsOne) {
  for (unsigned n = 1; n <= 24; ++n) {
    EXPECT_TRUE(CycloScalar::zeta(n, n).is_one());
    EXPECT_TRUE(CycloScalar::zeta(n, 1).pow(static_cast<long>(n)).is_one());
    EXPECT_TRUE((CycloScalar::zeta(n, 1) * CycloScalar::zeta(n, -1)).is_one());
    if (n > 1) {
      EXPECT_FALSE(CycloScalar::zeta(n, 1).is_one());
    }
  }
}

TEST(CycloScalar, SumOfPrimitiveRootsIsMobius) {
  for (unsigned n = 1; n <= 30; ++n) {
    CycloScalar sum = CycloScalar::zero(n), all = CycloScalar::zero(n);
    for (unsigned k = 0; k < n; ++k) {
      if (std::gcd(k, n) == 1) sum += CycloScalar::zeta(n, k);
      all += CycloScalar::zeta(n, k);
    }
    EXPECT_EQ(sum, CycloScalar::from_int(n, mobius(n))) << n;
    EXPECT_EQ(all.is_zero(), n > 1) << n;
  }
}

TEST(CycloScalar, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(7);
  for (unsigned n : {3u, 5u, 8u, 12u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_scalar(n, rng), b = random_scalar(n, rng), c = random_scalar(n, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b - b, a);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ(b / a * a, b);
      }
    }
  }
}

TEST(CycloScalar, EmbeddingIsCompatible) {
  EXPECT_EQ(CycloScalar::zeta(3, 1).embed(6), CycloScalar::zeta(6, 2));
  EXPECT_EQ(CycloScalar::zeta(4, 1).embed(12), CycloScalar::zeta(12, 3));
  EXPECT_EQ(CycloScalar::from_int(1, 5).embed(7), CycloScalar::from_int(7, 5));
  EXPECT_THROW(CycloScalar::zeta(4, 1).embed(6), std::invalid_argument);
  const auto [a, b] = lift_to_common_order(CycloScalar::zeta(4, 1), CycloScalar::zeta(6, 1));
  EXPECT_EQ(a.order(), 12u);
  EXPECT_EQ(b, CycloScalar::zeta(12, 2));
}

TEST(CycloScalar, ErrorsAreReported) {
  EXPECT_THROW(CycloScalar::zero(5).inverse(), std::domain_error);
  EXPECT_THROW(CycloScalar::one(3) + CycloScalar::one(4), std::invalid_argument);
  EXPECT_FALSE(CycloScalar::one(3) == CycloScalar::one(4));
}

TEST(CycloScalar, RationalPredicatesAndDisplay) {
  EXPECT_TRUE(CycloScalar::from_int(5, -3).is_rational());
  EXPECT_FALSE(CycloScalar::zeta(5, 2).is_rational());
  // zeta_6 + zeta_6^5 = 1
  EXPECT_TRUE((CycloScalar::zeta(6, 1) + CycloScalar::zeta(6, 5)).is_one());
  EXPECT_EQ(CycloScalar::zero(7).to_string(), "0");
  EXPECT_NEAR(std::abs(CycloScalar::zeta(7, 3).to_complex()), 1.0, 1e-12);
}

TEST(ParseRational, CanonicalFormsAndErrors) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "--1", "1.5"}) EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}
