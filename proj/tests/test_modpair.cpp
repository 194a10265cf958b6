#include <gtest/gtest.h>

#include <set>

#include "mhc/modpair.hpp"

using namespace mhc;

namespace {

std::set<std::pair<std::string, std::vector<long>>> brute_force(const GroupPtr& g) {
  std::set<std::pair<std::string, std::vector<long>>> out;
  for (std::size_t x = 0; x < g->order(); ++x)
    for (const auto& chi : enumerate_characters(g))
      if (is_mpi(*g, x, chi)) out.emplace(g->name(x), chi.exponents());
  return out;
}

std::set<std::pair<std::string, std::vector<long>>> enumerated(const GroupPtr& g) {
  std::set<std::pair<std::string, std::vector<long>>> out;
  for (const auto& p : enumerate_mpi(g)) out.emplace(g->name(p.base_point), p.sigma.exponents());
  return out;
}

}  // namespace

TEST(TwistedAntipode, ClosedFormExamples) {
  const auto z3 = build_group("Z3");
  const auto triv = trivial_character(z3);
  EXPECT_EQ(twisted_antipode(*z3, 1, triv, 0), 1u);
  const auto s3 = build_group("S3");
  for (std::size_t h = 0; h < 6; ++h) EXPECT_EQ(twisted_antipode(*s3, 0, trivial_character(s3), h), s3->inverse(h));
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) {
      const auto twice = twisted_antipode(*s3, g, trivial_character(s3), twisted_antipode(*s3, g, trivial_character(s3), h));
      EXPECT_EQ(twice, s3->multiply(s3->multiply(s3->inverse(g), h), g));
    }
}

TEST(TwistedAntipode, IndependentOfTheLocalUnit) {
  for (const char* desc : {"Z4", "S3", "Q8"}) {
    const auto g = build_group(desc);
    const unsigned order = g->exponent();
    for (std::size_t base = 0; base < g->order(); ++base)
      for (std::size_t h = 0; h < g->order(); ++h) {
        const auto reference = twisted_antipode_from_definition(g, base, AlgebraElement::basis(g, base, order), h);
        for (std::size_t other = 0; other < g->order(); ++other) {
          if (other == base) continue;
          AlgebraElement a = AlgebraElement::basis(g, base, order) + AlgebraElement::basis(g, other, order);
          a.coeffs[other] = CycloScalar::zeta(order, 1) * CycloScalar::from_int(order, 3);
          EXPECT_EQ(twisted_antipode_from_definition(g, base, a, h), reference);
        }
      }
  }
  const auto z3 = build_group("Z3");
  EXPECT_THROW(twisted_antipode_from_definition(z3, 0, AlgebraElement::basis(z3, 1, 3), 0), std::invalid_argument);
}

TEST(Mpi, SmallCyclicCounts) {
  EXPECT_EQ(enumerate_mpi(build_group("Z3")).size(), 5u);
  EXPECT_EQ(enumerate_mpi(build_group("Z2")).size(), 3u);
  const auto z2 = enumerated(build_group("Z2"));
  EXPECT_TRUE(z2.count({"1", {0}}));
  EXPECT_FALSE(z2.count({"1", {1}}));
}

TEST(Mpi, EnumerationAgreesWithBruteForce) {
  for (const char* desc : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "Z2xS3"}) {
    const auto g = build_group(desc);
    EXPECT_EQ(enumerated(g), brute_force(g)) << desc;
    for (const auto& p : enumerate_mpi(g)) EXPECT_TRUE(p.sigma(p.base_point).is_one());
  }
}

TEST(Mpi, AbelianGroupsAreExactlySigmaOfGEqualsOne) {
  for (const char* desc : {"Z4", "Z2xZ2", "Z6"}) {
    const auto g = build_group(desc);
    std::size_t expected = 0;
    for (std::size_t x = 0; x < g->order(); ++x)
      for (const auto& chi : enumerate_characters(g)) expected += chi(x).is_one();
    EXPECT_EQ(enumerate_mpi(g).size(), expected) << desc;
  }
}

TEST(Mpi, SymmetricGroupHasOnlyIdentityPairs) {
  const auto s3 = build_group("S3");
  const std::set<std::pair<std::string, std::vector<long>>> expected{{"e", {0, 0}}, {"e", {0, 3}}};
  EXPECT_EQ(enumerated(s3), expected);
  EXPECT_FALSE(is_mpi(*s3, *s3->find("s"), trivial_character(s3)));
}

TEST(Mpi, CentralElementsOfNonabelianGroupsQualify) {
  const auto d4 = build_group("D4");
  const std::size_t r2 = *d4->find("r2");
  std::size_t extra = 0;
  for (const auto& p : enumerate_mpi(d4)) {
    if (!abelian_or_identity(*d4, p.base_point)) {
      ++extra;
      EXPECT_EQ(p.base_point, r2);
    }
  }
  EXPECT_EQ(extra, 4u);  // every character of D4 is trivial on r^2
  EXPECT_TRUE(is_mpi(*d4, r2, trivial_character(d4)));

  const auto q8 = build_group("Q8");
  std::size_t q8_extra = 0;
  for (const auto& p : enumerate_mpi(q8)) q8_extra += !abelian_or_identity(*q8, p.base_point);
  EXPECT_EQ(q8_extra, 4u);
}
