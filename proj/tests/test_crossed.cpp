#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "mhc/crossed.hpp"
#include "mhc/error.hpp"

using namespace mhc;

namespace {

std::vector<CycloScalar> zeros(const CrossedAlgebra& alg) {
  return std::vector<CycloScalar>(alg.points(), CycloScalar::zero(alg.modulus()));
}

}  // namespace

TEST(CrossedProduct, SmallCases) {
  const CrossedAlgebra alg(2);
  EXPECT_EQ(alg.multiply(alg.x(), alg.x()), alg.one());

  const std::size_t e10 = alg.index({1, 0}), e01 = alg.index({0, 1});
  EXPECT_EQ(alg.multiply(alg.basis(e10), alg.x()), alg.multiply(alg.x(), alg.basis(e01)));
  // e_p x is stored at N^2 + p, and e_p (e_q x) = [p = q] e_p x.
  EXPECT_EQ(crossed_product(e10, alg.points() + e10, 2), alg.basis(alg.points() + e10));
  EXPECT_TRUE(crossed_product(e10, alg.points() + e01, 2).is_zero());

  const CrossedAlgebra alg3(3);
  for (std::size_t p = 0; p < alg3.points(); ++p)
    for (std::size_t q = 0; q < alg3.points(); ++q) {
      const auto xp = alg3.multiply(alg3.x(), alg3.basis(p));
      const auto xq = alg3.multiply(alg3.x(), alg3.basis(q));
      const auto expected = alg3.flip(p) == q ? alg3.basis(q) : alg3.zero();
      EXPECT_EQ(alg3.multiply(xp, xq), expected);
    }
}

TEST(CrossedProduct, Geometry) {
  const CrossedAlgebra alg(3);
  EXPECT_EQ(alg.flip(alg.index({1, 2})), alg.index({2, 1}));
  EXPECT_EQ(alg.add(alg.index({2, 2}), alg.index({2, 1})), alg.index({1, 0}));
  EXPECT_EQ(alg.negate(alg.index({1, 0})), alg.index({2, 0}));
  EXPECT_EQ(alg.theta(alg.index({1, 0}), alg.index({0, 1})), 1u);
  EXPECT_EQ(alg.theta(alg.index({0, 1}), alg.index({1, 0})), 2u);
  EXPECT_THROW(CrossedAlgebra(1), ValidationError);
  EXPECT_THROW(CrossedAlgebra(13), ValidationError);
}

TEST(CrossedProduct, HopfStructure) {
  for (unsigned n : {2u, 3u}) {
    const CrossedAlgebra alg(n);
    EXPECT_TRUE(alg.verify_associative()) << n;
    EXPECT_TRUE(alg.verify_hopf_axioms()) << n;
  }
}

TEST(CrossedProduct, AntipodeAndCounitOnX) {
  const CrossedAlgebra alg(3);
  EXPECT_EQ(alg.antipode(alg.x()), alg.x());
  EXPECT_TRUE(alg.counit(alg.x()).is_one());
  const std::size_t p = alg.index({1, 2});
  EXPECT_EQ(alg.antipode(alg.basis(p)), alg.basis(alg.negate(p)));
  EXPECT_TRUE(alg.counit(alg.basis(p)).is_zero());
}

TEST(CrossedGrouplike, SmallCases) {
  for (unsigned n : {2u, 3u}) {
    const CrossedAlgebra alg(n);
    for (const auto& chi : crossed_characters(n)) EXPECT_TRUE(grouplike_check_crossed(chi.values, zeros(alg), n));
    auto broken = crossed_characters(n)[1].values;
    broken[1] = CycloScalar::from_int(n, 2);
    EXPECT_FALSE(grouplike_check_crossed(broken, zeros(alg), n));
    for (const auto& chi : crossed_characters(n))
      for (const auto& eta : crossed_characters(n)) EXPECT_FALSE(grouplike_check_crossed(chi.values, eta.values, n));
  }
}

TEST(CrossedGrouplike, ZeroIsRejected) {
  const CrossedAlgebra alg(2);
  EXPECT_FALSE(grouplike_check_crossed(zeros(alg), zeros(alg), 2));
}

TEST(CrossedGrouplike, ClassificationOverCharactersAndZero) {
  for (unsigned n : {2u, 3u}) {
    const auto rows = classify_grouplike(n);
    EXPECT_EQ(rows.size(), (n * n + 1) * (n * n + 1));
    for (const auto& row : rows) EXPECT_EQ(row.grouplike, row.h == "0" && row.f != "0") << row.f << " " << row.h;
  }
}

TEST(CrossedGrouplike, TwoTorsionArtifactOutsideTheAnsatz) {
  // Over Z_2^2 the cocycle is a sign, and sigma = h x with h = (1, 1, 1, -1)
  // is group-like although f = 0. It is not of the form "character or 0".
  const CrossedAlgebra alg(2);
  std::vector<CycloScalar> h(4, CycloScalar::one(2));
  h[alg.index({1, 1})] = CycloScalar::from_int(2, -1);
  EXPECT_TRUE(grouplike_check_crossed(zeros(alg), h, 2));
}

TEST(CrossedMpi, SmallCases) {
  const auto chars2 = crossed_characters(2);
  for (const auto& chi : chars2)
    EXPECT_EQ(mpi_check_crossed({0, 0}, 1, chi.values, 2), chi.symmetric()) << chi.a << chi.b;

  const auto chars3 = crossed_characters(3);
  const auto& antisym = chars3[1 * 3 + 2];  // zeta^{p1 - p2}
  ASSERT_EQ(antisym.a, 1u);
  ASSERT_EQ(antisym.b, 2u);
  EXPECT_FALSE(mpi_check_crossed({0, 0}, 1, antisym.values, 3));
  EXPECT_FALSE(mpi_check_crossed_closed_form({0, 0}, 1, antisym.values, 3));
}

TEST(CrossedMpi, OffDiagonalBasesAreNotCharacters) {
  const auto chars = crossed_characters(3);
  for (const auto& chi : chars) {
    EXPECT_FALSE(mpi_check_crossed({1, 0}, 1, chi.values, 3));
    EXPECT_FALSE(mpi_check_crossed({0, 2}, -1, chi.values, 3));
  }
}

TEST(CrossedMpi, DerivedAndClosedFormAgreeAtOrigin) {
  for (unsigned n : {2u, 3u, 4u})
    for (const auto& chi : crossed_characters(n))
      for (int eps : {1, -1}) {
        const bool derived = mpi_check_crossed({0, 0}, eps, chi.values, n);
        EXPECT_EQ(derived, mpi_check_crossed_closed_form({0, 0}, eps, chi.values, n));
        EXPECT_EQ(derived, chi.symmetric());
      }
}

TEST(CrossedMpi, DiagonalBasesAdmitFurtherPairs) {
  // Computed classification: besides base (0,0) with symmetric f, the diagonal
  // base (c, c) admits pairs, so "only delta(f) = f(0,0)" does not hold on Z_N^2.
  using Key = std::tuple<unsigned, unsigned, unsigned, unsigned>;
  std::set<Key> derived, closed;
  for (const auto& row : classify_mpi(3)) {
    if (row.mpi) derived.insert({row.base[0], row.base[1], row.a, row.b});
    if (row.mpi_closed_form) closed.insert({row.base[0], row.base[1], row.a, row.b});
  }
  EXPECT_EQ(derived, (std::set<Key>{{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 2, 2}, {1, 1, 1, 2}, {2, 2, 2, 1}}));
  EXPECT_EQ(closed, (std::set<Key>{{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 2, 2}, {1, 1, 0, 0}, {2, 2, 0, 0}}));

  std::set<Key> two;
  for (const auto& row : classify_mpi(2))
    if (row.mpi) two.insert({row.base[0], row.base[1], row.a, row.b});
  EXPECT_EQ(two, (std::set<Key>{{0, 0, 0, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 1, 1}}));
}

TEST(CrossedMpi, IndependentOfSignOnX) {
  const auto chars = crossed_characters(3);
  for (const auto& row : classify_mpi(3)) {
    const auto& chi = chars[row.a * 3 + row.b];
    EXPECT_EQ(row.mpi, mpi_check_crossed(row.base, -row.eps_x, chi.values, 3));
  }
}
