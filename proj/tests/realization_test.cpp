// Copyright 2026 The arrowperm Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arrowperm/realization.hpp"

#include <gtest/gtest.h>

#include "arrowperm/matrix.hpp"
#include "oracles.hpp"

namespace arrowperm {
namespace {

SignedPermutation P(std::vector<int> v) { return SignedPermutation(std::move(v)); }

RationalMatrix M(const std::vector<std::vector<Rational>>& rows) {
  return RationalMatrix::from_rows(rows);
}

RationalMatrix from_ints(const oracle::IntMatrix& m) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : m) {
    std::vector<Rational> row;
    for (long v : r) row.emplace_back(v);
    rows.push_back(row);
  }
  return RationalMatrix::from_rows(rows);
}

TEST(RealizationTest, Examples) {
  EXPECT_EQ(realize(P({2, -1})), M({{0, -1}, {1, 0}}));
  EXPECT_EQ(realize(identity(3)), RationalMatrix::identity(3));
  EXPECT_EQ(realize(P({-1, 2})), M({{-1, 0}, {0, 1}}));
}

TEST(RealizationTest, MatchesActionOracleP4) {
  for (const auto& p : enumerate_group(4)) {
    ASSERT_EQ(realize(p), from_ints(oracle::action_matrix(p.images())));
  }
}

TEST(RealizationTest, MonomialStructure) {
  for (const auto& p : enumerate_group(3)) {
    const auto m = realize(p);
    for (int i = 0; i < 3; ++i) {
      int row_nz = 0, col_nz = 0;
      for (int j = 0; j < 3; ++j) {
        row_nz += m(i, j) != 0;
        col_nz += m(j, i) != 0;
        EXPECT_TRUE(m(i, j) == 0 || m(i, j) == 1 || m(i, j) == -1);
      }
      EXPECT_EQ(row_nz, 1);
      EXPECT_EQ(col_nz, 1);
    }
  }
}

TEST(RealizationTest, HomomorphismExhaustiveP3) {
  const auto all = enumerate_group(3);
  for (const auto& p : all)
    for (const auto& q : all) ASSERT_EQ(realize(compose(p, q)), realize(p) * realize(q));
}

TEST(RealizationTest, TransposeIsInverse) {
  for (const auto& p : enumerate_group(3)) {
    EXPECT_EQ(realize(p).transpose(), realize(inverse(p)));
  }
}

TEST(RealizationTest, RowIndexedPlacementIsTheTranspose) {
  // a_ij = sgn(p(i)) at j = |p(i)| gives an anti-homomorphism; it equals
  // realize(inverse(p)).
  for (const auto& p : enumerate_group(3)) {
    RationalMatrix row_placed(3, 3);
    for (int i = 1; i <= 3; ++i) row_placed(i - 1, std::abs(p(i)) - 1) = p(i) > 0 ? 1 : -1;
    EXPECT_EQ(row_placed, realize(inverse(p)));
  }
}

TEST(RealizationTest, RecognizeExamples) {
  EXPECT_EQ(recognize(M({{0, -1}, {1, 0}})), P({2, -1}));
  EXPECT_EQ(recognize(RationalMatrix::identity(4)), identity(4));
  try {
    recognize(M({{1, 1}, {0, 1}}));
    FAIL() << "expected NotSignedPermutationMatrixError";
  } catch (const NotSignedPermutationMatrixError& e) {
    EXPECT_TRUE(e.is_row());
    EXPECT_EQ(e.index(), 1);
  }
}

TEST(RealizationTest, RecognizeRejects) {
  EXPECT_THROW(recognize(M({{2, 0}, {0, 1}})), NotSignedPermutationMatrixError);
  EXPECT_THROW(recognize(M({{Rational(1, 2), 0}, {0, 1}})), NotSignedPermutationMatrixError);
  EXPECT_THROW(recognize(M({{0, 0}, {0, 1}})), NotSignedPermutationMatrixError);
  try {
    // Rows are fine, column 1 has two entries.
    recognize(M({{1, 0}, {1, 0}}));
    FAIL();
  } catch (const NotSignedPermutationMatrixError& e) {
    EXPECT_FALSE(e.is_row());
    EXPECT_EQ(e.index(), 1);
  }
  EXPECT_THROW(recognize(RationalMatrix(2, 3)), DimensionError);
}

TEST(RealizationTest, RecognizeRoundTripP4) {
  for (const auto& p : enumerate_group(4)) ASSERT_EQ(recognize(realize(p)), p);
}

TEST(RealizationTest, DetSignExamples) {
  EXPECT_EQ(oracle::cofactor_det({{0, -1}, {1, 0}}), 1);
  EXPECT_EQ(det_sign(P({2, -1})), 1);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(det_sign(identity(n)), 1);
  EXPECT_EQ(det_sign(P({2, 1, 3})), -1);
}

TEST(RealizationTest, DetSignAgreesWithBareissAndSignP3) {
  for (const auto& p : enumerate_group(3)) {
    mpz_class det;
    oracle::bareiss_rank(oracle::to_mpz(oracle::action_matrix(p.images())), &det);
    ASSERT_EQ(det_sign(p), det.get_si());
    ASSERT_EQ(det_sign(p), sign(p));
    ASSERT_EQ(exact::determinant(realize(p)), Rational(sign(p)));
  }
}

TEST(ExactLinearAlgebraTest, DeterminantAndRank) {
  const auto a = M({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  EXPECT_EQ(exact::determinant(a), Rational(18));
  EXPECT_EQ(exact::rank(M({{1, 2}, {2, 4}})), 1);
  EXPECT_EQ(exact::determinant(M({{1, 2}, {2, 4}})), Rational(0));
  EXPECT_EQ(exact::determinant(M({{0, 1}, {1, 0}})), Rational(-1));
  EXPECT_THROW(exact::determinant(RationalMatrix(2, 3)), DimensionError);
}

TEST(ExactLinearAlgebraTest, SolveExact) {
  const auto a = M({{2, 1}, {1, 3}});
  const auto x = exact::solve(a, {Rational(1), Rational(2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(1, 5));
  EXPECT_EQ((*x)[1], Rational(3, 5));
  EXPECT_FALSE(exact::solve(M({{1, 2}, {2, 4}}), {Rational(1), Rational(1)}).has_value());
}

TEST(ExactLinearAlgebraTest, RationalParsing) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

}  // namespace
}  // namespace arrowperm
