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

#include "arrowperm/signed_permutation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"

namespace arrowperm {
namespace {

SignedPermutation P(std::vector<int> v) { return SignedPermutation(std::move(v)); }

// compose checked against the product of action matrices.
SignedPermutation compose_oracle(const SignedPermutation& p, const SignedPermutation& q) {
  return P(oracle::read_monomial(
      oracle::multiply(oracle::action_matrix(p.images()), oracle::action_matrix(q.images()))));
}

TEST(SignedPermutationTest, RejectsInvalidImages) {
  EXPECT_THROW(P({}), DegreeError);
  EXPECT_THROW(P({1, 0}), InvalidPermutationError);
  EXPECT_THROW(P({1, -1}), InvalidPermutationError);
  EXPECT_THROW(P({3, 1}), InvalidPermutationError);
  EXPECT_THROW(identity(0), DegreeError);
}

TEST(SignedPermutationTest, Identity) {
  EXPECT_EQ(identity(3).images(), (std::vector<int>{1, 2, 3}));
  const auto p = P({2, -1});
  EXPECT_EQ(compose(identity(2), p), p);
  EXPECT_EQ(sign(identity(4)), 1);
}

TEST(SignedPermutationTest, ExtensionToNegativeArguments) {
  const auto p = P({2, -1});
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(-1), -2);
  EXPECT_EQ(p(-2), 1);
}

TEST(SignedPermutationTest, ComposeExamples) {
  const auto p = P({2, -1});
  EXPECT_EQ(compose_oracle(p, p), P({-1, -2}));
  EXPECT_EQ(compose(p, p), P({-1, -2}));
  EXPECT_EQ(compose_oracle(P({2, 1}), P({-1, 2})), P({-2, 1}));
  EXPECT_EQ(compose(P({2, 1}), P({-1, 2})), P({-2, 1}));
  EXPECT_EQ(compose(p, identity(2)), p);
  EXPECT_THROW(compose(identity(2), identity(3)), DimensionError);
}

TEST(SignedPermutationTest, ComposeMatchesActionOracleOnP3) {
  const auto all = enumerate_group(3);
  for (const auto& p : all)
    for (const auto& q : all) ASSERT_EQ(compose(p, q), compose_oracle(p, q));
}

TEST(SignedPermutationTest, InverseExamples) {
  EXPECT_EQ(inverse(P({2, -1})), P({-2, 1}));
  EXPECT_EQ(compose(P({2, -1}), P({-2, 1})), identity(2));
  EXPECT_EQ(inverse(identity(5)), identity(5));
  EXPECT_EQ(inverse(P({-1, 2})), P({-1, 2}));
}

TEST(SignedPermutationTest, InverseLawExhaustiveP3) {
  for (const auto& p : enumerate_group(3)) {
    EXPECT_EQ(compose(p, inverse(p)), identity(3));
    EXPECT_EQ(compose(inverse(p), p), identity(3));
    for (int i = 1; i <= 3; ++i) {
      const int v = p(i);
      EXPECT_EQ(inverse(p)(std::abs(v)), (v > 0 ? 1 : -1) * i);
    }
  }
}

TEST(SignedPermutationTest, SignExamples) {
  // Determinants of the action matrices, by cofactor expansion.
  EXPECT_EQ(oracle::cofactor_det(oracle::action_matrix({2, -1})), 1);
  EXPECT_EQ(oracle::cofactor_det(oracle::action_matrix({2, 1, 3})), -1);
  EXPECT_EQ(sign(P({2, -1})), 1);
  EXPECT_EQ(sign(P({-1, 2})), -1);
  EXPECT_EQ(sign(P({2, 1, 3})), -1);
}

TEST(SignedPermutationTest, SignIsHomomorphismExhaustiveP3) {
  const auto all = enumerate_group(3);
  for (const auto& p : all)
    for (const auto& q : all) ASSERT_EQ(sign(compose(p, q)), sign(p) * sign(q));
}

TEST(SignedPermutationTest, SignEqualsCofactorDeterminantP4) {
  for (const auto& p : enumerate_group(4)) {
    ASSERT_EQ(sign(p), oracle::cofactor_det(oracle::action_matrix(p.images())));
  }
}

TEST(SignedPermutationTest, AssociativityOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    for (int t = 0; t < 200; ++t) {
      const auto p = random_element(n, rng());
      const auto q = random_element(n, rng());
      const auto r = random_element(n, rng());
      ASSERT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
    }
  }
}

TEST(SignedPermutationTest, CycleDecompositionExamples) {
  const auto c = cycle_decomposition(P({2, -1}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].support(), (std::vector<int>{1, 2}));
  EXPECT_EQ(c[0].closing_sign, -1);
  EXPECT_EQ(recompose(c, 2), P({2, -1}));

  EXPECT_TRUE(cycle_decomposition(identity(3)).empty());

  const auto flip = cycle_decomposition(P({-1, 2}));
  ASSERT_EQ(flip.size(), 1u);
  EXPECT_EQ(flip[0].support(), (std::vector<int>{1}));
  EXPECT_EQ(flip[0].closing_sign, -1);
}

TEST(SignedPermutationTest, CycleSignsDistinguishSameSupport) {
  // Same support and closing sign, different elements.
  const auto a = cycle_decomposition(P({-2, -1}));
  const auto b = cycle_decomposition(P({2, 1}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].closing_sign, b[0].closing_sign);
  EXPECT_EQ(a[0].support(), b[0].support());
  EXPECT_EQ(recompose(a, 2), P({-2, -1}));
  EXPECT_EQ(recompose(b, 2), P({2, 1}));
  EXPECT_EQ(to_string(a), "(1 -2 | +)");
}

void check_cycles(const SignedPermutation& p) {
  const auto cycles = cycle_decomposition(p);
  std::set<int> seen;
  std::size_t covered = 0;
  int product_of_closing = 1;
  for (const auto& c : cycles) {
    for (int a : c.support()) {
      ASSERT_TRUE(seen.insert(a).second) << "supports overlap";
    }
    covered += c.size();
    product_of_closing *= c.closing_sign;
  }
  std::size_t fixed = 0;
  for (int i = 1; i <= p.degree(); ++i) {
    if (!seen.count(i)) {
      ASSERT_EQ(p(i), i);
      ++fixed;
    }
  }
  ASSERT_EQ(covered + fixed, static_cast<std::size_t>(p.degree()));
  ASSERT_EQ(recompose(cycles, p.degree()), p);
  // Product of all image signs equals the product of closing signs.
  int image_signs = 1;
  for (int v : p.images()) image_signs *= v > 0 ? 1 : -1;
  ASSERT_EQ(product_of_closing, image_signs);
}

TEST(SignedPermutationTest, CycleRoundTripP3AndRandomP6) {
  for (const auto& p : enumerate_group(3)) check_cycles(p);
  for (std::uint64_t s = 0; s < 1000; ++s) check_cycles(random_element(6, s));
}

TEST(SignedPermutationTest, CycleText) {
  EXPECT_EQ(to_string(cycle_decomposition(P({2, -1}))), "(1 2 | -)");
  EXPECT_EQ(to_string(cycle_decomposition(identity(2))), "()");
  EXPECT_EQ(to_string(cycle_decomposition(P({-1, 3, 2}))), "(1 | -) (2 3 | +)");
}

TEST(SignedPermutationTest, ToWordExamples) {
  EXPECT_EQ(to_word(P({-1, 2})), (PermWord{PermLetter::inversion(1)}));
  EXPECT_EQ(to_word(P({2, 1})), (PermWord{PermLetter::transposition(1)}));
  const auto w = to_word(P({-2, 1}));
  EXPECT_EQ(w.size(), 2u);
  EXPECT_EQ(evaluate(w, 2), P({-2, 1}));
}

TEST(SignedPermutationTest, ToWordRoundTripAndParity) {
  for (int n = 1; n <= 4; ++n) {
    const std::size_t bound = n * (n - 1) / 2 + n;
    for (const auto& p : enumerate_group(n)) {
      const auto w = to_word(p);
      ASSERT_EQ(evaluate(w, n), p);
      ASSERT_LE(w.size(), bound);
      ASSERT_EQ(w.size() % 2 == 0 ? 1 : -1, sign(p));
    }
  }
}

TEST(SignedPermutationTest, LetterIndexValidation) {
  EXPECT_THROW(letter_element(PermLetter::transposition(2), 2), IndexError);
  EXPECT_THROW(letter_element(PermLetter::inversion(0), 2), IndexError);
}

TEST(SignedPermutationTest, EnumerationSizesAndKernel) {
  EXPECT_EQ(enumerate_group(1), (std::vector<SignedPermutation>{P({-1}), P({1})}));
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_group(n);
    ASSERT_EQ(static_cast<long>(all.size()), (1L << n) * oracle::factorial(n));
    const std::set<SignedPermutation> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
    const auto even = std::count_if(all.begin(), all.end(), [](const auto& p) { return sign(p) == 1; });
    EXPECT_EQ(2 * static_cast<std::size_t>(even), all.size());
  }
}

TEST(SignedPermutationTest, EnumerationOrderMatchesBruteForce) {
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_group(n);
    const auto brute = oracle::brute_force_group(n);
    ASSERT_EQ(all.size(), brute.size());
    for (std::size_t k = 0; k < all.size(); ++k) ASSERT_EQ(all[k].images(), brute[k]);
  }
}

TEST(SignedPermutationTest, EnumerationCap) {
  EXPECT_THROW(enumerate_group(7), ResourceLimitError);
  EXPECT_EQ(enumerate_group(6).size(), 46080u);
  EXPECT_EQ(enumerate_group(2, 2).size(), 8u);
  EXPECT_THROW(enumerate_group(3, 2), ResourceLimitError);
}

TEST(SignedPermutationTest, RandomElementIsDeterministic) {
  EXPECT_EQ(random_element(5, 42), random_element(5, 42));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto p = random_element(1, s);
    EXPECT_TRUE(p == P({1}) || p == P({-1}));
  }
}

TEST(SignedPermutationTest, RandomElementSignBalance) {
  // Even elements form an index-2 subgroup: P(even) = 1/2 exactly.
  constexpr int kSamples = 10000;
  int even = 0;
  for (int s = 0; s < kSamples; ++s) even += sign(random_element(3, s)) == 1;
  const double sigma = std::sqrt(kSamples * 0.25);
  EXPECT_LE(std::abs(even - kSamples / 2.0), 5 * sigma);
}

TEST(SignedPermutationTest, RandomElementCoversP3) {
  std::map<SignedPermutation, int> counts;
  for (int s = 0; s < 48 * 200; ++s) ++counts[random_element(3, s)];
  EXPECT_EQ(counts.size(), 48u);
  for (const auto& [p, c] : counts) {
    // 200 expected per element; 5 sigma band.
    EXPECT_NEAR(c, 200, 5 * std::sqrt(200.0)) << to_string(p);
  }
}

TEST(SignedPermutationTest, ParseAndFormat) {
  EXPECT_EQ(parse_permutation("[2,-1,3]"), P({2, -1, 3}));
  EXPECT_EQ(parse_permutation(" [ 2 , -1 ] "), P({2, -1}));
  EXPECT_EQ(to_string(P({2, -1, 3})), "[2,-1,3]");
  EXPECT_THROW(parse_permutation("[0,1]"), ParseError);
  EXPECT_THROW(parse_permutation("[1,-1]"), ParseError);
  EXPECT_THROW(parse_permutation("1,2"), ParseError);
  EXPECT_THROW(parse_permutation("[1,x]"), ParseError);
  EXPECT_THROW(parse_permutation("[1,,2]"), ParseError);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto p = random_element(6, s);
    EXPECT_EQ(parse_permutation(to_string(p)), p);
  }
}

}  // namespace
}  // namespace arrowperm
