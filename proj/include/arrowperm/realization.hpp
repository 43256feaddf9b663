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

#pragma once

// The defining matrix realization of arrow permutations and its inverse.
//
// Column convention: column j of realize(p) is sgn(p(j)) * e_{|p(j)|}. With
// (p o q)(i) = p(q(i)) this makes realize a homomorphism,
//   realize(compose(p, q)) == realize(p) * realize(q).
// The row-indexed placement a_ij = sgn(p(i)) at j = |p(i)| is the transpose,
// i.e. realize(inverse(p)).

#include <cstdlib>
#include <string>
#include <vector>

#include "arrowperm/error.hpp"
#include "arrowperm/matrix.hpp"
#include "arrowperm/signed_permutation.hpp"

namespace arrowperm {

inline RationalMatrix realize(const SignedPermutation& p) {
  const int n = p.degree();
  RationalMatrix m(n, n);
  for (int j = 1; j <= n; ++j) {
    const int v = p(j);
    m(std::abs(v) - 1, j - 1) = v > 0 ? 1 : -1;
  }
  return m;
}

inline FloatMatrix realize_float(const SignedPermutation& p) { return to_float(realize(p)); }

// Inverse of realize. Throws NotSignedPermutationMatrixError naming the first
// offending row or column (1-based).
inline SignedPermutation recognize(const RationalMatrix& m) {
  if (!m.is_square() || m.rows() == 0) {
    throw DimensionError("recognize: matrix must be square and non-empty");
  }
  const int n = m.rows();
  for (int i = 0; i < n; ++i) {
    int nonzeros = 0;
    for (int j = 0; j < n; ++j) {
      const Rational& a = m(i, j);
      if (a == 0) continue;
      ++nonzeros;
      if (a != 1 && a != -1) {
        throw NotSignedPermutationMatrixError(
            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is " + a.get_str() +
                ", expected 0 or +-1",
            true, i + 1);
      }
    }
    if (nonzeros != 1) {
      throw NotSignedPermutationMatrixError("row " + std::to_string(i + 1) + " has " +
                                                std::to_string(nonzeros) + " nonzero entries",
                                            true, i + 1);
    }
  }
  std::vector<int> images(n, 0);
  for (int j = 0; j < n; ++j) {
    int nonzeros = 0;
    for (int i = 0; i < n; ++i) {
      if (m(i, j) == 0) continue;
      ++nonzeros;
      images[j] = m(i, j) > 0 ? i + 1 : -(i + 1);
    }
    if (nonzeros != 1) {
      throw NotSignedPermutationMatrixError("column " + std::to_string(j + 1) + " has " +
                                                std::to_string(nonzeros) + " nonzero entries",
                                            false, j + 1);
    }
  }
  return SignedPermutation(std::move(images));
}

// det(realize(p)), read off the monomial structure without elimination.
inline int det_sign(const SignedPermutation& p) {
  const int n = p.degree();
  // Inversion count of the underlying permutation.
  int parity = 0;
  for (int i = 1; i <= n; ++i) {
    if (p(i) < 0) ++parity;
    for (int j = i + 1; j <= n; ++j) {
      if (std::abs(p(i)) > std::abs(p(j))) ++parity;
    }
  }
  return parity % 2 ? -1 : 1;
}

}  // namespace arrowperm
