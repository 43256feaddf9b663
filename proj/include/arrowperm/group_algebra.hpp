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

// The group algebra of arrow permutations over Q and its realization as
// n x n matrices. The realization rho is an algebra homomorphism onto the
// full matrix algebra: every matrix is an exact rational combination of at
// most n^2 signed permutation matrices.

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "arrowperm/error.hpp"
#include "arrowperm/matrix.hpp"
#include "arrowperm/realization.hpp"
#include "arrowperm/signed_permutation.hpp"

namespace arrowperm {

class AlgebraElement {
 public:
  using Terms = std::map<SignedPermutation, Rational>;

  explicit AlgebraElement(int degree) : degree_(degree) {
    if (degree < 1) throw DegreeError("algebra degree must be >= 1");
  }
  AlgebraElement(const SignedPermutation& p, const Rational& coeff) : degree_(p.degree()) {
    add_term(p, coeff);
  }

  static AlgebraElement zero(int n) { return AlgebraElement(n); }
  static AlgebraElement unit(int n) { return AlgebraElement(identity(n), 1); }

  int degree() const { return degree_; }
  // Canonical (perm_core) order; zero coefficients are never stored.
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const SignedPermutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const SignedPermutation& p, const Rational& coeff) {
    if (p.degree() != degree_) throw DimensionError("term degree differs from algebra degree");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  int degree_;
  Terms terms_;
};

// "1/2*[2,1] - 1/2*[2,-1]"; zero prints as "0".
inline std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) {
  if (x.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [p, c] : x.terms()) {
    if (first) {
      os << c.get_str();
    } else {
      os << (c < 0 ? " - " : " + ") << Rational(abs(c)).get_str();
    }
    os << '*' << to_string(p);
    first = false;
  }
  return os;
}

inline void require_same_degree(const AlgebraElement& x, const AlgebraElement& y, const char* op) {
  if (x.degree() != y.degree()) {
    throw DimensionError(std::string(op) + ": degree mismatch " + std::to_string(x.degree()) +
                         " vs " + std::to_string(y.degree()));
  }
}

inline AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_degree(x, y, "add");
  AlgebraElement r = x;
  for (const auto& [p, c] : y.terms()) r.add_term(p, c);
  return r;
}

inline AlgebraElement scale(const Rational& s, const AlgebraElement& x) {
  AlgebraElement r(x.degree());
  for (const auto& [p, c] : x.terms()) r.add_term(p, s * c);
  return r;
}

inline AlgebraElement subtract(const AlgebraElement& x, const AlgebraElement& y) {
  return add(x, scale(-1, y));
}

// Convolution: bilinear extension of compose.
inline AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_degree(x, y, "mul");
  AlgebraElement r(x.degree());
  for (const auto& [p, a] : x.terms())
    for (const auto& [q, b] : y.terms()) r.add_term(compose(p, q), a * b);
  return r;
}

inline RationalMatrix to_matrix(const AlgebraElement& x) {
  const int n = x.degree();
  RationalMatrix m(n, n);
  for (const auto& [p, c] : x.terms()) {
    for (int j = 1; j <= n; ++j) {
      const int v = p(j);
      if (v > 0) {
        m(v - 1, j - 1) += c;
      } else {
        m(-v - 1, j - 1) -= c;
      }
    }
  }
  return m;
}

namespace detail {

// Incrementally maintained row-echelon basis of Q^d.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim) {}

  // Adds v if it is independent of the current span; returns whether it was.
  bool insert(std::vector<Rational> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const int pc = pivots_[k];
      if (v[pc] == 0) continue;
      const Rational f = v[pc] / rows_[k][pc];
      for (int c = 0; c < dim_; ++c) {
        if (rows_[k][c] != 0) v[c] -= f * rows_[k][c];
      }
    }
    for (int c = 0; c < dim_; ++c) {
      if (v[c] != 0) {
        rows_.push_back(std::move(v));
        pivots_.push_back(c);
        return true;
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

inline std::vector<Rational> vectorize(const RationalMatrix& m) { return m.data(); }

}  // namespace detail

// Exact rank of {vec(realize(p)) : p in P(n)}.
inline int realization_rank(int n, int cap = kDefaultEnumerationCap) {
  detail::EchelonBasis basis(n * n);
  for (const SignedPermutation& p : enumerate_group(n, cap)) {
    basis.insert(detail::vectorize(realize(p)));
    if (basis.rank() == n * n) break;
  }
  return basis.rank();
}

// Greedy scan of P(n) in canonical order, keeping each element whose
// realization increases the rank. Always returns n^2 elements.
inline std::vector<SignedPermutation> spanning_basis(int n, int cap = kDefaultEnumerationCap) {
  detail::EchelonBasis basis(n * n);
  std::vector<SignedPermutation> chosen;
  for (const SignedPermutation& p : enumerate_group(n, cap)) {
    if (basis.insert(detail::vectorize(realize(p)))) chosen.push_back(p);
    if (basis.rank() == n * n) break;
  }
  if (basis.rank() != n * n) {
    throw InternalError("realizations of P(" + std::to_string(n) + ") do not span the matrix algebra");
  }
  return chosen;
}

// Two-term element realizing E_ij: 1/2 p+ - 1/2 p-, where p+ is the
// transposition of i and j (so p+(j) = +i) and p- flips the sign at j.
inline AlgebraElement matrix_unit(int i, int j, int n) {
  if (n < 1) throw DegreeError("degree must be >= 1");
  if (i < 1 || i > n || j < 1 || j > n) {
    throw IndexError("matrix_unit(" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range for n = " + std::to_string(n));
  }
  std::vector<int> plus(identity(n).images());
  std::swap(plus[i - 1], plus[j - 1]);
  std::vector<int> minus(plus);
  minus[j - 1] = -minus[j - 1];
  const Rational half(1, 2);
  AlgebraElement e(n);
  e.add_term(SignedPermutation(std::move(plus)), half);
  e.add_term(SignedPermutation(std::move(minus)), -half);
  return e;
}

// Exact preimage of M supported on spanning_basis(n).
inline AlgebraElement express_matrix(const RationalMatrix& m, int cap = kDefaultEnumerationCap) {
  if (!m.is_square() || m.rows() < 1) throw DimensionError("express_matrix: need a square matrix");
  const int n = m.rows();
  const std::vector<SignedPermutation> basis = spanning_basis(n, cap);
  const int d = n * n;
  RationalMatrix system(d, d);
  for (int k = 0; k < d; ++k) {
    const RationalMatrix r = realize(basis[k]);
    for (int e = 0; e < d; ++e) system(e, k) = r.data()[e];
  }
  const auto coeffs = exact::solve(system, detail::vectorize(m));
  if (!coeffs) throw InternalError("spanning system is singular");
  AlgebraElement x(n);
  for (int k = 0; k < d; ++k) x.add_term(basis[k], (*coeffs)[k]);
  return x;
}

inline bool is_invertible(const AlgebraElement& x) {
  return exact::determinant(to_matrix(x)) != 0;
}

}  // namespace arrowperm
