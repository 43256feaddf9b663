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

// Dense matrices: exact rationals (GMP) for group-level identities and
// binary64 floats (Eigen storage) for the continuous factorizations.
// Element access is 0-based (row, col).

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arrowperm/error.hpp"

namespace arrowperm {

using Rational = mpq_class;

// Parses "a", "-a" or "a/b" into lowest terms.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // E_ij with 1-based (i, j).
  static RationalMatrix unit(int i, int j, int n) {
    if (i < 1 || i > n || j < 1 || j > n) throw IndexError("matrix unit index out of range");
    RationalMatrix m(n, n);
    m(i - 1, j - 1) = 1;
    return m;
  }

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows.front().size()) : 0;
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw DimensionError("ragged matrix rows");
      for (int j = 0; j < c; ++j) {
        m(i, j) = rows[i][j];
        m(i, j).canonicalize();
      }
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  const std::vector<Rational>& data() const { return data_; }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  // Canonical order: dimensions, then row-major entries.
  friend bool operator<(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  RationalMatrix& operator+=(const RationalMatrix& o) {
    require_same_shape(o, "add");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  RationalMatrix& operator-=(const RationalMatrix& o) {
    require_same_shape(o, "subtract");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  RationalMatrix& operator*=(const Rational& s) {
    for (Rational& x : data_) x *= s;
    return *this;
  }

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    RationalMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  void require_same_shape(const RationalMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionError(std::string(op) + ": shape mismatch");
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Row-major lowest-terms serialization, e.g. "[[0,-1],[1,0]]".
inline std::string to_string(const RationalMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < m.rows(); ++i) {
    if (i) out << ',';
    out << '[';
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j).get_str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) { return os << to_string(m); }

namespace exact {

// Row-echelon form by Gaussian elimination over Q. Returns the rank and
// the sign/pivot product needed for the determinant.
struct Echelon {
  RationalMatrix reduced;
  std::vector<int> pivot_cols;
  int swaps = 0;
};

inline Echelon echelon(RationalMatrix m) {
  Echelon e;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
      ++e.swaps;
    }
    for (int r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(row, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

inline int rank(const RationalMatrix& m) {
  return static_cast<int>(echelon(m).pivot_cols.size());
}

inline Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const Echelon e = echelon(m);
  if (static_cast<int>(e.pivot_cols.size()) < m.rows()) return 0;
  Rational det = e.swaps % 2 ? -1 : 1;
  for (int i = 0; i < m.rows(); ++i) det *= e.reduced(i, i);
  return det;
}

// Solves A x = b for square nonsingular A; std::nullopt when singular.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                                  const std::vector<Rational>& b) {
  const int n = a.rows();
  if (!a.is_square() || static_cast<int>(b.size()) != n) {
    throw DimensionError("solve: incompatible system");
  }
  RationalMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const Echelon e = echelon(std::move(aug));
  if (static_cast<int>(e.pivot_cols.size()) < n || e.pivot_cols.back() != n - 1) {
    return std::nullopt;
  }
  std::vector<Rational> x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rational s = e.reduced(i, n);
    for (int j = i + 1; j < n; ++j) s -= e.reduced(i, j) * x[j];
    x[i] = s / e.reduced(i, i);
  }
  return x;
}

}  // namespace exact

class FloatMatrix {
 public:
  FloatMatrix() = default;
  explicit FloatMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
    if (!m_.allFinite()) throw InputError("matrix has non-finite entries");
  }

  static FloatMatrix identity(int n) { return FloatMatrix(Eigen::MatrixXd::Identity(n, n)); }

  static FloatMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r ? static_cast<Eigen::Index>(rows.front().size()) : 0;
    Eigen::MatrixXd m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
      if (static_cast<Eigen::Index>(rows[i].size()) != c) throw DimensionError("ragged matrix rows");
      for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return FloatMatrix(std::move(m));
  }

  int rows() const { return static_cast<int>(m_.rows()); }
  int cols() const { return static_cast<int>(m_.cols()); }
  int n() const { return rows(); }
  bool is_square() const { return m_.rows() == m_.cols(); }
  double operator()(int r, int c) const { return m_(r, c); }
  const Eigen::MatrixXd& eigen() const { return m_; }

  friend FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
    return FloatMatrix(a.m_ * b.m_);
  }

 private:
  Eigen::MatrixXd m_;
};

inline FloatMatrix to_float(const RationalMatrix& m) {
  Eigen::MatrixXd f(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) f(i, j) = m(i, j).get_d();
  return FloatMatrix(std::move(f));
}

// Exact conversion of every double entry (binary fractions are rational).
inline RationalMatrix to_rational(const FloatMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

// Rounds every entry to the nearest integer; used to lift float embeddings
// whose entries are integers up to rounding into exact matrices.
inline RationalMatrix round_to_integers(const FloatMatrix& m, double tol = 1e-9) {
  RationalMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const double v = std::round(m(i, j));
      if (std::abs(v - m(i, j)) > tol) throw DomainError("entry is not close to an integer");
      r(i, j) = static_cast<long>(v);
    }
  }
  return r;
}

}  // namespace arrowperm
