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

// Constructive factorization of invertible real matrices into generator
// words over adjacent rotation and scaling blocks, arrow permutations and
// one positive scalar:
//
//   A = lambda * F * U * Sigma * V^T
//
// lambda = |det A|^(1/n), F an optional sign fixer, U and V^T reduced to
// adjacent Givens rotations, Sigma to adjacent scaling blocks. The SL(2)
// rotation * boost * scaling triple product is solved separately.

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "arrowperm/error.hpp"
#include "arrowperm/generators.hpp"
#include "arrowperm/matrix.hpp"
#include "arrowperm/signed_permutation.hpp"

namespace arrowperm {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kSingularityFloor = 1e-12;
inline constexpr int kSl2BisectionBudget = 200;

// ||eval_word(w) - A||_F / ||A||_F (absolute when A = 0).
inline double verify(const GeneratorWord& w, const FloatMatrix& a) {
  if (!a.is_square() || a.rows() != w.n) {
    throw DimensionError("verify: word degree " + std::to_string(w.n) + " vs matrix " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  const double diff = (eval_word(w).eigen() - a.eigen()).norm();
  const double scale = a.eigen().norm();
  return scale > 0 ? diff / scale : diff;
}

// Adjacent Givens reduction of an orthogonal matrix. Column j is zeroed
// bottom-up with row pairs (i, i+1); each step leaves a nonnegative pivot.
// Pairs whose lower entry is already zero emit no letter, so remaining
// diagonal signs are collected into one trailing ArrowPerm.
inline GeneratorWord factor_so(const FloatMatrix& q, double tol = kDefaultTolerance) {
  if (!q.is_square() || q.rows() < 1) throw DimensionError("factor_so: need a square matrix");
  const int n = q.rows();
  const Eigen::MatrixXd& qm = q.eigen();
  const double ortho = (qm.transpose() * qm - Eigen::MatrixXd::Identity(n, n)).norm();
  const double det = qm.determinant();
  if (ortho > tol || std::abs(std::abs(det) - 1.0) > tol) {
    throw NotOrthogonalError("factor_so: ||Q^T Q - I||_F = " + std::to_string(ortho) +
                             ", det = " + std::to_string(det));
  }

  GeneratorWord w{n, {}};
  Eigen::MatrixXd r = qm;
  for (int j = 0; j + 1 < n; ++j) {
    for (int i = n - 2; i >= j; --i) {
      const double a = r(i, j), b = r(i + 1, j);
      if (b == 0.0) continue;
      const double h = std::hypot(a, b);
      const double c = a / h, s = b / h;
      const Eigen::RowVectorXd top = r.row(i), bottom = r.row(i + 1);
      r.row(i) = c * top + s * bottom;
      r.row(i + 1) = -s * top + c * bottom;
      r(i, j) = h;
      r(i + 1, j) = 0.0;
      // The elimination step is Rotation(-theta); Q picks up its inverse.
      w.letters.push_back(Rotation{i + 1, i + 2, std::atan2(b, a)});
    }
  }

  std::vector<int> images(n);
  bool any_negative = false;
  for (int k = 0; k < n; ++k) {
    const bool negative = r(k, k) < 0;
    any_negative |= negative;
    images[k] = negative ? -(k + 1) : k + 1;
  }
  if (any_negative) w.letters.push_back(ArrowPerm{SignedPermutation(std::move(images))});
  return w;
}

// Positive diagonal with unit product as adjacent scaling blocks:
// Scaling(k, k+1, a_k) with a_k = ln d_1 + ... + ln d_k.
inline GeneratorWord factor_diag(std::span<const double> d, double tol = kDefaultTolerance) {
  const int n = static_cast<int>(d.size());
  if (n < 1) throw DimensionError("factor_diag: empty diagonal");
  double product = 1.0;
  for (int k = 0; k < n; ++k) {
    if (!(d[k] > 0) || !std::isfinite(d[k])) {
      throw DomainError("factor_diag: entry " + std::to_string(k + 1) + " is not positive");
    }
    product *= d[k];
  }
  if (std::abs(product - 1.0) > tol) {
    throw DomainError("factor_diag: product of entries is " + std::to_string(product) + ", not 1");
  }
  GeneratorWord w{n, {}};
  double acc = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    acc += std::log(d[k]);
    w.letters.push_back(Scaling{k + 1, k + 2, acc});
  }
  return simplify(w);
}

inline GeneratorWord factor_gl(const FloatMatrix& a, double tol = kDefaultTolerance) {
  if (!a.is_square() || a.rows() < 1) throw DimensionError("factor_gl: need a square matrix");
  if (!(tol > 0)) throw DomainError("factor_gl: tolerance must be positive");
  const int n = a.rows();
  const Eigen::MatrixXd& am = a.eigen();

  const double fro = am.norm();
  if (fro == 0.0) throw NotInvertibleError("factor_gl: zero matrix", 0.0);
  // Balanced so that orthogonal matrices are left unchanged.
  const double balance = std::sqrt(static_cast<double>(n)) / fro;
  const double det_balanced = (balance * am).partialPivLu().determinant();
  if (!(std::abs(det_balanced) > kSingularityFloor)) {
    const double det_a = std::abs(am.partialPivLu().determinant());
    throw NotInvertibleError("factor_gl: matrix is singular to working precision (|det A| = " +
                                 std::to_string(det_a) + ")",
                             det_a);
  }

  const double det_a = std::abs(am.partialPivLu().determinant());
  const double lambda = std::isnormal(det_a) && std::isfinite(det_a)
                            ? (n == 2 ? std::sqrt(det_a) : std::pow(det_a, 1.0 / n))
                            : std::exp(std::log(std::abs(det_balanced)) / n) / balance;
  GeneratorWord w{n, {Scalar{lambda}}};
  Eigen::MatrixXd s = am / lambda;
  if (det_balanced < 0) {
    std::vector<int> flip(identity(n).images());
    flip[n - 1] = -n;
    w.letters.push_back(ArrowPerm{SignedPermutation(std::move(flip))});
    s.row(n - 1) *= -1.0;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXd u = svd.matrixU();
  Eigen::MatrixXd v = svd.matrixV();
  if (u.determinant() < 0) {
    // det S > 0 forces det V < 0 as well; D Sigma D = Sigma.
    u.col(n - 1) *= -1.0;
    v.col(n - 1) *= -1.0;
  }

  const Eigen::VectorXd sigma = svd.singularValues();
  const double log_mean = sigma.array().log().mean();
  std::vector<double> d(n);
  for (int k = 0; k < n; ++k) d[k] = std::exp(std::log(sigma[k]) - log_mean);

  const double so_tol = std::max(tol, 1e-10);
  for (const GeneratorWord& part :
       {factor_so(FloatMatrix(u), so_tol), factor_diag(d, so_tol),
        factor_so(FloatMatrix(Eigen::MatrixXd(v.transpose())), so_tol)}) {
    w.letters.insert(w.letters.end(), part.letters.begin(), part.letters.end());
  }
  return simplify(w);
}

struct Sl2Parameters {
  double theta = 0;
  double x = 0;
  double y = 0;
  double residual = 0;
};

// Solves Rotation(theta) * Boost(x) * Scaling(y) = M for det M = 1.
//
// The first column of Rotation(-theta) * M is (r, s) = rho (cos a, sin a)
// with a = phi - theta, and Boost(x) * Scaling(y) e_1 = e^y (cosh x, sinh x)
// forces |a| < pi/4, tanh x = tan a, e^y = rho sqrt(cos 2a). Given the first
// column, det = 1 leaves one scalar constraint on the second column,
//   g(a) = u(a) rho cos 2a - sin a = 0,
// where u is the (1,2) entry of Rotation(-theta) * M. g is positive at
// a = -pi/4 and negative at a = +pi/4, so bisection always brackets a root.
inline Sl2Parameters factor_sl2_rbt(const FloatMatrix& m, double tol = 1e-8) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionError("factor_sl2_rbt: need a 2x2 matrix");
  const Eigen::MatrixXd& mm = m.eigen();
  const double det = mm.determinant();
  if (std::abs(det - 1.0) > tol) {
    throw DomainError("factor_sl2_rbt: det M = " + std::to_string(det) + ", expected 1");
  }
  const double rho = std::hypot(mm(0, 0), mm(1, 0));
  const double phi = std::atan2(mm(1, 0), mm(0, 0));
  auto g = [&](double alpha) {
    const double theta = phi - alpha;
    const double u = std::cos(theta) * mm(0, 1) + std::sin(theta) * mm(1, 1);
    return u * rho * std::cos(2 * alpha) - std::sin(alpha);
  };
  auto params_at = [&](double alpha) {
    Sl2Parameters p;
    p.theta = detail::wrap_angle(phi - alpha);
    p.x = std::atanh(std::tan(alpha));
    p.y = std::log(rho) + 0.5 * std::log(std::cos(2 * alpha));
    const GeneratorWord w{2, {Rotation{1, 2, p.theta}, Boost{1, 2, p.x}, Scaling{1, 2, p.y}}};
    const FloatMatrix product = [&] {
      try {
        return eval_word(w);
      } catch (const InputError&) {
        return FloatMatrix(Eigen::MatrixXd::Constant(2, 2, 1e300));
      }
    }();
    p.residual = (product.eigen() - mm).norm() / mm.norm();
    return p;
  };

  constexpr double quarter = std::numbers::pi / 4;
  double lo = -quarter, hi = quarter;
  double best_alpha = 0.0;
  for (int iter = 0; iter < kSl2BisectionBudget && hi - lo > 0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    best_alpha = mid;
    if (gm == 0.0) break;
    (gm > 0 ? lo : hi) = mid;
  }
  Sl2Parameters best = params_at(best_alpha);
  if (!(best.residual <= tol)) {
    throw NoRootFoundError("factor_sl2_rbt: best residual " + std::to_string(best.residual) +
                               " after " + std::to_string(kSl2BisectionBudget) +
                               " bisection steps exceeds tolerance",
                           best.residual);
  }
  return best;
}

}  // namespace arrowperm
