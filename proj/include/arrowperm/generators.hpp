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

// Generator alphabet for GL(n, R): 2x2 rotation, boost and scaling blocks
// embedded on coordinates (i, j), arrow permutations, and a positive scalar.
// Words evaluate left to right: the first letter is the leftmost factor.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "arrowperm/error.hpp"
#include "arrowperm/matrix.hpp"
#include "arrowperm/realization.hpp"
#include "arrowperm/signed_permutation.hpp"

namespace arrowperm {

// [[cos t, -sin t], [sin t, cos t]]
struct Rotation {
  int i, j;
  double theta;
  friend bool operator==(const Rotation&, const Rotation&) = default;
};

// [[cosh x, sinh x], [sinh x, cosh x]]
struct Boost {
  int i, j;
  double x;
  friend bool operator==(const Boost&, const Boost&) = default;
};

// diag(e^y, e^-y)
struct Scaling {
  int i, j;
  double y;
  friend bool operator==(const Scaling&, const Scaling&) = default;
};

struct ArrowPerm {
  SignedPermutation p;
  friend bool operator==(const ArrowPerm&, const ArrowPerm&) = default;
};

// lambda * I, lambda > 0
struct Scalar {
  double lambda;
  friend bool operator==(const Scalar&, const Scalar&) = default;
};

using BlockGenerator = std::variant<Rotation, Boost, Scaling, ArrowPerm, Scalar>;

struct GeneratorWord {
  int n = 1;
  std::vector<BlockGenerator> letters;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

template <typename Letter>
inline constexpr bool is_block_v =
    std::is_same_v<Letter, Rotation> || std::is_same_v<Letter, Boost> ||
    std::is_same_v<Letter, Scaling>;

inline const char* kind_name(const BlockGenerator& g) {
  constexpr const char* names[] = {"rot", "boost", "scale", "perm", "scalar"};
  return names[g.index()];
}

inline void validate(const BlockGenerator& g, int n) {
  std::visit(
      [n](const auto& l) {
        using L = std::decay_t<decltype(l)>;
        if constexpr (is_block_v<L>) {
          if (l.i < 1 || l.j > n || l.i >= l.j) {
            throw IndexError("block positions (" + std::to_string(l.i) + "," + std::to_string(l.j) +
                             ") invalid for n = " + std::to_string(n));
          }
        } else if constexpr (std::is_same_v<L, ArrowPerm>) {
          if (l.p.degree() != n) throw DimensionError("arrow permutation degree differs from n");
        } else {
          if (!(l.lambda > 0) || !std::isfinite(l.lambda)) {
            throw DomainError("scalar letter must be finite and strictly positive");
          }
        }
      },
      g);
}

inline void validate(const GeneratorWord& w) {
  if (w.n < 1) throw DegreeError("word degree must be >= 1");
  for (const BlockGenerator& g : w.letters) validate(g, w.n);
}

namespace detail {

inline Eigen::Matrix2d block_of(const BlockGenerator& g) {
  Eigen::Matrix2d b;
  if (const auto* r = std::get_if<Rotation>(&g)) {
    const double c = std::cos(r->theta), s = std::sin(r->theta);
    b << c, -s, s, c;
  } else if (const auto* h = std::get_if<Boost>(&g)) {
    const double c = std::cosh(h->x), s = std::sinh(h->x);
    b << c, s, s, c;
  } else {
    const double y = std::get<Scaling>(g).y;
    b << std::exp(y), 0, 0, std::exp(-y);
  }
  return b;
}

inline std::pair<int, int> block_positions(const BlockGenerator& g) {
  return std::visit(
      [](const auto& l) -> std::pair<int, int> {
        using L = std::decay_t<decltype(l)>;
        if constexpr (is_block_v<L>) {
          return {l.i, l.j};
        } else {
          return {0, 0};
        }
      },
      g);
}

}  // namespace detail

inline FloatMatrix embed(const BlockGenerator& g, int n) {
  validate(g, n);
  if (const auto* a = std::get_if<ArrowPerm>(&g)) return realize_float(a->p);
  if (const auto* s = std::get_if<Scalar>(&g)) {
    return FloatMatrix(s->lambda * Eigen::MatrixXd::Identity(n, n));
  }
  const auto [i, j] = detail::block_positions(g);
  const Eigen::Matrix2d b = detail::block_of(g);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  m(i - 1, i - 1) = b(0, 0);
  m(i - 1, j - 1) = b(0, 1);
  m(j - 1, i - 1) = b(1, 0);
  m(j - 1, j - 1) = b(1, 1);
  return FloatMatrix(std::move(m));
}

// Left-to-right product; block letters are applied as column operations on
// the running product instead of forming full n x n embeddings.
inline FloatMatrix eval_word(const GeneratorWord& w) {
  validate(w);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(w.n, w.n);
  for (const BlockGenerator& g : w.letters) {
    if (const auto* a = std::get_if<ArrowPerm>(&g)) {
      m = m * realize_float(a->p).eigen();
    } else if (const auto* s = std::get_if<Scalar>(&g)) {
      m *= s->lambda;
    } else {
      const auto [i, j] = detail::block_positions(g);
      const Eigen::Matrix2d b = detail::block_of(g);
      const Eigen::VectorXd ci = m.col(i - 1), cj = m.col(j - 1);
      m.col(i - 1) = b(0, 0) * ci + b(1, 0) * cj;
      m.col(j - 1) = b(0, 1) * ci + b(1, 1) * cj;
    }
  }
  return FloatMatrix(std::move(m));
}

inline BlockGenerator letter_inverse(const BlockGenerator& g) {
  return std::visit(
      [](const auto& l) -> BlockGenerator {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, Rotation>) {
          return Rotation{l.i, l.j, -l.theta};
        } else if constexpr (std::is_same_v<L, Boost>) {
          return Boost{l.i, l.j, -l.x};
        } else if constexpr (std::is_same_v<L, Scaling>) {
          return Scaling{l.i, l.j, -l.y};
        } else if constexpr (std::is_same_v<L, ArrowPerm>) {
          return ArrowPerm{inverse(l.p)};
        } else {
          return Scalar{1.0 / l.lambda};
        }
      },
      g);
}

inline GeneratorWord word_inverse(const GeneratorWord& w) {
  GeneratorWord inv{w.n, {}};
  inv.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    inv.letters.push_back(letter_inverse(*it));
  }
  return inv;
}

namespace detail {

// Maps an angle into (-pi, pi].
inline double wrap_angle(double t) {
  constexpr double pi = std::numbers::pi;
  double r = std::remainder(t, 2 * pi);
  if (r <= -pi) r += 2 * pi;
  return r;
}

inline bool is_trivial(const BlockGenerator& g) {
  return std::visit(
      [](const auto& l) {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, Rotation>) {
          return l.theta == 0.0;
        } else if constexpr (std::is_same_v<L, Boost>) {
          return l.x == 0.0;
        } else if constexpr (std::is_same_v<L, Scaling>) {
          return l.y == 0.0;
        } else if constexpr (std::is_same_v<L, ArrowPerm>) {
          return l.p == identity(l.p.degree());
        } else {
          return l.lambda == 1.0;
        }
      },
      g);
}

// Product of two letters when they belong to the same one-parameter block
// (or both are perms / scalars).
inline std::optional<BlockGenerator> merge(const BlockGenerator& a, const BlockGenerator& b) {
  if (a.index() != b.index()) return std::nullopt;
  if (const auto* r = std::get_if<Rotation>(&a)) {
    const auto& s = std::get<Rotation>(b);
    if (r->i != s.i || r->j != s.j) return std::nullopt;
    return Rotation{r->i, r->j, wrap_angle(r->theta + s.theta)};
  }
  if (const auto* h = std::get_if<Boost>(&a)) {
    const auto& k = std::get<Boost>(b);
    if (h->i != k.i || h->j != k.j) return std::nullopt;
    return Boost{h->i, h->j, h->x + k.x};
  }
  if (const auto* c = std::get_if<Scaling>(&a)) {
    const auto& d = std::get<Scaling>(b);
    if (c->i != d.i || c->j != d.j) return std::nullopt;
    return Scaling{c->i, c->j, c->y + d.y};
  }
  if (const auto* p = std::get_if<ArrowPerm>(&a)) {
    return ArrowPerm{compose(p->p, std::get<ArrowPerm>(b).p)};
  }
  return Scalar{std::get<Scalar>(a).lambda * std::get<Scalar>(b).lambda};
}

}  // namespace detail

// Merges adjacent letters of the same kind on the same positions and drops
// trivial letters, until no mergeable neighbours remain.
inline GeneratorWord simplify(const GeneratorWord& w) {
  validate(w);
  std::vector<BlockGenerator> out;
  out.reserve(w.letters.size());
  for (const BlockGenerator& g : w.letters) {
    if (detail::is_trivial(g)) continue;
    BlockGenerator cur = g;
    // Merging may make the new tail trivial, exposing an earlier neighbour.
    while (true) {
      if (out.empty()) {
        out.push_back(cur);
        break;
      }
      auto merged = detail::merge(out.back(), cur);
      if (!merged) {
        out.push_back(cur);
        break;
      }
      out.pop_back();
      if (detail::is_trivial(*merged)) break;
      cur = *merged;
    }
  }
  return GeneratorWord{w.n, std::move(out)};
}

}  // namespace arrowperm
