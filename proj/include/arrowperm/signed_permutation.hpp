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

// Arrow (signed) permutations of degree n: bijections p of {1..n} decorated
// with a sign per point, extended to negative arguments by p(-k) = -p(k).
// Positions are 1-based throughout.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arrowperm/error.hpp"

namespace arrowperm {

inline constexpr int kDefaultEnumerationCap = 6;

class SignedPermutation {
 public:
  // Validates that |images| is a permutation of {1..n} and no image is 0.
  explicit SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n == 0) throw DegreeError("signed permutation must have degree >= 1");
    std::vector<bool> seen(n + 1, false);
    for (int i = 0; i < n; ++i) {
      const int v = images_[i];
      if (v == 0) {
        throw InvalidPermutationError("image of position " + std::to_string(i + 1) + " is 0");
      }
      const int a = std::abs(v);
      if (a > n) {
        throw InvalidPermutationError("image " + std::to_string(v) + " out of range for degree " +
                                      std::to_string(n));
      }
      if (seen[a]) {
        throw InvalidPermutationError("repeated absolute value " + std::to_string(a));
      }
      seen[a] = true;
    }
  }

  int degree() const { return static_cast<int>(images_.size()); }

  // p(k) for k in {-n..-1, 1..n}.
  int operator()(int k) const {
    return k > 0 ? images_[k - 1] : -images_[-k - 1];
  }

  const std::vector<int>& images() const { return images_; }

  // Canonical order: lexicographic on images, integer order per entry.
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> images_;
};

inline SignedPermutation identity(int n) {
  if (n < 1) throw DegreeError("degree must be >= 1, got " + std::to_string(n));
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return SignedPermutation(std::move(images));
}

// (p o q)(i) = p(q(i)): q is applied first.
inline SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q) {
  if (p.degree() != q.degree()) {
    throw DimensionError("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                         std::to_string(q.degree()));
  }
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[i - 1] = p(q(i));
  return SignedPermutation(std::move(images));
}

inline SignedPermutation inverse(const SignedPermutation& p) {
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) {
    const int v = p(i);
    images[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(images));
}

// sgn(underlying permutation) * product of image signs. Equals the
// determinant of the matrix realization, so elementary inversions are odd.
inline int sign(const SignedPermutation& p) {
  const int n = p.degree();
  int s = 1;
  std::vector<bool> visited(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (p(start) < 0) s = -s;
    if (visited[start]) continue;
    int len = 0;
    for (int k = start; !visited[k]; k = std::abs(p(k))) {
      visited[k] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

// One cycle of an arrow permutation, written as the signed orbit of +a1:
// orbit = (a1, p(a1), p(p(a1)), ...), with p^k(a1) = closing_sign * a1.
struct ArrowCycle {
  std::vector<int> orbit;  // orbit[0] > 0; absolute values are distinct
  int closing_sign = 1;

  std::vector<int> support() const {
    std::vector<int> s(orbit.size());
    std::transform(orbit.begin(), orbit.end(), s.begin(), [](int v) { return std::abs(v); });
    return s;
  }
  std::size_t size() const { return orbit.size(); }

  friend bool operator==(const ArrowCycle&, const ArrowCycle&) = default;
};

// Cycles ordered by smallest support element; fixed points (length-1 cycles
// with closing sign +1) are omitted.
inline std::vector<ArrowCycle> cycle_decomposition(const SignedPermutation& p) {
  const int n = p.degree();
  std::vector<ArrowCycle> cycles;
  std::vector<bool> visited(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    ArrowCycle c;
    int x = start;
    while (true) {
      visited[std::abs(x)] = true;
      c.orbit.push_back(x);
      x = p(x);
      if (std::abs(x) == start) break;
    }
    c.closing_sign = x > 0 ? 1 : -1;
    if (c.orbit.size() == 1 && c.closing_sign == 1) continue;
    cycles.push_back(std::move(c));
  }
  return cycles;
}

// Inverse of cycle_decomposition; positions not covered are fixed.
inline SignedPermutation recompose(const std::vector<ArrowCycle>& cycles, int n) {
  std::vector<int> images(identity(n).images());
  std::vector<bool> used(n + 1, false);
  for (const ArrowCycle& c : cycles) {
    if (c.orbit.empty() || c.orbit.front() <= 0 || (c.closing_sign != 1 && c.closing_sign != -1)) {
      throw InvalidPermutationError("malformed arrow cycle");
    }
    const std::size_t k = c.orbit.size();
    for (std::size_t m = 0; m < k; ++m) {
      const int x = c.orbit[m];
      const int a = std::abs(x);
      if (a < 1 || a > n || used[a]) throw InvalidPermutationError("cycle supports overlap");
      used[a] = true;
      const int next = m + 1 < k ? c.orbit[m + 1] : c.closing_sign * c.orbit[0];
      // p(x) = next  =>  p(a) = sgn(x) * next
      images[a - 1] = x > 0 ? next : -next;
    }
  }
  return SignedPermutation(std::move(images));
}

struct PermLetter {
  enum class Kind { kAdjacentTransposition, kElementaryInversion };
  Kind kind;
  int index;

  static PermLetter transposition(int i) { return {Kind::kAdjacentTransposition, i}; }
  static PermLetter inversion(int i) { return {Kind::kElementaryInversion, i}; }

  friend bool operator==(const PermLetter&, const PermLetter&) = default;
};

using PermWord = std::vector<PermLetter>;

inline SignedPermutation letter_element(const PermLetter& letter, int n) {
  std::vector<int> images(identity(n).images());
  if (letter.kind == PermLetter::Kind::kAdjacentTransposition) {
    if (letter.index < 1 || letter.index > n - 1) {
      throw IndexError("transposition index " + std::to_string(letter.index) + " out of range");
    }
    std::swap(images[letter.index - 1], images[letter.index]);
  } else {
    if (letter.index < 1 || letter.index > n) {
      throw IndexError("inversion index " + std::to_string(letter.index) + " out of range");
    }
    images[letter.index - 1] = -images[letter.index - 1];
  }
  return SignedPermutation(std::move(images));
}

// letters[0] o letters[1] o ... o letters[k-1] (rightmost applied first).
inline SignedPermutation evaluate(const PermWord& word, int n) {
  SignedPermutation result = identity(n);
  for (const PermLetter& l : word) result = compose(result, letter_element(l, n));
  return result;
}

// Word over adjacent transpositions and elementary inversions: bubble-sort
// word of the underlying permutation followed by one inversion per negative
// image. Length parity equals sign(p).
inline PermWord to_word(const SignedPermutation& p) {
  const int n = p.degree();
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = std::abs(p.images()[i]);

  // sigma o s_{j1} o ... o s_{jk} = id, hence sigma = s_{jk} o ... o s_{j1}.
  PermWord swaps;
  for (int pass = 0; pass < n; ++pass) {
    for (int j = 0; j + 1 < n; ++j) {
      if (sigma[j] > sigma[j + 1]) {
        std::swap(sigma[j], sigma[j + 1]);
        swaps.push_back(PermLetter::transposition(j + 1));
      }
    }
  }
  PermWord word(swaps.rbegin(), swaps.rend());
  for (int i = 1; i <= n; ++i) {
    if (p(i) < 0) word.push_back(PermLetter::inversion(i));
  }
  return word;
}

// All 2^n * n! elements in canonical order.
inline std::vector<SignedPermutation> enumerate_group(int n, int cap = kDefaultEnumerationCap) {
  if (n < 1) throw DegreeError("degree must be >= 1, got " + std::to_string(n));
  if (n > cap) {
    throw ResourceLimitError("enumeration of degree " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
  }
  std::vector<int> sigma(identity(n).images());
  std::vector<SignedPermutation> all;
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> images(sigma);
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) images[i] = -images[i];
      }
      all.emplace_back(std::move(images));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::sort(all.begin(), all.end());
  return all;
}

// Uniform over P(n): Fisher-Yates on the absolute values plus fair signs.
// Deterministic for a fixed seed (mt19937_64, explicit bounded draws).
inline SignedPermutation random_element(int n, std::uint64_t seed) {
  if (n < 1) throw DegreeError("degree must be >= 1, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::uint64_t bound) {
    // rejection sampling keeps the draw exactly uniform
    const std::uint64_t limit = rng.max() - rng.max() % bound;
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    return r % bound;
  };
  std::vector<int> images(identity(n).images());
  for (int i = n - 1; i > 0; --i) {
    std::swap(images[i], images[below(static_cast<std::uint64_t>(i) + 1)]);
  }
  for (int& v : images) {
    if (rng() & 1u) v = -v;
  }
  return SignedPermutation(std::move(images));
}

// "[2,-1,3]"
inline std::string to_string(const SignedPermutation& p) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < p.degree(); ++i) {
    if (i) out << ',';
    out << p.images()[i];
  }
  out << ']';
  return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const SignedPermutation& p) {
  return os << to_string(p);
}

inline SignedPermutation parse_permutation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ParseError("permutation literal must be bracketed: '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<int> images;
  while (true) {
    const std::size_t comma = s.find(',');
    const std::string token(trim(s.substr(0, comma)));
    if (token.empty()) throw ParseError("empty entry in '" + std::string(text) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw ParseError("not an integer: '" + token + "'");
    images.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  try {
    return SignedPermutation(std::move(images));
  } catch (const InvalidPermutationError& e) {
    throw ParseError(e.what());
  }
}

// "(1 2 | -) (3 | -)"; the identity prints as "()".
inline std::string to_string(const std::vector<ArrowCycle>& cycles) {
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (c) out << ' ';
    out << '(';
    for (std::size_t m = 0; m < cycles[c].orbit.size(); ++m) {
      if (m) out << ' ';
      out << cycles[c].orbit[m];
    }
    out << " | " << (cycles[c].closing_sign > 0 ? '+' : '-') << ')';
  }
  return out.str();
}

}  // namespace arrowperm
