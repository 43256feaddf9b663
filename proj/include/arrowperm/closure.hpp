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

// Breadth-first closure of a finitely generated group of exact elements
// (signed permutations or rational matrices). Elements are discovered layer
// by layer from the identity by right multiplication with generators; each
// layer is inserted in canonical order so tables and words are reproducible.

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "arrowperm/error.hpp"
#include "arrowperm/matrix.hpp"
#include "arrowperm/signed_permutation.hpp"

namespace arrowperm {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

template <typename Element>
struct GroupTraits;

template <>
struct GroupTraits<SignedPermutation> {
  static int degree(const SignedPermutation& p) { return p.degree(); }
  static SignedPermutation identity(int n) { return arrowperm::identity(n); }
  static SignedPermutation multiply(const SignedPermutation& a, const SignedPermutation& b) {
    return compose(a, b);
  }
  static std::string key(const SignedPermutation& p) { return to_string(p); }
};

template <>
struct GroupTraits<RationalMatrix> {
  static int degree(const RationalMatrix& m) {
    if (!m.is_square()) throw DimensionError("closure generators must be square matrices");
    return m.rows();
  }
  static RationalMatrix identity(int n) { return RationalMatrix::identity(n); }
  static RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) { return a * b; }
  static std::string key(const RationalMatrix& m) { return to_string(m); }
};

template <typename Element>
struct ClosureEntry {
  Element element;
  std::vector<int> word;  // 0-based generator indices, multiplied left to right
};

template <typename Element>
class ClosureTable;

// `degree` is used when gens is empty and checked against every generator
// otherwise. The table is truncated (never an error) once it holds cap
// elements and a further new element is found.
template <typename Element>
ClosureTable<Element> generate_closure(const std::vector<Element>& gens, int degree,
                                       std::size_t cap = kDefaultClosureCap);

template <typename Element>
class ClosureTable {
 public:
  using Traits = GroupTraits<Element>;

  int degree() const { return degree_; }
  std::size_t size() const { return entries_.size(); }
  bool truncated() const { return truncated_; }
  std::size_t cap() const { return cap_; }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<ClosureEntry<Element>>& entries() const { return entries_; }

  bool contains(const Element& e) const { return index_.count(e) > 0; }

  // BFS-shortest word for e, or nullptr when e is not in the table.
  const std::vector<int>* word_of(const Element& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? nullptr : &entries_[it->second].word;
  }

  // Product of generators along the word.
  Element evaluate(const std::vector<int>& word) const {
    Element e = Traits::identity(degree_);
    for (int g : word) e = Traits::multiply(e, generators_.at(g));
    return e;
  }

  template <typename E>
  friend ClosureTable<E> generate_closure(const std::vector<E>& gens, int degree, std::size_t cap);

 private:
  int degree_ = 1;
  std::size_t cap_ = kDefaultClosureCap;
  bool truncated_ = false;
  std::vector<Element> generators_;
  std::vector<ClosureEntry<Element>> entries_;
  std::map<Element, std::size_t> index_;
};

template <typename Element>
ClosureTable<Element> generate_closure(const std::vector<Element>& gens, int degree,
                                       std::size_t cap) {
  using Traits = GroupTraits<Element>;
  if (cap == 0) throw ResourceLimitError("closure cap must be >= 1");
  for (const Element& g : gens) {
    if (Traits::degree(g) != degree) throw DimensionError("closure generators have mixed degrees");
  }
  ClosureTable<Element> t;
  t.degree_ = degree;
  t.cap_ = cap;
  t.generators_ = gens;
  t.entries_.push_back({Traits::identity(degree), {}});
  t.index_.emplace(t.entries_.front().element, 0);

  std::size_t layer_begin = 0;
  while (layer_begin < t.entries_.size() && !t.truncated_) {
    const std::size_t layer_end = t.entries_.size();
    // First discovery wins; candidates are visited in layer order, then
    // generator order.
    std::map<Element, std::vector<int>> next;
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Element e = Traits::multiply(t.entries_[k].element, gens[g]);
        if (t.index_.count(e) || next.count(e)) continue;
        std::vector<int> word = t.entries_[k].word;
        word.push_back(static_cast<int>(g));
        next.emplace(std::move(e), std::move(word));
      }
    }
    for (auto& [e, word] : next) {
      if (t.entries_.size() >= cap) {
        t.truncated_ = true;
        break;
      }
      t.index_.emplace(e, t.entries_.size());
      t.entries_.push_back({e, std::move(word)});
    }
    layer_begin = layer_end;
  }
  return t;
}

template <typename Element>
std::size_t subgroup_index(const ClosureTable<Element>& whole, const ClosureTable<Element>& sub) {
  if (whole.truncated() || sub.truncated()) {
    throw TruncatedTableError("subgroup_index: truncated table");
  }
  for (const auto& entry : sub.entries()) {
    if (!whole.contains(entry.element)) {
      throw NotASubgroupError("subgroup_index: element " + GroupTraits<Element>::key(entry.element) +
                              " is not contained in the larger table");
    }
  }
  if (whole.size() % sub.size() != 0) {
    throw NotASubgroupError("subgroup_index: " + std::to_string(sub.size()) + " does not divide " +
                            std::to_string(whole.size()));
  }
  return whole.size() / sub.size();
}

// Order of each table element (in table order) by repeated multiplication.
template <typename Element>
std::vector<std::size_t> element_orders(const ClosureTable<Element>& t) {
  using Traits = GroupTraits<Element>;
  if (t.truncated()) throw TruncatedTableError("element_orders: truncated table");
  const Element e = Traits::identity(t.degree());
  std::vector<std::size_t> orders;
  orders.reserve(t.size());
  for (const auto& entry : t.entries()) {
    Element power = entry.element;
    std::size_t order = 1;
    while (!(power == e)) {
      power = Traits::multiply(power, entry.element);
      if (++order > t.size()) throw InternalError("element order exceeds group size");
    }
    orders.push_back(order);
  }
  return orders;
}

// Standard generators of P(n): adjacent transpositions s_1..s_{n-1}, then the
// elementary inversion at position 1.
inline std::vector<SignedPermutation> standard_generators(int n) {
  std::vector<SignedPermutation> gens;
  for (int i = 1; i < n; ++i) gens.push_back(letter_element(PermLetter::transposition(i), n));
  gens.push_back(letter_element(PermLetter::inversion(1), n));
  return gens;
}

// All ordered products g_a * g_b of the given generators (a = b included).
inline std::vector<SignedPermutation> pairwise_products(const std::vector<SignedPermutation>& gens) {
  std::vector<SignedPermutation> out;
  for (const auto& a : gens)
    for (const auto& b : gens) out.push_back(compose(a, b));
  return out;
}

// All 3-cycles (i j k) as unsigned permutations; empty for n < 3.
inline std::vector<SignedPermutation> three_cycles(int n) {
  std::vector<SignedPermutation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k || i > j || i > k) continue;
        std::vector<int> images(identity(n).images());
        images[i - 1] = j;
        images[j - 1] = k;
        images[k - 1] = i;
        out.emplace_back(std::move(images));
      }
    }
  }
  return out;
}

// Cayley graph in Graphviz DOT, one edge per (element, generator).
template <typename Element>
std::string to_dot(const ClosureTable<Element>& t, std::size_t max_elements = 200) {
  using Traits = GroupTraits<Element>;
  if (t.size() > max_elements) {
    throw ResourceLimitError("Cayley graph export is limited to " + std::to_string(max_elements) +
                             " elements");
  }
  std::ostringstream out;
  out << "digraph cayley {\n";
  for (std::size_t k = 0; k < t.size(); ++k) {
    out << "  n" << k << " [label=\"" << Traits::key(t.entries()[k].element) << "\"];\n";
  }
  std::map<Element, std::size_t> index;
  for (std::size_t k = 0; k < t.size(); ++k) index.emplace(t.entries()[k].element, k);
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (std::size_t g = 0; g < t.generators().size(); ++g) {
      auto it = index.find(Traits::multiply(t.entries()[k].element, t.generators()[g]));
      if (it == index.end()) continue;
      out << "  n" << k << " -> n" << it->second << " [label=\"g" << g << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace arrowperm
