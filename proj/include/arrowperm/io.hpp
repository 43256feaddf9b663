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

// JSON and CSV formats:
//   matrix    {"n": 2, "rows": [[0, "-1/2"], [1, 0.25]]}
//   algebra   {"n": 2, "terms": [{"perm": [2, 1], "coeff": "1/2"}, ...]}
//   word      {"n": 2, "letters": [{"kind": "rot", "i": 1, "j": 2, "param": 0.5}, ...]}
//   closure   {"size": 8, "truncated": false, "elements": [{"key": "[1,2]", "word": []}, ...]}
// Matrix entries may be integers, "p/q" strings (exact) or floats.

#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arrowperm/closure.hpp"
#include "arrowperm/error.hpp"
#include "arrowperm/generators.hpp"
#include "arrowperm/group_algebra.hpp"
#include "arrowperm/matrix.hpp"
#include "arrowperm/signed_permutation.hpp"

namespace arrowperm::io {

using nlohmann::json;

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

namespace detail {

inline Rational entry_to_rational(const json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(v.get<unsigned long>()) : Rational(v.get<long>());
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw InputError("non-finite matrix entry");
    return Rational(d);
  }
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError("matrix entry must be a number or a \"p/q\" string");
}

inline const json& rows_of(const json& j) {
  if (j.is_array()) return j;
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    throw ParseError("matrix JSON needs a \"rows\" array");
  }
  const json& rows = j["rows"];
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<long>() != static_cast<long>(rows.size())) {
      throw ParseError("matrix JSON: \"n\" does not match the number of rows");
    }
  }
  return rows;
}

template <typename F>
void for_each_entry(const json& j, F&& f) {
  const json& rows = rows_of(j);
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("matrix JSON: no rows");
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw ParseError("matrix JSON: row " + std::to_string(r + 1) + " must have " +
                       std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) f(r, c, rows[r][c]);
  }
}

}  // namespace detail

// Accepts the {"n", "rows"} object or a bare array of rows.
inline RationalMatrix rational_matrix_from_json(const json& j) {
  const int n = static_cast<int>(detail::rows_of(j).size());
  RationalMatrix m(n, n);
  detail::for_each_entry(j, [&](std::size_t r, std::size_t c, const json& v) {
    m(static_cast<int>(r), static_cast<int>(c)) = detail::entry_to_rational(v);
  });
  return m;
}

inline FloatMatrix float_matrix_from_json(const json& j) {
  const auto n = static_cast<Eigen::Index>(detail::rows_of(j).size());
  Eigen::MatrixXd m(n, n);
  detail::for_each_entry(j, [&](std::size_t r, std::size_t c, const json& v) {
    double d;
    if (v.is_number()) {
      d = v.get<double>();
    } else if (v.is_string()) {
      d = parse_rational(v.get<std::string>()).get_d();
    } else {
      throw ParseError("matrix entry must be a number or a \"p/q\" string");
    }
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = d;
  });
  return FloatMatrix(std::move(m));
}

// Comma-separated rows; n is the row count.
inline FloatMatrix float_matrix_from_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      double v;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw ParseError("CSV: not a number: '" + cell + "'");
      }
      if (cell.find_first_not_of(" \t\r", used) != std::string::npos) {
        throw ParseError("CSV: not a number: '" + cell + "'");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("CSV: no rows");
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ParseError("CSV: matrix must be square");
  }
  return FloatMatrix::from_rows(rows);
}

// Integers stay JSON integers, other rationals become "p/q" strings.
inline json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
        row.push_back(q.get_num().get_si());
      } else {
        row.push_back(q.get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return json{{"n", m.rows()}, {"rows", std::move(rows)}};
}

inline json to_json(const FloatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.rows()}, {"rows", std::move(rows)}};
}

inline SignedPermutation permutation_from_json(const json& j) {
  if (j.is_string()) return parse_permutation(j.get<std::string>());
  if (!j.is_array()) throw ParseError("permutation must be an array of signed integers");
  std::vector<int> images;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw ParseError("permutation entries must be integers");
    images.push_back(v.get<int>());
  }
  try {
    return SignedPermutation(std::move(images));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline json to_json(const SignedPermutation& p) { return p.images(); }

inline json to_json(const AlgebraElement& x) {
  json terms = json::array();
  for (const auto& [p, c] : x.terms()) {
    terms.push_back(json{{"perm", to_json(p)}, {"coeff", c.get_str()}});
  }
  return json{{"n", x.degree()}, {"terms", std::move(terms)}};
}

inline AlgebraElement algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("terms") ||
      !j["terms"].is_array()) {
    throw ParseError("algebra JSON needs integer \"n\" and a \"terms\" array");
  }
  AlgebraElement x(j["n"].get<int>());
  for (const json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("perm") || !t.contains("coeff")) {
      throw ParseError("algebra term needs \"perm\" and \"coeff\"");
    }
    const SignedPermutation p = permutation_from_json(t["perm"]);
    if (p.degree() != x.degree()) throw ParseError("algebra term degree differs from \"n\"");
    const json& c = t["coeff"];
    Rational q;
    if (c.is_string()) {
      q = parse_rational(c.get<std::string>());
    } else if (c.is_number_integer()) {
      q = Rational(c.get<long>());
    } else {
      throw ParseError("coefficient must be an integer or a \"p/q\" string");
    }
    x.add_term(p, q);
  }
  return x;
}

inline json to_json(const BlockGenerator& g) {
  json l{{"kind", kind_name(g)}};
  std::visit(
      [&l](const auto& v) {
        using L = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<L, Rotation>) {
          l["i"] = v.i;
          l["j"] = v.j;
          l["param"] = v.theta;
        } else if constexpr (std::is_same_v<L, Boost>) {
          l["i"] = v.i;
          l["j"] = v.j;
          l["param"] = v.x;
        } else if constexpr (std::is_same_v<L, Scaling>) {
          l["i"] = v.i;
          l["j"] = v.j;
          l["param"] = v.y;
        } else if constexpr (std::is_same_v<L, ArrowPerm>) {
          l["perm"] = to_json(v.p);
        } else {
          l["param"] = v.lambda;
        }
      },
      g);
  return l;
}

inline json to_json(const GeneratorWord& w) {
  json letters = json::array();
  for (const BlockGenerator& g : w.letters) letters.push_back(to_json(g));
  return json{{"n", w.n}, {"letters", std::move(letters)}};
}

inline GeneratorWord word_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("letters") ||
      !j["letters"].is_array()) {
    throw ParseError("word JSON needs integer \"n\" and a \"letters\" array");
  }
  GeneratorWord w{j["n"].get<int>(), {}};
  for (const json& l : j["letters"]) {
    if (!l.is_object() || !l.contains("kind") || !l["kind"].is_string()) {
      throw ParseError("letter needs a \"kind\"");
    }
    const std::string kind = l["kind"].get<std::string>();
    auto param = [&l]() {
      if (!l.contains("param") || !l["param"].is_number()) throw ParseError("letter needs \"param\"");
      return l["param"].get<double>();
    };
    auto pos = [&l](const char* name) {
      if (!l.contains(name) || !l[name].is_number_integer()) {
        throw ParseError(std::string("letter needs integer \"") + name + "\"");
      }
      return l[name].get<int>();
    };
    if (kind == "rot") {
      w.letters.push_back(Rotation{pos("i"), pos("j"), param()});
    } else if (kind == "boost") {
      w.letters.push_back(Boost{pos("i"), pos("j"), param()});
    } else if (kind == "scale") {
      w.letters.push_back(Scaling{pos("i"), pos("j"), param()});
    } else if (kind == "perm") {
      if (!l.contains("perm")) throw ParseError("perm letter needs \"perm\"");
      w.letters.push_back(ArrowPerm{permutation_from_json(l["perm"])});
    } else if (kind == "scalar") {
      w.letters.push_back(Scalar{param()});
    } else {
      throw ParseError("unknown letter kind \"" + kind + "\"");
    }
  }
  try {
    validate(w);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return w;
}

template <typename Element>
json to_json(const ClosureTable<Element>& t) {
  json elements = json::array();
  for (const auto& entry : t.entries()) {
    elements.push_back(json{{"key", GroupTraits<Element>::key(entry.element)}, {"word", entry.word}});
  }
  return json{{"size", t.size()}, {"truncated", t.truncated()}, {"elements", std::move(elements)}};
}

// Parsed form of a closure export.
struct ClosureExport {
  std::size_t size = 0;
  bool truncated = false;
  std::vector<std::pair<std::string, std::vector<int>>> elements;
};

inline ClosureExport closure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("truncated") || !j.contains("elements")) {
    throw ParseError("closure JSON needs \"size\", \"truncated\" and \"elements\"");
  }
  ClosureExport c;
  try {
    c.size = j["size"].get<std::size_t>();
    c.truncated = j["truncated"].get<bool>();
    for (const json& e : j["elements"]) {
      c.elements.emplace_back(e.at("key").get<std::string>(), e.at("word").get<std::vector<int>>());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("closure JSON: ") + e.what());
  }
  if (c.elements.size() != c.size) throw ParseError("closure JSON: size does not match elements");
  return c;
}

inline json to_json(const ClosureExport& c) {
  json elements = json::array();
  for (const auto& [key, word] : c.elements) elements.push_back(json{{"key", key}, {"word", word}});
  return json{{"size", c.size}, {"truncated", c.truncated}, {"elements", std::move(elements)}};
}

}  // namespace arrowperm::io
