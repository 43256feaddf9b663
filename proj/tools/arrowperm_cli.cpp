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

// Command-line front end:
//   arrowperm factorize|so-factorize|sl2-rbt <matrix>
//   arrowperm closure [perm...] --n N [--set standard|even|three-cycles|p2-blocks]
//   arrowperm perm parity|compose|cycles|inverse|word|random ...
//   arrowperm span N [--matrix M]
//   arrowperm algebra mul <x> <y>
//   arrowperm verify <word> <matrix>
//
// Exit status: 0 success, 1 residual above tolerance / truncated closure /
// resource limit, 2 parse or usage error, 3 singular or precondition failure.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "arrowperm.hpp"

namespace {

using arrowperm::io::json;

enum ExitCode { kOk = 0, kFailed = 1, kParse = 2, kSingular = 3 };

struct CliConfig {
  std::string out;
  double tol = arrowperm::kDefaultTolerance;
  std::uint64_t seed = 0;
  std::size_t cap = arrowperm::kDefaultClosureCap;
  std::string format = "json";
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw arrowperm::InputError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Inline literals start with '{' or '['; anything else is a file path.
std::string load_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw arrowperm::ParseError("cannot read input " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool wants_csv(const CliConfig& cfg, const std::string& arg) {
  return cfg.format == "csv" || std::filesystem::path(arg).extension() == ".csv";
}

arrowperm::FloatMatrix load_float_matrix(const CliConfig& cfg, const std::string& arg) {
  const std::string text = load_text(arg);
  if (wants_csv(cfg, arg)) return arrowperm::io::float_matrix_from_csv(text);
  return arrowperm::io::float_matrix_from_json(arrowperm::io::parse_json(text));
}

arrowperm::RationalMatrix load_rational_matrix(const std::string& arg) {
  return arrowperm::io::rational_matrix_from_json(arrowperm::io::parse_json(load_text(arg)));
}

void emit(const CliConfig& cfg, const json& j) {
  Output out(cfg.out);
  out.stream() << j.dump(2) << '\n';
}

void emit_text(const CliConfig& cfg, const std::string& s) {
  Output out(cfg.out);
  out.stream() << s << '\n';
}

int cmd_factorize(const CliConfig& cfg, const std::string& input) {
  const arrowperm::FloatMatrix a = load_float_matrix(cfg, input);
  const arrowperm::GeneratorWord w = arrowperm::factor_gl(a, cfg.tol);
  const double residual = arrowperm::verify(w, a);
  json j = arrowperm::io::to_json(w);
  j["residual"] = residual;
  emit(cfg, j);
  return residual <= cfg.tol ? kOk : kFailed;
}

int cmd_so_factorize(const CliConfig& cfg, const std::string& input) {
  const arrowperm::FloatMatrix q = load_float_matrix(cfg, input);
  const arrowperm::GeneratorWord w = arrowperm::factor_so(q, cfg.tol);
  const double residual = arrowperm::verify(w, q);
  json j = arrowperm::io::to_json(w);
  j["residual"] = residual;
  emit(cfg, j);
  return residual <= cfg.tol ? kOk : kFailed;
}

int cmd_sl2_rbt(const CliConfig& cfg, const std::string& input) {
  const arrowperm::FloatMatrix m = load_float_matrix(cfg, input);
  const double tol = cfg.tol;
  try {
    const arrowperm::Sl2Parameters p = arrowperm::factor_sl2_rbt(m, tol);
    emit(cfg, json{{"theta", p.theta}, {"x", p.x}, {"y", p.y}, {"residual", p.residual}});
    return kOk;
  } catch (const arrowperm::NoRootFoundError& e) {
    emit(cfg, json{{"error", e.what()}, {"residual", e.best_residual()}});
    return kFailed;
  }
}

std::vector<arrowperm::SignedPermutation> preset_generators(const std::string& set, int n) {
  if (set == "standard") return arrowperm::standard_generators(n);
  if (set == "even") return arrowperm::pairwise_products(arrowperm::standard_generators(n));
  if (set == "three-cycles") return arrowperm::three_cycles(n);
  throw arrowperm::ParseError("unknown generator set \"" + set + "\"");
}

template <typename Element>
int finish_closure(const CliConfig& cfg, const arrowperm::ClosureTable<Element>& t,
                   const std::string& dot_path) {
  emit(cfg, arrowperm::io::to_json(t));
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw arrowperm::InputError("cannot open " + dot_path);
    dot << arrowperm::to_dot(t);
  }
  return t.truncated() ? kFailed : kOk;
}

int cmd_closure(const CliConfig& cfg, int n, const std::string& set,
                const std::vector<std::string>& literals, const std::string& dot_path) {
  if (set == "p2-blocks") {
    // 90-degree rotation block and one elementary inversion, lifted exactly.
    const auto rot = arrowperm::round_to_integers(
        arrowperm::embed(arrowperm::Rotation{1, 2, std::numbers::pi / 2}, 2));
    const auto flip = arrowperm::realize(arrowperm::parse_permutation("[-1,2]"));
    return finish_closure(cfg, arrowperm::generate_closure<arrowperm::RationalMatrix>({rot, flip}, 2, cfg.cap),
                          dot_path);
  }
  std::vector<arrowperm::SignedPermutation> gens;
  if (!set.empty()) {
    if (n < 1) throw arrowperm::ParseError("--set requires --n");
    gens = preset_generators(set, n);
  }
  for (const std::string& lit : literals) gens.push_back(arrowperm::parse_permutation(lit));
  if (n < 1) {
    if (gens.empty()) throw arrowperm::ParseError("closure: give generators or --n");
    n = gens.front().degree();
  }
  return finish_closure(cfg, arrowperm::generate_closure(gens, n, cfg.cap), dot_path);
}

int cmd_perm(const CliConfig& cfg, const std::string& op, const std::vector<std::string>& args, int n) {
  auto need = [&](std::size_t k) {
    if (args.size() != k) {
      throw arrowperm::ParseError("perm " + op + " expects " + std::to_string(k) + " permutation(s)");
    }
  };
  if (op == "parity") {
    need(1);
    emit_text(cfg, std::to_string(arrowperm::sign(arrowperm::parse_permutation(args[0]))));
  } else if (op == "compose") {
    need(2);
    emit_text(cfg, arrowperm::to_string(arrowperm::compose(arrowperm::parse_permutation(args[0]),
                                                           arrowperm::parse_permutation(args[1]))));
  } else if (op == "cycles") {
    need(1);
    emit_text(cfg, arrowperm::to_string(
                       arrowperm::cycle_decomposition(arrowperm::parse_permutation(args[0]))));
  } else if (op == "inverse") {
    need(1);
    emit_text(cfg, arrowperm::to_string(arrowperm::inverse(arrowperm::parse_permutation(args[0]))));
  } else if (op == "word") {
    need(1);
    std::string s;
    for (const auto& l : arrowperm::to_word(arrowperm::parse_permutation(args[0]))) {
      if (!s.empty()) s += ' ';
      s += (l.kind == arrowperm::PermLetter::Kind::kAdjacentTransposition ? "s" : "t") +
           std::to_string(l.index);
    }
    emit_text(cfg, s.empty() ? "e" : s);
  } else if (op == "random") {
    need(0);
    if (n < 1) throw arrowperm::ParseError("perm random requires --n");
    const auto p = arrowperm::random_element(n, cfg.seed);
    emit(cfg, json{{"n", n}, {"seed", cfg.seed}, {"perm", arrowperm::io::to_json(p)}});
  } else {
    throw arrowperm::ParseError("unknown perm operation \"" + op + "\"");
  }
  return kOk;
}

int cmd_span(const CliConfig& cfg, int n, const std::string& matrix_arg) {
  const auto basis = arrowperm::spanning_basis(n);
  arrowperm::RationalMatrix vecs(n * n, static_cast<int>(basis.size()));
  json listed = json::array();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    listed.push_back(arrowperm::to_string(basis[k]));
    const auto r = arrowperm::realize(basis[k]);
    for (int e = 0; e < n * n; ++e) vecs(e, static_cast<int>(k)) = r.data()[e];
  }
  const int rank = arrowperm::exact::rank(vecs);
  json j{{"n", n}, {"basis", listed}, {"rank", std::to_string(rank) + "/" + std::to_string(n * n)}};
  bool ok = rank == n * n;
  if (!matrix_arg.empty()) {
    const auto m = load_rational_matrix(matrix_arg);
    if (m.rows() != n) throw arrowperm::ParseError("span: matrix dimension differs from n");
    const auto x = arrowperm::express_matrix(m);
    const bool exact = arrowperm::to_matrix(x) == m;
    j["expression"] = arrowperm::io::to_json(x);
    j["round_trip"] = exact ? "exact" : "mismatch";
    ok = ok && exact;
  }
  emit(cfg, j);
  return ok ? kOk : kFailed;
}

int cmd_algebra(const CliConfig& cfg, const std::string& op, const std::vector<std::string>& args) {
  auto load = [](const std::string& a) {
    return arrowperm::io::algebra_from_json(arrowperm::io::parse_json(load_text(a)));
  };
  if (op == "mul") {
    if (args.size() != 2) throw arrowperm::ParseError("algebra mul expects two elements");
    emit(cfg, arrowperm::io::to_json(arrowperm::mul(load(args[0]), load(args[1]))));
  } else if (op == "add") {
    if (args.size() != 2) throw arrowperm::ParseError("algebra add expects two elements");
    emit(cfg, arrowperm::io::to_json(arrowperm::add(load(args[0]), load(args[1]))));
  } else if (op == "matrix") {
    if (args.size() != 1) throw arrowperm::ParseError("algebra matrix expects one element");
    const auto x = load(args[0]);
    json j = arrowperm::io::to_json(arrowperm::to_matrix(x));
    j["invertible"] = arrowperm::is_invertible(x);
    emit(cfg, j);
  } else {
    throw arrowperm::ParseError("unknown algebra operation \"" + op + "\"");
  }
  return kOk;
}

int cmd_verify(const CliConfig& cfg, const std::string& word_arg, const std::string& matrix_arg) {
  const auto w = arrowperm::io::word_from_json(arrowperm::io::parse_json(load_text(word_arg)));
  const auto a = load_float_matrix(cfg, matrix_arg);
  const double residual = arrowperm::verify(w, a);
  emit(cfg, json{{"residual", residual}});
  return residual <= cfg.tol ? kOk : kFailed;
}

void add_common(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--out", cfg.out, "Output file (default: standard output)");
  sub->add_option("--tol", cfg.tol, "Relative residual tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--cap", cfg.cap, "Closure element budget")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "Matrix input format")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arrow permutations, their group algebra and generator-word factorization"};
  app.require_subcommand(1);
  CliConfig cfg;

  std::string input, second, op, set, dot_path, matrix_arg;
  std::vector<std::string> literals;
  int n = 0;

  auto* factorize = app.add_subcommand("factorize", "Factor an invertible matrix into generators");
  factorize->add_option("matrix", input, "Matrix file or inline JSON")->required();
  add_common(factorize, cfg);

  auto* so = app.add_subcommand("so-factorize", "Factor an orthogonal matrix into adjacent rotations");
  so->add_option("matrix", input, "Matrix file or inline JSON")->required();
  add_common(so, cfg);

  auto* sl2 = app.add_subcommand("sl2-rbt", "Solve Rotation*Boost*Scaling = M for det M = 1");
  sl2->add_option("matrix", input, "2x2 matrix file or inline JSON")->required();
  add_common(sl2, cfg);

  auto* closure = app.add_subcommand("closure", "BFS closure of a generator set");
  // Permutation literals are taken verbatim from the remaining arguments;
  // CLI11 would otherwise split "[2,-1]" as a bracketed vector.
  closure->allow_extras();
  closure->add_option("--n", n, "Degree")->check(CLI::PositiveNumber);
  closure->add_option("--set", set, "Generator preset")
      ->check(CLI::IsMember({"standard", "even", "three-cycles", "p2-blocks"}));
  closure->add_option("--dot", dot_path, "Write the Cayley graph (<= 200 elements) as DOT");
  add_common(closure, cfg);

  auto* perm = app.add_subcommand("perm", "Operations on permutation literals");
  perm->add_option("op", op, "parity | compose | cycles | inverse | word | random")->required();
  perm->allow_extras();
  perm->add_option("--n", n, "Degree (random)")->check(CLI::PositiveNumber);
  add_common(perm, cfg);

  auto* span = app.add_subcommand("span", "Spanning set of signed permutation matrices");
  span->add_option("n", n, "Degree")->required()->check(CLI::PositiveNumber);
  span->add_option("--matrix", matrix_arg, "Matrix to express exactly");
  add_common(span, cfg);

  auto* algebra = app.add_subcommand("algebra", "Group algebra arithmetic");
  algebra->add_option("op", op, "mul | add | matrix")->required();
  algebra->allow_extras();
  add_common(algebra, cfg);

  auto* verify = app.add_subcommand("verify", "Relative residual of a word against a matrix");
  verify->add_option("word", input, "Word file or inline JSON")->required();
  verify->add_option("matrix", second, "Matrix file or inline JSON")->required();
  add_common(verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  for (CLI::App* sub : {closure, perm, algebra}) {
    if (!*sub) continue;
    literals = sub->remaining();
    for (const std::string& arg : literals) {
      if (!arg.empty() && arg.front() == '-') {
        std::cerr << "unknown option: " << arg << '\n';
        return kParse;
      }
    }
  }

  try {
    if (*factorize) return cmd_factorize(cfg, input);
    if (*so) return cmd_so_factorize(cfg, input);
    if (*sl2) return cmd_sl2_rbt(cfg, input);
    if (*closure) return cmd_closure(cfg, n, set, literals, dot_path);
    if (*perm) return cmd_perm(cfg, op, literals, n);
    if (*span) return cmd_span(cfg, n, matrix_arg);
    if (*algebra) return cmd_algebra(cfg, op, literals);
    if (*verify) return cmd_verify(cfg, input, second);
  } catch (const arrowperm::NotInvertibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const arrowperm::NotOrthogonalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const arrowperm::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const arrowperm::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const arrowperm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}
