#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dbrack/dbracket.hpp"

namespace dbrack::cli {

struct BracketDecl {
  Gen a = 0, b = 0;
  Tensor2 value;
  int line = 0;
  friend bool operator==(const BracketDecl& x, const BracketDecl& y) {
    return x.a == y.a && x.b == y.b && x.value == y.value;
  }
};

// A command line such as `rep tensor 2 --convention vdb x y`: the command name
// (one or two words), positional arguments and --options, all kept as text.
struct Command {
  std::string name;
  std::vector<std::string> args;
  std::map<std::string, std::string> options;
  int line = 0;
  friend bool operator==(const Command& x, const Command& y) {
    return x.name == y.name && x.args == y.args && x.options == y.options;
  }
};

struct SessionSpec {
  std::optional<Algebra> algebra;
  bool has_bimodule = false;
  BimodKind kind = BimodKind::Outer;
  // explicit twist images; other generators are fixed
  std::map<Gen, NCPoly> alpha, beta;
  bool has_bracket = false;
  std::vector<BracketDecl> bracket;
  std::vector<Command> commands;

  friend bool operator==(const SessionSpec&, const SessionSpec&) = default;

  Bimodule bimodule() const;
  // Checked bracket built from the declarations; needs an algebra.
  DoubleBracket double_bracket() const;
};

// Throws ParseError (with line and column) for syntax errors and for semantic
// ones: undeclared generators, duplicate or conflicting entries, tables that
// break antisymmetry, unknown commands or malformed arguments.
SessionSpec parse_session(const std::string& text);

// Canonical text; parse_session(to_text(s)) == s.
std::string to_text(const SessionSpec& s);

// The value of a constant polynomial.
std::optional<Rational> as_constant(const NCPoly& p);

enum class Format { Plain, Kv };

struct RunOptions {
  Format format = Format::Plain;
  // relative file arguments are resolved against this directory
  std::string base_dir;
};

struct RunResult {
  std::string output;
  int exit_code = 0;  // 0 all passed, 1 counterexample found, 2 usage or input error
};

RunResult run(const SessionSpec& s, const RunOptions& opts = {});
// parse_session + run; parse errors give exit code 2 and a diagnostic.
RunResult run_text(const std::string& text, const RunOptions& opts = {});

}  // namespace dbrack::cli
