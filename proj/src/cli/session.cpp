#include <algorithm>
#include <cctype>
#include <set>

#include "dbrack/cli.hpp"
#include "dbrack/text.hpp"

namespace dbrack::cli {

namespace {

struct Piece {
  std::string text;
  int line = 1, col = 1;
};

struct Block {
  std::string keyword;
  int line, col;
  std::vector<Piece> items;
};

struct Raw {
  std::vector<Block> blocks;
  std::vector<std::vector<Piece>> commands;  // tokens with positions
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Trims `p` in place, moving its position to the first kept character.
Piece trimmed(Piece p) {
  std::size_t a = 0;
  while (a < p.text.size() && is_space(p.text[a])) ++a;
  std::size_t b = p.text.size();
  while (b > a && is_space(p.text[b - 1])) --b;
  return {p.text.substr(a, b - a), p.line, p.col + static_cast<int>(a)};
}

Piece sub(const Piece& p, std::size_t pos, std::size_t len = std::string::npos) {
  return trimmed({p.text.substr(pos, len), p.line, p.col + static_cast<int>(pos)});
}

std::vector<Piece> split(const Piece& p, char sep) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= p.text.size(); ++i)
    if (i == p.text.size() || p.text[i] == sep) {
      out.push_back(sub(p, start, i - start));
      start = i + 1;
    }
  return out;
}

[[noreturn]] void fail(const Piece& at, const std::string& msg) {
  throw ParseError(msg, at.line, at.col);
}

// Whitespace-separated tokens; double quotes group a token containing spaces.
std::vector<Piece> tokenize(const std::string& text, int line, int col0) {
  std::vector<Piece> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    Piece t{"", line, col0 + static_cast<int>(i)};
    if (text[i] == '"') {
      std::size_t close = text.find('"', i + 1);
      if (close == std::string::npos) fail(t, "unterminated quote");
      t.text = text.substr(i + 1, close - i - 1);
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) ++j;
      t.text = text.substr(i, j - i);
      i = j;
    }
    out.push_back(std::move(t));
  }
  return out;
}

Raw scan(const std::string& src) {
  Raw raw;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  auto skip_comment = [&] {
    while (i < src.size() && src[i] != '\n') advance();
  };
  while (i < src.size()) {
    char c = src[i];
    if (is_space(c) || c == '\n') {
      advance();
      continue;
    }
    if (c == '#') {
      skip_comment();
      continue;
    }
    // one statement: a block or a command line
    std::size_t eol = src.find('\n', i);
    std::string rest = src.substr(i, eol == std::string::npos ? std::string::npos : eol - i);
    rest = rest.substr(0, rest.find('#'));
    std::size_t w = 0;
    while (w < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[w])) || rest[w] == '-' ||
                               rest[w] == '_'))
      ++w;
    std::string word = rest.substr(0, w);
    std::size_t after = w;
    while (after < rest.size() && is_space(rest[after])) ++after;
    bool block = (word == "algebra" || word == "bimodule" || word == "bracket") &&
                 after < rest.size() && rest[after] == '{';
    if (!block) {
      raw.commands.push_back(tokenize(rest, line, col));
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    Block b{word, line, col, {}};
    for (std::size_t k = 0; k <= after; ++k) advance();
    Piece cur{"", line, col};
    bool closed = false;
    auto flush = [&] {
      Piece t = trimmed(cur);
      if (!t.text.empty()) b.items.push_back(t);
    };
    while (i < src.size()) {
      char d = src[i];
      if (d == '}') {
        flush();
        advance();
        closed = true;
        break;
      }
      if (d == '{') fail({"", line, col}, "unexpected '{' inside " + word + " block");
      if (d == '#') {
        skip_comment();
        continue;
      }
      if (d == ';' || d == '\n') {
        flush();
        advance();
        cur = {"", line, col};
        continue;
      }
      cur.text.push_back(d);
      advance();
    }
    if (!closed) fail({"", b.line, b.col}, "unterminated " + word + " block");
    while (i < src.size() && is_space(src[i])) advance();
    if (i < src.size() && src[i] != '\n' && src[i] != '#')
      fail({"", line, col}, "unexpected text after '}'");
    raw.blocks.push_back(std::move(b));
  }
  return raw;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::pair<Piece, Piece> key_value(const Piece& item) {
  std::size_t colon = item.text.find(':');
  if (colon == std::string::npos) fail(item, "expected 'key: value'");
  return {sub(item, 0, colon), sub(item, colon + 1)};
}

Gen generator(const Algebra& alg, const Piece& name) {
  auto g = alg.find(name.text);
  if (!g) fail(name, "undeclared generator '" + name.text + "'");
  return *g;
}

template <std::size_t N>
Tensor<N> expression(const Algebra& alg, const Piece& p) {
  if (p.text.empty()) fail(p, "missing expression");
  return parse_tensor<N>(alg, p.text, p.line, p.col);
}

void parse_algebra(const Block& b, SessionSpec& s) {
  std::vector<std::string> names;
  for (const auto& item : b.items) {
    auto [k, v] = key_value(item);
    if (k.text != "gens") fail(k, "unknown algebra key '" + k.text + "'");
    if (!names.empty()) fail(k, "generators declared twice");
    for (const auto& n : split(v, ',')) {
      if (!is_identifier(n.text)) fail(n, "bad generator name '" + n.text + "'");
      if (std::find(names.begin(), names.end(), n.text) != names.end())
        fail(n, "duplicate generator '" + n.text + "'");
      if (n.text.size() > 255) fail(n, "generator name too long");
      names.push_back(n.text);
    }
  }
  if (names.empty()) fail({"", b.line, b.col}, "algebra block declares no generators");
  if (names.size() > 255) fail({"", b.line, b.col}, "too many generators");
  s.algebra = Algebra(names);
}

void parse_twist(const Algebra& alg, const Piece& v, std::map<Gen, NCPoly>& out) {
  if (!out.empty()) fail(v, "twist declared twice");
  for (const auto& m : split(v, ',')) {
    std::size_t arrow = m.text.find("->");
    if (arrow == std::string::npos) fail(m, "expected 'x -> expression'");
    Piece name = sub(m, 0, arrow);
    Gen g = generator(alg, name);
    if (out.count(g)) fail(name, "image of '" + name.text + "' given twice");
    out[g] = expression<1>(alg, sub(m, arrow + 2));
  }
}

void parse_bimodule(const Block& b, SessionSpec& s) {
  if (!s.algebra) fail({"", b.line, b.col}, "bimodule block needs an algebra block");
  bool kind_seen = false;
  for (const auto& item : b.items) {
    auto [k, v] = key_value(item);
    if (k.text == "kind") {
      if (kind_seen) fail(k, "kind declared twice");
      kind_seen = true;
      try {
        s.kind = parse_kind(v.text);
      } catch (const ArgumentError& e) {
        fail(v, e.what());
      }
    } else if (k.text == "alpha") {
      parse_twist(*s.algebra, v, s.alpha);
    } else if (k.text == "beta") {
      parse_twist(*s.algebra, v, s.beta);
    } else {
      fail(k, "unknown bimodule key '" + k.text + "'");
    }
  }
  s.has_bimodule = true;
}

void parse_bracket(const Block& b, SessionSpec& s) {
  if (!s.algebra) fail({"", b.line, b.col}, "bracket block needs an algebra block");
  const Algebra& alg = *s.algebra;
  for (const auto& item : b.items) {
    if (item.text[0] != '<') fail(item, "expected '<a,b> = expression'");
    std::size_t close = item.text.find('>');
    std::size_t eq = item.text.find('=', close == std::string::npos ? 0 : close);
    if (close == std::string::npos || eq == std::string::npos)
      fail(item, "expected '<a,b> = expression'");
    auto names = split(sub(item, 1, close - 1), ',');
    if (names.size() != 2) fail(item, "a bracket entry needs exactly two generators");
    if (!sub(item, close + 1, eq - close - 1).text.empty())
      fail(sub(item, close + 1, eq - close - 1), "expected '='");
    BracketDecl d{generator(alg, names[0]), generator(alg, names[1]),
                  expression<2>(alg, sub(item, eq + 1)), item.line};
    const std::string decl = "<" + names[0].text + "," + names[1].text + ">";
    for (const auto& prev : s.bracket) {
      if (prev.a == d.a && prev.b == d.b)
        fail(item, decl + " declared twice (first on line " + std::to_string(prev.line) + ")");
      if (prev.a == d.b && prev.b == d.a && !(d.value == -tensor_swap(prev.value)))
        fail(item, decl + " conflicts with the entry on line " + std::to_string(prev.line) +
                       " under cyclic antisymmetry");
    }
    if (d.a == d.b && !(d.value == -tensor_swap(d.value)))
      fail(item, decl + " = " + to_string(alg, d.value) +
                     " violates cyclic antisymmetry: a diagonal entry must satisfy d = -d°");
    s.bracket.push_back(std::move(d));
  }
  s.has_bracket = true;
}

bool positive_int(const std::string& t, int max = 1 << 20) {
  if (t.empty() || t.size() > 8 || !std::all_of(t.begin(), t.end(), ::isdigit)) return false;
  int v = std::stoi(t);
  return v >= 1 && v <= max;
}

struct CommandShape {
  std::string name;
  std::size_t min_args, max_args;
  std::set<std::string> options;
  bool needs_algebra;
};

const std::vector<CommandShape>& shapes() {
  static const std::vector<CommandShape> s = {
      {"check antisym", 0, 0, {"degree"}, true},
      {"check swap-commuting", 0, 0, {"degree"}, true},
      {"check poisson", 0, 0, {"degree"}, true},
      {"check weak-poisson", 0, 0, {"sigma", "sigma-prime", "degree"}, true},
      {"jacobiator", 3, 3, {}, true},
      {"rep induce", 1, 1, {}, true},
      {"rep jacobi", 1, 1, {}, true},
      {"rep trace-bracket", 3, 3, {}, true},
      {"rep tensor", 3, 3, {"convention"}, true},
      {"ybe check", 1, 1, {}, false},
      {"ybe standard", 1, 1, {}, false},
      {"ybe entry-jacobi", 0, 1, {"standard"}, false},
      {"gradient classify", 0, 0, {"family", "degree", "gen", "zeta", "poly", "bound"}, false},
      {"gradient fnc", 1, 1, {}, false},
  };
  return s;
}

void validate(const Command& c, const std::vector<Piece>& toks, const SessionSpec& s) {
  const Piece& head = toks[0];
  const CommandShape* shape = nullptr;
  for (const auto& sh : shapes())
    if (sh.name == c.name) shape = &sh;
  if (!shape) fail(head, "unknown command '" + c.name + "'");
  if (c.args.size() < shape->min_args || c.args.size() > shape->max_args)
    fail(head, "'" + c.name + "' takes " +
                   (shape->min_args == shape->max_args
                        ? std::to_string(shape->min_args)
                        : std::to_string(shape->min_args) + " to " +
                              std::to_string(shape->max_args)) +
                   " argument(s), got " + std::to_string(c.args.size()));
  for (const auto& [k, v] : c.options)
    if (!shape->options.count(k)) fail(head, "'" + c.name + "' has no option --" + k);
  if (shape->needs_algebra && !s.algebra) fail(head, "'" + c.name + "' needs an algebra block");

  // find the token holding a given option value or argument, for error positions
  auto arg_tok = [&](std::size_t idx) {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i].text.rfind("--", 0) == 0) {
        ++i;
        continue;
      }
      if (i < (c.name.find(' ') == std::string::npos ? 1u : 2u)) continue;
      if (seen++ == idx) return toks[i];
    }
    return head;
  };
  auto opt_tok = [&](const std::string& k) {
    for (std::size_t i = 0; i + 1 < toks.size(); ++i)
      if (toks[i].text == "--" + k) return toks[i + 1];
    return head;
  };
  auto need_int = [&](const Piece& p, const std::string& what) {
    if (!positive_int(p.text)) fail(p, what + " must be a positive integer, got '" + p.text + "'");
  };
  auto need_poly = [&](const Algebra& alg, const Piece& p) { expression<1>(alg, p); };

  if (c.options.count("degree")) need_int(opt_tok("degree"), "--degree");
  if (c.name == "check weak-poisson") {
    for (const char* k : {"sigma", "sigma-prime"}) {
      if (!c.options.count(k)) fail(head, std::string("'check weak-poisson' needs --") + k);
      Piece p = opt_tok(k);
      try {
        if (!Perm3::parse(p.text).is_transposition()) fail(p, "--" + std::string(k) + " must be a transposition");
      } catch (const ArgumentError& e) {
        fail(p, e.what());
      }
    }
  } else if (c.name == "jacobiator") {
    for (std::size_t i = 0; i < 3; ++i) need_poly(*s.algebra, arg_tok(i));
  } else if (c.name.rfind("rep ", 0) == 0) {
    need_int(arg_tok(0), "dimension");
    for (std::size_t i = 1; i < c.args.size(); ++i) need_poly(*s.algebra, arg_tok(i));
    if (c.options.count("convention") && c.options.at("convention") != "vdb" &&
        c.options.at("convention") != "tensor")
      fail(opt_tok("convention"), "--convention must be vdb or tensor");
  } else if (c.name == "ybe standard") {
    need_int(arg_tok(0), "dimension");
  } else if (c.name == "ybe entry-jacobi") {
    if (c.args.size() + c.options.count("standard") != 1)
      fail(head, "'ybe entry-jacobi' needs a tensor file or --standard N");
    if (c.options.count("standard")) need_int(opt_tok("standard"), "--standard");
  } else if (c.name == "gradient classify") {
    Algebra g = Algebra::numbered(3);
    bool fam = c.options.count("family") > 0, poly = c.options.count("poly") > 0;
    if (fam == poly) fail(head, "'gradient classify' needs exactly one of --family and --poly");
    if (c.options.count("bound")) need_int(opt_tok("bound"), "--bound");
    if (poly) {
      need_poly(g, opt_tok("poly"));
      for (const char* k : {"degree", "gen", "zeta"})
        if (c.options.count(k)) fail(opt_tok(k), std::string("--") + k + " is only used with --family");
    } else {
      const std::string& f = c.options.at("family");
      if (f == "sum-power" || f == "monomial") {
        if (!c.options.count("degree")) fail(head, "--family " + f + " needs --degree");
        if (f == "monomial") {
          if (!c.options.count("gen")) fail(head, "--family monomial needs --gen");
          if (!positive_int(c.options.at("gen"), 3)) fail(opt_tok("gen"), "--gen must be 1, 2 or 3");
        }
      } else if (f == "linear") {
        if (!c.options.count("zeta")) fail(head, "--family linear needs --zeta z0,z1,z2,z3");
        Piece z = opt_tok("zeta");
        auto parts = split(z, ',');
        if (parts.size() != 4) fail(z, "--zeta needs four comma-separated rationals");
        for (const auto& p : parts)
          if (!as_constant(expression<1>(g, p))) fail(p, "--zeta entries must be rationals");
      } else {
        fail(opt_tok("family"), "unknown family '" + f + "' (sum-power, monomial, linear)");
      }
      if (f != "monomial" && c.options.count("gen")) fail(opt_tok("gen"), "--gen is only used with --family monomial");
    }
  } else if (c.name == "gradient fnc") {
    need_poly(Algebra::numbered(3), arg_tok(0));
  }
}

Command parse_command(const std::vector<Piece>& toks) {
  Command c;
  c.line = toks[0].line;
  std::size_t i = 1;
  c.name = toks[0].text;
  static const std::set<std::string> groups = {"check", "rep", "ybe", "gradient"};
  if (groups.count(c.name)) {
    if (toks.size() < 2 || toks[1].text.rfind("--", 0) == 0)
      fail(toks[0], "'" + c.name + "' needs a subcommand");
    c.name += " " + toks[1].text;
    i = 2;
  }
  for (; i < toks.size(); ++i) {
    const std::string& t = toks[i].text;
    if (t.rfind("--", 0) == 0 && t.size() > 2) {
      if (i + 1 >= toks.size()) fail(toks[i], "option " + t + " needs a value");
      std::string key = t.substr(2);
      if (c.options.count(key)) fail(toks[i], "option " + t + " given twice");
      c.options[key] = toks[i + 1].text;
      ++i;
    } else {
      c.args.push_back(t);
    }
  }
  return c;
}

}  // namespace

std::optional<Rational> as_constant(const NCPoly& p) {
  if (p.is_zero()) return Rational(0);
  if (p.size() != 1 || !p.begin()->first[0].empty()) return std::nullopt;
  return p.begin()->second;
}

Bimodule SessionSpec::bimodule() const {
  std::size_t r = algebra ? algebra->rank() : 0;
  auto endo = [&](const std::map<Gen, NCPoly>& m) {
    if (m.empty()) return AlgEndo::identity(r);
    std::vector<NCPoly> imgs;
    for (Gen g = 0; g < r; ++g) imgs.push_back(m.count(g) ? m.at(g) : gen(g));
    return AlgEndo(imgs);
  };
  return Bimodule(kind, endo(alpha), endo(beta));
}

DoubleBracket SessionSpec::double_bracket() const {
  if (!algebra) throw ArgumentError("no algebra declared");
  DoubleBracket::Entries e;
  for (const auto& d : bracket) e[{d.a, d.b}] = d.value;
  return DoubleBracket(*algebra, bimodule(), e);
}

SessionSpec parse_session(const std::string& text) {
  Raw raw = scan(text);
  SessionSpec s;
  std::set<std::string> seen;
  // algebra first, wherever it appears
  std::stable_partition(raw.blocks.begin(), raw.blocks.end(),
                        [](const Block& b) { return b.keyword == "algebra"; });
  for (const auto& b : raw.blocks) {
    if (!seen.insert(b.keyword).second) fail({"", b.line, b.col}, "second " + b.keyword + " block");
    if (b.keyword == "algebra") parse_algebra(b, s);
    else if (b.keyword == "bimodule") parse_bimodule(b, s);
    else parse_bracket(b, s);
  }
  if (s.algebra) {
    try {
      (void)s.double_bracket();
    } catch (const Error& e) {
      int line = s.bracket.empty() ? 1 : s.bracket.front().line;
      throw ParseError(std::string("bracket table rejected: ") + e.what(), line, 1);
    }
  }
  for (const auto& toks : raw.commands) {
    if (toks.empty()) continue;
    Command c = parse_command(toks);
    validate(c, toks, s);
    s.commands.push_back(std::move(c));
  }
  return s;
}

std::string to_text(const SessionSpec& s) {
  std::string out;
  if (s.algebra) {
    out += "algebra { gens: ";
    for (std::size_t i = 0; i < s.algebra->rank(); ++i)
      out += (i ? ", " : "") + s.algebra->name(static_cast<Gen>(i));
    out += " }\n";
  }
  if (s.has_bimodule) {
    out += "bimodule { kind: " + kind_name(s.kind);
    for (const auto& [key, m] : {std::pair{"alpha", &s.alpha}, std::pair{"beta", &s.beta}}) {
      if (m->empty()) continue;
      out += std::string("; ") + key + ": ";
      bool first = true;
      for (const auto& [g, p] : *m) {
        out += (first ? "" : ", ") + s.algebra->name(g) + " -> " + to_string(*s.algebra, p);
        first = false;
      }
    }
    out += " }\n";
  }
  if (s.has_bracket) {
    out += "bracket {\n";
    for (const auto& d : s.bracket)
      out += "  <" + s.algebra->name(d.a) + "," + s.algebra->name(d.b) +
             "> = " + to_string(*s.algebra, d.value) + "\n";
    out += "}\n";
  }
  auto quoted = [](const std::string& t) {
    return t.find_first_of(" \t") == std::string::npos ? t : "\"" + t + "\"";
  };
  for (const auto& c : s.commands) {
    out += c.name;
    for (const auto& a : c.args) out += " " + quoted(a);
    for (const auto& [k, v] : c.options) out += " --" + k + " " + quoted(v);
    out += "\n";
  }
  return out;
}

}  // namespace dbrack::cli
