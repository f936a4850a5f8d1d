#include <cctype>
#include <cstdlib>

#include "dbrack/text.hpp"

namespace dbrack {

std::string format_word(const Algebra& alg, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += alg.name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

template <std::size_t N>
std::string to_string(const Algebra& alg, const Tensor<N>& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : t) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    for (std::size_t i = 0; i < N; ++i) {
      if (i > 0) out += " (x) ";
      std::string slot = format_word(alg, k[i]);
      if (i == 0 && a != 1) slot = k[0].empty() ? a.get_str() : a.get_str() + "*" + slot;
      out += slot;
    }
  }
  return out;
}

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Tensor, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Parser {
 public:
  Parser(const Algebra& alg, std::string_view src, int line, int col)
      : alg_(alg), src_(src), line_(line), col_(col) {
    lex();
  }

  template <std::size_t N>
  Tensor<N> parse_all() {
    Tensor<N> t = sum<N>();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek().pos);
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
    int line = line_, col = col_;
    for (std::size_t i = 0; i < pos && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void lex() {
    std::size_t i = 0;
    while (i < src_.size()) {
      char ch = src_[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
        toks_.push_back({Tok::Num, std::string(src_.substr(start, i - start)), start});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        while (i < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i])) || src_[i] == '_'))
          ++i;
        toks_.push_back({Tok::Ident, std::string(src_.substr(start, i - start)), start});
        continue;
      }
      if (src_.substr(i, 3) == "(x)") {
        toks_.push_back({Tok::Tensor, "(x)", start});
        i += 3;
        continue;
      }
      Tok k;
      switch (ch) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default: fail(std::string("unexpected character '") + ch + "'", start);
      }
      toks_.push_back({k, std::string(1, ch), start});
      ++i;
    }
    toks_.push_back({Tok::End, "end of input", src_.size()});
  }

  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_++]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what, peek().pos);
    ++at_;
  }

  template <std::size_t N>
  Tensor<N> sum() {
    Tensor<N> r;
    bool neg = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) neg = next().kind == Tok::Minus;
    while (true) {
      Tensor<N> t = term<N>();
      if (neg) r -= t; else r += t;
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        neg = next().kind == Tok::Minus;
      } else {
        return r;
      }
    }
  }

  template <std::size_t N>
  Tensor<N> term() {
    std::size_t start = peek().pos;
    std::vector<NCPoly> slots{product()};
    while (peek().kind == Tok::Tensor) {
      next();
      slots.push_back(product());
    }
    if (slots.size() == 1 && slots[0].is_zero()) return Tensor<N>();
    if (slots.size() != N)
      fail("expected " + std::to_string(N) + " tensor factor(s), found " +
               std::to_string(slots.size()),
           start);
    std::vector<std::pair<Key<N>, Rational>> acc{{Key<N>{}, Rational(1)}};
    for (std::size_t i = 0; i < N; ++i) {
      std::vector<std::pair<Key<N>, Rational>> nxt;
      for (const auto& [k, c] : acc)
        for (const auto& [kw, cw] : slots[i]) {
          Key<N> nk = k;
          nk[i] = kw[0];
          nxt.push_back({std::move(nk), c * cw});
        }
      acc = std::move(nxt);
    }
    Tensor<N> r;
    for (auto& [k, c] : acc) r.add(std::move(k), c);
    return r;
  }

  NCPoly product() {
    NCPoly r = factor();
    while (peek().kind == Tok::Star) {
      next();
      r = r * factor();
    }
    return r;
  }

  NCPoly factor() {
    NCPoly base = primary();
    if (peek().kind == Tok::Caret) {
      next();
      if (peek().kind != Tok::Num) fail("expected exponent", peek().pos);
      const Token& e = next();
      if (e.text.size() > 4) fail("exponent too large", e.pos);
      base = pow(base, static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  NCPoly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Num: {
        next();
        Rational q(t.text, 10);
        if (peek().kind == Tok::Slash) {
          next();
          if (peek().kind != Tok::Num) fail("expected denominator", peek().pos);
          const Token& d = next();
          Rational den(d.text, 10);
          if (sgn(den) == 0) fail("zero denominator", d.pos);
          q /= den;
        }
        return constant(q);
      }
      case Tok::Ident: {
        next();
        auto g = alg_.find(t.text);
        if (!g) fail("undeclared generator '" + t.text + "'", t.pos);
        return gen(*g);
      }
      case Tok::LParen: {
        next();
        NCPoly inner = sum<1>();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail("unexpected '" + t.text + "'", t.pos);
    }
  }

  const Algebra& alg_;
  std::string_view src_;
  int line_, col_;
  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace

template <std::size_t N>
Tensor<N> parse_tensor(const Algebra& alg, std::string_view text, int line, int col) {
  Parser p(alg, text, line, col);
  return alg.normal(p.parse_all<N>());
}

template std::string to_string<1>(const Algebra&, const Tensor<1>&);
template std::string to_string<2>(const Algebra&, const Tensor<2>&);
template std::string to_string<3>(const Algebra&, const Tensor<3>&);
template Tensor<1> parse_tensor<1>(const Algebra&, std::string_view, int, int);
template Tensor<2> parse_tensor<2>(const Algebra&, std::string_view, int, int);
template Tensor<3> parse_tensor<3>(const Algebra&, std::string_view, int, int);

}  // namespace dbrack
