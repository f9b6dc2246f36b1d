#pragma once

// Surface syntax for terms and types.
//
//   sum  ::= [nat ['.']] term ('+' [nat ['.']] term)*
//   term ::= '*' | ident | '\' ident ':' type '.' term | term bag | '(' term ')'
//   bag  ::= '1' | '[' term (',' term)* ']'
//   type ::= '*' | type '->' type | '(' type ')'
//
// The unicode spellings λ, ⋆ and → are accepted too. Binders are renamed at
// ingest so that they are pairwise distinct and never clash with free names.

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rgoi/term.hpp"

namespace rgoi {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A parsed top-level sum before canonicalization: (coefficient, term) pairs.
using ParsedSum = std::vector<std::pair<std::uint64_t, SimpleTerm>>;

namespace detail {

enum class Tok { Star, Ident, Nat, Lambda, Colon, Dot, LBrack, RBrack, Comma, LParen, RParen, Arrow, Plus, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    int l = line, cl = col;
    auto push = [&](Tok k, std::size_t n) {
      out.push_back({k, std::string(src.substr(i, n)), l, cl});
      advance(n);
    };
    if (c == '*') push(Tok::Star, 1);
    else if (starts("⋆")) push(Tok::Star, std::string_view("⋆").size());
    else if (c == '\\') push(Tok::Lambda, 1);
    else if (starts("λ")) push(Tok::Lambda, std::string_view("λ").size());
    else if (starts("->")) push(Tok::Arrow, 2);
    else if (starts("→")) push(Tok::Arrow, std::string_view("→").size());
    else if (c == ':') push(Tok::Colon, 1);
    else if (c == '.') push(Tok::Dot, 1);
    else if (starts("·")) push(Tok::Dot, std::string_view("·").size());
    else if (c == '[') push(Tok::LBrack, 1);
    else if (c == ']') push(Tok::RBrack, 1);
    else if (c == ',') push(Tok::Comma, 1);
    else if (c == '(') push(Tok::LParen, 1);
    else if (c == ')') push(Tok::RParen, 1);
    else if (c == '+') push(Tok::Plus, 1);
    else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 0;
      while (i + n < src.size() && std::isdigit(static_cast<unsigned char>(src[i + n]))) ++n;
      push(Tok::Nat, n);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 0;
      while (i + n < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i + n])) || src[i + n] == '_' || src[i + n] == '\''))
        ++n;
      push(Tok::Ident, n);
    } else {
      throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  ParsedSum sum() {
    ParsedSum out;
    do {
      std::uint64_t coef = 1;
      if (peek().kind == Tok::Nat) {
        coef = std::stoull(take().text);
        if (peek().kind == Tok::Dot) take();
      }
      out.emplace_back(coef, term());
    } while (accept(Tok::Plus));
    expect(Tok::End, "end of input");
    return out;
  }

  SimpleTerm single() {
    SimpleTerm t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  Type single_type() {
    Type t = type();
    expect(Tok::End, "end of input");
    return t;
  }

  Type type() {
    Type lhs;
    if (accept(Tok::Star)) {
      lhs = Type::ground();
    } else if (accept(Tok::LParen)) {
      lhs = type();
      expect(Tok::RParen, "')'");
    } else {
      fail("expected a type");
    }
    if (accept(Tok::Arrow)) return Type::arrow(lhs, type());
    return lhs;
  }

 private:
  SimpleTerm term() {
    if (accept(Tok::Lambda)) {
      const Token& id = expect(Tok::Ident, "binder name");
      expect(Tok::Colon, "':' (binder annotations are mandatory)");
      Type ty = type();
      expect(Tok::Dot, "'.'");
      return SimpleTerm::lambda(id.text, ty, term());
    }
    SimpleTerm head = atom();
    while (peek().kind == Tok::LBrack || (peek().kind == Tok::Nat && peek().text == "1")) {
      head = SimpleTerm::app(head, bag());
    }
    if (peek().kind == Tok::Lambda) fail("a lambda in argument position needs a bag, e.g. f [\\x:*. x]");
    return head;
  }

  SimpleTerm atom() {
    if (accept(Tok::Star)) return SimpleTerm::star();
    if (peek().kind == Tok::Ident) return SimpleTerm::var(take().text);
    if (accept(Tok::LParen)) {
      SimpleTerm t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a term");
  }

  Bag bag() {
    if (peek().kind == Tok::Nat) {
      take();
      return {};
    }
    expect(Tok::LBrack, "'['");
    Bag b;
    if (accept(Tok::RBrack)) fail("empty brackets: write the empty bag as 1");
    do {
      b.push_back(term());
    } while (accept(Tok::Comma));
    expect(Tok::RBrack, "']'");
    return b;
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return take();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, msg + (t.kind == Tok::End ? " at end of input" : ", found '" + t.text + "'"));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

/// Renames binders so every binder in `t` is distinct and differs from the
/// free names in `taken`; newly used names are added to `taken`.
inline SimpleTerm freshen(const SimpleTerm& t, std::set<std::string>& taken,
                          std::map<std::string, std::string>& scope) {
  switch (t.kind()) {
    case TermKind::Star:
      return t;
    case TermKind::Var: {
      auto it = scope.find(t.name());
      return it == scope.end() || it->second == t.name() ? t : SimpleTerm::var(it->second);
    }
    case TermKind::Lambda: {
      std::string name = fresh_name(t.name(), taken);
      taken.insert(name);
      auto saved = scope.find(t.name()) != scope.end() ? std::optional(scope[t.name()]) : std::nullopt;
      scope[t.name()] = name;
      SimpleTerm body = freshen(t.body(), taken, scope);
      if (saved) scope[t.name()] = *saved;
      else scope.erase(t.name());
      return SimpleTerm::lambda(name, t.annotation(), body);
    }
    case TermKind::App: {
      SimpleTerm f = freshen(t.function(), taken, scope);
      Bag b;
      for (const auto& e : t.argument()) b.push_back(freshen(e, taken, scope));
      return SimpleTerm::app(f, b);
    }
  }
  return t;
}

}  // namespace detail

/// Renames binders apart (alpha-freshening).
inline SimpleTerm freshen_binders(const SimpleTerm& t) {
  auto fv = free_variables(t);
  std::set<std::string> taken(fv.begin(), fv.end());
  std::map<std::string, std::string> scope;
  return detail::freshen(t, taken, scope);
}

/// Parses one simple term (no top-level sums).
inline SimpleTerm parse_term(std::string_view source) {
  return freshen_binders(detail::Parser(source).single());
}

/// Parses a top-level formal sum such as `2.* + (\x:*. x) [*]`.
inline ParsedSum parse_term_sum(std::string_view source) {
  ParsedSum out = detail::Parser(source).sum();
  for (auto& [coef, t] : out) t = freshen_binders(t);
  return out;
}

inline Type parse_type(std::string_view source) { return detail::Parser(source).single_type(); }

}  // namespace rgoi
