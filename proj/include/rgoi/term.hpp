#pragma once

// Simple terms, bags and types of the ground-typed resource lambda-calculus.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rgoi {

/// Output notation: paper symbols (λ ⋆ →) or their ASCII fallbacks (\ * ->).
struct Notation {
  bool ascii = false;
};

/// A type is either the ground type or an arrow `A -> B`, which stands for
/// the linear implication !A ⊸ B.
class Type {
 public:
  Type() = default;

  static Type ground() { return Type(); }
  static Type arrow(Type argument, Type result);

  bool is_ground() const { return node_ == nullptr; }
  bool is_arrow() const { return node_ != nullptr; }

  const Type& argument() const;
  const Type& result() const;

  std::string str(Notation n = {}) const {
    if (is_ground()) return n.ascii ? "*" : "⋆";
    std::string lhs = argument().str(n);
    if (argument().is_arrow()) lhs = "(" + lhs + ")";
    return lhs + (n.ascii ? " -> " : " → ") + result().str(n);
  }

  /// Size in constructors, used by the generator to bound types.
  int size() const { return is_ground() ? 1 : 1 + argument().size() + result().size(); }

  friend bool operator==(const Type& a, const Type& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_ground() || b.is_ground()) return false;
    return a.argument() == b.argument() && a.result() == b.result();
  }
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
  friend bool operator<(const Type& a, const Type& b) { return a.str({true}) < b.str({true}); }

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;  // null for the ground type
};

struct Type::Node {
  Type argument;
  Type result;
};

inline Type Type::arrow(Type argument, Type result) {
  return Type(std::make_shared<const Node>(Node{std::move(argument), std::move(result)}));
}

inline const Type& Type::argument() const {
  if (is_ground()) throw std::logic_error("ground type has no argument");
  return node_->argument;
}

inline const Type& Type::result() const {
  if (is_ground()) throw std::logic_error("ground type has no result");
  return node_->result;
}

class SimpleTerm;
/// A bag (simple polyterm): a finite multiset of simple terms. The empty bag is 1.
using Bag = std::vector<SimpleTerm>;

enum class TermKind { Star, Var, Lambda, App };

/// Immutable simple term. Copies share structure.
class SimpleTerm {
 public:
  static SimpleTerm star() { return SimpleTerm(std::make_shared<const Node>(Node{TermKind::Star, {}, {}, {}, {}})); }
  static SimpleTerm var(std::string name) {
    return SimpleTerm(std::make_shared<const Node>(Node{TermKind::Var, std::move(name), {}, {}, {}}));
  }
  static SimpleTerm lambda(std::string binder, Type annotation, SimpleTerm body) {
    return SimpleTerm(std::make_shared<const Node>(
        Node{TermKind::Lambda, std::move(binder), std::move(annotation), {std::move(body)}, {}}));
  }
  static SimpleTerm app(SimpleTerm function, Bag argument) {
    return SimpleTerm(std::make_shared<const Node>(
        Node{TermKind::App, {}, {}, {std::move(function)}, std::move(argument)}));
  }

  TermKind kind() const { return node_->kind; }
  bool is_star() const { return kind() == TermKind::Star; }
  bool is_var() const { return kind() == TermKind::Var; }
  bool is_lambda() const { return kind() == TermKind::Lambda; }
  bool is_app() const { return kind() == TermKind::App; }

  /// Variable name, or binder name of a lambda.
  const std::string& name() const { return node_->name; }
  const Type& annotation() const { return node_->annotation; }
  const SimpleTerm& body() const { return node_->child.at(0); }
  const SimpleTerm& function() const { return node_->child.at(0); }
  const Bag& argument() const { return node_->bag; }

  bool is_redex() const { return is_app() && function().is_lambda(); }

  /// Structural identity (names included); use canonical keys for alpha-equivalence.
  friend bool operator==(const SimpleTerm& a, const SimpleTerm& b);
  friend bool operator!=(const SimpleTerm& a, const SimpleTerm& b) { return !(a == b); }

 private:
  struct Node {
    TermKind kind;
    std::string name;
    Type annotation;
    std::vector<SimpleTerm> child;
    Bag bag;
  };
  explicit SimpleTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

inline bool operator==(const SimpleTerm& a, const SimpleTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Star:
      return true;
    case TermKind::Var:
      return a.name() == b.name();
    case TermKind::Lambda:
      return a.name() == b.name() && a.annotation() == b.annotation() && a.body() == b.body();
    case TermKind::App:
      return a.function() == b.function() && a.argument() == b.argument();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Queries

inline std::size_t term_size(const SimpleTerm& t) {
  switch (t.kind()) {
    case TermKind::Star:
    case TermKind::Var:
      return 1;
    case TermKind::Lambda:
      return 1 + term_size(t.body());
    case TermKind::App: {
      std::size_t n = 1 + term_size(t.function());
      for (const auto& e : t.argument()) n += term_size(e);
      return n;
    }
  }
  return 0;
}

/// Atoms have depth 0; lambdas and applications add one level.
inline int term_depth(const SimpleTerm& t) {
  switch (t.kind()) {
    case TermKind::Star:
    case TermKind::Var:
      return 0;
    case TermKind::Lambda:
      return 1 + term_depth(t.body());
    case TermKind::App: {
      int d = term_depth(t.function());
      for (const auto& e : t.argument()) d = std::max(d, term_depth(e));
      return 1 + d;
    }
  }
  return 0;
}

/// Number of free occurrences of `x` in `t`.
inline std::size_t count_occurrences(const SimpleTerm& t, const std::string& x) {
  switch (t.kind()) {
    case TermKind::Star:
      return 0;
    case TermKind::Var:
      return t.name() == x ? 1 : 0;
    case TermKind::Lambda:
      return t.name() == x ? 0 : count_occurrences(t.body(), x);
    case TermKind::App: {
      std::size_t n = count_occurrences(t.function(), x);
      for (const auto& e : t.argument()) n += count_occurrences(e, x);
      return n;
    }
  }
  return 0;
}

namespace detail {
inline void free_vars_into(const SimpleTerm& t, std::set<std::string>& bound, std::vector<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Star:
      return;
    case TermKind::Var:
      if (!bound.count(t.name()) && std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
      return;
    case TermKind::Lambda: {
      bool inserted = bound.insert(t.name()).second;
      free_vars_into(t.body(), bound, out);
      if (inserted) bound.erase(t.name());
      return;
    }
    case TermKind::App:
      free_vars_into(t.function(), bound, out);
      for (const auto& e : t.argument()) free_vars_into(e, bound, out);
      return;
  }
}

inline void names_into(const SimpleTerm& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Star:
      return;
    case TermKind::Var:
      out.insert(t.name());
      return;
    case TermKind::Lambda:
      out.insert(t.name());
      names_into(t.body(), out);
      return;
    case TermKind::App:
      names_into(t.function(), out);
      for (const auto& e : t.argument()) names_into(e, out);
      return;
  }
}
}  // namespace detail

/// Free variables in order of first occurrence (left to right).
inline std::vector<std::string> free_variables(const SimpleTerm& t) {
  std::set<std::string> bound;
  std::vector<std::string> out;
  detail::free_vars_into(t, bound, out);
  return out;
}

/// Every variable and binder name appearing in `t`.
inline std::set<std::string> all_names(const SimpleTerm& t) {
  std::set<std::string> out;
  detail::names_into(t, out);
  return out;
}

/// Picks `base` or `base_N` so the result is not in `avoid`.
inline std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  std::string stem = base;
  if (auto pos = stem.rfind('_'); pos != std::string::npos && pos + 1 < stem.size() &&
                                   stem.find_first_not_of("0123456789", pos + 1) == std::string::npos) {
    stem = stem.substr(0, pos);
  }
  for (int i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {
inline void print_term(const SimpleTerm& t, Notation n, std::string& out, bool parens_if_lambda);

inline void print_bag(const Bag& b, Notation n, std::string& out) {
  if (b.empty()) {
    out += "1";
    return;
  }
  out += "[";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ", ";
    print_term(b[i], n, out, false);
  }
  out += "]";
}

inline void print_term(const SimpleTerm& t, Notation n, std::string& out, bool parens_if_lambda) {
  switch (t.kind()) {
    case TermKind::Star:
      out += n.ascii ? "*" : "⋆";
      return;
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::Lambda:
      if (parens_if_lambda) out += "(";
      out += n.ascii ? "\\" : "λ";
      out += t.name();
      out += ":";
      out += t.annotation().str(n);
      out += ". ";
      print_term(t.body(), n, out, false);
      if (parens_if_lambda) out += ")";
      return;
    case TermKind::App:
      print_term(t.function(), n, out, true);
      out += " ";
      print_bag(t.argument(), n, out);
      return;
  }
}
}  // namespace detail

inline std::string to_string(const SimpleTerm& t, Notation n = {}) {
  std::string out;
  detail::print_term(t, n, out, false);
  return out;
}

inline std::string to_string(const Bag& b, Notation n = {}) {
  std::string out;
  detail::print_bag(b, n, out);
  return out;
}

}  // namespace rgoi
