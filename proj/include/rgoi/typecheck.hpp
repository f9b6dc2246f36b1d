#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "rgoi/term.hpp"

namespace rgoi {

enum class TypeErrorKind { TypeMismatch, NotAFunction, UnboundVariable };

inline const char* to_string(TypeErrorKind k) {
  switch (k) {
    case TypeErrorKind::TypeMismatch:
      return "TypeMismatch";
    case TypeErrorKind::NotAFunction:
      return "NotAFunction";
    case TypeErrorKind::UnboundVariable:
      return "UnboundVariable";
  }
  return "?";
}

class TypeError : public std::runtime_error {
 public:
  TypeError(TypeErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  TypeErrorKind kind() const { return kind_; }

 private:
  TypeErrorKind kind_;
};

using TypeEnv = std::map<std::string, Type>;

/// Strict simple typing. Every occurrence of a variable gets the binder's
/// annotation; an application `t B` needs `t : A -> T` and every element of
/// `B` at `A`. The empty bag takes its argument type from the function.
inline Type typecheck(const SimpleTerm& term, const TypeEnv& env = {}) {
  switch (term.kind()) {
    case TermKind::Star:
      return Type::ground();
    case TermKind::Var: {
      auto it = env.find(term.name());
      if (it == env.end()) throw TypeError(TypeErrorKind::UnboundVariable, "unbound variable " + term.name());
      return it->second;
    }
    case TermKind::Lambda: {
      TypeEnv inner = env;
      inner[term.name()] = term.annotation();
      return Type::arrow(term.annotation(), typecheck(term.body(), inner));
    }
    case TermKind::App: {
      Type f = typecheck(term.function(), env);
      if (!f.is_arrow())
        throw TypeError(TypeErrorKind::NotAFunction,
                        to_string(term.function(), {true}) + " has type " + f.str({true}) + " and is applied");
      for (const auto& e : term.argument()) {
        Type a = typecheck(e, env);
        if (a != f.argument())
          throw TypeError(TypeErrorKind::TypeMismatch, "bag element " + to_string(e, {true}) + " has type " +
                                                           a.str({true}) + ", expected " + f.argument().str({true}));
      }
      return f.result();
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace rgoi
