#pragma once

// Translation of simple terms into simple nets.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgoi/net.hpp"
#include "rgoi/term_sum.hpp"
#include "rgoi/typecheck.hpp"

namespace rgoi {

namespace detail {

class Translator {
 public:
  explicit Translator(VertexId first) : next_(first) {}

  struct Pre {
    VertexId root;
    Type type;
    // free occurrences, left to right
    std::vector<std::pair<std::string, VertexId>> occurrences;
  };

  Pre pre(const SimpleTerm& t, TypeEnv& env) {
    switch (t.kind()) {
      case TermKind::Star: {
        VertexId v = fresh(VertexType::plain(Type::ground()));
        net_.add_link({LinkKind::Star, {}, v});
        return {v, Type::ground(), {}};
      }
      case TermKind::Var: {
        const Type& ty = env.at(t.name());
        VertexId v = fresh(VertexType::plain(ty));
        return {v, ty, {{t.name(), v}}};
      }
      case TermKind::Lambda: {
        auto saved = env.find(t.name()) != env.end() ? std::optional(env[t.name()]) : std::nullopt;
        env[t.name()] = t.annotation();
        Pre body = pre(t.body(), env);
        if (saved) env[t.name()] = *saved;
        else env.erase(t.name());

        std::vector<VertexId> bound;
        std::vector<std::pair<std::string, VertexId>> rest;
        for (auto& o : body.occurrences) {
          if (o.first == t.name()) bound.push_back(o.second);
          else rest.push_back(std::move(o));
        }
        VertexId u2 = fresh(VertexType::banged(t.annotation()));
        net_.add_link({LinkKind::Why, bound, u2});
        Type ty = Type::arrow(t.annotation(), body.type);
        VertexId v = fresh(VertexType::plain(ty));
        net_.add_link({LinkKind::ImpPlus, {u2, body.root}, v});
        return {v, ty, std::move(rest)};
      }
      case TermKind::App: {
        Pre f = pre(t.function(), env);
        std::vector<VertexId> elems;
        auto occ = std::move(f.occurrences);
        for (const auto& e : t.argument()) {
          Pre p = pre(e, env);
          elems.push_back(p.root);
          for (auto& o : p.occurrences) occ.push_back(std::move(o));
        }
        VertexId bag = fresh(VertexType::banged(f.type.argument()));
        net_.add_link({LinkKind::Bang, elems, bag});
        VertexId v = fresh(VertexType::plain(f.type.result()));
        net_.add_link({LinkKind::ImpMinus, {bag, v}, f.root});
        return {v, f.type.result(), std::move(occ)};
      }
    }
    throw std::logic_error("unreachable");
  }

  SimpleNet finish(Pre p, const TypeEnv& env) {
    // one ? link per free variable, in order of first occurrence
    std::vector<std::string> order;
    for (const auto& o : p.occurrences)
      if (std::find(order.begin(), order.end(), o.first) == order.end()) order.push_back(o.first);
    for (const auto& x : order) {
      std::vector<VertexId> occ;
      for (const auto& o : p.occurrences)
        if (o.first == x) occ.push_back(o.second);
      VertexId c = fresh(VertexType::banged(env.at(x)), x);
      net_.add_link({LinkKind::Why, occ, c});
    }
    return std::move(net_);
  }

 private:
  VertexId fresh(VertexType t, std::string name = {}) {
    VertexId id = next_++;
    net_.add_vertex(id, std::move(t), std::move(name));
    return id;
  }

  SimpleNet net_;
  VertexId next_;
};

}  // namespace detail

/// ⟦t⟧. Bags are put in canonical order first, so ! premises follow the
/// canonical element order and ? premises the left-to-right occurrences of the
/// canonicalized term. Throws TypeError for ill-typed input.
inline SimpleNet translate(const SimpleTerm& term, const TypeEnv& env = {}, VertexId first_id = 1) {
  typecheck(term, env);
  SimpleTerm t = canonicalize(term);
  detail::Translator tr(first_id);
  TypeEnv scope = env;
  auto pre = tr.pre(t, scope);
  return tr.finish(std::move(pre), env);
}

/// ⟦t₁ + … + tₖ⟧ with disjoint vertex sets; an addend with coefficient c
/// contributes c copies.
inline NetSum translate(const TermSum& sum, const TypeEnv& env = {}) {
  NetSum out;
  VertexId next = 1;
  for (const auto& a : sum.addends()) {
    for (std::uint64_t k = 0; k < a.coefficient; ++k) {
      out.addends.push_back(translate(a.term, env, next));
      next = out.addends.back().max_id() + 1;
    }
  }
  return out;
}

}  // namespace rgoi
