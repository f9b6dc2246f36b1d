#pragma once

// Random closed terms for the theorem suites.
//
// Generation is type directed. An explicit redex (λx:A. b)[bag] is built body
// first, so the bag can be sized to the occurrences of x in b, or sized wrong
// on purpose to produce a term that reduces to 0.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgoi/term.hpp"
#include "rgoi/typecheck.hpp"

namespace rgoi {

class GenerationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  int max_depth = 4;
  std::size_t max_bag = 3;
  Type type_target = Type::ground();
  double mismatch = 0.1;  // chance that an explicit redex gets a bag of the wrong size
};

namespace detail {

struct GenVar {
  std::string name;
  Type type;
};

class TermGenerator {
 public:
  explicit TermGenerator(const CorpusSpec& spec) : spec_(spec), rng_(spec.seed) {}

  SimpleTerm next() {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      counter_ = 0;
      std::vector<GenVar> env;
      auto t = term(spec_.type_target, env, spec_.max_depth, true);
      if (!t) continue;
      // with certain mismatch, a term without an explicit redex could survive
      if (spec_.mismatch >= 1.0 && t->kind() == TermKind::Star) continue;
      return *t;
    }
    throw GenerationExhausted("no closed term of type " + spec_.type_target.str() + " within depth " +
                              std::to_string(spec_.max_depth));
  }

 private:
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool chance(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

  // Favours the innermost candidate, so that binders get used.
  std::size_t pick(const std::vector<std::size_t>& candidates) {
    return chance(0.6) ? candidates.back() : candidates[below(candidates.size())];
  }

  std::string fresh() { return "x" + std::to_string(++counter_); }

  Type argument_type(int depth) {
    static const Type g = Type::ground();
    static const Type gg = Type::arrow(g, g);
    static const Type ggg = Type::arrow(gg, g);
    std::size_t r = below(depth >= 3 ? 7 : 6);
    return r < 3 ? g : r < 6 ? gg : ggg;
  }

  static bool ends_in(const Type& t, const Type& target, std::size_t& arity) {
    arity = 0;
    for (const Type* c = &t;; c = &c->result(), ++arity) {
      if (*c == target && arity > 0) return true;
      if (c->is_ground()) return false;
    }
  }

  std::optional<SimpleTerm> term(const Type& type, std::vector<GenVar>& env, int depth, bool root = false) {
    std::vector<std::size_t> exact;
    std::vector<std::pair<std::size_t, std::size_t>> heads;  // (variable, arity)
    for (std::size_t i = 0; i < env.size(); ++i) {
      std::size_t k = 0;
      if (env[i].type == type) exact.push_back(i);
      if (ends_in(env[i].type, type, k) && static_cast<int>(k) <= depth) heads.emplace_back(i, k);
    }
    enum Choice { Atom, Var, Lambda, Redex, Spine };
    std::vector<Choice> options;
    if (type.is_ground() && !root) options.insert(options.end(), {Atom});
    if (!exact.empty()) options.insert(options.end(), {Var, Var});
    if (type.is_arrow() && depth >= 1) options.insert(options.end(), {Lambda, Lambda, Lambda});
    if (depth >= 2) options.insert(options.end(), {Redex, Redex});
    if (!heads.empty()) options.insert(options.end(), {Spine, Spine});
    if (options.empty() && type.is_ground()) options.push_back(Atom);
    if (options.empty()) return std::nullopt;

    switch (options[below(options.size())]) {
      case Atom:
        return SimpleTerm::star();
      case Var:
        return SimpleTerm::var(env[pick(exact)].name);
      case Lambda: {
        // a λ in a bag usually meets a bag of one, so aim for one occurrence
        std::optional<SimpleTerm> body;
        std::string x;
        for (int attempt = 0; attempt < 6; ++attempt) {
          x = fresh();
          env.push_back({x, type.argument()});
          body = term(type.result(), env, depth - 1);
          env.pop_back();
          if (body && count_occurrences(*body, x) == 1) break;
        }
        if (!body) return std::nullopt;
        return SimpleTerm::lambda(x, type.argument(), *body);
      }
      case Redex:
        return redex(type, env, depth);
      case Spine: {
        std::vector<std::size_t> vars;
        for (const auto& h : heads) vars.push_back(h.first);
        std::size_t v = pick(vars), arity = 0;
        for (const auto& h : heads)
          if (h.first == v) arity = h.second;
        SimpleTerm t = SimpleTerm::var(env[v].name);
        Type head = env[v].type;  // env grows below
        const Type* c = &head;
        for (std::size_t k = 0; k < arity; ++k, c = &c->result()) {
          std::size_t size = chance(0.7) ? 1 : below(spec_.max_bag + 1);
          auto b = bag(c->argument(), env, depth - static_cast<int>(arity), size);
          if (!b) return std::nullopt;
          t = SimpleTerm::app(t, *b);
        }
        return t;
      }
    }
    return std::nullopt;
  }

  std::optional<SimpleTerm> redex(const Type& type, std::vector<GenVar>& env, int depth) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      Type a = argument_type(depth);
      std::string x = fresh();
      env.push_back({x, a});
      auto body = term(type, env, depth - 2);
      env.pop_back();
      if (!body) continue;
      std::size_t k = count_occurrences(*body, x);
      if (k == 0 && attempt < 4 && chance(0.7)) continue;
      std::size_t size = k;
      if (chance(spec_.mismatch)) size = k < spec_.max_bag ? k + 1 : k - 1;
      if (size > spec_.max_bag) continue;
      auto b = bag(a, env, depth - 1, size);
      if (!b) continue;
      return SimpleTerm::app(SimpleTerm::lambda(x, a, *body), *b);
    }
    return std::nullopt;
  }

  std::optional<Bag> bag(const Type& type, std::vector<GenVar>& env, int depth, std::size_t size) {
    if (depth < 0) return std::nullopt;
    Bag b;
    for (std::size_t i = 0; i < size; ++i) {
      auto e = term(type, env, depth);
      if (!e) return std::nullopt;
      b.push_back(*e);
    }
    return b;
  }

  CorpusSpec spec_;
  std::mt19937_64 rng_;
  std::size_t counter_ = 0;
};

}  // namespace detail

/// `spec.count` closed terms of type `spec.type_target`, deterministic in the
/// seed.
inline std::vector<SimpleTerm> generate_corpus(const CorpusSpec& spec) {
  if (spec.max_depth < 0 || spec.max_bag == 0) throw std::invalid_argument("corpus bounds must be positive");
  detail::TermGenerator g(spec);
  std::vector<SimpleTerm> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(g.next());
  return out;
}

namespace detail {

inline void enumerate_into(const Type& type, std::vector<GenVar>& env, int depth, std::size_t max_bag,
                           const std::vector<Type>& argument_types, std::size_t& counter,
                           std::vector<SimpleTerm>& out);

inline void enumerate_bags(const Type& type, std::vector<GenVar>& env, int depth, std::size_t max_bag,
                           const std::vector<Type>& argument_types, std::size_t& counter,
                           std::vector<Bag>& out) {
  std::vector<SimpleTerm> elements;
  if (depth >= 0) enumerate_into(type, env, depth, max_bag, argument_types, counter, elements);
  // bags are multisets: non-decreasing index sequences
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) {
    Bag b;
    for (std::size_t i : idx) b.push_back(elements[i]);
    out.push_back(b);
    if (left == 0) return;
    for (std::size_t i = from; i < elements.size(); ++i) {
      idx.push_back(i);
      rec(i, left - 1);
      idx.pop_back();
    }
  };
  rec(0, max_bag);
}

inline void enumerate_into(const Type& type, std::vector<GenVar>& env, int depth, std::size_t max_bag,
                           const std::vector<Type>& argument_types, std::size_t& counter,
                           std::vector<SimpleTerm>& out) {
  if (type.is_ground()) out.push_back(SimpleTerm::star());
  for (const auto& v : env)
    if (v.type == type) out.push_back(SimpleTerm::var(v.name));
  if (depth < 1) return;
  if (type.is_arrow()) {
    std::string x = "x" + std::to_string(++counter);
    env.push_back({x, type.argument()});
    std::vector<SimpleTerm> bodies;
    enumerate_into(type.result(), env, depth - 1, max_bag, argument_types, counter, bodies);
    env.pop_back();
    for (auto& b : bodies) out.push_back(SimpleTerm::lambda(x, type.argument(), b));
  }
  // applications t[bag] with t : A -> type at depth - 1
  for (const Type& a : argument_types) {
    std::vector<SimpleTerm> heads;
    enumerate_into(Type::arrow(a, type), env, depth - 1, max_bag, argument_types, counter, heads);
    if (heads.empty()) continue;
    std::vector<Bag> bags;
    enumerate_bags(a, env, depth - 1, max_bag, argument_types, counter, bags);
    for (const auto& h : heads)
      for (const auto& b : bags) out.push_back(SimpleTerm::app(h, b));
  }
}

}  // namespace detail

/// Every term of `type` within `depth`, whose bags have at most `max_bag`
/// elements and whose binders range over `argument_types`. Exponential in the
/// depth; meant for depth ≤ 2 cross-checks of the generator.
inline std::vector<SimpleTerm> enumerate_terms(const Type& type, int depth, std::size_t max_bag,
                                               const std::vector<Type>& argument_types) {
  std::vector<detail::GenVar> env;
  std::size_t counter = 0;
  std::vector<SimpleTerm> out;
  detail::enumerate_into(type, env, depth, max_bag, argument_types, counter, out);
  return out;
}

}  // namespace rgoi
