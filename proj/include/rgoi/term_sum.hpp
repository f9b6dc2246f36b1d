#pragma once

// Formal ℕ-linear sums of simple terms and the non-deterministic reduction.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rgoi/parse.hpp"
#include "rgoi/permutation.hpp"
#include "rgoi/term.hpp"

namespace rgoi {

namespace detail {

struct Canon {
  SimpleTerm term;
  std::string key;
};

// De Bruijn key plus bags sorted by their elements' keys.
inline Canon canon(const SimpleTerm& t, std::vector<std::string>& binders) {
  switch (t.kind()) {
    case TermKind::Star:
      return {t, "*"};
    case TermKind::Var: {
      for (std::size_t k = binders.size(); k-- > 0;) {
        if (binders[k] == t.name()) return {t, "#" + std::to_string(binders.size() - 1 - k)};
      }
      return {t, "$" + t.name()};
    }
    case TermKind::Lambda: {
      binders.push_back(t.name());
      Canon body = canon(t.body(), binders);
      binders.pop_back();
      SimpleTerm out = body.term == t.body() ? t : SimpleTerm::lambda(t.name(), t.annotation(), body.term);
      return {out, "\\" + t.annotation().str({true}) + "." + body.key};
    }
    case TermKind::App: {
      Canon f = canon(t.function(), binders);
      std::vector<Canon> elems;
      elems.reserve(t.argument().size());
      for (const auto& e : t.argument()) elems.push_back(canon(e, binders));
      std::stable_sort(elems.begin(), elems.end(), [](const Canon& a, const Canon& b) { return a.key < b.key; });
      Bag b;
      std::string key = "@(" + f.key + ")[";
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) key += ",";
        key += elems[i].key;
        b.push_back(elems[i].term);
      }
      return {SimpleTerm::app(f.term, std::move(b)), key + "]"};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

/// Canonical key: equal keys iff alpha-equivalent up to bag reordering.
inline std::string canonical_key(const SimpleTerm& t) {
  std::vector<std::string> binders;
  return detail::canon(t, binders).key;
}

/// The same term with every bag sorted into canonical order.
inline SimpleTerm canonicalize(const SimpleTerm& t) {
  std::vector<std::string> binders;
  return detail::canon(t, binders).term;
}

/// A formal sum Σ cᵢ·tᵢ with positive coefficients; addends are merged
/// modulo alpha-equivalence and bag reordering. The empty sum is 0.
class TermSum {
 public:
  struct Addend {
    std::uint64_t coefficient;
    SimpleTerm term;
  };

  TermSum() = default;
  explicit TermSum(const SimpleTerm& t, std::uint64_t coefficient = 1) { add(t, coefficient); }

  static TermSum from_parsed(const ParsedSum& parsed) {
    TermSum s;
    for (const auto& [c, t] : parsed) s.add(t, c);
    return s;
  }

  void add(const SimpleTerm& t, std::uint64_t coefficient = 1) {
    if (coefficient == 0) return;
    std::vector<std::string> binders;
    detail::Canon c = detail::canon(t, binders);
    auto [it, inserted] = addends_.try_emplace(c.key, Addend{coefficient, c.term});
    if (!inserted) it->second.coefficient += coefficient;
  }

  void add(const TermSum& other, std::uint64_t scale = 1) {
    if (scale == 0) return;
    for (const auto& [key, a] : other.addends_) {
      auto [it, inserted] = addends_.try_emplace(key, Addend{a.coefficient * scale, a.term});
      if (!inserted) it->second.coefficient += a.coefficient * scale;
    }
  }

  bool is_zero() const { return addends_.empty(); }
  /// Number of distinct addend classes.
  std::size_t size() const { return addends_.size(); }

  /// Addends in canonical-key order.
  std::vector<Addend> addends() const {
    std::vector<Addend> out;
    out.reserve(addends_.size());
    for (const auto& [k, a] : addends_) out.push_back(a);
    return out;
  }
  std::vector<std::pair<std::string, std::uint64_t>> keyed() const {
    std::vector<std::pair<std::string, std::uint64_t>> out;
    for (const auto& [k, a] : addends_) out.emplace_back(k, a.coefficient);
    return out;
  }

  friend bool operator==(const TermSum& a, const TermSum& b) { return a.keyed() == b.keyed(); }
  friend bool operator!=(const TermSum& a, const TermSum& b) { return !(a == b); }

 private:
  std::map<std::string, Addend> addends_;
};

inline std::string to_string(const TermSum& s, Notation n = {}) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& a : s.addends()) {
    if (!first) out += " + ";
    first = false;
    bool wrap = a.coefficient != 1 && (a.term.is_lambda() || a.term.is_app());
    if (a.coefficient != 1) {
      out += std::to_string(a.coefficient);
      if (n.ascii) out += ".";
      else if (!a.term.is_star()) out += "·";
    }
    if (wrap) out += "(";
    out += to_string(a.term, n);
    if (wrap) out += ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Redex positions

/// Location of a sub-term: for a lambda, step 0 enters the body; for an
/// application, step 0 enters the function and step k enters bag element k-1.
using TermPath = std::vector<std::size_t>;

struct TermPosition {
  std::size_t addend = 0;  // index into TermSum::addends()
  TermPath path;
};

class InvalidPosition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void collect_redexes(const SimpleTerm& t, TermPath& here, std::vector<TermPath>& out) {
  switch (t.kind()) {
    case TermKind::Star:
    case TermKind::Var:
      return;
    case TermKind::Lambda:
      here.push_back(0);
      collect_redexes(t.body(), here, out);
      here.pop_back();
      return;
    case TermKind::App:
      if (t.is_redex()) out.push_back(here);
      here.push_back(0);
      collect_redexes(t.function(), here, out);
      here.pop_back();
      for (std::size_t i = 0; i < t.argument().size(); ++i) {
        here.push_back(i + 1);
        collect_redexes(t.argument()[i], here, out);
        here.pop_back();
      }
      return;
  }
}
}  // namespace detail

/// All redex positions in pre-order (leftmost-outermost first).
inline std::vector<TermPath> find_term_redexes(const SimpleTerm& t) {
  std::vector<TermPath> out;
  TermPath here;
  detail::collect_redexes(t, here, out);
  return out;
}

inline bool is_normal(const SimpleTerm& t) { return find_term_redexes(t).empty(); }

// ---------------------------------------------------------------------------
// Substitution and the reduction rule

namespace detail {

// Replaces the free occurrences of x, numbered left to right, by
// replacement[k]. Binders that would capture a free name of a replacement are
// renamed.
inline SimpleTerm substitute_occurrences(const SimpleTerm& t, const std::string& x,
                                         const std::vector<SimpleTerm>& replacement,
                                         const std::set<std::string>& replacement_fv, std::size_t& next) {
  switch (t.kind()) {
    case TermKind::Star:
      return t;
    case TermKind::Var:
      return t.name() == x ? replacement.at(next++) : t;
    case TermKind::Lambda: {
      if (t.name() == x || count_occurrences(t.body(), x) == 0) return t;
      if (!replacement_fv.count(t.name())) {
        return SimpleTerm::lambda(t.name(), t.annotation(),
                                  substitute_occurrences(t.body(), x, replacement, replacement_fv, next));
      }
      std::set<std::string> avoid = all_names(t.body());
      avoid.insert(replacement_fv.begin(), replacement_fv.end());
      avoid.insert(x);
      std::string y = fresh_name(t.name(), avoid);
      std::size_t dummy = 0;
      SimpleTerm renamed =
          substitute_occurrences(t.body(), t.name(), std::vector<SimpleTerm>(count_occurrences(t.body(), t.name()),
                                                                             SimpleTerm::var(y)),
                                 {y}, dummy);
      return SimpleTerm::lambda(y, t.annotation(),
                                substitute_occurrences(renamed, x, replacement, replacement_fv, next));
    }
    case TermKind::App: {
      SimpleTerm f = substitute_occurrences(t.function(), x, replacement, replacement_fv, next);
      Bag b;
      b.reserve(t.argument().size());
      for (const auto& e : t.argument()) b.push_back(substitute_occurrences(e, x, replacement, replacement_fv, next));
      return SimpleTerm::app(f, std::move(b));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

/// Fires the redex `(λx.s) [t1..tn]`: one reduct per σ ∈ Sₙ, where tᵢ
/// replaces the σ(i)-th occurrence of x; no reducts when n differs from the
/// number of occurrences.
inline std::vector<SimpleTerm> fire_redex(const SimpleTerm& redex) {
  if (!redex.is_redex()) throw InvalidPosition("not a redex: " + to_string(redex, {true}));
  const SimpleTerm& lam = redex.function();
  const Bag& bag = redex.argument();
  const std::size_t m = count_occurrences(lam.body(), lam.name());
  if (bag.size() != m) return {};
  std::set<std::string> fv;
  for (const auto& e : bag)
    for (const auto& v : free_variables(e)) fv.insert(v);
  std::vector<SimpleTerm> out;
  for (const auto& sigma : all_permutations(m)) {
    std::vector<SimpleTerm> by_occurrence(m, SimpleTerm::star());
    for (std::size_t i = 0; i < m; ++i) by_occurrence[sigma[i]] = bag[i];
    std::size_t next = 0;
    out.push_back(detail::substitute_occurrences(lam.body(), lam.name(), by_occurrence, fv, next));
  }
  return out;
}

namespace detail {
inline std::vector<SimpleTerm> reduce_at(const SimpleTerm& t, const TermPath& path, std::size_t depth) {
  if (depth == path.size()) return fire_redex(t);
  const std::size_t step = path[depth];
  std::vector<SimpleTerm> out;
  if (t.is_lambda() && step == 0) {
    for (auto& r : reduce_at(t.body(), path, depth + 1)) out.push_back(SimpleTerm::lambda(t.name(), t.annotation(), r));
    return out;
  }
  if (t.is_app() && step == 0) {
    for (auto& r : reduce_at(t.function(), path, depth + 1)) out.push_back(SimpleTerm::app(r, t.argument()));
    return out;
  }
  if (t.is_app() && step <= t.argument().size()) {
    for (auto& r : reduce_at(t.argument()[step - 1], path, depth + 1)) {
      Bag b = t.argument();
      b[step - 1] = r;
      out.push_back(SimpleTerm::app(t.function(), std::move(b)));
    }
    return out;
  }
  throw InvalidPosition("path step " + std::to_string(step) + " does not address a sub-term");
}
}  // namespace detail

/// Reduces the redex at `path` inside a simple term.
inline TermSum reduce_term_at(const SimpleTerm& t, const TermPath& path) {
  TermSum out;
  for (const auto& r : detail::reduce_at(t, path, 0)) out.add(r);
  return out;
}

/// One reduction step inside one addend of a sum; the other addends are kept.
inline TermSum reduce_step(const TermSum& sum, const TermPosition& position) {
  auto addends = sum.addends();
  if (position.addend >= addends.size()) throw InvalidPosition("addend index out of range");
  TermSum out;
  for (std::size_t i = 0; i < addends.size(); ++i) {
    if (i == position.addend) out.add(reduce_term_at(addends[i].term, position.path), addends[i].coefficient);
    else out.add(addends[i].term, addends[i].coefficient);
  }
  return out;
}

/// Leftmost-outermost normalization with memoization on canonical keys.
class TermNormalizer {
 public:
  TermSum normalize(const SimpleTerm& t) {
    std::string key = canonical_key(t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TermSum result;
    auto redexes = find_term_redexes(t);
    if (redexes.empty()) {
      result.add(t);
    } else {
      for (const auto& r : detail::reduce_at(t, redexes.front(), 0)) result.add(normalize(r));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  TermSum normalize(const TermSum& s) {
    TermSum out;
    for (const auto& a : s.addends()) out.add(normalize(a.term), a.coefficient);
    return out;
  }

 private:
  std::unordered_map<std::string, TermSum> memo_;
};

inline TermSum normalize_term(const TermSum& sum) { return TermNormalizer().normalize(sum); }
inline TermSum normalize_term(const SimpleTerm& t) { return TermNormalizer().normalize(t); }

/// Sum of the coefficients.
inline std::uint64_t count_addends(const TermSum& sum) {
  std::uint64_t n = 0;
  for (const auto& a : sum.addends()) n += a.coefficient;
  return n;
}

}  // namespace rgoi
