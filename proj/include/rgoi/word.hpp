#pragma once

// Words of the rL* dynamic algebra and their canonical forms.
//
// A word is 0 or a product of atoms p, q, e_i, ⋆, each possibly inverted.
// Inversion of a product is applied eagerly, (ab)* = b*a*, so words are flat.
// Rewriting uses exactly aa* = 1, qp* = pq* = 0 and e_i e_j* = 0 (i ≠ j).

#include <atomic>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "rgoi/term.hpp"

namespace rgoi {

enum class Symbol : std::uint8_t { P, Q, E, Star };

struct Atom {
  Symbol symbol;
  std::uint32_t index = 0;  // for e_i, 1-based
  bool inverted = false;

  static Atom p(bool inv = false) { return {Symbol::P, 0, inv}; }
  static Atom q(bool inv = false) { return {Symbol::Q, 0, inv}; }
  static Atom e(std::uint32_t i, bool inv = false) { return {Symbol::E, i, inv}; }
  static Atom star(bool inv = false) { return {Symbol::Star, 0, inv}; }

  Atom inverse() const { return {symbol, index, !inverted}; }

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.symbol == b.symbol && a.index == b.index && a.inverted == b.inverted;
  }
  friend bool operator<(const Atom& a, const Atom& b) {
    return std::tie(a.symbol, a.index, a.inverted) < std::tie(b.symbol, b.index, b.inverted);
  }
};

inline std::string to_string(const Atom& a, Notation n = {}) {
  std::string s;
  switch (a.symbol) {
    case Symbol::P:
      s = "p";
      break;
    case Symbol::Q:
      s = "q";
      break;
    case Symbol::E:
      s = "e_" + std::to_string(a.index);
      break;
    case Symbol::Star:
      s = n.ascii ? "*" : "⋆";
      break;
  }
  return a.inverted ? s + "*" : s;
}

struct Word {
  bool zero = false;
  std::vector<Atom> atoms;  // empty and not zero: 1

  static Word one() { return {}; }
  static Word null() { return {true, {}}; }
  bool is_one() const { return !zero && atoms.empty(); }

  friend bool operator==(const Word& a, const Word& b) { return a.zero == b.zero && a.atoms == b.atoms; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    return std::tie(a.zero, a.atoms) < std::tie(b.zero, b.atoms);
  }
};

inline Word operator*(const Word& a, const Word& b) {
  if (a.zero || b.zero) return Word::null();
  Word w = a;
  w.atoms.insert(w.atoms.end(), b.atoms.begin(), b.atoms.end());
  return w;
}

/// (a₁…a_n)* = a_n* … a₁*
inline Word inverse(const Word& w) {
  if (w.zero) return w;
  Word out;
  for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) out.atoms.push_back(it->inverse());
  return out;
}

inline std::string to_string(const Word& w, Notation n = {}) {
  if (w.zero) return "0";
  if (w.atoms.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.atoms.size(); ++i) {
    if (i) s += " ";
    s += to_string(w.atoms[i], n);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

class WordParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the printed form: space-separated atoms p q e_i ⋆ (or *) with a
/// trailing * for inversion, or 0 or 1.
inline Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  bool any = false;
  while (in >> tok) {
    any = true;
    if (tok == "0") return Word::null();
    if (tok == "1") continue;
    bool inv = false;
    if (tok.size() > 1 && tok.back() == '*') {
      inv = true;
      tok.pop_back();
    }
    if (tok == "p") {
      w.atoms.push_back(Atom::p(inv));
    } else if (tok == "q") {
      w.atoms.push_back(Atom::q(inv));
    } else if (tok == "⋆" || tok == "*") {
      w.atoms.push_back(Atom::star(inv));
    } else if (tok.rfind("e_", 0) == 0 && tok.size() > 2) {
      try {
        w.atoms.push_back(Atom::e(static_cast<std::uint32_t>(std::stoul(tok.substr(2))), inv));
      } catch (const std::exception&) {
        throw WordParseError("bad generator '" + tok + "'");
      }
    } else {
      throw WordParseError("unknown atom '" + tok + "'");
    }
  }
  if (!any) throw WordParseError("empty word");
  return w;
}

namespace detail {

enum class PairRule { None, Cancel, Zero };

inline PairRule pair_rule(const Atom& a, const Atom& b) {
  if (a.inverted || !b.inverted) return PairRule::None;
  if (a.symbol == b.symbol && a.index == b.index) return PairRule::Cancel;
  if ((a.symbol == Symbol::P && b.symbol == Symbol::Q) || (a.symbol == Symbol::Q && b.symbol == Symbol::P))
    return PairRule::Zero;
  if (a.symbol == Symbol::E && b.symbol == Symbol::E) return PairRule::Zero;
  return PairRule::None;
}

inline std::atomic<std::size_t>& star_counter() {
  static std::atomic<std::size_t> n{0};
  return n;
}

}  // namespace detail

/// Number of ⋆⋆* cancellations performed so far by normalize_word.
inline std::size_t star_cancellations() { return detail::star_counter().load(); }

/// Pushes one atom onto a word kept in canonical form. Returns false when the
/// word becomes 0.
inline bool push_atom(std::vector<Atom>& canon, const Atom& a) {
  if (!canon.empty()) {
    switch (detail::pair_rule(canon.back(), a)) {
      case detail::PairRule::Cancel:
        if (a.symbol == Symbol::Star) ++detail::star_counter();
        canon.pop_back();
        return true;
      case detail::PairRule::Zero:
        return false;
      case detail::PairRule::None:
        break;
    }
  }
  canon.push_back(a);
  return true;
}

/// Canonical form, rewriting the leftmost reducible pair first.
inline Word normalize_word(const Word& w) {
  if (w.zero) return w;
  Word out;
  for (const Atom& a : w.atoms)
    if (!push_atom(out.atoms, a)) return Word::null();
  return out;
}

/// Canonical form by literal one-pair-at-a-time rewriting, choosing the
/// leftmost or the rightmost reducible pair. Quadratic; a reference for
/// normalize_word.
inline Word normalize_word_naive(const Word& w, bool rightmost) {
  if (w.zero) return w;
  std::vector<Atom> a = w.atoms;
  for (;;) {
    std::ptrdiff_t hit = -1;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      std::size_t k = rightmost ? a.size() - 2 - i : i;
      if (detail::pair_rule(a[k], a[k + 1]) != detail::PairRule::None) {
        hit = static_cast<std::ptrdiff_t>(k);
        break;
      }
    }
    if (hit < 0) return Word{false, a};
    if (detail::pair_rule(a[hit], a[hit + 1]) == detail::PairRule::Zero) return Word::null();
    a.erase(a.begin() + hit, a.begin() + hit + 2);
  }
}

/// A finite multiset of non-zero canonical words; empty is 0.
struct WeightSum {
  std::map<Word, std::size_t> terms;

  void add(const Word& w, std::size_t times = 1) {
    if (times == 0) return;
    Word c = normalize_word(w);
    if (!c.zero) terms[c] += times;
  }
  void add(const WeightSum& s) {
    for (const auto& [w, k] : s.terms) terms[w] += k;
  }
  bool is_zero() const { return terms.empty(); }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [w, k] : terms) n += k;
    return n;
  }

  friend bool operator==(const WeightSum& a, const WeightSum& b) { return a.terms == b.terms; }
  friend bool operator!=(const WeightSum& a, const WeightSum& b) { return !(a == b); }
};

inline std::string to_string(const WeightSum& s, Notation n = {});
inline std::ostream& operator<<(std::ostream& os, const WeightSum& s) { return os << to_string(s); }

/// Words joined by " + ", repeated words as "k·w"; "0" for the empty sum.
inline std::string to_string(const WeightSum& s, Notation n) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [w, k] : s.terms) {
    if (!out.empty()) out += " + ";
    if (k > 1) out += std::to_string(k) + (n.ascii ? "." : "·");
    bool paren = k > 1 && w.atoms.size() > 1;
    out += paren ? "(" + to_string(w, n) + ")" : to_string(w, n);
  }
  return out;
}

}  // namespace rgoi
