#pragma once

// Simple resource interaction nets: typed vertices and links.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rgoi/term.hpp"

namespace rgoi {

using VertexId = std::uint32_t;

enum class LinkKind { Star, ImpPlus, ImpMinus, Bang, Why };
enum class Polarity { In, Out };

inline const char* to_string(LinkKind k) {
  switch (k) {
    case LinkKind::Star:
      return "star";
    case LinkKind::ImpPlus:
      return "imp+";
    case LinkKind::ImpMinus:
      return "imp-";
    case LinkKind::Bang:
      return "bang";
    case LinkKind::Why:
      return "why";
  }
  return "?";
}

inline const char* symbol(LinkKind k, Notation n = {}) {
  switch (k) {
    case LinkKind::Star:
      return n.ascii ? "*" : "⋆";
    case LinkKind::ImpPlus:
      return n.ascii ? "-o" : "⊸";
    case LinkKind::ImpMinus:
      return n.ascii ? "-o-" : "⊸⁻";
    case LinkKind::Bang:
      return "!";
    case LinkKind::Why:
      return "?";
  }
  return "?";
}

inline bool is_exponential(LinkKind k) { return k == LinkKind::Bang || k == LinkKind::Why; }
inline bool is_implication(LinkKind k) { return k == LinkKind::ImpPlus || k == LinkKind::ImpMinus; }

/// Position of a vertex inside a link: kConclusion or a premise index.
constexpr int kConclusion = -1;

/// Polarity a link of kind `k` assigns to the vertex at `position`.
///
///   ⋆ (→ v)              v out
///   ⊸ (u₁, u₂ → v)       u₁ out (the variable, !A), u₂ in (the body, B), v out
///   ⊸⁻ (u₁, u₂ → v)      u₁ in (the argument, !A), u₂ out (the result, B), v in
///   ! (u₁..uₙ → v)       uᵢ in, v out
///   ? (u₁..uₙ → v)       uᵢ out, v in
inline Polarity polarity_at(LinkKind k, int position) {
  switch (k) {
    case LinkKind::Star:
      return Polarity::Out;
    case LinkKind::ImpPlus:
      return position == 1 ? Polarity::In : Polarity::Out;
    case LinkKind::ImpMinus:
      return position == 1 ? Polarity::Out : Polarity::In;
    case LinkKind::Bang:
      return position == kConclusion ? Polarity::Out : Polarity::In;
    case LinkKind::Why:
      return position == kConclusion ? Polarity::In : Polarity::Out;
  }
  return Polarity::Out;
}

inline Polarity opposite(Polarity p) { return p == Polarity::In ? Polarity::Out : Polarity::In; }
inline const char* to_string(Polarity p) { return p == Polarity::In ? "in" : "out"; }

/// Vertex type: a formula T, or !T when `bang` is set.
struct VertexType {
  Type type;
  bool bang = false;

  static VertexType plain(Type t) { return {std::move(t), false}; }
  static VertexType banged(Type t) { return {std::move(t), true}; }

  /// Linear-logic spelling, e.g. `!⋆ ⊸ ⋆` or `!(!⋆ ⊸ ⋆)`.
  std::string str(Notation n = {}) const;

  friend bool operator==(const VertexType& a, const VertexType& b) { return a.bang == b.bang && a.type == b.type; }
  friend bool operator!=(const VertexType& a, const VertexType& b) { return !(a == b); }
  friend bool operator<(const VertexType& a, const VertexType& b) {
    if (a.bang != b.bang) return b.bang;
    return a.type < b.type;
  }
};

inline std::string linear_str(const Type& t, Notation n = {}) {
  if (t.is_ground()) return n.ascii ? "*" : "⋆";
  std::string arg = linear_str(t.argument(), n);
  if (t.argument().is_arrow()) arg = "(" + arg + ")";
  return "!" + arg + (n.ascii ? " -o " : " ⊸ ") + linear_str(t.result(), n);
}

inline std::string VertexType::str(Notation n) const {
  if (!bang) return linear_str(type, n);
  return type.is_ground() ? "!" + linear_str(type, n) : "!(" + linear_str(type, n) + ")";
}

struct Link {
  LinkKind kind;
  std::vector<VertexId> premises;
  VertexId conclusion;

  friend bool operator==(const Link& a, const Link& b) {
    return a.kind == b.kind && a.premises == b.premises && a.conclusion == b.conclusion;
  }
};

/// One place where a vertex is linked: link index and position in that link.
struct Occurrence {
  std::size_t link;
  int position;
};

class NetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simple net. Links are kept in insertion order; every vertex records the
/// (at most two, in a well-formed net) places where it is linked.
class SimpleNet {
 public:
  struct Vertex {
    VertexType type;
    std::string name;  // optional debug label
    std::vector<Occurrence> occurrences;
  };

  void add_vertex(VertexId id, VertexType type, std::string name = {}) {
    auto [it, inserted] = vertices_.try_emplace(id, Vertex{std::move(type), std::move(name), {}});
    if (!inserted) throw NetError("duplicate vertex " + std::to_string(id));
  }

  std::size_t add_link(Link l) {
    std::size_t index = links_.size();
    auto note = [&](VertexId v, int position) {
      auto it = vertices_.find(v);
      if (it == vertices_.end()) throw NetError("link refers to unknown vertex " + std::to_string(v));
      it->second.occurrences.push_back({index, position});
    };
    for (std::size_t i = 0; i < l.premises.size(); ++i) note(l.premises[i], static_cast<int>(i));
    note(l.conclusion, kConclusion);
    links_.push_back(std::move(l));
    return index;
  }

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  const std::map<VertexId, Vertex>& vertices() const { return vertices_; }
  const std::vector<Link>& links() const { return links_; }
  const Link& link(std::size_t i) const { return links_.at(i); }

  const Vertex& vertex(VertexId v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) throw NetError("unknown vertex " + std::to_string(v));
    return it->second;
  }
  const VertexType& type(VertexId v) const { return vertex(v).type; }
  const std::vector<Occurrence>& occurrences(VertexId v) const { return vertex(v).occurrences; }

  /// Debug name if any, otherwise `v<id>`.
  std::string label(VertexId v) const {
    const auto& x = vertex(v);
    return x.name.empty() ? "v" + std::to_string(v) : x.name;
  }

  /// Vertex at `position` of link `l`.
  VertexId at(std::size_t l, int position) const {
    const Link& k = links_.at(l);
    return position == kConclusion ? k.conclusion : k.premises.at(static_cast<std::size_t>(position));
  }

  Polarity polarity(const Occurrence& o) const { return polarity_at(links_.at(o.link).kind, o.position); }

  /// Vertices linked exactly once, in id order.
  std::vector<VertexId> conclusions() const {
    std::vector<VertexId> out;
    for (const auto& [id, v] : vertices_)
      if (v.occurrences.size() == 1) out.push_back(id);
    return out;
  }

  /// A single conclusion, of polarity out.
  bool is_closed() const {
    auto c = conclusions();
    return c.size() == 1 && polarity(vertex(c[0]).occurrences[0]) == Polarity::Out;
  }

  /// The out conclusion, if there is exactly one.
  std::optional<VertexId> root() const {
    std::optional<VertexId> r;
    for (VertexId c : conclusions()) {
      if (polarity(vertex(c).occurrences[0]) != Polarity::Out) continue;
      if (r) return std::nullopt;
      r = c;
    }
    return r;
  }

  VertexId max_id() const { return vertices_.empty() ? 0 : vertices_.rbegin()->first; }
  std::size_t size() const { return vertices_.size(); }

  /// True for the conclusion of a 0-ary ! or ? link (a (co-)weakening).
  bool is_weakening_conclusion(VertexId v) const {
    for (const auto& o : occurrences(v)) {
      const Link& l = links_[o.link];
      if (o.position == kConclusion && is_exponential(l.kind) && l.premises.empty()) return true;
    }
    return false;
  }

  /// Interface: sorted (type, polarity) pairs of the conclusions.
  std::vector<std::pair<VertexType, Polarity>> interface() const {
    std::vector<std::pair<VertexType, Polarity>> out;
    for (VertexId c : conclusions()) out.emplace_back(type(c), polarity(vertex(c).occurrences[0]));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    });
    return out;
  }

  void set_name(VertexId v, std::string name) {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) throw NetError("unknown vertex " + std::to_string(v));
    it->second.name = std::move(name);
  }

  /// Looks a vertex up by debug name.
  VertexId named(const std::string& name) const {
    for (const auto& [id, v] : vertices_)
      if (v.name == name) return id;
    throw NetError("no vertex named " + name);
  }

  friend bool operator==(const SimpleNet& a, const SimpleNet& b) {
    if (a.links_ != b.links_ || a.vertices_.size() != b.vertices_.size()) return false;
    for (auto i = a.vertices_.begin(), j = b.vertices_.begin(); i != a.vertices_.end(); ++i, ++j) {
      if (i->first != j->first || i->second.type != j->second.type) return false;
    }
    return true;
  }

 private:
  std::map<VertexId, Vertex> vertices_;
  std::vector<Link> links_;
};

/// A formal sum of simple nets; the empty sum is 0.
struct NetSum {
  std::vector<SimpleNet> addends;

  bool is_zero() const { return addends.empty(); }
  std::size_t size() const { return addends.size(); }

  VertexId max_id() const {
    VertexId m = 0;
    for (const auto& n : addends) m = std::max(m, n.max_id());
    return m;
  }
};

/// Hands out vertex ids above everything already in use.
class IdAllocator {
 public:
  explicit IdAllocator(VertexId next = 1) : next_(next) {}
  static IdAllocator above(const SimpleNet& n) { return IdAllocator(n.max_id() + 1); }
  static IdAllocator above(const NetSum& s) { return IdAllocator(s.max_id() + 1); }

  VertexId fresh() { return next_++; }
  void reserve_above(VertexId v) { next_ = std::max(next_, v + 1); }
  VertexId peek() const { return next_; }

 private:
  VertexId next_;
};

}  // namespace rgoi
