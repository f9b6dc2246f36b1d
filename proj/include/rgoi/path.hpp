#pragma once

// Paths in simple nets: straightness, maximality, comprehensiveness and the
// enumeration of execution paths.
//
// A path is a vertex sequence. Two consecutive vertices may share more than
// one link, so straightness is decided over the possible choices of crossed
// links: a straight path is one admitting a straight choice.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgoi/net.hpp"

namespace rgoi {

using Path = std::vector<VertexId>;

class PathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PathLimitExceeded : public PathError {
 public:
  using PathError::PathError;
};

inline constexpr std::size_t kMaxPathLength = 10000;

inline std::string to_string(const SimpleNet& net, const Path& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += net.label(p[i]);
  }
  return s + ")";
}

inline Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

namespace detail {

inline int position_in(const Link& l, VertexId v) {
  if (l.conclusion == v) return kConclusion;
  for (std::size_t i = 0; i < l.premises.size(); ++i)
    if (l.premises[i] == v) return static_cast<int>(i);
  return -2;
}

inline std::size_t premise_index(const Link& l, VertexId v) {
  for (std::size_t i = 0; i < l.premises.size(); ++i)
    if (l.premises[i] == v) return i;
  throw PathError("vertex is not a premise");
}

// Crossing `l` from u to v is neither twisting nor (for ⋆) anything but the
// bounce on its conclusion.
inline bool straight_crossing(const Link& l, VertexId u, VertexId v) {
  int a = position_in(l, u), b = position_in(l, v);
  if (a == -2 || b == -2) return false;
  if (l.kind == LinkKind::Star) return u == v;
  if (u == v) return false;
  return (a == kConclusion) != (b == kConclusion);
}

// Links that can carry the unitary step (u, v) straightly.
inline std::vector<std::size_t> step_links(const SimpleNet& net, VertexId u, VertexId v) {
  std::vector<std::size_t> out;
  for (const auto& o : net.occurrences(u))
    if (straight_crossing(net.link(o.link), u, v) && std::find(out.begin(), out.end(), o.link) == out.end())
      out.push_back(o.link);
  return out;
}

// For each step k, the links usable there by some straight choice of the
// steps 0..k (forward) or k..end (backward).
inline std::vector<std::vector<std::size_t>> reachable_links(const SimpleNet& net, const Path& p, bool forward) {
  std::size_t steps = p.size() < 2 ? 0 : p.size() - 1;
  std::vector<std::vector<std::size_t>> out(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t k = forward ? t : steps - 1 - t;
    auto cand = step_links(net, p[k], p[k + 1]);
    if (t == 0) {
      out[k] = cand;
    } else {
      const auto& prev = out[forward ? k - 1 : k + 1];
      for (std::size_t l : cand)
        if (std::any_of(prev.begin(), prev.end(), [&](std::size_t x) { return x != l; })) out[k].push_back(l);
    }
    if (out[k].empty()) break;
  }
  return out;
}

}  // namespace detail

/// A straight step out of a vertex: the link crossed and the vertex reached.
struct Step {
  std::size_t link;
  VertexId to;
};

/// Every straight step from `from` through a link other than `last`.
inline std::vector<Step> straight_steps(const SimpleNet& net, VertexId from, std::optional<std::size_t> last = {}) {
  std::vector<Step> out;
  for (const auto& o : net.occurrences(from)) {
    if (last && o.link == *last) continue;
    const Link& l = net.link(o.link);
    if (l.kind == LinkKind::Star) {
      out.push_back({o.link, from});
    } else if (o.position == kConclusion) {
      for (VertexId p : l.premises) out.push_back({o.link, p});
    } else {
      out.push_back({o.link, l.conclusion});
    }
  }
  return out;
}

/// Consecutive vertices share a link.
inline bool is_path(const SimpleNet& net, const Path& p) {
  if (p.empty()) return false;
  for (VertexId v : p)
    if (!net.has_vertex(v)) return false;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    bool linked = false;
    for (const auto& o : net.occurrences(p[k]))
      if (detail::position_in(net.link(o.link), p[k + 1]) != -2) linked = true;
    if (!linked) return false;
  }
  return true;
}

/// Links crossed by a straight reading of the path (the smallest choice at
/// each step, backwards from the end), or nothing if the path is not straight.
inline std::optional<std::vector<std::size_t>> straight_links(const SimpleNet& net, const Path& p) {
  if (!is_path(net, p)) return std::nullopt;
  auto reach = detail::reachable_links(net, p, true);
  if (reach.empty()) return std::vector<std::size_t>{};
  if (reach.back().empty()) return std::nullopt;
  std::vector<std::size_t> out(reach.size());
  out.back() = *std::min_element(reach.back().begin(), reach.back().end());
  for (std::size_t k = reach.size() - 1; k-- > 0;) {
    std::size_t best = SIZE_MAX;
    for (std::size_t l : reach[k])
      if (l != out[k + 1]) best = std::min(best, l);
    out[k] = best;
  }
  return out;
}

inline bool is_straight(const SimpleNet& net, const Path& p) { return straight_links(net, p).has_value(); }

/// Straight and extendable by no vertex, at either end.
inline bool is_maximal(const SimpleNet& net, const Path& p) {
  if (!is_straight(net, p)) return false;
  if (p.size() == 1) return straight_steps(net, p[0]).empty();
  auto fwd = detail::reachable_links(net, p, true);
  auto bwd = detail::reachable_links(net, p, false);
  for (std::size_t l : fwd.back())
    if (!straight_steps(net, p.back(), l).empty()) return false;
  for (std::size_t l : bwd.front())
    if (!straight_steps(net, p.front(), l).empty()) return false;
  return true;
}

/// Every premise of every ! and ? link occurs in the path.
inline bool is_comprehensive(const SimpleNet& net, const Path& p) {
  std::set<VertexId> seen(p.begin(), p.end());
  for (const auto& l : net.links()) {
    if (!is_exponential(l.kind)) continue;
    for (VertexId v : l.premises)
      if (!seen.count(v)) return false;
  }
  return true;
}

/// Straight, maximal and clear of (co-)weakening conclusions, which a path can
/// only reach as a dead end.
inline bool is_execution_path(const SimpleNet& net, const Path& p) {
  if (!is_maximal(net, p)) return false;
  for (VertexId v : p)
    if (net.is_weakening_conclusion(v)) return false;
  return true;
}

/// How many times a walk may visit each vertex. Straight walks in a net with
/// cuts can cycle, so execution paths are only enumerated within such bounds.
struct VisitBounds {
  std::map<VertexId, std::size_t> limit;
  std::size_t fallback = 2;

  std::size_t operator()(VertexId v) const {
    auto it = limit.find(v);
    return it == limit.end() ? fallback : std::max(it->second, fallback);
  }
};

/// Execution paths (optionally only the comprehensive ones) visiting no
/// vertex more often than `bounds` allows, sorted by vertex sequence. A path
/// and its reversal are both listed. `truncated` is set when some walk was cut
/// short by the bounds. A walk whose prefix fails `keep_prefix` is abandoned.
inline std::vector<Path> enumerate_execution_paths(const SimpleNet& net, bool comprehensive_only,
                                                   const VisitBounds& bounds, bool* truncated = nullptr,
                                                   const std::function<bool(const Path&)>& keep_prefix = {}) {
  std::set<Path> found;
  struct Frame {
    std::vector<Step> options;
    std::size_t next = 0;
  };
  std::map<VertexId, std::size_t> visits;
  if (truncated) *truncated = false;
  for (const auto& [start, vx] : net.vertices()) {
    if (net.is_weakening_conclusion(start) || bounds(start) == 0) continue;
    auto first = straight_steps(net, start);
    if (first.empty()) {
      found.insert(Path{start});
      continue;
    }
    Path walk{start};
    visits.clear();
    visits[start] = 1;
    std::vector<Frame> stack;
    stack.push_back({first});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == f.options.size()) {
        stack.pop_back();
        --visits[walk.back()];
        walk.pop_back();
        continue;
      }
      Step s = f.options[f.next++];
      // a maximal path is dead at its start for every reading
      if (stack.size() == 1 && !straight_steps(net, start, s.link).empty()) continue;
      if (visits[s.to] >= bounds(s.to)) {
        if (truncated) *truncated = true;
        continue;
      }
      if (walk.size() >= kMaxPathLength)
        throw PathLimitExceeded("straight path longer than " + std::to_string(kMaxPathLength) + " vertices");
      walk.push_back(s.to);
      if (keep_prefix && !keep_prefix(walk)) {
        walk.pop_back();
        continue;
      }
      auto more = straight_steps(net, s.to, s.link);
      if (more.empty()) {
        found.insert(walk);
        walk.pop_back();
        continue;
      }
      ++visits[s.to];
      stack.push_back({std::move(more)});
    }
  }
  std::vector<Path> out;
  for (const auto& p : found) {
    if (!is_execution_path(net, p)) continue;
    if (comprehensive_only && !is_comprehensive(net, p)) continue;
    out.push_back(p);
  }
  return out;
}

/// Reads as π :: π⁻ around a ⋆ bounce in the middle.
inline bool is_palindrome(const SimpleNet& net, const Path& p) {
  if (p.size() < 2 || p.size() % 2) return false;
  for (std::size_t i = 0; i < p.size() / 2; ++i)
    if (p[i] != p[p.size() - 1 - i]) return false;
  VertexId mid = p[p.size() / 2];
  for (const auto& o : net.occurrences(mid))
    if (net.link(o.link).kind == LinkKind::Star) return true;
  return false;
}

}  // namespace rgoi
