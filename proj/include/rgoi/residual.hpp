#pragma once

// Residuals of paths under reduction steps, and persistence.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rgoi/net_reduce.hpp"
#include "rgoi/path.hpp"

namespace rgoi {

class NotLongEnough : public PathError {
 public:
  using PathError::PathError;
};

/// A crossing of a redex: the vertex before the cut, the cut, the vertex after.
struct Crossing {
  VertexId from;
  VertexId cut;
  VertexId to;
};

/// π₀ :: χ₁ :: π₁ :: … :: χ_k :: π_k, with k + 1 segments (possibly empty)
/// around k crossings.
struct RedexCrossingForm {
  std::vector<Path> segments;
  std::vector<Crossing> crossings;

  Path concat() const {
    Path out = segments.at(0);
    for (std::size_t l = 0; l < crossings.size(); ++l) {
      out.push_back(crossings[l].from);
      out.push_back(crossings[l].cut);
      out.push_back(crossings[l].to);
      out.insert(out.end(), segments[l + 1].begin(), segments[l + 1].end());
    }
    return out;
  }
};

/// Splits the path around each visit of the redex cut. Every visit must come
/// from a premise of one of the two links and leave by a premise of the other.
inline RedexCrossingForm rcf(const SimpleNet& net, const Path& path, const RedexRef& redex) {
  detail::check_redex(net, redex);
  if (path.empty() || path.front() == redex.cut || path.back() == redex.cut)
    throw NotLongEnough("path starts or ends at the cut " + net.label(redex.cut));
  const Link& pos = net.link(redex.positive);
  const Link& neg = net.link(redex.negative);
  auto side = [&](VertexId v) {
    bool p = std::find(pos.premises.begin(), pos.premises.end(), v) != pos.premises.end();
    bool n = std::find(neg.premises.begin(), neg.premises.end(), v) != neg.premises.end();
    return p == n ? 0 : (p ? 1 : -1);
  };
  RedexCrossingForm out;
  out.segments.emplace_back();
  std::size_t k = 0;
  while (k < path.size()) {
    if (k + 1 < path.size() && path[k + 1] == redex.cut) {
      if (k + 2 >= path.size()) throw NotLongEnough("path ends at the cut");
      VertexId a = path[k], b = path[k + 2];
      int sa = side(a), sb = side(b);
      if (sa == 0 || sb == 0 || sa == sb)
        throw PathError("path crosses the cut " + net.label(redex.cut) + " without passing from one link to the other");
      out.crossings.push_back({a, redex.cut, b});
      out.segments.emplace_back();
      k += 3;
      if (k < path.size() && path[k] == redex.cut) throw PathError("consecutive crossings share the cut");
      continue;
    }
    out.segments.back().push_back(path[k]);
    ++k;
  }
  return out;
}

/// A residual path and the index of the reduct addend it lives in.
struct PathResidual {
  Path path;
  std::size_t addend;

  friend bool operator==(const PathResidual& a, const PathResidual& b) {
    return a.addend == b.addend && a.path == b.path;
  }
};

/// A sum of residual paths; empty is 0.
using PathSum = std::vector<PathResidual>;

namespace detail {

// Whether the crossing survives in an addend: same position for a linear
// implication cut, σ(i) = j for an exponential one.
inline bool crossing_survives(const SimpleNet& net, const RedexRef& r, const Crossing& c, const Permutation& sigma) {
  const Link& pos = net.link(r.positive);
  const Link& neg = net.link(r.negative);
  bool forward = std::find(pos.premises.begin(), pos.premises.end(), c.from) != pos.premises.end();
  std::size_t i = premise_index(pos, forward ? c.from : c.to);
  std::size_t j = premise_index(neg, forward ? c.to : c.from);
  if (r.kind == RedexKind::Imp) return i == j;
  return pos.premises.size() == neg.premises.size() && sigma.at(i) == j;
}

inline VertexId follow(const std::map<VertexId, VertexId>& provenance, VertexId v) {
  auto it = provenance.find(v);
  if (it == provenance.end()) throw PathError("vertex " + std::to_string(v) + " has no residual");
  return it->second;
}

}  // namespace detail

/// Residual of a path under the step that produced `reducts` from `net`.
/// Each crossing collapses to its merged vertex in the addends where it
/// survives; the other vertices follow the addend's provenance map.
inline PathSum residual(const SimpleNet& net, const Path& path, const RedexRef& redex,
                        const std::vector<Reduct>& reducts) {
  RedexCrossingForm f = rcf(net, path, redex);
  PathSum out;
  for (std::size_t a = 0; a < reducts.size(); ++a) {
    const Reduct& r = reducts[a];
    bool alive = true;
    for (const auto& c : f.crossings) alive = alive && detail::crossing_survives(net, redex, c, r.sigma);
    if (!alive) continue;
    Path p;
    for (std::size_t l = 0; l < f.segments.size(); ++l) {
      for (VertexId v : f.segments[l]) p.push_back(detail::follow(r.provenance, v));
      if (l < f.crossings.size()) p.push_back(detail::follow(r.provenance, f.crossings[l].from));
    }
    out.push_back({std::move(p), a});
  }
  return out;
}

inline PathSum residual(const SimpleNet& net, const Path& path, const RedexRef& redex) {
  IdAllocator alloc = IdAllocator::above(net);
  return residual(net, path, redex, reduce_net_step(net, redex, alloc));
}

/// Chooses the redex to reduce in a tracked net; `step` counts the steps
/// already taken along the current branch.
using RedexChooser = std::function<RedexRef(const SimpleNet&, std::size_t step)>;

inline RedexChooser chooser(Strategy s) {
  return [s](const SimpleNet& n, std::size_t) { return *pick_redex(n, s); };
}

/// For each path, whether some residual of it reaches a normal form when the
/// net is reduced with `choose`. Addends holding no residual are not reduced.
/// A residual that starts or ends at the cut being reduced is lost, unless
/// `stop_at_cut` is set, in which case it counts as reaching the end.
inline std::vector<bool> persistent_paths(const SimpleNet& net, const std::vector<Path>& paths,
                                          const RedexChooser& choose, bool stop_at_cut = false) {
  struct Node {
    SimpleNet net;
    std::vector<std::pair<std::size_t, Path>> tracked;  // origin index, residual
    std::size_t depth;
  };
  std::vector<bool> out(paths.size(), false);
  std::vector<Node> stack;
  {
    Node root{net, {}, 0};
    for (std::size_t i = 0; i < paths.size(); ++i) root.tracked.emplace_back(i, paths[i]);
    stack.push_back(std::move(root));
  }
  IdAllocator alloc = IdAllocator::above(net);
  while (!stack.empty()) {
    Node n = std::move(stack.back());
    stack.pop_back();
    if (n.tracked.empty()) continue;
    if (is_normal(n.net)) {
      for (const auto& t : n.tracked) out[t.first] = true;
      continue;
    }
    RedexRef r = choose(n.net, n.depth);
    auto reducts = reduce_net_step(n.net, r, alloc);
    std::vector<Node> next;
    for (auto& x : reducts) next.push_back({std::move(x.net), {}, n.depth + 1});
    std::vector<Reduct> views;  // provenance and σ only
    for (const auto& x : reducts) views.push_back({SimpleNet{}, x.provenance, x.sigma});
    for (const auto& [origin, p] : n.tracked) {
      if (out[origin]) continue;
      PathSum s;
      try {
        s = residual(n.net, p, r, views);
      } catch (const NotLongEnough&) {
        if (stop_at_cut) out[origin] = true;
        continue;
      }
      for (auto& x : s) next[x.addend].tracked.emplace_back(origin, std::move(x.path));
    }
    for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(std::move(*it));
  }
  return out;
}

inline std::vector<bool> persistent_paths(const SimpleNet& net, const std::vector<Path>& paths,
                                          Strategy s = Strategy::SmallestCut) {
  return persistent_paths(net, paths, chooser(s));
}

inline bool is_persistent(const SimpleNet& net, const Path& path, Strategy s = Strategy::SmallestCut) {
  return persistent_paths(net, {path}, s).at(0);
}

namespace detail {

// Largest number of visits a persistent path can make to each vertex: two in
// a normal form, the residual's count for a vertex that survives a step, and
// the sum over the merged vertices for the cut.
inline std::map<VertexId, std::size_t> persistent_visits(const SimpleNet& net, IdAllocator& alloc) {
  std::map<VertexId, std::size_t> out;
  auto r = pick_redex(net);
  if (!r) {
    for (const auto& [id, v] : net.vertices()) out[id] = 2;
    return out;
  }
  const Link& pos = net.link(r->positive);
  for (const auto& x : reduce_net_step(net, *r, alloc)) {
    auto sub = persistent_visits(x.net, alloc);
    auto at = [&](VertexId v) {
      auto it = sub.find(v);
      return it == sub.end() ? std::size_t{0} : it->second;
    };
    for (const auto& [old, now] : x.provenance) out[old] = std::max(out[old], at(now));
    std::size_t cut = 0;
    for (VertexId p : pos.premises) {
      auto it = x.provenance.find(p);
      if (it != x.provenance.end()) cut += at(it->second);
    }
    out[r->cut] = std::max(out[r->cut], cut);
  }
  return out;
}

}  // namespace detail

/// Visit bounds large enough for every persistent path of the net.
inline VisitBounds visit_bounds(const SimpleNet& net) {
  IdAllocator alloc = IdAllocator::above(net);
  return VisitBounds{detail::persistent_visits(net, alloc)};
}

/// Execution paths within `visit_bounds(net)`.
inline std::vector<Path> enumerate_execution_paths(const SimpleNet& net, bool comprehensive_only = false) {
  return enumerate_execution_paths(net, comprehensive_only, visit_bounds(net));
}

}  // namespace rgoi
