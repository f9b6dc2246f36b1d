#pragma once

// Structural equality of nets up to renaming of vertices.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rgoi/net.hpp"

namespace rgoi {

namespace detail {

// Serializes the component of `start`, numbering vertices in BFS order and
// visiting the links of a vertex by (kind, position).
inline std::string serialize_from(const SimpleNet& net, VertexId start, std::set<VertexId>* component) {
  std::map<VertexId, std::size_t> index;
  std::vector<VertexId> order;
  std::vector<bool> seen_link(net.links().size(), false);
  std::deque<VertexId> queue;
  auto number = [&](VertexId v) {
    if (index.emplace(v, order.size()).second) {
      order.push_back(v);
      queue.push_back(v);
    }
  };
  number(start);
  std::string links;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    auto occ = net.occurrences(v);
    std::sort(occ.begin(), occ.end(), [&](const Occurrence& a, const Occurrence& b) {
      auto ka = net.link(a.link).kind, kb = net.link(b.link).kind;
      return ka != kb ? ka < kb : a.position < b.position;
    });
    for (const auto& o : occ) {
      if (seen_link[o.link]) continue;
      seen_link[o.link] = true;
      const Link& l = net.link(o.link);
      number(l.conclusion);
      for (VertexId p : l.premises) number(p);
      links += to_string(l.kind);
      links += "(";
      for (VertexId p : l.premises) links += std::to_string(index[p]) + ",";
      links += ">" + std::to_string(index[l.conclusion]) + ")";
    }
  }
  std::string types;
  for (VertexId v : order) types += net.type(v).str({true}) + ";";
  if (component) component->insert(order.begin(), order.end());
  return types + "|" + links;
}

}  // namespace detail

/// A string that is equal for two nets iff they are isomorphic (same links,
/// types and premise orders, up to vertex ids).
inline std::string canonical_form(const SimpleNet& net) {
  std::vector<std::string> parts;
  std::set<VertexId> done;
  for (const auto& [id, v] : net.vertices()) {
    if (done.count(id)) continue;
    std::set<VertexId> component;
    std::string best = detail::serialize_from(net, id, &component);
    for (VertexId s : component) best = std::min(best, detail::serialize_from(net, s, nullptr));
    done.insert(component.begin(), component.end());
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p + "\n";
  return out;
}

inline bool isomorphic(const SimpleNet& a, const SimpleNet& b) {
  return a.size() == b.size() && a.links().size() == b.links().size() && canonical_form(a) == canonical_form(b);
}

/// Sums compared as multisets of isomorphism classes.
inline bool isomorphic(const NetSum& a, const NetSum& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::string> x, y;
  for (const auto& n : a.addends) x.push_back(canonical_form(n));
  for (const auto& n : b.addends) y.push_back(canonical_form(n));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace rgoi
