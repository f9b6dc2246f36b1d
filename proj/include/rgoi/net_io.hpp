#pragma once

// JSON interchange and Graphviz export for nets.
//
//   { "vertices": [{"id": 1, "type": "!(* -> *)", "name": "v3"}],
//     "links": [{"kind": "bang", "premises": [4, 5], "conclusion": 1}],
//     "conclusions": [7] }
//
// Types use the term syntax for formulas (`A -> B` is !A ⊸ B) with a leading
// `!` on exponential vertices. A sum is {"addends": [net, ...]}.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

#include "rgoi/net.hpp"
#include "rgoi/parse.hpp"

namespace rgoi {

using json = nlohmann::json;

inline std::string type_to_json(const VertexType& t) {
  std::string s = t.type.str({true});
  if (!t.bang) return s;
  return t.type.is_ground() ? "!" + s : "!(" + s + ")";
}

inline VertexType type_from_json(const std::string& s) {
  std::size_t i = s.find_first_not_of(" \t");
  if (i != std::string::npos && s[i] == '!') return VertexType::banged(parse_type(s.substr(i + 1)));
  return VertexType::plain(parse_type(s));
}

inline LinkKind link_kind_from_string(const std::string& s) {
  for (LinkKind k : {LinkKind::Star, LinkKind::ImpPlus, LinkKind::ImpMinus, LinkKind::Bang, LinkKind::Why})
    if (s == to_string(k)) return k;
  throw NetError("unknown link kind '" + s + "'");
}

inline json to_json(const SimpleNet& net) {
  json vs = json::array(), ls = json::array();
  for (const auto& [id, v] : net.vertices()) {
    json x = {{"id", id}, {"type", type_to_json(v.type)}};
    if (!v.name.empty()) x["name"] = v.name;
    vs.push_back(std::move(x));
  }
  for (const auto& l : net.links())
    ls.push_back({{"kind", to_string(l.kind)}, {"premises", l.premises}, {"conclusion", l.conclusion}});
  return {{"vertices", vs}, {"links", ls}, {"conclusions", net.conclusions()}};
}

inline json to_json(const NetSum& sum) {
  json as = json::array();
  for (const auto& n : sum.addends) as.push_back(to_json(n));
  return {{"addends", as}};
}

/// Reads one simple net. A "conclusions" entry, when present, must agree with
/// the links.
inline SimpleNet net_from_json(const json& j) {
  SimpleNet net;
  try {
    for (const auto& v : j.at("vertices"))
      net.add_vertex(v.at("id").get<VertexId>(), type_from_json(v.at("type").get<std::string>()),
                     v.value("name", std::string{}));
    for (const auto& l : j.at("links"))
      net.add_link({link_kind_from_string(l.at("kind").get<std::string>()),
                    l.value("premises", std::vector<VertexId>{}), l.at("conclusion").get<VertexId>()});
  } catch (const json::exception& e) {
    throw NetError(std::string("malformed net: ") + e.what());
  } catch (const ParseError& e) {
    throw NetError(std::string("malformed vertex type: ") + e.what());
  }
  if (j.contains("conclusions")) {
    auto declared = j.at("conclusions").get<std::vector<VertexId>>();
    std::sort(declared.begin(), declared.end());
    if (declared != net.conclusions()) throw NetError("declared conclusions do not match the links");
  }
  return net;
}

/// Reads {"addends": [...]} or a bare simple net.
inline NetSum net_sum_from_json(const json& j) {
  NetSum s;
  if (j.contains("addends")) {
    for (const auto& a : j.at("addends")) s.addends.push_back(net_from_json(a));
  } else {
    s.addends.push_back(net_from_json(j));
  }
  std::set<VertexId> seen;
  for (const auto& n : s.addends)
    for (const auto& [id, v] : n.vertices())
      if (!seen.insert(id).second) throw NetError("addends share vertex " + std::to_string(id));
  return s;
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace detail

/// Graphviz: links are nodes, vertices are edges labelled with name and type.
/// An edge points away from the link that has the vertex as conclusion; a cut
/// points both ways and a net conclusion ends in a point node.
inline std::string to_dot(const SimpleNet& net, const std::string& graph_name = "net", Notation n = {}) {
  std::ostringstream o;
  o << "digraph " << graph_name << " {\n  node [shape=circle, fontsize=11];\n  edge [fontsize=9];\n";
  for (std::size_t i = 0; i < net.links().size(); ++i)
    o << "  l" << i << " [label=\"" << detail::dot_escape(symbol(net.link(i).kind, n)) << "\"];\n";
  for (const auto& [id, v] : net.vertices()) {
    std::string label = detail::dot_escape(net.label(id) + " : " + v.type.str(n));
    if (v.occurrences.size() == 1) {
      const auto& a = v.occurrences[0];
      o << "  c" << id << " [shape=point];\n";
      o << "  l" << a.link << " -> c" << id << " [label=\"" << label << "\", dir="
        << (a.position == kConclusion ? "forward" : "none") << "];\n";
      continue;
    }
    if (v.occurrences.size() != 2) continue;
    const auto& a = v.occurrences[0];
    const auto& b = v.occurrences[1];
    bool ca = a.position == kConclusion, cb = b.position == kConclusion;
    std::size_t from = ca || !cb ? a.link : b.link, to = ca || !cb ? b.link : a.link;
    const char* dir = ca && cb ? "both" : (ca || cb ? "forward" : "none");
    o << "  l" << from << " -> l" << to << " [label=\"" << label << "\", dir=" << dir << "];\n";
  }
  o << "}\n";
  return o.str();
}

inline std::string to_dot(const NetSum& sum, Notation n = {}) {
  if (sum.is_zero()) return "// 0\n";
  std::string out;
  for (std::size_t i = 0; i < sum.addends.size(); ++i) out += to_dot(sum.addends[i], "addend" + std::to_string(i), n);
  return out;
}

}  // namespace rgoi
