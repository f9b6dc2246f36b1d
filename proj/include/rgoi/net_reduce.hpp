#pragma once

// Cut elimination on simple nets: the linear implication step and the
// exponential step, which sums over the permutations of the ! premises.

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rgoi/net.hpp"
#include "rgoi/permutation.hpp"

namespace rgoi {

enum class RedexKind { Imp, Exp };

/// A cut and the two links having it as conclusion. `positive` is the ⊸ or !
/// link, `negative` the ⊸⁻ or ? link (indices into SimpleNet::links()).
struct RedexRef {
  VertexId cut;
  RedexKind kind;
  std::size_t positive;
  std::size_t negative;

  friend bool operator==(const RedexRef& a, const RedexRef& b) {
    return a.cut == b.cut && a.kind == b.kind && a.positive == b.positive && a.negative == b.negative;
  }
};

inline const char* to_string(RedexKind k) { return k == RedexKind::Imp ? "ImpCut" : "ExpCut"; }

class InvalidRedex : public NetError {
 public:
  using NetError::NetError;
};

/// All cuts, by increasing cut id.
inline std::vector<RedexRef> find_redexes(const SimpleNet& net) {
  std::vector<RedexRef> out;
  for (const auto& [id, v] : net.vertices()) {
    if (v.occurrences.size() != 2) continue;
    const auto& a = v.occurrences[0];
    const auto& b = v.occurrences[1];
    if (a.position != kConclusion || b.position != kConclusion) continue;
    LinkKind ka = net.link(a.link).kind, kb = net.link(b.link).kind;
    if (ka == LinkKind::ImpPlus && kb == LinkKind::ImpMinus) out.push_back({id, RedexKind::Imp, a.link, b.link});
    else if (ka == LinkKind::ImpMinus && kb == LinkKind::ImpPlus) out.push_back({id, RedexKind::Imp, b.link, a.link});
    else if (ka == LinkKind::Bang && kb == LinkKind::Why) out.push_back({id, RedexKind::Exp, a.link, b.link});
    else if (ka == LinkKind::Why && kb == LinkKind::Bang) out.push_back({id, RedexKind::Exp, b.link, a.link});
  }
  return out;
}

inline bool is_normal(const SimpleNet& net) { return find_redexes(net).empty(); }

/// One addend of a reduct: the net, where every surviving old vertex went
/// (old id -> new id), and for an exponential step the permutation used.
struct Reduct {
  SimpleNet net;
  std::map<VertexId, VertexId> provenance;
  Permutation sigma;
};

namespace detail {

inline void check_redex(const SimpleNet& net, const RedexRef& r) {
  if (r.positive >= net.links().size() || r.negative >= net.links().size())
    throw InvalidRedex("redex refers to a missing link");
  const Link& p = net.link(r.positive);
  const Link& n = net.link(r.negative);
  bool kinds = r.kind == RedexKind::Imp ? (p.kind == LinkKind::ImpPlus && n.kind == LinkKind::ImpMinus)
                                        : (p.kind == LinkKind::Bang && n.kind == LinkKind::Why);
  if (!kinds || p.conclusion != r.cut || n.conclusion != r.cut)
    throw InvalidRedex("no " + std::string(to_string(r.kind)) + " at vertex " + std::to_string(r.cut));
}

// Rebuilds `net` without the redex links and the cut, identifying each vertex
// with `rep[v]` (or itself). Fresh ids come from `alloc` unless `keep_ids`.
inline Reduct rebuild(const SimpleNet& net, const RedexRef& r, const std::map<VertexId, VertexId>& rep,
                      const std::map<VertexId, std::string>& merged_names, bool keep_ids, IdAllocator& alloc) {
  auto find = [&](VertexId v) {
    auto it = rep.find(v);
    return it == rep.end() ? v : it->second;
  };
  // representatives still linked somewhere outside the redex
  std::map<VertexId, bool> live;
  for (std::size_t i = 0; i < net.links().size(); ++i) {
    if (i == r.positive || i == r.negative) continue;
    const Link& l = net.link(i);
    for (VertexId p : l.premises) live[find(p)] = true;
    live[find(l.conclusion)] = true;
  }
  Reduct out;
  std::map<VertexId, VertexId> fresh;
  for (const auto& [id, v] : net.vertices()) {
    if (id == r.cut) continue;
    VertexId root = find(id);
    if (!live.count(root)) continue;
    auto it = fresh.find(root);
    if (it == fresh.end()) {
      VertexId nid = keep_ids ? root : alloc.fresh();
      it = fresh.emplace(root, nid).first;
      auto nm = merged_names.find(root);
      out.net.add_vertex(nid, net.type(root), nm != merged_names.end() ? nm->second : net.vertex(root).name);
    }
    out.provenance[id] = it->second;
  }
  for (std::size_t i = 0; i < net.links().size(); ++i) {
    if (i == r.positive || i == r.negative) continue;
    Link l = net.link(i);
    for (auto& p : l.premises) p = fresh.at(find(p));
    l.conclusion = fresh.at(find(l.conclusion));
    out.net.add_link(std::move(l));
  }
  return out;
}

inline std::string join_names(const SimpleNet& net, VertexId kept, VertexId other) {
  const std::string& a = net.vertex(kept).name;
  const std::string& b = net.vertex(other).name;
  if (a.empty() || b.empty()) return a.empty() ? b : a;
  return a + "≡" + b;
}

}  // namespace detail

/// One reduction step on `redex`. A linear implication cut gives one addend
/// that keeps the vertex ids (⊸ premises absorb the ⊸⁻ ones). An exponential
/// cut with n = m gives n! addends, one per σ in lexicographic order, where
/// the i-th ! premise is identified with the σ(i)-th ? premise; the first
/// addend keeps the old ids, the others are fresh copies drawn from `alloc`.
/// With n ≠ m the result is empty (0).
inline std::vector<Reduct> reduce_net_step(const SimpleNet& net, const RedexRef& redex, IdAllocator& alloc) {
  detail::check_redex(net, redex);
  alloc.reserve_above(net.max_id());
  const Link& pos = net.link(redex.positive);
  const Link& neg = net.link(redex.negative);
  std::vector<Reduct> out;
  if (redex.kind == RedexKind::Imp) {
    std::map<VertexId, VertexId> rep;
    std::map<VertexId, std::string> names;
    for (int i = 0; i < 2; ++i) {
      VertexId keep = pos.premises[i], other = neg.premises[i];
      if (keep != other) rep[other] = keep;
      names[keep] = detail::join_names(net, keep, other);
    }
    out.push_back(detail::rebuild(net, redex, rep, names, true, alloc));
    return out;
  }
  std::size_t n = pos.premises.size();
  if (n != neg.premises.size()) return out;
  for (const auto& sigma : all_permutations(n)) {
    std::map<VertexId, VertexId> rep;
    std::map<VertexId, std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      VertexId keep = neg.premises[sigma[i]], other = pos.premises[i];
      if (keep != other) rep[other] = keep;
      names[keep] = detail::join_names(net, keep, other);
    }
    out.push_back(detail::rebuild(net, redex, rep, names, out.empty(), alloc));
    out.back().sigma = sigma;
  }
  return out;
}

inline NetSum reduce_net_step(const SimpleNet& net, const RedexRef& redex) {
  IdAllocator alloc = IdAllocator::above(net);
  NetSum s;
  for (auto& r : reduce_net_step(net, redex, alloc)) s.addends.push_back(std::move(r.net));
  return s;
}

/// Which cut to reduce next in a simple net.
enum class Strategy { SmallestCut, LargestCut };

inline std::optional<RedexRef> pick_redex(const SimpleNet& net, Strategy s = Strategy::SmallestCut) {
  auto rs = find_redexes(net);
  if (rs.empty()) return std::nullopt;
  return s == Strategy::SmallestCut ? rs.front() : rs.back();
}

/// Observer for normalization: sees every simple net that gets reduced, the
/// redex chosen and the reducts.
using StepObserver = std::function<void(const SimpleNet&, const RedexRef&, const std::vector<Reduct>&)>;

/// Normal form of a sum, reducing addend by addend (depth first, reducts in
/// σ order) with the given strategy.
inline NetSum normalize_net(const NetSum& sum, Strategy strategy = Strategy::SmallestCut,
                            const StepObserver& observe = {}) {
  IdAllocator alloc = IdAllocator::above(sum);
  NetSum out;
  std::vector<SimpleNet> stack(sum.addends.rbegin(), sum.addends.rend());
  while (!stack.empty()) {
    SimpleNet n = std::move(stack.back());
    stack.pop_back();
    auto r = pick_redex(n, strategy);
    if (!r) {
      out.addends.push_back(std::move(n));
      continue;
    }
    auto reducts = reduce_net_step(n, *r, alloc);
    if (observe) observe(n, *r, reducts);
    for (auto it = reducts.rbegin(); it != reducts.rend(); ++it) stack.push_back(std::move(it->net));
  }
  return out;
}

inline NetSum normalize_net(const SimpleNet& net, Strategy strategy = Strategy::SmallestCut,
                            const StepObserver& observe = {}) {
  return normalize_net(NetSum{{net}}, strategy, observe);
}

}  // namespace rgoi
