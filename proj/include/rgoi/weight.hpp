#pragma once

// Permuted weighting of paths and the execution formula.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rgoi/path.hpp"
#include "rgoi/permutation.hpp"
#include "rgoi/word.hpp"

namespace rgoi {

class NotUnitaryStraight : public PathError {
 public:
  using PathError::PathError;
};

/// One permutation per ! link (keyed by link index). Links left out use the
/// identity.
using ResourcePermutation = std::map<std::size_t, Permutation>;

/// Weight of crossing `link` from u to v.
inline Atom crossing_weight(const SimpleNet& net, std::size_t link, VertexId u, VertexId v,
                            const ResourcePermutation& sigma = {}) {
  const Link& l = net.link(link);
  if (!detail::straight_crossing(l, u, v))
    throw NotUnitaryStraight("(" + net.label(u) + ", " + net.label(v) + ") does not cross a " + to_string(l.kind) +
                             " link straightly");
  if (l.kind == LinkKind::Star) return Atom::star();
  bool up = l.conclusion == u;  // conclusion to premise: the inverse of the way down
  std::size_t i = detail::premise_index(l, up ? v : u);
  Atom a;
  switch (l.kind) {
    case LinkKind::ImpPlus:
    case LinkKind::ImpMinus:
      a = i == 0 ? Atom::p() : Atom::q();
      break;
    case LinkKind::Why:
      a = Atom::e(static_cast<std::uint32_t>(i + 1));
      break;
    case LinkKind::Bang: {
      auto it = sigma.find(link);
      std::size_t j = it == sigma.end() ? i : it->second.at(i);
      a = Atom::e(static_cast<std::uint32_t>(j + 1));
      break;
    }
    case LinkKind::Star:
      break;
  }
  return up ? a.inverse() : a;
}

/// w^σ((u, v)) for a unitary straight path.
inline Word weight_unitary(const SimpleNet& net, VertexId u, VertexId v, const ResourcePermutation& sigma = {}) {
  auto links = straight_links(net, {u, v});
  if (!links) throw NotUnitaryStraight("(" + net.label(u) + ", " + net.label(v) + ") is not straight");
  return Word{false, {crossing_weight(net, links->at(0), u, v, sigma)}};
}

/// w^σ(π), not normalized.
inline Word permuted_weight(const SimpleNet& net, const Path& path, const ResourcePermutation& sigma) {
  auto links = straight_links(net, path);
  if (!links) throw NotUnitaryStraight("path " + to_string(net, path) + " is not straight");
  Word w;
  for (std::size_t k = 0; k < links->size(); ++k)
    w.atoms.push_back(crossing_weight(net, (*links)[k], path[k], path[k + 1], sigma));
  return w;
}

/// Indices of the ! links of a net.
inline std::vector<std::size_t> bang_links(const SimpleNet& net) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < net.links().size(); ++i)
    if (net.link(i).kind == LinkKind::Bang) out.push_back(i);
  return out;
}

/// |S_N|: the product of n! over the ! links.
inline std::size_t permutation_space(const SimpleNet& net) {
  std::size_t n = 1;
  for (std::size_t l : bang_links(net)) n *= factorial(net.link(l).premises.size());
  return n;
}

enum class Weighting {
  Exhaustive,  // every resource permutation in turn
  Pruned,      // branch on a ! link's permutation where the path first needs it; drop branches at 0
};

namespace detail {

// Depth-first over the steps, choosing the permutation of a ! link at its
// first crossing and abandoning a branch as soon as the word is 0.
inline void pruned_weight(const SimpleNet& net, const Path& path, const std::vector<std::size_t>& links,
                          std::size_t k, std::vector<Atom> canon, ResourcePermutation& sigma,
                          std::size_t free_multiplicity, WeightSum& out) {
  for (; k < links.size(); ++k) {
    const Link& l = net.link(links[k]);
    if (l.kind == LinkKind::Bang && l.premises.size() > 1 && !sigma.count(links[k])) {
      std::size_t factor = factorial(l.premises.size());
      for (const auto& p : all_permutations(l.premises.size())) {
        sigma[links[k]] = p;
        std::vector<Atom> c = canon;
        if (push_atom(c, crossing_weight(net, links[k], path[k], path[k + 1], sigma)))
          pruned_weight(net, path, links, k + 1, std::move(c), sigma, free_multiplicity / factor, out);
      }
      sigma.erase(links[k]);
      return;
    }
    if (!push_atom(canon, crossing_weight(net, links[k], path[k], path[k + 1], sigma))) return;
  }
  out.terms[Word{false, std::move(canon)}] += free_multiplicity;
}

}  // namespace detail

/// ⟦π⟧: the multiset of non-zero canonical w^σ(π) over all resource
/// permutations σ.
inline WeightSum weight_path(const SimpleNet& net, const Path& path, Weighting mode = Weighting::Exhaustive) {
  auto links = straight_links(net, path);
  if (!links) throw NotUnitaryStraight("path " + to_string(net, path) + " is not straight");
  WeightSum out;
  auto bangs = bang_links(net);
  if (mode == Weighting::Pruned) {
    ResourcePermutation sigma;
    detail::pruned_weight(net, path, *links, 0, {}, sigma, permutation_space(net), out);
    return out;
  }
  std::vector<std::vector<Permutation>> choices;
  for (std::size_t l : bangs) choices.push_back(all_permutations(net.link(l).premises.size()));
  std::vector<std::size_t> digit(bangs.size(), 0);
  for (;;) {
    ResourcePermutation sigma;
    for (std::size_t b = 0; b < bangs.size(); ++b) sigma[bangs[b]] = choices[b][digit[b]];
    std::vector<Atom> canon;
    bool alive = true;
    for (std::size_t k = 0; k < links->size() && alive; ++k)
      alive = push_atom(canon, crossing_weight(net, (*links)[k], path[k], path[k + 1], sigma));
    if (alive) out.terms[Word{false, std::move(canon)}] += 1;
    std::size_t b = 0;
    while (b < bangs.size() && ++digit[b] == choices[b].size()) digit[b++] = 0;
    if (b == bangs.size()) break;
  }
  return out;
}

inline bool is_regular(const SimpleNet& net, const Path& path, Weighting mode = Weighting::Exhaustive) {
  return !weight_path(net, path, mode).is_zero();
}

}  // namespace rgoi
