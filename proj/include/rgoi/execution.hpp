#pragma once

// The execution formula, and enumeration of the execution paths that can
// still matter to it.
//
// Straight walks can cycle through cuts, so a net may have infinitely many
// execution paths. Almost all of them die: their weight is 0 and they have no
// residual. Both properties are inherited by extensions (0 absorbs, and a
// crossing of a prefix is a crossing of the whole path), so a walk can be
// abandoned as soon as its prefix is dead in the chosen sense.

#include <functional>
#include <vector>

#include "rgoi/residual.hpp"
#include "rgoi/weight.hpp"

namespace rgoi {

enum class Liveness {
  Regular,               // the prefix has non-zero weight
  RegularOrPersistent,   // non-zero weight, or a residual in some normal form
};

/// Execution paths all of whose prefixes are live, within `bounds` (by
/// default `visit_bounds(net)`).
inline std::vector<Path> enumerate_live_paths(const SimpleNet& net, bool comprehensive_only, Liveness live,
                                              bool* truncated = nullptr, const VisitBounds* bounds = nullptr) {
  auto keep = [&](const Path& prefix) {
    if (!weight_path(net, prefix, Weighting::Pruned).is_zero()) return true;
    if (live == Liveness::Regular) return false;
    return static_cast<bool>(persistent_paths(net, {prefix}, chooser(Strategy::SmallestCut), true).at(0));
  };
  return enumerate_execution_paths(net, comprehensive_only, bounds ? *bounds : visit_bounds(net), truncated, keep);
}

/// Ex(N): the sum of ⟦π⟧ over the execution comprehensive paths. Paths of
/// weight 0 contribute nothing and are not enumerated.
inline WeightSum execution(const SimpleNet& net, Weighting mode = Weighting::Exhaustive) {
  WeightSum out;
  for (const auto& p : enumerate_live_paths(net, true, Liveness::Regular)) out.add(weight_path(net, p, mode));
  return out;
}

/// Ex of a sum: over every path of every addend.
inline WeightSum execution(const NetSum& sum, Weighting mode = Weighting::Exhaustive) {
  WeightSum out;
  for (const auto& n : sum.addends) out.add(execution(n, mode));
  return out;
}

}  // namespace rgoi
