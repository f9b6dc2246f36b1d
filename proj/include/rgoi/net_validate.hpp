#pragma once

// Structural checks on simple nets.

#include <string>
#include <vector>

#include "rgoi/net.hpp"

namespace rgoi {

enum class Violation {
  UnknownVertex,      // a link mentions a vertex that is not declared
  Arity,              // ⋆ with premises, ⊸/⊸⁻ without exactly two
  ConclusionInPremises,
  Unlinked,           // clause 1: vertex in no link
  OverLinked,         // clause 1: vertex in more than two links
  NoConclusion,       // clause 2
  ClosedNotOut,       // clause 2: the single conclusion is in
  SamePolarity,       // clause 3
  Typing,             // a link's types disagree
  Exponentials,       // closed nets: a !/? conclusion that is neither ⊸ premise 0 nor an exponential cut
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::UnknownVertex:
      return "unknown-vertex";
    case Violation::Arity:
      return "arity";
    case Violation::ConclusionInPremises:
      return "conclusion-in-premises";
    case Violation::Unlinked:
      return "unlinked";
    case Violation::OverLinked:
      return "over-linked";
    case Violation::NoConclusion:
      return "no-conclusion";
    case Violation::ClosedNotOut:
      return "closed-not-out";
    case Violation::SamePolarity:
      return "same-polarity";
    case Violation::Typing:
      return "typing";
    case Violation::Exponentials:
      return "exponentials";
  }
  return "?";
}

struct Diagnostic {
  Violation kind;
  std::string message;
};

/// Every violated pre-net condition, plus the exponential-conclusion property
/// for closed nets. An empty result means the net is well formed.
inline std::vector<Diagnostic> validate_net(const SimpleNet& net) {
  std::vector<Diagnostic> out;
  auto report = [&](Violation k, std::string m) { out.push_back({k, std::move(m)}); };

  for (std::size_t i = 0; i < net.links().size(); ++i) {
    const Link& l = net.link(i);
    std::string at = std::string(to_string(l.kind)) + " link #" + std::to_string(i);
    bool known = net.has_vertex(l.conclusion);
    for (VertexId p : l.premises) known = known && net.has_vertex(p);
    if (!known) {
      report(Violation::UnknownVertex, at + " mentions an undeclared vertex");
      continue;
    }
    if ((l.kind == LinkKind::Star && !l.premises.empty()) || (is_implication(l.kind) && l.premises.size() != 2)) {
      report(Violation::Arity, at + " has " + std::to_string(l.premises.size()) + " premises");
      continue;
    }
    for (VertexId p : l.premises)
      if (p == l.conclusion) report(Violation::ConclusionInPremises, at + ": " + net.label(p));

    const VertexType& c = net.type(l.conclusion);
    auto bad = [&](const std::string& why) { report(Violation::Typing, at + ": " + why); };
    switch (l.kind) {
      case LinkKind::Star:
        if (c != VertexType::plain(Type::ground())) bad("conclusion is " + c.str() + ", expected ⋆");
        break;
      case LinkKind::ImpPlus:
      case LinkKind::ImpMinus: {
        const VertexType& a = net.type(l.premises[0]);
        const VertexType& b = net.type(l.premises[1]);
        if (c.bang || !c.type.is_arrow() || !a.bang || b.bang || a.type != c.type.argument() ||
            b.type != c.type.result())
          bad("premises " + a.str() + ", " + b.str() + " do not match conclusion " + c.str());
        break;
      }
      case LinkKind::Bang:
      case LinkKind::Why:
        if (!c.bang) bad("conclusion " + c.str() + " is not exponential");
        for (VertexId p : l.premises) {
          const VertexType& a = net.type(p);
          if (a.bang || a.type != c.type) bad("premise " + net.label(p) + " : " + a.str() + " under " + c.str());
        }
        break;
    }
  }

  for (const auto& [id, v] : net.vertices()) {
    if (v.occurrences.empty()) report(Violation::Unlinked, net.label(id) + " is in no link");
    if (v.occurrences.size() > 2)
      report(Violation::OverLinked, net.label(id) + " is in " + std::to_string(v.occurrences.size()) + " links");
    if (v.occurrences.size() == 2 && net.polarity(v.occurrences[0]) == net.polarity(v.occurrences[1]))
      report(Violation::SamePolarity, net.label(id) + " gets polarity " + to_string(net.polarity(v.occurrences[0])) +
                                          " from both of its links");
  }

  auto conclusions = net.conclusions();
  if (conclusions.empty()) report(Violation::NoConclusion, "the net has no conclusion");
  if (conclusions.size() == 1 && net.polarity(net.vertex(conclusions[0]).occurrences[0]) != Polarity::Out)
    report(Violation::ClosedNotOut, "the only conclusion " + net.label(conclusions[0]) + " is in");

  if (net.is_closed()) {
    for (const auto& l : net.links()) {
      if (!is_exponential(l.kind) || !net.has_vertex(l.conclusion)) continue;
      bool ok = false;
      for (const auto& o : net.occurrences(l.conclusion)) {
        const Link& other = net.link(o.link);
        if (&other == &l) continue;
        if (is_implication(other.kind) && o.position == 0) ok = true;
        if (is_exponential(other.kind) && other.kind != l.kind && o.position == kConclusion) ok = true;
      }
      if (!ok)
        report(Violation::Exponentials, std::string("conclusion ") + net.label(l.conclusion) + " of a " +
                                            to_string(l.kind) + " link is neither a ⊸ first premise nor an exponential cut");
    }
  }
  return out;
}

}  // namespace rgoi
