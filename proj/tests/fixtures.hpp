#pragma once

// Hand-built nets from the worked examples, with their printed vertex names.

#include <initializer_list>
#include <string>
#include <utility>

#include "rgoi/net.hpp"

namespace rgoi::fixtures {

inline const Type G = Type::ground();
inline const Type GG = Type::arrow(Type::ground(), Type::ground());

struct Builder {
  SimpleNet net;
  VertexId next = 1;

  VertexId v(const std::string& name, VertexType t) {
    net.add_vertex(next, std::move(t), name);
    return next++;
  }
  VertexId operator[](const std::string& name) const { return net.named(name); }
  void link(LinkKind k, std::initializer_list<const char*> premises, const char* conclusion) {
    Link l{k, {}, net.named(conclusion)};
    for (const char* p : premises) l.premises.push_back(net.named(p));
    net.add_link(std::move(l));
  }
};

/// ⟦λx.x⟧ with the vertex names w1 (root), w2 (occurrence), w3 (variable).
inline SimpleNet identity(const std::string& root = "w1", const std::string& body = "w2",
                          const std::string& var = "w3") {
  Builder b;
  b.v(root, VertexType::plain(GG));
  b.v(body, VertexType::plain(G));
  b.v(var, VertexType::banged(G));
  b.link(LinkKind::ImpPlus, {var.c_str(), body.c_str()}, root.c_str());
  b.link(LinkKind::Why, {body.c_str()}, var.c_str());
  return std::move(b.net);
}

// The application part shared by N and M: v1 .. v8 around the cut v3.
inline void application_spine(Builder& b) {
  b.v("v1", VertexType::plain(G));
  b.v("v2", VertexType::plain(GG));
  b.v("v3", VertexType::banged(GG));
  b.v("v4", VertexType::banged(G));
  b.v("v5", VertexType::plain(G));
  b.v("v6", VertexType::plain(GG));
  b.v("v7", VertexType::banged(G));
  b.v("v8", VertexType::plain(G));
  b.link(LinkKind::ImpMinus, {"v4", "v1"}, "v2");
  b.link(LinkKind::Why, {"v2", "v6"}, "v3");
  b.link(LinkKind::Bang, {"v5"}, "v4");
  b.link(LinkKind::ImpMinus, {"v7", "v5"}, "v6");
  b.link(LinkKind::Bang, {"v8"}, "v7");
  b.link(LinkKind::Star, {}, "v8");
}

/// The open net N: conclusions v1, z1, z2 and one exponential cut at v3
/// whose ! premises are (z2, z1).
inline SimpleNet net_N() {
  Builder b;
  application_spine(b);
  b.v("z1", VertexType::plain(GG));
  b.v("z2", VertexType::plain(GG));
  b.link(LinkKind::Bang, {"z2", "z1"}, "v3");
  return std::move(b.net);
}

/// The closed net M: N with ⟦I⟧ (w1, w2, w3) plugged on the first ! premise
/// and a second identity (z1, z2, z3) on the second.
inline SimpleNet net_M() {
  Builder b;
  application_spine(b);
  for (const char* p : {"w", "z"}) {
    std::string s(p);
    b.v(s + "1", VertexType::plain(GG));
    b.v(s + "2", VertexType::plain(G));
    b.v(s + "3", VertexType::banged(G));
    b.link(LinkKind::ImpPlus, {(s + "3").c_str(), (s + "2").c_str()}, (s + "1").c_str());
    b.link(LinkKind::Why, {(s + "2").c_str()}, (s + "3").c_str());
  }
  b.link(LinkKind::Bang, {"w1", "z1"}, "v3");
  return std::move(b.net);
}

/// The chain ? ! ? ! ⋆ reached from M after its exponential step and the two
/// linear implication steps of the first addend.
inline SimpleNet chain() {
  Builder b;
  b.v("top", VertexType::plain(G));
  b.v("c1", VertexType::banged(G));
  b.v("m", VertexType::plain(G));
  b.v("c2", VertexType::banged(G));
  b.v("s", VertexType::plain(G));
  b.link(LinkKind::Why, {"top"}, "c1");
  b.link(LinkKind::Bang, {"m"}, "c1");
  b.link(LinkKind::Why, {"m"}, "c2");
  b.link(LinkKind::Bang, {"s"}, "c2");
  b.link(LinkKind::Star, {}, "s");
  return std::move(b.net);
}

inline std::vector<VertexId> named_path(const SimpleNet& net, std::initializer_list<const char*> names) {
  std::vector<VertexId> out;
  for (const char* n : names) out.push_back(net.named(n));
  return out;
}

}  // namespace rgoi::fixtures
