#pragma once

// Diagram-level deciders: positive/negative, alternating, alternative,
// homogeneous. Each answers a question about the given diagram, not about
// the link it represents.

#include <linkalt/diagram.hpp>
#include <linkalt/seifert.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace linkalt {

inline bool is_positive(const LinkDiagram& d) {
  for (const auto& c : d.crossings)
    if (c.sign < 0) return false;
  return true;
}

inline bool is_negative(const LinkDiagram& d) {
  for (const auto& c : d.crossings)
    if (c.sign > 0) return false;
  return true;
}

// Over and under passages strictly alternate along every component.
inline bool is_alternating(const LinkDiagram& d) {
  if (d.crossings.empty()) return true;
  const Net net = to_net(d);
  for (const auto& walk : component_walks(net)) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Dart& a = walk[i];
      const Dart& b = walk[(i + 1) % walk.size()];
      if (a.pos % 2 == b.pos % 2) return false;
    }
  }
  return true;
}

inline bool is_alternative(const SeifertStructure& st) {
  for (const auto& sp : st.spaces) {
    for (int c : sp.chords)
      if (st.chords[c].sign != st.chords[sp.chords.front()].sign) return false;
  }
  return true;
}

inline bool is_alternative(const LinkDiagram& d) {
  if (d.crossings.empty()) return true;
  return is_alternative(seifert_structure(d));
}

// Alternative, and adjacent chord-bearing spaces carry opposite signs.
inline bool is_alternating_via_spaces(const LinkDiagram& d) {
  if (d.crossings.empty()) return true;
  const auto st = seifert_structure(d);
  if (!is_alternative(st)) return false;
  for (auto [a, b] : space_adjacency(st)) {
    int sa = st.chords[st.spaces[a].chords.front()].sign;
    int sb = st.chords[st.spaces[b].chords.front()].sign;
    if (sa == sb) return false;
  }
  return true;
}

inline bool is_homogeneous(const SeifertGraph& g) {
  for (const auto& block : g.blocks)
    for (int e : block)
      if (g.edges[e].sign != g.edges[block.front()].sign) return false;
  return true;
}

inline bool is_homogeneous(const LinkDiagram& d) {
  if (d.crossings.empty()) return true;
  return is_homogeneous(seifert_graph(seifert_structure(d)));
}

struct Classification {
  std::string name;
  int crossings = 0;
  int components = 0;
  int writhe = 0;
  bool positive = false;
  bool negative = false;
  bool alternating = false;
  bool alternative = false;
  bool homogeneous = false;
  int betti = 0;
  int genus = 0;
};

inline Classification classify(const LinkDiagram& d) {
  Classification c;
  c.name = d.name;
  c.crossings = d.crossing_count();
  c.components = component_count(d);
  c.writhe = writhe(d);
  c.positive = is_positive(d);
  c.negative = is_negative(d);
  c.alternating = is_alternating(d);
  if (d.crossings.empty()) {
    c.alternative = c.homogeneous = true;
  } else {
    const auto st = seifert_structure(d);
    c.alternative = is_alternative(st);
    c.homogeneous = is_homogeneous(seifert_graph(st));
  }
  const auto stats = surface_stats(d);
  c.betti = stats.betti;
  c.genus = stats.genus;
  return c;
}

inline nlohmann::ordered_json to_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["n"] = c.crossings;
  j["mu"] = c.components;
  j["writhe"] = c.writhe;
  j["positive"] = c.positive;
  j["negative"] = c.negative;
  j["alternating"] = c.alternating;
  j["alternative"] = c.alternative;
  j["homogeneous"] = c.homogeneous;
  j["betti"] = c.betti;
  j["genus"] = c.genus;
  return j;
}

}  // namespace linkalt
