#pragma once

// Seifert circles, the Seifert diagram (circles + signed chords embedded in
// S^2), its spaces, and the signed Seifert graph with its block structure.

#include <linkalt/diagram.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace linkalt {

struct Chord {
  int crossing = 0;
  int sign = +1;
  // circle through the corner holding the incoming under-arc, and the other
  int circle_a = 0;
  int circle_b = 0;
};

struct Space {
  std::vector<int> chords;
  std::vector<int> circles;  // circles on its boundary
};

struct SeifertStructure {
  std::vector<std::vector<int>> circles;  // arc labels in orientation order
  std::vector<Chord> chords;              // indexed by crossing
  // Faces of the circles+chords map; each face is a list of (vertex, slot)
  // darts where vertex 2c / 2c+1 are the two chord ends of crossing c.
  std::vector<std::vector<std::pair<int, int>>> faces;
  std::vector<int> face_space;
  std::vector<Space> spaces;  // complement components of the circles alone
  std::vector<int> chord_space;
  // The two spaces bordering each circle: [0] right of the orientation,
  // [1] left of it.
  std::vector<std::array<int, 2>> circle_sides;
  // Nesting forest relative to space 0 taken as the outside: parent circle
  // of each circle, or -1.
  std::vector<int> nesting_parent;

  int circle_count() const { return static_cast<int>(circles.size()); }
  int chord_count() const { return static_cast<int>(chords.size()); }
};

namespace detail {

// Corner of crossing c that contains position q: k = 0 for the corner
// holding the incoming under-arc, k = 1 for the other. Each corner is the
// pair (p, p+1) of ccw-consecutive positions; its slots in ccw order around
// the chord end are arc(p+1), chord, arc(p).
struct CornerLayout {
  int low[2];  // p for each corner
};

inline CornerLayout corner_layout(const Net::Node& n) {
  return n.over_d_to_b ? CornerLayout{{0, 2}} : CornerLayout{{3, 1}};
}

inline std::pair<int, int> corner_slot(const Net::Node& n, int q) {
  auto lay = corner_layout(n);
  for (int k = 0; k < 2; ++k) {
    int p = lay.low[k];
    if (q == p) return {k, 2};
    if (q == (p + 1) % 4) return {k, 0};
  }
  return {-1, -1};
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

inline SeifertStructure seifert_structure(const LinkDiagram& d) {
  SeifertStructure st;
  if (d.crossings.empty()) {
    // Crossingless: each component is its own circle; no chords.
    for (int i = 0; i < d.free_loops; ++i) st.circles.push_back({});
    return st;
  }
  const Net net = to_net(d);
  const int n = net.size();
  auto label = [&](Dart x) { return d.crossings[x.node].arcs[x.pos]; };

  // Circles: follow the oriented smoothing. An arc arriving at position 0
  // continues on the over-out arc; one arriving on the over-strand continues
  // on the under-out arc.
  std::map<int, int> circle_of;
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  for (int c = 0; c < n; ++c)
    for (int p : {2, net.nodes[c].over_out()}) {
      if (seen[c][p]) continue;
      std::vector<int> circ;
      Dart out{c, p};
      while (!seen[out.node][out.pos]) {
        seen[out.node][out.pos] = true;
        circ.push_back(label(out));
        circle_of[label(out)] = static_cast<int>(st.circles.size());
        Dart in = net.across(out);
        const auto& node = net.nodes[in.node];
        out = Dart{in.node, in.pos == 0 ? node.over_out() : 2};
      }
      st.circles.push_back(std::move(circ));
    }

  st.chords.resize(n);
  for (int c = 0; c < n; ++c) {
    st.chords[c].crossing = c;
    st.chords[c].sign = net.nodes[c].sign();
    st.chords[c].circle_a = circle_of.at(label({c, 0}));
    st.chords[c].circle_b = circle_of.at(label({c, 2}));
  }

  // Planar map: vertex 2c+k with three slots.
  auto slot_partner = [&](int v, int slot) -> std::pair<int, int> {
    int c = v / 2, k = v % 2;
    if (slot == 1) return {2 * c + (1 - k), 1};
    int p = detail::corner_layout(net.nodes[c]).low[k];
    int q = slot == 0 ? (p + 1) % 4 : p;
    Dart o = net.across({c, q});
    auto [k2, s2] = detail::corner_slot(net.nodes[o.node], o.pos);
    return {2 * o.node + k2, s2};
  };

  std::vector<std::array<int, 3>> face_of(2 * n, {-1, -1, -1});
  for (int v = 0; v < 2 * n; ++v)
    for (int s = 0; s < 3; ++s) {
      if (face_of[v][s] >= 0) continue;
      int f = static_cast<int>(st.faces.size());
      std::vector<std::pair<int, int>> face;
      std::pair<int, int> cur{v, s};
      while (face_of[cur.first][cur.second] < 0) {
        face_of[cur.first][cur.second] = f;
        face.push_back(cur);
        auto o = slot_partner(cur.first, cur.second);
        cur = {o.first, (o.second + 1) % 3};
      }
      st.faces.push_back(std::move(face));
    }

  const int nf = static_cast<int>(st.faces.size());
  detail::UnionFind uf(nf);
  for (int c = 0; c < n; ++c) uf.unite(face_of[2 * c][1], face_of[2 * c + 1][1]);
  std::map<int, int> space_id;
  st.face_space.resize(nf);
  for (int f = 0; f < nf; ++f) {
    auto [it, fresh] = space_id.try_emplace(uf.find(f), static_cast<int>(space_id.size()));
    st.face_space[f] = it->second;
  }
  st.spaces.resize(space_id.size());
  st.chord_space.resize(n);
  for (int c = 0; c < n; ++c) {
    int sp = st.face_space[face_of[2 * c][1]];
    st.chord_space[c] = sp;
    st.spaces[sp].chords.push_back(c);
  }

  // Sides of each circle: the dart leaving a chord end along the outgoing
  // arc slot has the face on its right.
  st.circle_sides.assign(st.circles.size(), {-1, -1});
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 2; ++k) {
      int v = 2 * c + k;
      int p = detail::corner_layout(net.nodes[c]).low[k];
      // Outgoing arc of the corner is at slot 0 (position p+1) for k's
      // layout when that position is outgoing, else slot 2.
      int out_slot = net.nodes[c].is_incoming((p + 1) % 4) ? 2 : 0;
      int q = out_slot == 0 ? (p + 1) % 4 : p;
      int circ = circle_of.at(label({c, q}));
      auto o = slot_partner(v, out_slot);
      int right = st.face_space[face_of[v][out_slot]];
      int left = st.face_space[face_of[o.first][o.second]];
      st.circle_sides[circ] = {right, left};
    }
  for (int i = 0; i < st.circle_count(); ++i)
    for (int sp : st.circle_sides[i]) st.spaces[sp].circles.push_back(i);
  for (auto& sp : st.spaces) {
    std::sort(sp.circles.begin(), sp.circles.end());
    sp.circles.erase(std::unique(sp.circles.begin(), sp.circles.end()), sp.circles.end());
  }

  // Spaces and circles form a tree; root it at space 0.
  st.nesting_parent.assign(st.circles.size(), -1);
  std::vector<bool> visited_space(st.spaces.size(), false);
  std::vector<std::pair<int, int>> stack{{0, -1}};  // (space, circle we came through)
  visited_space[0] = true;
  while (!stack.empty()) {
    auto [sp, via] = stack.back();
    stack.pop_back();
    for (int circ : st.spaces[sp].circles) {
      if (circ == via) continue;
      st.nesting_parent[circ] = via;
      for (int other : st.circle_sides[circ])
        if (!visited_space[other]) {
          visited_space[other] = true;
          stack.push_back({other, circ});
        }
    }
  }
  return st;
}

// Two chord-bearing spaces are adjacent when they share a boundary circle.
// Returned as sorted pairs of space ids.
inline std::vector<std::pair<int, int>> space_adjacency(const SeifertStructure& st) {
  std::set<std::pair<int, int>> adj;
  for (const auto& sides : st.circle_sides) {
    int a = sides[0], b = sides[1];
    if (a == b || st.spaces[a].chords.empty() || st.spaces[b].chords.empty()) continue;
    adj.insert(std::minmax(a, b));
  }
  return {adj.begin(), adj.end()};
}

// ---------------------------------------------------------------------------

struct SeifertEdge {
  int u = 0, v = 0;
  int sign = +1;
  int crossing = 0;
};

struct SeifertGraph {
  int vertex_count = 0;
  std::vector<SeifertEdge> edges;
  std::vector<std::vector<int>> blocks;  // edge ids
  std::vector<int> cut_vertices;         // sorted
  std::vector<std::string> vertex_names;
};

namespace detail {

// Tarjan's biconnected components on a multigraph. Back edges are recognised
// by edge id, so parallel edges between the same pair form a block.
inline std::pair<std::vector<std::vector<int>>, std::vector<int>> biconnected_blocks(
    int vertex_count, const std::vector<SeifertEdge>& edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(vertex_count);  // (nbr, edge)
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].u].push_back({edges[e].v, e});
    if (edges[e].u != edges[e].v) adj[edges[e].v].push_back({edges[e].u, e});
  }
  std::vector<int> disc(vertex_count, -1), low(vertex_count, 0);
  std::vector<bool> is_cut(vertex_count, false);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;

  struct Frame {
    int v, parent_edge;
    std::size_t next;
    int children;
  };
  for (int root = 0; root < vertex_count; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] < 0) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, e, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[done.v] = true;
        continue;
      }
      int u = stack.back().v;
      low[u] = std::min(low[u], low[done.v]);
      if (low[done.v] >= disc[u]) {
        if (stack.size() > 1) is_cut[u] = true;
        std::vector<int> block;
        while (true) {
          int e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<int> cuts;
  for (int v = 0; v < vertex_count; ++v)
    if (is_cut[v]) cuts.push_back(v);
  return {std::move(blocks), std::move(cuts)};
}

}  // namespace detail

inline SeifertGraph seifert_graph(const SeifertStructure& st) {
  SeifertGraph g;
  g.vertex_count = st.circle_count();
  for (const auto& circ : st.circles)
    g.vertex_names.push_back(circ.empty() ? "c0" : "c" + std::to_string(*std::min_element(circ.begin(), circ.end())));
  for (const auto& ch : st.chords) g.edges.push_back({ch.circle_a, ch.circle_b, ch.sign, ch.crossing});
  if (g.edges.empty()) return g;

  auto [blocks, cuts] = detail::biconnected_blocks(g.vertex_count, g.edges);
  g.blocks = std::move(blocks);
  g.cut_vertices = std::move(cuts);
  return g;
}

inline std::string seifert_graph_dot(const SeifertGraph& g, const std::string& title = "seifert") {
  std::ostringstream os;
  os << "graph \"" << title << "\" {\n";
  for (int v = 0; v < g.vertex_count; ++v) os << "  " << g.vertex_names[v] << ";\n";
  for (std::size_t b = 0; b < g.blocks.size(); ++b) {
    os << "  subgraph cluster_block" << b << " {\n";
    for (int e : g.blocks[b]) {
      const auto& ed = g.edges[e];
      os << "    " << g.vertex_names[ed.u] << " -- " << g.vertex_names[ed.v] << " [sign=\""
         << (ed.sign > 0 ? '+' : '-') << "\", crossing=" << ed.crossing << "];\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------

struct SurfaceStats {
  int crossings = 0;   // bands of the canonical surface
  int circles = 0;     // discs
  int betti = 0;       // crossings - circles + 1
  int components = 0;  // mu
  int genus = 0;       // (betti - mu + 1) / 2
};

inline SurfaceStats surface_stats(const LinkDiagram& d) {
  SurfaceStats s;
  s.crossings = d.crossing_count();
  s.components = component_count(d);
  if (d.crossings.empty()) {
    s.circles = s.components;
    // A crossingless unlink is spanned by disjoint discs; β of the (split)
    // canonical surface is 0 per component's disc.
    s.betti = 0;
    s.genus = 0;
    return s;
  }
  s.circles = seifert_structure(d).circle_count();
  s.betti = s.crossings - s.circles + 1;
  s.genus = (s.betti - s.components + 1) / 2;
  return s;
}

}  // namespace linkalt
