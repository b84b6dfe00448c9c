#include <catch_amalgamated.hpp>

#include <linkalt/moves.hpp>
#include <linkalt/seifert.hpp>
#include <linkalt/table.hpp>

#include "support/corpus.hpp"

#include <set>

using namespace linkalt;

namespace {

const std::vector<LinkTableEntry>& table() {
  static const auto t = load_table();
  return t;
}
LinkDiagram named(const std::string& n) { return find_entry(table(), n).diagram; }

int spaces_with_chords(const SeifertStructure& st) {
  int k = 0;
  for (const auto& s : st.spaces) k += !s.chords.empty();
  return k;
}

// Components of G - x restricted to the vertices other than x.
std::vector<int> components_without(const SeifertGraph& g, int x) {
  std::vector<int> comp(g.vertex_count, -1);
  int next = 0;
  for (int s = 0; s < g.vertex_count; ++s) {
    if (s == x || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges) {
        if (e.u == x || e.v == x) continue;
        int w = e.u == u ? e.v : e.v == u ? e.u : -1;
        if (w >= 0 && comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<int> brute_cut_vertices(const SeifertGraph& g) {
  std::vector<int> cuts;
  for (int x = 0; x < g.vertex_count; ++x) {
    auto comp = components_without(g, x);
    std::set<int> ids;
    for (int v = 0; v < g.vertex_count; ++v)
      if (v != x) ids.insert(comp[v]);
    if (ids.size() > 1) cuts.push_back(x);
  }
  return cuts;
}

// Two edges share a block iff no vertex separates them.
std::set<std::set<int>> brute_blocks(const SeifertGraph& g) {
  const int m = static_cast<int>(g.edges.size());
  std::vector<std::vector<bool>> together(m, std::vector<bool>(m, true));
  for (int x = 0; x < g.vertex_count; ++x) {
    auto comp = components_without(g, x);
    auto side = [&](const SeifertEdge& e) {
      if (e.u == x && e.v == x) return -2;
      return comp[e.u == x ? e.v : e.u];
    };
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (side(g.edges[a]) != side(g.edges[b])) together[a][b] = false;
  }
  std::set<std::set<int>> blocks;
  for (int a = 0; a < m; ++a) {
    std::set<int> blk;
    for (int b = 0; b < m; ++b)
      if (together[a][b]) blk.insert(b);
    blocks.insert(blk);
  }
  return blocks;
}

std::set<std::set<int>> as_sets(const std::vector<std::vector<int>>& v) {
  std::set<std::set<int>> out;
  for (const auto& b : v) out.insert(std::set<int>(b.begin(), b.end()));
  return out;
}

}  // namespace

TEST_CASE("positive trefoil: two circles, one space", "[seifert]") {
  auto st = seifert_structure(named("trefoil+"));
  CHECK(st.circle_count() == 2);
  CHECK(st.chord_count() == 3);
  for (const auto& c : st.chords) CHECK(c.sign == 1);
  CHECK(spaces_with_chords(st) == 1);
  auto g = seifert_graph(st);
  CHECK(g.vertex_count == 2);
  CHECK(g.edges.size() == 3);
  CHECK(g.blocks.size() == 1);
  CHECK(g.cut_vertices.empty());
  auto s = surface_stats(named("trefoil+"));
  CHECK(s.crossings == 3);
  CHECK(s.circles == 2);
  CHECK(s.betti == 2);
  CHECK(s.components == 1);
  CHECK(s.genus == 1);
}

TEST_CASE("figure-eight: three circles in a chain", "[seifert]") {
  auto st = seifert_structure(named("4_1"));
  CHECK(st.circle_count() == 3);
  CHECK(st.chord_count() == 4);
  REQUIRE(spaces_with_chords(st) == 2);
  for (const auto& sp : st.spaces) {
    if (sp.chords.empty()) continue;
    CHECK(sp.chords.size() == 2);
    CHECK(st.chords[sp.chords[0]].sign == st.chords[sp.chords[1]].sign);
  }
  CHECK(space_adjacency(st).size() == 1);
  auto g = seifert_graph(st);
  CHECK(g.vertex_count == 3);
  CHECK(g.blocks.size() == 2);
  for (const auto& b : g.blocks) CHECK(b.size() == 2);
  REQUIRE(g.cut_vertices.size() == 1);
  // The middle circle touches all four chords.
  int mid = g.cut_vertices[0];
  int deg = 0;
  for (const auto& e : g.edges) deg += (e.u == mid) + (e.v == mid);
  CHECK(deg == 4);
}

TEST_CASE("connected sum of two positive clasps", "[seifert]") {
  // Closure of s1^2 s2^2: three nested circles.
  auto d = testing::braid_closure(3, {1, 1, 2, 2});
  REQUIRE(writhe(d) == 4);
  auto st = seifert_structure(d);
  CHECK(st.circle_count() == 3);
  CHECK(spaces_with_chords(st) == 2);
  CHECK(space_adjacency(st).size() == 1);
  auto g = seifert_graph(st);
  CHECK(g.cut_vertices.size() == 1);
}

TEST_CASE("9_43 diagram D has sign-uniform blocks", "[seifert]") {
  auto g = seifert_graph(seifert_structure(named("9_43")));
  for (const auto& b : g.blocks) {
    std::set<int> signs;
    for (int e : b) signs.insert(g.edges[e].sign);
    CHECK(signs.size() == 1);
  }
}

TEST_CASE("10_145 diagram realises genus two", "[seifert]") {
  auto s = surface_stats(named("10_145"));
  CHECK(s.betti == 4);
  CHECK(s.genus == 2);
}

TEST_CASE("blocks and cut vertices match brute force", "[seifert][property]") {
  testing::Rng rng(77);
  std::vector<LinkDiagram> corpus;
  for (const auto& e : table()) corpus.push_back(e.diagram);
  for (int i = 0; i < 300; ++i) corpus.push_back(testing::random_diagram(rng));
  for (const auto& d : corpus) {
    if (d.crossing_count() == 0) continue;
    INFO(serialize(d));
    auto st = seifert_structure(d);
    auto g = seifert_graph(st);
    CHECK(g.cut_vertices == brute_cut_vertices(g));
    CHECK(as_sets(g.blocks) == brute_blocks(g));

    // Each chord lies in exactly one space.
    std::vector<int> hits(st.chord_count(), 0);
    for (const auto& sp : st.spaces)
      for (int c : sp.chords) ++hits[c];
    for (int h : hits) CHECK(h == 1);

    // Chords on both sides of a circle make it a cut vertex.
    for (int v = 0; v < st.circle_count(); ++v) {
      std::set<int> sides;
      for (const auto& c : st.chords)
        if (c.circle_a == v || c.circle_b == v) sides.insert(st.chord_space[c.crossing]);
      if (sides.size() >= 2)
        CHECK(std::binary_search(g.cut_vertices.begin(), g.cut_vertices.end(), v));
    }

    auto s = surface_stats(d);
    CHECK(s.betti == s.crossings - s.circles + 1);
    CHECK((s.betti - s.components + 1) % 2 == 0);
  }
}
