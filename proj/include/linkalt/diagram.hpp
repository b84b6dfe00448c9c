#pragma once

// Oriented link diagrams in PD form.
//
// A crossing X(a,b,c,d) lists its four arc labels counterclockwise, starting
// at the incoming under-arc a; the under-strand leaves along c. The crossing
// is positive when the over-strand runs d -> b and negative when it runs
// b -> d (the usual right-hand rule with both strands drawn upward).
//
// Two views of the same data are kept in sync:
//   * LinkDiagram: labelled crossings plus component cycles (user facing).
//   * Net: crossings joined dart-to-dart (rotation system), used by the
//     move and skein machinery where labels only get in the way.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linkalt {

class DiagramError : public std::runtime_error {
 public:
  enum class Kind { Syntax, ArcMultiplicity, Orientation, NonPlanar, Disconnected, Index };
  DiagramError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Half-edge: a crossing index and one of its four positions (0..3, ccw).
struct Dart {
  int node = -1;
  int pos = 0;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

// Rotation-system view. Position 0 is the incoming under-end, 2 the outgoing
// under-end; the over-strand enters at 3 when over_d_to_b, else at 1.
struct Net {
  struct Node {
    std::array<Dart, 4> nbr;
    bool over_d_to_b = true;

    int sign() const { return over_d_to_b ? +1 : -1; }
    int over_in() const { return over_d_to_b ? 3 : 1; }
    int over_out() const { return over_d_to_b ? 1 : 3; }
    bool is_incoming(int p) const { return p == 0 || p == over_in(); }
  };

  std::vector<Node> nodes;
  int free_loops = 0;  // crossingless unknotted components

  int size() const { return static_cast<int>(nodes.size()); }
  const Dart& across(Dart d) const { return nodes[d.node].nbr[d.pos]; }
  void link(Dart a, Dart b) {
    nodes[a.node].nbr[a.pos] = b;
    nodes[b.node].nbr[b.pos] = a;
  }
};

struct Crossing {
  std::array<int, 4> arcs{};
  int sign = +1;

  int over_in() const { return sign > 0 ? 3 : 1; }
  int over_out() const { return sign > 0 ? 1 : 3; }
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  // Arc labels in orientation order. Empty when there are no crossings.
  std::vector<std::vector<int>> components;
  // Crossingless components; only meaningful on their own (unknot/unlink) in
  // validated input, but split remnants inside the skein engine use it too.
  int free_loops = 0;
  std::string name;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

inline int crossing_sign(const LinkDiagram& d, int index) {
  if (index < 0 || index >= d.crossing_count())
    throw DiagramError(DiagramError::Kind::Index, "crossing index out of range");
  return d.crossings[index].sign;
}

inline int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings) w += c.sign;
  return w;
}

inline int component_count(const LinkDiagram& d) {
  return static_cast<int>(d.components.size()) + d.free_loops;
}

// ---------------------------------------------------------------------------
// Net helpers

namespace detail {

inline int opposite(int p) { return (p + 2) % 4; }

// Orbits of the face permutation (next ccw position after crossing an edge).
inline std::vector<std::vector<Dart>> trace_faces(const Net& net) {
  std::vector<std::vector<Dart>> faces;
  std::vector<std::array<bool, 4>> seen(net.nodes.size(), {false, false, false, false});
  for (int c = 0; c < net.size(); ++c) {
    for (int p = 0; p < 4; ++p) {
      if (seen[c][p]) continue;
      std::vector<Dart> face;
      Dart d{c, p};
      while (!seen[d.node][d.pos]) {
        seen[d.node][d.pos] = true;
        face.push_back(d);
        Dart o = net.across(d);
        d = Dart{o.node, (o.pos + 1) % 4};
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

inline int connected_pieces(const Net& net) {
  std::vector<int> parent(net.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int pieces = net.size();
  for (int c = 0; c < net.size(); ++c)
    for (const Dart& o : net.nodes[c].nbr) {
      int a = find(c), b = find(o.node);
      if (a != b) {
        parent[a] = b;
        --pieces;
      }
    }
  return pieces;
}

// Every edge must run from an outgoing end to an incoming end.
inline bool orientation_consistent(const Net& net) {
  for (int c = 0; c < net.size(); ++c)
    for (int p = 0; p < 4; ++p) {
      Dart o = net.nodes[c].nbr[p];
      if (o.node < 0 || o.node >= net.size()) return false;
      if (net.across(o) != Dart{c, p}) return false;
      if (net.nodes[c].is_incoming(p) == net.nodes[o.node].is_incoming(o.pos)) return false;
    }
  return true;
}

}  // namespace detail

// Oriented traversals of every component with crossings, as the sequence of
// outgoing darts visited. Deterministic: starts at the lowest-numbered node,
// under-strand first.
inline std::vector<std::vector<Dart>> component_walks(const Net& net) {
  std::vector<std::vector<Dart>> walks;
  std::vector<std::array<bool, 4>> seen(net.nodes.size(), {false, false, false, false});
  for (int c = 0; c < net.size(); ++c) {
    for (int p : {2, net.nodes[c].over_out()}) {
      if (seen[c][p]) continue;
      std::vector<Dart> walk;
      Dart d{c, p};
      while (!seen[d.node][d.pos]) {
        seen[d.node][d.pos] = true;
        walk.push_back(d);
        Dart in = net.across(d);
        d = Dart{in.node, detail::opposite(in.pos)};
      }
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

inline Net to_net(const LinkDiagram& d) {
  Net net;
  net.free_loops = d.free_loops;
  net.nodes.resize(d.crossings.size());
  std::map<int, std::vector<Dart>> where;
  for (int c = 0; c < d.crossing_count(); ++c) {
    net.nodes[c].over_d_to_b = d.crossings[c].sign > 0;
    for (int p = 0; p < 4; ++p) where[d.crossings[c].arcs[p]].push_back({c, p});
  }
  for (const auto& [label, ends] : where) {
    if (ends.size() != 2)
      throw DiagramError(DiagramError::Kind::ArcMultiplicity,
                         "arc " + std::to_string(label) + " appears " +
                             std::to_string(ends.size()) + " times");
    net.link(ends[0], ends[1]);
  }
  return net;
}

// Assign arc labels 1..2n along the component walks and emit the labelled
// form. Labels follow orientation inside each component.
inline LinkDiagram from_net(const Net& net, std::string name = {}) {
  LinkDiagram d;
  d.name = std::move(name);
  d.free_loops = net.free_loops;
  d.crossings.resize(net.nodes.size());
  for (int c = 0; c < net.size(); ++c) d.crossings[c].sign = net.nodes[c].sign();
  int next = 1;
  for (const auto& walk : component_walks(net)) {
    std::vector<int> comp;
    for (const Dart& out : walk) {
      Dart in = net.across(out);
      d.crossings[out.node].arcs[out.pos] = next;
      d.crossings[in.node].arcs[in.pos] = next;
      comp.push_back(next++);
    }
    d.components.push_back(std::move(comp));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Validation

// Checks everything a user-supplied diagram must satisfy. `require_connected`
// is dropped only for intermediate diagrams of the skein engine.
inline void validate_net(const Net& net, bool require_connected = true) {
  using K = DiagramError::Kind;
  if (net.nodes.empty()) {
    if (net.free_loops < 1) throw DiagramError(K::Syntax, "empty diagram has no components");
    return;
  }
  if (!detail::orientation_consistent(net))
    throw DiagramError(K::Orientation, "strand orientations disagree with the crossing tuples");
  int pieces = detail::connected_pieces(net);
  if (require_connected && (pieces != 1 || net.free_loops != 0))
    throw DiagramError(K::Disconnected, "diagram is split (disconnected projection)");
  int faces = static_cast<int>(detail::trace_faces(net).size());
  int v = net.size(), e = 2 * net.size();
  if (v - e + faces != 2 * pieces)
    throw DiagramError(K::NonPlanar, "Euler characteristic check failed: V - E + F = " +
                                         std::to_string(v - e + faces));
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw DiagramError(DiagramError::Kind::Syntax,
                       "PD syntax error at position " + std::to_string(pos) + ": " + why);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  bool peek(char ch) {
    skip_ws();
    return pos < s.size() && s[pos] == ch;
  }
  bool accept(char ch) {
    if (!peek(ch)) return false;
    ++pos;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s.substr(pos, w.size()) != w) return false;
    std::size_t end = pos + w.size();
    if (end < s.size() && std::isalnum(static_cast<unsigned char>(s[end]))) return false;
    pos = end;
    return true;
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a positive integer");
    if (pos - start > 9) fail("integer too large");
    int v = std::stoi(std::string(s.substr(start, pos - start)));
    if (v <= 0) fail("arc labels must be positive");
    return v;
  }
  std::vector<int> int_list(char open, char close) {
    expect(open);
    std::vector<int> out;
    if (accept(close)) return out;
    do {
      out.push_back(integer());
    } while (accept(','));
    expect(close);
    return out;
  }
  std::string quoted() {
    expect('"');
    std::string out;
    while (pos < s.size() && s[pos] != '"') out.push_back(s[pos++]);
    if (pos >= s.size()) fail("unterminated string");
    ++pos;
    return out;
  }
};

// Unoriented strand cycles: sequences of darts (entry darts) where the walk
// enters a crossing at `pos` and leaves at the opposite position.
inline std::vector<std::vector<Dart>> strand_cycles(const Net& net) {
  std::vector<std::vector<Dart>> cycles;
  std::vector<std::array<bool, 4>> seen(net.nodes.size(), {false, false, false, false});
  for (int c = 0; c < net.size(); ++c)
    for (int p = 0; p < 4; ++p) {
      if (seen[c][p]) continue;
      std::vector<Dart> cyc;  // outgoing darts along one direction
      Dart d{c, p};
      while (!seen[d.node][d.pos]) {
        seen[d.node][d.pos] = true;
        cyc.push_back(d);
        Dart in = net.across(d);
        seen[in.node][in.pos] = true;
        d = Dart{in.node, opposite(in.pos)};
      }
      cycles.push_back(std::move(cyc));
    }
  return cycles;
}

}  // namespace detail

// Parses one statement of the PD grammar:
//   PD[X(a,b,c,d), ...] comp(l1,l2,...) ... [name "str"]
//   UNLINK(k) [name "str"]
// `loops(k)` after the crossing list adds k crossingless components; it is
// only produced for split intermediate diagrams and rejected by the
// connectedness check otherwise.
inline LinkDiagram parse_pd(std::string_view text) {
  using K = DiagramError::Kind;
  detail::Cursor cur{text};
  LinkDiagram d;
  std::vector<std::vector<int>> comps;
  std::vector<std::array<int, 4>> tuples;

  if (cur.accept_word("UNLINK")) {
    cur.expect('(');
    d.free_loops = cur.integer();
    cur.expect(')');
    if (cur.accept_word("name")) d.name = cur.quoted();
    if (!cur.at_end()) cur.fail("trailing input");
    return d;
  }
  if (!cur.accept_word("PD")) cur.fail("expected 'PD' or 'UNLINK'");
  cur.expect('[');
  if (!cur.peek(']')) {
    do {
      if (!cur.accept('X')) cur.fail("expected 'X'");
      char open = cur.peek('[') ? '[' : '(';
      auto t = cur.int_list(open, open == '[' ? ']' : ')');
      if (t.size() != 4) cur.fail("crossing needs exactly four labels");
      tuples.push_back({t[0], t[1], t[2], t[3]});
    } while (cur.accept(','));
  }
  cur.expect(']');
  int loops = 0;
  while (!cur.at_end()) {
    if (cur.accept_word("comp")) {
      comps.push_back(cur.int_list('(', ')'));
      if (comps.back().empty()) cur.fail("empty component");
    } else if (cur.accept_word("loops")) {
      cur.expect('(');
      loops += cur.integer();
      cur.expect(')');
    } else if (cur.accept_word("name")) {
      d.name = cur.quoted();
    } else {
      cur.fail("expected 'comp', 'loops' or 'name'");
    }
  }

  if (tuples.empty()) {
    if (loops != 0) throw DiagramError(K::Syntax, "loops() needs crossings; use UNLINK(k)");
    if (comps.size() > 1)
      throw DiagramError(K::Syntax, "a crossingless diagram with several components must be UNLINK(k)");
    d.free_loops = 1;
    return d;
  }

  // Label multiplicity.
  std::map<int, std::vector<Dart>> where;
  for (int c = 0; c < static_cast<int>(tuples.size()); ++c)
    for (int p = 0; p < 4; ++p) where[tuples[c][p]].push_back({c, p});
  for (const auto& [label, ends] : where)
    if (ends.size() != 2)
      throw DiagramError(K::ArcMultiplicity, "arc " + std::to_string(label) + " appears " +
                                                  std::to_string(ends.size()) + " times");

  Net net;
  net.nodes.resize(tuples.size());
  for (const auto& [label, ends] : where) net.link(ends[0], ends[1]);
  auto label_at = [&](Dart x) { return tuples[x.node][x.pos]; };

  // Orient each strand cycle: from the matching comp() block when given,
  // otherwise from the under-strand rule (in at 0, out at 2).
  auto cycles = detail::strand_cycles(net);
  if (comps.empty() && cycles.size() > 1)
    throw DiagramError(K::Orientation, "comp() blocks are required for multi-component links");
  if (!comps.empty() && comps.size() != cycles.size())
    throw DiagramError(K::Orientation, "diagram has " + std::to_string(cycles.size()) +
                                           " components but " + std::to_string(comps.size()) +
                                           " comp() blocks were given");

  // Outgoing darts per crossing, decided cycle by cycle.
  std::vector<std::array<int, 4>> dir(tuples.size(), {0, 0, 0, 0});  // +1 out, -1 in
  std::vector<bool> comp_used(comps.size(), false);
  for (const auto& cyc : cycles) {
    // Forward: darts in cyc are outgoing. Backward: their partners are.
    std::vector<int> fwd, bwd;
    for (const Dart& o : cyc) fwd.push_back(label_at(o));
    bwd.assign(fwd.rbegin(), fwd.rend());
    bool forward = true;
    bool decided = false;
    bool matched = false;
    int matched_comp = -1;
    if (!comps.empty()) {
      auto matches = [](const std::vector<int>& walk, const std::vector<int>& want) {
        if (walk.size() != want.size()) return false;
        for (std::size_t r = 0; r < walk.size(); ++r) {
          bool ok = true;
          for (std::size_t i = 0; i < walk.size() && ok; ++i)
            ok = walk[(r + i) % walk.size()] == want[i];
          if (ok) return true;
        }
        return false;
      };
      for (std::size_t k = 0; k < comps.size() && !decided; ++k) {
        if (comp_used[k]) continue;
        bool f = matches(fwd, comps[k]);
        bool b = matches(bwd, comps[k]);
        if (!f && !b) continue;
        comp_used[k] = true;
        matched = true;
        matched_comp = static_cast<int>(k);
        decided = true;
        if (f && b) {
          // Palindromic cycle (e.g. a single-arc or two-arc component):
          // the under-strand rule settles it below.
          decided = false;
          forward = true;
        } else {
          forward = f;
        }
      }
    }
    if (!comps.empty() && !matched)
      throw DiagramError(K::Orientation, "a component does not match any comp() block");
    if (!decided) {
      bool found = false;
      for (const Dart& o : cyc) {
        Dart in = net.across(o);
        if (o.pos % 2 == 0) {  // leaves this crossing along the under-strand
          forward = (o.pos == 2);
          found = true;
          break;
        }
        if (in.pos % 2 == 0) {
          forward = (in.pos == 0);
          found = true;
          break;
        }
      }
      // A two-arc component that only passes over reads the same both ways
      // round; its first comp() arc ends at the earlier of its two crossings.
      if (!found && matched_comp >= 0 && cyc.size() == 2) {
        const int first = comps[matched_comp][0];
        for (const Dart& o : cyc)
          if (label_at(o) == first) forward = net.across(o).node < o.node;
        found = true;
      }
      if (!found)
        throw DiagramError(K::Orientation, "cannot infer orientation: component never passes under");
    }
    for (const Dart& o : cyc) {
      Dart in = net.across(o);
      dir[o.node][o.pos] = forward ? +1 : -1;
      dir[in.node][in.pos] = forward ? -1 : +1;
    }
  }
  if (!comps.empty() && std::find(comp_used.begin(), comp_used.end(), false) != comp_used.end())
    throw DiagramError(K::Orientation, "a comp() block does not match any strand of the diagram");

  for (int c = 0; c < static_cast<int>(tuples.size()); ++c) {
    const auto& dc = dir[c];
    if (dc[0] != -1 || dc[2] != +1)
      throw DiagramError(K::Orientation, "crossing " + std::to_string(c + 1) +
                                             ": under-strand must enter at the first label");
    if (dc[1] == dc[3])
      throw DiagramError(K::Orientation,
                         "crossing " + std::to_string(c + 1) + ": over-strand direction undefined");
    net.nodes[c].over_d_to_b = (dc[3] == -1);
  }

  validate_net(net, true);

  d.crossings.resize(tuples.size());
  for (int c = 0; c < static_cast<int>(tuples.size()); ++c) {
    d.crossings[c].arcs = tuples[c];
    d.crossings[c].sign = net.nodes[c].sign();
  }
  for (const auto& walk : component_walks(net)) {
    std::vector<int> comp;
    for (const Dart& o : walk) comp.push_back(label_at(o));
    d.components.push_back(std::move(comp));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace detail {

// Relabel a connected piece by breadth-first search from `start`: crossings
// are numbered in discovery order, arcs in order of first sight scanning
// positions 0..3. Returns the encoded piece.
inline std::vector<int> bfs_code(const Net& net, int start, std::vector<int>* order = nullptr) {
  std::vector<int> node_id(net.nodes.size(), -1);
  std::map<std::pair<Dart, Dart>, int> arc_id;
  std::vector<int> queue{start};
  node_id[start] = 0;
  std::vector<int> code;
  int next_arc = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int c = queue[qi];
    for (int p = 0; p < 4; ++p) {
      Dart here{c, p}, there = net.across(here);
      auto key = std::minmax(here, there);
      auto [it, fresh] = arc_id.try_emplace({key.first, key.second}, next_arc);
      if (fresh) ++next_arc;
      code.push_back(it->second);
      if (node_id[there.node] < 0) {
        node_id[there.node] = static_cast<int>(queue.size());
        queue.push_back(there.node);
      }
    }
    code.push_back(net.nodes[c].sign());
  }
  if (order) *order = queue;
  return code;
}

}  // namespace detail

// Crossing order and arc labels that make the diagram's encoding minimal over
// every BFS start; identical for diagrams that differ only by relabelling.
inline LinkDiagram canonical(const LinkDiagram& d) {
  if (d.crossings.empty()) {
    LinkDiagram out;
    out.free_loops = d.free_loops;
    out.name = d.name;
    return out;
  }
  Net net = to_net(d);
  std::vector<int> best_code, best_order;
  for (int s = 0; s < net.size(); ++s) {
    std::vector<int> order;
    auto code = detail::bfs_code(net, s, &order);
    if (order.size() != net.nodes.size()) continue;  // split: handled below
    if (best_code.empty() || code < best_code) {
      best_code = std::move(code);
      best_order = std::move(order);
    }
  }
  if (best_order.empty()) {
    // Split diagram: keep the given crossing order, relabel along walks.
    return from_net(net, d.name);
  }
  Net sorted;
  sorted.free_loops = net.free_loops;
  sorted.nodes.resize(net.nodes.size());
  std::vector<int> new_id(net.nodes.size());
  for (int i = 0; i < static_cast<int>(best_order.size()); ++i) new_id[best_order[i]] = i;
  for (int c = 0; c < net.size(); ++c) {
    auto& n = sorted.nodes[new_id[c]];
    n.over_d_to_b = net.nodes[c].over_d_to_b;
    for (int p = 0; p < 4; ++p) n.nbr[p] = Dart{new_id[net.nodes[c].nbr[p].node], net.nodes[c].nbr[p].pos};
  }
  // Arc labels in BFS order of first sight.
  LinkDiagram out;
  out.name = d.name;
  out.free_loops = sorted.free_loops;
  out.crossings.resize(sorted.nodes.size());
  std::map<std::pair<Dart, Dart>, int> arc_id;
  int next_arc = 1;
  for (int c = 0; c < sorted.size(); ++c) {
    out.crossings[c].sign = sorted.nodes[c].sign();
    for (int p = 0; p < 4; ++p) {
      Dart here{c, p}, there = sorted.across(here);
      auto key = std::minmax(here, there);
      auto [it, fresh] = arc_id.try_emplace({key.first, key.second}, next_arc);
      if (fresh) ++next_arc;
      out.crossings[c].arcs[p] = it->second;
    }
  }
  for (const auto& walk : component_walks(sorted)) {
    std::vector<int> comp;
    for (const Dart& o : walk) comp.push_back(out.crossings[o.node].arcs[o.pos]);
    auto least = std::min_element(comp.begin(), comp.end());
    std::rotate(comp.begin(), least, comp.end());
    out.components.push_back(std::move(comp));
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

// Text form of the diagram as given (no relabelling).
inline std::string to_pd_string(const LinkDiagram& d) {
  std::string out;
  if (d.crossings.empty()) {
    out = d.free_loops == 1 ? "PD[] comp(1)" : "UNLINK(" + std::to_string(d.free_loops) + ")";
  } else {
    out = "PD[";
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
      const auto& a = d.crossings[i].arcs;
      if (i) out += ",";
      out += "X(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) +
             "," + std::to_string(a[3]) + ")";
    }
    out += "]";
    for (auto comp : d.components) {
      if (comp.size() == 2) {
        // Over-only two-arc component: list first the arc that ends at the
        // earlier crossing, which is how the parser reads it back.
        int head = -1;
        bool under = false;
        for (std::size_t i = 0; i < d.crossings.size(); ++i) {
          const auto& c = d.crossings[i];
          if (c.arcs[0] == comp[0] || c.arcs[0] == comp[1]) under = true;
          if (head < 0 && (c.arcs[c.over_in()] == comp[0] || c.arcs[c.over_in()] == comp[1]))
            head = c.arcs[c.over_in()];
        }
        if (!under && head == comp[1]) std::swap(comp[0], comp[1]);
      }
      out += " comp(";
      for (std::size_t i = 0; i < comp.size(); ++i) out += (i ? "," : "") + std::to_string(comp[i]);
      out += ")";
    }
    if (d.free_loops > 0) out += " loops(" + std::to_string(d.free_loops) + ")";
  }
  if (!d.name.empty()) out += " name \"" + d.name + "\"";
  return out;
}

// Canonical serialization; parse_pd(serialize(d)) == canonical(d).
inline std::string serialize(const LinkDiagram& d) { return to_pd_string(canonical(d)); }

inline bool same_up_to_relabeling(const LinkDiagram& a, const LinkDiagram& b) {
  LinkDiagram ca = canonical(a), cb = canonical(b);
  ca.name.clear();
  cb.name.clear();
  return to_pd_string(ca) == to_pd_string(cb);
}

// ---------------------------------------------------------------------------
// Mirror and reversal

// Switches every crossing: the over-strand becomes the under-strand.
inline Net switch_crossing(Net net, int c) {
  auto& node = net.nodes[c];
  std::array<Dart, 4> old = node.nbr;
  // Positive: new tuple (d,a,b,c); negative: new tuple (b,c,d,a).
  int shift = node.over_d_to_b ? 3 : 1;
  std::array<int, 4> new_pos_of_old{};
  for (int k = 0; k < 4; ++k) new_pos_of_old[(k + shift) % 4] = k;
  for (int k = 0; k < 4; ++k) {
    Dart o = old[(k + shift) % 4];
    if (o.node == c) o.pos = new_pos_of_old[o.pos];
    node.nbr[k] = o;
  }
  for (int k = 0; k < 4; ++k) {
    Dart o = node.nbr[k];
    if (o.node != c) net.nodes[o.node].nbr[o.pos] = Dart{c, k};
  }
  node.over_d_to_b = !node.over_d_to_b;
  return net;
}

inline LinkDiagram mirror(const LinkDiagram& d) {
  Net net = to_net(d);
  for (int c = 0; c < net.size(); ++c) net = switch_crossing(std::move(net), c);
  LinkDiagram out = from_net(net, d.name.empty() ? std::string{} : d.name + "*");
  return out;
}

// Reverses the orientation of component k (index into d.components). Each
// crossing tuple is rotated so that it again starts at the incoming under-arc.
inline LinkDiagram reverse_component(const LinkDiagram& d, int k) {
  if (k < 0 || k >= static_cast<int>(d.components.size()))
    throw DiagramError(DiagramError::Kind::Index, "component index out of range");
  std::set<int> labels(d.components[k].begin(), d.components[k].end());
  LinkDiagram out = d;
  for (auto& x : out.crossings) {
    bool under_rev = labels.count(x.arcs[0]) > 0;
    bool over_rev = labels.count(x.arcs[1]) > 0;
    // The under strand now enters at the old position 2.
    if (under_rev) std::rotate(x.arcs.begin(), x.arcs.begin() + 2, x.arcs.end());
    if (under_rev != over_rev) x.sign = -x.sign;
  }
  std::reverse(out.components[k].begin(), out.components[k].end());
  return out;
}

}  // namespace linkalt
