#pragma once

// Local moves on the rotation-system view: splicing crossings out, oriented
// smoothing, crossing-removing Reidemeister I/II, and the crossing-adding
// R1/R2 insertions used for invariance tests and random corpora.

#include <linkalt/diagram.hpp>

#include <array>
#include <random>
#include <vector>

namespace linkalt {

namespace detail {

// Removes every node with remove[c] set. pairing[c][p] is the position that
// p is joined to inside node c once the crossing is gone. Closed strands
// that never leave the removed set become free loops.
inline Net splice_out(const Net& net, const std::vector<bool>& remove,
                      const std::vector<std::array<int, 4>>& pairing) {
  const int n = net.size();
  std::vector<int> new_id(n, -1);
  Net out;
  out.free_loops = net.free_loops;
  for (int c = 0; c < n; ++c)
    if (!remove[c]) {
      new_id[c] = out.size();
      out.nodes.push_back(net.nodes[c]);
    }
  auto remap = [&](Dart x) { return Dart{new_id[x.node], x.pos}; };
  for (auto& node : out.nodes)
    for (auto& o : node.nbr)
      if (!remove[o.node]) o = remap(o);

  std::vector<std::array<bool, 4>> used(n, {false, false, false, false});
  for (int c = 0; c < n; ++c) {
    if (!remove[c]) continue;
    for (int p = 0; p < 4; ++p) {
      if (used[c][p]) continue;
      Dart ext = net.nodes[c].nbr[p];
      if (remove[ext.node]) continue;
      // Walk from the kept dart `ext` through removed nodes.
      Dart cur{c, p};
      while (true) {
        used[cur.node][cur.pos] = true;
        int q = pairing[cur.node][cur.pos];
        used[cur.node][q] = true;
        Dart next = net.nodes[cur.node].nbr[q];
        if (!remove[next.node]) {
          out.link(remap(ext), remap(next));
          break;
        }
        cur = next;
      }
    }
  }
  for (int c = 0; c < n; ++c) {
    if (!remove[c]) continue;
    for (int p = 0; p < 4; ++p) {
      if (used[c][p]) continue;
      Dart cur{c, p};
      while (!used[cur.node][cur.pos]) {
        used[cur.node][cur.pos] = true;
        int q = pairing[cur.node][cur.pos];
        used[cur.node][q] = true;
        cur = net.nodes[cur.node].nbr[q];
      }
      ++out.free_loops;
    }
  }
  return out;
}

inline std::array<int, 4> straight_pairing() { return {2, 3, 0, 1}; }

}  // namespace detail

// Oriented smoothing of crossing c: the incoming under-end joins the
// outgoing over-end, the incoming over-end joins the outgoing under-end.
inline Net smooth_crossing(const Net& net, int c) {
  std::vector<bool> remove(net.nodes.size(), false);
  remove[c] = true;
  std::vector<std::array<int, 4>> pairing(net.nodes.size(), detail::straight_pairing());
  const auto& node = net.nodes[c];
  auto& pr = pairing[c];
  pr[0] = node.over_out();
  pr[node.over_out()] = 0;
  pr[node.over_in()] = 2;
  pr[2] = node.over_in();
  return detail::splice_out(net, remove, pairing);
}

// A crossing whose two adjacent positions are joined by an edge (a kink).
inline int find_r1(const Net& net) {
  for (int c = 0; c < net.size(); ++c)
    for (int p = 0; p < 4; ++p) {
      Dart o = net.nodes[c].nbr[p];
      if (o.node == c && (o.pos == (p + 1) % 4 || o.pos == (p + 3) % 4)) return c;
    }
  return -1;
}

// A bigon face whose one strand passes over at both corners.
inline std::array<int, 2> find_r2(const Net& net) {
  for (const auto& face : detail::trace_faces(net)) {
    if (face.size() != 2) continue;
    Dart d1 = face[0];
    Dart e1 = net.across(d1);
    if (d1.node == e1.node) continue;
    if (d1.pos % 2 == e1.pos % 2) return {d1.node, e1.node};
  }
  return {-1, -1};
}

// Exhaustively removes R1 kinks and R2 bigons.
inline Net simplify(Net net) {
  while (true) {
    std::vector<bool> remove(net.nodes.size(), false);
    if (int c = find_r1(net); c >= 0) {
      remove[c] = true;
    } else if (auto pair = find_r2(net); pair[0] >= 0) {
      remove[pair[0]] = remove[pair[1]] = true;
    } else {
      return net;
    }
    std::vector<std::array<int, 4>> pairing(net.nodes.size(), detail::straight_pairing());
    net = detail::splice_out(net, remove, pairing);
  }
}

inline LinkDiagram simplify(const LinkDiagram& d) {
  return from_net(simplify(to_net(d)), d.name);
}

// ---------------------------------------------------------------------------
// Crossing-adding moves

namespace detail {

struct Slot {
  int strand;   // 0 or 1
  bool incoming;
};

// Builds a node from four slots listed ccw; position 0 goes to the incoming
// slot of the under strand. Returns, for each slot, its position.
inline std::array<int, 4> place_node(Net::Node& node, const std::array<Slot, 4>& slots, int over_strand) {
  int start = -1;
  for (int i = 0; i < 4; ++i)
    if (slots[i].strand != over_strand && slots[i].incoming) start = i;
  std::array<int, 4> pos{};
  for (int i = 0; i < 4; ++i) pos[i] = (i - start + 4) % 4;
  for (int i = 0; i < 4; ++i)
    if (slots[i].strand == over_strand && slots[i].incoming) node.over_d_to_b = (pos[i] == 3);
  return pos;
}

}  // namespace detail

// Adds a kink on the edge leaving dart `d`, on the side of the face to the
// right of d. `first_pass_over` picks which passage goes over.
inline Net add_r1(Net net, Dart d, bool first_pass_over) {
  Dart a = d, b = net.across(d);
  const bool forward = !net.nodes[a.node].is_incoming(a.pos);  // strand flows a -> b
  const int k = net.size();
  net.nodes.emplace_back();
  // Slots ccw: E (loop), N (to b), W (to a), S (loop). Strand 0 = W..E, 1 = S..N.
  std::array<detail::Slot, 4> slots{{{0, !forward}, {1, !forward}, {0, forward}, {1, forward}}};
  auto pos = detail::place_node(net.nodes[k], slots, first_pass_over ? 0 : 1);
  net.link({k, pos[2]}, a);
  net.link({k, pos[1]}, b);
  net.link({k, pos[0]}, {k, pos[3]});
  return net;
}

// Pushes the edge of d1 across the edge of d2 inside the face both bound on
// their right. Requires d1 and d2 in the same face orbit on different edges.
inline Net add_r2(Net net, Dart d1, Dart d2, bool first_over) {
  Dart a1 = d1, b1 = net.across(d1);
  Dart a2 = d2, b2 = net.across(d2);
  const bool f1 = !net.nodes[a1.node].is_incoming(a1.pos);  // s1 flows west -> east
  const bool f2 = !net.nodes[a2.node].is_incoming(a2.pos);  // s2 flows east -> west
  const int x = net.size(), y = x + 1;
  net.nodes.emplace_back();
  net.nodes.emplace_back();
  // X slots ccw: E (s2 to Y), NW (s1 from a1), W (s2 to b2), SE (s1 to Y).
  std::array<detail::Slot, 4> xs{{{1, f2}, {0, f1}, {1, !f2}, {0, !f1}}};
  // Y slots ccw: E (s2 from a2), NE (s1 to b1), W (s2 to X), SW (s1 from X).
  std::array<detail::Slot, 4> ys{{{1, f2}, {0, !f1}, {1, !f2}, {0, f1}}};
  int over = first_over ? 0 : 1;
  auto px = detail::place_node(net.nodes[x], xs, over);
  auto py = detail::place_node(net.nodes[y], ys, over);
  net.link(a1, {x, px[1]});
  net.link({x, px[3]}, {y, py[3]});
  net.link({y, py[1]}, b1);
  net.link(a2, {y, py[0]});
  net.link({y, py[2]}, {x, px[0]});
  net.link({x, px[2]}, b2);
  return net;
}

// A random R2 site: two darts on distinct edges of a common face.
template <typename Rng>
inline bool random_r2_site(const Net& net, Rng& rng, Dart& d1, Dart& d2) {
  auto faces = detail::trace_faces(net);
  for (int attempt = 0; attempt < 32; ++attempt) {
    const auto& face = faces[std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng)];
    if (face.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(0, face.size() - 1);
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Dart a = face[i], b = face[j];
    Dart ao = net.across(a);
    if (b == ao) continue;  // same edge seen from both sides
    d1 = a;
    d2 = b;
    return true;
  }
  return false;
}

}  // namespace linkalt
