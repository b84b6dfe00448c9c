#pragma once

// Random diagrams and surfaces for the property suites.
//
// Diagrams: closures of random braid words on 2-4 strands (every generator
// used, so the closure is connected), a few pretzels, then random R1/R2
// insertions and component reversals, capped at a crossing budget. Fixed
// seeds keep every run identical.

#include <linkalt/diagram.hpp>
#include <linkalt/flatsurf.hpp>
#include <linkalt/moves.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <vector>

namespace linkalt::testing {

using Rng = std::mt19937_64;

// Closure of a braid word; generator +-(i+1) crosses strands i and i+1,
// positive when the strand from the lower left passes over.
inline LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  Net net;
  std::vector<std::optional<Dart>> first(strands), pending(strands);
  auto arrive = [&](int level, Dart in) {
    if (pending[level]) net.link(*pending[level], in);
    else first[level] = in;
  };
  for (int g : word) {
    const int i = std::abs(g) - 1;
    const int k = net.size();
    net.nodes.emplace_back();
    // ccw: SW in (left), SE in (right), NE out, NW out. Strand 0 runs SW -> NE.
    std::array<detail::Slot, 4> slots{{{0, true}, {1, true}, {0, false}, {1, false}}};
    auto pos = detail::place_node(net.nodes[k], slots, 0);
    if (net.nodes[k].sign() != (g > 0 ? 1 : -1)) pos = detail::place_node(net.nodes[k], slots, 1);
    arrive(i, {k, pos[0]});
    arrive(i + 1, {k, pos[1]});
    pending[i] = Dart{k, pos[3]};
    pending[i + 1] = Dart{k, pos[2]};
  }
  for (int l = 0; l < strands; ++l) {
    if (pending[l]) net.link(*pending[l], *first[l]);
    else ++net.free_loops;
  }
  validate_net(net);
  return from_net(net);
}

inline std::vector<int> random_braid_word(Rng& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1), coin(0, 1);
  std::vector<int> w;
  for (int i = 1; i < strands; ++i) w.push_back(i);
  while (static_cast<int>(w.size()) < length) w.push_back(gen(rng));
  std::shuffle(w.begin(), w.end(), rng);
  for (int& g : w)
    if (coin(rng)) g = -g;
  return w;
}

inline LinkDiagram random_diagram(Rng& rng, int max_crossings = 8) {
  std::uniform_int_distribution<int> pct(0, 99);
  LinkDiagram d;
  if (pct(rng) < 15) {
    std::uniform_int_distribution<int> np(2, 4), val(-3, 3);
    std::vector<int> p;
    int total = 0;
    for (int k = np(rng); k > 0; --k) {
      int x = 0;
      while (x == 0) x = val(rng);
      if (total + std::abs(x) > max_crossings) break;
      total += std::abs(x);
      p.push_back(x);
    }
    if (p.size() < 2) p = {1, 1};
    d = pretzel_diagram(p);
  } else {
    std::uniform_int_distribution<int> ns(2, 4);
    const int strands = ns(rng);
    std::uniform_int_distribution<int> len(strands - 1, std::max(strands - 1, max_crossings - 2));
    d = braid_closure(strands, random_braid_word(rng, strands, len(rng)));
  }

  Net net = to_net(d);
  for (int tries = 0; tries < 3 && net.size() < max_crossings; ++tries) {
    if (pct(rng) < 50) continue;
    std::uniform_int_distribution<int> node(0, net.size() - 1), p4(0, 3);
    if (pct(rng) < 50 || net.size() + 2 > max_crossings) {
      net = add_r1(std::move(net), {node(rng), p4(rng)}, pct(rng) < 50);
    } else {
      Dart a, b;
      if (random_r2_site(net, rng, a, b)) net = add_r2(std::move(net), a, b, pct(rng) < 50);
    }
  }
  d = from_net(net);
  for (int k = 0; k < static_cast<int>(d.components.size()); ++k)
    if (pct(rng) < 30) d = reverse_component(d, k);
  return d;
}

// ---------------------------------------------------------------------------
// Surfaces

// A random primitive piece: a ring, a bundle of parallel bands or a lone
// disc, grown by leaves and parallel copies of bands.
inline PrimitiveFlatSurface random_primitive(Rng& rng, int max_bands = 6) {
  std::uniform_int_distribution<int> pct(0, 99);
  PrimitiveFlatSurface p;
  p.sign = pct(rng) < 50 ? 1 : -1;
  int shape = pct(rng);
  if (shape < 30) {
    p = detail::ring(2 * std::uniform_int_distribution<int>(1, std::max(1, max_bands / 2))(rng), p.sign);
  } else if (shape < 85) {
    int m = std::uniform_int_distribution<int>(1, std::max(1, std::min(4, max_bands)))(rng);
    p.discs = 2;
    p.rot.assign(2, {});
    for (int i = 0; i < m; ++i) {
      p.bands.push_back({0, 1});
      p.rot[0].push_back(i);
      p.rot[1].insert(p.rot[1].begin(), i);
    }
  } else {
    p.discs = 1;
    p.rot.assign(1, {});
  }
  int grow = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int g = 0; g < grow && p.band_count() < max_bands; ++g) {
    PrimitiveFlatSurface q = p;
    const int e = q.band_count();
    if (pct(rng) < 50 || q.bands.empty()) {
      int x = std::uniform_int_distribution<int>(0, q.discs - 1)(rng);
      int y = q.discs++;
      q.bands.push_back({x, y});
      auto& rx = q.rot[x];
      rx.insert(rx.begin() + std::uniform_int_distribution<std::size_t>(0, rx.size())(rng), e);
      q.rot.push_back({e});
    } else {
      int f = std::uniform_int_distribution<int>(0, e - 1)(rng);
      auto [x, y] = q.bands[f];
      q.bands.push_back({x, y});
      auto& rx = q.rot[x];
      rx.insert(std::find(rx.begin(), rx.end(), f) + 1, e);
      auto& ry = q.rot[y];
      ry.insert(std::find(ry.begin(), ry.end(), f), e);
    }
    try {
      validate(q);
      p = std::move(q);
    } catch (const SurfaceError&) {
    }
  }
  validate(p);
  return p;
}

// A uniformly random order-preserving cyclic shuffle of the ends at A.a and B.b.
inline std::vector<EndRef> random_shuffle(Rng& rng, const FlatSurface& A, int a, const FlatSurface& B, int b) {
  const auto& oa = A.order[a];
  auto ob = B.order[b];
  if (!ob.empty())
    std::rotate(ob.begin(), ob.begin() + std::uniform_int_distribution<std::size_t>(0, ob.size() - 1)(rng), ob.end());
  std::vector<bool> from_b(oa.size() + ob.size(), false);
  std::fill(from_b.begin(), from_b.begin() + ob.size(), true);
  std::shuffle(from_b.begin(), from_b.end(), rng);
  std::vector<EndRef> out;
  std::size_t ia = 0, ib = 0;
  for (bool fb : from_b) out.push_back(fb ? EndRef{Side::B, ob[ib++]} : EndRef{Side::A, oa[ia++]});
  return out;
}

inline FlatSurface random_plumb(Rng& rng, const FlatSurface& A, const FlatSurface& B) {
  int a = std::uniform_int_distribution<int>(0, A.disc_count() - 1)(rng);
  int b = std::uniform_int_distribution<int>(0, B.disc_count() - 1)(rng);
  auto side = std::uniform_int_distribution<int>(0, 1)(rng) ? Overturn::Over : Overturn::Under;
  return plumb(A, a, B, b, random_shuffle(rng, A, a, B, b), side);
}

// With bare_trivial, pieces of Betti number zero (trees of discs, isotopic
// to a disc) are replaced by a lone disc.
inline FlatSurface random_surface(Rng& rng, int pieces, int max_bands = 5, bool bare_trivial = false) {
  auto piece = [&] {
    auto p = random_primitive(rng, max_bands);
    if (bare_trivial && p.betti() == 0) {
      p.discs = 1;
      p.bands.clear();
      p.rot.assign(1, {});
    }
    return from_primitive(p);
  };
  FlatSurface s = piece();
  for (int i = 1; i < pieces; ++i) s = random_plumb(rng, s, piece());
  return s;
}

}  // namespace linkalt::testing
