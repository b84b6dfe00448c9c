#pragma once

// Flat surfaces: discs lying side by side in a plane, joined by bands that
// each carry one half-twist, and their plumbings (Murasugi sums) along
// discs. A band of sign e becomes one crossing of sign e in the boundary.
//
// Every disc keeps the cyclic order of its band ends read along its boundary
// in the surface orientation. That order, the band signs and the gluing tree
// are enough to walk the boundary and to emit a diagram of it.

#include <linkalt/classify.hpp>
#include <linkalt/diagram.hpp>
#include <linkalt/moves.hpp>
#include <linkalt/seifert.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkalt {

class SurfaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Band {
  int a = 0, b = 0;
};

// rot[x] lists the bands at disc x counter-clockwise as seen from above.
// Disc 0 faces up; the others face up or down by parity.
struct PrimitiveFlatSurface {
  int discs = 1;
  std::vector<Band> bands;
  int sign = +1;
  std::vector<std::vector<int>> rot;

  int band_count() const { return static_cast<int>(bands.size()); }
  int betti() const { return band_count() - discs + 1; }
};

namespace detail {

inline std::vector<int> two_colouring(int discs, const std::vector<Band>& bands) {
  std::vector<std::vector<int>> adj(discs);
  for (const auto& b : bands) {
    adj[b.a].push_back(b.b);
    adj[b.b].push_back(b.a);
  }
  std::vector<int> colour(discs, -1);
  for (int s = 0; s < discs; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          q.push(y);
        } else if (colour[y] == colour[x]) {
          throw SurfaceError("band graph is not bipartite: the surface would be non-orientable");
        }
      }
    }
  }
  return colour;
}

inline int other_end(const Band& b, int x) { return b.a == x ? b.b : b.a; }

inline bool is_cyclic_rotation(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  const std::size_t off = static_cast<std::size_t>(it - b.begin());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(i + off) % b.size()]) return false;
  return true;
}

}  // namespace detail

// Bands in index order around each disc; fine whenever no disc has more than
// two bands, otherwise it may fail the planarity check.
inline std::vector<std::vector<int>> default_rotation(int discs, const std::vector<Band>& bands) {
  std::vector<std::vector<int>> rot(discs);
  for (int e = 0; e < static_cast<int>(bands.size()); ++e) {
    if (bands[e].a >= 0 && bands[e].a < discs) rot[bands[e].a].push_back(e);
    if (bands[e].b >= 0 && bands[e].b < discs) rot[bands[e].b].push_back(e);
  }
  return rot;
}

inline void validate(const PrimitiveFlatSurface& p) {
  if (p.discs < 1) throw SurfaceError("a piece needs at least one disc");
  if (p.sign != 1 && p.sign != -1) throw SurfaceError("band sign must be +1 or -1");
  const int m = p.band_count();
  for (const auto& b : p.bands) {
    if (b.a < 0 || b.a >= p.discs || b.b < 0 || b.b >= p.discs)
      throw SurfaceError("band refers to a missing disc");
    if (b.a == b.b) throw SurfaceError("band joins a disc to itself");
  }
  if (static_cast<int>(p.rot.size()) != p.discs)
    throw SurfaceError("rotation system must list every disc");
  for (int x = 0; x < p.discs; ++x) {
    std::vector<int> want, got = p.rot[x];
    for (int e = 0; e < m; ++e)
      if (p.bands[e].a == x || p.bands[e].b == x) want.push_back(e);
    std::sort(got.begin(), got.end());
    if (got != want)
      throw SurfaceError("rotation at disc " + std::to_string(x) + " does not list its bands exactly once");
  }
  detail::UnionFind uf(p.discs);
  int parts = p.discs;
  for (const auto& b : p.bands)
    if (uf.unite(b.a, b.b)) --parts;
  if (parts != 1) throw SurfaceError("piece is not connected");
  detail::two_colouring(p.discs, p.bands);

  if (m == 0) return;
  // Faces of the band graph under the rotation system; planar iff
  // V - E + F = 2.
  std::vector<std::array<bool, 2>> seen(m, {false, false});
  int faces = 0;
  auto index_in = [&](int x, int e) {
    const auto& r = p.rot[x];
    return static_cast<int>(std::find(r.begin(), r.end(), e) - r.begin());
  };
  for (int e0 = 0; e0 < m; ++e0)
    for (int s0 = 0; s0 < 2; ++s0) {
      if (seen[e0][s0]) continue;
      ++faces;
      int e = e0, s = s0;  // dart along band e leaving end s
      while (!seen[e][s]) {
        seen[e][s] = true;
        const int y = s == 0 ? p.bands[e].b : p.bands[e].a;
        const auto& r = p.rot[y];
        const int f = r[(index_in(y, e) + 1) % r.size()];
        e = f;
        s = p.bands[f].a == y ? 0 : 1;
      }
    }
  if (p.discs - m + faces != 2) throw SurfaceError("rotation system is not planar");
}

// Order of band ends along each disc boundary in the surface orientation:
// counter-clockwise on discs facing up, clockwise on the others.
inline std::vector<std::vector<int>> boundary_orders(const PrimitiveFlatSurface& p) {
  auto colour = detail::two_colouring(p.discs, p.bands);
  std::vector<std::vector<int>> out = p.rot;
  for (int x = 0; x < p.discs; ++x)
    if (colour[x] == 1) std::reverse(out[x].begin(), out[x].end());
  return out;
}

// ---------------------------------------------------------------------------
// Generalised flat surfaces

struct SurfaceBand {
  std::array<int, 2> disc{};
  int sign = +1;
  int piece = 0;
  int local = 0;  // band index inside its piece
};

struct SurfacePiece {
  PrimitiveFlatSurface surface;
  std::string name;
  std::vector<int> disc;  // global disc of each local disc
  int first_band = 0;
};

// Side of the gluing disc the new piece is folded to.
enum class Overturn { Under, Over };

struct SurfaceGluing {
  int piece_a = 0, disc_a = 0;  // local disc of piece_a
  int piece_b = 0, disc_b = 0;
  std::vector<int> shuffle;  // merged boundary order, global band ids
  Overturn side = Overturn::Under;
};

struct FlatSurface {
  std::vector<SurfacePiece> pieces;
  std::vector<SurfaceGluing> gluings;
  std::vector<SurfaceBand> bands;
  std::vector<std::vector<int>> order;  // per global disc
  // Pieces meeting each disc in the order their sheets leave its boundary,
  // starting just above the disc and going over the top round to just
  // below it.
  std::vector<std::vector<int>> pages;

  int disc_count() const { return static_cast<int>(order.size()); }
  int band_count() const { return static_cast<int>(bands.size()); }
  int betti() const { return band_count() - disc_count() + 1; }
  int piece_count() const { return static_cast<int>(pieces.size()); }
  // Pieces that are not just a disc in disguise.
  int nontrivial_pieces() const {
    int k = 0;
    for (const auto& p : pieces) k += p.surface.betti() > 0;
    return k;
  }
  int other_end(int band, int disc) const {
    return bands[band].disc[0] == disc ? bands[band].disc[1] : bands[band].disc[0];
  }
};

inline FlatSurface from_primitive(const PrimitiveFlatSurface& p, std::string name = "p1") {
  validate(p);
  FlatSurface s;
  SurfacePiece piece;
  piece.surface = p;
  piece.name = std::move(name);
  piece.disc.resize(p.discs);
  std::iota(piece.disc.begin(), piece.disc.end(), 0);
  s.pieces.push_back(std::move(piece));
  for (int e = 0; e < p.band_count(); ++e)
    s.bands.push_back({{p.bands[e].a, p.bands[e].b}, p.sign, 0, e});
  s.order = boundary_orders(p);
  s.pages.assign(p.discs, {0});
  return s;
}

enum class Side { A, B };

struct EndRef {
  Side side = Side::A;
  int band = 0;  // band id inside its own surface
};

namespace detail {

inline int first_piece_with_disc(const FlatSurface& s, int disc, int* local) {
  for (int i = 0; i < s.piece_count(); ++i) {
    const auto& d = s.pieces[i].disc;
    auto it = std::find(d.begin(), d.end(), disc);
    if (it != d.end()) {
      *local = static_cast<int>(it - d.begin());
      return i;
    }
  }
  throw SurfaceError("disc " + std::to_string(disc) + " belongs to no piece");
}

}  // namespace detail

// Plumbs B onto A by identifying disc b of B with disc a of A. `shuffle` is
// the merged cyclic order of band ends around the identified disc; it must
// contain both sides' ends there, each side in its own cyclic order.
inline FlatSurface plumb(const FlatSurface& A, int a, const FlatSurface& B, int b,
                         const std::vector<EndRef>& shuffle, Overturn side = Overturn::Under) {
  if (a < 0 || a >= A.disc_count()) throw SurfaceError("gluing disc missing from the first surface");
  if (b < 0 || b >= B.disc_count()) throw SurfaceError("gluing disc missing from the second surface");

  std::vector<int> seq_a, seq_b;
  for (const auto& r : shuffle) {
    const auto& S = r.side == Side::A ? A : B;
    if (r.band < 0 || r.band >= S.band_count()) throw SurfaceError("shuffle names a missing band");
    (r.side == Side::A ? seq_a : seq_b).push_back(r.band);
  }
  if (!detail::is_cyclic_rotation(seq_a, A.order[a]) || !detail::is_cyclic_rotation(seq_b, B.order[b]))
    throw SurfaceError("shuffle must hold every band end at the gluing discs once, in each side's cyclic order");

  const int da = A.disc_count(), ea = A.band_count(), pa = A.piece_count();
  auto map_disc = [&](int g) { return g == b ? a : da + (g < b ? g : g - 1); };

  FlatSurface out = A;
  auto taken = [&](const std::string& n) {
    return std::any_of(out.pieces.begin(), out.pieces.end(), [&](const SurfacePiece& q) { return q.name == n; });
  };
  for (auto piece : B.pieces) {
    if (taken(piece.name)) piece.name = "p" + std::to_string(out.piece_count() + 1);
    while (taken(piece.name)) piece.name += "x";
    for (auto& g : piece.disc) g = map_disc(g);
    piece.first_band += ea;
    out.pieces.push_back(std::move(piece));
  }
  for (auto band : B.bands) {
    for (auto& g : band.disc) g = map_disc(g);
    band.piece += pa;
    out.bands.push_back(band);
  }
  for (auto gl : B.gluings) {
    gl.piece_a += pa;
    gl.piece_b += pa;
    for (auto& e : gl.shuffle) e += ea;
    out.gluings.push_back(std::move(gl));
  }
  out.order.resize(da + B.disc_count() - 1);
  out.pages.resize(da + B.disc_count() - 1);
  for (int g = 0; g < B.disc_count(); ++g) {
    auto pg = B.pages[g];
    for (auto& p : pg) p += pa;
    if (g == b) {
      auto& dst = out.pages[a];
      dst.insert(side == Overturn::Over ? dst.begin() : dst.end(), pg.begin(), pg.end());
      continue;
    }
    out.pages[map_disc(g)] = pg;
    auto& o = out.order[map_disc(g)];
    o = B.order[g];
    for (auto& e : o) e += ea;
  }
  std::vector<int> merged;
  for (const auto& r : shuffle) merged.push_back(r.side == Side::A ? r.band : r.band + ea);
  out.order[a] = merged;

  SurfaceGluing gl;
  gl.piece_a = detail::first_piece_with_disc(A, a, &gl.disc_a);
  gl.piece_b = detail::first_piece_with_disc(B, b, &gl.disc_b) + pa;
  gl.shuffle = merged;
  gl.side = side;
  out.gluings.push_back(std::move(gl));
  return out;
}

// Shuffle from a pattern such as "ABAB": each side's ends are taken in its
// own order starting from its first end.
inline std::vector<EndRef> pattern_shuffle(const FlatSurface& A, int a, const FlatSurface& B, int b,
                                           const std::string& pattern) {
  std::vector<EndRef> out;
  std::size_t ia = 0, ib = 0;
  for (char ch : pattern) {
    if (ch == 'A' && ia < A.order.at(a).size()) {
      out.push_back({Side::A, A.order[a][ia++]});
    } else if (ch == 'B' && ib < B.order.at(b).size()) {
      out.push_back({Side::B, B.order[b][ib++]});
    } else {
      throw SurfaceError("pattern '" + pattern + "' does not match the band ends at the gluing discs");
    }
  }
  if (ia != A.order[a].size() || ib != B.order[b].size())
    throw SurfaceError("pattern '" + pattern + "' leaves band ends unplaced");
  return out;
}

// ---------------------------------------------------------------------------
// Boundary

struct SurfaceBoundary {
  int components = 0;
  // Bands crossed by each boundary component, in walking order.
  std::vector<std::vector<int>> itineraries;
  int betti = 0;
  int genus = 0;
};

// Walks the boundary: along a disc in its orientation until a band end, then
// across the band (whose half-twist swaps sides) and on along the next disc.
// States are "arriving at band end i of disc x", i.e. the boundary arc
// just before that end.
inline std::vector<std::vector<std::pair<int, int>>> boundary_orbits(const FlatSurface& s) {
  std::vector<std::vector<bool>> seen(s.disc_count());
  for (int x = 0; x < s.disc_count(); ++x) seen[x].assign(s.order[x].size(), false);
  auto position = [&](int x, int e) {
    const auto& o = s.order[x];
    return static_cast<int>(std::find(o.begin(), o.end(), e) - o.begin());
  };
  std::vector<std::vector<std::pair<int, int>>> orbits;
  for (int x0 = 0; x0 < s.disc_count(); ++x0)
    for (int i0 = 0; i0 < static_cast<int>(s.order[x0].size()); ++i0) {
      if (seen[x0][i0]) continue;
      std::vector<std::pair<int, int>> orbit;
      int x = x0, i = i0;
      while (!seen[x][i]) {
        seen[x][i] = true;
        orbit.push_back({x, i});
        const int e = s.order[x][i];
        const int y = s.other_end(e, x);
        x = y;
        i = (position(y, e) + 1) % static_cast<int>(s.order[y].size());
      }
      orbits.push_back(std::move(orbit));
    }
  return orbits;
}

inline SurfaceBoundary boundary(const FlatSurface& s) {
  SurfaceBoundary r;
  for (const auto& orbit : boundary_orbits(s)) {
    std::vector<int> it;
    for (auto [x, i] : orbit) it.push_back(s.order[x][i]);
    r.itineraries.push_back(std::move(it));
  }
  for (int x = 0; x < s.disc_count(); ++x)
    if (s.order[x].empty()) r.itineraries.push_back({});
  r.components = static_cast<int>(r.itineraries.size());
  r.betti = s.betti();
  r.genus = (r.betti - r.components + 1) / 2;
  return r;
}

// ---------------------------------------------------------------------------
// Emitting a boundary diagram
//
// The first piece with bands lies flat (a bare disc in front of it would
// only push every real piece into a layer). Every other piece is turned over its gluing disc and
// drawn inside that disc's circle, mirrored. The result is a Seifert picture:
// each disc is a circle, each band a chord of its sign. When several pieces
// hang off one disc they sit in layers inside it, stacked as the page order
// dictates once the piece drawn outside is rotated to the plane; each layer
// is shrunk towards its own centre, and where bands of different layers
// cross in projection the upper band passes over the lower one (four
// crossings).

namespace detail {

struct BandCrossing {
  int over = 0, under = 0;  // band ids
  int sigma = 1;            // +1 when the under band runs from right to left of the over band
};

struct BandEvent {
  double t = 0;  // along the band, from its X end
  int gadget = 0;
  bool over = false;
};

// Slots of a twist node, ccw: SW (X in), SE (band, arriving), NE (band,
// leaving), NW (X out).
enum TwistSlot { kSW = 0, kSE = 1, kNE = 2, kNW = 3 };
// Slots of a gadget node, ccw.
enum GridSlot { kE = 0, kN = 1, kW = 2, kS = 3 };

struct Emission {
  std::vector<int> parent_disc;        // per piece: gluing disc, -1 for piece 0
  std::vector<int> winding;            // per disc: +1 ccw, -1 cw
  std::vector<int> x_end;              // per band: disc with the chord on its right
  std::vector<std::vector<BandEvent>> events;  // per band
  std::vector<BandCrossing> crossings;
};

inline Emission plan_emission(const FlatSurface& s) {
  const int np = s.piece_count(), nd = s.disc_count(), ne = s.band_count();
  Emission em;
  em.parent_disc.assign(np, -2);
  em.winding.assign(nd, 0);
  em.x_end.assign(ne, -1);
  em.events.assign(ne, {});

  std::vector<std::vector<int>> pieces_at(nd);
  for (int p = 0; p < np; ++p)
    for (int g : s.pieces[p].disc) pieces_at[g].push_back(p);

  std::vector<std::vector<int>> children(nd);
  std::vector<std::vector<int>> colour(np);
  for (int p = 0; p < np; ++p)
    colour[p] = two_colouring(s.pieces[p].surface.discs, s.pieces[p].surface.bands);

  // Breadth-first over the piece/disc tree from piece 0.
  std::queue<int> q;
  int root = 0;
  while (root + 1 < np && s.pieces[root].surface.bands.empty()) ++root;
  if (s.pieces[root].surface.bands.empty()) root = 0;
  em.parent_disc[root] = -1;
  q.push(root);
  while (!q.empty()) {
    const int p = q.front();
    q.pop();
    const auto& piece = s.pieces[p];
    const int at = em.parent_disc[p];
    int at_local = -1;
    for (int i = 0; i < piece.surface.discs; ++i)
      if (piece.disc[i] == at) at_local = i;
    for (int i = 0; i < piece.surface.discs; ++i) {
      const int g = piece.disc[i];
      if (g == at) continue;
      if (at < 0)
        em.winding[g] = colour[p][i] == 0 ? +1 : -1;
      else
        em.winding[g] = colour[p][i] != colour[p][at_local] ? em.winding[at] : -em.winding[at];
      for (int r : pieces_at[g])
        if (em.parent_disc[r] == -2) {
          em.parent_disc[r] = g;
          children[g].push_back(r);
          q.push(r);
        }
    }
  }
  for (int p = 0; p < np; ++p)
    if (em.parent_disc[p] == -2) throw SurfaceError("pieces do not form a single plumbing tree");

  for (int e = 0; e < ne; ++e) {
    const auto& band = s.bands[e];
    int rights = 0;
    for (int g : band.disc) {
      const bool inside = em.parent_disc[band.piece] == g;
      const bool right = inside ? em.winding[g] < 0 : em.winding[g] > 0;
      if (right) {
        em.x_end[e] = g;
        ++rights;
      }
    }
    if (rights != 1) throw std::logic_error("flat surface emission: incoherent band orientation");
  }

  // Layers inside discs carrying several overturned pieces.
  constexpr double kPi = 3.14159265358979323846;
  for (int g = 0; g < nd; ++g) {
    const auto& ch = children[g];
    if (ch.size() < 2) continue;
    const auto& ord = s.order[g];
    const int n = static_cast<int>(ord.size());
    std::vector<std::array<double, 2>> pt(n);
    for (int i = 0; i < n; ++i) {
      const double th = em.winding[g] * 2 * kPi * i / n;
      pt[i] = {std::cos(th), std::sin(th)};
    }
    struct Long {
      int band, layer;
      std::array<double, 2> q, c;
    };
    std::vector<Long> longs;
    // Top to bottom: the pages read backwards from the one drawn outside.
    const auto& pg = s.pages[g];
    const int k = static_cast<int>(pg.size());
    int out = -1;
    for (int i = 0; i < k; ++i)
      if (std::find(ch.begin(), ch.end(), pg[i]) == ch.end()) out = i;
    std::vector<double> height(ch.size());
    for (int i = 1; i < k; ++i) {
      const int p = pg[((out - i) % k + k) % k];
      const auto it = std::find(ch.begin(), ch.end(), p);
      height[it - ch.begin()] = static_cast<double>(k - i);
    }
    for (std::size_t j = 0; j < ch.size(); ++j) {
      std::array<double, 2> c{0, 0};
      int k = 0;
      for (int i = 0; i < n; ++i)
        if (s.bands[ord[i]].piece == ch[j]) {
          c[0] += pt[i][0];
          c[1] += pt[i][1];
          ++k;
        }
      c[0] = 0.5 * c[0] / k + 0.013 * std::cos(1.3 + 2.7 * j);
      c[1] = 0.5 * c[1] / k + 0.013 * std::sin(1.3 + 2.7 * j);
      for (int i = 0; i < n; ++i)
        if (s.bands[ord[i]].piece == ch[j]) longs.push_back({ord[i], static_cast<int>(j), pt[i], c});
    }
    for (std::size_t u = 0; u < longs.size(); ++u)
      for (std::size_t v = u + 1; v < longs.size(); ++v) {
        const auto& A = longs[u];
        const auto& B = longs[v];
        if (A.layer == B.layer) continue;
        // q + s (c - q) for both segments
        const double rx = A.c[0] - A.q[0], ry = A.c[1] - A.q[1];
        const double sx = B.c[0] - B.q[0], sy = B.c[1] - B.q[1];
        const double den = rx * sy - ry * sx;
        if (std::abs(den) < 1e-12) continue;
        const double wx = B.q[0] - A.q[0], wy = B.q[1] - A.q[1];
        const double ta = (wx * sy - wy * sx) / den;
        const double tb = (wx * ry - wy * rx) / den;
        if (ta <= 1e-9 || ta >= 1 - 1e-9 || tb <= 1e-9 || tb >= 1 - 1e-9) continue;
        // Directions from X end to Y end.
        const bool ax = em.x_end[A.band] == g, bx = em.x_end[B.band] == g;
        const double adx = ax ? rx : -rx, ady = ax ? ry : -ry;
        const double bdx = bx ? sx : -sx, bdy = bx ? sy : -sy;
        const bool a_over = height[A.layer] > height[B.layer];
        const auto& O = a_over ? A : B;
        const auto& U = a_over ? B : A;
        const double cross = a_over ? adx * bdy - ady * bdx : bdx * ady - bdy * adx;
        const int id = static_cast<int>(em.crossings.size());
        em.crossings.push_back({O.band, U.band, cross > 0 ? 1 : -1});
        const double to = a_over ? (ax ? ta : 1 - ta) : (bx ? tb : 1 - tb);
        const double tu = a_over ? (bx ? tb : 1 - tb) : (ax ? ta : 1 - ta);
        em.events[O.band].push_back({to, id, true});
        em.events[U.band].push_back({tu, id, false});
      }
  }
  for (auto& ev : em.events)
    std::sort(ev.begin(), ev.end(), [](const BandEvent& x, const BandEvent& y) { return x.t < y.t; });
  return em;
}

}  // namespace detail

inline LinkDiagram overturn_boundary_diagram(const FlatSurface& s, std::string name = {}) {
  using namespace detail;
  const int ne = s.band_count();
  if (ne == 0) {
    Net net;
    net.free_loops = 1;
    return from_net(net, std::move(name));
  }
  const Emission em = plan_emission(s);
  const int ng = static_cast<int>(em.crossings.size());

  Net net;
  net.nodes.resize(ne + 4 * ng);
  std::vector<std::array<int, 4>> pos(net.nodes.size());

  for (int e = 0; e < ne; ++e) {
    // Strand 0: SW -> NE, strand 1: SE -> NW.
    std::array<Slot, 4> slots{{{0, true}, {1, true}, {0, false}, {1, false}}};
    pos[e] = place_node(net.nodes[e], slots, s.bands[e].sign > 0 ? 0 : 1);
  }
  auto grid = [&](int g, int ix, int iy) { return ne + 4 * g + ix + 2 * iy; };
  for (int g = 0; g < ng; ++g) {
    const int sigma = em.crossings[g].sigma;
    const int ix1 = sigma > 0 ? 0 : 1;
    for (int iy = 0; iy < 2; ++iy)
      for (int ix = 0; ix < 2; ++ix) {
        const bool a_in_w = iy == 1;
        const bool b_in_s = (ix == ix1) == (sigma > 0);
        std::array<Slot, 4> slots{{{0, !a_in_w}, {1, !b_in_s}, {0, a_in_w}, {1, b_in_s}}};
        pos[grid(g, ix, iy)] = place_node(net.nodes[grid(g, ix, iy)], slots, 0);
      }
  }
  auto dart = [&](int node, int slot) { return Dart{node, pos[node][slot]}; };
  for (int g = 0; g < ng; ++g) {
    net.link(dart(grid(g, 0, 1), kE), dart(grid(g, 1, 1), kW));
    net.link(dart(grid(g, 1, 0), kW), dart(grid(g, 0, 0), kE));
    for (int ix = 0; ix < 2; ++ix) net.link(dart(grid(g, ix, 0), kN), dart(grid(g, ix, 1), kS));
  }
  // Strand ends of a band inside a gadget: s1 runs X -> Y on the band's
  // left, s2 runs Y -> X on its right.
  auto entry = [&](const BandEvent& ev, int strand) {
    const int sigma = em.crossings[ev.gadget].sigma;
    if (ev.over) return strand == 1 ? dart(grid(ev.gadget, 0, 1), kW) : dart(grid(ev.gadget, 1, 0), kE);
    const int col = (strand == 1) == (sigma > 0) ? 0 : 1;
    const bool up = (strand == 1) == (sigma > 0);
    return up ? dart(grid(ev.gadget, col, 0), kS) : dart(grid(ev.gadget, col, 1), kN);
  };
  auto exit = [&](const BandEvent& ev, int strand) {
    const int sigma = em.crossings[ev.gadget].sigma;
    if (ev.over) return strand == 1 ? dart(grid(ev.gadget, 1, 1), kE) : dart(grid(ev.gadget, 0, 0), kW);
    const int col = (strand == 1) == (sigma > 0) ? 0 : 1;
    const bool up = (strand == 1) == (sigma > 0);
    return up ? dart(grid(ev.gadget, col, 1), kN) : dart(grid(ev.gadget, col, 0), kS);
  };

  std::vector<Dart> y_leave(ne), y_arrive(ne);
  for (int e = 0; e < ne; ++e) {
    const auto& ev = em.events[e];
    Dart cur = dart(e, kNE);
    for (const auto& x : ev) {
      net.link(cur, entry(x, 1));
      cur = exit(x, 1);
    }
    y_leave[e] = cur;
    cur = dart(e, kSE);
    for (const auto& x : ev) {
      net.link(cur, exit(x, 2));
      cur = entry(x, 2);
    }
    y_arrive[e] = cur;
  }
  for (int g = 0; g < s.disc_count(); ++g) {
    const auto& o = s.order[g];
    const int k = static_cast<int>(o.size());
    for (int i = 0; i < k; ++i) {
      const int e = o[i], f = o[(i + 1) % k];
      Dart leave = em.x_end[e] == g ? dart(e, kNW) : y_leave[e];
      Dart arrive = em.x_end[f] == g ? dart(f, kSW) : y_arrive[f];
      net.link(leave, arrive);
    }
  }
  validate_net(net);
  return from_net(net, std::move(name));
}

// ---------------------------------------------------------------------------
// Homogeneous diagrams

// The canonical surface of a homogeneous diagram, cut into one primitive
// piece per block of its Seifert graph and glued back at cut vertices.
// Blocks on the far side of a cut circle from the block that introduced it
// are folded over; blocks on the same side are folded under.
inline FlatSurface decompose_homogeneous(const LinkDiagram& d) {
  if (d.crossings.empty()) {
    if (component_count(d) != 1) throw SurfaceError("split diagram has no connected canonical surface");
    return from_primitive(PrimitiveFlatSurface{1, {}, +1, {{}}}, "b1");
  }
  if (!is_homogeneous(d)) throw SurfaceError("diagram is not homogeneous");
  const auto st = seifert_structure(d);
  const auto g = seifert_graph(st);
  const Net net = to_net(d);

  std::map<int, int> head;
  for (int c = 0; c < net.size(); ++c)
    for (int p : {0, net.nodes[c].over_in()}) head[d.crossings[c].arcs[p]] = c;
  std::vector<std::vector<int>> along(st.circle_count());
  for (int i = 0; i < st.circle_count(); ++i)
    for (int arc : st.circles[i]) along[i].push_back(head.at(arc));

  const int nb = static_cast<int>(g.blocks.size());
  std::vector<int> block_of(g.edges.size());
  for (int b = 0; b < nb; ++b)
    for (int e : g.blocks[b]) block_of[g.edges[e].crossing] = b;

  struct Piece {
    std::vector<int> circles;  // local disc -> circle
    std::map<int, int> local;  // crossing -> local band
    PrimitiveFlatSurface surface;
  };
  std::vector<Piece> pieces(nb);
  for (int b = 0; b < nb; ++b) {
    auto& P = pieces[b];
    std::map<int, int> disc_of;
    for (int e : g.blocks[b])
      for (int v : {g.edges[e].u, g.edges[e].v})
        if (!disc_of.count(v)) {
          disc_of[v] = static_cast<int>(P.circles.size());
          P.circles.push_back(v);
        }
    P.surface.discs = static_cast<int>(P.circles.size());
    P.surface.sign = g.edges[g.blocks[b][0]].sign;
    for (int e : g.blocks[b]) {
      P.local[g.edges[e].crossing] = P.surface.band_count();
      P.surface.bands.push_back({disc_of[g.edges[e].u], disc_of[g.edges[e].v]});
    }
    std::vector<std::vector<int>> orders(P.surface.discs);
    for (int x = 0; x < P.surface.discs; ++x)
      for (int c : along[P.circles[x]])
        if (block_of[c] == b) orders[x].push_back(P.local[c]);
    auto colour = detail::two_colouring(P.surface.discs, P.surface.bands);
    P.surface.rot = orders;
    for (int x = 0; x < P.surface.discs; ++x)
      if (colour[x] == 1) std::reverse(P.surface.rot[x].begin(), P.surface.rot[x].end());
  }

  FlatSurface S = from_primitive(pieces[0].surface, "b1");
  std::map<int, int> disc_of_circle, band_of_crossing, introduced_by;
  for (int x = 0; x < pieces[0].surface.discs; ++x) {
    disc_of_circle[pieces[0].circles[x]] = x;
    introduced_by[pieces[0].circles[x]] = 0;
  }
  for (auto [c, k] : pieces[0].local) band_of_crossing[c] = k;
  std::vector<bool> done(nb, false);
  done[0] = true;
  auto space_at = [&](int block, int circle) {
    for (int e : g.blocks[block]) {
      const auto& ed = g.edges[e];
      if (ed.u == circle || ed.v == circle) return st.chord_space[ed.crossing];
    }
    return -1;
  };
  for (int added = 1; added < nb;) {
    bool progress = false;
    for (int b = 0; b < nb; ++b) {
      if (done[b]) continue;
      const auto& P = pieces[b];
      int at = -1;
      for (int x = 0; x < P.surface.discs && at < 0; ++x)
        if (disc_of_circle.count(P.circles[x])) at = x;
      if (at < 0) continue;
      const int circle = P.circles[at];
      std::vector<EndRef> shuffle;
      for (int c : along[circle]) {
        if (block_of[c] == b)
          shuffle.push_back({Side::B, P.local.at(c)});
        else if (band_of_crossing.count(c))
          shuffle.push_back({Side::A, band_of_crossing[c]});
      }
      const bool same_side = space_at(b, circle) == space_at(introduced_by[circle], circle);
      const int da = S.disc_count(), ea = S.band_count();
      FlatSurface T = from_primitive(P.surface, "b" + std::to_string(b + 1));
      S = plumb(S, disc_of_circle[circle], T, at, shuffle, same_side ? Overturn::Under : Overturn::Over);
      for (int x = 0; x < P.surface.discs; ++x) {
        if (x == at) continue;
        disc_of_circle[P.circles[x]] = da + (x < at ? x : x - 1);
        introduced_by[P.circles[x]] = b;
      }
      for (auto [c, k] : P.local) band_of_crossing[c] = ea + k;
      done[b] = true;
      ++added;
      progress = true;
    }
    if (!progress) throw std::logic_error("block tree is disconnected");
  }
  return S;
}

// ---------------------------------------------------------------------------
// Pretzel links

namespace detail {

// Unoriented 4-valent plane map; corners ccw, corners k and k+2 on one
// strand. Every strand cycle is oriented starting from its lowest unvisited
// corner; each crossing then takes whichever over-strand gives it sign[c].
struct Shadow {
  std::vector<std::array<Dart, 4>> nbr;
  std::vector<int> sign;

  int add() {
    nbr.emplace_back();
    sign.push_back(+1);
    return static_cast<int>(nbr.size()) - 1;
  }
  void link(Dart a, Dart b) {
    nbr[a.node][a.pos] = b;
    nbr[b.node][b.pos] = a;
  }
};

inline Net orient_shadow(const Shadow& sh) {
  const int n = static_cast<int>(sh.nbr.size());
  std::vector<std::array<int, 4>> incoming(n, {-1, -1, -1, -1});
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      if (incoming[c][k] >= 0) continue;
      Dart cur{c, k};
      while (incoming[cur.node][cur.pos] < 0) {
        incoming[cur.node][cur.pos] = 0;
        Dart nb = sh.nbr[cur.node][cur.pos];
        incoming[nb.node][nb.pos] = 1;
        cur = Dart{nb.node, (nb.pos + 2) % 4};
      }
    }
  Net net;
  net.nodes.resize(n);
  std::vector<std::array<int, 4>> pos(n);
  for (int c = 0; c < n; ++c) {
    std::array<Slot, 4> slots{};
    for (int k = 0; k < 4; ++k) slots[k] = {k % 2, incoming[c][k] == 1};
    pos[c] = place_node(net.nodes[c], slots, 0);
    if (net.nodes[c].sign() != sh.sign[c]) pos[c] = place_node(net.nodes[c], slots, 1);
  }
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      Dart nb = sh.nbr[c][k];
      net.nodes[c].nbr[pos[c][k]] = Dart{nb.node, pos[nb.node][nb.pos]};
    }
  return net;
}

}  // namespace detail

// Standard diagram of P(a_1, ..., a_k): vertical twist regions side by side,
// |a_i| crossings each, neighbours joined at top and bottom. The sign of a_i
// is the sign of the crossings of region i in the oriented diagram, so for
// regions whose strands run parallel it is opposite to the handedness.
inline LinkDiagram pretzel_diagram(const std::vector<int>& params) {
  if (params.empty()) throw SurfaceError("pretzel needs at least one parameter");
  for (int a : params)
    if (a == 0) throw SurfaceError("pretzel parameters must be non-zero");
  // Corners ccw: NE, NW, SW, SE.
  enum { NE = 0, NW = 1, SW = 2, SE = 3 };
  detail::Shadow sh;
  const int k = static_cast<int>(params.size());
  std::vector<int> top(k), bottom(k);
  for (int i = 0; i < k; ++i) {
    const int n = std::abs(params[i]);
    int prev = -1;
    for (int j = 0; j < n; ++j) {
      int c = sh.add();
      sh.sign[c] = params[i] > 0 ? 1 : -1;
      if (prev < 0) {
        top[i] = c;
      } else {
        sh.link({prev, SW}, {c, NW});
        sh.link({prev, SE}, {c, NE});
      }
      prev = c;
    }
    bottom[i] = prev;
  }
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    sh.link({top[i], NE}, {top[j], NW});
    sh.link({bottom[i], SE}, {bottom[j], SW});
  }
  Net net = detail::orient_shadow(sh);
  validate_net(net);
  std::string name = "P(";
  for (int i = 0; i < k; ++i) name += (i ? "," : "") + std::to_string(params[i]);
  return from_net(net, name + ")");
}

namespace detail {

// Discs 0..k-1 in a ring, band i joining i and i+1.
inline PrimitiveFlatSurface ring(int k, int sign) {
  PrimitiveFlatSurface p;
  p.discs = k;
  p.sign = sign;
  for (int i = 0; i < k; ++i) p.bands.push_back({i, (i + 1) % k});
  p.rot.assign(k, {});
  for (int e = 0; e < k; ++e) {
    p.rot[p.bands[e].a].push_back(e);
    p.rot[p.bands[e].b].push_back(e);
  }
  return p;
}

}  // namespace detail

// Twisted annulus: k discs in a ring with k bands of one sign (k even).
inline PrimitiveFlatSurface twisted_annulus(int k, int sign) {
  if (k < 2 || k % 2) throw SurfaceError("a twisted annulus needs an even number (>= 2) of bands");
  return detail::ring(k, sign);
}

// Flat surfaces bounded by the two pretzel families with a non-homogeneous
// but alternative boundary:
//   (a, b, c)            all odd and of one sign: two discs joined by three
//                        chains of |a|, |b|, |c| bands;
//   (m, e, ..., e)       m even, e = +-1 repeated an even number of times:
//                        a ring of |m| bands plumbed to a ring of as many
//                        bands as there are e's, band ends alternating.
inline FlatSurface pretzel_surface(const std::vector<int>& params) {
  auto odd = [](int x) { return x % 2 != 0; };
  if (params.size() == 3 && std::all_of(params.begin(), params.end(), odd) &&
      ((params[0] > 0) == (params[1] > 0)) && ((params[1] > 0) == (params[2] > 0))) {
    PrimitiveFlatSurface p;
    p.sign = params[0] > 0 ? 1 : -1;
    p.discs = 2;
    std::vector<int> first, last;
    for (int a : params) {
      const int n = std::abs(a);
      int from = 0;
      for (int j = 0; j < n; ++j) {
        int to = j + 1 == n ? 1 : p.discs++;
        if (j == 0) first.push_back(p.band_count());
        if (j + 1 == n) last.push_back(p.band_count());
        p.bands.push_back({from, to});
        from = to;
      }
    }
    p.rot.assign(p.discs, {});
    for (int e = 0; e < p.band_count(); ++e)
      for (int x : {p.bands[e].a, p.bands[e].b})
        if (x >= 2) p.rot[x].push_back(e);
    p.rot[0] = first;
    p.rot[1] = {last[2], last[1], last[0]};
    return from_primitive(p, "p1");
  }
  const bool family2 = params.size() >= 3 && params[0] != 0 && params[0] % 2 == 0 &&
                       (params.size() - 1) % 2 == 0 &&
                       std::all_of(params.begin() + 1, params.end(),
                                   [&](int x) { return (x == 1 || x == -1) && x == params[1]; });
  if (!family2)
    throw SurfaceError("pretzel parameters are in neither supported family: (odd, odd, odd) of one sign, "
                       "or (even m, e, ..., e) with e = +-1 repeated an even number of times");
  FlatSurface a = from_primitive(twisted_annulus(std::abs(params[0]), params[0] > 0 ? 1 : -1), "p1");
  FlatSurface b = from_primitive(twisted_annulus(static_cast<int>(params.size()) - 1, params[1]), "p2");
  return plumb(a, 0, b, 0, pattern_shuffle(a, 0, b, 0, "ABAB"));
}

// ---------------------------------------------------------------------------
// Text form
//
//   SURF{
//     piece p1: discs=2, bands=[(0,1,+),(0,1,+)], rot=[[0,1],[1,0]];
//     piece p2: discs=2, bands=[(0,1,-),(0,1,-)];
//     glue(p1.d0, p2.d0, shuffle=[p1.b0,p2.b0,p1.b1,p2.b1], side=over);
//   }
//
// rot is optional (bands in index order). Gluings apply in order; each joins
// two surfaces built so far and the shuffle lists every band end at the
// merged disc.

namespace detail {

struct SurfCursor {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw SurfaceError("surface syntax error at position " + std::to_string(pos) + ": " + why);
  }
  // '#' starts a comment running to the end of the line.
  void skip_ws() {
    while (pos < s.size()) {
      if (s[pos] == '#') {
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
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
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) fail("expected a name");
    return std::string(s.substr(start, pos - start));
  }
  void keyword(std::string_view w) {
    if (ident() != w) fail("expected '" + std::string(w) + "'");
  }
  int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    if (pos - start > 6) fail("number too large");
    return std::stoi(std::string(s.substr(start, pos - start)));
  }
  int sign() {
    if (accept('+')) return +1;
    if (accept('-')) return -1;
    fail("expected '+' or '-'");
  }
  // name.<letter><number>, e.g. p1.d0 or p2.b3
  std::pair<std::string, int> ref(char letter) {
    std::string name = ident();
    expect('.');
    skip_ws();
    if (pos >= s.size() || s[pos] != letter) fail(std::string("expected '") + letter + "' index");
    ++pos;
    return {name, number()};
  }
};

}  // namespace detail

inline FlatSurface parse_surface(std::string_view text) {
  detail::SurfCursor cur{text};
  cur.keyword("SURF");
  cur.expect('{');
  std::vector<FlatSurface> parts;                    // surfaces built so far
  std::map<std::string, std::pair<int, int>> where;  // piece -> (part, piece index)
  std::vector<bool> alive;
  while (!cur.accept('}')) {
    const std::string word = cur.ident();
    if (word == "piece") {
      std::string name = cur.ident();
      if (where.count(name)) cur.fail("duplicate piece '" + name + "'");
      cur.expect(':');
      PrimitiveFlatSurface p;
      bool have_rot = false, have_sign = false;
      do {
        std::string key = cur.ident();
        cur.expect('=');
        if (key == "discs") {
          p.discs = cur.number();
        } else if (key == "bands") {
          cur.expect('[');
          if (!cur.accept(']')) {
            do {
              cur.expect('(');
              Band b;
              b.a = cur.number();
              cur.expect(',');
              b.b = cur.number();
              cur.expect(',');
              int sg = cur.sign();
              cur.expect(')');
              if (have_sign && sg != p.sign) throw SurfaceError("piece '" + name + "' mixes band signs");
              p.sign = sg;
              have_sign = true;
              p.bands.push_back(b);
            } while (cur.accept(','));
            cur.expect(']');
          }
        } else if (key == "rot") {
          have_rot = true;
          cur.expect('[');
          if (!cur.accept(']')) {
            do {
              cur.expect('[');
              std::vector<int> r;
              if (!cur.accept(']')) {
                do r.push_back(cur.number());
                while (cur.accept(','));
                cur.expect(']');
              }
              p.rot.push_back(r);
            } while (cur.accept(','));
            cur.expect(']');
          }
        } else if (key == "sign") {
          p.sign = cur.sign();
          have_sign = true;
        } else {
          cur.fail("unknown piece field '" + key + "'");
        }
      } while (cur.accept(','));
      cur.expect(';');
      if (!have_rot) p.rot = default_rotation(p.discs, p.bands);
      where[name] = {static_cast<int>(parts.size()), 0};
      parts.push_back(from_primitive(p, name));
      alive.push_back(true);
    } else if (word == "glue") {
      cur.expect('(');
      auto [na, xa] = cur.ref('d');
      cur.expect(',');
      auto [nb, xb] = cur.ref('d');
      cur.expect(',');
      cur.keyword("shuffle");
      cur.expect('=');
      cur.expect('[');
      std::vector<std::pair<std::string, int>> refs;
      if (!cur.accept(']')) {
        do refs.push_back(cur.ref('b'));
        while (cur.accept(','));
        cur.expect(']');
      }
      Overturn side = Overturn::Under;
      if (cur.accept(',')) {
        cur.keyword("side");
        cur.expect('=');
        std::string v = cur.ident();
        if (v == "over") side = Overturn::Over;
        else if (v != "under") cur.fail("side must be 'over' or 'under'");
      }
      cur.expect(')');
      cur.expect(';');
      if (!where.count(na) || !where.count(nb)) throw SurfaceError("glue names an unknown piece");
      auto [pa, ia] = where[na];
      auto [pb, ib] = where[nb];
      if (pa == pb) throw SurfaceError("glue would close a cycle: '" + na + "' and '" + nb + "' are already joined");
      const auto& A = parts[pa];
      const auto& B = parts[pb];
      auto disc_of = [&](const FlatSurface& S, int i, int x, const std::string& n) {
        if (x < 0 || x >= S.pieces[i].surface.discs) throw SurfaceError("piece '" + n + "' has no disc d" + std::to_string(x));
        return S.pieces[i].disc[x];
      };
      const int ga = disc_of(A, ia, xa, na), gb = disc_of(B, ib, xb, nb);
      std::vector<EndRef> shuffle;
      for (const auto& [n, k] : refs) {
        if (!where.count(n)) throw SurfaceError("shuffle names an unknown piece '" + n + "'");
        auto [pp, ip] = where[n];
        if (pp != pa && pp != pb) throw SurfaceError("shuffle names piece '" + n + "' from neither side");
        const auto& S = parts[pp];
        if (k < 0 || k >= S.pieces[ip].surface.band_count())
          throw SurfaceError("piece '" + n + "' has no band b" + std::to_string(k));
        shuffle.push_back({pp == pa ? Side::A : Side::B, S.pieces[ip].first_band + k});
      }
      const int offset = A.piece_count();
      FlatSurface merged = plumb(A, ga, B, gb, shuffle, side);
      for (auto& [n, loc] : where)
        if (loc.first == pb) loc = {pa, loc.second + offset};
      parts[pa] = std::move(merged);
      parts[pb] = FlatSurface{};
      alive[pb] = false;
    } else {
      cur.fail("expected 'piece' or 'glue'");
    }
  }
  cur.skip_ws();
  if (cur.pos != text.size()) cur.fail("trailing text");
  int live = static_cast<int>(std::count(alive.begin(), alive.end(), true));
  if (parts.empty()) throw SurfaceError("surface has no pieces");
  if (live != 1) throw SurfaceError("pieces are not all glued into one surface");
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (alive[i]) return parts[i];
  throw std::logic_error("unreachable");
}

inline std::string serialize(const FlatSurface& s) {
  std::string out = "SURF{\n";
  for (const auto& piece : s.pieces) {
    const auto& p = piece.surface;
    out += "  piece " + piece.name + ": discs=" + std::to_string(p.discs) + ", bands=[";
    for (int e = 0; e < p.band_count(); ++e) {
      if (e) out += ",";
      out += "(" + std::to_string(p.bands[e].a) + "," + std::to_string(p.bands[e].b) + "," +
             (p.sign > 0 ? "+" : "-") + ")";
    }
    out += "], rot=[";
    for (int x = 0; x < p.discs; ++x) {
      if (x) out += ",";
      out += "[";
      for (std::size_t i = 0; i < p.rot[x].size(); ++i) out += (i ? "," : "") + std::to_string(p.rot[x][i]);
      out += "]";
    }
    out += "];\n";
  }
  for (const auto& gl : s.gluings) {
    out += "  glue(" + s.pieces[gl.piece_a].name + ".d" + std::to_string(gl.disc_a) + ", " +
           s.pieces[gl.piece_b].name + ".d" + std::to_string(gl.disc_b) + ", shuffle=[";
    for (std::size_t i = 0; i < gl.shuffle.size(); ++i) {
      const auto& band = s.bands[gl.shuffle[i]];
      out += (i ? "," : "") + s.pieces[band.piece].name + ".b" + std::to_string(band.local);
    }
    out += std::string("], side=") + (gl.side == Overturn::Over ? "over" : "under") + ");\n";
  }
  return out + "}\n";
}

// Plumbing tree: one node per piece, one edge per gluing.
inline std::string plumbing_dot(const FlatSurface& s, const std::string& title = "plumbing") {
  std::string out = "graph \"" + title + "\" {\n";
  for (const auto& piece : s.pieces) {
    const auto& p = piece.surface;
    out += "  " + piece.name + " [label=\"" + piece.name + "\\ndiscs=" + std::to_string(p.discs) +
           " bands=" + std::to_string(p.band_count()) + " sign=" + (p.sign > 0 ? "+" : "-") +
           " betti=" + std::to_string(p.betti()) + "\"];\n";
  }
  for (const auto& gl : s.gluings) {
    out += "  " + s.pieces[gl.piece_a].name + " -- " + s.pieces[gl.piece_b].name + " [label=\"" +
           s.pieces[gl.piece_a].name + ".d" + std::to_string(gl.disc_a) + " = " + s.pieces[gl.piece_b].name +
           ".d" + std::to_string(gl.disc_b) + (gl.side == Overturn::Over ? " over" : " under") + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace linkalt
