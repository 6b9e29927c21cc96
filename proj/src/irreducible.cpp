#include "zonogon/irreducible.hpp"

#include <algorithm>
#include <stdexcept>

namespace zonogon {

namespace {

struct Sector {
  int face = kNoFace;  // face occupying the sector, or none
  int span = 0;        // angular width in units of pi/k
};

// Sectors around v in ccw order; sector i lies between rot[i] and rot[i+1]
// and is occupied by the face left of rot[i].
std::vector<Sector> sectors_at(const TilingComplex& c,
                               const std::vector<Dart>& darts) {
  int deg = static_cast<int>(darts.size());
  int k2 = 2 * c.k();
  std::vector<Sector> out(deg);
  for (int i = 0; i < deg; ++i) {
    int a = c.dart_angle_units(darts[i]);
    int b = c.dart_angle_units(darts[(i + 1) % deg]);
    out[i].face = c.dart_left(darts[i]);
    out[i].span = ((b - a) % k2 + k2) % k2;
    if (out[i].span == 0) out[i].span = k2;  // degree-1 vertex, full turn
  }
  return out;
}

}  // namespace

int face_angle_at(const TilingComplex& c, int f, int v) {
  const FaceRec& fr = c.faces[f];
  for (size_t i = 0; i < fr.boundary.size(); ++i)
    if (c.dart_head(fr.boundary[i]) == v) return fr.angle_units[i];
  throw std::invalid_argument("vertex not on face");
}

bool union_is_convex(const TilingComplex& c,
                     const std::vector<std::vector<Dart>>& rot,
                     const std::vector<int>& tiles) {
  if (tiles.empty()) throw std::invalid_argument("empty tile set");
  int F = static_cast<int>(c.faces.size());
  std::vector<char> in_u(F, 0);
  for (int f : tiles) in_u.at(f) = 1;
  auto member = [&](int f) { return f != kNoFace && in_u[f]; };

  std::vector<char> seen(F, 0);
  std::vector<int> stack{tiles[0]};
  seen[tiles[0]] = 1;
  size_t reached = 0;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    ++reached;
    for (Dart d : c.faces[f].boundary) {
      int g = c.dart_right(d);
      if (member(g) && !seen[g]) {
        seen[g] = 1;
        stack.push_back(g);
      }
    }
  }
  if (reached != tiles.size())
    throw std::invalid_argument("tiles not edge-connected");

  std::vector<Dart> bdarts;
  for (int f : tiles)
    for (Dart d : c.faces[f].boundary)
      if (!member(c.dart_right(d))) bdarts.push_back(d);

  // Continue the boundary by turning clockwise at the head until the union
  // is on the left only; staying inside the union's own angular run keeps
  // distinct runs at a pinch vertex on distinct cycles.
  auto next_dart = [&](Dart d) -> Dart {
    int w = c.dart_head(d);
    const auto& darts = rot[w];
    int deg = static_cast<int>(darts.size());
    int idx = static_cast<int>(
        std::find(darts.begin(), darts.end(), dart_reverse(d)) - darts.begin());
    for (int step = 1; step <= deg; ++step) {
      Dart x = darts[((idx - step) % deg + deg) % deg];
      if (!member(c.dart_left(x))) throw std::logic_error("boundary walk left the union");
      if (!member(c.dart_right(x))) return x;
    }
    throw std::logic_error("no boundary continuation");
  };

  int k = c.k(), k2 = 2 * c.k();
  std::vector<char> used(2 * c.edges.size(), 0);
  int cycles = 0;
  for (Dart d0 : bdarts) {
    if (used[d0]) continue;
    ++cycles;
    Dart d = d0;
    do {
      used[d] = 1;
      Dart nx = next_dart(d);
      int interior = ((c.dart_angle_units(dart_reverse(d)) -
                       c.dart_angle_units(nx)) % k2 + k2) % k2;
      if (interior < 1 || interior > k) return false;
      d = nx;
    } while (d != d0);
  }
  return cycles == 1;
}

ClosureResult convex_closure(const TilingComplex& c,
                             const std::vector<std::vector<Dart>>& rot,
                             int fa, int fb) {
  int F = static_cast<int>(c.faces.size());
  if (fa < 0 || fb < 0 || fa >= F || fb >= F || fa == fb)
    throw std::invalid_argument("bad seed pair");
  bool adjacent = false;
  for (Dart d : c.faces[fa].boundary)
    if (c.dart_right(d) == fb) adjacent = true;
  if (!adjacent) throw std::invalid_argument("seed faces not adjacent");

  int k = c.k();
  std::vector<char> in_u(F, 0);
  std::vector<int> tiles;
  std::vector<int> vqueue;
  std::vector<char> vqueued(c.vertex_count, 0);

  auto add_face = [&](int f) {
    if (in_u[f]) return;
    in_u[f] = 1;
    tiles.push_back(f);
    for (Dart d : c.faces[f].boundary) {
      int v = c.dart_head(d);
      if (!vqueued[v]) {
        vqueued[v] = 1;
        vqueue.push_back(v);
      }
    }
  };
  add_face(fa);
  add_face(fb);

  bool aborted = false;
  while (!aborted) {
    while (!vqueue.empty() && !aborted) {
      int v = vqueue.back();
      vqueue.pop_back();
      vqueued[v] = 0;
      auto secs = sectors_at(c, rot[v]);
      int deg = static_cast<int>(secs.size());
      std::vector<char> inside(deg);
      int in_count = 0;
      for (int i = 0; i < deg; ++i) {
        inside[i] = secs[i].face != kNoFace && in_u[secs[i].face];
        in_count += inside[i];
      }
      if (in_count == 0 || in_count == deg) continue;

      // Maximal cyclic runs of sectors outside the union, scanned from a
      // run boundary so no gap is split by the wrap-around.
      struct Gap {
        int span = 0;
        bool fillable = true;
        std::vector<int> faces;
      };
      std::vector<Gap> gaps;
      int start = 0;
      while (!(inside[(start - 1 + deg) % deg] && !inside[start])) ++start;
      int i = start;
      do {
        if (!inside[i]) {
          if (inside[(i - 1 + deg) % deg]) gaps.emplace_back();
          Gap& g = gaps.back();
          g.span += secs[i].span;
          if (secs[i].face == kNoFace)
            g.fillable = false;
          else
            g.faces.push_back(secs[i].face);
        }
        i = (i + 1) % deg;
      } while (i != start);

      if (gaps.size() == 1 && gaps[0].span >= k) continue;
      for (const Gap& g : gaps) {
        if (g.span >= k) continue;  // the wedge that may stay open
        if (!g.fillable) {
          aborted = true;
          break;
        }
        for (int f : g.faces) add_face(f);
      }
    }
    if (aborted) break;

    // Fill face components enclosed by the union: a component is external
    // only if it reaches an edge bordering the outer region.
    bool changed = false;
    std::vector<char> seen(F, 0);
    for (int f0 = 0; f0 < F; ++f0) {
      if (in_u[f0] || seen[f0]) continue;
      std::vector<int> comp{f0};
      seen[f0] = 1;
      bool external = false;
      for (size_t qi = 0; qi < comp.size(); ++qi) {
        for (Dart d : c.faces[comp[qi]].boundary) {
          int g = c.dart_right(d);
          if (g == kNoFace)
            external = true;
          else if (!in_u[g] && !seen[g]) {
            seen[g] = 1;
            comp.push_back(g);
          }
        }
      }
      if (!external) {
        for (int f : comp) add_face(f);
        changed = true;
      }
    }
    if (!changed && vqueue.empty()) break;
  }

  ClosureResult res;
  std::sort(tiles.begin(), tiles.end());
  res.tiles = std::move(tiles);
  res.aborted = aborted;
  if (!aborted) {
    res.is_whole = res.tiles.size() == c.faces.size();
    res.convex = union_is_convex(c, rot, res.tiles);
  }
  return res;
}

std::pair<bool, std::vector<int>> is_irreducible(const TilingComplex& c) {
  if (c.faces.size() < 2)
    throw std::invalid_argument("not a multi-tile decomposition");
  auto rot = vertex_rotations(c);
  for (int e = 0; e < static_cast<int>(c.edges.size()); ++e) {
    int a = c.edges[e].left, b = c.edges[e].right;
    if (a == kNoFace || b == kNoFace) continue;
    ClosureResult r = convex_closure(c, rot, a, b);
    if (!r.aborted && r.convex && !r.is_whole && r.tiles.size() >= 2)
      return {false, r.tiles};
  }
  return {true, {}};
}

bool witness_after_gluing(const TilingComplex& partial,
                          const std::vector<std::vector<Dart>>& rot,
                          int new_face, bool pair_check, bool closure_check) {
  const FaceRec& fr = partial.faces[new_face];
  int k = partial.k();
  for (Dart d : fr.boundary) {
    int g = partial.dart_right(d);
    if (g == kNoFace) continue;
    if (pair_check) {
      int u = partial.dart_tail(d), w = partial.dart_head(d);
      if (face_angle_at(partial, new_face, u) + face_angle_at(partial, g, u) <= k &&
          face_angle_at(partial, new_face, w) + face_angle_at(partial, g, w) <= k)
        return true;
    }
    if (closure_check) {
      ClosureResult r = convex_closure(partial, rot, new_face, g);
      if (!r.aborted && r.convex && r.tiles.size() >= 2) return true;
    }
  }
  return false;
}

}  // namespace zonogon
