#include "zonogon/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "zonogon/irreducible.hpp"

namespace zonogon {

namespace {

// Throws std::runtime_error with a message on the first violation.
void fail(const std::string& msg) { throw std::runtime_error(msg); }

void check_integrity(const TilingComplex& c) {
  if (!c.mult.valid()) fail("invalid multiplicities");
  if (c.vertex_count <= 0) fail("no vertices");
  if (c.faces.empty()) fail("no faces");
  int E = static_cast<int>(c.edges.size());
  int F = static_cast<int>(c.faces.size());
  for (const EdgeRec& e : c.edges) {
    if (e.dir < 1 || e.dir > c.k()) fail("edge direction out of range");
    if (e.tail < 0 || e.tail >= c.vertex_count || e.head < 0 ||
        e.head >= c.vertex_count || e.tail == e.head)
      fail("edge endpoints out of range");
    if (e.left < kNoFace || e.left >= F || e.right < kNoFace || e.right >= F)
      fail("edge face reference out of range");
  }
  for (int f = 0; f < F; ++f) {
    const FaceRec& fr = c.faces[f];
    size_t n = fr.boundary.size();
    if (n < 4) fail("face with fewer than 4 edges");
    if (fr.angle_units.size() != n) fail("angle list length mismatch");
    for (size_t i = 0; i < n; ++i) {
      Dart d = fr.boundary[i];
      if (d < 0 || dart_edge(d) >= E) fail("face dart out of range");
      if (c.dart_left(d) != f) fail("face cycle disagrees with edge sides");
      if (c.dart_head(d) != c.dart_tail(fr.boundary[(i + 1) % n]))
        fail("face cycle does not chain");
    }
  }
  if (c.boundary_sides.size() != static_cast<size_t>(2 * c.k()))
    fail("boundary must list 2k sides");
  for (const auto& side : c.boundary_sides) {
    if (side.empty()) fail("empty boundary side");
    for (int e : side)
      if (e < 0 || e >= E) fail("boundary edge out of range");
  }
}

void check_face_closure(const TilingComplex& c) {
  for (const FaceRec& fr : c.faces) {
    std::map<int, int> net;
    for (Dart d : fr.boundary)
      net[c.edges[dart_edge(d)].dir] += dart_is_forward(d) ? 1 : -1;
    for (auto [dir, n] : net)
      if (n != 0) fail("face steps do not cancel in direction " + std::to_string(dir));
  }
}

void check_face_zonogon(const TilingComplex& c) {
  int k = c.k(), k2 = 2 * k;
  for (size_t f = 0; f < c.faces.size(); ++f) {
    const FaceRec& fr = c.faces[f];
    size_t n = fr.boundary.size();
    if (n % 2 != 0) fail("face with odd edge count");
    std::vector<DirectionIndex> dirs;
    for (Dart d : fr.boundary) dirs.push_back(c.edges[dart_edge(d)].dir);
    std::vector<DirectionIndex> distinct = dirs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct != fr.dirs) fail("stored face directions disagree with cycle");
    if (2 * distinct.size() != n) fail("face is not a zonogon (direction counts)");
    for (size_t i = 0; i < n; ++i) {
      // Central symmetry: opposite edges parallel, traversed oppositely.
      size_t o = (i + n / 2) % n;
      if (dirs[i] != dirs[o]) fail("opposite edges not parallel");
      int ai = c.dart_angle_units(fr.boundary[i]);
      int ao = c.dart_angle_units(fr.boundary[o]);
      if ((ai - ao - k) % k2 != 0) fail("opposite edges traversed the same way");
      if (fr.angle_units[i] != fr.angle_units[o]) fail("angles not centrally symmetric");
      int recomputed = ((c.dart_angle_units(dart_reverse(fr.boundary[i])) -
                         c.dart_angle_units(fr.boundary[(i + 1) % n])) % k2 + k2) % k2;
      if (recomputed != fr.angle_units[i]) fail("stored angle disagrees with edge angles");
      if (recomputed < 1 || recomputed > k) fail("face angle outside (0, pi]");
    }
    std::vector<int> expect = zonogon_angles(k, distinct);
    bool matches = false;
    for (size_t r = 0; r < n && !matches; ++r) {
      matches = true;
      for (size_t i = 0; i < n; ++i)
        if (fr.angle_units[(i + r) % n] != expect[i]) {
          matches = false;
          break;
        }
    }
    if (!matches) fail("face " + std::to_string(f) + " angles are not the zonogon angles");
  }
}

void check_edge_to_edge(const TilingComplex& c) {
  std::vector<int> fwd_seen(c.edges.size(), 0), bwd_seen(c.edges.size(), 0);
  for (const FaceRec& fr : c.faces)
    for (Dart d : fr.boundary)
      ++(dart_is_forward(d) ? fwd_seen : bwd_seen)[dart_edge(d)];
  std::vector<char> on_boundary(c.edges.size(), 0);
  for (const auto& side : c.boundary_sides)
    for (int e : side) ++on_boundary[e];
  for (size_t e = 0; e < c.edges.size(); ++e) {
    int want_fwd = c.edges[e].left != kNoFace ? 1 : 0;
    int want_bwd = c.edges[e].right != kNoFace ? 1 : 0;
    if (fwd_seen[e] != want_fwd || bwd_seen[e] != want_bwd)
      fail("edge " + std::to_string(e) + " is not shared consistently");
    int incident = want_fwd + want_bwd;
    if (incident == 0) fail("edge bounds no face");
    if (on_boundary[e] > 1) fail("edge listed on two sides");
    if (incident == 1 && !on_boundary[e]) fail("dangling interior edge");
    if (incident == 2 && on_boundary[e]) fail("boundary edge with two faces");
  }
}

// Boundary vertices and corners derived from the edges alone.
void derive_roles(const TilingComplex& c, std::vector<int>& role) {
  role.assign(c.vertex_count, 0);  // 0 interior, 1 side, 2 corner
  std::vector<std::set<int>> bdirs(c.vertex_count);
  for (const EdgeRec& e : c.edges) {
    if (e.left != kNoFace && e.right != kNoFace) continue;
    bdirs[e.tail].insert(e.dir);
    bdirs[e.head].insert(e.dir);
  }
  for (int v = 0; v < c.vertex_count; ++v)
    if (!bdirs[v].empty()) role[v] = bdirs[v].size() == 1 ? 1 : 2;
}

void check_vertex_angles(const TilingComplex& c) {
  int k = c.k();
  std::vector<int> sum(c.vertex_count, 0);
  for (const FaceRec& fr : c.faces)
    for (size_t i = 0; i < fr.boundary.size(); ++i)
      sum[c.dart_head(fr.boundary[i])] += fr.angle_units[i];
  std::vector<int> role;
  derive_roles(c, role);
  for (int v = 0; v < c.vertex_count; ++v) {
    int want = role[v] == 0 ? 2 * k : role[v] == 1 ? k : k - 1;
    if (sum[v] != want)
      fail("vertex " + std::to_string(v) + " angle sum " + std::to_string(sum[v]) +
           " wants " + std::to_string(want));
  }
  if (!c.roles.empty()) {
    for (int v = 0; v < c.vertex_count; ++v) {
      int stored = c.roles[v] == VertexRole::interior ? 0
                   : c.roles[v] == VertexRole::side   ? 1
                                                      : 2;
      if (stored != role[v]) fail("stored vertex role disagrees");
    }
  }
}

void check_euler(const TilingComplex& c) {
  long long v = c.vertex_count;
  long long e = static_cast<long long>(c.edges.size());
  long long f = static_cast<long long>(c.faces.size());
  if (v - e + f != 1) fail("V - E + F_interior is not 1");
}

void check_boundary_polygon(const TilingComplex& c) {
  int k = c.k();
  auto sig = boundary_signature(c);
  std::set<int> used;
  for (int j = 0; j < 2 * k; ++j) {
    const auto& side = c.boundary_sides[j];
    for (int e : side) {
      if (c.edges[e].dir != side_direction(k, j + 1))
        fail("side E_" + std::to_string(j + 1) + " carries a foreign direction");
      if (c.edges[e].left != kNoFace && c.edges[e].right != kNoFace)
        fail("interior edge listed on the boundary");
      used.insert(e);
    }
    // Edges of one side must chain into a path.
    for (size_t i = 0; i + 1 < side.size(); ++i) {
      const EdgeRec& a = c.edges[side[i]];
      const EdgeRec& b = c.edges[side[i + 1]];
      std::set<int> shared;
      for (int va : {a.tail, a.head})
        for (int vb : {b.tail, b.head})
          if (va == vb) shared.insert(va);
      if (shared.size() != 1) fail("side edges do not chain");
    }
    if (sig[j] != c.mult.m[side_direction(k, j + 1) - 1])
      fail("side edge count disagrees with multiplicity");
  }
  for (size_t e = 0; e < c.edges.size(); ++e)
    if (c.edge_on_boundary(static_cast<int>(e)) && !used.count(static_cast<int>(e)))
      fail("boundary edge missing from the side lists");
  for (int j = 0; j < k; ++j)
    if (sig[j] != sig[j + k]) fail("opposite sides not mirrored");
}

void check_side_cap(const TilingComplex& c) {
  int cap = 2 * c.k() - 3;
  auto sig = boundary_signature(c);
  for (size_t j = 0; j < sig.size(); ++j)
    if (sig[j] > cap)
      fail("side E_" + std::to_string(j + 1) + " carries " + std::to_string(sig[j]) +
           " edges, cap " + std::to_string(cap));
}

void check_two_edge_rule(const TilingComplex& c) {
  int k = c.k();
  for (int j = 0; j < 2 * k; ++j) {
    std::set<int> on_side;
    for (int e : c.boundary_sides[j]) {
      on_side.insert(c.edges[e].tail);
      on_side.insert(c.edges[e].head);
    }
    int side_dir = side_direction(k, j + 1);
    std::map<int, int> per_dir;
    for (const EdgeRec& e : c.edges) {
      if (e.dir == side_dir) continue;
      if (on_side.count(e.tail) || on_side.count(e.head)) ++per_dir[e.dir];
    }
    for (auto [dir, n] : per_dir)
      if (n > 2)
        fail("side E_" + std::to_string(j + 1) + " meets " + std::to_string(n) +
             " edges of direction " + std::to_string(dir));
  }
}

void check_irreducible(const TilingComplex& c) {
  if (c.faces.size() < 2) fail("not a multi-tile decomposition");
  auto [irr, witness] = is_irreducible(c);
  if (!irr) {
    std::ostringstream os;
    os << "reducible, witness tiles";
    for (int f : witness) os << ' ' << f;
    fail(os.str());
  }
}

void check_perpendicular(const TilingComplex& c) {
  int k = c.k();
  if (k % 2 != 0) return;  // no perpendicular direction pairs for odd k
  std::vector<std::set<int>> faces_of_edge(c.edges.size());
  for (size_t f = 0; f < c.faces.size(); ++f)
    for (Dart d : c.faces[f].boundary)
      faces_of_edge[dart_edge(d)].insert(static_cast<int>(f));
  auto rot = vertex_rotations(c);
  for (int v = 0; v < c.vertex_count; ++v) {
    const auto& darts = rot[v];
    for (size_t i = 0; i < darts.size(); ++i) {
      for (size_t j = i + 1; j < darts.size(); ++j) {
        int e1 = dart_edge(darts[i]), e2 = dart_edge(darts[j]);
        if (e1 == e2) continue;
        int diff = ((c.edges[e1].dir - c.edges[e2].dir) % k + k) % k;
        if (diff != k / 2) continue;
        std::vector<int> common;
        std::set_intersection(faces_of_edge[e1].begin(), faces_of_edge[e1].end(),
                              faces_of_edge[e2].begin(), faces_of_edge[e2].end(),
                              std::back_inserter(common));
        if (common.empty())
          fail("perpendicular edges at vertex " + std::to_string(v) +
               " share no tile");
        for (int f : common) {
          size_t sides = c.faces[f].boundary.size();
          if (sides != 4 && sides != 6)
            fail("perpendicular edges lie in a " + std::to_string(sides / 2 * 2) +
                 "-gon, not a rectangle or hexagon");
        }
      }
    }
  }
}

}  // namespace

ValidationReport validate_complex(const TilingComplex& c) {
  ValidationReport report;
  auto run = [&](const std::string& name, void (*check)(const TilingComplex&),
                 bool structure_ok) {
    ValidationReport::Finding finding;
    finding.check = name;
    if (!structure_ok) {
      finding.pass = false;
      finding.detail = "not evaluated: incidence structure invalid";
    } else {
      try {
        check(c);
        finding.pass = true;
      } catch (const std::exception& ex) {
        finding.pass = false;
        finding.detail = ex.what();
      }
    }
    report.findings.push_back(std::move(finding));
  };

  bool structure_ok = true;
  run("integrity", check_integrity, true);
  structure_ok = report.findings.back().pass;

  run("face-closure", check_face_closure, structure_ok);
  run("face-zonogon", check_face_zonogon, structure_ok);
  run("edge-to-edge", check_edge_to_edge, structure_ok);
  run("vertex-angles", check_vertex_angles, structure_ok);
  run("euler", check_euler, structure_ok);
  run("boundary-2kgon", check_boundary_polygon, structure_ok);
  run("side-cap", check_side_cap, structure_ok);
  run("side-two-edge", check_two_edge_rule, structure_ok);
  run("irreducible", check_irreducible, structure_ok);
  run("perpendicular-tiles", check_perpendicular, structure_ok);
  return report;
}

}  // namespace zonogon
