#pragma once

#include <cstdint>
#include <vector>

#include "zonogon/directions.hpp"

namespace zonogon {

inline constexpr int kNoFace = -1;

// A dart is a directed edge: 2*e travels tail->head, 2*e+1 the reverse.
using Dart = int;

inline int dart_edge(Dart d) { return d >> 1; }
inline bool dart_is_forward(Dart d) { return (d & 1) == 0; }
inline Dart dart_reverse(Dart d) { return d ^ 1; }
inline Dart forward_dart(int e) { return 2 * e; }
inline Dart backward_dart(int e) { return 2 * e + 1; }

struct EdgeRec {
  DirectionIndex dir = 0;
  int wire = -1;
  // Travel orientation tail->head has angle phi_units(dir).
  int tail = -1;
  int head = -1;
  int left = kNoFace;   // face on the left of tail->head travel
  int right = kNoFace;
};

struct FaceRec {
  std::vector<Dart> boundary;        // counterclockwise, face left of each dart
  std::vector<int> angle_units;      // interior angle at the head of boundary[i]
  std::vector<DirectionIndex> dirs;  // distinct directions, ascending
};

enum class VertexRole : std::uint8_t { interior, side, corner };

struct TilingComplex {
  Multiplicities mult;
  int vertex_count = 0;
  std::vector<VertexRole> roles;  // filled for finished complexes
  std::vector<EdgeRec> edges;
  std::vector<FaceRec> faces;
  // Boundary sides E_1..E_2k counterclockwise, edge ids in ccw order.
  std::vector<std::vector<int>> boundary_sides;

  int k() const { return mult.k; }
  int dart_tail(Dart d) const;
  int dart_head(Dart d) const;
  int dart_left(Dart d) const;   // face left of travel along the dart
  int dart_right(Dart d) const;
  // Travel angle of a dart in units of pi/k, in [0, 2k).
  int dart_angle_units(Dart d) const;
  bool edge_on_boundary(int e) const;
};

// Outgoing darts per vertex, sorted by ascending dart_angle_units.
std::vector<std::vector<Dart>> vertex_rotations(const TilingComplex& c);

// Number of edges on each side E_1..E_2k.
std::vector<int> boundary_signature(const TilingComplex& c);

}  // namespace zonogon
