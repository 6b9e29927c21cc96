#include "zonogon/complex.hpp"

#include <algorithm>

namespace zonogon {

int TilingComplex::dart_tail(Dart d) const {
  const EdgeRec& e = edges[dart_edge(d)];
  return dart_is_forward(d) ? e.tail : e.head;
}

int TilingComplex::dart_head(Dart d) const {
  const EdgeRec& e = edges[dart_edge(d)];
  return dart_is_forward(d) ? e.head : e.tail;
}

int TilingComplex::dart_left(Dart d) const {
  const EdgeRec& e = edges[dart_edge(d)];
  return dart_is_forward(d) ? e.left : e.right;
}

int TilingComplex::dart_right(Dart d) const {
  const EdgeRec& e = edges[dart_edge(d)];
  return dart_is_forward(d) ? e.right : e.left;
}

int TilingComplex::dart_angle_units(Dart d) const {
  int k2 = 2 * k();
  int a = phi_units(k(), edges[dart_edge(d)].dir);
  if (!dart_is_forward(d)) a += k();
  return ((a % k2) + k2) % k2;
}

bool TilingComplex::edge_on_boundary(int e) const {
  return edges[e].left == kNoFace || edges[e].right == kNoFace;
}

std::vector<std::vector<Dart>> vertex_rotations(const TilingComplex& c) {
  std::vector<std::vector<Dart>> rot(c.vertex_count);
  for (int e = 0; e < static_cast<int>(c.edges.size()); ++e) {
    rot[c.edges[e].tail].push_back(forward_dart(e));
    rot[c.edges[e].head].push_back(backward_dart(e));
  }
  for (auto& darts : rot)
    std::sort(darts.begin(), darts.end(), [&c](Dart a, Dart b) {
      return c.dart_angle_units(a) < c.dart_angle_units(b);
    });
  return rot;
}

std::vector<int> boundary_signature(const TilingComplex& c) {
  std::vector<int> sig;
  sig.reserve(c.boundary_sides.size());
  for (const auto& side : c.boundary_sides)
    sig.push_back(static_cast<int>(side.size()));
  return sig;
}

}  // namespace zonogon
