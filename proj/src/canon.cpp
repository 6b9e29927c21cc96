#include "zonogon/canon.hpp"

#include <algorithm>
#include <stdexcept>

namespace zonogon {

namespace {

constexpr std::uint8_t kFlagBoundary = 0x01;  // edge on the outer boundary
constexpr std::uint8_t kFlagSubBoundary = 0x04;  // edge on the sub-complex rim
constexpr std::uint8_t kFlagNewVertex = 0x40;
constexpr std::uint8_t kDelim = 0xfe;

// Breadth-first code of the (sub)map from one rooted dart. Rotations must
// list only darts that belong to the sub-map, in full-complex angular order.
CanonicalCode code_from(const TilingComplex& c,
                        const std::vector<std::vector<Dart>>& rot,
                        const std::vector<std::uint8_t>& edge_flags,
                        Dart root, int sense) {
  std::vector<int> label(c.vertex_count, -1);
  std::vector<Dart> entry(c.vertex_count, -1);
  int next = 0;
  int start = c.dart_tail(root);
  label[start] = next++;
  entry[start] = root;
  std::vector<int> queue{start};
  CanonicalCode out;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    const auto& darts = rot[v];
    int deg = static_cast<int>(darts.size());
    int at = static_cast<int>(
        std::find(darts.begin(), darts.end(), entry[v]) - darts.begin());
    if (at == deg) throw std::logic_error("entry dart missing from rotation");
    for (int step = 0; step < deg; ++step) {
      Dart d = darts[((at + sense * step) % deg + deg) % deg];
      int w = c.dart_head(d);
      std::uint8_t flags = edge_flags[dart_edge(d)];
      if (label[w] < 0) {
        label[w] = next++;
        entry[w] = dart_reverse(d);
        queue.push_back(w);
        flags |= kFlagNewVertex;
      }
      out.push_back(flags);
      out.push_back(static_cast<std::uint8_t>(label[w]));
    }
    out.push_back(kDelim);
    out.push_back(kDelim);
  }
  return out;
}

CanonicalCode minimum_code(const TilingComplex& c,
                           const std::vector<std::vector<Dart>>& rot,
                           const std::vector<std::uint8_t>& edge_flags,
                           const std::vector<std::pair<Dart, int>>& roots) {
  if (c.vertex_count > 250) throw std::invalid_argument("complex too large to encode");
  CanonicalCode best;
  for (auto [root, sense] : roots) {
    CanonicalCode code = code_from(c, rot, edge_flags, root, sense);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

CanonicalCode canonical_code(const TilingComplex& c) {
  auto rot = vertex_rotations(c);
  std::vector<std::uint8_t> edge_flags(c.edges.size(), 0);
  for (size_t e = 0; e < c.edges.size(); ++e)
    if (c.edge_on_boundary(static_cast<int>(e))) edge_flags[e] = kFlagBoundary;
  std::vector<std::pair<Dart, int>> roots;
  for (size_t e = 0; e < c.edges.size(); ++e)
    for (Dart d : {forward_dart(static_cast<int>(e)), backward_dart(static_cast<int>(e))})
      for (int sense : {1, -1}) roots.emplace_back(d, sense);
  return minimum_code(c, rot, edge_flags, roots);
}

std::string code_hex(const CanonicalCode& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (std::uint8_t b : code) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

CanonicalCode side_profile(const TilingComplex& c, int side) {
  int k2 = 2 * c.k();
  if (side < 1 || side > k2) throw std::invalid_argument("bad side index");
  const auto& side_edges = c.boundary_sides.at(side - 1);

  // Tiles sharing at least a point with the side: those with a vertex on it.
  std::vector<char> on_side_vertex(c.vertex_count, 0);
  for (int e : side_edges) {
    on_side_vertex[c.edges[e].tail] = 1;
    on_side_vertex[c.edges[e].head] = 1;
  }
  std::vector<char> in_sub(c.faces.size(), 0);
  for (size_t f = 0; f < c.faces.size(); ++f)
    for (Dart d : c.faces[f].boundary)
      if (on_side_vertex[c.dart_head(d)]) in_sub[f] = 1;

  std::vector<char> edge_in_sub(c.edges.size(), 0);
  std::vector<int> sub_faces_of_edge(c.edges.size(), 0);
  for (size_t e = 0; e < c.edges.size(); ++e) {
    const EdgeRec& er = c.edges[e];
    bool left_in = er.left != kNoFace && in_sub[er.left];
    bool right_in = er.right != kNoFace && in_sub[er.right];
    edge_in_sub[e] = left_in || right_in;
    sub_faces_of_edge[e] = static_cast<int>(left_in) + static_cast<int>(right_in);
  }

  // Only the rim flag, which the sub-complex determines by itself. Marking
  // the profiled side or the outer boundary would pin the configuration's
  // orientation and split mirror-image configurations that count as one.
  std::vector<std::uint8_t> edge_flags(c.edges.size(), 0);
  for (size_t e = 0; e < c.edges.size(); ++e)
    if (edge_in_sub[e] && sub_faces_of_edge[e] < 2)
      edge_flags[e] |= kFlagSubBoundary;

  auto rot = vertex_rotations(c);
  for (auto& darts : rot) {
    darts.erase(std::remove_if(darts.begin(), darts.end(),
                               [&](Dart d) { return !edge_in_sub[dart_edge(d)]; }),
                darts.end());
  }

  std::vector<std::pair<Dart, int>> roots;
  for (size_t e = 0; e < c.edges.size(); ++e) {
    if (!edge_in_sub[e]) continue;
    for (Dart d : {forward_dart(static_cast<int>(e)),
                   backward_dart(static_cast<int>(e))})
      for (int sense : {1, -1}) roots.emplace_back(d, sense);
  }
  return minimum_code(c, rot, edge_flags, roots);
}

}  // namespace zonogon
