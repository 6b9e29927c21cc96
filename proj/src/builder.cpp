#include "zonogon/builder.hpp"

#include <algorithm>
#include <stdexcept>

namespace zonogon {

SweepBuilder::SweepBuilder(const Multiplicities& mult) {
  wt_ = WireTable::build(mult);
  front_ = initial_front(wt_);
  int n = wt_.total();
  cx_.mult = mult;
  cx_.vertex_count = n + 1;
  rot_.resize(n + 1);
  in_front_.assign(n + 1, 1);
  angle_sum_.assign(n + 1, 0);
  front_verts_.resize(n + 1);
  front_edges_.resize(n);
  for (int i = 0; i <= n; ++i) front_verts_[i] = i;
  for (int i = 0; i < n; ++i) {
    EdgeRec e;
    e.dir = wt_.dir[i];
    e.wire = i;
    e.tail = i;
    e.head = i + 1;
    cx_.edges.push_back(e);
    front_edges_[i] = i;
    rot_insert(i, forward_dart(i));
    rot_insert(i + 1, backward_dart(i));
  }
}

void SweepBuilder::rot_insert(int v, Dart d) {
  auto& darts = rot_[v];
  auto pos = std::lower_bound(darts.begin(), darts.end(), d,
                              [this](Dart a, Dart b) {
                                return cx_.dart_angle_units(a) < cx_.dart_angle_units(b);
                              });
  darts.insert(pos, d);
}

void SweepBuilder::rot_erase(int v, Dart d) {
  auto& darts = rot_[v];
  darts.erase(std::find(darts.begin(), darts.end(), d));
}

bool SweepBuilder::at_final() const {
  for (size_t i = 1; i < front_.wires.size(); ++i)
    if (wt_.rank[front_.wires[i - 1]] < wt_.rank[front_.wires[i]]) return false;
  return true;
}

bool SweepBuilder::normal_after_history(const Move& mv) const {
  for (auto it = history_.rbegin(); it != history_.rend(); ++it) {
    bool disjoint = mv.start + mv.len <= it->start || it->start + it->len <= mv.start;
    if (!disjoint) break;
    if (mv.start < it->start) return false;
  }
  return true;
}

int SweepBuilder::apply(const Move& mv) {
  int n = wt_.total();
  int s = mv.start, len = mv.len, e = mv.start + mv.len;
  if (s < 0 || len < 2 || e > n) throw std::invalid_argument("move out of range");
  for (int i = s + 1; i < e; ++i)
    if (wt_.rank[front_.wires[i - 1]] >= wt_.rank[front_.wires[i]])
      throw std::invalid_argument("move block not ascending");

  std::vector<int> phi(len);
  for (int i = 0; i < len; ++i)
    phi[i] = phi_units(wt_.k, wt_.dir[front_.wires[s + i]]);
  int span = phi[len - 1] - phi[0];
  int k = wt_.k;

  UndoRec rec;
  rec.mv = mv;
  rec.mid_verts.assign(front_verts_.begin() + s + 1, front_verts_.begin() + e);
  rec.bottom_edges.assign(front_edges_.begin() + s, front_edges_.begin() + e);

  int f = static_cast<int>(cx_.faces.size());

  // New top path vertices u[1..len-1]; node 0 and node len stay v[s], v[e].
  std::vector<int> node(len + 1);
  node[0] = front_verts_[s];
  node[len] = front_verts_[e];
  for (int j = 1; j < len; ++j) {
    node[j] = cx_.vertex_count++;
    rot_.emplace_back();
    in_front_.push_back(1);
    angle_sum_.push_back(0);
  }

  // Top edges t[0..len-1], slot j travels node[j] -> node[j+1] carrying the
  // block's wires in reversed order.
  std::vector<int> top(len);
  for (int j = 0; j < len; ++j) {
    int w = front_.wires[e - 1 - j];
    EdgeRec te;
    te.dir = wt_.dir[w];
    te.wire = w;
    te.tail = node[j];
    te.head = node[j + 1];
    te.right = f;
    top[j] = static_cast<int>(cx_.edges.size());
    cx_.edges.push_back(te);
  }
  for (int j = 0; j < len; ++j) {
    rot_insert(node[j], forward_dart(top[j]));
    rot_insert(node[j + 1], backward_dart(top[j]));
  }

  FaceRec face;
  for (int i = 0; i < len; ++i) {
    int be = rec.bottom_edges[i];
    cx_.edges[be].left = f;
    face.boundary.push_back(forward_dart(be));
    face.angle_units.push_back(i + 1 < len ? k - (phi[i + 1] - phi[i]) : span);
  }
  for (int j = len - 1; j >= 0; --j) {
    face.boundary.push_back(backward_dart(top[j]));
    face.angle_units.push_back(j > 0 ? k - (phi[len - j] - phi[len - 1 - j]) : span);
  }
  for (int i = 0; i < len; ++i) face.dirs.push_back(wt_.dir[front_.wires[s + i]]);
  std::sort(face.dirs.begin(), face.dirs.end());

  for (size_t i = 0; i < face.boundary.size(); ++i)
    angle_sum_[cx_.dart_head(face.boundary[i])] += face.angle_units[i];

  cx_.faces.push_back(std::move(face));

  std::reverse(front_.wires.begin() + s, front_.wires.begin() + e);
  for (int j = 0; j < len; ++j) front_edges_[s + j] = top[j];
  for (int v : rec.mid_verts) in_front_[v] = 0;
  for (int j = 1; j < len; ++j) front_verts_[s + j] = node[j];

  history_.push_back(mv);
  undo_.push_back(std::move(rec));
  return f;
}

void SweepBuilder::undo() {
  if (undo_.empty()) throw std::logic_error("nothing to undo");
  UndoRec rec = std::move(undo_.back());
  undo_.pop_back();
  history_.pop_back();
  int s = rec.mv.start, len = rec.mv.len, e = rec.mv.start + rec.mv.len;

  const FaceRec& face = cx_.faces.back();
  for (size_t i = 0; i < face.boundary.size(); ++i)
    angle_sum_[cx_.dart_head(face.boundary[i])] -= face.angle_units[i];

  // Drop the top edges' darts from the surviving endpoint rotations.
  int first_top = static_cast<int>(cx_.edges.size()) - len;
  rot_erase(cx_.edges[first_top].tail, forward_dart(first_top));
  rot_erase(cx_.edges[first_top + len - 1].head, backward_dart(first_top + len - 1));

  for (int i = 0; i < len; ++i) cx_.edges[rec.bottom_edges[i]].left = kNoFace;

  cx_.faces.pop_back();
  cx_.edges.resize(first_top);
  cx_.vertex_count -= len - 1;
  rot_.resize(cx_.vertex_count);
  in_front_.resize(cx_.vertex_count);
  angle_sum_.resize(cx_.vertex_count);

  std::reverse(front_.wires.begin() + s, front_.wires.begin() + e);
  for (int i = 0; i < len; ++i) front_edges_[s + i] = rec.bottom_edges[i];
  for (int j = 1; j < len; ++j) {
    front_verts_[s + j] = rec.mid_verts[j - 1];
    in_front_[rec.mid_verts[j - 1]] = 1;
  }
}

bool SweepBuilder::vertex_settled(int v) const {
  if (!in_front_[v]) return true;
  if (v == front_verts_.front() || v == front_verts_.back())
    return angle_sum_[v] == wt_.k - 1;
  return false;
}

TilingComplex SweepBuilder::snapshot() const {
  if (!at_final()) throw std::logic_error("sweep not finished");
  TilingComplex out = cx_;
  int k = wt_.k;
  int n = wt_.total();
  out.boundary_sides.assign(2 * k, {});

  // Lower chain: the initial edges 0..n-1 in position order are already ccw.
  for (int i = 0; i < n; ++i)
    out.boundary_sides[lower_chain_side(k, out.edges[i].dir) - 1].push_back(i);
  // Upper chain: ccw runs right to left; sides sit opposite their lower twin.
  for (int p = n - 1; p >= 0; --p) {
    int e = front_edges_[p];
    int low = lower_chain_side(k, out.edges[e].dir);
    int opp = (low - 1 + k) % (2 * k) + 1;
    out.boundary_sides[opp - 1].push_back(e);
  }

  out.roles.assign(out.vertex_count, VertexRole::interior);
  for (const auto& side : out.boundary_sides) {
    for (int e : side) {
      out.roles[out.edges[e].tail] = VertexRole::side;
      out.roles[out.edges[e].head] = VertexRole::side;
    }
  }
  // Corners are the meeting points of consecutive sides.
  for (int j = 0; j < 2 * k; ++j) {
    const auto& a = out.boundary_sides[j];
    const auto& b = out.boundary_sides[(j + 1) % (2 * k)];
    for (int va : {out.edges[a.front()].tail, out.edges[a.front()].head,
                   out.edges[a.back()].tail, out.edges[a.back()].head})
      for (int vb : {out.edges[b.front()].tail, out.edges[b.front()].head,
                     out.edges[b.back()].tail, out.edges[b.back()].head})
        if (va == vb) out.roles[va] = VertexRole::corner;
  }
  return out;
}

}  // namespace zonogon
