#include "zonogon/tiling_json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "zonogon/canon.hpp"
#include "zonogon/classify.hpp"

namespace zonogon {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("parse: " + what);
}

int get_int(const json& j, const char* what, int lo, int hi) {
  if (!j.is_number_integer()) fail(std::string(what) + " is not an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi) fail(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> get_int_array(const json& j, const char* what, int lo, int hi) {
  if (!j.is_array()) fail(std::string(what) + " is not an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(get_int(x, what, lo, hi));
  return out;
}

// Orient the listed edges into a closed dart cycle. Consecutive listed
// edges must share exactly one endpoint once the chain direction is fixed.
std::vector<Dart> chain_face(const TilingComplex& c, const std::vector<int>& ids) {
  std::size_t n = ids.size();
  std::vector<Dart> cycle(n);
  auto try_from = [&](Dart first) -> bool {
    cycle[0] = first;
    for (std::size_t i = 1; i < n; ++i) {
      int at = c.dart_head(cycle[i - 1]);
      int e = ids[i];
      if (c.edges[e].tail == at && c.edges[e].head != at)
        cycle[i] = forward_dart(e);
      else if (c.edges[e].head == at && c.edges[e].tail != at)
        cycle[i] = backward_dart(e);
      else
        return false;
      if (dart_edge(cycle[i]) == dart_edge(cycle[i - 1])) return false;
    }
    return c.dart_head(cycle[n - 1]) == c.dart_tail(cycle[0]);
  };
  if (!try_from(forward_dart(ids[0])) && !try_from(backward_dart(ids[0])))
    fail("face boundary is not a closed edge chain");
  return cycle;
}

// Sum of exterior turns in angle units: +2k for a counterclockwise simple
// cycle, -2k for clockwise.
int turning_sum(const TilingComplex& c, const std::vector<Dart>& cycle) {
  int k = c.k();
  int sum = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Dart a = cycle[i];
    Dart b = cycle[(i + 1) % cycle.size()];
    int interior =
        ((c.dart_angle_units(dart_reverse(a)) - c.dart_angle_units(b)) % (2 * k) +
         2 * k) %
        (2 * k);
    if (interior == 0) fail("face has a straight or reflex fold");
    sum += k - interior;
  }
  return sum;
}

void derive_roles(TilingComplex& c) {
  c.roles.assign(c.vertex_count, VertexRole::interior);
  std::vector<std::set<int>> dirs_at(c.vertex_count);
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    if (!c.edge_on_boundary(static_cast<int>(e))) continue;
    dirs_at[c.edges[e].tail].insert(c.edges[e].dir);
    dirs_at[c.edges[e].head].insert(c.edges[e].dir);
  }
  for (int v = 0; v < c.vertex_count; ++v) {
    if (dirs_at[v].size() == 1) c.roles[v] = VertexRole::side;
    if (dirs_at[v].size() >= 2) c.roles[v] = VertexRole::corner;
  }
}

}  // namespace

json tiling_to_json(const TilingComplex& c) {
  json j;
  j["k"] = c.k();
  j["multiplicities"] = c.mult.m;
  json faces = json::array();
  for (const auto& f : c.faces) {
    json jf;
    jf["dirs"] = f.dirs;
    std::vector<int> ids;
    ids.reserve(f.boundary.size());
    for (Dart d : f.boundary) ids.push_back(dart_edge(d));
    jf["boundary"] = ids;
    faces.push_back(std::move(jf));
  }
  j["faces"] = std::move(faces);
  json edges = json::array();
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    json je;
    je["id"] = e;
    je["dir"] = c.edges[e].dir;
    je["wire"] = c.edges[e].wire;
    je["v"] = {c.edges[e].tail, c.edges[e].head};
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  std::vector<int> verts(c.vertex_count);
  std::iota(verts.begin(), verts.end(), 0);
  j["vertices"] = verts;
  j["boundary_sides"] = c.boundary_sides;
  return j;
}

namespace {
TilingComplex tiling_from_json_impl(const json& j);
}

TilingComplex tiling_from_json(const json& j) {
  try {
    return tiling_from_json_impl(j);
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

namespace {

TilingComplex tiling_from_json_impl(const json& j) {
  if (!j.is_object()) fail("document is not an object");
  for (const char* key :
       {"k", "multiplicities", "faces", "edges", "vertices", "boundary_sides"})
    if (!j.contains(key)) fail(std::string("missing field ") + key);

  TilingComplex c;
  int k = get_int(j["k"], "k", 2, 64);
  c.mult.k = k;
  c.mult.m = get_int_array(j["multiplicities"], "multiplicity", 1, 1 << 20);
  if (!c.mult.valid()) fail("multiplicity vector invalid");

  std::vector<int> vids = get_int_array(j["vertices"], "vertex id", 0, 1 << 28);
  int vcount = static_cast<int>(vids.size());
  std::sort(vids.begin(), vids.end());
  for (int i = 0; i < vcount; ++i)
    if (vids[i] != i) fail("vertex ids are not 0..V-1");
  c.vertex_count = vcount;

  if (!j["edges"].is_array() || j["edges"].empty()) fail("edges missing");
  int ecount = static_cast<int>(j["edges"].size());
  c.edges.assign(ecount, EdgeRec{});
  std::vector<bool> seen(ecount, false);
  for (const auto& je : j["edges"]) {
    if (!je.is_object()) fail("edge is not an object");
    int id = get_int(je.at("id"), "edge id", 0, ecount - 1);
    if (seen[id]) fail("duplicate edge id");
    seen[id] = true;
    EdgeRec& e = c.edges[id];
    e.dir = get_int(je.at("dir"), "edge dir", 1, k);
    e.wire = get_int(je.at("wire"), "edge wire", 0, c.mult.total() - 1);
    auto v = get_int_array(je.at("v"), "edge endpoint", 0, vcount - 1);
    if (v.size() != 2 || v[0] == v[1]) fail("edge endpoints invalid");
    e.tail = v[0];
    e.head = v[1];
  }

  if (!j["faces"].is_array() || j["faces"].empty()) fail("faces missing");
  for (const auto& jf : j["faces"]) {
    if (!jf.is_object()) fail("face is not an object");
    FaceRec f;
    std::vector<int> ids =
        get_int_array(jf.at("boundary"), "face edge id", 0, ecount - 1);
    if (ids.size() < 3) fail("face has fewer than 3 edges");
    std::set<int> distinct(ids.begin(), ids.end());
    if (distinct.size() != ids.size()) fail("face repeats an edge");
    f.boundary = chain_face(c, ids);
    int turns = turning_sum(c, f.boundary);
    if (turns == -2 * k) {
      std::reverse(f.boundary.begin(), f.boundary.end());
      for (Dart& d : f.boundary) d = dart_reverse(d);
      turns = 2 * k;
    }
    if (turns != 2 * k) fail("face cycle is not simple");
    int n = static_cast<int>(f.boundary.size());
    f.angle_units.resize(n);
    std::set<int> dir_set;
    for (int i = 0; i < n; ++i) {
      Dart a = f.boundary[i];
      Dart b = f.boundary[(i + 1) % n];
      f.angle_units[i] =
          ((c.dart_angle_units(dart_reverse(a)) - c.dart_angle_units(b)) %
               (2 * k) +
           2 * k) %
          (2 * k);
      dir_set.insert(c.edges[dart_edge(a)].dir);
    }
    f.dirs.assign(dir_set.begin(), dir_set.end());
    std::vector<int> stored = get_int_array(jf.at("dirs"), "face dir", 1, k);
    std::sort(stored.begin(), stored.end());
    stored.erase(std::unique(stored.begin(), stored.end()), stored.end());
    if (stored != f.dirs) fail("face dirs disagree with its edges");
    int fid = static_cast<int>(c.faces.size());
    for (Dart d : f.boundary) {
      int e = dart_edge(d);
      int& slot = dart_is_forward(d) ? c.edges[e].left : c.edges[e].right;
      if (slot != kNoFace) fail("edge claims two faces on one side");
      slot = fid;
    }
    c.faces.push_back(std::move(f));
  }

  if (!j["boundary_sides"].is_array() ||
      j["boundary_sides"].size() != static_cast<std::size_t>(2 * k))
    fail("boundary_sides must list 2k sides");
  for (const auto& js : j["boundary_sides"])
    c.boundary_sides.push_back(
        get_int_array(js, "boundary edge id", 0, ecount - 1));

  derive_roles(c);
  return c;
}

}  // namespace

TilingComplex load_tiling(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
  return tiling_from_json(j);
}

void save_tiling(const TilingComplex& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << tiling_to_json(c).dump(2) << "\n";
}

std::string class_file_stem(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "class_%04zu", index);
  return buf;
}

json summary_json(const ClassSet& classes) {
  json j;
  json entries = json::array();
  std::map<std::string, int> cases;
  int k = 0;
  std::size_t index = 0;
  for (const auto& [code, entry] : classes.by_code) {
    k = entry.rep.k();
    ClassReport report = class_report(entry.rep);
    json je;
    je["code"] = code;
    je["multiplicities"] = entry.rep.mult.m;
    je["type"] = report.type_string;
    if (!report.case_label.empty()) {
      je["case"] = report.case_label;
      ++cases[report.case_label];
    }
    json census = json::object();
    for (const auto& [sides, count] : report.census)
      census[std::to_string(sides)] = count;
    je["census"] = std::move(census);
    je["tilings"] = entry.tilings;
    je["file"] = class_file_stem(index) + ".json";
    entries.push_back(std::move(je));
    ++index;
  }
  j["k"] = k;
  j["classes"] = classes.by_code.size();
  if (!cases.empty()) j["cases"] = cases;
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace zonogon
