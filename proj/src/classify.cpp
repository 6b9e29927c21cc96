#include "zonogon/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "zonogon/canon.hpp"

namespace zonogon {

std::vector<int> dihedral_reduced(const std::vector<int>& m) {
  int k = static_cast<int>(m.size());
  std::vector<int> best = m, image(k);
  for (int rev = 0; rev < 2; ++rev) {
    for (int s = 0; s < k; ++s) {
      for (int i = 0; i < k; ++i)
        image[i] = rev ? m[((s - i) % k + k) % k] : m[(s + i) % k];
      if (image < best) best = image;
    }
  }
  return best;
}

std::string type_string_of(const TilingComplex& c) {
  std::string out;
  for (int t : dihedral_reduced(c.mult.m)) {
    if (!out.empty()) out.push_back('/');
    out += std::to_string(t);
  }
  return out;
}

std::string case_of(const std::vector<int>& signature, int k) {
  if (k != 4) throw std::invalid_argument("case labels are defined for k = 4");
  if (static_cast<int>(signature.size()) != 2 * k)
    throw std::invalid_argument("signature must list 2k sides");
  for (int i = 0; i < k; ++i)
    if (signature[i] != signature[i + k])
      throw std::invalid_argument("signature not mirrored");
  std::set<int> types(signature.begin(), signature.begin() + k);
  for (int t : types)
    if (t < 1 || t > 2 * k - 3) throw std::invalid_argument("side type out of range");
  if (types.count(5)) return "I";
  if (types.count(4)) return "II";
  if (types == std::set<int>{1}) return "III";
  if (types == std::set<int>{2}) return "IV";
  if (types == std::set<int>{3}) return "V";
  if (types == std::set<int>{1, 2}) return "VI";
  if (types == std::set<int>{1, 3}) return "VII";
  if (types == std::set<int>{2, 3}) return "VIII";
  return "IX";
}

std::map<int, int> tile_census(const TilingComplex& c) {
  std::map<int, int> census;
  for (const FaceRec& f : c.faces) ++census[static_cast<int>(f.boundary.size())];
  return census;
}

ClassReport class_report(const TilingComplex& c) {
  ClassReport report;
  report.code = code_hex(canonical_code(c));
  report.type_string = type_string_of(c);
  if (c.k() == 4) report.case_label = case_of(boundary_signature(c), 4);
  report.census = tile_census(c);
  for (int j = 1; j <= 2 * c.k(); ++j)
    report.side_profiles.push_back(code_hex(side_profile(c, j)));
  return report;
}

NeighborTable neighbor_table(const std::vector<TilingComplex>& reps) {
  NeighborTable table;
  for (const TilingComplex& c : reps) {
    auto sig = boundary_signature(c);
    int sides = static_cast<int>(sig.size());
    for (int j = 0; j < sides; ++j) {
      if (sig[j] < 3) continue;
      std::string hex = code_hex(side_profile(c, j + 1));
      int a = sig[(j + sides - 1) % sides];
      int b = sig[(j + 1) % sides];
      auto& row = table.rows[hex];
      row.side_edges = sig[j];
      row.neighbor_types.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  for (auto& [hex, row] : table.rows) {
    std::sort(row.neighbor_types.begin(), row.neighbor_types.end());
    row.neighbor_types.erase(
        std::unique(row.neighbor_types.begin(), row.neighbor_types.end()),
        row.neighbor_types.end());
  }
  return table;
}

}  // namespace zonogon
