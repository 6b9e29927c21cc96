#include "zonogon/directions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zonogon {

int Multiplicities::total() const {
  return std::accumulate(m.begin(), m.end(), 0);
}

bool Multiplicities::valid() const {
  if (k < 2 || static_cast<int>(m.size()) != k) return false;
  for (int mi : m)
    if (mi < 1 || mi > 2 * k - 3) return false;
  return true;
}

int phi_units(int k, DirectionIndex d) {
  if (k < 2 || d < 1 || d > k) throw std::invalid_argument("bad direction");
  int a = d - 1;
  return 2 * a < k ? a : a - k;
}

std::vector<DirectionIndex> slope_order(int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  std::vector<DirectionIndex> order(k);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [k](DirectionIndex a, DirectionIndex b) {
    return phi_units(k, a) < phi_units(k, b);
  });
  return order;
}

int slope_rank(int k, DirectionIndex d) {
  // phi values of 1..k are distinct, so the rank is the count of smaller ones
  int phi = phi_units(k, d);
  int rank = 0;
  for (int i = 1; i <= k; ++i)
    if (phi_units(k, i) < phi) ++rank;
  return rank;
}

DirectionIndex side_direction(int k, int j) {
  if (j < 1 || j > 2 * k) throw std::invalid_argument("bad side index");
  return (j - 1) % k + 1;
}

int lower_chain_side(int k, DirectionIndex d) {
  return phi_units(k, d) >= 0 ? d : d + k;
}

std::vector<int> zonogon_angles(int k, std::vector<DirectionIndex> dirs) {
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  int s = static_cast<int>(dirs.size());
  if (s < 2) throw std::invalid_argument("degenerate tile");
  if (dirs.front() < 1 || dirs.back() > k) throw std::invalid_argument("bad direction");
  // Consecutive sides of the zonogon turn by the angular gap between
  // consecutive directions, so the interior angle there is k - gap.
  std::vector<int> half;
  for (int t = 0; t < s; ++t) {
    int gap = t + 1 < s ? dirs[t + 1] - dirs[t] : k - (dirs[s - 1] - dirs[0]);
    half.push_back(k - gap);
  }
  std::vector<int> angles = half;
  angles.insert(angles.end(), half.begin(), half.end());
  return angles;
}

}  // namespace zonogon
