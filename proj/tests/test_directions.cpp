#include <numeric>
#include <set>

#include "doctest.h"
#include "zonogon/directions.hpp"

using namespace zonogon;

TEST_CASE("travel angles and slope order") {
  CHECK(phi_units(4, 1) == 0);
  CHECK(phi_units(4, 2) == 1);
  CHECK(phi_units(4, 3) == -2);
  CHECK(phi_units(4, 4) == -1);
  CHECK(slope_order(4) == std::vector<DirectionIndex>{3, 4, 1, 2});
  CHECK(slope_order(3) == std::vector<DirectionIndex>{3, 1, 2});
  CHECK(slope_order(2) == std::vector<DirectionIndex>{2, 1});
  CHECK_THROWS(phi_units(4, 0));
  CHECK_THROWS(phi_units(4, 5));
  CHECK_THROWS(phi_units(1, 1));
}

TEST_CASE("slope rank inverts slope order") {
  for (int k = 2; k <= 9; ++k) {
    auto order = slope_order(k);
    for (int i = 0; i < k; ++i) CHECK(slope_rank(k, order[i]) == i);
    std::set<int> phis;
    for (int d = 1; d <= k; ++d) {
      int phi = phi_units(k, d);
      CHECK(phi >= -(k / 2));
      CHECK(phi <= (k + 1) / 2 - 1);
      phis.insert(phi);
    }
    CHECK(static_cast<int>(phis.size()) == k);
  }
}

TEST_CASE("side directions repeat around the boundary") {
  for (int j = 1; j <= 6; ++j) CHECK(side_direction(3, j) == (j - 1) % 3 + 1);
  CHECK(side_direction(4, 5) == 1);
  for (int k = 2; k <= 6; ++k)
    for (DirectionIndex d = 1; d <= k; ++d) {
      int j = lower_chain_side(k, d);
      CHECK(side_direction(k, j) == d);
    }
}

TEST_CASE("multiplicity validity window") {
  CHECK(Multiplicities{3, {1, 2, 3}}.valid());
  CHECK(Multiplicities{3, {1, 2, 3}}.total() == 6);
  CHECK_FALSE(Multiplicities{3, {1, 2}}.valid());
  CHECK_FALSE(Multiplicities{3, {0, 1, 1}}.valid());
  CHECK_FALSE(Multiplicities{3, {1, 1, 4}}.valid());  // cap 2k-3 = 3
  CHECK_FALSE(Multiplicities{1, {1}}.valid());
}

TEST_CASE("tile interior angles from direction sets") {
  CHECK(zonogon_angles(4, {1, 3}) == std::vector<int>{2, 2, 2, 2});
  CHECK(zonogon_angles(4, {1, 2, 3}) == std::vector<int>{3, 3, 2, 3, 3, 2});
  CHECK(zonogon_angles(4, {1, 2, 3, 4}) ==
        std::vector<int>{3, 3, 3, 3, 3, 3, 3, 3});
  CHECK(zonogon_angles(3, {1, 2, 3}) == std::vector<int>{2, 2, 2, 2, 2, 2});
  CHECK(zonogon_angles(2, {1, 2}) == std::vector<int>{1, 1, 1, 1});
  CHECK_THROWS(zonogon_angles(4, {2}));
  CHECK_THROWS(zonogon_angles(4, {}));
}

TEST_CASE("angle lists are valid polygons for every direction subset") {
  for (int k = 2; k <= 8; ++k) {
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<DirectionIndex> dirs;
      for (int d = 1; d <= k; ++d)
        if (mask >> (d - 1) & 1) dirs.push_back(d);
      if (dirs.size() < 2) continue;
      auto angles = zonogon_angles(k, dirs);
      int s = static_cast<int>(dirs.size());
      REQUIRE(static_cast<int>(angles.size()) == 2 * s);
      int sum = 0;
      for (int i = 0; i < s; ++i) {
        CHECK(angles[i] >= 1);
        CHECK(angles[i] <= k - 1);
        CHECK(angles[i] == angles[i + s]);  // central symmetry
        sum += 2 * angles[i];
      }
      CHECK(sum == (2 * s - 2) * k);
    }
  }
}
