#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace zonogon {

// Arbitrary-precision values cross this interface as decimal strings; the
// big-number machinery stays private to the implementation.
struct BoundReport {
  int k = 0;
  long long n = 0;                // floor-certified integer edge bound
  std::string exact_edge_bound;   // k(2k-3)^2 / (2 sin^2(pi/2k)), 50+ digits
  std::string t_n;                // exact loopless rooted map count at n
  std::string theorem_bound;      // n * t_n
  std::size_t t_n_digits = 0;
  std::size_t theorem_bound_digits = 0;
  double log10_asymptotic = 0.0;  // estimate of log10(n * t_n) at n
};

// (exact proof-stage edge bound to `digits` significant digits,
//  floor(2 k^3 (2k-3)^2 / ((2 - sqrt 2) pi^2)) ). The floor is certified by
// directed-rounding interval arithmetic, doubling the working precision
// until both interval ends floor to the same integer.
std::pair<std::string, long long> edge_bounds(int k, int digits = 50);

// 6 (4N+1)! / (N! (3N+3)!) exactly; the division is asserted to be exact.
std::string loopless_map_count(long long n);

// n * t_n with n from edge_bounds(k).
std::string theorem_bound(int k);

// log10 of (8/27) sqrt(6/pi) N^(-3/2) (256/27)^N.
double asymptotic_estimate(long long n);

// log10 of N * t_N, for comparison with the estimate.
double log10_n_times_t(long long n);

BoundReport bound_report(int k);

}  // namespace zonogon
