#ifndef ORDCONE_COMPLETION_HPP
#define ORDCONE_COMPLETION_HPP

#include <cstddef>
#include <vector>

namespace ordcone {

/**
 * Floating-point demo of a Cauchy sequence in C^1[0,1] under the norm
 * ||h|| = sup_[0,1] |h| + |h'(0)|, with g(x) = (1 + sin x) / 2 and
 * g_n(x) = g(n x) / n. The sup is taken over an evenly spaced grid. This is
 * the only inexact computation in the library.
 */
struct CompletionPair {
  int n = 0, m = 0;
  double sup_difference = 0;         // sup |g_n - g_m| over the grid
  double derivative_difference = 0;  // |g_n'(0) - g_m'(0)|
  double norm = 0;
  double bound = 0;  // 1/n + 1/m
  bool within_bound = false;
};

struct CompletionTerm {
  int n = 0;
  double norm = 0;  // ||g_n||
  bool bounded_below = false;  // norm >= 1/2 - tolerance
};

struct CompletionReport {
  int n_max = 0;
  std::size_t grid_points = 0;
  double tolerance = 0;
  std::vector<CompletionPair> pairs;  // all 1 <= n < m <= n_max
  std::vector<CompletionTerm> terms;
  bool certified = false;
};

/// Throws std::invalid_argument if n_max < 2 or grid_points < 2.
CompletionReport completion_cauchy_demo(int n_max, std::size_t grid_points = 100001, double tolerance = 1e-9);

}  // namespace ordcone

#endif  // ORDCONE_COMPLETION_HPP
