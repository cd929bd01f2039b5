#include "ordcone/completion.hpp"

#include <cmath>
#include <stdexcept>

namespace ordcone {

namespace {

double g(double x) { return (1 + std::sin(x)) / 2; }
double g_prime(double x) { return std::cos(x) / 2; }

}  // namespace

CompletionReport completion_cauchy_demo(int n_max, std::size_t grid_points, double tolerance) {
  if (n_max < 2) throw std::invalid_argument("completion demo needs n_max >= 2");
  if (grid_points < 2) throw std::invalid_argument("completion demo needs at least two grid points");

  CompletionReport out{n_max, grid_points, tolerance, {}, {}, true};
  std::vector<std::vector<double>> samples(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    samples[n].resize(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(grid_points - 1);
      samples[n][i] = g(n * x) / n;
    }
  }

  for (int n = 1; n <= n_max; ++n) {
    double sup = 0;
    for (double v : samples[n]) sup = std::max(sup, std::abs(v));
    CompletionTerm t{n, sup + std::abs(g_prime(0)), false};
    t.bounded_below = t.norm >= 0.5 - tolerance;
    out.certified = out.certified && t.bounded_below;
    out.terms.push_back(t);
  }

  for (int n = 1; n <= n_max; ++n) {
    for (int m = n + 1; m <= n_max; ++m) {
      CompletionPair p{n, m, 0, 0, 0, 1.0 / n + 1.0 / m, false};
      for (std::size_t i = 0; i < grid_points; ++i)
        p.sup_difference = std::max(p.sup_difference, std::abs(samples[n][i] - samples[m][i]));
      // (g(nx)/n)' = g'(nx), so both derivatives at 0 equal g'(0)
      p.derivative_difference = std::abs(g_prime(n * 0.0) - g_prime(m * 0.0));
      p.norm = p.sup_difference + p.derivative_difference;
      p.within_bound = p.norm <= p.bound + tolerance;
      out.certified = out.certified && p.within_bound;
      out.pairs.push_back(p);
    }
  }
  return out;
}

}  // namespace ordcone
