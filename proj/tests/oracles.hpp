// Test-only reference computations. Nothing here calls into the double
// description, the simplex or the elimination code it is used to check.
#ifndef ORDCONE_TESTS_ORACLES_HPP
#define ORDCONE_TESTS_ORACLES_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ordcone/linalg.hpp"

namespace oracle {

using ordcone::QVector;
using ordcone::Rational;

// Determinant by cofactor expansion. Only for tiny matrices.
inline Rational determinant(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const Rational c = m[0][j] * determinant(minor);
    det += (j % 2 == 0) ? c : Rational(-c);
  }
  return det;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Rank as the size of the largest nonvanishing minor.
inline std::size_t rank_by_minors(std::size_t ncols, const std::vector<QVector>& rows) {
  for (std::size_t k = std::min(ncols, rows.size()); k > 0; --k) {
    bool found = false;
    for_each_subset(rows.size(), k, [&](const std::vector<std::size_t>& ri) {
      if (found) return;
      for_each_subset(ncols, k, [&](const std::vector<std::size_t>& ci) {
        if (found) return;
        std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) m[a][b] = rows[ri[a]][ci[b]];
        if (determinant(m) != 0) found = true;
      });
    });
    if (found) return k;
  }
  return 0;
}

// Cramer's rule for a square nonsingular system.
inline std::vector<Rational> cramer(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const Rational d = determinant(a);
  std::vector<Rational> x(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto aj = a;
    for (std::size_t i = 0; i < a.size(); ++i) aj[i][j] = b[i];
    x[j] = determinant(aj) / d;
  }
  return x;
}

// x ∈ cone(gens) decided by Carathéodory: x lies in the cone of some linearly
// independent subfamily. Enumerates all subfamilies and solves each by Cramer.
inline bool in_conic_hull(const QVector& x, const std::vector<QVector>& gens) {
  if (x.is_zero()) return true;
  const std::size_t n = x.dim();
  for (std::size_t k = 1; k <= std::min(n, gens.size()); ++k) {
    bool found = false;
    for_each_subset(gens.size(), k, [&](const std::vector<std::size_t>& gi) {
      if (found) return;
      // pick k coordinates on which the k generators are independent
      for_each_subset(n, k, [&](const std::vector<std::size_t>& ci) {
        if (found) return;
        std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
        std::vector<Rational> b(k);
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t c = 0; c < k; ++c) a[r][c] = gens[gi[c]][ci[r]];
          b[r] = x[ci[r]];
        }
        if (determinant(a) == 0) return;
        const auto lam = cramer(a, b);
        for (const auto& l : lam)
          if (l < 0) return;
        QVector y(n);
        for (std::size_t c = 0; c < k; ++c) y += lam[c] * gens[gi[c]];
        if (y == x) found = true;
      });
    });
    if (found) return true;
  }
  return false;
}

// Plain Gauss-Jordan on a square system; nullopt when singular.
inline std::optional<std::vector<Rational>> gauss_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Minimum of <c,z> over {a z = b, z >= 0} by enumerating every basic
// feasible solution. Assumes a has full row rank and the minimum exists.
inline std::optional<Rational> lp_min_by_vertices(const ordcone::QMatrix& a, const QVector& b, const QVector& c) {
  const std::size_t m = a.nrows(), n = a.ncols();
  std::optional<Rational> best;
  for_each_subset(n, m, [&](const std::vector<std::size_t>& cols) {
    std::vector<std::vector<Rational>> basis(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) basis[i][j] = a(i, cols[j]);
    const auto z = gauss_solve(basis, std::vector<Rational>(b.begin(), b.end()));
    if (!z) return;
    Rational value = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if ((*z)[j] < 0) return;
      value += c[cols[j]] * (*z)[j];
    }
    if (!best || value < *best) best = value;
  });
  return best;
}

// Random small integer vectors.
struct Generator {
  std::mt19937_64 rng;
  explicit Generator(std::uint64_t seed) : rng(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Rational rational(long range, long max_den = 1) {
    return Rational(uniform(-range, range), uniform(1, max_den));
  }

  QVector vector(std::size_t dim, long range, long max_den = 1) {
    QVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rational(range, max_den);
    return v;
  }

  // Generators of a random cone in dimension <= max_dim with <= max_gens
  // generators. Every tenth draw is degenerate on purpose: {0}, the full
  // space, or a cone containing a line.
  std::pair<std::size_t, std::vector<QVector>> cone(std::size_t max_dim, std::size_t max_gens) {
    const std::size_t dim = uniform(1, static_cast<long>(max_dim));
    std::vector<QVector> gens;
    switch (uniform(0, 9)) {
      case 0:
        return {dim, gens};
      case 1:
        for (std::size_t i = 0; i < dim; ++i) {
          gens.push_back(QVector::unit(dim, i));
          gens.push_back(-QVector::unit(dim, i));
        }
        return {dim, gens};
      case 2: {
        const QVector l = vector(dim, 2);
        gens.push_back(l);
        gens.push_back(-l);
        break;
      }
      default:
        break;
    }
    // half of the remaining draws keep the generators in an open half-space,
    // otherwise most large random families span everything
    const bool pointed = uniform(0, 1) == 1;
    const std::size_t count = uniform(1, static_cast<long>(max_gens) - static_cast<long>(gens.size()));
    for (std::size_t i = 0; i < count; ++i) {
      QVector g = vector(dim, 3);
      if (pointed) g[dim - 1] = abs(g[dim - 1]) + 1;
      gens.push_back(g);
    }
    return {dim, gens};
  }
};

}  // namespace oracle

#endif  // ORDCONE_TESTS_ORACLES_HPP
