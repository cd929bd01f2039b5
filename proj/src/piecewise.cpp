#include "ordcone/piecewise.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ordcone {

namespace {

// The linear piece of f on an interval containing no breakpoint in its
// interior, as (slope, value at u).
struct Piece {
  Rational slope, at_u;
};

Piece piece_on(const PiecewiseLinear& f, const Rational& u, const Rational& v) {
  const Rational fu = pl_eval(f, u);
  return {(pl_eval(f, v) - fu) / (v - u), fu};
}

}  // namespace

void validate(const PiecewiseLinear& f) {
  if (f.breakpoints.empty()) throw std::invalid_argument("piecewise linear function needs a breakpoint");
  if (f.breakpoints.size() != f.values.size()) throw std::invalid_argument("one value per breakpoint");
  for (std::size_t i = 1; i < f.breakpoints.size(); ++i)
    if (!(f.breakpoints[i - 1] < f.breakpoints[i]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
}

Rational pl_eval(const PiecewiseLinear& f, const Rational& x) {
  const auto& b = f.breakpoints;
  const auto& v = f.values;
  if (x <= b.front()) return v.front() + f.left_slope * (x - b.front());
  if (x >= b.back()) return v.back() + f.right_slope * (x - b.back());
  const std::size_t i = std::upper_bound(b.begin(), b.end(), x) - b.begin();
  return v[i - 1] + (v[i] - v[i - 1]) * (x - b[i - 1]) / (b[i] - b[i - 1]);
}

PiecewiseLinear make_gn(long n) {
  if (n < 1) throw std::invalid_argument("g_n is defined for n >= 1");
  return PiecewiseLinear{{Rational(n - 1), Rational(n)}, {0, 1}, 0, 0};
}

PiecewiseLinear pl_scale(const Rational& s, const PiecewiseLinear& f) {
  PiecewiseLinear out = f;
  for (auto& v : out.values) v *= s;
  out.left_slope *= s;
  out.right_slope *= s;
  return out;
}

PiecewiseLinear pl_max(const std::vector<PiecewiseLinear>& fs, const Rational& domain_hi) {
  if (fs.empty()) throw std::invalid_argument("pl_max of an empty list");
  if (!(domain_hi > 0)) throw std::invalid_argument("pl_max needs a positive window");
  for (const auto& f : fs) validate(f);

  std::set<Rational> cuts{Rational(0), domain_hi};
  for (const auto& f : fs)
    for (const auto& b : f.breakpoints)
      if (b > 0 && b < domain_hi) cuts.insert(b);

  // On each cell every f is linear; the maximiser can only change where two
  // of the lines cross.
  std::set<Rational> points = cuts;
  for (auto it = cuts.begin(), next = std::next(it); next != cuts.end(); ++it, ++next) {
    const Rational& u = *it;
    const Rational& v = *next;
    std::vector<Piece> pieces;
    for (const auto& f : fs) pieces.push_back(piece_on(f, u, v));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        if (pieces[i].slope == pieces[j].slope) continue;
        const Rational t = u + (pieces[j].at_u - pieces[i].at_u) / (pieces[i].slope - pieces[j].slope);
        if (t > u && t < v) points.insert(t);
      }
    }
  }

  PiecewiseLinear out;
  for (const auto& x : points) {
    Rational best = pl_eval(fs.front(), x);
    for (const auto& f : fs) best = std::max(best, pl_eval(f, x));
    // drop the previous point if it lies on the segment from its neighbours
    const std::size_t k = out.breakpoints.size();
    if (k >= 2) {
      const Rational s1 = (out.values[k - 1] - out.values[k - 2]) / (out.breakpoints[k - 1] - out.breakpoints[k - 2]);
      const Rational s2 = (best - out.values[k - 1]) / (x - out.breakpoints[k - 1]);
      if (s1 == s2) {
        out.breakpoints.pop_back();
        out.values.pop_back();
      }
    }
    out.breakpoints.push_back(x);
    out.values.push_back(best);
  }
  return out;
}

EnvelopeReport envelope_demo(const std::optional<std::vector<Rational>>& alphas, const std::vector<Rational>& f_values,
                             const Rational& window) {
  if (!(window > 0)) throw std::invalid_argument("envelope window must be positive");
  if (f_values.empty()) throw std::invalid_argument("envelope demo needs sample values of f");
  for (const auto& y : f_values)
    if (y < 0 || y > window)
      throw std::invalid_argument("f value " + to_string(y) + " lies outside the window [0, " + to_string(window) + "]");

  auto rho = [&](const PiecewiseLinear& h) {
    Rational out = 0;
    for (const auto& y : f_values) out = std::max(out, abs(pl_eval(h, y)));
    return out;
  };

  EnvelopeReport out;
  out.window = window;
  out.f_values = f_values;
  std::vector<PiecewiseLinear> scaled;
  for (long n = 1; Rational(n) < window + 1; ++n) {
    if (alphas && static_cast<std::size_t>(n) > alphas->size()) break;
    const PiecewiseLinear gn = make_gn(n);
    EnvelopeTerm t;
    t.n = n;
    t.rho_gn = rho(gn);
    if (alphas) {
      t.alpha = (*alphas)[n - 1];
      if (!(t.alpha > 0)) throw std::invalid_argument("alphas must be positive");
    } else {
      if (t.rho_gn == 0) continue;
      t.alpha = Rational(n) / t.rho_gn;
    }
    t.rho_scaled = t.alpha * t.rho_gn;
    scaled.push_back(pl_scale(t.alpha, gn));
    out.terms.push_back(t);
  }
  if (scaled.empty()) throw std::invalid_argument("no g_n is covered by the window and samples");

  out.envelope = pl_max(scaled, window);
  out.rho_envelope = rho(out.envelope);
  out.certified = true;
  for (std::size_t i = 0; i < out.terms.size(); ++i) {
    auto& t = out.terms[i];
    t.dominated = std::all_of(f_values.begin(), f_values.end(), [&](const Rational& y) {
      const Rational v = pl_eval(scaled[i], y);
      return v >= 0 && v <= pl_eval(out.envelope, y);
    });
    t.rho_bounded = out.rho_envelope >= t.rho_scaled;
    out.certified = out.certified && t.dominated && t.rho_bounded;
  }
  return out;
}

}  // namespace ordcone
