#ifndef ORDCONE_PIECEWISE_HPP
#define ORDCONE_PIECEWISE_HPP

#include <optional>
#include <vector>

#include "ordcone/rational.hpp"

namespace ordcone {

/// A continuous piecewise linear function on the rationals: linear
/// interpolation between (breakpoints[i], values[i]), extended linearly with
/// the given slopes to the left of the first and right of the last
/// breakpoint.
struct PiecewiseLinear {
  std::vector<Rational> breakpoints;  // strictly increasing, nonempty
  std::vector<Rational> values;
  Rational left_slope = 0;
  Rational right_slope = 0;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;
};

/// Throws std::invalid_argument for an empty, unsorted or mismatched function.
void validate(const PiecewiseLinear& f);

Rational pl_eval(const PiecewiseLinear& f, const Rational& x);

/// g_n(x) = ((x - n + 1) v 0) ^ 1. Throws std::invalid_argument for n < 1.
PiecewiseLinear make_gn(long n);

/// x |-> s f(x) for s >= 0.
PiecewiseLinear pl_scale(const Rational& s, const PiecewiseLinear& f);

/**
 * The pointwise maximum of the functions on [0, domain_hi]. Breakpoints are
 * 0, domain_hi, the inputs' breakpoints in between, and the crossing points
 * where the maximiser changes; redundant collinear breakpoints are removed.
 * Outside the window the result is extended by constants. Throws
 * std::invalid_argument for an empty list or domain_hi <= 0.
 */
PiecewiseLinear pl_max(const std::vector<PiecewiseLinear>& fs, const Rational& domain_hi);

struct EnvelopeTerm {
  long n = 0;
  Rational alpha;
  Rational rho_gn;          // rho(g_n o f)
  Rational rho_scaled;      // alpha * rho(g_n o f)
  bool dominated = false;   // 0 <= alpha g_n(f(k)) <= g_inf(f(k)) at every sample
  bool rho_bounded = false; // rho(g_inf o f) >= alpha * rho(g_n o f)
};

struct EnvelopeReport {
  Rational window;
  std::vector<Rational> f_values;
  std::vector<EnvelopeTerm> terms;
  PiecewiseLinear envelope;  // max_n alpha_n g_n on [0, window]
  Rational rho_envelope;     // rho(g_inf o f)
  bool certified = false;
};

/**
 * The upper envelope g_inf = max alpha_n g_n on [0, window] together with the
 * seminorm rho(h) = max_k |h(f_values[k])|. The terms are n = 1, 2, ... up to
 * the last g_n that is nonzero somewhere on the window (n < window + 1); the
 * others vanish there. Without explicit alphas, alpha_n = n / rho(g_n o f),
 * and terms with rho(g_n o f) = 0 are skipped. Explicit alphas are taken as
 * alpha_1, alpha_2, ... and limit the terms to their count.
 *
 * Throws std::invalid_argument if some f value lies outside [0, window], the
 * window is not positive, no term is covered, or an alpha is not positive.
 */
EnvelopeReport envelope_demo(const std::optional<std::vector<Rational>>& alphas, const std::vector<Rational>& f_values,
                             const Rational& window);

}  // namespace ordcone

#endif  // ORDCONE_PIECEWISE_HPP
