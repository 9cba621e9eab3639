#pragma once

// The Orlicz pair A, B splitting the logarithmic integrand:
//
//   A(s) = -s^2 Log(s^2)              for 0 <= s <= e^-3,
//        = 3 s^2 + 4 e^-3 s - e^-6    for s >= e^-3,
//   B(s) = s^2 Log(s^2) + A(s),
//
// so that |z|^2 Log|z|^2 = B(|z|) - A(|z|) with A convex, increasing,
// A(0) = B(0) = 0.  A is a Delta_2-regular Young function; the Luxemburg
// norm of a half-line profile is computed by bisection on
// k |-> int A(|u|/k) dx, which is strictly decreasing for u != 0.

#include <cmath>
#include <stdexcept>

#include "lognls/grid.hpp"

namespace lognls {

inline constexpr double kOrliczKnot = 0.049787068367863944;  // e^-3
inline constexpr double kOrliczKnotCoef = 0.19914827347145578;   // 4 e^-3
inline constexpr double kOrliczKnotOffset = 0.0024787521766663585;  // e^-6

inline double orlicz_a(double s) {
  if (s < 0.0) throw std::domain_error("orlicz_a: argument must be nonnegative");
  if (s == 0.0) return 0.0;
  if (s <= kOrliczKnot) return -s * s * std::log(s * s);
  return 3.0 * s * s + kOrliczKnotCoef * s - kOrliczKnotOffset;
}

inline double orlicz_b(double s) {
  if (s < 0.0) throw std::domain_error("orlicz_b: argument must be nonnegative");
  if (s <= kOrliczKnot) return 0.0;  // F + A cancel exactly below the knot
  return s * s * std::log(s * s) + orlicz_a(s);
}

// |z|^2 Log|z|^2 through the split, with the continuous extension 0 at z = 0.
inline double log_weight(double s) { return orlicz_b(s) - orlicz_a(s); }

inline double edge_orlicz_integral(const EdgeProfile& p, double inv_k) {
  const double h = p.spacing;
  const int m = p.cells();
  double acc = (h / 2.0) * (orlicz_a(std::abs(p.values[0]) * inv_k) +
                            orlicz_a(std::abs(p.values[m]) * inv_k));
  for (int k = 1; k < m; ++k) acc += h * orlicz_a(std::abs(p.values[k]) * inv_k);
  return acc;
}

// Luxemburg norm inf{ k > 0 : int A(|u|/k) dx <= 1 } of one edge profile.
// Returns 0 for the zero profile.  Relative tolerance 1e-10.
inline double luxemburg_norm(const EdgeProfile& p) {
  double peak = 0.0;
  for (const auto& z : p.values) peak = std::max(peak, std::abs(z));
  if (peak == 0.0) return 0.0;

  double hi = peak;
  while (edge_orlicz_integral(p, 1.0 / hi) > 1.0) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw std::runtime_error("luxemburg_norm: bracket overflow");
  }
  double lo = hi;
  while (edge_orlicz_integral(p, 1.0 / lo) < 1.0) {
    lo *= 0.5;
    if (lo < 1e-300) throw std::runtime_error("luxemburg_norm: bracket underflow");
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-10 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (edge_orlicz_integral(p, 1.0 / mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace lognls
