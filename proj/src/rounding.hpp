#pragma once

// Directed rounding of single IEEE operations. Each helper returns a pair
// {lo, hi} bracketing the exact result, built from the round-to-nearest
// result and the sign of its exact error term.

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

namespace branch_audit::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude the error-free transforms may lose exactness to
// underflow; results there are widened by one ulp on both sides.
inline constexpr double kTinyMagnitude = 0x1p-900;

struct Bracket {
  double lo;
  double hi;
};

inline double next_down(double x) { return std::nextafter(x, -kInf); }
inline double next_up(double x) { return std::nextafter(x, kInf); }

inline Bracket from_error(double value, double err) {
  if (err > 0.0) return {value, next_up(value)};
  if (err < 0.0) return {next_down(value), value};
  return {value, value};
}

inline Bracket widen(double value) { return {next_down(value), next_up(value)}; }

inline Bracket overflowed(double value) {
  return value > 0.0 ? Bracket{DBL_MAX, kInf} : Bracket{-kInf, -DBL_MAX};
}

inline Bracket add(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isinf(a) || std::isinf(b)) return {s, s};
    return overflowed(s);
  }
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return from_error(s, err);
}

inline Bracket mul(double a, double b) {
  if (a == 0.0 || b == 0.0) return {0.0, 0.0};
  const double p = a * b;
  if (!std::isfinite(p)) {
    if (std::isinf(a) || std::isinf(b)) return {p, p};
    return overflowed(p);
  }
  if (std::fabs(p) < kTinyMagnitude) return widen(p);
  return from_error(p, std::fma(a, b, -p));
}

inline Bracket div(double a, double b) {
  if (a == 0.0) return {0.0, 0.0};
  const double q = a / b;
  if (!std::isfinite(q)) {
    if (std::isinf(a)) return {q, q};
    return overflowed(q);
  }
  if (std::isinf(b)) return q >= 0.0 ? Bracket{0.0, next_up(0.0)} : Bracket{next_down(0.0), 0.0};
  if (std::fabs(q) < kTinyMagnitude || std::fabs(a) < kTinyMagnitude) return widen(q);
  // a - q*b is exact; the true quotient is q + r/b.
  const double r = std::fma(-q, b, a);
  return from_error(q, b > 0.0 ? r : -r);
}

inline Bracket sqrt(double x) {
  if (x == 0.0) return {0.0, 0.0};
  const double s = std::sqrt(x);
  if (std::isinf(s)) return {s, s};
  if (x < kTinyMagnitude) return {std::max(0.0, next_down(s)), next_up(s)};
  return from_error(s, std::fma(-s, s, x));
}

}  // namespace branch_audit::detail
