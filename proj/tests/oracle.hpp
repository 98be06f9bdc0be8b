#pragma once

// High-precision reference values. Boost's cpp_bin_float is independent of
// the MPFR/GMP code paths under test; doubles convert into it exactly.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <gmpxx.h>

#include "branch_audit/interval.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_50;

struct C {
  Big re;
  Big im;
};

inline C operator+(const C& a, const C& b) { return {a.re + b.re, a.im + b.im}; }
inline C operator-(const C& a, const C& b) { return {a.re - b.re, a.im - b.im}; }
inline C operator-(const C& a) { return {-a.re, -a.im}; }
inline C operator*(const C& a, const C& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline C operator/(const C& a, const C& b) {
  const Big d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline const C kI{Big(0), Big(1)};
inline C real(const Big& x) { return {x, Big(0)}; }

inline Big pi() { return boost::math::constants::pi<Big>(); }
inline Big ln2() { return boost::math::constants::ln_two<Big>(); }

inline Big from_q(const mpq_class& q) { return Big(q.get_num().get_str()) / Big(q.get_den().get_str()); }

inline Big abs(const C& z) { return sqrt(z.re * z.re + z.im * z.im); }
inline C cis(const Big& theta) { return {cos(theta), sin(theta)}; }
inline C cexp(const C& z) { return {exp(z.re) * cos(z.im), exp(z.re) * sin(z.im)}; }
inline C csin(const C& z) { return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)}; }
inline C ccos(const C& z) { return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)}; }

/// Argument in (0, 2 pi).
inline Big arg_slit(const C& z) {
  Big a = atan2(z.im, z.re);
  if (a <= 0) a += 2 * pi();
  return a;
}
inline C ln_slit(const C& z) { return {log(abs(z)), arg_slit(z)}; }
inline C lnn(const C& z) { return {log(abs(z)), asin(z.im / abs(z))}; }
inline C lnnn(const C& z) { return {log(abs(z)), acos(z.im / abs(z))}; }

inline C f1_inner(const C& z) { return -z / (kI * z + real(Big(1))); }
inline C f2_inner(const C& z) { return kI * z / (kI * z + real(Big(1))); }
inline C f3_inner(const C& z) { return real(Big(1)) - csin(-(kI * ln_slit(z))); }

/// F1 + F2 + F3 + Lnnn + ln 2 + i pi - i pi/2, computed from the
/// definitions.
inline C f(const C& z) {
  return lnn(f1_inner(z)) + lnn(f2_inner(z)) + lnn(f3_inner(z)) + lnnn(z) + C{ln2(), pi() / 2};
}

inline bool in(const branch_audit::RealInterval& a, const Big& v) { return Big(a.lo()) <= v && v <= Big(a.hi()); }
inline bool in(const branch_audit::ComplexBox& z, const C& v) { return in(z.re(), v.re) && in(z.im(), v.im); }
/// Allows for the oracle's own rounding, ~1e-50, where a box is exact (a
/// real closed form has a point-zero imaginary part).
inline bool near(const branch_audit::ComplexBox& z, const C& v, const Big& slack = Big("1e-40")) {
  auto ok = [&](const branch_audit::RealInterval& a, const Big& x) { return Big(a.lo()) - slack <= x && x <= Big(a.hi()) + slack; };
  return ok(z.re(), v.re) && ok(z.im(), v.im);
}

inline branch_audit::ComplexBox box(double x, double y) { return branch_audit::ComplexBox::point(x, y); }
inline C big(double x, double y) { return {Big(x), Big(y)}; }

}  // namespace oracle
