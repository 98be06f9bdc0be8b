// Elementary functions on intervals. Endpoint images come from MPFR with
// directed rounding at double precision, which is correctly rounded, so
// the outward step needs no further inflation.

#include <mpfr.h>

#include <cmath>

#include "branch_audit/interval.hpp"
#include "rounding.hpp"

namespace branch_audit {

namespace {

struct MpfrScratch {
  mpfr_t in;
  mpfr_t aux;
  mpfr_t out;
  MpfrScratch() { mpfr_inits2(53, in, aux, out, static_cast<mpfr_ptr>(nullptr)); }
  ~MpfrScratch() { mpfr_clears(in, aux, out, static_cast<mpfr_ptr>(nullptr)); }
  MpfrScratch(const MpfrScratch&) = delete;
  MpfrScratch& operator=(const MpfrScratch&) = delete;
};

MpfrScratch& scratch() {
  thread_local MpfrScratch s;
  return s;
}

using UnaryMpfr = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

double rounded(UnaryMpfr fn, double x, mpfr_rnd_t rnd) {
  auto& s = scratch();
  mpfr_set_d(s.in, x, MPFR_RNDN);
  fn(s.out, s.in, rnd);
  return mpfr_get_d(s.out, rnd);
}

double down(UnaryMpfr fn, double x) { return rounded(fn, x, MPFR_RNDD); }
double up(UnaryMpfr fn, double x) { return rounded(fn, x, MPFR_RNDU); }

RealInterval clamp_unit(double lo, double hi) { return {std::max(lo, -1.0), std::min(hi, 1.0)}; }

// Periodic extrema of sin/cos: the critical points are offset + k*pi with
// value (-1)^k.
RealInterval trig(UnaryMpfr fn, const RealInterval& a, const RealInterval& offset) {
  if (!(a.width() < 6.2831)) return {-1.0, 1.0};
  double lo = std::min(down(fn, a.lo()), down(fn, a.hi()));
  double hi = std::max(up(fn, a.lo()), up(fn, a.hi()));
  const RealInterval& pi = constants::pi();
  const RealInterval u = (a - offset) / pi;
  const double kmin = std::floor(u.lo());
  const double kmax = std::ceil(u.hi());
  for (double k = kmin; k <= kmax; k += 1.0) {
    const RealInterval critical = RealInterval(k) * pi + offset;
    if (!critical.intersects(a)) continue;
    if (std::fmod(std::fabs(k), 2.0) == 0.0) {
      hi = 1.0;
    } else {
      lo = -1.0;
    }
  }
  return clamp_unit(lo, hi);
}

}  // namespace

RealInterval RealInterval::from_rational(const Rational& q) {
  auto& s = scratch();
  mpfr_set_q(s.out, q.get_mpq_t(), MPFR_RNDD);
  const double lo = mpfr_get_d(s.out, MPFR_RNDD);
  mpfr_set_q(s.out, q.get_mpq_t(), MPFR_RNDU);
  const double hi = mpfr_get_d(s.out, MPFR_RNDU);
  return {lo, hi};
}

RealInterval exp(const RealInterval& a) { return {down(mpfr_exp, a.lo()), up(mpfr_exp, a.hi())}; }

RealInterval log(const RealInterval& a) {
  if (!(a.lo() > 0.0)) throw DomainError("ln", "lo > 0 (got " + to_string(a) + ")");
  return {down(mpfr_log, a.lo()), up(mpfr_log, a.hi())};
}

RealInterval sqrt(const RealInterval& a) {
  if (a.lo() < 0.0) throw DomainError("sqrt", "lo >= 0 (got " + to_string(a) + ")");
  return {detail::sqrt(a.lo()).lo, detail::sqrt(a.hi()).hi};
}

RealInterval sin(const RealInterval& a) {
  if (a.is_point()) return clamp_unit(down(mpfr_sin, a.lo()), up(mpfr_sin, a.lo()));
  return trig(mpfr_sin, a, constants::pi() / RealInterval(2.0));
}

RealInterval cos(const RealInterval& a) {
  if (a.is_point()) return clamp_unit(down(mpfr_cos, a.lo()), up(mpfr_cos, a.lo()));
  return trig(mpfr_cos, a, RealInterval(0.0));
}

RealInterval asin(const RealInterval& a) {
  if (a.lo() < -1.0 || a.hi() > 1.0) throw DomainError("arcsin", "a within [-1, 1] (got " + to_string(a) + ")");
  return {down(mpfr_asin, a.lo()), up(mpfr_asin, a.hi())};
}

RealInterval acos(const RealInterval& a) {
  if (a.lo() < -1.0 || a.hi() > 1.0) throw DomainError("arccos", "a within [-1, 1] (got " + to_string(a) + ")");
  return {down(mpfr_acos, a.hi()), up(mpfr_acos, a.lo())};
}

RealInterval iv_elem(ElemFn fn, const RealInterval& a) {
  switch (fn) {
    case ElemFn::kExp: return exp(a);
    case ElemFn::kLn: return log(a);
    case ElemFn::kSqrt: return sqrt(a);
    case ElemFn::kSin: return sin(a);
    case ElemFn::kCos: return cos(a);
    case ElemFn::kArcsin: return asin(a);
    case ElemFn::kArccos: return acos(a);
  }
  return {};
}

const char* to_string(ElemFn fn) {
  switch (fn) {
    case ElemFn::kExp: return "exp";
    case ElemFn::kLn: return "ln";
    case ElemFn::kSqrt: return "sqrt";
    case ElemFn::kSin: return "sin";
    case ElemFn::kCos: return "cos";
    case ElemFn::kArcsin: return "arcsin";
    case ElemFn::kArccos: return "arccos";
  }
  return "?";
}

RealInterval atan2_point(double y, double x) {
  if (x == 0.0 && y == 0.0) throw ZeroModulus("atan2(0, 0)");
  y += 0.0;  // -0 -> +0, so the negative real axis maps to +pi
  auto& s = scratch();
  mpfr_set_d(s.in, y, MPFR_RNDN);
  mpfr_set_d(s.aux, x, MPFR_RNDN);
  mpfr_atan2(s.out, s.in, s.aux, MPFR_RNDD);
  const double lo = mpfr_get_d(s.out, MPFR_RNDD);
  mpfr_atan2(s.out, s.in, s.aux, MPFR_RNDU);
  const double hi = mpfr_get_d(s.out, MPFR_RNDU);
  return {lo, hi};
}

}  // namespace branch_audit
