#include "branch_audit/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "rounding.hpp"

namespace branch_audit {

namespace rnd = detail;

RealInterval::RealInterval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw Error("InvalidInterval", "interval endpoints out of order: [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
  }
}

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
  return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
}

double RealInterval::width() const { return rnd::add(hi_, -lo_).hi; }

double RealInterval::mid() const {
  if (lo_ == hi_) return lo_;
  return 0.5 * lo_ + 0.5 * hi_;
}

double RealInterval::rad() const {
  const double m = mid();
  return std::max(rnd::add(m, -lo_).hi, rnd::add(hi_, -m).hi);
}

double RealInterval::mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }

double RealInterval::mig() const {
  if (contains_zero()) return 0.0;
  return std::min(std::fabs(lo_), std::fabs(hi_));
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  return {rnd::add(a.lo(), b.lo()).lo, rnd::add(a.hi(), b.hi()).hi};
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  return {rnd::add(a.lo(), -b.hi()).lo, rnd::add(a.hi(), -b.lo()).hi};
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  const rnd::Bracket p[4] = {rnd::mul(a.lo(), b.lo()), rnd::mul(a.lo(), b.hi()), rnd::mul(a.hi(), b.lo()),
                             rnd::mul(a.hi(), b.hi())};
  double lo = p[0].lo;
  double hi = p[0].hi;
  for (const auto& x : p) {
    lo = std::min(lo, x.lo);
    hi = std::max(hi, x.hi);
  }
  return {lo, hi};
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (b.contains_zero()) throw DivisionByZeroInterval(to_string(a) + " / " + to_string(b));
  const rnd::Bracket q[4] = {rnd::div(a.lo(), b.lo()), rnd::div(a.lo(), b.hi()), rnd::div(a.hi(), b.lo()),
                             rnd::div(a.hi(), b.hi())};
  double lo = q[0].lo;
  double hi = q[0].hi;
  for (const auto& x : q) {
    lo = std::min(lo, x.lo);
    hi = std::max(hi, x.hi);
  }
  return {lo, hi};
}

RealInterval sqr(const RealInterval& a) {
  if (a.lo() >= 0.0) return {rnd::mul(a.lo(), a.lo()).lo, rnd::mul(a.hi(), a.hi()).hi};
  if (a.hi() <= 0.0) return {rnd::mul(a.hi(), a.hi()).lo, rnd::mul(a.lo(), a.lo()).hi};
  return {0.0, std::max(rnd::mul(a.lo(), a.lo()).hi, rnd::mul(a.hi(), a.hi()).hi)};
}

RealInterval intersect(const RealInterval& a, const RealInterval& b) {
  return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

double gap(const RealInterval& a, const RealInterval& b) {
  if (a.intersects(b)) return 0.0;
  if (a.hi() < b.lo()) return rnd::add(b.lo(), -a.hi()).lo;
  return rnd::add(a.lo(), -b.hi()).lo;
}

RealInterval iv_arith(ArithOp op, const RealInterval& a, const RealInterval& b) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  return {};
}

ComplexBox ComplexBox::hull(const ComplexBox& a, const ComplexBox& b) {
  return {RealInterval::hull(a.re_, b.re_), RealInterval::hull(a.im_, b.im_)};
}

double ComplexBox::width() const { return std::max(re_.width(), im_.width()); }

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re() + b.re(), a.im() + b.im()}; }
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re() - b.re(), a.im() - b.im()}; }
ComplexBox operator-(const ComplexBox& a) { return {-a.re(), -a.im()}; }

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

ComplexBox operator*(const RealInterval& a, const ComplexBox& b) { return {a * b.re(), a * b.im()}; }

ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
  const RealInterval den = sqr(b.re()) + sqr(b.im());
  if (den.lo() <= 0.0) throw DivisionByZeroBox(to_string(b));
  const ComplexBox num = a * conj(b);
  return {num.re() / den, num.im() / den};
}

ComplexBox conj(const ComplexBox& a) { return {a.re(), -a.im()}; }
ComplexBox times_i(const ComplexBox& a) { return {-a.im(), a.re()}; }

ComplexBox box_arith(BoxOp op, const ComplexBox& z1, const ComplexBox& z2) {
  switch (op) {
    case BoxOp::kAdd: return z1 + z2;
    case BoxOp::kSub: return z1 - z2;
    case BoxOp::kMul: return z1 * z2;
    case BoxOp::kDiv: return z1 / z2;
    case BoxOp::kNeg: return -z1;
    case BoxOp::kConj: return conj(z1);
  }
  return {};
}

RealInterval box_abs(const ComplexBox& z) { return sqrt(sqr(z.re()) + sqr(z.im())); }

double box_gap(const ComplexBox& a, const ComplexBox& b) {
  const RealInterval dx(gap(a.re(), b.re()));
  const RealInterval dy(gap(a.im(), b.im()));
  return sqrt(sqr(dx) + sqr(dy)).lo();
}

std::pair<ComplexBox, ComplexBox> bisect(const ComplexBox& z) {
  const double wr = z.re().width();
  const double wi = z.im().width();
  if (wr == 0.0 && wi == 0.0) throw DegenerateBox();
  if (wr >= wi) {
    const double m = z.re().mid();
    return {{{z.re().lo(), m}, z.im()}, {{m, z.re().hi()}, z.im()}};
  }
  const double m = z.im().mid();
  return {{z.re(), {z.im().lo(), m}}, {z.re(), {m, z.im().hi()}}};
}

std::string to_string(const RealInterval& a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", a.lo(), a.hi());
  return buf;
}

std::string to_string(const ComplexBox& z) { return to_string(z.re()) + " + i" + to_string(z.im()); }

std::ostream& operator<<(std::ostream& os, const RealInterval& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const ComplexBox& z) { return os << to_string(z); }

}  // namespace branch_audit
