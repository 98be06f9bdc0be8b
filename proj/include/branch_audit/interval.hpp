#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "branch_audit/errors.hpp"

namespace branch_audit {

using Rational = mpq_class;

/// Closed real interval [lo, hi] with double endpoints. Every operation
/// returns an interval containing the exact image of its inputs.
class RealInterval {
 public:
  constexpr RealInterval() = default;
  constexpr RealInterval(double point) : lo_(point), hi_(point) {}  // NOLINT(google-explicit-constructor)
  RealInterval(double lo, double hi);

  /// Tightest double interval containing an exact rational.
  static RealInterval from_rational(const Rational& q);
  static RealInterval hull(const RealInterval& a, const RealInterval& b);

  constexpr double lo() const { return lo_; }
  constexpr double hi() const { return hi_; }

  /// Upper bound on hi - lo.
  double width() const;
  double mid() const;
  /// Upper bound on the distance from mid() to either endpoint.
  double rad() const;
  /// Upper bound on max |x| over the interval.
  double mag() const;
  /// Lower bound on min |x| over the interval.
  double mig() const;

  bool is_point() const { return lo_ == hi_; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RealInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool intersects(const RealInterval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  RealInterval operator-() const { return {-hi_, -lo_}; }

  friend bool operator==(const RealInterval&, const RealInterval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

RealInterval operator+(const RealInterval& a, const RealInterval& b);
RealInterval operator-(const RealInterval& a, const RealInterval& b);
RealInterval operator*(const RealInterval& a, const RealInterval& b);
/// Throws DivisionByZeroInterval when 0 is in b.
RealInterval operator/(const RealInterval& a, const RealInterval& b);

RealInterval sqr(const RealInterval& a);
/// Intersection; precondition: the two intersect.
RealInterval intersect(const RealInterval& a, const RealInterval& b);
/// Lower bound on the gap between two intervals (0 when they intersect).
double gap(const RealInterval& a, const RealInterval& b);

enum class ArithOp { kAdd, kSub, kMul, kDiv };
RealInterval iv_arith(ArithOp op, const RealInterval& a, const RealInterval& b);

// Rigorous elementary functions. Endpoints are correctly rounded outward;
// DomainError names the function and the violated bound.
RealInterval exp(const RealInterval& a);
RealInterval log(const RealInterval& a);
RealInterval sqrt(const RealInterval& a);
RealInterval sin(const RealInterval& a);
RealInterval cos(const RealInterval& a);
RealInterval asin(const RealInterval& a);
RealInterval acos(const RealInterval& a);

enum class ElemFn { kExp, kLn, kSqrt, kSin, kCos, kArcsin, kArccos };
RealInterval iv_elem(ElemFn fn, const RealInterval& a);
const char* to_string(ElemFn fn);

/// Enclosure of atan2(y, x) for point arguments with principal value in
/// (-pi, pi]; atan2(+0, x<0) is pi.
RealInterval atan2_point(double y, double x);

/// Rectangle re x im of real intervals.
class ComplexBox {
 public:
  constexpr ComplexBox() = default;
  constexpr ComplexBox(RealInterval re, RealInterval im) : re_(re), im_(im) {}

  static constexpr ComplexBox point(double x, double y) { return {RealInterval(x), RealInterval(y)}; }
  static ComplexBox hull(const ComplexBox& a, const ComplexBox& b);

  constexpr const RealInterval& re() const { return re_; }
  constexpr const RealInterval& im() const { return im_; }

  double width() const;
  bool contains(double x, double y) const { return re_.contains(x) && im_.contains(y); }
  bool contains(const ComplexBox& other) const { return re_.contains(other.re_) && im_.contains(other.im_); }
  bool intersects(const ComplexBox& other) const {
    return re_.intersects(other.re_) && im_.intersects(other.im_);
  }
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

  friend bool operator==(const ComplexBox&, const ComplexBox&) = default;

 private:
  RealInterval re_;
  RealInterval im_;
};

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a);
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator*(const RealInterval& a, const ComplexBox& b);
/// Throws DivisionByZeroBox unless box_abs(b).lo > 0.
ComplexBox operator/(const ComplexBox& a, const ComplexBox& b);
ComplexBox conj(const ComplexBox& a);
/// Multiplication by i.
ComplexBox times_i(const ComplexBox& a);

enum class BoxOp { kAdd, kSub, kMul, kDiv, kNeg, kConj };
/// kNeg and kConj ignore z2.
ComplexBox box_arith(BoxOp op, const ComplexBox& z1, const ComplexBox& z2 = {});

/// Enclosure of |z| over the box.
RealInterval box_abs(const ComplexBox& z);
/// Lower bound on the Euclidean distance between two boxes.
double box_gap(const ComplexBox& a, const ComplexBox& b);

/// Split along the wider axis (re on ties) at the midpoint.
/// Throws DegenerateBox for zero width.
std::pair<ComplexBox, ComplexBox> bisect(const ComplexBox& z);

namespace constants {

/// 64 hexadecimal digits of the fractional parts, truncated.
inline constexpr const char* kPiHexFraction =
    "243F6A8885A308D313198A2E03707344A4093822299F31D0082EFA98EC4E6C89";
inline constexpr const char* kLn2HexFraction =
    "B17217F7D1CF79ABC9E3B39803F2F6AF40F343267298B62D8A0D175B8BAAFA2B";

const RealInterval& pi();
const RealInterval& ln2();

}  // namespace constants

std::string to_string(const RealInterval& a);
std::string to_string(const ComplexBox& z);
std::ostream& operator<<(std::ostream& os, const RealInterval& a);
std::ostream& operator<<(std::ostream& os, const ComplexBox& z);

}  // namespace branch_audit
