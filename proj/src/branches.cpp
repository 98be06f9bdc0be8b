#include "branch_audit/branches.hpp"

#include <algorithm>
#include <limits>

namespace branch_audit {

namespace {

const RealInterval kUnit(-1.0, 1.0);

RealInterval half_pi() { return constants::pi() * RealInterval(0.5); }

}  // namespace

ComplexBox cexp(const ComplexBox& z) {
  const RealInterval modulus = exp(z.re());
  return {modulus * cos(z.im()), modulus * sin(z.im())};
}

ComplexBox csin(const ComplexBox& z) {
  const ComplexBox iz = times_i(z);
  const ComplexBox d = cexp(iz) - cexp(-iz);
  // d / (2i) = -i d / 2
  return {d.im() * RealInterval(0.5), -d.re() * RealInterval(0.5)};
}

ComplexBox ccos(const ComplexBox& z) {
  const ComplexBox iz = times_i(z);
  return RealInterval(0.5) * (cexp(iz) + cexp(-iz));
}

RealInterval arg_principal(const ComplexBox& z) {
  if (z.contains_zero()) throw ZeroModulus(to_string(z));
  if (z.re().lo() <= 0.0 && z.im().lo() < 0.0 && z.im().hi() >= 0.0) throw BranchCutStraddle(to_string(z));
  // Arg is continuous on the box, which is convex and avoids 0; its
  // extremes sit at corners.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const double x : {z.re().lo(), z.re().hi()}) {
    for (const double y : {z.im().lo(), z.im().hi()}) {
      const RealInterval a = atan2_point(y, x);
      lo = std::min(lo, a.lo());
      hi = std::max(hi, a.hi());
    }
  }
  return {lo, hi};
}

const char* to_string(BranchTag tag) {
  switch (tag) {
    case BranchTag::kLnn: return "Lnn";
    case BranchTag::kLnnn: return "Lnnn";
    case BranchTag::kLnSlit: return "LnSlit";
  }
  return "?";
}

ComplexBox branch_log(BranchTag tag, const ComplexBox& z) {
  switch (tag) {
    case BranchTag::kLnn: {
      if (!(z.re().lo() > 0.0)) throw DomainViolation("Lnn", "Re z > 0", to_string(z));
      const RealInterval r = box_abs(z);
      return {log(r), asin(intersect(z.im() / r, kUnit))};
    }
    case BranchTag::kLnnn: {
      if (!(z.re().hi() < 0.0)) throw DomainViolation("Lnnn", "Re z < 0", to_string(z));
      const RealInterval r = box_abs(z);
      return {log(r), acos(intersect(z.im() / r, kUnit))};
    }
    case BranchTag::kLnSlit: {
      if (z.re().hi() >= 0.0 && z.im().contains_zero()) {
        throw DomainViolation("LnSlit", "z off the nonnegative real axis", to_string(z));
      }
      // theta = pi + Arg(-z), which lies in (0, 2 pi) and is continuous here.
      const RealInterval r = box_abs(z);
      return {log(r), constants::pi() + arg_principal(-z)};
    }
  }
  return {};
}

ComplexBox lnnn_paper_closed_form(const RealInterval& r, const RealInterval& theta) {
  if (!(r.lo() > 0.0)) throw DomainError("ln", "r > 0 (got " + to_string(r) + ")");
  return {log(r), half_pi() - theta};
}

int log_product_correction(const RealInterval& theta1, const RealInterval& theta2) {
  const RealInterval& pi = constants::pi();
  const RealInterval sum = theta1 + theta2;
  if (sum.lo() > pi.hi()) return 1;
  if (sum.hi() < -pi.hi()) return -1;
  if (sum.lo() > -pi.lo() && sum.hi() < pi.lo()) return 0;
  throw AmbiguousCorrection(to_string(sum));
}

PolarForm polar(const ComplexBox& z) {
  PolarForm out{box_abs(z), arg_principal(z), std::nullopt};
  if (z.im().is_point() && z.im().lo() == 0.0 && z.re().is_point()) {
    out.theta_over_pi = z.re().lo() > 0.0 ? Rational(0) : Rational(1);
  }
  return out;
}

PolarForm polar(const CycNum& z, double target_width) {
  if (z.is_zero()) throw ZeroModulus(to_string(z));
  if (const auto root = as_root_of_unity(z)) {
    Rational t(mpz_class(2 * root->exponent), mpz_class(root->order));
    t.canonicalize();
    if (t > 1) t -= 2;
    PolarForm out{RealInterval(1.0), constants::pi() * RealInterval::from_rational(t), t};
    if (t == 0) out.theta = RealInterval(0.0);
    return out;
  }
  if (const auto q = z.as_rational()) {
    if (*q > 0) return {RealInterval::from_rational(*q), RealInterval(0.0), Rational(0)};
    return {RealInterval::from_rational(-*q), constants::pi(), Rational(1)};
  }
  return polar(cyc_embed(z, target_width));
}

}  // namespace branch_audit
