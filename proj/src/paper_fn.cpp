#include "branch_audit/paper_fn.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace branch_audit {

namespace {

const RealInterval& pi() { return constants::pi(); }
RealInterval half_pi() { return pi() * RealInterval(0.5); }
RealInterval quarter_pi() { return pi() * RealInterval(0.25); }

const ComplexBox kOne = ComplexBox::point(1.0, 0.0);

// Rethrows a failure inside a term with the term's name prefixed.
template <class Fn>
ComplexBox guarded(const char* term, Fn&& fn) {
  try {
    return fn();
  } catch (const DomainViolation& e) {
    throw DomainViolation(std::string(term) + "/" + e.where(), e.certificate(), e.enclosure());
  } catch (const DivisionByZeroBox& e) {
    throw DomainViolation(term, "i z + 1 != 0", e.what());
  } catch (const ZeroModulus& e) {
    throw DomainViolation(term, "argument != 0", e.what());
  }
}

ComplexBox lnn(const ComplexBox& w) { return branch_log(BranchTag::kLnn, w); }

ComplexBox iz_plus_one(const ComplexBox& z) { return times_i(z) + kOne; }

ComplexBox const_term() { return {constants::ln2(), pi() - half_pi()}; }

}  // namespace

const Rational& DomainD::x_lo() {
  static const Rational v(-2);
  return v;
}
const Rational& DomainD::x_hi() {
  static const Rational v(-4, 5);
  return v;
}
const Rational& DomainD::y_lo() {
  static const Rational v(-1, 5);
  return v;
}
const Rational& DomainD::y_hi() {
  static const Rational v(1, 5);
  return v;
}

ComplexBox DomainD::closure_box() {
  return {RealInterval::hull(RealInterval::from_rational(x_lo()), RealInterval::from_rational(x_hi())),
          RealInterval::hull(RealInterval::from_rational(y_lo()), RealInterval::from_rational(y_hi()))};
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::kInside: return "INSIDE";
    case Membership::kOutside: return "OUTSIDE";
    case Membership::kBoundary: return "BOUNDARY";
  }
  return "?";
}

Membership membership(const ComplexBox& z) {
  const Rational xl(z.re().lo()), xh(z.re().hi()), yl(z.im().lo()), yh(z.im().hi());
  if (xl > DomainD::x_lo() && xh < DomainD::x_hi() && yl > DomainD::y_lo() && yh < DomainD::y_hi()) {
    return Membership::kInside;
  }
  if (xh <= DomainD::x_lo() || xl >= DomainD::x_hi() || yh <= DomainD::y_lo() || yl >= DomainD::y_hi()) {
    return Membership::kOutside;
  }
  return Membership::kBoundary;
}

const char* to_string(TermTag tag) {
  switch (tag) {
    case TermTag::kF1: return "F1";
    case TermTag::kF2: return "F2";
    case TermTag::kF3: return "F3";
    case TermTag::kLnnnTerm: return "LNNN_TERM";
    case TermTag::kConst: return "CONST";
  }
  return "?";
}

ComplexBox inner_value(InnerTag tag, const ComplexBox& z) {
  switch (tag) {
    case InnerTag::kF1: return guarded("F1", [&] { return -z / iz_plus_one(z); });
    case InnerTag::kF2: return guarded("F2", [&] { return times_i(z) / iz_plus_one(z); });
    case InnerTag::kF3:
      return guarded("F3", [&] {
        const ComplexBox log_z = branch_log(BranchTag::kLnSlit, z);
        // -i * Ln(z)
        const ComplexBox w{log_z.im(), -log_z.re()};
        return kOne - csin(w);
      });
  }
  return {};
}

ComplexBox eval_term(TermTag tag, const ComplexBox& z) {
  switch (tag) {
    case TermTag::kF1: return guarded("F1", [&] { return lnn(inner_value(InnerTag::kF1, z)); });
    case TermTag::kF2: return guarded("F2", [&] { return lnn(inner_value(InnerTag::kF2, z)); });
    case TermTag::kF3: return guarded("F3", [&] { return lnn(inner_value(InnerTag::kF3, z)); });
    case TermTag::kLnnnTerm: return guarded("LNNN_TERM", [&] { return branch_log(BranchTag::kLnnn, z); });
    case TermTag::kConst: return const_term();
  }
  return {};
}

ComplexBox eval_f(const ComplexBox& z, FReading reading) {
  ComplexBox sum = eval_term(TermTag::kLnnnTerm, z) + eval_term(TermTag::kConst, z);
  for (const TermTag tag : {TermTag::kF1, TermTag::kF2, TermTag::kF3}) {
    const ComplexBox term = eval_term(tag, z);
    if (reading == FReading::kCaseEvaluation) {
      sum = sum + term;
    } else {
      sum = sum + guarded((std::string("Lnn(") + to_string(tag) + ")").c_str(), [&] { return lnn(term); });
    }
  }
  return sum;
}

const char* to_string(ClosedForm which) {
  switch (which) {
    case ClosedForm::kF1Inner: return "F1_INNER";
    case ClosedForm::kF2Inner: return "F2_INNER";
    case ClosedForm::kF3Inner: return "F3_INNER";
    case ClosedForm::kCaseITotal: return "CASE_I_TOTAL";
    case ClosedForm::kCaseIITotal: return "CASE_II_TOTAL";
  }
  return "?";
}

ComplexBox paper_closed_forms(ClosedForm which, const RealInterval& theta) {
  const char* name = to_string(which);
  const RealInterval half_theta = theta * RealInterval(0.5);
  const RealInterval c = cos(half_theta + quarter_pi());
  const ComplexBox i_theta{RealInterval(0.0), theta};
  const ComplexBox two = ComplexBox::point(2.0, 0.0);
  switch (which) {
    case ClosedForm::kF1Inner:
    case ClosedForm::kF2Inner:
    case ClosedForm::kF3Inner: {
      if (c.contains_zero()) throw DomainViolation(name, "cos(theta/2 + pi/4) != 0", to_string(c));
      const RealInterval two_c = RealInterval(2.0) * c;
      const ComplexBox half_turn = cexp({RealInterval(0.0), half_theta});
      if (which == ClosedForm::kF1Inner) {
        const ComplexBox num = -(cexp({RealInterval(0.0), -quarter_pi()}) * half_turn);
        return {num.re() / two_c, num.im() / two_c};
      }
      if (which == ClosedForm::kF2Inner) {
        const ComplexBox num = cexp({RealInterval(0.0), quarter_pi()}) * half_turn;
        return {num.re() / two_c, num.im() / two_c};
      }
      return {RealInterval(2.0) * sqr(c), RealInterval(0.0)};
    }
    case ClosedForm::kCaseITotal: {
      if (!(theta.lo() > half_pi().hi() && theta.hi() < pi().lo())) {
        throw DomainViolation(name, "pi/2 < theta < pi", to_string(theta));
      }
      // i theta - 2 Lnn(2) - 2 Lnn(-c) + 2 Lnn(-c) - i theta + 2 Lnn(2)
      const ComplexBox l2 = lnn(two);
      const ComplexBox lc = guarded(name, [&] { return lnn({-c, RealInterval(0.0)}); });
      const RealInterval k2(2.0);
      return i_theta - k2 * l2 - k2 * lc + k2 * lc - i_theta + k2 * l2;
    }
    case ClosedForm::kCaseIITotal: {
      if (!(theta.lo() > -pi().lo() && theta.hi() < -half_pi().hi())) {
        throw DomainViolation(name, "-pi < theta < -pi/2", to_string(theta));
      }
      // i theta - 2 Lnn(2) - 2 Lnn(c) + 2 Lnn(c) - i theta + 2 Lnn(2) + 2 i pi
      const ComplexBox l2 = lnn(two);
      const ComplexBox lc = guarded(name, [&] { return lnn({c, RealInterval(0.0)}); });
      const RealInterval k2(2.0);
      const ComplexBox two_pi_i{RealInterval(0.0), k2 * pi()};
      return i_theta - k2 * l2 - k2 * lc + k2 * lc - i_theta + k2 * l2 + two_pi_i;
    }
  }
  return {};
}

const char* to_string(Containment which) {
  switch (which) {
    case Containment::kF1Bound: return "F1_BOUND";
    case Containment::kF2Bound: return "F2_BOUND";
    case Containment::kF3Bound: return "F3_BOUND";
    case Containment::kSphere: return "SPHERE";
  }
  return "?";
}

const Rational& epsilon() {
  static const Rational v(4, 5);
  return v;
}

Rational containment_constant(Containment which, const Rational& delta) {
  const Rational& e = epsilon();
  const Rational denom = 8 - 4 * e + e * e;
  Rational out;
  switch (which) {
    case Containment::kF1Bound: out = e / denom; break;
    case Containment::kF2Bound: out = (e * e + e - 1) / denom; break;
    case Containment::kF3Bound: out = -6 + 8 * e - e * e + e * e * e; break;
    case Containment::kSphere: out = Rational(1, 5) - delta; break;
  }
  out.canonicalize();
  return out;
}

const char* to_string(CertificateStatus s) {
  return s == CertificateStatus::kCertified ? "CERTIFIED" : "INCONCLUSIVE";
}

namespace {

struct LeafOutcome {
  bool proven;
  double margin;
};

// Lower bound of lhs - rhs.
double lower_difference(const RealInterval& lhs, const RealInterval& rhs) { return (lhs - rhs).lo(); }

LeafOutcome classify_bound(Containment which, const ComplexBox& box, const RealInterval& constant) {
  const RealInterval& x = box.re();
  const RealInterval& y = box.im();
  const RealInterval one(1.0), two(2.0);
  RealInterval lhs;
  switch (which) {
    case Containment::kF1Bound: lhs = -x / (sqr(x) + sqr(y) - two * y + one); break;
    case Containment::kF2Bound: lhs = (sqr(x) - y + sqr(y)) / (sqr(x) + sqr(y) - two * y + one); break;
    case Containment::kF3Bound: lhs = two * sqr(x) + two * sqr(y) + y * (-sqr(x) - sqr(y) - one); break;
    case Containment::kSphere: break;
  }
  const double margin = lower_difference(lhs, constant);
  return {margin > 0.0, margin};
}

LeafOutcome classify_sphere(const ComplexBox& box, const RealInterval& radius) {
  const RealInterval& x = box.re();
  const RealInterval& y = box.im();
  const RealInterval dist2 = sqr(x + RealInterval(1.0)) + sqr(y);
  if (dist2.lo() > sqr(radius).hi()) return {true, std::numeric_limits<double>::infinity()};
  const double walls[4] = {
      lower_difference(RealInterval(x.lo()), RealInterval::from_rational(DomainD::x_lo())),
      lower_difference(RealInterval::from_rational(DomainD::x_hi()), RealInterval(x.hi())),
      lower_difference(RealInterval(y.lo()), RealInterval::from_rational(DomainD::y_lo())),
      lower_difference(RealInterval::from_rational(DomainD::y_hi()), RealInterval(y.hi())),
  };
  const double margin = *std::min_element(std::begin(walls), std::end(walls));
  return {margin > 0.0, margin};
}

}  // namespace

CertificateReport containment_certificate(Containment which, int max_depth, const Rational& delta) {
  if (max_depth < 0) throw Error("InvalidArgument", "max_depth must be >= 0");
  CertificateReport report;
  report.claim = to_string(which);
  report.epsilon = epsilon();
  report.delta = delta;
  report.constant = containment_constant(which, delta);

  ComplexBox root = DomainD::closure_box();
  const RealInterval constant = RealInterval::from_rational(report.constant);
  if (which == Containment::kSphere) {
    if (report.constant <= 0) throw Error("InvalidArgument", "sphere radius 1/5 - delta must be positive");
    const RealInterval center(-1.0);
    root = {RealInterval::hull(center - constant, center + constant), RealInterval::hull(-constant, constant)};
  }

  struct Item {
    ComplexBox box;
    int depth;
  };
  std::vector<Item> stack{{root, 0}};
  double worst = std::numeric_limits<double>::infinity();
  report.worst_box = root;
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    const LeafOutcome outcome = which == Containment::kSphere ? classify_sphere(item.box, constant)
                                                              : classify_bound(which, item.box, constant);
    if (outcome.proven) {
      ++report.leaves;
      report.depth = std::max(report.depth, item.depth);
      if (outcome.margin < worst) {
        worst = outcome.margin;
        report.worst_box = item.box;
      }
      continue;
    }
    if (item.depth < max_depth && item.box.width() > 0.0) {
      const auto [left, right] = bisect(item.box);
      stack.push_back({right, item.depth + 1});
      stack.push_back({left, item.depth + 1});
      continue;
    }
    report.status = CertificateStatus::kInconclusive;
    report.depth = std::max(report.depth, item.depth);
    report.worst_box = item.box;
    report.margin = outcome.margin;
    return report;
  }
  report.status = CertificateStatus::kCertified;
  report.margin = worst;
  return report;
}

}  // namespace branch_audit
