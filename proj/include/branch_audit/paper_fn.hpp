#pragma once

#include <string>

#include "branch_audit/branches.hpp"
#include "branch_audit/interval.hpp"

namespace branch_audit {

/// The open rectangle D = {x + iy : -2 < x < -4/5, -1/5 < y < 1/5}.
struct DomainD {
  static const Rational& x_lo();
  static const Rational& x_hi();
  static const Rational& y_lo();
  static const Rational& y_hi();

  /// Smallest double box containing the closure of D.
  static ComplexBox closure_box();
};

enum class Membership { kInside, kOutside, kBoundary };
const char* to_string(Membership m);
/// kInside: box strictly interior; kOutside: disjoint from D.
Membership membership(const ComplexBox& z);

/// The summands of f.
enum class TermTag { kF1, kF2, kF3, kLnnnTerm, kConst };
const char* to_string(TermTag tag);

/// How f is assembled from the terms. kCaseEvaluation sums the terms as the
/// case computations do (F1 + F2 + F3 + Lnnn + ln 2 + i pi - i pi/2).
/// kLiteral applies Lnn once more to each of F1, F2, F3.
enum class FReading { kCaseEvaluation, kLiteral };

/// Definitional value of one summand. Throws DomainViolation naming the
/// term and the failing certificate.
ComplexBox eval_term(TermTag tag, const ComplexBox& z);
ComplexBox eval_f(const ComplexBox& z, FReading reading = FReading::kCaseEvaluation);

/// The arguments fed to the outer Lnn of F1, F2, F3:
/// -z/(iz+1), iz/(iz+1), 1 - sin(-i LnSlit(z)).
enum class InnerTag { kF1, kF2, kF3 };
ComplexBox inner_value(InnerTag tag, const ComplexBox& z);

/// Closed forms asserted on the unit circle z = e^{i theta}.
enum class ClosedForm { kF1Inner, kF2Inner, kF3Inner, kCaseITotal, kCaseIITotal };
const char* to_string(ClosedForm which);
/// Enclosure of the asserted expression. The case totals require theta in
/// (pi/2, pi) and (-pi, -pi/2) respectively; the inner forms need
/// cos(theta/2 + pi/4) bounded away from 0. Throws DomainViolation.
ComplexBox paper_closed_forms(ClosedForm which, const RealInterval& theta);

/// Inequalities proving that the inner functions map D well inside
/// {Re > 0}, plus the well-containment of the closed sphere Sc(-1, 1/5 - delta).
enum class Containment { kF1Bound, kF2Bound, kF3Bound, kSphere };
const char* to_string(Containment which);

/// epsilon = 4/5.
const Rational& epsilon();
/// Exact right-hand constant of the bound, evaluated at epsilon = 4/5.
/// For kSphere this is the radius 1/5 - delta.
Rational containment_constant(Containment which, const Rational& delta);

enum class CertificateStatus { kCertified, kInconclusive };
const char* to_string(CertificateStatus s);

struct CertificateReport {
  std::string claim;
  Rational epsilon;
  Rational delta;
  CertificateStatus status = CertificateStatus::kInconclusive;
  std::size_t leaves = 0;
  int depth = 0;
  /// The undecided box for kInconclusive; the leaf closest to failing
  /// otherwise.
  ComplexBox worst_box;
  Rational constant;
  /// Certified lower bound on lhs - constant over the region (for kSphere:
  /// on the distance from the sphere to the boundary of D).
  double margin = 0.0;
};

/// Adaptive bisection of the closure of D (of the sphere's bounding box for
/// kSphere). Each leaf must prove the strict inequality; the first leaf
/// still undecided at max_depth makes the report kInconclusive.
CertificateReport containment_certificate(Containment which, int max_depth,
                                          const Rational& delta = Rational(1, 100));

}  // namespace branch_audit
