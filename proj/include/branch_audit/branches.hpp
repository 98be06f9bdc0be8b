#pragma once

#include <optional>
#include <string>

#include "branch_audit/cyclotomic.hpp"
#include "branch_audit/interval.hpp"

namespace branch_audit {

// Complex entire functions, built from expp(x + iy) = e^x (cos y + i sin y).
ComplexBox cexp(const ComplexBox& z);
/// (expp(iz) - expp(-iz)) / (2i)
ComplexBox csin(const ComplexBox& z);
/// (expp(iz) + expp(-iz)) / 2
ComplexBox ccos(const ComplexBox& z);

/// Principal argument in (-pi, pi]. Boxes touching the negative real axis
/// from above (y >= 0) are accepted and map to pi there; boxes reaching
/// it with y < 0 throw BranchCutStraddle. Throws ZeroModulus if 0 is in z.
RealInterval arg_principal(const ComplexBox& z);

/// The three logarithm branches.
///   kLnn:    ln|z| + i arcsin(y/|z|), valid on Re z > 0
///   kLnnn:   ln|z| + i arccos(y/|z|), valid on Re z < 0
///   kLnSlit: ln|z| + i theta, theta in (0, 2 pi), valid off [0, inf)
enum class BranchTag { kLnn, kLnnn, kLnSlit };
const char* to_string(BranchTag tag);

/// Throws DomainViolation naming the sign certificate that failed.
ComplexBox branch_log(BranchTag tag, const ComplexBox& z);

/// ln r - i theta + i pi/2: the closed form claimed for Lnnn(r e^{i theta}).
/// Returned verbatim as a comparison target; it does not agree with
/// branch_log(kLnnn, .) on Re z < 0.
ComplexBox lnnn_paper_closed_form(const RealInterval& r, const RealInterval& theta);

/// k = (theta1 + theta2 - Arg(e^{i(theta1 + theta2)})) / (2 pi) in {-1, 0, 1}.
/// Throws AmbiguousCorrection when the sum's enclosure meets +-pi.
int log_product_correction(const RealInterval& theta1, const RealInterval& theta2);

struct PolarForm {
  RealInterval r;
  RealInterval theta;
  /// theta / pi, when it is known exactly (roots of unity, exact reals).
  std::optional<Rational> theta_over_pi;
};

PolarForm polar(const ComplexBox& z);
PolarForm polar(const CycNum& z, double target_width = 0x1p-40);

}  // namespace branch_audit
