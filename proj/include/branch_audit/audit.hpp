#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "branch_audit/cyclotomic.hpp"
#include "branch_audit/interval.hpp"
#include "branch_audit/paper_fn.hpp"

namespace branch_audit {

enum class Verdict { kConfirmed, kRefuted, kUndecided };
const char* to_string(Verdict v);

/// One evaluation behind a finding: the definitional enclosure (lhs)
/// against the asserted one (rhs).
struct Probe {
  std::string input;
  std::optional<Rational> theta_over_pi;
  std::optional<ComplexBox> lhs;
  std::optional<ComplexBox> rhs;
  Verdict status = Verdict::kUndecided;
  std::string note;
};

struct AuditFinding {
  std::string claim_id;
  Verdict status = Verdict::kUndecided;
  /// The decisive probe: the first disjoint pair for kRefuted, the widest
  /// overlapping pair for kConfirmed.
  Probe witness;
  double tolerance = 0.0;
  /// Certified lower bound on the distance between the witness enclosures.
  double gap = 0.0;
  std::string detail;
  std::vector<Probe> probes;
};

using ComplexFn = std::function<ComplexBox(const ComplexBox&)>;

/// Worker count for parallel scans: BRANCH_AUDIT_THREADS if set and
/// positive, else the hardware concurrency.
unsigned audit_threads();

/// Central differences on a grid_n x grid_n interior grid of D. The
/// residual |f_y - i f_x| is enclosed rigorously for the difference
/// quotients: kConfirmed if every upper bound is <= tol, kRefuted if some
/// lower bound exceeds tol. Throws DomainViolation from fn.
AuditFinding cr_check(const ComplexFn& fn, int grid_n, double h = 1e-4, double tol = 1e-5,
                      const std::string& claim_id = "CR_ON_D");

struct ArcScanRow {
  unsigned n = 0;
  ArcSide side = ArcSide::kUpper;
  Rational theta_over_pi;
  std::optional<ComplexBox> f;
  std::optional<RealInterval> dist_to_zero;
  std::optional<RealInterval> dist_to_2pi_i;
  Membership in_d = Membership::kBoundary;
  /// Empty unless the evaluation raised.
  std::string note;
};

struct ArcScan {
  std::vector<ArcScanRow> rows;
  AuditFinding case_i;
  AuditFinding case_ii;
  /// Adjacent rows in theta order, wrapping through +-pi, move by at most
  /// 2.2 times the angle step.
  AuditFinding continuity;
  /// f(e^{i(pi - t)}) and f(e^{i(-pi + t)}) agree within 1e-6 for t = 2^-24.
  AuditFinding arc_limit;
};

/// Rows ordered by n, upper before lower; bit-identical for any thread count.
ArcScan arc_scan(unsigned n_min, unsigned n_max, FReading reading = FReading::kCaseEvaluation,
                 double embed_width = 0x1p-40, unsigned threads = 0);

enum class ProbeTerm { kLnnnClosedForm, kF1Inner, kF2Inner, kF3Inner, kCaseITotal, kCaseIITotal };
const char* to_string(ProbeTerm t);

/// Definitional value against the asserted closed form at z = e^{i pi t}
/// for each t in thetas_over_pi.
AuditFinding discrepancy_probe(ProbeTerm term, const std::vector<Rational>& thetas_over_pi,
                               double width_tol = 1e-8);

struct ZeroScan {
  bool positive_inf = false;
  /// min over discarded leaves of |fn|.lo; meaningful for positive_inf.
  double bound = 0.0;
  std::vector<ComplexBox> candidates;
  /// Hulls of the connected components of the candidates.
  std::vector<ComplexBox> clusters;
  std::size_t leaves = 0;
};

/// Each refinement level splits a box into four (two bisections), so the
/// width of the depth-d boxes is 2^-d times the region's. A box on which
/// fn raises is refined further, unless fn also raises at its midpoint or
/// max_depth is reached; both throw CertificateInconclusive, as does a
/// level with more than 2^16 surviving boxes.
ZeroScan zero_scan(const ComplexFn& fn, const ComplexBox& region, double threshold, int max_depth);

/// Bounding box of Sc(-1, 1/5 - delta).
ComplexBox sphere_box(const Rational& delta);

struct AuditConfig {
  unsigned n_min = 8;
  unsigned n_max = 256;
  Rational delta = Rational(1, 100);
  int max_depth = 12;
  double precision_width = 0x1p-40;
  FReading reading = FReading::kCaseEvaluation;
  unsigned threads = 0;
};

struct ParadoxVerdict {
  /// False iff CASE_I, CASE_II and CR_ON_D are all kConfirmed.
  bool triple_excluded = true;
  std::vector<std::string> failing_legs;
  /// First kRefuted claim among the inner forms, the Lnnn closed form,
  /// then the case totals; empty if none.
  std::string root_cause;
};

struct AuditReport {
  AuditConfig config;
  std::vector<ArcScanRow> rows;
  /// Sorted by claim_id.
  std::vector<AuditFinding> findings;
  std::vector<CertificateReport> certificates;
  std::optional<ZeroScan> sphere_scan;
  ParadoxVerdict paradox;

  bool any_undecided() const;
  const AuditFinding* find(const std::string& claim_id) const;
};

AuditReport run_audit(const AuditConfig& config);

}  // namespace branch_audit
