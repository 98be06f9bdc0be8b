#include <doctest.h>

#include <cstdlib>

#include "branch_audit/audit.hpp"
#include "branch_audit/branches.hpp"
#include "branch_audit/errors.hpp"
#include "oracle.hpp"

using namespace branch_audit;
using oracle::Big;

namespace {

double max_residual(const AuditFinding& f) {
  double worst = 0.0;
  for (const Probe& p : f.probes) worst = std::max(worst, box_abs(*p.lhs - *p.rhs).hi());
  return worst;
}

double min_residual(const AuditFinding& f) {
  double best = 1e300;
  for (const Probe& p : f.probes) best = std::min(best, box_abs(*p.lhs - *p.rhs).lo());
  return best;
}

const ArcScanRow& row(const ArcScan& s, unsigned n, ArcSide side) {
  for (const ArcScanRow& r : s.rows)
    if (r.n == n && r.side == side) return r;
  throw std::runtime_error("row missing");
}

}  // namespace

TEST_CASE("cr_check examples") {
  const AuditFinding f = cr_check([](const ComplexBox& z) { return eval_f(z); }, 9);
  CHECK(f.status == Verdict::kConfirmed);
  CHECK(f.probes.size() == 81);
  CHECK(max_residual(f) <= 1e-5);
  CHECK(f.claim_id == "CR_ON_D");

  const AuditFinding c = cr_check([](const ComplexBox& z) { return conj(z); }, 3);
  CHECK(c.status == Verdict::kRefuted);
  CHECK(min_residual(c) > 1.9);
  CHECK(max_residual(c) < 2.1);
  CHECK(c.gap > 1.9);

  const AuditFinding s = cr_check([](const ComplexBox& z) { return branch_log(BranchTag::kLnSlit, z); }, 9);
  CHECK(s.status == Verdict::kConfirmed);

  CHECK_THROWS(cr_check([](const ComplexBox& z) { return z; }, 9, 0.1));
  CHECK_THROWS_AS(cr_check([](const ComplexBox& z) { return branch_log(BranchTag::kLnn, z); }, 3), DomainViolation);
}

TEST_CASE("arc_scan examples") {
  const ArcScan s = arc_scan(2, 16, FReading::kCaseEvaluation, 0x1p-40, 2);
  CHECK(s.rows.size() == 30);
  const ArcScanRow& up = row(s, 16, ArcSide::kUpper);
  REQUIRE(up.f);
  CHECK(up.theta_over_pi == Rational(15, 16));
  CHECK(oracle::in(*up.f, oracle::C{Big(0), oracle::pi() * 7 / 8}));
  CHECK(up.dist_to_zero->lo() > 2.7);
  const ArcScanRow& lo = row(s, 16, ArcSide::kLower);
  REQUIRE(lo.f);
  CHECK(oracle::in(*lo.f, oracle::C{Big(0), oracle::pi() * 9 / 8}));
  CHECK(lo.dist_to_2pi_i->lo() > 2.7);
  const ArcScanRow& two = row(s, 2, ArcSide::kUpper);
  CHECK(!two.f);
  CHECK(two.in_d == Membership::kOutside);
  CHECK(!two.note.empty());
  CHECK(s.case_i.status == Verdict::kRefuted);
  CHECK(s.case_ii.status == Verdict::kRefuted);
  CHECK(s.continuity.status == Verdict::kConfirmed);
  CHECK(s.arc_limit.status == Verdict::kConfirmed);
}

TEST_CASE("arc_scan rows invariant and determinism") {
  const ArcScan a = arc_scan(8, 64, FReading::kCaseEvaluation, 0x1p-40, 1);
  const ArcScan b = arc_scan(8, 64, FReading::kCaseEvaluation, 0x1p-40, 4);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    CHECK(a.rows[k].n == b.rows[k].n);
    CHECK(a.rows[k].side == b.rows[k].side);
    REQUIRE(a.rows[k].f);
    CHECK(*a.rows[k].f == *b.rows[k].f);
    CHECK(*a.rows[k].dist_to_zero == *b.rows[k].dist_to_zero);
    const ComplexBox& f = *a.rows[k].f;
    const double m = std::hypot(f.re().mid(), f.im().mid());
    CHECK(a.rows[k].dist_to_zero->lo() <= m);
    CHECK(m <= a.rows[k].dist_to_zero->hi() + f.width());
  }
  CHECK(a.case_i.witness.input == b.case_i.witness.input);
}

TEST_CASE("discrepancy_probe examples") {
  const AuditFinding l = discrepancy_probe(ProbeTerm::kLnnnClosedForm, {Rational(1)});
  CHECK(l.status == Verdict::kRefuted);
  CHECK(l.gap >= 3.14);
  REQUIRE(l.witness.lhs);
  CHECK(oracle::in(*l.witness.lhs, oracle::C{Big(0), oracle::pi() / 2}));
  CHECK(oracle::in(*l.witness.rhs, oracle::C{Big(0), -oracle::pi() / 2}));

  const AuditFinding f1 = discrepancy_probe(ProbeTerm::kF1Inner, {Rational(15, 16), Rational(7, 8), Rational(13, 16)});
  CHECK(f1.status == Verdict::kConfirmed);
  CHECK(f1.probes.size() == 3);

  const AuditFinding c1 = discrepancy_probe(ProbeTerm::kCaseITotal, {Rational(15, 16)});
  CHECK(c1.status == Verdict::kRefuted);
  CHECK(oracle::in(*c1.witness.lhs, oracle::C{Big(0), oracle::pi() * 7 / 8}));

  const AuditFinding c2 = discrepancy_probe(ProbeTerm::kCaseIITotal, {Rational(-15, 16)});
  CHECK(c2.status == Verdict::kRefuted);

  // theta = 1/2 is outside the inner forms' range
  const AuditFinding bad = discrepancy_probe(ProbeTerm::kF1Inner, {Rational(1, 2)});
  CHECK(bad.status == Verdict::kUndecided);
}

TEST_CASE("zero_scan examples") {
  const auto f = [](const ComplexBox& z) { return eval_f(z); };
  const RealInterval t = constants::pi() - RealInterval(0.2);
  const ComplexBox arc({-1.0, cos(t).hi()}, {0.0, sin(t).hi()});
  const ZeroScan a = zero_scan(f, arc, 0.5, 10);
  CHECK(a.positive_inf);
  CHECK(a.bound > 0.5);
  CHECK(a.candidates.empty());

  const auto g = [](const ComplexBox& z) { return z + ComplexBox::point(1.0, 0.0); };
  const ZeroScan b = zero_scan(g, ComplexBox({-1.01, -0.99}, {-0.01, 0.01}), 1e-3, 8);
  CHECK(!b.positive_inf);
  REQUIRE(b.clusters.size() == 1);
  CHECK(b.clusters[0].contains(-1.0, 0.0));

  const ZeroScan c = zero_scan(g, sphere_box(Rational(1, 100)), 1e-6, 12);
  REQUIRE(c.clusters.size() == 1);
  CHECK(c.clusters[0].contains(-1.0, 0.0));
  CHECK(c.clusters[0].width() <= 4 * sphere_box(Rational(1, 100)).width() * 0x1p-12);

  const ZeroScan d = zero_scan(f, sphere_box(Rational(1, 100)), 0.5, 12);
  CHECK(d.positive_inf);
  CHECK(d.bound > 0.5);

  // nothing is pruned when the threshold exceeds sup |g|; the live-box cap stops it
  CHECK_THROWS_AS(zero_scan(g, sphere_box(Rational(1, 100)), 0.5, 12), CertificateInconclusive);

  // f has no logarithm near 0
  CHECK_THROWS_AS(zero_scan(f, ComplexBox({-0.1, 0.1}, {-0.1, 0.1}), 0.5, 4), CertificateInconclusive);
}

TEST_CASE("sphere_box") {
  const ComplexBox s = sphere_box(Rational(1, 100));
  CHECK(s.contains(-1.19, 0.19));
  CHECK(s.contains(-0.81, -0.19));
  CHECK(s.re().lo() > -1.2);
}

TEST_CASE("verdicts are monotone in depth") {
  for (Containment c : {Containment::kF1Bound, Containment::kF2Bound, Containment::kF3Bound, Containment::kSphere}) {
    bool certified = false;
    for (int d = 0; d <= 6; ++d) {
      const bool now = containment_certificate(c, d).status == CertificateStatus::kCertified;
      CHECK((!certified || now));
      certified = now;
    }
    CHECK(certified);
  }
  const auto g = [](const ComplexBox& z) { return z + ComplexBox::point(1.0, 0.0); };
  for (int d = 1; d <= 8; ++d) CHECK(!zero_scan(g, sphere_box(Rational(1, 100)), 1e-6, d).positive_inf);

  AuditConfig shallow;
  shallow.n_max = 32;
  shallow.max_depth = 0;
  AuditConfig deep = shallow;
  deep.max_depth = 8;
  const AuditReport a = run_audit(shallow), b = run_audit(deep);
  REQUIRE(a.findings.size() == b.findings.size());
  for (std::size_t k = 0; k < a.findings.size(); ++k) {
    CHECK(a.findings[k].claim_id == b.findings[k].claim_id);
    if (a.findings[k].status != Verdict::kUndecided) CHECK(a.findings[k].status == b.findings[k].status);
  }
  CHECK(a.any_undecided());
  CHECK(!b.any_undecided());
}

TEST_CASE("run_audit default verdicts") {
  const AuditReport r = run_audit(AuditConfig{});
  auto status = [&](const char* id) {
    const AuditFinding* f = r.find(id);
    REQUIRE(f != nullptr);
    return f->status;
  };
  CHECK(status("CASE_I") == Verdict::kRefuted);
  CHECK(status("CASE_II") == Verdict::kRefuted);
  CHECK(status("LNNN_CLOSED_FORM") == Verdict::kRefuted);
  CHECK(status("F1_INNER") == Verdict::kConfirmed);
  CHECK(status("F2_INNER") == Verdict::kConfirmed);
  CHECK(status("F3_INNER") == Verdict::kConfirmed);
  CHECK(status("CR_ON_D") == Verdict::kConfirmed);
  CHECK(status("CONTINUITY") == Verdict::kConfirmed);
  CHECK(status("ARC_LIMIT") == Verdict::kConfirmed);
  CHECK(r.paradox.triple_excluded);
  CHECK(r.paradox.root_cause == "LNNN_CLOSED_FORM");
  CHECK(!r.any_undecided());
  CHECK(r.rows.size() == 2 * (256 - 8 + 1));
  CHECK(std::is_sorted(r.findings.begin(), r.findings.end(),
                       [](const AuditFinding& a, const AuditFinding& b) { return a.claim_id < b.claim_id; }));

  AuditConfig small;
  small.n_max = 16;
  const AuditReport s = run_audit(small);
  CHECK(s.rows.size() == 18);
  for (const AuditFinding& f : r.findings) CHECK(s.find(f.claim_id)->status == f.status);
}

TEST_CASE("audit_threads reads the environment") {
  setenv("BRANCH_AUDIT_THREADS", "3", 1);
  CHECK(audit_threads() == 3);
  setenv("BRANCH_AUDIT_THREADS", "0", 1);
  CHECK(audit_threads() >= 1);
  unsetenv("BRANCH_AUDIT_THREADS");
  CHECK(audit_threads() >= 1);
}
