#include "branch_audit/audit.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "branch_audit/branches.hpp"

namespace branch_audit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ComplexBox divide(const ComplexBox& z, const RealInterval& d) { return {z.re() / d, z.im() / d}; }

ComplexBox two_pi_i() { return {RealInterval(0.0), RealInterval(2.0) * constants::pi()}; }

RealInterval pi_times(const Rational& t) {
  if (t == 0) return RealInterval(0.0);
  return constants::pi() * RealInterval::from_rational(t);
}

std::string point_text(double x, double y) {
  return to_string(ComplexBox::point(x, y));
}

// Overall status from per-probe statuses: any refutation wins, then all
// confirmed, else undecided.
void settle(AuditFinding& f) {
  if (f.probes.empty()) {
    f.status = Verdict::kUndecided;
    if (f.detail.empty()) f.detail = "no probe evaluated";
    return;
  }
  const auto refuted = std::find_if(f.probes.begin(), f.probes.end(),
                                    [](const Probe& p) { return p.status == Verdict::kRefuted; });
  if (refuted != f.probes.end()) {
    f.status = Verdict::kRefuted;
    f.witness = *refuted;
  } else if (std::all_of(f.probes.begin(), f.probes.end(),
                         [](const Probe& p) { return p.status == Verdict::kConfirmed; })) {
    f.status = Verdict::kConfirmed;
    // widest pair
    double widest = -1.0;
    for (const auto& p : f.probes) {
      const double w = std::max(p.lhs ? p.lhs->width() : 0.0, p.rhs ? p.rhs->width() : 0.0);
      if (w > widest) {
        widest = w;
        f.witness = p;
      }
    }
  } else {
    f.status = Verdict::kUndecided;
    f.witness = *std::find_if(f.probes.begin(), f.probes.end(),
                              [](const Probe& p) { return p.status == Verdict::kUndecided; });
  }
  if (f.witness.lhs && f.witness.rhs) f.gap = box_gap(*f.witness.lhs, *f.witness.rhs);
}

// Disjoint -> refuted; overlapping with both widths <= tol -> confirmed.
Verdict compare(const ComplexBox& lhs, const ComplexBox& rhs, double width_tol) {
  if (!lhs.intersects(rhs)) return Verdict::kRefuted;
  if (lhs.width() <= width_tol && rhs.width() <= width_tol) return Verdict::kConfirmed;
  return Verdict::kUndecided;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& body) {
  if (threads == 0) threads = audit_threads();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) body(k);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed: return "CONFIRMED";
    case Verdict::kRefuted: return "REFUTED";
    case Verdict::kUndecided: return "UNDECIDED";
  }
  return "?";
}

unsigned audit_threads() {
  if (const char* env = std::getenv("BRANCH_AUDIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

AuditFinding cr_check(const ComplexFn& fn, int grid_n, double h, double tol, const std::string& claim_id) {
  if (grid_n < 1) throw Error("InvalidArgument", "grid_n must be >= 1");
  if (!(h > 0.0)) throw Error("InvalidArgument", "h must be > 0");
  const double x0 = -2.0, x1 = -0.8, y0 = -0.2, y1 = 0.2;
  const double margin = std::min(x1 - x0, y1 - y0) / (grid_n + 1);
  if (margin < 2.0 * h) throw Error("InvalidArgument", "grid too fine for the stencil step");

  AuditFinding out;
  out.claim_id = claim_id;
  out.tolerance = tol;
  double worst = -1.0;
  Probe worst_probe;
  for (int j = 1; j <= grid_n; ++j) {
    for (int k = 1; k <= grid_n; ++k) {
      const double x = x0 + (x1 - x0) * j / (grid_n + 1);
      const double y = y0 + (y1 - y0) * k / (grid_n + 1);
      const double xp = x + h, xm = x - h, yp = y + h, ym = y - h;
      const ComplexBox fx = divide(fn(ComplexBox::point(xp, y)) - fn(ComplexBox::point(xm, y)),
                                   RealInterval(xp) - RealInterval(xm));
      const ComplexBox fy = divide(fn(ComplexBox::point(x, yp)) - fn(ComplexBox::point(x, ym)),
                                   RealInterval(yp) - RealInterval(ym));
      const ComplexBox ifx = times_i(fx);
      const RealInterval residual = box_abs(fy - ifx);
      Probe p;
      p.input = point_text(x, y);
      p.lhs = fy;
      p.rhs = ifx;
      p.note = "residual " + to_string(residual);
      p.status = residual.hi() <= tol ? Verdict::kConfirmed
                 : residual.lo() > tol ? Verdict::kRefuted
                                       : Verdict::kUndecided;
      if (residual.hi() > worst) {
        worst = residual.hi();
        worst_probe = p;
      }
      out.probes.push_back(std::move(p));
    }
  }
  settle(out);
  if (out.status == Verdict::kConfirmed) out.witness = worst_probe;
  if (out.witness.lhs && out.witness.rhs) out.gap = box_gap(*out.witness.lhs, *out.witness.rhs);
  char buf[96];
  std::snprintf(buf, sizeof buf, "max residual <= %.3e at ", worst);
  out.detail = buf + worst_probe.input;
  return out;
}

ArcScan arc_scan(unsigned n_min, unsigned n_max, FReading reading, double embed_width, unsigned threads) {
  if (n_min < 2 || n_min > n_max) throw Error("InvalidArgument", "arc_scan needs 2 <= n_min <= n_max");
  ArcScan scan;
  const std::size_t count = 2 * static_cast<std::size_t>(n_max - n_min + 1);
  scan.rows.resize(count);
  parallel_for(count, threads, [&](std::size_t idx) {
    ArcScanRow& row = scan.rows[idx];
    row.n = n_min + static_cast<unsigned>(idx / 2);
    row.side = idx % 2 == 0 ? ArcSide::kUpper : ArcSide::kLower;
    row.theta_over_pi = arc_theta_over_pi(row.n, row.side);
    const ComplexBox z = cyc_embed(arc_point(row.n, row.side), embed_width);
    row.in_d = membership(z);
    try {
      const ComplexBox f = eval_f(z, reading);
      row.f = f;
      row.dist_to_zero = box_abs(f);
      row.dist_to_2pi_i = box_abs(f - two_pi_i());
    } catch (const Error& e) {
      row.note = e.what();
    }
  });

  const double tol = 1e-8;
  scan.case_i.claim_id = "CASE_I";
  scan.case_ii.claim_id = "CASE_II";
  scan.case_i.tolerance = scan.case_ii.tolerance = tol;
  for (const auto& row : scan.rows) {
    const bool upper = row.side == ArcSide::kUpper;
    AuditFinding& finding = upper ? scan.case_i : scan.case_ii;
    Probe p;
    p.input = std::string("arc_point(") + std::to_string(row.n) + ", " + to_string(row.side) + ")";
    p.theta_over_pi = row.theta_over_pi;
    p.rhs = upper ? ComplexBox::point(0.0, 0.0) : two_pi_i();
    if (!row.f) {
      p.note = row.note;
      finding.detail = "some rows raised";
      continue;
    }
    p.lhs = row.f;
    p.status = compare(*row.f, *p.rhs, tol);
    finding.probes.push_back(std::move(p));
  }
  settle(scan.case_i);
  settle(scan.case_ii);
  scan.case_i.detail = "f on the upper arc against the asserted value 0";
  scan.case_ii.detail = "f on the lower arc against the asserted value 2 pi i";

  // Theta order around the circle: upper arc by increasing n, then the
  // lower arc by decreasing n.
  std::vector<const ArcScanRow*> ring;
  for (const auto& row : scan.rows) {
    if (row.side == ArcSide::kUpper && row.f) ring.push_back(&row);
  }
  for (auto it = scan.rows.rbegin(); it != scan.rows.rend(); ++it) {
    if (it->side == ArcSide::kLower && it->f) ring.push_back(&*it);
  }
  AuditFinding& cont = scan.continuity;
  cont.claim_id = "CONTINUITY";
  cont.tolerance = 2.2;
  for (std::size_t k = 0; k + 1 < ring.size(); ++k) {
    const ArcScanRow& a = *ring[k];
    const ArcScanRow& b = *ring[k + 1];
    Rational step = b.theta_over_pi - a.theta_over_pi;
    if (step < 0) step += 2;
    const RealInterval limit = RealInterval(2.2) * pi_times(step);
    const RealInterval d = box_abs(*a.f - *b.f);
    Probe p;
    p.input = "rows " + to_string(a.theta_over_pi) + " -> " + to_string(b.theta_over_pi) + " (x pi)";
    p.theta_over_pi = b.theta_over_pi;
    p.lhs = a.f;
    p.rhs = b.f;
    p.note = "|df| " + to_string(d) + " vs 2.2 dtheta " + to_string(limit);
    p.status = d.hi() <= limit.lo() ? Verdict::kConfirmed : d.lo() > limit.hi() ? Verdict::kRefuted : Verdict::kUndecided;
    cont.probes.push_back(std::move(p));
  }
  settle(cont);
  cont.gap = 0.0;
  cont.detail = "adjacent rows in theta order, wrapping through +-pi, within 2.2 * dtheta";

  AuditFinding& lim = scan.arc_limit;
  lim.claim_id = "ARC_LIMIT";
  lim.tolerance = 1e-6;
  const double t = 0x1p-24;
  const RealInterval th_up = constants::pi() - RealInterval(t);
  const RealInterval th_lo = RealInterval(t) - constants::pi();
  const ComplexBox z_up{cos(th_up), sin(th_up)};
  const ComplexBox z_lo{cos(th_lo), sin(th_lo)};
  const ComplexBox minus_one = ComplexBox::point(-1.0, 0.0);
  const std::pair<const char*, std::pair<ComplexBox, ComplexBox>> pairs[] = {
      {"e^{i(pi - 2^-24)} vs e^{i(-pi + 2^-24)}", {z_up, z_lo}},
      {"e^{i(pi - 2^-24)} vs -1", {z_up, minus_one}},
      {"e^{i(-pi + 2^-24)} vs -1", {z_lo, minus_one}},
  };
  for (const auto& [label, zs] : pairs) {
    Probe p;
    p.input = label;
    try {
      const ComplexBox fa = eval_f(zs.first, reading);
      const ComplexBox fb = eval_f(zs.second, reading);
      const RealInterval d = box_abs(fa - fb);
      const double allowance = lim.tolerance + fa.width() + fb.width();
      p.lhs = fa;
      p.rhs = fb;
      p.note = "|df| " + to_string(d);
      p.status = d.hi() <= allowance ? Verdict::kConfirmed : d.lo() > lim.tolerance ? Verdict::kRefuted : Verdict::kUndecided;
    } catch (const Error& e) {
      p.note = e.what();
    }
    lim.probes.push_back(std::move(p));
  }
  settle(lim);
  lim.gap = 0.0;
  lim.detail = "the two arcs meet at -1";
  return scan;
}

const char* to_string(ProbeTerm t) {
  switch (t) {
    case ProbeTerm::kLnnnClosedForm: return "LNNN_CLOSED_FORM";
    case ProbeTerm::kF1Inner: return "F1_INNER";
    case ProbeTerm::kF2Inner: return "F2_INNER";
    case ProbeTerm::kF3Inner: return "F3_INNER";
    case ProbeTerm::kCaseITotal: return "CASE_I_TOTAL";
    case ProbeTerm::kCaseIITotal: return "CASE_II_TOTAL";
  }
  return "?";
}

AuditFinding discrepancy_probe(ProbeTerm term, const std::vector<Rational>& thetas_over_pi, double width_tol) {
  AuditFinding out;
  out.claim_id = to_string(term);
  out.tolerance = width_tol;
  for (const Rational& t : thetas_over_pi) {
    Probe p;
    p.input = "e^{i pi " + t.get_str() + "}";
    p.theta_over_pi = t;
    try {
      const ComplexBox z = cis_pi(t);
      const RealInterval theta = pi_times(t);
      switch (term) {
        case ProbeTerm::kLnnnClosedForm:
          p.lhs = branch_log(BranchTag::kLnnn, z);
          p.rhs = lnnn_paper_closed_form(RealInterval(1.0), theta);
          break;
        case ProbeTerm::kF1Inner:
          p.lhs = inner_value(InnerTag::kF1, z);
          p.rhs = paper_closed_forms(ClosedForm::kF1Inner, theta);
          break;
        case ProbeTerm::kF2Inner:
          p.lhs = inner_value(InnerTag::kF2, z);
          p.rhs = paper_closed_forms(ClosedForm::kF2Inner, theta);
          break;
        case ProbeTerm::kF3Inner:
          p.lhs = inner_value(InnerTag::kF3, z);
          p.rhs = paper_closed_forms(ClosedForm::kF3Inner, theta);
          break;
        case ProbeTerm::kCaseITotal:
          p.lhs = eval_f(z);
          p.rhs = paper_closed_forms(ClosedForm::kCaseITotal, theta);
          break;
        case ProbeTerm::kCaseIITotal:
          p.lhs = eval_f(z);
          p.rhs = paper_closed_forms(ClosedForm::kCaseIITotal, theta);
          break;
      }
      p.status = compare(*p.lhs, *p.rhs, width_tol);
    } catch (const Error& e) {
      p.lhs.reset();
      p.rhs.reset();
      p.note = e.what();
    }
    out.probes.push_back(std::move(p));
  }
  settle(out);
  out.detail = "definitional enclosure against the asserted closed form";
  return out;
}

namespace {

std::vector<ComplexBox> quarter(const ComplexBox& box) {
  std::vector<ComplexBox> out;
  const auto [a, b] = bisect(box);
  for (const ComplexBox& half : {a, b}) {
    if (half.width() > 0.0) {
      const auto [c, d] = bisect(half);
      out.push_back(c);
      out.push_back(d);
    } else {
      out.push_back(half);
    }
  }
  return out;
}

std::vector<ComplexBox> cluster_hulls(const std::vector<ComplexBox>& boxes) {
  std::vector<std::size_t> parent(boxes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t k) {
    while (parent[k] != k) k = parent[k] = parent[parent[k]];
    return k;
  };
  for (std::size_t a = 0; a < boxes.size(); ++a) {
    for (std::size_t b = a + 1; b < boxes.size(); ++b) {
      if (boxes[a].intersects(boxes[b])) parent[root(b)] = root(a);
    }
  }
  std::map<std::size_t, ComplexBox> hulls;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const std::size_t r = root(k);
    const auto it = hulls.find(r);
    if (it == hulls.end()) {
      hulls.emplace(r, boxes[k]);
    } else {
      it->second = ComplexBox::hull(it->second, boxes[k]);
    }
  }
  std::vector<ComplexBox> out;
  for (const auto& [r, hull] : hulls) out.push_back(hull);
  return out;
}

}  // namespace

constexpr std::size_t kMaxLiveBoxes = std::size_t(1) << 16;

ZeroScan zero_scan(const ComplexFn& fn, const ComplexBox& region, double threshold, int max_depth) {
  if (!(threshold > 0.0)) throw Error("InvalidArgument", "threshold must be > 0");
  if (max_depth < 0) throw Error("InvalidArgument", "max_depth must be >= 0");
  ZeroScan out;
  out.bound = kInf;
  std::vector<ComplexBox> level{region};
  for (int depth = 0; !level.empty(); ++depth) {
    std::vector<ComplexBox> next;
    for (const ComplexBox& box : level) {
      std::optional<RealInterval> modulus;
      try {
        modulus = box_abs(fn(box));
      } catch (const Error&) {
        if (depth >= max_depth || box.width() == 0.0) throw CertificateInconclusive(to_string(box));
        // A failure at an interior point persists under any refinement.
        try {
          fn(ComplexBox::point(box.re().mid(), box.im().mid()));
        } catch (const Error&) {
          throw CertificateInconclusive(to_string(box));
        }
      }
      if (modulus && modulus->lo() > threshold) {
        ++out.leaves;
        out.bound = std::min(out.bound, modulus->lo());
        continue;
      }
      if (depth >= max_depth || box.width() == 0.0) {
        ++out.leaves;
        out.candidates.push_back(box);
        continue;
      }
      for (const ComplexBox& child : quarter(box)) next.push_back(child);
    }
    // A threshold above sup |fn| prunes nothing and would keep 4^depth boxes.
    if (next.size() > kMaxLiveBoxes) throw CertificateInconclusive(to_string(region) + " (over " +
                                                                   std::to_string(kMaxLiveBoxes) + " live boxes)");
    level = std::move(next);
  }
  out.positive_inf = out.candidates.empty();
  if (!out.positive_inf) out.bound = 0.0;
  out.clusters = cluster_hulls(out.candidates);
  return out;
}

ComplexBox sphere_box(const Rational& delta) {
  const RealInterval r = RealInterval::from_rational(Rational(1, 5) - delta);
  const RealInterval center(-1.0);
  return {RealInterval::hull(center - r, center + r), RealInterval::hull(-r, r)};
}

bool AuditReport::any_undecided() const {
  return std::any_of(findings.begin(), findings.end(),
                     [](const AuditFinding& f) { return f.status == Verdict::kUndecided; });
}

const AuditFinding* AuditReport::find(const std::string& claim_id) const {
  for (const auto& f : findings) {
    if (f.claim_id == claim_id) return &f;
  }
  return nullptr;
}

namespace {

std::vector<Rational> arc_samples(unsigned n_min, unsigned n_max, ArcSide side, bool skip_quarter) {
  std::vector<Rational> out;
  const unsigned stride = std::max(1u, (n_max - n_min) / 24);
  for (unsigned n = n_min; n <= n_max; n += stride) {
    if (skip_quarter && n == 2) continue;
    out.push_back(arc_theta_over_pi(n, side));
  }
  return out;
}

AuditFinding certificate_finding(const CertificateReport& cert) {
  AuditFinding f;
  f.claim_id = "CONTAIN_" + cert.claim;
  f.status = cert.status == CertificateStatus::kCertified ? Verdict::kConfirmed : Verdict::kUndecided;
  f.tolerance = 0.0;
  f.gap = cert.margin;
  f.witness.input = to_string(cert.worst_box);
  f.witness.lhs = cert.worst_box;
  f.witness.status = f.status;
  f.witness.note = to_string(cert.status);
  f.probes.push_back(f.witness);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: %zu leaves, depth %d, constant %s, margin %.6g", to_string(cert.status),
                cert.leaves, cert.depth, cert.constant.get_str().c_str(), cert.margin);
  f.detail = buf;
  return f;
}

}  // namespace

AuditReport run_audit(const AuditConfig& config) {
  AuditReport report;
  report.config = config;

  ArcScan arc = arc_scan(config.n_min, config.n_max, config.reading, config.precision_width, config.threads);
  report.rows = std::move(arc.rows);
  std::vector<AuditFinding> findings{std::move(arc.case_i), std::move(arc.case_ii), std::move(arc.continuity),
                                     std::move(arc.arc_limit)};

  // Lnnn's closed form at -1 and along both arcs.
  std::vector<Rational> lnnn_thetas{Rational(1)};
  for (const ArcSide side : {ArcSide::kUpper, ArcSide::kLower}) {
    for (const auto& t : arc_samples(std::max(config.n_min, 3u), config.n_max, side, true)) lnnn_thetas.push_back(t);
  }
  findings.push_back(discrepancy_probe(ProbeTerm::kLnnnClosedForm, lnnn_thetas));

  std::vector<Rational> both_arcs;
  for (const ArcSide side : {ArcSide::kUpper, ArcSide::kLower}) {
    for (const auto& t : arc_samples(config.n_min, config.n_max, side, true)) both_arcs.push_back(t);
  }
  for (const ProbeTerm term : {ProbeTerm::kF1Inner, ProbeTerm::kF2Inner, ProbeTerm::kF3Inner}) {
    findings.push_back(discrepancy_probe(term, both_arcs));
  }
  findings.push_back(discrepancy_probe(
      ProbeTerm::kCaseITotal, arc_samples(std::max(config.n_min, 3u), config.n_max, ArcSide::kUpper, true)));
  findings.push_back(discrepancy_probe(
      ProbeTerm::kCaseIITotal, arc_samples(std::max(config.n_min, 3u), config.n_max, ArcSide::kLower, true)));

  const FReading reading = config.reading;
  try {
    findings.push_back(cr_check([reading](const ComplexBox& z) { return eval_f(z, reading); }, 9));
  } catch (const Error& e) {
    AuditFinding f;
    f.claim_id = "CR_ON_D";
    f.tolerance = 1e-5;
    f.detail = e.what();
    findings.push_back(std::move(f));
  }

  for (const Containment which : {Containment::kF1Bound, Containment::kF2Bound, Containment::kF3Bound,
                                  Containment::kSphere}) {
    report.certificates.push_back(containment_certificate(which, config.max_depth, config.delta));
    findings.push_back(certificate_finding(report.certificates.back()));
  }

  {
    AuditFinding f;
    f.claim_id = "INF_ZERO_ON_SPHERE";
    f.tolerance = 0.5;
    const ComplexBox region = sphere_box(config.delta);
    f.witness.input = to_string(region);
    try {
      ZeroScan zs = zero_scan([reading](const ComplexBox& z) { return eval_f(z, reading); }, region, 0.5,
                              config.max_depth);
      if (zs.positive_inf) {
        f.status = Verdict::kRefuted;
        f.gap = zs.bound;
        f.witness.lhs = ComplexBox::point(zs.bound, 0.0);
        f.witness.rhs = ComplexBox::point(0.0, 0.0);
        f.witness.status = Verdict::kRefuted;
        char buf[96];
        std::snprintf(buf, sizeof buf, "inf |f| >= %.6g over %zu leaves", zs.bound, zs.leaves);
        f.detail = buf;
      } else {
        f.detail = std::to_string(zs.candidates.size()) + " candidate boxes survive";
      }
      report.sphere_scan = std::move(zs);
    } catch (const Error& e) {
      f.detail = e.what();
    }
    f.probes.push_back(f.witness);
    findings.push_back(std::move(f));
  }

  std::sort(findings.begin(), findings.end(),
            [](const AuditFinding& a, const AuditFinding& b) { return a.claim_id < b.claim_id; });
  report.findings = std::move(findings);

  ParadoxVerdict& pv = report.paradox;
  bool all_confirmed = true;
  for (const char* leg : {"CASE_I", "CASE_II", "CR_ON_D"}) {
    const AuditFinding* f = report.find(leg);
    if (!f || f->status != Verdict::kConfirmed) all_confirmed = false;
    if (f && f->status == Verdict::kRefuted) pv.failing_legs.emplace_back(leg);
  }
  pv.triple_excluded = !all_confirmed;
  for (const char* claim : {"F1_INNER", "F2_INNER", "F3_INNER", "LNNN_CLOSED_FORM", "CASE_I_TOTAL", "CASE_II_TOTAL"}) {
    const AuditFinding* f = report.find(claim);
    if (f && f->status == Verdict::kRefuted) {
      pv.root_cause = claim;
      break;
    }
  }
  return report;
}

}  // namespace branch_audit
