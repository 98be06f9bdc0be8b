#include "branch_audit/cli.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "branch_audit/audit.hpp"
#include "branch_audit/exact_parse.hpp"
#include "branch_audit/expr.hpp"
#include "branch_audit/polyalg.hpp"
#include "branch_audit/report.hpp"

namespace branch_audit {

namespace {

using nlohmann::json;

struct Flags {
  int precision_bits = 40;
  std::string delta = "1/100";
  unsigned n_min = 8;
  unsigned n_max = 256;
  std::string output;
  bool literal_f = false;
  int max_depth = 12;
  std::string out_dir = ".";
};

RunConfig to_config(const Flags& f, OutputFormat fallback) {
  RunConfig c;
  if (f.precision_bits < 1 || f.precision_bits > 60) throw Error("InvalidArgument", "--precision-bits must be in [1, 60]");
  c.precision_bits = f.precision_bits;
  try {
    c.delta = Rational(f.delta);
  } catch (const std::invalid_argument&) {
    throw Error("InvalidArgument", "--delta must be a rational p/q, got '" + f.delta + "'");
  }
  c.delta.canonicalize();
  if (c.delta <= 0 || c.delta >= Rational(1, 5)) throw Error("InvalidArgument", "--delta must lie in (0, 1/5)");
  if (f.n_min < 2 || f.n_min > f.n_max) throw Error("InvalidArgument", "need 2 <= --n-min <= --n-max");
  c.n_min = f.n_min;
  c.n_max = f.n_max;
  c.output = f.output.empty() ? fallback : output_format_from_string(f.output);
  c.literal_f = f.literal_f;
  if (f.max_depth < 0) throw Error("InvalidArgument", "--max-depth must be >= 0");
  c.max_depth = f.max_depth;
  return c;
}

std::string mid_rad(const RealInterval& a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g +- %.3g", a.mid(), a.rad());
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("IOError", "cannot open " + path.string() + " for writing: " + std::strerror(errno));
  f << body;
  f.close();
  if (!f) throw Error("IOError", "write failed for " + path.string());
}

int cmd_evaluate(const std::string& src, const std::string& at, const RunConfig& cfg, std::ostream& out) {
  const ExprPtr e = parse_expr(src);
  const CycNum point = parse_exact_scalar(at);
  const ComplexBox z = cyc_embed(point, cfg.precision_width());
  const EvalResult r = evaluate(*e, z, cfg.literal_f ? FReading::kLiteral : FReading::kCaseEvaluation);
  if (cfg.output == OutputFormat::kJson) {
    json j = {{"expr", pretty(*e)},
              {"at", to_string(point)},
              {"z", to_json(z)},
              {"enclosure", to_json(r.value)},
              {"certificates", r.trail},
              {"config", to_json(cfg)}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "expr: " << pretty(*e) << "\n";
  out << "at:   " << to_string(point) << " (z = " << to_string(z) << ")\n";
  out << "re:   " << mid_rad(r.value.re()) << "  " << to_string(r.value.re()) << "\n";
  out << "im:   " << mid_rad(r.value.im()) << "  " << to_string(r.value.im()) << "\n";
  out << "certificates:\n";
  if (r.trail.empty()) out << "  (no branch domains involved)\n";
  for (const auto& line : r.trail) out << "  " << line << "\n";
  return 0;
}

int cmd_audit(const RunConfig& cfg, const std::string& out_dir, std::ostream& out) {
  const AuditReport report = run_audit(cfg.audit_config());
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("IOError", "cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "audit.json", audit_json(report, cfg).dump(2) + "\n");
  write_file(dir / "audit.csv", audit_csv(report));
  if (cfg.output == OutputFormat::kSvg) write_file(dir / "arc.svg", arc_svg(report.rows));

  for (const auto& f : report.findings) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-20s %-10s ", f.claim_id.c_str(), to_string(f.status));
    out << buf << f.detail << "\n";
  }
  out << "paradox triple " << (report.paradox.triple_excluded ? "excluded" : "NOT excluded");
  if (!report.paradox.root_cause.empty()) out << "; root cause " << report.paradox.root_cause;
  out << "\n";
  out << "wrote " << (dir / "audit.json").string() << ", " << (dir / "audit.csv").string();
  if (cfg.output == OutputFormat::kSvg) out << ", " << (dir / "arc.svg").string();
  out << "\n";
  return report.any_undecided() ? 2 : 0;
}

std::string list_text(const std::vector<CycNum>& xs) {
  std::string s = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + to_string(xs[k]);
  return s + "]";
}

int cmd_poly_divide(const std::string& poly, const std::string& at, bool require_monic, const RunConfig& cfg,
                    std::ostream& out) {
  const Poly h = parse_poly(poly);
  const CycNum x1 = parse_exact_scalar(at);
  const LinearDivision d =
      divide_linear(h, x1, require_monic ? Normalization::kRequireMonic : Normalization::kNormalize);
  if (cfg.output == OutputFormat::kJson) {
    out << json{{"h", to_string(d.dividend)}, {"x1", to_string(x1)}, {"q", to_string(d.quotient)},
                {"p", to_string(d.remainder)}}
               .dump(2)
        << "\n";
    return 0;
  }
  if (!(d.dividend == h)) out << "h normalized to " << to_string(d.dividend) << "\n";
  out << "q = " << to_string(d.quotient) << "\n";
  out << "p = " << to_string(d.remainder) << "\n";
  return 0;
}

int cmd_poly_conj(const std::string& poly, const std::string& root, const RunConfig& cfg, std::ostream& out) {
  const Poly p = parse_poly(poly);
  const CycNum r = parse_exact_scalar(root);
  const ConjRootVerdict v = conj_root_check(p, r);
  if (cfg.output == OutputFormat::kJson) {
    out << json{{"p", to_string(p)}, {"root", to_string(r)}, {"conjugate", to_string(r.conj())},
                {"verdict", to_string(v)}}
               .dump(2)
        << "\n";
  } else {
    out << to_string(v) << "\n";
  }
  return 0;
}

int cmd_poly_deflate(const std::string& poly, const std::string& roots, const RunConfig& cfg, std::ostream& out) {
  const Poly h = parse_poly(poly);
  const std::vector<CycNum> xs = parse_scalar_list(roots);
  const DeflationReport r = deflate_all(h, xs);
  if (cfg.output == OutputFormat::kJson) {
    std::vector<std::string> removed;
    for (const auto& x : r.removed) removed.push_back(to_string(x));
    out << json{{"h", to_string(h)},
                {"removed", removed},
                {"quotient", to_string(r.quotient)},
                {"unique", r.unique},
                {"orderings_checked", r.orderings_checked}}
               .dump(2)
        << "\n";
  } else {
    out << "removed:  " << list_text(r.removed) << "\n";
    out << "quotient: " << to_string(r.quotient) << "\n";
    out << "unique:   " << (r.unique ? "yes" : "NO") << " (" << r.orderings_checked << " orderings)\n";
  }
  return r.unique ? 0 : 2;
}

int cmd_containment(const std::string& which, const RunConfig& cfg, std::ostream& out) {
  std::vector<Containment> list;
  const std::pair<const char*, Containment> names[] = {{"F1", Containment::kF1Bound},
                                                       {"F2", Containment::kF2Bound},
                                                       {"F3", Containment::kF3Bound},
                                                       {"SPHERE", Containment::kSphere}};
  for (const auto& [name, c] : names) {
    if (which == "all" || which == name) list.push_back(c);
  }
  if (list.empty()) throw Error("InvalidArgument", "--which must be F1, F2, F3, SPHERE or all");
  bool all_certified = true;
  json arr = json::array();
  for (const Containment c : list) {
    const CertificateReport r = containment_certificate(c, cfg.max_depth, cfg.delta);
    all_certified = all_certified && r.status == CertificateStatus::kCertified;
    if (cfg.output == OutputFormat::kJson) {
      arr.push_back(to_json(r));
      continue;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%-9s %-12s constant %-8s leaves %-6zu depth %-3d margin %.6g\n", r.claim.c_str(),
                  to_string(r.status), r.constant.get_str().c_str(), r.leaves, r.depth, r.margin);
    out << buf;
    if (r.status != CertificateStatus::kCertified) out << "  undecided box " << to_string(r.worst_box) << "\n";
  }
  if (cfg.output == OutputFormat::kJson) out << json{{"config", to_json(cfg)}, {"certificates", arr}}.dump(2) << "\n";
  return all_certified ? 0 : 2;
}

int cmd_scan(const RunConfig& cfg, bool zeros, bool control, double threshold, std::ostream& out) {
  if (zeros || control) {
    const ComplexFn fn = control ? ComplexFn([](const ComplexBox& z) { return z + ComplexBox::point(1.0, 0.0); })
                                 : ComplexFn([reading = cfg.audit_config().reading](const ComplexBox& z) {
                                     return eval_f(z, reading);
                                   });
    const ZeroScan zs = zero_scan(fn, sphere_box(cfg.delta), threshold, cfg.max_depth);
    out << json{{"function", control ? "z + 1" : "f"},
                {"region", to_json(sphere_box(cfg.delta))},
                {"threshold", threshold},
                {"max_depth", cfg.max_depth},
                {"scan", to_json(zs)}}
               .dump(2)
        << "\n";
    return 0;
  }
  const ArcScan scan = arc_scan(cfg.n_min, cfg.n_max, cfg.audit_config().reading, cfg.precision_width());
  switch (cfg.output) {
    case OutputFormat::kCsv: out << arc_rows_csv(scan.rows); break;
    case OutputFormat::kSvg: out << arc_svg(scan.rows); break;
    case OutputFormat::kJson: {
      json rows = json::array();
      for (const auto& r : scan.rows) rows.push_back(to_json(r));
      out << json{{"config", to_json(cfg)},
                  {"findings", {to_json(scan.arc_limit), to_json(scan.case_i), to_json(scan.case_ii),
                                to_json(scan.continuity)}},
                  {"rows", rows}}
                 .dump(2)
          << "\n";
      break;
    }
  }
  const bool undecided = scan.case_i.status == Verdict::kUndecided || scan.case_ii.status == Verdict::kUndecided;
  return undecided ? 2 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigorous audit of branch-of-logarithm computations", "branch-audit"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_option("--precision-bits", flags.precision_bits, "Embedding width 2^-bits for exact points")
      ->capture_default_str();
  app.add_option("--delta", flags.delta, "Sphere shrink delta as p/q")->capture_default_str();
  app.add_option("--n-min", flags.n_min, "Smallest arc index")->capture_default_str();
  app.add_option("--n-max", flags.n_max, "Largest arc index")->capture_default_str();
  app.add_option("--output", flags.output, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_flag("--literal-f", flags.literal_f, "Apply Lnn once more to F1, F2, F3");
  app.add_option("--max-depth", flags.max_depth, "Subdivision depth for certificates and zero scans")
      ->capture_default_str();

  std::string expr_src, at = "0";
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate an expression at an exact point");
  evaluate->add_option("expr", expr_src, "Expression in z")->required();
  evaluate->add_option("--at", at, "Exact point: rationals, i, zeta(m,k), cis(p/q)")->capture_default_str();

  auto* audit = app.add_subcommand("audit", "Run every check and write audit.json and audit.csv");
  audit->add_option("--out-dir", flags.out_dir, "Directory for report files")->capture_default_str();

  auto* poly = app.add_subcommand("poly", "Exact polynomial checks");
  poly->require_subcommand(1);
  std::string poly_src, poly_arg;
  bool require_monic = false;
  auto* divide = poly->add_subcommand("divide", "Synthetic division by z - x1");
  divide->add_option("poly", poly_src)->required();
  divide->add_option("--at", poly_arg, "x1")->required();
  divide->add_flag("--require-monic", require_monic, "Reject non-monic input instead of normalizing");
  auto* conj_check = poly->add_subcommand("conj-check", "Conjugate root check");
  conj_check->add_option("poly", poly_src)->required();
  conj_check->add_option("--root", poly_arg)->required();
  auto* deflate = poly->add_subcommand("deflate", "Remove listed roots and check uniqueness");
  deflate->add_option("poly", poly_src)->required();
  deflate->add_option("--roots", poly_arg, "[r1, r2, ...]")->required();

  std::string which = "all";
  auto* containment = app.add_subcommand("containment", "Certify the containment inequalities");
  containment->add_option("--which", which, "F1, F2, F3, SPHERE or all")->capture_default_str();

  bool zeros = false, control = false;
  std::optional<double> threshold;
  auto* scan = app.add_subcommand("scan", "Arc scan, or a zero scan of the sphere with --zeros");
  scan->add_flag("--zeros", zeros, "Zero scan of f over the sphere's bounding box");
  scan->add_flag("--control", control, "Zero scan of the control z + 1 instead of f");
  scan->add_option("--threshold", threshold, "Discard boxes with |g| above this [0.5; 1e-6 with --control]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*evaluate) return cmd_evaluate(expr_src, at, to_config(flags, OutputFormat::kCsv), out);
    if (*audit) return cmd_audit(to_config(flags, OutputFormat::kJson), flags.out_dir, out);
    // Text is the default for the remaining commands; "csv" selects it too.
    const RunConfig cfg = to_config(flags, OutputFormat::kCsv);
    if (*divide) return cmd_poly_divide(poly_src, poly_arg, require_monic, cfg, out);
    if (*conj_check) return cmd_poly_conj(poly_src, poly_arg, cfg, out);
    if (*deflate) return cmd_poly_deflate(poly_src, poly_arg, cfg, out);
    if (*containment) return cmd_containment(which, cfg, out);
    if (*scan) return cmd_scan(to_config(flags, OutputFormat::kJson), zeros, control, threshold.value_or(control ? 1e-6 : 0.5), out);
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace branch_audit
