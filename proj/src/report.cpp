#include "branch_audit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace branch_audit {

using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json rational_json(const Rational& q) { return q.get_str(); }

Rational rational_from(const json& j) {
  Rational q(j.get<std::string>());
  q.canonicalize();
  return q;
}

void csv_row(std::string& out, const std::string& claim, const char* status, const std::optional<Rational>& theta,
             const std::optional<ComplexBox>& box) {
  out += claim;
  out += ',';
  out += status;
  out += ',';
  if (theta) out += theta->get_num().get_str() + "," + theta->get_den().get_str();
  else out += ",";
  if (box) {
    out += "," + num(box->re().lo()) + "," + num(box->re().hi()) + "," + num(box->im().lo()) + "," +
           num(box->im().hi());
  } else {
    out += ",,,,";
  }
  out += '\n';
}

}  // namespace

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kSvg: return "svg";
  }
  return "?";
}

OutputFormat output_format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "svg") return OutputFormat::kSvg;
  throw Error("InvalidArgument", "unknown output format '" + s + "'");
}

double RunConfig::precision_width() const { return std::ldexp(1.0, -precision_bits); }

AuditConfig RunConfig::audit_config() const {
  AuditConfig c;
  c.n_min = n_min;
  c.n_max = n_max;
  c.delta = delta;
  c.max_depth = max_depth;
  c.precision_width = precision_width();
  c.reading = literal_f ? FReading::kLiteral : FReading::kCaseEvaluation;
  return c;
}

json to_json(const RunConfig& c) {
  return {
      {"precision_bits", c.precision_bits},
      {"precision_width", c.precision_width()},
      {"epsilon", rational_json(epsilon())},
      {"delta", rational_json(c.delta)},
      {"n_min", c.n_min},
      {"n_max", c.n_max},
      {"output", to_string(c.output)},
      {"literal_f", c.literal_f},
      {"max_depth", c.max_depth},
  };
}

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  c.precision_bits = j.at("precision_bits").get<int>();
  c.delta = rational_from(j.at("delta"));
  c.n_min = j.at("n_min").get<unsigned>();
  c.n_max = j.at("n_max").get<unsigned>();
  c.output = output_format_from_string(j.at("output").get<std::string>());
  c.literal_f = j.at("literal_f").get<bool>();
  c.max_depth = j.at("max_depth").get<int>();
  return c;
}

json to_json(const RealInterval& a) { return json::array({a.lo(), a.hi()}); }

json to_json(const ComplexBox& z) { return {{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

namespace {

json probe_json(const Probe& p) {
  json j = {{"input", p.input}, {"status", to_string(p.status)}};
  j["theta_over_pi"] = p.theta_over_pi ? json(rational_json(*p.theta_over_pi)) : json(nullptr);
  j["lhs_enclosure"] = p.lhs ? to_json(*p.lhs) : json(nullptr);
  j["rhs_enclosure"] = p.rhs ? to_json(*p.rhs) : json(nullptr);
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

}  // namespace

json to_json(const AuditFinding& f) {
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& p : f.probes) ++counts[static_cast<int>(p.status)];
  return {
      {"claim_id", f.claim_id},
      {"status", to_string(f.status)},
      {"witness", probe_json(f.witness)},
      {"tolerance", f.tolerance},
      {"gap", finite_or_null(f.gap)},
      {"detail", f.detail},
      {"probes",
       {{"total", f.probes.size()}, {"confirmed", counts[0]}, {"refuted", counts[1]}, {"undecided", counts[2]}}},
  };
}

json to_json(const ArcScanRow& r) {
  json j = {
      {"n", r.n},
      {"side", to_string(r.side)},
      {"theta_over_pi", rational_json(r.theta_over_pi)},
      {"in_D", to_string(r.in_d)},
  };
  j["f_enclosure"] = r.f ? to_json(*r.f) : json(nullptr);
  j["dist_to_zero"] = r.dist_to_zero ? to_json(*r.dist_to_zero) : json(nullptr);
  j["dist_to_2pi_i"] = r.dist_to_2pi_i ? to_json(*r.dist_to_2pi_i) : json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const CertificateReport& c) {
  return {
      {"claim", c.claim},
      {"status", to_string(c.status)},
      {"epsilon", rational_json(c.epsilon)},
      {"delta", rational_json(c.delta)},
      {"constant", rational_json(c.constant)},
      {"leaves", c.leaves},
      {"depth", c.depth},
      {"margin", finite_or_null(c.margin)},
      {"worst_box", to_json(c.worst_box)},
  };
}

json to_json(const ZeroScan& z) {
  json candidates = json::array();
  for (const auto& b : z.candidates) candidates.push_back(to_json(b));
  json clusters = json::array();
  for (const auto& b : z.clusters) clusters.push_back(to_json(b));
  return {
      {"result", z.positive_inf ? "POSITIVE_INF" : "CANDIDATES"},
      {"bound", finite_or_null(z.bound)},
      {"leaves", z.leaves},
      {"candidates", candidates},
      {"clusters", clusters},
  };
}

json audit_json(const AuditReport& report, const RunConfig& config) {
  json findings = json::array();
  for (const auto& f : report.findings) findings.push_back(to_json(f));
  json certs = json::array();
  for (const auto& c : report.certificates) certs.push_back(to_json(c));
  json rows = json::array();
  for (const auto& r : report.rows) rows.push_back(to_json(r));
  return {
      {"header", {{"tool", "branch-audit"}, {"schema", 1}, {"config", to_json(config)}}},
      {"findings", findings},
      {"paradox",
       {{"triple", json::array({"CASE_I", "CASE_II", "CR_ON_D"})},
        {"triple_excluded", report.paradox.triple_excluded},
        {"failing_legs", report.paradox.failing_legs},
        {"root_cause", report.paradox.root_cause.empty() ? json(nullptr) : json(report.paradox.root_cause)}}},
      {"containments", certs},
      {"zero_scan", report.sphere_scan ? to_json(*report.sphere_scan) : json(nullptr)},
      {"arc_rows", rows},
  };
}

std::string audit_csv(const AuditReport& report) {
  std::string out = "claim_id,status,theta_num,theta_den,re_lo,re_hi,im_lo,im_hi\n";
  for (const auto& f : report.findings) {
    for (const auto& p : f.probes) csv_row(out, f.claim_id, to_string(p.status), p.theta_over_pi, p.lhs);
  }
  return out;
}

std::string arc_rows_csv(const std::vector<ArcScanRow>& rows) {
  std::string out = "n,side,theta_num,theta_den,re_lo,re_hi,im_lo,im_hi,in_D\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + to_string(r.side) + "," + r.theta_over_pi.get_num().get_str() + "," +
           r.theta_over_pi.get_den().get_str();
    if (r.f) {
      out += "," + num(r.f->re().lo()) + "," + num(r.f->re().hi()) + "," + num(r.f->im().lo()) + "," +
             num(r.f->im().hi());
    } else {
      out += ",,,,";
    }
    out += ",";
    out += to_string(r.in_d);
    out += '\n';
  }
  return out;
}

std::string arc_svg(const std::vector<ArcScanRow>& rows) {
  struct Pt {
    double phi, abs_f, im_f;
  };
  std::vector<Pt> pts;
  for (const auto& r : rows) {
    if (!r.f) continue;
    double phi = r.theta_over_pi.get_d() * M_PI;
    if (r.side == ArcSide::kLower) phi += 2.0 * M_PI;
    const double re = r.f->re().mid(), im = r.f->im().mid();
    pts.push_back({phi, std::hypot(re, im), im});
  }
  std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.phi < b.phi; });

  const double w = 800, h = 400, pad = 40;
  double x0 = M_PI / 2, x1 = 3 * M_PI / 2, y0 = 0.0, y1 = 1.0;
  if (!pts.empty()) {
    x0 = pts.front().phi;
    x1 = pts.back().phi;
    y0 = std::numeric_limits<double>::infinity();
    y1 = -y0;
    for (const auto& p : pts) {
      y0 = std::min({y0, p.abs_f, p.im_f});
      y1 = std::max({y1, p.abs_f, p.im_f});
    }
  }
  if (x1 <= x0) x1 = x0 + 1.0;
  if (y1 <= y0) y1 = y0 + 1.0;
  auto sx = [&](double x) { return pad + (x - x0) / (x1 - x0) * (w - 2 * pad); };
  auto sy = [&](double y) { return h - pad - (y - y0) / (y1 - y0) * (h - 2 * pad); };
  char buf[160];
  auto polyline = [&](const char* color, const char* label, double Pt::*field) {
    std::string s = std::string("<polyline fill=\"none\" stroke=\"") + color + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", k ? " " : "", sx(pts[k].phi), sy(pts[k].*field));
      s += buf;
    }
    s += "\"><title>";
    s += label;
    s += "</title></polyline>\n";
    return s;
  };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                w, h, w, h);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.3f\" y1=\"%.0f\" x2=\"%.3f\" y2=\"%.0f\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n",
                sx(M_PI), pad, sx(M_PI), h - pad);
  out += buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%.3f\" y=\"%.0f\" font-size=\"12\">theta = +-pi (z = -1)</text>\n",
                sx(M_PI) + 4, pad - 8);
  out += buf;
  out += polyline("steelblue", "|f|", &Pt::abs_f);
  out += polyline("firebrick", "Im f", &Pt::im_f);
  std::snprintf(buf, sizeof buf, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\" fill=\"steelblue\">|f|</text>\n",
                pad, h - 12);
  out += buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\" fill=\"firebrick\">Im f</text>\n",
                pad + 40, h - 12);
  out += buf;
  out += "</svg>\n";
  return out;
}

}  // namespace branch_audit
