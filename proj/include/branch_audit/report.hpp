#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "branch_audit/audit.hpp"
#include "branch_audit/paper_fn.hpp"

namespace branch_audit {

enum class OutputFormat { kJson, kCsv, kSvg };
const char* to_string(OutputFormat f);
OutputFormat output_format_from_string(const std::string& s);

struct RunConfig {
  int precision_bits = 40;
  Rational delta = Rational(1, 100);
  unsigned n_min = 8;
  unsigned n_max = 256;
  OutputFormat output = OutputFormat::kJson;
  bool literal_f = false;
  int max_depth = 12;

  /// 2^-precision_bits
  double precision_width() const;
  AuditConfig audit_config() const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json to_json(const RunConfig& c);
RunConfig run_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RealInterval& a);
nlohmann::json to_json(const ComplexBox& z);
nlohmann::json to_json(const AuditFinding& f);
nlohmann::json to_json(const ArcScanRow& r);
nlohmann::json to_json(const CertificateReport& c);
nlohmann::json to_json(const ZeroScan& z);

/// header (tool name and every config value), findings, paradox verdict,
/// containment certificates, sphere zero scan, arc rows.
nlohmann::json audit_json(const AuditReport& report, const RunConfig& config);

/// claim_id,status,theta_num,theta_den,re_lo,re_hi,im_lo,im_hi; one row
/// per probe, enclosure columns from the definitional side.
std::string audit_csv(const AuditReport& report);

/// n,side,theta_num,theta_den,re_lo,re_hi,im_lo,im_hi,in_D
std::string arc_rows_csv(const std::vector<ArcScanRow>& rows);

/// |f| and Im f against the unwrapped angle (lower arc shifted by 2 pi),
/// one polyline each.
std::string arc_svg(const std::vector<ArcScanRow>& rows);

}  // namespace branch_audit
