#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "minimax/certify.hpp"

namespace minimax {

// Flat, serialization-ready view of a Certificate. Key order in the JSON
// output follows the field order here and never changes, so identical runs
// produce identical bytes.
struct CertificateDocument {
  std::string schema_version;
  int p = 0;
  double a = 0.0;
  double b = 0.0;
  std::string status;

  struct Branch {
    std::string name;
    double margin_lo = 0.0;
    double margin_hi = 0.0;
    bool has_window = false;
    double window_lo = 0.0;
    double window_hi = 0.0;
  };
  std::vector<Branch> branches;

  struct Artifact {
    double domain_lo = 0.0;
    double domain_hi = 0.0;
    int splits = 0;
    double min_lo = 0.0;
  };
  std::vector<Artifact> positivity_artifacts;

  std::string tool_version;
  std::string timestamp;
};

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "minimax_cert 1.0.0";

// SOURCE_DATE_EPOCH (seconds since the Unix epoch) when set, wall clock
// otherwise; rendered as UTC ISO 8601. Exporting the variable makes
// repeated runs byte-identical.
std::string reproducible_timestamp();

CertificateDocument make_document(const Certificate& cert);

nlohmann::ordered_json to_json(const CertificateDocument& doc);
CertificateDocument document_from_json(const nlohmann::ordered_json& j);

// Two-space indented JSON with a trailing newline.
std::string render_certificate(const Certificate& cert);

}  // namespace minimax
