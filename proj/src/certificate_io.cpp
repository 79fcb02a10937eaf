#include "minimax/certificate_io.hpp"

#include <cstdlib>
#include <ctime>

namespace minimax {

std::string reproducible_timestamp() {
  std::time_t when = std::time(nullptr);
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long parsed = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0') {
      when = static_cast<std::time_t>(parsed);
    }
  }
  std::tm utc{};
  gmtime_r(&when, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

CertificateDocument make_document(const Certificate& cert) {
  CertificateDocument doc;
  doc.schema_version = kSchemaVersion;
  doc.p = cert.p;
  doc.a = cert.a;
  doc.b = cert.b;
  doc.status = status_name(cert.status);
  for (const BranchMargin& m : cert.branch_margins) {
    CertificateDocument::Branch branch;
    branch.name = m.name;
    branch.margin_lo = m.margin.lo;
    branch.margin_hi = m.margin.hi;
    branch.has_window = m.has_window;
    branch.window_lo = m.window_lo;
    branch.window_hi = m.window_hi;
    doc.branches.push_back(branch);
  }
  for (const PositivityCertificate& part : cert.artifacts) {
    CertificateDocument::Artifact artifact;
    artifact.domain_lo = part.domain.lo;
    artifact.domain_hi = part.domain.hi;
    artifact.splits = part.splits;
    artifact.min_lo = part.min_enclosure.lo;
    doc.positivity_artifacts.push_back(artifact);
  }
  doc.tool_version = kToolVersion;
  doc.timestamp = reproducible_timestamp();
  return doc;
}

nlohmann::ordered_json to_json(const CertificateDocument& doc) {
  nlohmann::ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["p"] = doc.p;
  j["a"] = doc.a;
  j["b"] = doc.b;
  j["status"] = doc.status;
  j["branches"] = nlohmann::ordered_json::array();
  for (const CertificateDocument::Branch& b : doc.branches) {
    nlohmann::ordered_json jb;
    jb["name"] = b.name;
    jb["margin_lo"] = b.margin_lo;
    jb["margin_hi"] = b.margin_hi;
    if (b.has_window) {
      jb["window"] = nlohmann::ordered_json::array({b.window_lo, b.window_hi});
    } else {
      jb["window"] = nullptr;
    }
    j["branches"].push_back(jb);
  }
  j["positivity_artifacts"] = nlohmann::ordered_json::array();
  for (const CertificateDocument::Artifact& a : doc.positivity_artifacts) {
    nlohmann::ordered_json ja;
    ja["domain_lo"] = a.domain_lo;
    ja["domain_hi"] = a.domain_hi;
    ja["splits"] = a.splits;
    ja["min_lo"] = a.min_lo;
    j["positivity_artifacts"].push_back(ja);
  }
  j["tool_version"] = doc.tool_version;
  j["timestamp"] = doc.timestamp;
  return j;
}

CertificateDocument document_from_json(const nlohmann::ordered_json& j) {
  CertificateDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  doc.p = j.at("p").get<int>();
  doc.a = j.at("a").get<double>();
  doc.b = j.at("b").get<double>();
  doc.status = j.at("status").get<std::string>();
  for (const auto& jb : j.at("branches")) {
    CertificateDocument::Branch b;
    b.name = jb.at("name").get<std::string>();
    b.margin_lo = jb.at("margin_lo").get<double>();
    b.margin_hi = jb.at("margin_hi").get<double>();
    if (!jb.at("window").is_null()) {
      b.has_window = true;
      b.window_lo = jb.at("window").at(0).get<double>();
      b.window_hi = jb.at("window").at(1).get<double>();
    }
    doc.branches.push_back(b);
  }
  for (const auto& ja : j.at("positivity_artifacts")) {
    CertificateDocument::Artifact a;
    a.domain_lo = ja.at("domain_lo").get<double>();
    a.domain_hi = ja.at("domain_hi").get<double>();
    a.splits = ja.at("splits").get<int>();
    a.min_lo = ja.at("min_lo").get<double>();
    doc.positivity_artifacts.push_back(a);
  }
  doc.tool_version = j.at("tool_version").get<std::string>();
  doc.timestamp = j.at("timestamp").get<std::string>();
  return doc;
}

std::string render_certificate(const Certificate& cert) {
  return to_json(make_document(cert)).dump(2) + "\n";
}

}  // namespace minimax
