#pragma once

#include "infsing/audit.hpp"
#include "infsing/family_file.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace infsing {

inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json family_json(const FamilyFile& ff, const PolynomialFamily& fam);
nlohmann::ordered_json ledger_json(const PolynomialLedger& L);
nlohmann::ordered_json sample_json(const SampleResult& r);
nlohmann::ordered_json finding_json(const Finding& f);

/// {schema_version, family, ledgers, findings}; findings is empty for plain analyses.
nlohmann::ordered_json analysis_report(const FamilyFile& ff, const PolynomialFamily& fam,
                                       const std::vector<SampleResult>& samples);
nlohmann::ordered_json audit_report(const FamilyFile& ff, const FamilyAudit& a);

std::string analysis_markdown(const FamilyFile& ff, const PolynomialFamily& fam,
                              const std::vector<SampleResult>& samples);
std::string audit_markdown(const FamilyFile& ff, const FamilyAudit& a);

/// Serialized form used for files and golden comparisons (two-space indent, trailing newline).
std::string dump(const nlohmann::ordered_json& j);

} // namespace infsing
