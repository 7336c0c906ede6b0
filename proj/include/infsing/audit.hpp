#pragma once

#include "infsing/infinity.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace infsing {

enum class Status { Holds, Violated, Inapplicable, Indeterminate };
std::string to_string(Status s);

struct Finding {
    std::string law;
    Status status = Status::Indeterminate;
    std::string summary;
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();
};

struct AuditConfig {
    std::vector<Rational> samples{Rational(0), Rational(1), Rational(1, 2), Rational(2), Rational(-1, 3)};
    std::vector<Rational> shrink{Rational(1, 2), Rational(1, 4), Rational(1, 8)};
    std::uint64_t seed = kDefaultSeed;
    std::set<std::string> disabled;

    /// Throws std::invalid_argument unless 0 is a sample and samples are distinct.
    void validate() const;
    bool enabled(const std::string& law) const { return !disabled.count(law); }
};

/// Law identifiers, usable in AuditConfig::disabled.
inline const std::vector<std::string>& audit_laws()
{
    static const std::vector<std::string> laws{
        "global-semicontinuity", "lambda-upper-semicontinuity", "local-conservation", "local-semicontinuity",
        "cgst",                  "persistence",                 "f-class-lambda-rule", "delta-chi",
        "mu-loss",               "expected-values"};
    return laws;
}

enum class SampleError { None, Unsupported, Inconsistent, Other };

struct SampleResult {
    Rational s;
    std::optional<PolynomialLedger> ledger;
    SampleError error_kind = SampleError::None;
    std::string error;
};

/// One line of an expected-values block: quantity at s should print as value.
struct Expectation {
    std::string quantity;
    Rational s;
    std::string value;
};

/// Quantities accepted in expectations.
const std::vector<std::string>& expectation_quantities();
/// Renders a ledger quantity the way expectations are written.
std::string ledger_quantity(const PolynomialLedger& L, const std::string& quantity);

struct FamilyAudit {
    PolynomialFamily family;
    AuditConfig config;
    std::vector<SampleResult> samples;  // ascending s
    std::vector<Finding> findings;
    std::optional<bool> mu_lambda_constant;
    Status cgst_status = Status::Indeterminate;
    std::vector<std::pair<Rational, std::optional<long>>> delta_chi;

    const PolynomialLedger* ledger(const Rational& s) const;
    bool any_violated() const;
    bool any_inconsistent() const;
};

/// Ledgers for every sample, computed concurrently, returned in ascending s.
std::vector<SampleResult> compute_ledgers(const PolynomialFamily& family, std::vector<Rational> samples,
                                          std::uint64_t seed);

FamilyAudit audit(const PolynomialFamily& family, const AuditConfig& config,
                  const std::vector<Expectation>& expectations = {});

Finding check_global_semicontinuity(const FamilyAudit& a);
std::vector<Finding> check_conservation(const FamilyAudit& a);
Finding check_local_semicontinuity(const FamilyAudit& a);
Finding check_cgst(const FamilyAudit& a);
Finding check_persistence(const FamilyAudit& a);
Finding check_F_class_lambda_rule(const FamilyAudit& a);
Finding delta_chi_deductions(const FamilyAudit& a);
Finding classify_mu_loss(const FamilyAudit& a, const std::vector<Rational>& shrink);
Finding check_expectations(const FamilyAudit& a, const std::vector<Expectation>& expectations);

std::optional<bool> mu_lambda_constant(const FamilyAudit& a);

/// Status of the constant generic singularity type condition between s = 0
/// and one other sample, with a per-point breakdown.
Status cgst_between(const PolynomialLedger& base, const PolynomialLedger& other, nlohmann::ordered_json* detail);

} // namespace infsing
