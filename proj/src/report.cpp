#include "infsing/report.hpp"

#include <sstream>

namespace infsing {

using nlohmann::ordered_json;

namespace {

ordered_json optional_int(const std::optional<int>& v)
{
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json optional_long(const std::optional<long>& v)
{
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json rationals(const std::vector<Rational>& values)
{
    ordered_json out = ordered_json::array();
    for (const auto& v : values)
        out.push_back(v.get_str());
    return out;
}

ordered_json factors(const std::vector<UPoly>& fs)
{
    ordered_json out = ordered_json::array();
    for (const auto& f : fs)
        out.push_back(f.to_string("t"));
    return out;
}

ordered_json value_set(const ValueSet& v)
{
    return {{"values", rationals(v.values)}, {"unresolved", factors(v.unresolved)}};
}

ordered_json sourced(long value, const std::string& source)
{
    return {{"value", value}, {"source", source}};
}

std::string join_values(const ValueSet& v)
{
    std::string out;
    for (const auto& x : v.values) {
        if (!out.empty())
            out += ", ";
        out += x.get_str();
    }
    for (const auto& u : v.unresolved) {
        if (!out.empty())
            out += ", ";
        out += "roots of " + u.to_string("t");
    }
    return out.empty() ? "none" : out;
}

std::string opt(const std::optional<long>& v)
{
    return v ? std::to_string(*v) : "n/a";
}

} // namespace

ordered_json family_json(const FamilyFile& ff, const PolynomialFamily& fam)
{
    ordered_json j;
    j["name"] = ff.name;
    j["vars"] = ff.vars;
    j["param"] = ff.param;
    j["f"] = fam.P.to_string();
    j["degree"] = fam.degree;
    return j;
}

ordered_json ledger_json(const PolynomialLedger& L)
{
    ordered_json j;
    j["s"] = L.s.get_str();
    j["n"] = L.n;
    j["d"] = L.d;
    j["f"] = L.f;
    j["classification"] = to_string(L.classification.kind);
    j["dimensions"] = {{"affine_critical_locus", optional_int(L.classification.sing_dim)},
                       {"sigma", optional_int(L.classification.sigma_dim)},
                       {"w", optional_int(L.classification.w_dim)}};
    j["mu"] = sourced(static_cast<long>(L.mu_total), "total_mu");
    ordered_json sigma = ordered_json::array();
    for (const auto& r : L.records) {
        ordered_json p;
        p["point"] = r.point.to_string();
        p["mu_gen"] = r.mu_gen;
        p["mu_inf"] = r.mu_inf ? ordered_json(*r.mu_inf) : ordered_json(nullptr);
        ordered_json jumps = ordered_json::array();
        for (const auto& jp : r.jumps)
            jumps.push_back({{"t", jp.t.get_str()}, {"lambda", jp.lambda}});
        p["jumps"] = jumps;
        p["unresolved"] = factors(r.unresolved);
        p["irrational_lambda"] = r.irrational_lambda;
        auto lam = r.lambda();
        p["lambda"] = lam ? ordered_json(*lam) : ordered_json(nullptr);
        sigma.push_back(p);
    }
    j["sigma"] = sigma;
    ordered_json w = ordered_json::array();
    for (const auto& r : L.w_records)
        w.push_back({{"point", r.point.to_string()}, {"mu_inf", r.mu_inf}});
    j["w"] = w;
    j["chi_inf"] = optional_long(L.chi_inf);
    j["chi_smooth"] = L.n <= 3 ? ordered_json(chi_smooth(static_cast<int>(L.n), L.d)) : ordered_json(nullptr);
    j["betti_chi"] = optional_long(L.betti_chi);
    j["betti_mu"] = optional_long(L.betti_mu);
    j["betti"] = sourced(L.betti, L.betti_source);
    j["lambda"] = sourced(L.lambda_total, L.lambda_source);
    j["euler_generic_fiber"] = L.euler_generic_fiber;
    j["critical_values"] = value_set(L.critical_values);
    j["atypical"] = value_set(L.atypical);
    return j;
}

ordered_json sample_json(const SampleResult& r)
{
    if (r.ledger)
        return ledger_json(*r.ledger);
    ordered_json j;
    j["s"] = r.s.get_str();
    j["error"] = r.error;
    return j;
}

ordered_json finding_json(const Finding& f)
{
    ordered_json j;
    j["law"] = f.law;
    j["status"] = to_string(f.status);
    j["summary"] = f.summary;
    j["witness"] = f.witness;
    return j;
}

ordered_json analysis_report(const FamilyFile& ff, const PolynomialFamily& fam, const std::vector<SampleResult>& samples)
{
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = family_json(ff, fam);
    ordered_json ledgers = ordered_json::array();
    for (const auto& r : samples)
        ledgers.push_back(sample_json(r));
    j["ledgers"] = ledgers;
    j["findings"] = ordered_json::array();
    return j;
}

ordered_json audit_report(const FamilyFile& ff, const FamilyAudit& a)
{
    ordered_json j = analysis_report(ff, a.family, a.samples);
    ordered_json findings = ordered_json::array();
    for (const auto& f : a.findings)
        findings.push_back(finding_json(f));
    j["findings"] = findings;
    ordered_json derived;
    derived["mu_lambda_constant"] = a.mu_lambda_constant ? ordered_json(*a.mu_lambda_constant) : ordered_json(nullptr);
    derived["cgst"] = to_string(a.cgst_status);
    ordered_json dc = ordered_json::object();
    for (const auto& [s, v] : a.delta_chi)
        dc[s.get_str()] = optional_long(v);
    derived["delta_chi"] = dc;
    j["derived"] = derived;
    return j;
}

namespace {

void ledger_markdown(std::ostringstream& os, const SampleResult& r)
{
    os << "## s = " << r.s.get_str() << "\n\n";
    if (!r.ledger) {
        os << "No ledger: " << r.error << "\n\n";
        return;
    }
    const PolynomialLedger& L = *r.ledger;
    os << "f = " << L.f << "\n\n";
    os << "| quantity | value | source |\n|---|---|---|\n";
    os << "| classification | " << to_string(L.classification.kind) << " | dimension tests |\n";
    os << "| μ | " << L.mu_total << " | total_mu |\n";
    os << "| λ | " << L.lambda_total << " | " << L.lambda_source << " |\n";
    os << "| b_" << (L.n - 1) << " | " << L.betti << " | " << L.betti_source << " |\n";
    os << "| χ^∞ | " << opt(L.chi_inf) << " | chi_infinity |\n";
    os << "| b via χ^∞ / via μ^∞ | " << opt(L.betti_chi) << " / " << opt(L.betti_mu) << " | formulas |\n";
    os << "| χ(generic fibre) | " << L.euler_generic_fiber << " | 1 + (-1)^(n-1) b |\n";
    os << "| atypical values | " << join_values(L.atypical) << " | critical values and jumps |\n\n";
    if (!L.records.empty()) {
        os << "| point of Σ | μ_gen | μ^∞ | jumps (t: λ) | λ_p |\n|---|---|---|---|---|\n";
        for (const auto& rec : L.records) {
            std::string jumps;
            for (const auto& jp : rec.jumps) {
                if (!jumps.empty())
                    jumps += ", ";
                jumps += jp.t.get_str() + ": " + std::to_string(jp.lambda);
            }
            for (const auto& u : rec.unresolved) {
                if (!jumps.empty())
                    jumps += ", ";
                jumps += "roots of " + u.to_string("t");
            }
            auto lam = rec.lambda();
            os << "| " << rec.point.to_string() << " | " << rec.mu_gen << " | "
               << (rec.mu_inf ? std::to_string(*rec.mu_inf) : "-") << " | " << (jumps.empty() ? "none" : jumps)
               << " | " << (lam ? std::to_string(*lam) : "?") << " |\n";
        }
        os << "\n";
    } else {
        os << "Σ is empty.\n\n";
    }
}

void header(std::ostringstream& os, const FamilyFile& ff, const PolynomialFamily& fam)
{
    os << "# " << (ff.name.empty() ? "family" : ff.name) << "\n\n";
    os << "f_" << fam.param << " = " << fam.P.to_string() << ", n = " << fam.n() << ", d = " << fam.degree << "\n\n";
}

} // namespace

std::string analysis_markdown(const FamilyFile& ff, const PolynomialFamily& fam, const std::vector<SampleResult>& samples)
{
    std::ostringstream os;
    header(os, ff, fam);
    for (const auto& r : samples)
        ledger_markdown(os, r);
    return os.str();
}

std::string audit_markdown(const FamilyFile& ff, const FamilyAudit& a)
{
    std::ostringstream os;
    header(os, ff, a.family);
    os << "| s | class | μ | λ | b | χ^∞ |\n|---|---|---|---|---|---|\n";
    for (const auto& r : a.samples) {
        if (!r.ledger) {
            os << "| " << r.s.get_str() << " | error | | | | |\n";
            continue;
        }
        const auto& L = *r.ledger;
        os << "| " << L.s.get_str() << " | " << to_string(L.classification.kind) << " | " << L.mu_total << " | "
           << L.lambda_total << " | " << L.betti << " | " << opt(L.chi_inf) << " |\n";
    }
    os << "\n| check | status | summary |\n|---|---|---|\n";
    for (const auto& f : a.findings)
        os << "| " << f.law << " | " << to_string(f.status) << " | " << f.summary << " |\n";
    os << "\n";
    return os.str();
}

std::string dump(const ordered_json& j)
{
    return j.dump(2) + "\n";
}

} // namespace infsing
