#include "infsing/cli.hpp"

#include "infsing/ideal.hpp"
#include "infsing/parser.hpp"
#include "infsing/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace infsing {

namespace {

struct Options {
    std::string file;
    std::vector<std::string> s_values;
    std::string samples;
    std::string json_path;
    std::string format = "markdown";
    std::uint64_t seed = kDefaultSeed;
    std::vector<std::string> disabled;
};

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

int exit_for(const std::vector<SampleResult>& samples)
{
    int code = kExitOk;
    for (const auto& r : samples) {
        if (r.error_kind == SampleError::Inconsistent)
            return kExitInconsistent;
        if (r.error_kind != SampleError::None)
            code = kExitUnsupported;
    }
    return code;
}

void report_errors(const std::vector<SampleResult>& samples, std::ostream& err)
{
    for (const auto& r : samples)
        if (!r.ledger)
            err << "s = " << r.s.get_str() << ": " << r.error << "\n";
}

Rational single_s(const Options& o)
{
    if (o.s_values.size() != 1)
        throw std::invalid_argument("exactly one --s value is required");
    return parse_rational(o.s_values.front());
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err)
{
    FamilyFile ff = load_family_file(o.file);
    PolynomialFamily fam = ff.family();
    std::vector<Rational> samples;
    for (const auto& s : o.s_values)
        samples.push_back(parse_rational(s));
    if (samples.empty())
        samples = ff.samples ? *ff.samples : AuditConfig{}.samples;
    auto results = compute_ledgers(fam, samples, o.seed);
    if (!o.json_path.empty())
        write_file(o.json_path, dump(analysis_report(ff, fam, results)));
    if (o.format == "json")
        out << dump(analysis_report(ff, fam, results));
    else
        out << analysis_markdown(ff, fam, results);
    report_errors(results, err);
    return exit_for(results);
}

int cmd_audit(const Options& o, std::ostream& out, std::ostream& err)
{
    FamilyFile ff = load_family_file(o.file);
    PolynomialFamily fam = ff.family();
    AuditConfig cfg;
    if (!o.samples.empty())
        cfg.samples = parse_rational_list(o.samples);
    else if (ff.samples)
        cfg.samples = *ff.samples;
    cfg.seed = o.seed;
    cfg.disabled.insert(o.disabled.begin(), o.disabled.end());
    FamilyAudit a = audit(fam, cfg, ff.expectations);
    if (!o.json_path.empty())
        write_file(o.json_path, dump(audit_report(ff, a)));
    if (o.format == "json")
        out << dump(audit_report(ff, a));
    else
        out << audit_markdown(ff, a);
    report_errors(a.samples, err);
    if (a.any_violated())
        return kExitContradiction;
    if (a.any_inconsistent())
        return kExitInconsistent;
    return kExitOk;
}

int cmd_mu(const Options& o, std::ostream& out, std::ostream&)
{
    FamilyFile ff = load_family_file(o.file);
    QPoly f = ff.family().member(single_s(o));
    auto mu = total_mu(f);
    if (!mu)
        throw UnsupportedInput("non-isolated affine critical locus");
    out << *mu << "\n";
    return kExitOk;
}

int cmd_lambda(const Options& o, std::ostream& out, std::ostream&)
{
    FamilyFile ff = load_family_file(o.file);
    PolynomialLedger L = build_ledger(ff.family(), single_s(o), o.seed);
    out << L.lambda_total << "\n";
    return kExitOk;
}

int cmd_atypical(const Options& o, std::ostream& out, std::ostream&)
{
    FamilyFile ff = load_family_file(o.file);
    PolynomialLedger L = build_ledger(ff.family(), single_s(o), o.seed);
    std::string line;
    for (const auto& v : L.atypical.values) {
        if (!line.empty())
            line += ", ";
        line += v.get_str();
    }
    for (const auto& u : L.atypical.unresolved) {
        if (!line.empty())
            line += ", ";
        line += "roots of " + u.to_string("t");
    }
    out << line << "\n";
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Singularities at infinity of polynomial families"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "family file")->required();
        sub->add_option("--seed", o.seed, "seed for generic witnesses");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "ledger of invariants for each s");
    add_common(analyze);
    analyze->add_option("--s", o.s_values, "parameter value (repeatable)");
    analyze->add_option("--json", o.json_path, "write the JSON report here");
    analyze->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"markdown", "json"}));

    CLI::App* aud = app.add_subcommand("audit", "check the deformation laws over sampled s");
    add_common(aud);
    aud->add_option("--samples", o.samples, "comma-separated s values (must include 0)");
    aud->add_option("--json", o.json_path, "write the JSON report here");
    aud->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"markdown", "json"}));
    aud->add_option("--disable", o.disabled, "skip a check (repeatable)");

    CLI::App* mu = app.add_subcommand("mu", "total affine Milnor number");
    CLI::App* lambda = app.add_subcommand("lambda", "total Milnor-Le number at infinity");
    CLI::App* atyp = app.add_subcommand("atypical", "atypical values");
    for (CLI::App* sub : {mu, lambda, atyp}) {
        add_common(sub);
        sub->add_option("--s", o.s_values, "parameter value")->required();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUnsupported;
    }

    try {
        if (*analyze)
            return cmd_analyze(o, out, err);
        if (*aud)
            return cmd_audit(o, out, err);
        if (*mu)
            return cmd_mu(o, out, err);
        if (*lambda)
            return cmd_lambda(o, out, err);
        if (*atyp)
            return cmd_atypical(o, out, err);
    } catch (const Inconsistency& e) {
        err << "inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const UnsupportedInput& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInconsistent;
    }
    return kExitUnsupported;
}

} // namespace infsing
