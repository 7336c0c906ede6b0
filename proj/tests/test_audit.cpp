#include "support.hpp"

#include "infsing/audit.hpp"
#include "infsing/family_file.hpp"

#include <doctest.h>

using namespace infsing;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

FamilyAudit run(const std::string& text, const std::vector<std::string>& vars, std::vector<Rational> samples = {})
{
    AuditConfig cfg;
    if (!samples.empty())
        cfg.samples = std::move(samples);
    return audit(PolynomialFamily::make(vars, "s", text), cfg);
}

const Finding& find(const FamilyAudit& a, const std::string& law)
{
    for (const auto& f : a.findings)
        if (f.law == law)
            return f;
    throw std::runtime_error("no finding " + law);
}

// A family audit assembled by hand so that the checkers can be driven with arbitrary ledgers.
FamilyAudit synthetic(std::vector<std::pair<long, long>> s_betti)
{
    FamilyAudit a;
    a.family = PolynomialFamily::make(XY, "s", "x^2 + y + s*x");
    for (auto [s, b] : s_betti) {
        SampleResult r;
        r.s = s;
        PolynomialLedger L;
        L.s = s;
        L.n = 2;
        L.betti = b;
        L.lambda_total = b;
        r.ledger = L;
        a.samples.push_back(r);
    }
    return a;
}
} // namespace

TEST_CASE("audit of the cubic product family")
{
    FamilyAudit a = run("(x*y)^3 + s*x*y + x", XY);
    CHECK(a.mu_lambda_constant == true);
    for (const auto& f : a.findings) {
        CAPTURE(f.law);
        if (f.law != "mu-loss" && f.law != "expected-values")
            CHECK(f.status == Status::Holds);
    }
    CHECK(find(a, "local-semicontinuity").witness["slack"] == 0);
    CHECK_FALSE(a.any_violated());
    CHECK(a.findings.size() == audit_laws().size());
}

TEST_CASE("audit of the mixed quintic family")
{
    FamilyAudit a = run("x*y^4 + s*(x*y)^2 + y", XY, {0, 1, Rational(1, 2)});
    CHECK(find(a, "global-semicontinuity").status == Status::Holds);
    CHECK(find(a, "global-semicontinuity").witness["betti"]["1"] == 7);
    CHECK(find(a, "lambda-upper-semicontinuity").status == Status::Inapplicable);
    const Finding& loss = find(a, "mu-loss");
    CHECK(loss.status == Status::Holds);
    CHECK(loss.witness["heuristic"] == true);
    CHECK(loss.witness.contains("case"));
}

TEST_CASE("audit of the quartic surface family")
{
    FamilyAudit a = run("x^4 + s*z^4 + z^3 + y", XYZ, {0, 1, 2});
    CHECK(a.mu_lambda_constant == true);
    CHECK(a.cgst_status == Status::Violated);
    CHECK(find(a, "cgst").status == Status::Violated);
    CHECK(find(a, "persistence").status == Status::Inapplicable);
    CHECK(find(a, "delta-chi").status == Status::Holds);
    CHECK(find(a, "mu-loss").status == Status::Inapplicable);
    REQUIRE(a.delta_chi.size() == 2);
    for (const auto& [s, d] : a.delta_chi)
        CHECK(d == -3);
    CHECK_FALSE(a.any_violated());
}

TEST_CASE("audit of the cubic surface family")
{
    FamilyAudit a = run("x^2*y + x + z^2 + s*z^3", XYZ, {0, 1, 2});
    CHECK(a.mu_lambda_constant == false);
    CHECK(find(a, "cgst").status == Status::Holds);
    CHECK(find(a, "persistence").status == Status::Holds);
    CHECK(find(a, "lambda-upper-semicontinuity").status == Status::Inapplicable);
    CHECK(find(a, "delta-chi").status == Status::Holds);
    for (const auto& [s, d] : a.delta_chi)
        CHECK(d == 1);
}

TEST_CASE("audit of the two-point family")
{
    FamilyAudit a = run("x^4 + s*z^4 + z^2*y + z", XYZ, {0, 1});
    CHECK(a.mu_lambda_constant == true);
    CHECK(find(a, "lambda-upper-semicontinuity").status == Status::Holds);
    CHECK(find(a, "delta-chi").status == Status::Holds);
    CHECK(a.delta_chi.front().second == -3);
    const Finding& cgst = find(a, "cgst");
    CHECK(cgst.status == Status::Violated);
}

TEST_CASE("local semicontinuity slack on the excess families")
{
    struct Case {
        int b, k;
        long slack;
    };
    for (Case c : {Case{4, 3, 2}, Case{4, 4, 4}, Case{5, 2, 0}, Case{6, 2, 0}}) {
        CAPTURE(c.b);
        CAPTURE(c.k);
        std::string f = "x^2*y^" + std::to_string(c.b) + " + x + s*x*y^" + std::to_string(c.k);
        FamilyAudit a = run(f, XY, {0, 1, 2});
        const Finding& loc = find(a, "local-semicontinuity");
        CHECK(loc.status == Status::Holds);
        CHECK(loc.witness["slack"] == c.slack);
        if (2 * c.k > c.b)
            CHECK(find(a, "f-class-lambda-rule").status == Status::Inapplicable);
        CHECK(find(a, "mu-loss").status == Status::Holds);
    }
}

TEST_CASE("global semicontinuity checker reports a synthetic violation")
{
    FamilyAudit bad = synthetic({{0, 5}, {1, 3}});
    CHECK(check_global_semicontinuity(bad).status == Status::Violated);
    FamilyAudit good = synthetic({{0, 3}, {1, 3}, {2, 4}});
    CHECK(check_global_semicontinuity(good).status == Status::Holds);
}

TEST_CASE("missing samples downgrade holds to indeterminate")
{
    FamilyAudit a = synthetic({{0, 3}, {1, 3}});
    SampleResult broken;
    broken.s = 2;
    broken.error_kind = SampleError::Unsupported;
    broken.error = "irrational locus";
    a.samples.push_back(broken);
    CHECK(check_global_semicontinuity(a).status == Status::Indeterminate);
    FamilyAudit no_base = synthetic({{1, 3}});
    CHECK(check_global_semicontinuity(no_base).status == Status::Indeterminate);
}

TEST_CASE("expected values")
{
    PolynomialFamily fam = PolynomialFamily::make(XY, "s", "(x*y)^3 + s*x*y + x");
    AuditConfig cfg;
    cfg.samples = {0, 1};
    FamilyAudit ok = audit(fam, cfg, {{"mu", 1, "1"}, {"lambda", 0, "3"}});
    CHECK(find(ok, "expected-values").status == Status::Holds);
    FamilyAudit bad = audit(fam, cfg, {{"lambda", 1, "3"}});
    CHECK(find(bad, "expected-values").status == Status::Violated);
    CHECK(bad.any_violated());
    CHECK_THROWS(audit(fam, cfg, {{"colour", 1, "red"}}));
}

TEST_CASE("audit configuration")
{
    AuditConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.samples = {1, 2};
    CHECK_THROWS(cfg.validate());
    AuditConfig off;
    off.disabled.insert("mu-loss");
    off.samples = {0, 1};
    FamilyAudit a = audit(PolynomialFamily::make(XY, "s", "(x*y)^3 + s*x*y + x"), off);
    for (const auto& f : a.findings)
        CHECK(f.law != "mu-loss");
    off.disabled.insert("no-such-law");
    CHECK_THROWS(off.validate());
}

TEST_CASE("property: audits are pure functions of family and configuration")
{
    FamilyAudit a = run("(x*y)^4 + s*(x*y)^2 + x", XY, {0, 1, 2});
    FamilyAudit b = run("(x*y)^4 + s*(x*y)^2 + x", XY, {0, 1, 2});
    REQUIRE(a.findings.size() == b.findings.size());
    for (std::size_t i = 0; i < a.findings.size(); ++i) {
        CHECK(a.findings[i].law == b.findings[i].law);
        CHECK(a.findings[i].status == b.findings[i].status);
        CHECK(a.findings[i].witness == b.findings[i].witness);
    }
    CHECK(find(a, "f-class-lambda-rule").status == Status::Holds);
    CHECK(find(a, "persistence").status == Status::Holds);
}

TEST_CASE("family files")
{
    FamilyFile ff = parse_family_file("# demo\nname = demo\nvars = x, y\nf = (x*y)^3 + s*x*y + x\n"
                                      "degree = 6\nsamples = 0, 1/2\nexpect.mu.1/2 = 1\n");
    CHECK(ff.name == "demo");
    CHECK(ff.vars == XY);
    CHECK(ff.param == "s");
    REQUIRE(ff.samples.has_value());
    CHECK(*ff.samples == std::vector<Rational>{0, Rational(1, 2)});
    REQUIRE(ff.expectations.size() == 1);
    CHECK(ff.expectations[0].s == Rational(1, 2));
    CHECK(ff.family().degree == 6);

    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_family_file(text);
        } catch (const FamilyFileError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("vars = x, y\nf = x\nf = y\n") == 3);
    CHECK(line_of("vars = x, y\nbogus = 1\nf = x\n") == 2);
    CHECK(line_of("vars = x, y\nno equals sign\n") == 2);
    CHECK(line_of("vars = x, y\nf = x\nexpect.colour.1 = red\n") == 3);
    CHECK_THROWS_AS(parse_family_file("vars = x, y\n"), FamilyFileError);
}
