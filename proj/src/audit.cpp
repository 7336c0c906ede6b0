#include "infsing/audit.hpp"

#include "infsing/ideal.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

namespace infsing {

using nlohmann::ordered_json;

std::string to_string(Status s)
{
    switch (s) {
    case Status::Holds:
        return "holds";
    case Status::Violated:
        return "violated";
    case Status::Inapplicable:
        return "inapplicable";
    case Status::Indeterminate:
        return "indeterminate";
    }
    return "?";
}

void AuditConfig::validate() const
{
    if (std::find(samples.begin(), samples.end(), Rational(0)) == samples.end())
        throw std::invalid_argument("the sample list must contain 0");
    std::vector<Rational> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("sample values must be pairwise distinct");
    for (const auto& law : disabled)
        if (std::find(audit_laws().begin(), audit_laws().end(), law) == audit_laws().end())
            throw std::invalid_argument("unknown check '" + law + "'");
}

const std::vector<std::string>& expectation_quantities()
{
    static const std::vector<std::string> q{"mu",           "lambda",      "betti",    "chi_inf", "classification",
                                            "sigma_count", "mu_gen_sum", "atypical"};
    return q;
}

std::string ledger_quantity(const PolynomialLedger& L, const std::string& quantity)
{
    if (quantity == "mu")
        return std::to_string(L.mu_total);
    if (quantity == "lambda")
        return std::to_string(L.lambda_total);
    if (quantity == "betti")
        return std::to_string(L.betti);
    if (quantity == "chi_inf")
        return L.chi_inf ? std::to_string(*L.chi_inf) : "n/a";
    if (quantity == "classification")
        return to_string(L.classification.kind);
    if (quantity == "sigma_count")
        return std::to_string(L.records.size());
    if (quantity == "mu_gen_sum")
        return std::to_string(L.sum_mu_gen());
    if (quantity == "atypical") {
        std::string out;
        for (const auto& v : L.atypical.values) {
            if (!out.empty())
                out += ", ";
            out += v.get_str();
        }
        return out;
    }
    throw std::invalid_argument("unknown quantity '" + quantity + "'");
}

const PolynomialLedger* FamilyAudit::ledger(const Rational& s) const
{
    for (const auto& r : samples)
        if (r.s == s)
            return r.ledger ? &*r.ledger : nullptr;
    return nullptr;
}

bool FamilyAudit::any_violated() const
{
    // A family that is not cgst is a fact about the family, not a contradicted law.
    return std::any_of(findings.begin(), findings.end(),
                       [](const Finding& f) { return f.status == Status::Violated && f.law != "cgst"; });
}

bool FamilyAudit::any_inconsistent() const
{
    return std::any_of(samples.begin(), samples.end(),
                       [](const SampleResult& r) { return r.error_kind == SampleError::Inconsistent; });
}

std::vector<SampleResult> compute_ledgers(const PolynomialFamily& family, std::vector<Rational> samples,
                                          std::uint64_t seed)
{
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    std::vector<std::future<SampleResult>> jobs;
    for (const auto& s : samples) {
        jobs.push_back(std::async(std::launch::async, [&family, s, seed] {
            SampleResult r;
            r.s = s;
            try {
                r.ledger = build_ledger(family, s, seed);
            } catch (const UnsupportedInput& e) {
                r.error_kind = SampleError::Unsupported;
                r.error = e.what();
            } catch (const Inconsistency& e) {
                r.error_kind = SampleError::Inconsistent;
                r.error = e.what();
            } catch (const std::exception& e) {
                r.error_kind = SampleError::Other;
                r.error = e.what();
            }
            return r;
        }));
    }
    std::vector<SampleResult> out;
    for (auto& j : jobs)
        out.push_back(j.get());
    return out;
}

namespace {

struct View {
    const PolynomialLedger* base = nullptr;
    std::vector<const PolynomialLedger*> others;  // nonzero samples with ledgers
    std::vector<std::string> missing;             // samples without ledgers
};

View view_of(const FamilyAudit& a)
{
    View v;
    for (const auto& r : a.samples) {
        if (!r.ledger) {
            v.missing.push_back(r.s.get_str());
            continue;
        }
        if (sgn(r.s) == 0)
            v.base = &*r.ledger;
        else
            v.others.push_back(&*r.ledger);
    }
    return v;
}

Finding make(const std::string& law, Status status, std::string summary)
{
    Finding f;
    f.law = law;
    f.status = status;
    f.summary = std::move(summary);
    return f;
}

/// A "holds" verdict over incomplete data is downgraded to indeterminate.
Finding finish(Finding f, const View& v)
{
    if (!v.missing.empty()) {
        f.witness["missing_samples"] = v.missing;
        if (f.status == Status::Holds) {
            f.status = Status::Indeterminate;
            f.summary += " (some samples have no ledger)";
        }
    }
    return f;
}

Finding no_base(const std::string& law)
{
    return make(law, Status::Indeterminate, "no ledger at s = 0");
}

std::vector<ProjectivePoint> sigma_of(const PolynomialLedger& L)
{
    std::vector<ProjectivePoint> out;
    for (const auto& r : L.records)
        out.push_back(r.point);
    return out;
}

const InfinitySingularityRecord* record_at(const PolynomialLedger& L, const ProjectivePoint& p)
{
    for (const auto& r : L.records)
        if (r.point == p)
            return &r;
    return nullptr;
}

bool sigma_constant(const View& v)
{
    for (const auto* L : v.others)
        if (sigma_of(*L) != sigma_of(*v.base))
            return false;
    return true;
}

long positive_part(long x)
{
    return x > 0 ? x : 0;
}

std::string points_string(const std::vector<ProjectivePoint>& pts)
{
    std::string out;
    for (const auto& p : pts) {
        if (!out.empty())
            out += ", ";
        out += p.to_string();
    }
    return "{" + out + "}";
}

} // namespace

std::optional<bool> mu_lambda_constant(const FamilyAudit& a)
{
    View v = view_of(a);
    if (!v.base)
        return std::nullopt;
    for (const auto* L : v.others)
        if (L->betti != v.base->betti)
            return false;
    if (!v.missing.empty())
        return std::nullopt;
    return true;
}

Finding check_global_semicontinuity(const FamilyAudit& a)
{
    const std::string law = "global-semicontinuity";
    View v = view_of(a);
    if (!v.base)
        return no_base(law);
    Finding f = make(law, Status::Holds, "b(s) >= b(0) at every nonzero sample");
    f.witness["betti_0"] = v.base->betti;
    ordered_json per = ordered_json::object();
    for (const auto* L : v.others) {
        per[L->s.get_str()] = L->betti;
        if (L->betti < v.base->betti) {
            f.status = Status::Violated;
            f.summary = "b(" + L->s.get_str() + ") = " + std::to_string(L->betti) + " < b(0) = " +
                        std::to_string(v.base->betti);
        }
    }
    f.witness["betti"] = per;
    return finish(f, v);
}

std::vector<Finding> check_conservation(const FamilyAudit& a)
{
    View v = view_of(a);
    std::vector<Finding> out;
    if (!v.base) {
        out.push_back(no_base("lambda-upper-semicontinuity"));
        out.push_back(no_base("local-conservation"));
        return out;
    }
    auto constant = mu_lambda_constant(a);
    if (constant != true) {
        std::string why = constant == false ? "mu + lambda is not constant" : "mu + lambda constancy undetermined";
        out.push_back(make("lambda-upper-semicontinuity", constant == false ? Status::Inapplicable : Status::Indeterminate, why));
        out.push_back(make("local-conservation", constant == false ? Status::Inapplicable : Status::Indeterminate, why));
        return out;
    }

    Finding up = make("lambda-upper-semicontinuity", Status::Holds, "lambda(s) <= lambda(0) at every sample");
    up.witness["lambda_0"] = v.base->lambda_total;
    ordered_json per = ordered_json::object();
    for (const auto* L : v.others) {
        per[L->s.get_str()] = L->lambda_total;
        if (L->lambda_total > v.base->lambda_total) {
            up.status = Status::Violated;
            up.summary = "lambda(" + L->s.get_str() + ") = " + std::to_string(L->lambda_total) + " > lambda(0) = " +
                         std::to_string(v.base->lambda_total);
        }
    }
    up.witness["lambda"] = per;
    out.push_back(finish(up, v));

    Finding loc = make("local-conservation", Status::Holds,
                       "per-point lambda deficits are non-negative and add up to the affine mu gained");
    loc.witness["note"] = "affine critical points are not tracked individually; the gained mu is compared in aggregate";
    if (!sigma_constant(v)) {
        loc.status = Status::Indeterminate;
        loc.summary = "Σ changes between samples; per-point conservation not attempted";
        out.push_back(loc);
        return out;
    }
    ordered_json details = ordered_json::array();
    for (const auto* L : v.others) {
        ordered_json row;
        row["s"] = L->s.get_str();
        long total = 0;
        bool known = true;
        ordered_json deficits = ordered_json::object();
        for (const auto& r0 : v.base->records) {
            const auto* rs = record_at(*L, r0.point);
            auto l0 = r0.lambda();
            auto ls = rs ? rs->lambda() : std::nullopt;
            if (!l0 || !ls) {
                known = false;
                deficits[r0.point.to_string()] = nullptr;
                continue;
            }
            long deficit = static_cast<long>(*l0) - static_cast<long>(*ls);
            deficits[r0.point.to_string()] = deficit;
            total += deficit;
            if (deficit < 0) {
                loc.status = Status::Violated;
                loc.summary = "lambda grows at " + r0.point.to_string() + " for s = " + L->s.get_str();
            }
        }
        long gained = static_cast<long>(L->mu_total) - static_cast<long>(v.base->mu_total);
        row["deficits"] = deficits;
        row["mu_gained"] = gained;
        if (!known) {
            if (loc.status == Status::Holds) {
                loc.status = Status::Indeterminate;
                loc.summary = "per-point lambda not attributable (irrational jump values at several points)";
            }
        } else if (total != gained) {
            loc.status = Status::Violated;
            loc.summary = "lambda deficits sum to " + std::to_string(total) + " but mu grows by " +
                          std::to_string(gained) + " at s = " + L->s.get_str();
        }
        details.push_back(row);
    }
    loc.witness["samples"] = details;
    out.push_back(finish(loc, v));
    return out;
}

Finding check_local_semicontinuity(const FamilyAudit& a)
{
    const std::string law = "local-semicontinuity";
    View v = view_of(a);
    if (!v.base)
        return no_base(law);
    if (!sigma_constant(v))
        return finish(make(law, Status::Indeterminate, "Σ changes between samples; points cannot be matched"), v);
    Finding f = make(law, Status::Holds, "lambda_p(0) <= lambda_p(s) + (mu(s) - mu(0))^+ at every point and sample");
    f.witness["note"] = "escaping affine mu is bounded in aggregate by (mu(s) - mu(0))^+";
    ordered_json rows = ordered_json::array();
    std::optional<long> slack;
    for (const auto* L : v.others) {
        long escaped = positive_part(static_cast<long>(L->mu_total) - static_cast<long>(v.base->mu_total));
        long here = L->lambda_total + escaped - v.base->lambda_total;
        ordered_json row;
        row["s"] = L->s.get_str();
        row["slack"] = here;
        if (here < 0) {
            f.status = Status::Violated;
            f.summary = "aggregate inequality fails at s = " + L->s.get_str();
        }
        for (const auto& r0 : v.base->records) {
            const auto* rs = record_at(*L, r0.point);
            auto l0 = r0.lambda();
            auto ls = rs ? rs->lambda() : std::nullopt;
            if (l0 && ls && static_cast<long>(*l0) > static_cast<long>(*ls) + escaped) {
                f.status = Status::Violated;
                f.summary = "inequality fails at " + r0.point.to_string() + " for s = " + L->s.get_str();
            }
        }
        rows.push_back(row);
        slack = slack ? std::min(*slack, here) : here;
    }
    f.witness["samples"] = rows;
    if (slack)
        f.witness["slack"] = *slack;
    return finish(f, v);
}

Status cgst_between(const PolynomialLedger& base, const PolynomialLedger& other, ordered_json* detail)
{
    auto sigma0 = sigma_of(base);
    auto sigmas = sigma_of(other);
    bool new_points = std::any_of(sigmas.begin(), sigmas.end(), [&](const ProjectivePoint& q) {
        return std::find(sigma0.begin(), sigma0.end(), q) == sigma0.end();
    });
    Status overall = Status::Holds;
    for (const auto& r0 : base.records) {
        const auto* rs = record_at(other, r0.point);
        Status st;
        std::string why;
        if (rs && rs->mu_gen == r0.mu_gen) {
            st = Status::Holds;
        } else if (rs) {
            st = Status::Violated;
            why = "mu_gen " + std::to_string(r0.mu_gen) + " -> " + std::to_string(rs->mu_gen);
        } else if (!new_points) {
            st = Status::Violated;
            why = "point disappears";
        } else {
            st = Status::Indeterminate;
            why = "point moves or splits";
        }
        if (detail) {
            ordered_json row;
            row["point"] = r0.point.to_string();
            row["status"] = to_string(st);
            if (!why.empty())
                row["reason"] = why;
            detail->push_back(row);
        }
        if (st == Status::Violated)
            overall = Status::Violated;
        else if (st == Status::Indeterminate && overall == Status::Holds)
            overall = Status::Indeterminate;
    }
    if (new_points && overall == Status::Holds)
        overall = Status::Indeterminate;
    return overall;
}

Finding check_cgst(const FamilyAudit& a)
{
    const std::string law = "cgst";
    View v = view_of(a);
    if (!v.base)
        return no_base(law);
    Finding f = make(law, Status::Holds, "generic Milnor number constant at every point of Σ_0");
    ordered_json rows = ordered_json::array();
    std::map<std::string, Status> per_point;
    for (const auto* L : v.others) {
        ordered_json detail = ordered_json::array();
        Status st = cgst_between(*v.base, *L, &detail);
        for (const auto& row : detail) {
            auto key = row["point"].get<std::string>();
            Status ps = row["status"] == "violated"        ? Status::Violated
                        : row["status"] == "indeterminate" ? Status::Indeterminate
                                                           : Status::Holds;
            auto [it, inserted] = per_point.try_emplace(key, ps);
            if (!inserted && (ps == Status::Violated || (ps == Status::Indeterminate && it->second == Status::Holds)))
                it->second = ps;
        }
        ordered_json row;
        row["s"] = L->s.get_str();
        row["status"] = to_string(st);
        row["sigma_s"] = points_string(sigma_of(*L));
        row["points"] = detail;
        rows.push_back(row);
        if (st == Status::Violated)
            f.status = Status::Violated;
        else if (st == Status::Indeterminate && f.status == Status::Holds)
            f.status = Status::Indeterminate;
    }
    ordered_json points = ordered_json::object();
    for (const auto& r0 : v.base->records)
        points[r0.point.to_string()] = to_string(per_point.count(r0.point.to_string()) ? per_point[r0.point.to_string()] : Status::Holds);
    f.witness["sigma_0"] = points_string(sigma_of(*v.base));
    f.witness["per_point"] = points;
    f.witness["samples"] = rows;
    if (f.status == Status::Violated)
        f.summary = "generic singularity type at infinity changes";
    else if (f.status == Status::Indeterminate)
        f.summary = "Σ points move; the generic type cannot be compared";
    return finish(f, v);
}

Finding check_persistence(const FamilyAudit& a)
{
    const std::string law = "persistence";
    View v = view_of(a);
    if (!v.base)
        return no_base(law);
    if (a.cgst_status != Status::Holds)
        return make(law, Status::Inapplicable, "deformation is not cgst");
    Finding f = make(law, Status::Holds, "lambda-singularities of f_0 persist and do not share a fibre");
    ordered_json persists = ordered_json::array();
    for (const auto& r0 : v.base->records) {
        bool carries = r0.jump_sum() > 0 || r0.irrational_lambda > 0;
        if (!carries)
            continue;
        for (const auto* L : v.others) {
            const auto* rs = record_at(*L, r0.point);
            ordered_json row;
            row["point"] = r0.point.to_string();
            row["s"] = L->s.get_str();
            if (rs && (rs->jump_sum() > 0 || rs->irrational_lambda > 0)) {
                row["lambda_s"] = rs->jump_sum() + rs->irrational_lambda;
            } else if (rs && !rs->lambda_known) {
                row["lambda_s"] = nullptr;
                if (f.status == Status::Holds) {
                    f.status = Status::Indeterminate;
                    f.summary = "lambda at " + r0.point.to_string() + " not attributable";
                }
            } else {
                row["lambda_s"] = 0;
                f.status = Status::Violated;
                f.summary = "lambda-singularity at " + r0.point.to_string() + " vanishes for s = " + L->s.get_str();
            }
            persists.push_back(row);
        }
    }
    f.witness["persistence"] = persists;
    std::vector<const PolynomialLedger*> all = v.others;
    all.push_back(v.base);
    for (const auto* L : all) {
        std::map<Rational, std::vector<std::string>> fibres;
        for (const auto& r : L->records)
            for (const auto& j : r.jumps)
                fibres[j.t].push_back(r.point.to_string());
        for (const auto& [t, pts] : fibres) {
            if (pts.size() > 1) {
                f.status = Status::Violated;
                f.summary = "several lambda-singularities in the fibre t = " + t.get_str() + " at s = " + L->s.get_str();
                f.witness["shared_fibre"] = {{"s", L->s.get_str()}, {"t", t.get_str()}, {"points", pts}};
            }
        }
    }
    return finish(f, v);
}

Finding check_F_class_lambda_rule(const FamilyAudit& a)
{
    const std::string law = "f-class-lambda-rule";
    View v = view_of(a);
    if (!v.base)
        return no_base(law);
    bool all_f = v.base->classification.kind == Classification::FType;
    for (const auto* L : v.others)
        all_f = all_f && L->classification.kind == Classification::FType;
    if (!all_f)
        return make(law, Status::Inapplicable, "not every sample is F-type");
    auto constant = mu_lambda_constant(a);
    if (constant == false)
        return make(law, Status::Inapplicable, "mu + lambda is not constant");
    if (!constant)
        return finish(make(law, Status::Indeterminate, "mu + lambda constancy undetermined"), v);
    Finding f = make(law, Status::Holds, "lambda(0) > 0 implies lambda(s) > 0");
    f.witness["lambda_0"] = v.base->lambda_total;
    if (v.base->lambda_total > 0) {
        for (const auto* L : v.others) {
            if (L->lambda_total == 0) {
                f.status = Status::Violated;
                f.summary = "lambda drops to 0 at s = " + L->s.get_str();
            }
        }
    }
    return finish(f, v);
}

Finding delta_chi_deductions(const FamilyAudit& a)
{
    const std::string law = "delta-chi";
    View v = view_of(a);
    if (!v.base)
        return no_base(law);
    if (!v.base->chi_inf)
        return make(law, Status::Inapplicable, "chi at infinity needs n <= 3");
    Finding f = make(law, Status::Holds, "all deductions from the sign of Δχ^∞ agree with the measured data");
    ordered_json rows = ordered_json::array();
    long sign = (v.base->n % 2 == 0) ? 1 : -1;  // (-1)^n
    for (const auto* L : v.others) {
        ordered_json row;
        row["s"] = L->s.get_str();
        long delta = sign * (*L->chi_inf - *v.base->chi_inf);
        row["delta_chi"] = delta;
        bool constant = L->betti == v.base->betti;
        Status outcome = Status::Holds;
        if (delta < 0) {
            Status cg = cgst_between(*v.base, *L, nullptr);
            row["clause"] = "negative: not cgst";
            row["cgst"] = to_string(cg);
            if (cg == Status::Holds)
                outcome = Status::Violated;
            else if (cg == Status::Indeterminate)
                outcome = Status::Indeterminate;
        } else if (delta == 0) {
            row["clause"] = "zero: constant mu + lambda forces constant mu_gen";
            row["mu_lambda_constant"] = constant;
            if (constant) {
                if (sigma_of(*L) != sigma_of(*v.base)) {
                    outcome = Status::Indeterminate;
                } else {
                    for (const auto& r0 : v.base->records)
                        if (record_at(*L, r0.point)->mu_gen != r0.mu_gen)
                            outcome = Status::Violated;
                }
            }
        } else {
            row["clause"] = "positive: mu + lambda not constant";
            row["mu_lambda_constant"] = constant;
            if (constant)
                outcome = Status::Violated;
        }
        row["outcome"] = outcome == Status::Holds ? "consistent" : to_string(outcome);
        rows.push_back(row);
        if (outcome == Status::Violated) {
            f.status = Status::Violated;
            f.summary = "deduction from Δχ^∞ contradicted at s = " + L->s.get_str();
        } else if (outcome == Status::Indeterminate && f.status == Status::Holds) {
            f.status = Status::Indeterminate;
            f.summary = "some deductions could not be compared";
        }
    }
    f.witness["samples"] = rows;
    return finish(f, v);
}

namespace {

/// Generator of the curve of critical values (P - t, d_x P) ∩ Q[s, t],
/// over the ring vars + s + t.
QPoly critical_value_curve(const PolynomialFamily& fam, std::string* tname)
{
    const VarList& ring = fam.P.vars();
    std::string t = ring.fresh("t");
    VarList ext = ring.with_appended(t);
    QPoly P = change_ring(fam.P, ext);
    std::vector<QPoly> gens{P - QPoly::variable(ext, t)};
    for (std::size_t i = 0; i < fam.n(); ++i) {
        QPoly d = derivative(P, i);
        if (!d.is_zero())
            gens.push_back(d);
    }
    auto elim = eliminate(gens, {fam.param, t});
    QPoly g(ext);
    for (const auto& e : elim)
        g = gcd(g, e);
    *tname = t;
    return g;
}

} // namespace

Finding classify_mu_loss(const FamilyAudit& a, const std::vector<Rational>& shrink)
{
    const std::string law = "mu-loss";
    View v = view_of(a);
    if (!v.base)
        return no_base(law);
    std::vector<std::string> losing;
    for (const auto* L : v.others)
        if (L->mu_total > v.base->mu_total)
            losing.push_back(L->s.get_str());
    if (losing.empty())
        return make(law, Status::Inapplicable, "no loss of affine mu at s = 0");
    Finding f = make(law, Status::Holds, "");
    f.witness["heuristic"] = true;
    f.witness["loss_at"] = losing;
    f.witness["mu_0"] = v.base->mu_total;

    ordered_json degrees = ordered_json::object();
    auto degree_at = [&](const Rational& s) -> ordered_json {
        try {
            UPoly e = critical_value_eliminant(a.family.member(s));
            return e.degree();
        } catch (const std::exception& ex) {
            return std::string("error: ") + ex.what();
        }
    };
    for (const auto& s : shrink)
        degrees[s.get_str()] = degree_at(s);
    degrees["0"] = degree_at(0);
    f.witness["eliminant_t_degree"] = degrees;

    try {
        std::string t;
        QPoly E = critical_value_curve(a.family, &t);
        std::size_t ti = E.vars().require(t);
        std::size_t si = E.vars().require(a.family.param);
        int top = E.degree_in(ti);
        QPoly lead(E.vars());
        for (const auto& [m, c] : E.terms())
            if (m[ti] == top)
                lead.add_term(m, c);
        Rational at_zero = 0;
        for (const auto& [m, c] : lead.terms())
            if (m[si] == 0)
                at_zero += c;
        f.witness["curve_t_degree"] = top;
        bool escapes = sgn(at_zero) == 0;
        f.witness["case"] = escapes ? "b" : "a";
        f.summary = escapes ? "heuristic: a critical value tends to infinity as s -> 0"
                            : "heuristic: critical points escape with bounded critical values";
    } catch (const std::exception& ex) {
        f.status = Status::Indeterminate;
        f.summary = std::string("loss detected; classification failed: ") + ex.what();
    }
    return f;
}

Finding check_expectations(const FamilyAudit& a, const std::vector<Expectation>& expectations)
{
    const std::string law = "expected-values";
    if (expectations.empty())
        return make(law, Status::Inapplicable, "no expected values given");
    Finding f = make(law, Status::Holds, "all expected values match");
    ordered_json rows = ordered_json::array();
    for (const auto& e : expectations) {
        ordered_json row;
        row["quantity"] = e.quantity;
        row["s"] = e.s.get_str();
        row["expected"] = e.value;
        const PolynomialLedger* L = a.ledger(e.s);
        std::string got = L ? ledger_quantity(*L, e.quantity) : "no ledger";
        row["computed"] = got;
        if (got != e.value) {
            f.status = Status::Violated;
            f.summary = e.quantity + " at s = " + e.s.get_str() + ": expected " + e.value + ", computed " + got;
        }
        rows.push_back(row);
    }
    f.witness["checks"] = rows;
    return f;
}

FamilyAudit audit(const PolynomialFamily& family, const AuditConfig& config,
                  const std::vector<Expectation>& expectations)
{
    config.validate();
    for (const auto& e : expectations)
        ledger_quantity(PolynomialLedger{}, e.quantity);  // rejects unknown names early

    FamilyAudit a{family, config, {}, {}, std::nullopt, Status::Indeterminate, {}};
    std::vector<Rational> samples = config.samples;
    for (const auto& e : expectations)
        samples.push_back(e.s);
    a.samples = compute_ledgers(family, samples, config.seed);

    for (const auto& r : a.samples) {
        if (r.ledger)
            continue;
        Finding f = make("ledger", Status::Indeterminate, r.error);
        f.witness["s"] = r.s.get_str();
        f.witness["error"] = r.error_kind == SampleError::Unsupported    ? "unsupported"
                             : r.error_kind == SampleError::Inconsistent ? "inconsistency"
                                                                         : "error";
        a.findings.push_back(f);
    }

    a.mu_lambda_constant = mu_lambda_constant(a);
    Finding cg = check_cgst(a);
    a.cgst_status = cg.status;

    View v = view_of(a);
    if (v.base && v.base->chi_inf) {
        long sign = (v.base->n % 2 == 0) ? 1 : -1;
        for (const auto& r : a.samples) {
            if (sgn(r.s) == 0)
                continue;
            if (r.ledger && r.ledger->chi_inf)
                a.delta_chi.emplace_back(r.s, sign * (*r.ledger->chi_inf - *v.base->chi_inf));
            else
                a.delta_chi.emplace_back(r.s, std::nullopt);
        }
    }

    auto add = [&](Finding f) {
        if (config.enabled(f.law))
            a.findings.push_back(std::move(f));
    };
    add(check_global_semicontinuity(a));
    for (auto& f : check_conservation(a))
        add(std::move(f));
    add(check_local_semicontinuity(a));
    add(cg);
    add(check_persistence(a));
    add(check_F_class_lambda_rule(a));
    add(delta_chi_deductions(a));
    if (config.enabled("mu-loss"))
        add(classify_mu_loss(a, config.shrink));
    add(check_expectations(a, expectations));
    return a;
}

} // namespace infsing
