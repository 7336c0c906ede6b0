#include "infsing/infinity.hpp"

#include "infsing/ideal.hpp"
#include "infsing/parser.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace infsing {

PolynomialFamily PolynomialFamily::make(const std::vector<std::string>& vars, const std::string& param,
                                        const std::string& text, std::optional<int> declared_degree)
{
    if (vars.size() < 2)
        throw UnsupportedInput("a family needs at least two variables");
    if (std::find(vars.begin(), vars.end(), param) != vars.end())
        throw std::invalid_argument("parameter '" + param + "' is also declared as a variable");
    std::set<std::string> unique(vars.begin(), vars.end());
    if (unique.size() != vars.size())
        throw std::invalid_argument("duplicate variable name");

    PolynomialFamily fam;
    fam.vars = VarList(vars);
    fam.param = param;
    fam.P = parse_polynomial(text, vars, {param});
    std::vector<bool> xmask(vars.size() + 1, true);
    xmask.back() = false;
    int generic = fam.P.degree_in(xmask);
    int at_zero = fam.member(0).degree();
    if (at_zero <= 0)
        throw UnsupportedInput("degree " + std::to_string(std::max(at_zero, 0)) + " unsupported");
    if (generic != at_zero)
        throw UnsupportedInput("degree in x is not constant: " + std::to_string(at_zero) + " at s = 0, " +
                               std::to_string(generic) + " generically");
    if (declared_degree && *declared_degree != at_zero)
        throw std::invalid_argument("declared degree " + std::to_string(*declared_degree) +
                                    " does not match the computed degree " + std::to_string(at_zero));
    fam.degree = at_zero;
    return fam;
}

QPoly PolynomialFamily::member(const Rational& s) const
{
    return change_ring(specialize<Rational>(P, {{param, s}}), vars);
}

ProjectivePoint ProjectivePoint::normalized(std::vector<Rational> coords)
{
    auto it = std::find_if(coords.begin(), coords.end(), [](const Rational& c) { return sgn(c) != 0; });
    if (it == coords.end())
        throw std::invalid_argument("projective point with all coordinates zero");
    Rational lead = *it;
    for (auto& c : coords)
        c /= lead;
    return ProjectivePoint{std::move(coords)};
}

std::size_t ProjectivePoint::pivot() const
{
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (sgn(coords[i]) != 0)
            return i;
    throw std::logic_error("projective point with all coordinates zero");
}

std::string ProjectivePoint::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i)
            out += ":";
        out += coords[i].get_str();
    }
    return out + "]";
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b)
{
    // Pivot-first: points in earlier charts come first, then coordinatewise.
    if (a.pivot() != b.pivot())
        return a.pivot() < b.pivot();
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
}

std::string to_string(Classification c)
{
    switch (c) {
    case Classification::FType:
        return "F-type";
    case Classification::BType:
        return "B-type";
    case Classification::Unsupported:
        return "unsupported";
    }
    return "?";
}

namespace {

std::vector<QPoly> nonzero(const std::vector<QPoly>& gens)
{
    std::vector<QPoly> out;
    for (const auto& g : gens)
        if (!g.is_zero())
            out.push_back(g);
    return out;
}

UPoly principal_generator(const std::vector<QPoly>& gens, std::size_t var)
{
    UPoly g;
    for (const auto& p : gens)
        g = gcd(g, to_upoly(p, var));
    return g;
}

} // namespace

std::vector<std::vector<Rational>> affine_points(const std::vector<QPoly>& input)
{
    if (input.empty())
        throw PositiveDimensional("empty system has a positive-dimensional solution set");
    VarList vars = input.front().vars();
    std::vector<QPoly> gens = nonzero(input);
    std::size_t n = vars.size();
    if (n == 0) {
        if (gens.empty())
            return {{}};
        return {};
    }
    if (gens.empty())
        throw PositiveDimensional("positive-dimensional solution set");

    IdealBasis gb = buchberger(gens);
    auto dim = krull_dimension(gb);
    if (!dim)
        return {};
    if (*dim > 0)
        throw PositiveDimensional("positive-dimensional solution set");

    std::size_t last = n - 1;
    UPoly u = principal_generator(eliminate(gb.basis, {vars[last]}), last);
    RationalRootResult rr = rational_roots(u);
    if (!rr.leftover.empty())
        throw UnsupportedInput("irrational locus unsupported: factor " + rr.leftover.front().to_string(vars[last]));

    std::vector<std::vector<Rational>> out;
    for (const auto& root : rr.roots) {
        std::vector<QPoly> sub;
        for (const auto& g : gb.basis)
            sub.push_back(specialize<Rational>(g, {{vars[last], root.value}}));
        if (sub.empty())
            continue;
        for (auto& pt : affine_points(sub)) {
            pt.push_back(root.value);
            out.push_back(std::move(pt));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PointSet projective_points(const std::vector<QPoly>& forms)
{
    PointSet out;
    if (forms.empty())
        throw std::invalid_argument("projective_points needs at least one form");
    const VarList& vars = forms.front().vars();
    std::size_t n = vars.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::map<std::string, Rational> bind;
        for (std::size_t j = 0; j < i; ++j)
            bind[vars[j]] = 0;
        bind[vars[i]] = 1;
        std::vector<QPoly> chart;
        for (const auto& f : forms)
            chart.push_back(specialize<Rational>(f, bind));
        std::vector<std::vector<Rational>> pts;
        try {
            pts = affine_points(chart);
        } catch (const PositiveDimensional&) {
            out.positive_dimensional = true;
            out.points.clear();
            return out;
        }
        for (const auto& pt : pts) {
            std::vector<Rational> coords(n, 0);
            coords[i] = 1;
            for (std::size_t k = 0; k < pt.size(); ++k)
                coords[i + 1 + k] = pt[k];
            out.points.push_back(ProjectivePoint{std::move(coords)});
        }
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

CompactifiedMember CompactifiedMember::make(const QPoly& f)
{
    CompactifiedMember m;
    m.vars = f.vars();
    m.n = f.nvars();
    m.d = f.degree();
    if (m.d <= 0)
        throw UnsupportedInput("degree 0 unsupported");
    m.f = f;
    m.fd = graded_part(f, m.d);
    m.fd1 = graded_part(f, m.d - 1);
    m.x0 = m.vars.fresh("x0");
    m.F = homogenize(f, m.x0, m.d);
    return m;
}

namespace {

std::vector<QPoly> sigma_forms(const CompactifiedMember& m)
{
    auto forms = jacobian(m.fd);
    forms.push_back(m.fd1);
    return forms;
}

/// Projective dimension from the affine cone; nullopt for the empty set.
std::optional<int> projective_dimension(const std::vector<QPoly>& forms)
{
    auto gens = nonzero(forms);
    std::size_t n = forms.front().nvars();
    if (gens.empty())
        return static_cast<int>(n) - 1;
    auto dim = krull_dimension(buchberger(gens));
    if (!dim || *dim == 0)
        return std::nullopt;
    return *dim - 1;
}

bool at_most_points(const std::optional<int>& dim)
{
    return !dim || *dim <= 0;
}

QPoly dehomogenized_at(const QPoly& form, const ProjectivePoint& p)
{
    std::size_t i = p.pivot();
    const VarList& vars = form.vars();
    QPoly chart = specialize<Rational>(form, {{vars[i], Rational(1)}});
    std::vector<Rational> shift;
    for (std::size_t k = 0; k < vars.size(); ++k)
        if (k != i)
            shift.push_back(k < p.coords.size() ? p.coords[k] : Rational(0));
    return translate(chart, shift);
}

} // namespace

PointSet sigma_points(const CompactifiedMember& m)
{
    return projective_points(sigma_forms(m));
}

PointSet w_points(const CompactifiedMember& m)
{
    return projective_points(jacobian(m.fd));
}

ClassificationResult classify(const CompactifiedMember& m)
{
    ClassificationResult r;
    auto jac = nonzero(jacobian(m.f));
    r.sing_dim = jac.empty() ? std::optional<int>(static_cast<int>(m.n)) : krull_dimension(buchberger(jac));
    r.w_dim = projective_dimension(jacobian(m.fd));
    r.sigma_dim = projective_dimension(sigma_forms(m));
    if (at_most_points(r.sing_dim) && at_most_points(r.w_dim))
        r.kind = Classification::FType;
    else if (at_most_points(r.sing_dim) && at_most_points(r.sigma_dim))
        r.kind = Classification::BType;
    else
        r.kind = Classification::Unsupported;
    return r;
}

namespace {

QPoly chart_base(const CompactifiedMember& m, const ProjectivePoint& p)
{
    if (p.coords.size() != m.n)
        throw std::invalid_argument("point dimension does not match the member");
    return dehomogenized_at(m.F, p);
}

} // namespace

QPoly chart_germ(const CompactifiedMember& m, const ProjectivePoint& p, const Rational& t)
{
    QPoly base = chart_base(m, p);
    QPoly x0 = QPoly::variable(base.vars(), m.x0);
    return base - x0.pow(static_cast<unsigned>(m.d)) * t;
}

TPoly chart_germ_generic(const CompactifiedMember& m, const ProjectivePoint& p)
{
    TPoly base = embed(chart_base(m, p));
    TPoly x0 = TPoly::variable(base.vars(), m.x0);
    return base - x0.pow(static_cast<unsigned>(m.d)) * RationalFunction::t();
}

std::size_t InfinitySingularityRecord::jump_sum() const
{
    std::size_t s = 0;
    for (const auto& j : jumps)
        s += j.lambda;
    return s;
}

std::optional<std::size_t> InfinitySingularityRecord::lambda() const
{
    if (!lambda_known)
        return std::nullopt;
    return jump_sum() + irrational_lambda;
}

InfinitySingularityRecord lambda_profile(const CompactifiedMember& m, const ProjectivePoint& p, std::uint64_t seed)
{
    InfinitySingularityRecord rec;
    rec.point = p;
    ParametricMilnorResult gen = parametric_local_milnor(chart_germ_generic(m, p), seed);
    if (!gen.mu_generic)
        throw Inconsistency("non-isolated singularity at infinity at " + p.to_string() + " for generic t");
    rec.mu_gen = *gen.mu_generic;
    for (const auto& c : gen.candidates) {
        RationalRootResult rr = rational_roots(c);
        for (const auto& root : rr.roots) {
            auto mu = local_milnor(chart_germ(m, p, root.value));
            if (!mu)
                throw Inconsistency("non-isolated singularity at infinity at " + p.to_string() +
                                    " for t = " + root.value.get_str());
            if (*mu < rec.mu_gen)
                throw Inconsistency("Milnor number drops below its generic value at " + p.to_string());
            if (*mu == rec.mu_gen)
                continue;
            bool seen = std::any_of(rec.jumps.begin(), rec.jumps.end(),
                                    [&](const Jump& j) { return j.t == root.value; });
            if (!seen)
                rec.jumps.push_back({root.value, *mu - rec.mu_gen});
        }
        for (const auto& left : rr.leftover) {
            UPoly monic = left.monic();
            if (std::find(rec.unresolved.begin(), rec.unresolved.end(), monic) == rec.unresolved.end())
                rec.unresolved.push_back(monic);
        }
    }
    std::sort(rec.jumps.begin(), rec.jumps.end(), [](const Jump& a, const Jump& b) { return a.t < b.t; });
    return rec;
}

std::size_t mu_gen_at(const CompactifiedMember& m, const ProjectivePoint& p, std::uint64_t seed)
{
    auto gen = parametric_local_milnor(chart_germ_generic(m, p), seed);
    if (!gen.mu_generic)
        throw Inconsistency("non-isolated singularity at infinity at " + p.to_string() + " for generic t");
    return *gen.mu_generic;
}

std::size_t mu_inf_at(const CompactifiedMember& m, const ProjectivePoint& p)
{
    auto mu = local_milnor(dehomogenized_at(m.fd, p));
    if (!mu)
        throw UnsupportedInput("part at infinity has a non-isolated singularity at " + p.to_string());
    return *mu;
}

long chi_smooth(int n, int d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("chi_smooth needs n >= 1 and d >= 1");
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), Integer(d - 1).get_mpz_t(), static_cast<unsigned long>(n + 1));
    Integer num = (n % 2 == 0) ? Integer(1 + p) : Integer(1 - p);
    if (num % d != 0)
        throw std::logic_error("chi_smooth: formula not integral");
    Integer r = Integer(n + 1) - num / d;
    return r.get_si();
}

long chi_infinity(const CompactifiedMember& m)
{
    if (m.n == 1)
        return 0;
    if (m.n > 3)
        throw UnsupportedInput("chi at infinity is only supported for n <= 3");
    QPoly c = squarefree_part(m.fd);
    long r = c.degree();
    if (m.n == 2)
        return r;
    PointSet sing = projective_points(jacobian(c));
    if (sing.positive_dimensional)
        throw Inconsistency("reduced curve at infinity has a positive-dimensional singular locus");
    long total = 3 * r - r * r;
    for (const auto& p : sing.points) {
        auto mu = local_milnor(dehomogenized_at(c, p));
        if (!mu)
            throw Inconsistency("reduced curve at infinity is not reduced at " + p.to_string());
        total += static_cast<long>(*mu);
    }
    return total;
}

long betti_formula_F(const CompactifiedMember& m, long sum_mu_gen, long sum_mu_inf)
{
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), Integer(m.d - 1).get_mpz_t(), static_cast<unsigned long>(m.n));
    return p.get_si() - sum_mu_gen - sum_mu_inf;
}

long betti_formula_B(const CompactifiedMember& m, long sum_mu_gen, long chi_inf)
{
    long sign = (m.n % 2 == 1) ? 1 : -1;  // (-1)^(n-1)
    return sign * (chi_smooth(static_cast<int>(m.n), m.d) - 1) - sum_mu_gen - sign * chi_inf;
}

void sort_values(std::vector<Rational>& values)
{
    std::sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) {
        int c = cmp(abs(a), abs(b));
        if (c != 0)
            return c < 0;
        return a < b;
    });
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

UPoly critical_value_eliminant(const QPoly& f)
{
    auto jac = nonzero(jacobian(f));
    if (jac.empty())
        throw UnsupportedInput("constant polynomial has no isolated critical points");
    auto dim = krull_dimension(buchberger(jac));
    if (!dim)
        return UPoly(1);
    if (*dim > 0)
        throw UnsupportedInput("positive-dimensional affine critical locus");
    std::string t = f.vars().fresh("t");
    VarList ext = f.vars().with_appended(t);
    std::vector<QPoly> gens;
    gens.push_back(change_ring(f, ext) - QPoly::variable(ext, t));
    for (const auto& g : jac)
        gens.push_back(change_ring(g, ext));
    auto elim = eliminate(gens, {t});
    return principal_generator(elim, ext.size() - 1);
}

ValueSet affine_critical_values(const QPoly& f)
{
    ValueSet out;
    UPoly e = critical_value_eliminant(f);
    if (e.is_constant())
        return out;
    RationalRootResult rr = rational_roots(e);
    for (const auto& r : rr.roots)
        out.values.push_back(r.value);
    for (const auto& l : rr.leftover)
        out.unresolved.push_back(l.monic());
    sort_values(out.values);
    return out;
}

std::size_t PolynomialLedger::sum_mu_gen() const
{
    std::size_t s = 0;
    for (const auto& r : records)
        s += r.mu_gen;
    return s;
}

PolynomialLedger build_ledger(const PolynomialFamily& family, const Rational& s, std::uint64_t seed)
{
    PolynomialLedger L;
    L.s = s;
    QPoly f = family.member(s);
    L.f = f.to_string();
    L.n = family.n();
    L.d = family.degree;
    if (f.degree() != family.degree)
        throw UnsupportedInput("degree drops to " + std::to_string(std::max(f.degree(), 0)) + " at s = " +
                               s.get_str());
    CompactifiedMember m = CompactifiedMember::make(f);

    L.classification = classify(m);
    if (L.classification.kind == Classification::Unsupported)
        throw UnsupportedInput("member at s = " + s.get_str() + " is neither F-type nor B-type");
    bool ftype = L.classification.kind == Classification::FType;

    auto mu = total_mu(f);
    if (!mu)
        throw UnsupportedInput("non-isolated affine critical locus at s = " + s.get_str());
    L.mu_total = *mu;
    L.critical_values = affine_critical_values(f);

    PointSet sigma = sigma_points(m);
    if (sigma.positive_dimensional)
        throw Inconsistency("positive-dimensional Σ for a B-type member");
    for (const auto& p : sigma.points)
        L.records.push_back(lambda_profile(m, p, seed));

    long sum_mu_inf = 0;
    if (ftype) {
        PointSet w = w_points(m);
        if (w.positive_dimensional)
            throw Inconsistency("positive-dimensional W for an F-type member");
        for (const auto& p : w.points) {
            WRecord wr{p, mu_inf_at(m, p)};
            sum_mu_inf += static_cast<long>(wr.mu_inf);
            for (auto& rec : L.records)
                if (rec.point == p)
                    rec.mu_inf = wr.mu_inf;
            L.w_records.push_back(wr);
        }
    }

    long sum_gen = static_cast<long>(L.sum_mu_gen());
    if (L.n <= 3) {
        L.chi_inf = chi_infinity(m);
        L.betti_chi = betti_formula_B(m, sum_gen, *L.chi_inf);
    }
    if (ftype) {
        L.betti_mu = betti_formula_F(m, sum_gen, sum_mu_inf);
        L.betti = *L.betti_mu;
        L.betti_source = "mu-formula";
        if (L.betti_chi && *L.betti_chi != *L.betti_mu)
            throw Inconsistency("Betti formulas disagree at s = " + s.get_str() + ": betti_chi gives " +
                                std::to_string(*L.betti_chi) + ", betti_mu gives " + std::to_string(*L.betti_mu));
    } else if (L.betti_chi) {
        L.betti = *L.betti_chi;
        L.betti_source = "chi-formula";
    } else {
        throw UnsupportedInput("B-type member with n >= 4 has no supported Betti formula");
    }

    L.lambda_total = L.betti - static_cast<long>(L.mu_total);
    if (L.lambda_total < 0)
        throw Inconsistency("negative lambda at s = " + s.get_str());

    long jumps = 0;
    for (const auto& r : L.records)
        jumps += static_cast<long>(r.jump_sum());
    if (jumps == L.lambda_total) {
        L.lambda_source = "jump-sum";
    } else if (jumps < L.lambda_total) {
        std::vector<InfinitySingularityRecord*> holders;
        for (auto& r : L.records)
            if (!r.unresolved.empty())
                holders.push_back(&r);
        if (holders.empty())
            throw Inconsistency("jump sum " + std::to_string(jumps) + " differs from the Betti formula value " +
                                std::to_string(L.lambda_total) + " at s = " + s.get_str());
        if (holders.size() == 1)
            holders.front()->irrational_lambda = static_cast<std::size_t>(L.lambda_total - jumps);
        else
            for (auto* h : holders)
                h->lambda_known = false;
        L.lambda_source = "formula-remainder";
    } else {
        throw Inconsistency("jump sum " + std::to_string(jumps) + " exceeds the Betti formula value " +
                            std::to_string(L.lambda_total) + " at s = " + s.get_str());
    }

    L.atypical = L.critical_values;
    for (const auto& r : L.records) {
        for (const auto& j : r.jumps)
            L.atypical.values.push_back(j.t);
        for (const auto& u : r.unresolved)
            if (std::find(L.atypical.unresolved.begin(), L.atypical.unresolved.end(), u) == L.atypical.unresolved.end())
                L.atypical.unresolved.push_back(u);
    }
    sort_values(L.atypical.values);

    long sign = (L.n % 2 == 1) ? 1 : -1;
    L.euler_generic_fiber = 1 + sign * L.betti;
    return L;
}

} // namespace infsing
