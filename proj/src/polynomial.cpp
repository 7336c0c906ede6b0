#include "infsing/polynomial.hpp"

#include <set>

namespace infsing {

VarList::VarList(std::vector<std::string> names)
{
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarList::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == name)
            return i;
    return std::nullopt;
}

std::size_t VarList::require(const std::string& name) const
{
    auto i = index_of(name);
    if (!i)
        throw std::invalid_argument("undeclared variable '" + name + "'");
    return *i;
}

VarList VarList::with_appended(const std::string& name) const
{
    std::vector<std::string> v = *names_;
    v.push_back(name);
    return VarList(std::move(v));
}

VarList VarList::without(std::size_t i) const
{
    std::vector<std::string> v = *names_;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    return VarList(std::move(v));
}

std::string VarList::fresh(const std::string& base) const
{
    std::string name = base;
    for (int k = 0; index_of(name); ++k)
        name = base + "_" + std::to_string(k);
    return name;
}

TPoly to_function_field(const QPoly& p, const std::string& var)
{
    std::size_t idx = p.vars().require(var);
    TPoly r(p.vars().without(idx));
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e = m.exponents();
        int k = e[idx];
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(idx));
        r.add_term(Monomial(std::move(e)), RationalFunction(UPoly::monomial(c, k)));
    }
    return r;
}

TPoly embed(const QPoly& p)
{
    TPoly r(p.vars());
    for (const auto& [m, c] : p.terms())
        r.add_term(m, RationalFunction(c));
    return r;
}

QPoly specialize_t(const TPoly& p, const Rational& t)
{
    QPoly r(p.vars());
    for (const auto& [m, c] : p.terms())
        r.add_term(m, c.eval(t));
    return r;
}

UPoly to_upoly(const QPoly& p, std::size_t var)
{
    int d = std::max(0, p.degree_in(var));
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (const auto& [m, coeff] : p.terms()) {
        if (m.degree() != m[var])
            throw std::invalid_argument("to_upoly: polynomial involves other variables");
        c[static_cast<std::size_t>(m[var])] += coeff;
    }
    return UPoly(std::move(c));
}

QPoly from_upoly(const UPoly& u, const VarList& vars, std::size_t var)
{
    QPoly r(vars);
    for (int k = 0; k <= u.degree(); ++k) {
        Monomial m(vars.size());
        m.set(var, k);
        r.add_term(m, u.coeff(k));
    }
    return r;
}

QPoly primitive(const QPoly& p)
{
    if (p.is_zero())
        return p;
    Integer den = 1;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Integer content = 0;
    for (const auto& [m, c] : p.terms()) {
        Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    Rational scale(den, content);
    scale.canonicalize();
    if (sgn(p.terms().rbegin()->second) < 0)
        scale = -scale;
    return p * scale;
}

} // namespace infsing
