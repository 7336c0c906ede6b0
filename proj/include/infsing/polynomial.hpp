#pragma once

#include "infsing/monomial.hpp"
#include "infsing/ratfunc.hpp"
#include "infsing/rational.hpp"

#include <climits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace infsing {

/// Ordered, immutable list of variable names shared between polynomials.
class VarList {
public:
    VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
    explicit VarList(std::vector<std::string> names);

    std::size_t size() const { return names_->size(); }
    const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t require(const std::string& name) const;

    VarList with_appended(const std::string& name) const;
    VarList without(std::size_t i) const;
    /// A name not present in the list, starting from `base`.
    std::string fresh(const std::string& base) const;

    friend bool operator==(const VarList& a, const VarList& b)
    {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

inline constexpr int kMinusInfinity = INT_MIN;

template <class K>
class Polynomial {
public:
    using Coeff = K;
    using Terms = std::map<Monomial, K, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(VarList vars) : vars_(std::move(vars)) {}

    static Polynomial constant(VarList vars, const K& c)
    {
        Polynomial p(std::move(vars));
        p.add_term(Monomial(p.nvars()), c);
        return p;
    }
    static Polynomial variable(VarList vars, std::size_t i)
    {
        Polynomial p(std::move(vars));
        Monomial m(p.nvars());
        m.set(i, 1);
        p.add_term(m, K(1));
        return p;
    }
    static Polynomial variable(VarList vars, const std::string& name)
    {
        std::size_t i = vars.require(name);
        return variable(std::move(vars), i);
    }
    static Polynomial term(VarList vars, const Monomial& m, const K& c)
    {
        Polynomial p(std::move(vars));
        p.add_term(m, c);
        return p;
    }

    const VarList& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    /// Total degree; kMinusInfinity for the zero polynomial.
    int degree() const { return terms_.empty() ? kMinusInfinity : terms_.rbegin()->first.degree(); }

    int degree_in(const std::vector<bool>& mask) const
    {
        int d = kMinusInfinity;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.degree_in(mask));
        return d;
    }

    int degree_in(std::size_t var) const
    {
        int d = kMinusInfinity;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m[var]);
        return d;
    }

    K coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? K(0) : it->second;
    }
    K constant_term() const { return coefficient(Monomial(nvars())); }

    void add_term(const Monomial& m, const K& c)
    {
        if (is_zero_coeff(c))
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second))
                terms_.erase(it);
        }
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_)
            c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        check_ring(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        check_ring(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const K& s)
    {
        if (is_zero_coeff(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const K& s) { return a *= s; }
    friend Polynomial operator*(const K& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        a.check_ring(b);
        Polynomial r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned k) const
    {
        Polynomial result = constant(vars_, K(1));
        Polynomial base = *this;
        while (k) {
            if (k & 1u)
                result *= base;
            k >>= 1u;
            if (k)
                base *= base;
        }
        return result;
    }

    std::string to_string() const;

private:
    static bool is_zero_coeff(const K& c) { return infsing::is_zero(c); }
    void check_ring(const Polynomial& o) const
    {
        if (!(vars_ == o.vars_))
            throw std::invalid_argument("mismatched ambient variables");
    }

    VarList vars_;
    Terms terms_;
};

using QPoly = Polynomial<Rational>;
using TPoly = Polynomial<RationalFunction>;

namespace detail {

inline std::string monomial_string(const Monomial& m, const VarList& vars)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += vars[i];
        if (m[i] > 1)
            out += "^" + std::to_string(m[i]);
    }
    return out;
}

inline void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& mono)
{
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (first)
        os << (neg ? "-" : "");
    else
        os << (neg ? " - " : " + ");
    if (mono.empty()) {
        os << a.get_str();
    } else {
        if (a != 1)
            os << a.get_str() << "*";
        os << mono;
    }
}

inline void append_term(std::ostringstream& os, bool first, const RationalFunction& c, const std::string& mono)
{
    if (!first)
        os << " + ";
    if (mono.empty()) {
        os << c.to_string();
    } else {
        if (!is_one(c))
            os << c.to_string() << "*";
        os << mono;
    }
}

} // namespace detail

template <class K>
std::string Polynomial<K>::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        detail::append_term(os, first, it->second, detail::monomial_string(it->first, vars_));
        first = false;
    }
    return os.str();
}

template <class K>
Polynomial<K> derivative(const Polynomial<K>& p, std::size_t var)
{
    Polynomial<K> r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0)
            continue;
        Monomial d = m;
        d.set(var, m[var] - 1);
        r.add_term(d, c * K(m[var]));
    }
    return r;
}

template <class K>
Polynomial<K> derivative(const Polynomial<K>& p, const std::string& var)
{
    return derivative(p, p.vars().require(var));
}

/// Terms whose degree over the `graded` variables is exactly k.
template <class K>
Polynomial<K> graded_part(const Polynomial<K>& p, int k, const std::vector<bool>& graded)
{
    Polynomial<K> r(p.vars());
    for (const auto& [m, c] : p.terms())
        if (m.degree_in(graded) == k)
            r.add_term(m, c);
    return r;
}

template <class K>
Polynomial<K> graded_part(const Polynomial<K>& p, int k)
{
    return graded_part(p, k, std::vector<bool>(p.nvars(), true));
}

/// Appends variable `h` and pads every term to degree d over graded vars + h.
template <class K>
Polynomial<K> homogenize(const Polynomial<K>& p, const std::string& h, int d, const std::vector<bool>& graded)
{
    if (p.degree_in(graded) > d)
        throw std::invalid_argument("homogenize: target degree below the polynomial degree");
    VarList vars = p.vars().with_appended(h);
    Polynomial<K> r(vars);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e = m.exponents();
        e.push_back(d - m.degree_in(graded));
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

template <class K>
Polynomial<K> homogenize(const Polynomial<K>& p, const std::string& h, int d)
{
    return homogenize(p, h, d, std::vector<bool>(p.nvars(), true));
}

template <class K>
K power(const K& base, int e)
{
    K r(1);
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

/// Substitutes constants for some variables and drops them from the ring.
template <class K>
Polynomial<K> specialize(const Polynomial<K>& p, const std::map<std::string, K>& bindings)
{
    std::vector<bool> bound(p.nvars(), false);
    std::vector<K> value(p.nvars());
    std::vector<std::string> keep;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        auto it = bindings.find(p.vars()[i]);
        if (it != bindings.end()) {
            bound[i] = true;
            value[i] = it->second;
        } else {
            keep.push_back(p.vars()[i]);
        }
    }
    for (const auto& [name, v] : bindings)
        p.vars().require(name);
    Polynomial<K> r{VarList(keep)};
    for (const auto& [m, c] : p.terms()) {
        K coeff = c;
        std::vector<int> e;
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            if (bound[i])
                coeff *= power(value[i], m[i]);
            else
                e.push_back(m[i]);
        }
        r.add_term(Monomial(std::move(e)), coeff);
    }
    return r;
}

/// Replaces variable `var` by the transcendental t of Q(t), removing it from the ring.
TPoly to_function_field(const QPoly& p, const std::string& var);

/// Embeds Q coefficients into Q(t).
TPoly embed(const QPoly& p);

/// Specializes the transcendental t to a rational value.
QPoly specialize_t(const TPoly& p, const Rational& t);

/// q(y) = p(y + point).
template <class K>
Polynomial<K> translate(const Polynomial<K>& p, const std::vector<K>& point)
{
    if (point.size() != p.nvars())
        throw std::invalid_argument("translate: point dimension mismatch");
    std::size_t n = p.nvars();
    bool identity = true;
    for (const auto& a : point)
        identity = identity && is_zero(a);
    if (identity)
        return p;
    // powers[i][k] = (y_i + a_i)^k, built lazily
    std::vector<std::vector<Polynomial<K>>> powers(n);
    auto shifted_power = [&](std::size_t i, int k) -> const Polynomial<K>& {
        auto& v = powers[i];
        if (v.empty())
            v.push_back(Polynomial<K>::constant(p.vars(), K(1)));
        while (static_cast<int>(v.size()) <= k) {
            Polynomial<K> lin = Polynomial<K>::variable(p.vars(), i) + Polynomial<K>::constant(p.vars(), point[i]);
            v.push_back(v.back() * lin);
        }
        return v[static_cast<std::size_t>(k)];
    };
    Polynomial<K> r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Polynomial<K> t = Polynomial<K>::constant(p.vars(), c);
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] > 0)
                t *= shifted_power(i, m[i]);
        r += t;
    }
    return r;
}

template <class K>
K evaluate(const Polynomial<K>& p, const std::vector<K>& point)
{
    K acc(0);
    for (const auto& [m, c] : p.terms()) {
        K t = c;
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (m[i] > 0)
                t *= power(point[i], m[i]);
        acc += t;
    }
    return acc;
}

/// Re-expresses p over a ring whose variable list contains all of p's variables.
template <class K>
Polynomial<K> change_ring(const Polynomial<K>& p, const VarList& target)
{
    std::vector<std::size_t> where(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i)
        where[i] = target.require(p.vars()[i]);
    Polynomial<K> r(target);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(target.size(), 0);
        for (std::size_t i = 0; i < p.nvars(); ++i)
            e[where[i]] = m[i];
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

/// Univariate view of a polynomial that only involves variable `var`.
UPoly to_upoly(const QPoly& p, std::size_t var);
QPoly from_upoly(const UPoly& u, const VarList& vars, std::size_t var);

/// Integer content removed, denominators cleared, leading (grlex) coefficient positive.
QPoly primitive(const QPoly& p);

} // namespace infsing
