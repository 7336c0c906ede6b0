#include "infsing/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace infsing {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

UPoly::UPoly(const Rational& c)
{
    if (!infsing::is_zero(c))
        c_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, int deg)
{
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
    v[static_cast<std::size_t>(deg)] = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!c_.empty() && infsing::is_zero(c_.back()))
        c_.pop_back();
}

Rational UPoly::coeff(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return c_[static_cast<std::size_t>(k)];
}

UPoly UPoly::operator-() const
{
    UPoly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (infsing::is_zero(c_[i]))
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& c)
{
    if (infsing::is_zero(c)) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= c;
    return *this;
}

Rational UPoly::eval(const Rational& t) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

UPoly UPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const
{
    if (is_zero())
        return {};
    UPoly r = *this;
    Rational inv = 1 / lc();
    r *= inv;
    return r;
}

UPoly UPoly::primitive() const
{
    if (is_zero())
        return {};
    Integer den = 1;
    for (const auto& c : c_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Integer content = 0;
    for (const auto& c : c_) {
        Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    Rational scale(den, content);
    scale.canonicalize();
    if (sgn(lc()) < 0)
        scale = -scale;
    UPoly r = *this;
    r *= scale;
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const
{
    if (d.is_zero())
        throw std::domain_error("UPoly division by zero");
    if (degree() < d.degree())
        return {UPoly(), *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(c_.size() - d.c_.size() + 1);
    Rational inv = 1 / d.lc();
    for (int k = degree(); k >= d.degree(); --k) {
        Rational c = rem[static_cast<std::size_t>(k)] * inv;
        if (infsing::is_zero(c))
            continue;
        std::size_t shift = static_cast<std::size_t>(k - d.degree());
        quo[shift] = c;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            rem[shift + j] -= c * d.c_[j];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

std::string UPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = c_[static_cast<std::size_t>(k)];
        if (infsing::is_zero(c))
            continue;
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << "*";
        os << var;
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly lcm(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    return (a * b).divmod(gcd(a, b)).first.monic();
}

UPoly squarefree_part(const UPoly& p)
{
    if (p.is_constant())
        return p.monic();
    return p.divmod(gcd(p, p.derivative())).first.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_factorization(const UPoly& p)
{
    std::vector<std::pair<UPoly, int>> out;
    if (p.is_constant())
        return out;
    UPoly a = p.monic();
    UPoly b = a.derivative();
    UPoly c = gcd(a, b);
    UPoly w = a.divmod(c).first;
    UPoly y = b.divmod(c).first;
    UPoly z = y - w.derivative();
    int i = 1;
    while (!w.is_constant()) {
        UPoly g = gcd(w, z);
        if (!g.is_constant())
            out.emplace_back(g, i);
        w = w.divmod(g).first;
        y = z.divmod(g).first;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p)
{
    std::vector<UPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero())
            break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations(const std::vector<UPoly>& chain, const Rational& t)
{
    int count = 0;
    int prev = 0;
    for (const auto& f : chain) {
        int s = sgn(f.eval(t));
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++count;
        prev = s;
    }
    return count;
}

} // namespace

int count_real_roots(const UPoly& squarefree, const Rational& a, const Rational& b)
{
    auto chain = sturm_chain(squarefree);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

RationalRootResult rational_roots(const UPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("rational_roots: zero polynomial");
    RationalRootResult result;
    if (p.is_constant())
        return result;

    UPoly q = squarefree_part(p).primitive();
    Integer lead = q.lc().get_num();
    Rational bound = 1;
    for (const auto& c : q.coeffs())
        bound = std::max(bound, Rational(Rational(abs(c) / q.lc()) + 1));

    auto chain = sturm_chain(q);
    std::vector<Rational> found;
    Rational min_width(Integer(1), lead);
    min_width.canonicalize();

    struct Interval {
        Rational lo, hi;
        int lo_var, hi_var;
    };
    std::vector<Interval> stack;
    Rational lo = -bound, hi = bound;
    stack.push_back({lo, hi, sign_variations(chain, lo), sign_variations(chain, hi)});
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        int n = iv.lo_var - iv.hi_var;
        if (n == 0)
            continue;
        if (n == 1 && iv.hi - iv.lo < min_width) {
            // a rational root m/k with k | lead has lead*root integral
            Rational a = iv.lo * lead, b = iv.hi * lead;
            Integer m;
            mpz_fdiv_q(m.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
            m += 1;
            for (; Rational(m) <= b; m += 1) {
                Rational cand(m, lead);
                cand.canonicalize();
                if (sgn(q.eval(cand)) == 0)
                    found.push_back(cand);
            }
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        int mid_var = sign_variations(chain, mid);
        stack.push_back({mid, iv.hi, mid_var, iv.hi_var});
        stack.push_back({iv.lo, mid, iv.lo_var, mid_var});
    }
    std::sort(found.begin(), found.end());

    UPoly rest = p;
    for (const auto& r : found) {
        UPoly lin(std::vector<Rational>{-r, 1});
        int mult = 0;
        while (true) {
            auto [quo, rem] = rest.divmod(lin);
            if (!rem.is_zero())
                break;
            rest = quo;
            ++mult;
        }
        result.roots.push_back({r, mult});
    }
    for (auto& [f, mult] : squarefree_factorization(rest)) {
        (void)mult;
        result.leftover.push_back(f.primitive());
    }
    return result;
}

} // namespace infsing
