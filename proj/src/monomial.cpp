#include "infsing/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace infsing {

Monomial::Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps))
{
    for (int v : e_) {
        if (v < 0)
            throw std::invalid_argument("negative exponent");
        deg_ += v;
    }
}

void Monomial::set(std::size_t i, int v)
{
    if (v < 0)
        throw std::invalid_argument("negative exponent");
    deg_ += v - e_[i];
    e_[i] = v;
}

bool Monomial::divides(const Monomial& o) const
{
    if (deg_ > o.deg_)
        return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i])
            return false;
    return true;
}

bool Monomial::coprime(const Monomial& o) const
{
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != 0 && o.e_[i] != 0)
            return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] += b.e_[i];
    r.deg_ = a.deg_ + b.deg_;
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] -= b.e_[i];
    r.deg_ = a.deg_ - b.deg_;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    r.deg_ = 0;
    for (std::size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

int Monomial::degree_in(const std::vector<bool>& mask) const
{
    int d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (mask[i])
            d += e_[i];
    return d;
}

namespace {

// Reverse lexicographic tie-break: the monomial with the smaller exponent in
// the last differing variable is larger.
int revlex(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool want)
{
    for (std::size_t i = a.size(); i-- > 0;) {
        if (mask && (*mask)[i] != want)
            continue;
        if (a[i] != b[i])
            return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int block_degrevlex(const Monomial& a, const Monomial& b, const std::vector<bool>& mask, bool want)
{
    int da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask[i] == want) {
            da += a[i];
            db += b[i];
        }
    }
    if (da != db)
        return da > db ? 1 : -1;
    return revlex(a, b, &mask, want);
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    switch (kind_) {
    case Kind::DegRevLex:
        if (a.degree() != b.degree())
            return a.degree() > b.degree() ? 1 : -1;
        return revlex(a, b, nullptr, true);
    case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] > b[i] ? 1 : -1;
        return 0;
    case Kind::Elimination: {
        int c = block_degrevlex(a, b, mask_, true);
        if (c != 0)
            return c;
        return block_degrevlex(a, b, mask_, false);
    }
    case Kind::LocalDegRevLex:
        if (a.degree() != b.degree())
            return a.degree() < b.degree() ? 1 : -1;
        return revlex(a, b, nullptr, true);
    }
    return 0;
}

std::string MonomialOrder::name() const
{
    switch (kind_) {
    case Kind::DegRevLex:
        return "degrevlex";
    case Kind::Lex:
        return "lex";
    case Kind::Elimination:
        return "elimination";
    case Kind::LocalDegRevLex:
        return "local-degrevlex";
    }
    return "?";
}

} // namespace infsing
