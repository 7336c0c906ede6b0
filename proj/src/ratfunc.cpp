#include "infsing/ratfunc.hpp"

#include <stdexcept>

namespace infsing {

RationalFunction::RationalFunction(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize()
{
    if (num_.is_zero()) {
        den_ = UPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        UPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
    }
    Rational lc = den_.lc();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RationalFunction::eval(const Rational& t) const
{
    Rational d = den_.eval(t);
    if (sgn(d) == 0)
        throw std::domain_error("rational function has a pole at " + t.get_str());
    return num_.eval(t) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o)
{
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero in Q(t)");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string RationalFunction::to_string(const std::string& var) const
{
    if (den_.is_constant()) {
        if (num_.degree() <= 0)
            return num_.to_string(var);
        return "(" + num_.to_string(var) + ")";
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace infsing
