#pragma once

#include "infsing/upoly.hpp"

#include <string>

namespace infsing {

/// Element of Q(t): num/den with den monic and gcd(num, den) = 1.
/// Only a single transcendental is supported.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {} // NOLINT
    RationalFunction(long c) : RationalFunction(Rational(c)) {} // NOLINT
    RationalFunction(UPoly num) : num_(std::move(num)), den_(1) {} // NOLINT
    RationalFunction(UPoly num, UPoly den);

    static RationalFunction t() { return RationalFunction(UPoly::x()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// Throws std::domain_error if the denominator vanishes at `t`.
    Rational eval(const Rational& t) const;

    RationalFunction operator-() const { return RationalFunction(-num_, den_, Normalized{}); }
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "t") const;

private:
    struct Normalized {};
    RationalFunction(UPoly num, UPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    UPoly num_;
    UPoly den_;
};

inline bool is_zero(const RationalFunction& f)
{
    return f.is_zero();
}

inline bool is_one(const RationalFunction& f)
{
    return f.den().degree() == 0 && f.num().degree() == 0 && f.num().lc() == 1;
}

inline std::string to_string(const RationalFunction& f)
{
    return f.to_string();
}

} // namespace infsing
