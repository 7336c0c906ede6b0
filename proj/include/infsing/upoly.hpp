#pragma once

#include "infsing/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace infsing {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(const Rational& c); // NOLINT: constants convert implicitly
    UPoly(long c) : UPoly(Rational(c)) {} // NOLINT

    static UPoly monomial(const Rational& c, int deg);
    static UPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    Rational lc() const { return is_zero() ? Rational(0) : c_.back(); }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Rational& c);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& t) const;
    UPoly derivative() const;
    UPoly monic() const;

    /// Clears denominators and integer content; leading coefficient positive.
    UPoly primitive() const;

    /// Polynomial long division; throws std::domain_error on a zero divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);       // monic, gcd(0,0) = 0
UPoly lcm(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p); // monic

/// Yun's algorithm: p = lc * prod_i f_i^i, returned as (f_i, i) with nonconstant f_i.
std::vector<std::pair<UPoly, int>> squarefree_factorization(const UPoly& p);

struct RationalRoot {
    Rational value;
    int multiplicity = 0;
};

struct RationalRootResult {
    std::vector<RationalRoot> roots;  // ascending
    std::vector<UPoly> leftover;      // primitive squarefree pieces without rational roots
};

/// All rational roots with multiplicity. Throws std::invalid_argument for zero input.
RationalRootResult rational_roots(const UPoly& p);

/// Sturm-sequence count of distinct real roots in the half-open interval (a, b].
int count_real_roots(const UPoly& squarefree, const Rational& a, const Rational& b);

} // namespace infsing
