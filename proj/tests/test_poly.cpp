#include "support.hpp"

#include "infsing/parser.hpp"
#include "infsing/polynomial.hpp"
#include "infsing/ratfunc.hpp"
#include "infsing/upoly.hpp"

#include <doctest.h>

using namespace infsing;
using infsing::testing::P;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> S{"s"};
} // namespace

TEST_CASE("parser reads the cubic product family")
{
    QPoly f = P("(x*y)^3 + s*x*y + x", XY, S);
    CHECK(f.size() == 3);
    CHECK(f.coefficient(Monomial{3, 3, 0}) == 1);
    CHECK(f.coefficient(Monomial{1, 1, 1}) == 1);
    CHECK(f.coefficient(Monomial{1, 0, 0}) == 1);
    CHECK(f.vars().names() == std::vector<std::string>{"x", "y", "s"});
}

TEST_CASE("parser edge cases")
{
    CHECK(P("0", XY).is_zero());
    QPoly g = P("x^2*y + x + z^2 + s*z^3", XYZ, S);
    CHECK(g.size() == 4);
    CHECK(g.degree_in(std::vector<bool>{true, true, true, false}) == 3);
    CHECK(P("-x + 1/2*y", XY) == P("(1/2)*y - x", XY));
    CHECK(P("-x^2", XY) == -P("x^2", XY));
    CHECK(P("2^3*x", XY) == P("8*x", XY));
    CHECK(P("x^0", XY) == P("1", XY));
}

TEST_CASE("parser rejects malformed input with a position")
{
    CHECK_THROWS_AS(P("x +", XY), ParseError);
    CHECK_THROWS_AS(P("x * (y", XY), ParseError);
    CHECK_THROWS_AS(P("w + x", XY), ParseError);
    CHECK_THROWS_AS(P("x/0", XY), ParseError);
    CHECK_THROWS_AS(P("x^y", XY), ParseError);
    CHECK_THROWS(P("x", XY, {"s", "u"}));
    try {
        P("x + * y", XY);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("ring operations")
{
    CHECK(P("(x + y)*(x - y)", XY) == P("x^2 - y^2", XY));
    QPoly p = P("3*x*y^2 - 7", XY);
    CHECK(p + QPoly(p.vars()) == p);
    CHECK(P("(x*y)^3", XY) == P("x^3*y^3", XY));
    CHECK(P("x + y", XY).pow(2) == P("x^2 + 2*x*y + y^2", XY));
    CHECK((p - p).is_zero());
}

TEST_CASE("partial derivatives")
{
    CHECK(derivative(P("x^2*y + x", XY), "x") == P("2*x*y + 1", XY));
    CHECK(derivative(P("x^3*y^3", XY), "y") == P("3*x^3*y^2", XY));
    CHECK(derivative(P("x^4 + s*z^4 + z^3 + y", XYZ, S), "z") == P("4*s*z^3 + 3*z^2", XYZ, S));
}

TEST_CASE("graded parts")
{
    QPoly p = P("x^2*y + x + z^2 + s*z^3", XYZ, S);
    std::vector<bool> graded{true, true, true, false};
    CHECK(graded_part(p, 3, graded) == P("x^2*y + s*z^3", XYZ, S));
    CHECK(graded_part(P("(x*y)^3 + s*x*y + x", XY, S), 5, {true, true, false}).is_zero());
    CHECK(graded_part(P("x^4 + s*z^4 + z^3 + y", XYZ, S), 4, graded) == P("x^4 + s*z^4", XYZ, S));
}

TEST_CASE("homogenization")
{
    QPoly f = P("(x*y)^3 + x*y + x", XY);
    QPoly F = homogenize(f, "x0", 6);
    CHECK(F == P("x^3*y^3 + x*y*x0^4 + x*x0^5", {"x", "y", "x0"}));
    QPoly h = P("x^2*y + x*y^2", XY);
    CHECK(homogenize(h, "x0", 3) == change_ring(h, VarList({"x", "y", "x0"})));
    CHECK(homogenize(P("x^2*y + x + z^2", XYZ), "x0", 3) == P("x^2*y + x*x0^2 + z^2*x0", {"x", "y", "z", "x0"}));
    CHECK_THROWS(homogenize(f, "x0", 5));
}

TEST_CASE("specialization")
{
    QPoly f = P("(x*y)^3 + s*x*y + x", XY, S);
    CHECK(specialize(f, {{"s", Rational(0)}}) == P("(x*y)^3 + x", XY));
    QPoly f1 = specialize(f, {{"s", Rational(1)}});
    CHECK(f1.vars().names() == XY);
    CHECK(f1 == P("(x*y)^3 + x*y + x", XY));

    QPoly g = P("x^2 + t*x - 3*t^2", {"x", "t"});
    TPoly gt = to_function_field(g, "t");
    CHECK(gt.nvars() == 1);
    CHECK(gt.coefficient(Monomial{1}) == RationalFunction::t());
    CHECK(specialize_t(gt, Rational(2)) == P("x^2 + 2*x - 12", {"x"}));
}

TEST_CASE("translation")
{
    QPoly p = P("x^2", {"x"});
    CHECK(translate(p, std::vector<Rational>{1}) == P("x^2 + 2*x + 1", {"x"}));
    QPoly q = P("x^3*y - 2*y^2 + x", XY);
    CHECK(translate(q, std::vector<Rational>{0, 0}) == q);
    std::vector<Rational> pt{Rational(2), Rational(-1, 3)};
    CHECK(translate(q, pt).constant_term() == evaluate(q, pt));
}

TEST_CASE("property: homogenize then dehomogenize is the identity")
{
    std::mt19937_64 rng(7);
    VarList vars(XYZ);
    for (int trial = 0; trial < 40; ++trial) {
        QPoly p = infsing::testing::random_poly(vars, 5, 6, rng);
        int d = std::max(p.degree(), 0) + static_cast<int>(rng() % 3);
        QPoly H = homogenize(p, "h", d);
        for (const auto& [m, c] : H.terms())
            CHECK(m.degree() == d);
        CHECK(specialize(H, {{"h", Rational(1)}}) == p);
    }
}

TEST_CASE("property: graded parts partition the support")
{
    std::mt19937_64 rng(11);
    VarList vars(XY);
    for (int trial = 0; trial < 40; ++trial) {
        QPoly p = infsing::testing::random_poly(vars, 6, 8, rng);
        QPoly sum(vars);
        std::size_t terms = 0;
        for (int k = 0; k <= std::max(p.degree(), 0); ++k) {
            QPoly g = graded_part(p, k);
            terms += g.size();
            sum += g;
        }
        CHECK(sum == p);
        CHECK(terms == p.size());
    }
}

TEST_CASE("property: derivatives are linear and satisfy Leibniz")
{
    std::mt19937_64 rng(13);
    VarList vars(XYZ);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly a = infsing::testing::random_poly(vars, 4, 5, rng);
        QPoly b = infsing::testing::random_poly(vars, 4, 5, rng);
        Rational c = infsing::testing::small_rational(rng);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(derivative(a + c * b, i) == derivative(a, i) + c * derivative(b, i));
            CHECK(derivative(a * b, i) == derivative(a, i) * b + a * derivative(b, i));
        }
    }
}

TEST_CASE("property: parse and print reach a fixed point")
{
    std::mt19937_64 rng(17);
    VarList vars(XY);
    for (int trial = 0; trial < 40; ++trial) {
        QPoly p = infsing::testing::random_poly(vars, 5, 6, rng);
        std::string once = p.to_string();
        QPoly back = P(once, XY);
        CHECK(back == p);
        CHECK(back.to_string() == once);
    }
}

TEST_CASE("property: rational arithmetic stays exact")
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = infsing::testing::small_rational(rng, 50);
        Rational b = infsing::testing::small_rational(rng, 50);
        Rational c = infsing::testing::small_rational(rng, 50);
        Rational lhs = (a + b) * c;
        Rational rhs = a * c + b * c;
        CHECK(lhs == rhs);
        CHECK(gcd(lhs.get_num(), lhs.get_den()) == 1);
    }
}

TEST_CASE("univariate rational roots")
{
    UPoly t = UPoly::x();
    auto r = rational_roots(t * (t + UPoly(Rational(1, 4))));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].value == Rational(-1, 4));
    CHECK(r.roots[1].value == 0);
    CHECK(r.leftover.empty());

    auto none = rational_roots(t * t + UPoly(1));
    CHECK(none.roots.empty());
    REQUIRE(none.leftover.size() == 1);
    CHECK(none.leftover[0] == t * t + UPoly(1));

    auto triple = rational_roots(t * t * t);
    REQUIRE(triple.roots.size() == 1);
    CHECK(triple.roots[0].value == 0);
    CHECK(triple.roots[0].multiplicity == 3);

    CHECK_THROWS_AS(rational_roots(UPoly()), std::invalid_argument);
}

TEST_CASE("univariate gcd, squarefree parts and Sturm counts")
{
    UPoly t = UPoly::x();
    UPoly a = (t - UPoly(1)) * (t - UPoly(1)) * (t + UPoly(2));
    CHECK(squarefree_part(a) == (t - UPoly(1)) * (t + UPoly(2)));
    CHECK(gcd(a, a.derivative()) == t - UPoly(1));
    auto sqf = squarefree_factorization(a);
    REQUIRE(sqf.size() == 2);
    CHECK(sqf[1].second == 2);
    CHECK(count_real_roots(squarefree_part(a), Rational(-10), Rational(10)) == 2);
    CHECK(count_real_roots(t * t - UPoly(2), Rational(0), Rational(2)) == 1);
}

TEST_CASE("function field elements stay normalized")
{
    UPoly t = UPoly::x();
    RationalFunction f(t * t - UPoly(1), UPoly(2) * (t - UPoly(1)));
    CHECK(f.num() == (t + UPoly(1)) * UPoly(Rational(1, 2)));
    CHECK(f.den() == UPoly(1));
    RationalFunction g = RationalFunction(1) / RationalFunction(t + UPoly(3));
    CHECK(g.den() == t + UPoly(3));
    CHECK((g * RationalFunction(t + UPoly(3))) == RationalFunction(1));
    CHECK(g.eval(Rational(1)) == Rational(1, 4));
    CHECK_THROWS(g.eval(Rational(-3)));
}
