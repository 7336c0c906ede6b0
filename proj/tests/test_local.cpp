#include "germs.hpp"
#include "support.hpp"

#include "infsing/ideal.hpp"
#include "infsing/local.hpp"

#include <doctest.h>

using namespace infsing;
using infsing::testing::P;

namespace {
const std::vector<std::string> XY{"x", "y"};

// p(A * v) for an integer matrix A acting on the variable vector.
QPoly linear_substitution(const QPoly& p, const std::vector<std::vector<long>>& A)
{
    std::size_t n = p.nvars();
    std::vector<QPoly> image;
    for (std::size_t i = 0; i < n; ++i) {
        QPoly row(p.vars());
        for (std::size_t j = 0; j < n; ++j)
            row += QPoly::variable(p.vars(), j) * Rational(A[i][j]);
        image.push_back(row);
    }
    QPoly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        QPoly t = QPoly::constant(p.vars(), c);
        for (std::size_t i = 0; i < n; ++i)
            t *= image[i].pow(static_cast<unsigned>(m[i]));
        out += t;
    }
    return out;
}

std::vector<std::vector<long>> random_unimodular(std::size_t n, std::mt19937_64& rng)
{
    std::vector<std::vector<long>> A(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        A[i][i] = 1;
    for (int step = 0; step < 4; ++step) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j)
            continue;
        long k = static_cast<long>(rng() % 5) - 2;
        for (std::size_t c = 0; c < n; ++c)
            A[i][c] += k * A[j][c];
    }
    return A;
}

} // namespace

TEST_CASE("standard bases in the local ring")
{
    IdealBasis mono = mora_standard_basis({P("x^2", XY), P("y^3", XY)});
    CHECK(mono.basis.size() == 2);
    CHECK(staircase_size(mono.leading, 2) == 6);

    IdealBasis unit_multiple = mora_standard_basis({P("x + x^2", XY), P("y", XY)});
    std::vector<Monomial> expect{Monomial{0, 1}, Monomial{1, 0}};
    std::vector<Monomial> got = unit_multiple.leading;
    std::sort(got.begin(), got.end());
    CHECK(got == expect);

    IdealBasis j = mora_standard_basis(jacobian(P("x^3 + x*y^3", XY)));
    CHECK(staircase_size(j.leading, 2) == 7);
}

TEST_CASE("local Milnor numbers")
{
    CHECK(local_milnor(P("x^4 + y^2", XY)) == 3);
    CHECK(local_milnor(P("x", XY)) == 0);
    CHECK(local_milnor(P("x^2 + y^2 + x^5*y", XY)) == 1);
    CHECK_FALSE(local_milnor(P("x^2*y", XY)).has_value());
    CHECK_THROWS_AS(local_milnor(P("x^2 + 1", XY)), std::invalid_argument);
}

TEST_CASE("truncated-dimension oracle")
{
    CHECK(local_milnor_oracle(P("x^4 + y^2", XY), 8) == 3);
    CHECK(local_milnor_oracle(P("x^2 + y^2 + z^2", {"x", "y", "z"}), 4) == 1);
    CHECK_FALSE(local_milnor_oracle(P("x^2*y", XY), 8).has_value());
    CHECK_FALSE(local_milnor_oracle(P("x^2*y", XY), 14).has_value());
}

TEST_CASE("parametric Milnor numbers")
{
    QPoly plain = P("x^3 + x*y^3", XY);
    ParametricMilnorResult r = parametric_local_milnor(embed(plain));
    CHECK(r.mu_generic == local_milnor(plain));
    CHECK(r.candidates.empty());

    // t x^2 + y^3: A_2 generically, non-isolated at t = 0.
    TPoly g = to_function_field(P("t*x^2 + y^3", {"x", "y", "t"}), "t");
    ParametricMilnorResult q = parametric_local_milnor(g);
    CHECK(q.mu_generic == 2);
    bool has_t = false;
    for (const auto& c : q.candidates)
        has_t = has_t || c == UPoly::x();
    CHECK(has_t);
}

TEST_CASE("generic witnesses avoid candidate roots and are reproducible")
{
    std::vector<UPoly> avoid{UPoly::x(), UPoly::x() - UPoly(1)};
    auto w1 = generic_witnesses(avoid, 6, 5);
    auto w2 = generic_witnesses(avoid, 6, 5);
    CHECK(w1 == w2);
    for (const auto& w : w1)
        for (const auto& a : avoid)
            CHECK(a.eval(w) != 0);
}

TEST_CASE("property: local Milnor number agrees with the oracle on the simple germs")
{
    for (const auto& g : infsing::testing::simple_germs()) {
        CAPTURE(g.name);
        QPoly f = P(g.text, g.vars);
        CHECK(local_milnor(f) == g.mu);
        CHECK(local_milnor_oracle(f, 16) == g.mu);
    }
}

TEST_CASE("property: Thom-Sebastiani multiplicativity")
{
    std::mt19937_64 rng(31);
    VarList vars({"x", "y", "z"});
    for (int trial = 0; trial < 5; ++trial) {
        int a = 2 + static_cast<int>(rng() % 3), b = 2 + static_cast<int>(rng() % 3);
        int c = 2 + static_cast<int>(rng() % 4);
        QPoly f = infsing::testing::random_sqh(vars, 0, 1, a, b, rng);
        QPoly g = QPoly::variable(vars, 2).pow(c) + infsing::testing::small_rational(rng) * QPoly::variable(vars, 2).pow(c + 1);
        auto mf = local_milnor(f + QPoly::variable(vars, 2).pow(2));
        auto mg = local_milnor(g + QPoly::variable(vars, 0).pow(2) + QPoly::variable(vars, 1).pow(2));
        auto sum = local_milnor(f + g);
        REQUIRE(mf.has_value());
        REQUIRE(mg.has_value());
        CHECK(*mf == static_cast<std::size_t>((a - 1) * (b - 1)));
        CHECK(*mg == static_cast<std::size_t>(c - 1));
        CHECK(sum == *mf * *mg);
    }
}

TEST_CASE("property: zero Milnor number exactly at smooth points")
{
    std::mt19937_64 rng(37);
    VarList vars(XY);
    for (int trial = 0; trial < 20; ++trial) {
        QPoly p = infsing::testing::random_poly(vars, 4, 5, rng);
        p.add_term(Monomial(2), -p.constant_term());
        bool linear = false;
        for (std::size_t i = 0; i < 2; ++i)
            linear = linear || derivative(p, i).constant_term() != 0;
        auto mu = local_milnor(p);
        if (linear)
            CHECK(mu == 0);
        else
            CHECK(mu != std::optional<std::size_t>(0));
    }
}

TEST_CASE("property: invariance under unimodular coordinate changes")
{
    std::mt19937_64 rng(41);
    for (const auto& g : infsing::testing::simple_germs()) {
        if (g.vars.size() != 2)
            continue;
        CAPTURE(g.name);
        QPoly f = P(g.text, g.vars);
        QPoly h = linear_substitution(f, random_unimodular(2, rng));
        CHECK(local_milnor(h) == g.mu);
    }
}

TEST_CASE("property: specializing generic t reproduces the generic Milnor number")
{
    std::vector<std::string> XYT{"x", "y", "t"};
    for (const char* text : {"x^3 + t*x*y^2 + y^4", "x^2*y + t*y^3 + x^4", "x^4 + (t^2 - 1)*x^2*y + y^2"}) {
        CAPTURE(text);
        TPoly g = to_function_field(P(text, XYT), "t");
        ParametricMilnorResult r = parametric_local_milnor(g);
        REQUIRE(r.mu_generic.has_value());
        std::mt19937_64 rng(43);
        int checked = 0;
        while (checked < 2) {
            Rational t = infsing::testing::small_rational(rng, 9);
            bool bad = false;
            for (const auto& c : r.candidates)
                bad = bad || c.eval(t) == 0;
            if (bad)
                continue;
            CHECK(local_milnor(specialize_t(g, t)) == r.mu_generic);
            ++checked;
        }
    }
}
