#pragma once

#include "infsing/parser.hpp"
#include "infsing/polynomial.hpp"

#include <random>
#include <string>
#include <vector>

namespace infsing::testing {

inline QPoly P(const std::string& text, const std::vector<std::string>& vars, const std::vector<std::string>& params = {})
{
    return parse_polynomial(text, vars, params);
}

inline Rational small_rational(std::mt19937_64& rng, int height = 5)
{
    long num = static_cast<long>(rng() % (2 * height + 1)) - height;
    long den = static_cast<long>(rng() % 3) + 1;
    return make_rational(num, den);
}

inline QPoly random_poly(const VarList& vars, int max_degree, int terms, std::mt19937_64& rng)
{
    QPoly p(vars);
    for (int k = 0; k < terms; ++k) {
        std::vector<int> e(vars.size(), 0);
        int budget = static_cast<int>(rng() % (max_degree + 1));
        for (int b = 0; b < budget; ++b)
            ++e[rng() % vars.size()];
        p.add_term(Monomial(e), small_rational(rng));
    }
    return p;
}

inline std::string corpus_path(const std::string& name)
{
    return std::string(INFSING_CORPUS_DIR) + "/" + name;
}

} // namespace infsing::testing
