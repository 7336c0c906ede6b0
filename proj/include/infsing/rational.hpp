#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace infsing {

/// Exact rational number. GMP keeps it in lowest terms with a positive
/// denominator after every operation that goes through `canonicalize`.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos)
        throw std::invalid_argument("empty rational literal");
    s = s.substr(first, last - first + 1);
    if (!s.empty() && s[0] == '+')
        s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

inline bool is_zero(const Rational& q)
{
    return sgn(q) == 0;
}

inline bool is_one(const Rational& q)
{
    return q == 1;
}

inline bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

/// Height used for ordering witnesses: |num| + den.
inline Integer height(const Rational& q)
{
    return abs(q.get_num()) + q.get_den();
}

} // namespace infsing
