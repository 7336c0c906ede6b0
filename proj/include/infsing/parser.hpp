#pragma once

#include "infsing/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace infsing {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses an expression over `vars` followed by `params` (at most one parameter).
/// Grammar: identifiers, literals p or p/q, + - * ^ and parentheses; unary minus.
QPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                       const std::vector<std::string>& params = {});

QPoly parse_polynomial(std::string_view text, const VarList& ring);

} // namespace infsing
