#pragma once

#include "infsing/audit.hpp"
#include "infsing/infinity.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace infsing {

class FamilyFileError : public std::invalid_argument {
public:
    FamilyFileError(const std::string& what, std::size_t line)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Flat `key = value` description of a one-parameter family:
///
///     name = example
///     vars = x, y
///     param = s
///     f = (x*y)^3 + s*x*y + x
///     degree = 6
///     samples = 0, 1, 1/2
///     expect.mu.1 = 1
///
/// Lines starting with # are comments.
struct FamilyFile {
    std::string name;
    std::vector<std::string> vars;
    std::string param = "s";
    std::string f;
    std::optional<int> degree;
    std::optional<std::vector<Rational>> samples;
    std::vector<Expectation> expectations;
    std::size_t f_line = 0;  // where `f` was given, for diagnostics

    /// Parse errors in `f` are reported against f_line.
    PolynomialFamily family() const;
};

FamilyFile parse_family_file(std::string_view text);
/// Reads and parses; the name defaults to the file stem.
FamilyFile load_family_file(const std::string& path);

/// Comma-separated rationals, e.g. "0, 1, -1/3".
std::vector<Rational> parse_rational_list(std::string_view text);

} // namespace infsing
