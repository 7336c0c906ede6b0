#include "infsing/family_file.hpp"

#include "infsing/parser.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace infsing {

namespace {

std::string trim(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_commas(std::string_view s)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string item = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
        out.push_back(item);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

bool valid_identifier(const std::string& s)
{
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

} // namespace

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    for (const auto& item : split_commas(text))
        out.push_back(parse_rational(item));
    return out;
}

FamilyFile parse_family_file(std::string_view text)
{
    FamilyFile ff;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw FamilyFileError("expected 'key = value'", lineno);
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        if (!seen.insert(key).second)
            throw FamilyFileError("duplicate key '" + key + "'", lineno);
        try {
            if (key == "name") {
                ff.name = value;
            } else if (key == "vars") {
                ff.vars = split_commas(value);
                for (const auto& v : ff.vars)
                    if (!valid_identifier(v))
                        throw FamilyFileError("invalid variable name '" + v + "'", lineno);
            } else if (key == "param") {
                if (!valid_identifier(value))
                    throw FamilyFileError("invalid parameter name '" + value + "'", lineno);
                ff.param = value;
            } else if (key == "f") {
                ff.f = value;
                ff.f_line = lineno;
            } else if (key == "degree") {
                std::size_t used = 0;
                int d = std::stoi(value, &used);
                if (used != value.size())
                    throw FamilyFileError("degree must be an integer", lineno);
                ff.degree = d;
            } else if (key == "samples") {
                ff.samples = parse_rational_list(value);
            } else if (key.rfind("expect.", 0) == 0) {
                std::string rest = key.substr(7);
                auto dot = rest.find('.');
                if (dot == std::string::npos)
                    throw FamilyFileError("expected 'expect.<quantity>.<s>'", lineno);
                Expectation e{rest.substr(0, dot), parse_rational(rest.substr(dot + 1)), value};
                const auto& known = expectation_quantities();
                if (std::find(known.begin(), known.end(), e.quantity) == known.end())
                    throw FamilyFileError("unknown quantity '" + e.quantity + "'", lineno);
                ff.expectations.push_back(std::move(e));
            } else {
                throw FamilyFileError("unknown key '" + key + "'", lineno);
            }
        } catch (const FamilyFileError&) {
            throw;
        } catch (const std::exception& ex) {
            throw FamilyFileError(ex.what(), lineno);
        }
    }
    if (ff.vars.empty())
        throw FamilyFileError("missing 'vars'", lineno);
    if (ff.f.empty())
        throw FamilyFileError("missing 'f'", lineno);
    return ff;
}

FamilyFile load_family_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open family file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    FamilyFile ff = parse_family_file(buf.str());
    if (ff.name.empty())
        ff.name = std::filesystem::path(path).stem().string();
    return ff;
}

PolynomialFamily FamilyFile::family() const
{
    try {
        return PolynomialFamily::make(vars, param, f, degree);
    } catch (const ParseError& e) {
        throw FamilyFileError(std::string("in f: ") + e.what(), f_line);
    }
}

} // namespace infsing
