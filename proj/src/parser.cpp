#include "infsing/parser.hpp"

#include <cctype>

namespace infsing {

namespace {

class Parser {
public:
    Parser(std::string_view text, VarList ring) : s_(text), ring_(std::move(ring)) {}

    QPoly parse()
    {
        QPoly p = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    QPoly expr()
    {
        QPoly acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    QPoly term()
    {
        QPoly acc = unary();
        while (accept('*'))
            acc = acc * unary();
        return acc;
    }

    QPoly unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    QPoly power()
    {
        QPoly base = atom();
        while (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (accept('-'))
                throw ParseError("negative exponent", at);
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected integer exponent", pos_);
            std::string digits = read_digits();
            if (digits.size() > 6)
                throw ParseError("exponent too large", at);
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    std::string read_digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    QPoly atom()
    {
        skip_ws();
        if (pos_ >= s_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            QPoly inner = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            std::string den = "1";
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("expected denominator", pos_);
                std::size_t at = pos_;
                den = read_digits();
                if (Integer(den) == 0)
                    throw ParseError("zero denominator", at);
            }
            Rational q{Integer(num), Integer(den)};
            q.canonicalize();
            return QPoly::constant(ring_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size()
                   && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto idx = ring_.index_of(name);
            if (!idx)
                throw ParseError("undeclared identifier '" + name + "'", start);
            return QPoly::variable(ring_, *idx);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view s_;
    VarList ring_;
    std::size_t pos_ = 0;
};

} // namespace

QPoly parse_polynomial(std::string_view text, const VarList& ring)
{
    return Parser(text, ring).parse();
}

QPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                       const std::vector<std::string>& params)
{
    if (params.size() > 1)
        throw std::invalid_argument("only a single deformation parameter is supported");
    std::vector<std::string> all = vars;
    all.insert(all.end(), params.begin(), params.end());
    return parse_polynomial(text, VarList(std::move(all)));
}

} // namespace infsing
