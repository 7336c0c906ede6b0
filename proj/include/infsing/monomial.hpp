#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace infsing {

/// Exponent vector, one non-negative entry per ambient variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    Monomial(std::initializer_list<int> exps);
    explicit Monomial(std::vector<int> exps);

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, int v);
    int degree() const { return deg_; }
    const std::vector<int>& exponents() const { return e_; }

    bool divides(const Monomial& o) const;
    bool is_one() const { return deg_ == 0; }
    bool coprime(const Monomial& o) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient; caller guarantees b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    /// Plain lexicographic comparison of the exponent vectors (container order).
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

    /// Degree counted over a subset of variables.
    int degree_in(const std::vector<bool>& mask) const;

private:
    std::vector<int> e_;
    int deg_ = 0;
};

/// Graded lexicographic "less", the canonical storage order of Polynomial.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a.exponents() < b.exponents();
    }
};

class MonomialOrder {
public:
    enum class Kind { DegRevLex, Lex, Elimination, LocalDegRevLex };

    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    /// Block order: variables flagged in `eliminated` dominate, each block degrevlex.
    static MonomialOrder elimination(std::vector<bool> eliminated)
    {
        return MonomialOrder(Kind::Elimination, std::move(eliminated));
    }
    /// Negative degree reverse lexicographic; 1 is the largest monomial.
    static MonomialOrder local() { return MonomialOrder(Kind::LocalDegRevLex, {}); }

    Kind kind() const { return kind_; }
    bool is_global() const { return kind_ != Kind::LocalDegRevLex; }
    const std::vector<bool>& eliminated() const { return mask_; }

    /// Positive if a > b, negative if a < b, zero if equal.
    int compare(const Monomial& a, const Monomial& b) const;

    std::string name() const;

private:
    MonomialOrder(Kind k, std::vector<bool> mask) : kind_(k), mask_(std::move(mask)) {}
    Kind kind_;
    std::vector<bool> mask_;
};

} // namespace infsing
