#pragma once

#include "infsing/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace infsing {

/// Generators together with a computed Groebner (global order) or standard
/// (local order) basis. The basis is reduced, primitive and sorted by
/// increasing leading monomial, so equal inputs give identical output.
struct IdealBasis {
    VarList vars;
    MonomialOrder ordering = MonomialOrder::degrevlex();
    std::vector<QPoly> generators;
    std::vector<QPoly> basis;
    std::vector<Monomial> leading;

    bool is_unit() const;
};

IdealBasis buchberger(const std::vector<QPoly>& gens, const MonomialOrder& ord = MonomialOrder::degrevlex());

/// Full reduction against a global basis; throws std::invalid_argument for local bases.
QPoly normal_form(const QPoly& p, const IdealBasis& basis);

/// Affine dimension of V(I); nullopt for the empty variety (unit ideal).
std::optional<int> krull_dimension(const IdealBasis& basis);

/// Number of standard monomials; nullopt when infinite.
std::optional<std::size_t> quotient_dimension(const IdealBasis& basis);
std::optional<std::size_t> staircase_size(const std::vector<Monomial>& leading, std::size_t nvars);
/// Standard monomials of a zero-dimensional leading ideal (empty if infinite).
std::vector<Monomial> staircase(const std::vector<Monomial>& leading, std::size_t nvars);

/// Generators of I intersected with Q[keep], expressed in the original ring.
std::vector<QPoly> eliminate(const std::vector<QPoly>& gens, const std::vector<std::string>& keep);

/// Exact division; throws std::domain_error if b does not divide a.
QPoly divide_exact(const QPoly& a, const QPoly& b);

/// Multivariate gcd (primitive), computed from the lcm as an elimination ideal.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Generator of the radical of (p): p / gcd(p, dp/dx_1, ..., dp/dx_n), primitive.
QPoly squarefree_part(const QPoly& p);

std::vector<QPoly> jacobian(const QPoly& f);

/// Total Milnor number dim Q[x]/(df/dx); nullopt for non-isolated critical loci.
std::optional<std::size_t> total_mu(const QPoly& f);

} // namespace infsing
