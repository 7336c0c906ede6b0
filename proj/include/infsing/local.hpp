#pragma once

#include "infsing/ideal.hpp"
#include "infsing/polynomial.hpp"
#include "infsing/upoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace infsing {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Standard basis for the negative degree reverse lexicographic ordering
/// (tangent cone algorithm). Elements are primitive and sorted by leading
/// monomial; the basis is minimal but tails are not reduced.
IdealBasis mora_standard_basis(const std::vector<QPoly>& gens);

/// Milnor number of the germ at the origin; nullopt when the critical point
/// is not isolated. Throws std::invalid_argument if the germ does not vanish
/// at the origin.
std::optional<std::size_t> local_milnor(const QPoly& germ);

/// dim Q[y]/(J + m^D) by linear algebra, raising D until two consecutive caps
/// agree with the staircase strictly below degree D - 1. nullopt if this
/// never happens for D <= cap.
std::optional<std::size_t> local_milnor_oracle(const QPoly& germ, int cap);

/// Plain truncated dimension dim Q[y]/(J + m^D) for one D.
std::size_t truncated_jacobian_dimension(const QPoly& germ, int D);

struct ParametricMilnorResult {
    std::optional<std::size_t> mu_generic;
    /// Monic squarefree polynomials in t; every t where the specialized
    /// Milnor number exceeds mu_generic is a root of one of them.
    std::vector<UPoly> candidates;
    std::vector<Rational> witnesses;
};

/// Milnor number over Q(t) for a germ whose coefficients depend on t.
/// The generic value is confirmed at two seeded witnesses avoiding all
/// candidate roots; disagreement throws std::runtime_error.
ParametricMilnorResult parametric_local_milnor(const TPoly& germ, std::uint64_t seed = kDefaultSeed);

/// Pseudorandom rationals of small height that avoid the roots of `avoid`.
std::vector<Rational> generic_witnesses(const std::vector<UPoly>& avoid, std::size_t count, std::uint64_t seed);

} // namespace infsing
