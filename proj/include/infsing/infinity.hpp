#pragma once

#include "infsing/errors.hpp"
#include "infsing/local.hpp"
#include "infsing/polynomial.hpp"
#include "infsing/upoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace infsing {

/// f_s(x) = P(x, s) with a single parameter and fixed degree d in x.
struct PolynomialFamily {
    VarList vars;        // x-variables
    std::string param;   // usually "s"
    QPoly P;             // over vars + param
    int degree = 0;

    /// Validates n >= 2, d >= 1 and that the x-degree is the same at s = 0 as generically.
    static PolynomialFamily make(const std::vector<std::string>& vars, const std::string& param,
                                 const std::string& text, std::optional<int> declared_degree = std::nullopt);

    QPoly member(const Rational& s) const;
    std::size_t n() const { return vars.size(); }
};

struct ProjectivePoint {
    std::vector<Rational> coords;

    /// Scales so that the first nonzero coordinate is 1.
    static ProjectivePoint normalized(std::vector<Rational> coords);
    std::size_t pivot() const;
    std::string to_string() const;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);
};

struct PointSet {
    bool positive_dimensional = false;
    std::vector<ProjectivePoint> points;
};

/// Rational solutions of a zero-dimensional system. Throws UnsupportedInput
/// for positive-dimensional or irrational solution sets.
std::vector<std::vector<Rational>> affine_points(const std::vector<QPoly>& gens);

/// Rational points of the projective variety cut out by homogeneous forms,
/// searched chart by chart (x_j = 0 for j < i, x_i = 1).
PointSet projective_points(const std::vector<QPoly>& forms);

enum class Classification { FType, BType, Unsupported };
std::string to_string(Classification c);

/// Projective closure data of one member f.
struct CompactifiedMember {
    VarList vars;
    std::size_t n = 0;
    int d = 0;
    QPoly f, fd, fd1;
    std::string x0;  // name of the homogenizing variable
    QPoly F;         // over vars + x0

    static CompactifiedMember make(const QPoly& f);
};

PointSet sigma_points(const CompactifiedMember& m);
PointSet w_points(const CompactifiedMember& m);

struct ClassificationResult {
    Classification kind = Classification::Unsupported;
    std::optional<int> sing_dim;   // affine critical locus; nullopt = empty
    std::optional<int> sigma_dim;  // projective; nullopt = empty
    std::optional<int> w_dim;
};

ClassificationResult classify(const CompactifiedMember& m);

/// Germ of F - t*x0^d at p, in the chart where p's pivot coordinate is 1.
/// Variables: the remaining coordinates in order, then x0.
QPoly chart_germ(const CompactifiedMember& m, const ProjectivePoint& p, const Rational& t);
TPoly chart_germ_generic(const CompactifiedMember& m, const ProjectivePoint& p);

struct Jump {
    Rational t;
    std::size_t lambda = 0;
};

struct InfinitySingularityRecord {
    ProjectivePoint point;
    std::size_t mu_gen = 0;
    std::optional<std::size_t> mu_inf;  // F-type members only
    std::vector<Jump> jumps;            // ascending t
    std::vector<UPoly> unresolved;      // candidate factors without rational roots
    /// Part of lambda attributed through the Betti formula when jumps sit at
    /// irrational t. lambda_known is false when that part cannot be pinned
    /// to this point alone.
    std::size_t irrational_lambda = 0;
    bool lambda_known = true;

    std::size_t jump_sum() const;
    std::optional<std::size_t> lambda() const;
};

std::size_t mu_gen_at(const CompactifiedMember& m, const ProjectivePoint& p, std::uint64_t seed = kDefaultSeed);
InfinitySingularityRecord lambda_profile(const CompactifiedMember& m, const ProjectivePoint& p,
                                         std::uint64_t seed = kDefaultSeed);
/// Milnor number of {f_d = 0} in P^{n-1} at p.
std::size_t mu_inf_at(const CompactifiedMember& m, const ProjectivePoint& p);

/// Euler characteristic of a smooth degree-d hypersurface in P^n.
long chi_smooth(int n, int d);
/// Euler characteristic of {f_d = 0} in P^{n-1}; n = 2 or 3 only.
long chi_infinity(const CompactifiedMember& m);

/// (d-1)^n - sum mu_gen - sum mu_inf
long betti_formula_F(const CompactifiedMember& m, long sum_mu_gen, long sum_mu_inf);
/// (-1)^(n-1) (chi_smooth(n, d) - 1) - sum mu_gen - (-1)^(n-1) chi_inf
long betti_formula_B(const CompactifiedMember& m, long sum_mu_gen, long chi_inf);

struct ValueSet {
    std::vector<Rational> values;  // sorted by |v|, then v
    std::vector<UPoly> unresolved;
};

/// Roots of the eliminant of (f - t, df) in t. Throws UnsupportedInput for
/// a positive-dimensional critical locus.
ValueSet affine_critical_values(const QPoly& f);
/// Generator of (f - t, df) intersected with Q[t]; 1 when f has no critical points.
UPoly critical_value_eliminant(const QPoly& f);

void sort_values(std::vector<Rational>& values);

struct WRecord {
    ProjectivePoint point;
    std::size_t mu_inf = 0;
};

struct PolynomialLedger {
    Rational s;
    std::size_t n = 0;
    int d = 0;
    std::string f;
    ClassificationResult classification;
    std::size_t mu_total = 0;
    std::vector<InfinitySingularityRecord> records;  // Σ points, canonical order
    std::vector<WRecord> w_records;                  // F-type only
    std::optional<long> chi_inf;
    std::optional<long> betti_chi;
    std::optional<long> betti_mu;
    std::string betti_source;  // "mu-formula" or "chi-formula"
    long betti = 0;
    long lambda_total = 0;
    std::string lambda_source;  // "jump-sum" or "formula-remainder"
    long euler_generic_fiber = 0;
    ValueSet critical_values;
    ValueSet atypical;

    std::size_t sum_mu_gen() const;
};

PolynomialLedger build_ledger(const PolynomialFamily& family, const Rational& s, std::uint64_t seed = kDefaultSeed);

} // namespace infsing
