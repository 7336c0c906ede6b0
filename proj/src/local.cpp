#include "infsing/local.hpp"

#include "infsing/detail/sorted_poly.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace infsing {

using detail::SortedPoly;

namespace {

const MonomialOrder& local_order()
{
    static const MonomialOrder ord = MonomialOrder::local();
    return ord;
}

/// Tangent cone algorithm with ecart-driven reducer choice. Once the leading
/// ideal becomes zero-dimensional with staircase degree below k, the ideal
/// contains m^k and every term of degree > k can be discarded.
template <class K>
class Mora {
public:
    using Poly = SortedPoly<K>;
    using Recorder = std::function<void(const K&)>;

    Mora(std::size_t nvars, Recorder record) : nvars_(nvars), record_(std::move(record)) {}

    void run(const std::vector<Poly>& gens)
    {
        for (const auto& g : gens) {
            if (unit_)
                return;
            Poly h = reduce(g);
            if (!h.empty())
                insert(std::move(h));
        }
        while (!pairs_.empty() && !unit_) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
                if (a.lcm.degree() != b.lcm.degree())
                    return a.lcm.degree() < b.lcm.degree();
                int c = local_order().compare(a.lcm, b.lcm);
                if (c != 0)
                    return c > 0;
                return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
            Pair p = *best;
            pairs_.erase(best);
            pending_.erase({p.i, p.j});
            if (p.lcm.degree() >= cutoff_)
                continue;
            const Poly& a = basis_[p.i];
            const Poly& b = basis_[p.j];
            if (a.lm().coprime(b.lm()) || chain_applies(p))
                continue;
            Poly s;
            detail::sub_mul(s, K(-1), p.lcm / a.lm(), a, local_order(), cutoff_);
            detail::sub_mul(s, K(1), p.lcm / b.lm(), b, local_order(), cutoff_);
            Poly h = reduce(std::move(s));
            if (!h.empty())
                insert(std::move(h));
        }
    }

    bool unit() const { return unit_; }

    /// Minimal basis sorted by decreasing leading monomial.
    std::vector<Poly> result() const
    {
        std::vector<Poly> out;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j || !basis_[j].lm().divides(basis_[i].lm()))
                    continue;
                redundant = basis_[j].lm() != basis_[i].lm() || j < i;
            }
            if (!redundant)
                out.push_back(basis_[i]);
        }
        std::sort(out.begin(), out.end(),
                  [](const Poly& x, const Poly& y) { return local_order().compare(x.lm(), y.lm()) > 0; });
        return out;
    }

    std::vector<Monomial> leading() const
    {
        std::vector<Monomial> out;
        for (const auto& p : result())
            out.push_back(p.lm());
        return out;
    }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };

    bool chain_applies(const Pair& p) const
    {
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == p.i || k == p.j || !basis_[k].lm().divides(p.lcm))
                continue;
            auto key = [](std::size_t x, std::size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
            if (!pending_.count(key(p.i, k)) && !pending_.count(key(p.j, k)))
                return true;
        }
        return false;
    }

    Poly reduce(Poly h) const
    {
        detail::truncate(h, cutoff_);
        std::deque<Poly> extra;
        while (!h.empty()) {
            const Poly* best = nullptr;
            bool best_extra = false;
            int best_ecart = 0;
            auto consider = [&](const Poly& g, bool is_extra) {
                if (!g.lm().divides(h.lm()))
                    return;
                int e = g.ecart();
                if (!best || e < best_ecart) {
                    best = &g;
                    best_ecart = e;
                    best_extra = is_extra;
                }
            };
            for (const auto& g : basis_)
                consider(g, false);
            for (const auto& g : extra)
                consider(g, true);
            if (!best)
                break;
            if (best_ecart > h.ecart())
                extra.push_back(h);
            if (best_extra)
                record_(best->lc());
            K c = h.lc() / best->lc();
            Monomial q = h.lm() / best->lm();
            detail::sub_mul(h, c, q, *best, local_order(), cutoff_);
        }
        return h;
    }

    void insert(Poly h)
    {
        record_(h.lc());
        detail::scale(h, K(K(1) / h.lc()));
        if (h.lm().is_one())
            unit_ = true;
        std::size_t k = basis_.size();
        for (std::size_t i = 0; i < k; ++i) {
            pairs_.push_back({i, k, lcm(basis_[i].lm(), h.lm())});
            pending_.insert({i, k});
        }
        basis_.push_back(std::move(h));
        update_cutoff();
    }

    void update_cutoff()
    {
        std::vector<Monomial> lead;
        for (const auto& g : basis_)
            lead.push_back(g.lm());
        if (!staircase_size(lead, nvars_))
            return;
        int top = -1;
        for (const auto& m : staircase(lead, nvars_))
            top = std::max(top, m.degree());
        // m^(top+1) lies in the ideal; keep one extra degree so no basis
        // element loses its leading term.
        int c = top + 2;
        if (c < cutoff_) {
            cutoff_ = c;
            for (auto& g : basis_)
                detail::truncate(g, cutoff_);
        }
    }

    std::size_t nvars_;
    Recorder record_;
    std::vector<Poly> basis_;
    std::vector<Pair> pairs_;
    std::set<std::pair<std::size_t, std::size_t>> pending_;
    int cutoff_ = INT_MAX;
    bool unit_ = false;
};

template <class K>
std::vector<SortedPoly<K>> sorted_jacobian(const Polynomial<K>& f)
{
    std::vector<SortedPoly<K>> out;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        auto d = derivative(f, i);
        if (!d.is_zero())
            out.push_back(detail::sorted(d, local_order()));
    }
    return out;
}

template <class K>
std::optional<std::size_t> staircase_count(const Mora<K>& mora, std::size_t nvars)
{
    if (mora.unit())
        return 0;
    return staircase_size(mora.leading(), nvars);
}

} // namespace

IdealBasis mora_standard_basis(const std::vector<QPoly>& gens)
{
    IdealBasis out;
    out.ordering = local_order();
    out.generators = gens;
    if (gens.empty())
        return out;
    out.vars = gens.front().vars();
    std::vector<SortedPoly<Rational>> input;
    for (const auto& g : gens) {
        if (!(g.vars() == out.vars))
            throw std::invalid_argument("mismatched ambient variables");
        if (!g.is_zero())
            input.push_back(detail::sorted(g, local_order()));
    }
    Mora<Rational> mora(out.vars.size(), [](const Rational&) {});
    mora.run(input);
    for (const auto& p : mora.result()) {
        out.leading.push_back(p.lm());
        out.basis.push_back(primitive(detail::unsorted(p, out.vars)));
    }
    return out;
}

std::optional<std::size_t> local_milnor(const QPoly& germ)
{
    if (!is_zero(germ.constant_term()))
        throw std::invalid_argument("germ does not vanish at the origin");
    Mora<Rational> mora(germ.nvars(), [](const Rational&) {});
    mora.run(sorted_jacobian(germ));
    return staircase_count(mora, germ.nvars());
}

namespace {

std::vector<Monomial> monomials_below(std::size_t nvars, int D)
{
    std::vector<Monomial> out;
    std::vector<int> e(nvars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == nvars) {
            out.emplace_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, D - 1);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return local_order().compare(a, b) > 0; });
    return out;
}

struct TruncatedResult {
    std::size_t dimension;
    int max_standard_degree;
};

TruncatedResult truncated_quotient(const QPoly& germ, int D)
{
    std::size_t n = germ.nvars();
    auto cols = monomials_below(n, D);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < cols.size(); ++i)
        index.emplace(cols[i], i);

    using Row = std::map<std::size_t, Rational>;
    std::map<std::size_t, Row> pivots;

    auto insert_row = [&](Row row) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto it = pivots.find(lead->first);
            if (it == pivots.end()) {
                Rational inv = 1 / lead->second;
                for (auto& [c, v] : row)
                    v *= inv;
                std::size_t key = lead->first;
                pivots.emplace(key, std::move(row));
                return;
            }
            Rational factor = lead->second;
            for (const auto& [c, v] : it->second) {
                Rational nv = row[c] - factor * v;
                if (sgn(nv) == 0)
                    row.erase(c);
                else
                    row[c] = nv;
            }
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        QPoly g = derivative(germ, i);
        if (g.is_zero())
            continue;
        for (const auto& m : cols) {
            Row row;
            for (const auto& [gm, c] : g.terms()) {
                Monomial prod = m * gm;
                if (prod.degree() >= D)
                    continue;
                row[index.at(prod)] += c;
            }
            std::erase_if(row, [](const auto& kv) { return sgn(kv.second) == 0; });
            insert_row(std::move(row));
        }
    }
    TruncatedResult r{cols.size() - pivots.size(), -1};
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (!pivots.count(i))
            r.max_standard_degree = std::max(r.max_standard_degree, cols[i].degree());
    return r;
}

} // namespace

std::size_t truncated_jacobian_dimension(const QPoly& germ, int D)
{
    if (D < 1)
        throw std::invalid_argument("degree cap must be positive");
    return truncated_quotient(germ, D).dimension;
}

std::optional<std::size_t> local_milnor_oracle(const QPoly& germ, int cap)
{
    if (cap < 1)
        throw std::invalid_argument("degree cap must be positive");
    if (!is_zero(germ.constant_term()))
        throw std::invalid_argument("germ does not vanish at the origin");
    std::optional<std::size_t> previous;
    for (int D = 1; D <= cap; ++D) {
        TruncatedResult r = truncated_quotient(germ, D);
        if (previous && *previous == r.dimension && r.max_standard_degree < D - 1)
            return r.dimension;
        previous = r.dimension;
    }
    return std::nullopt;
}

std::vector<Rational> generic_witnesses(const std::vector<UPoly>& avoid, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Rational> out;
    while (out.size() < count) {
        long num = static_cast<long>(rng() % 41) - 20;
        long den = static_cast<long>(rng() % 9) + 1;
        Rational r(num, den);
        r.canonicalize();
        if (std::find(out.begin(), out.end(), r) != out.end())
            continue;
        bool bad = false;
        for (const auto& u : avoid)
            if (sgn(u.eval(r)) == 0)
                bad = true;
        if (!bad)
            out.push_back(r);
    }
    return out;
}

ParametricMilnorResult parametric_local_milnor(const TPoly& germ, std::uint64_t seed)
{
    if (!is_zero(germ.constant_term()))
        throw std::invalid_argument("germ does not vanish at the origin");

    std::vector<UPoly> recorded;
    auto note = [&](const UPoly& u) {
        if (u.is_constant())
            return;
        for (auto& [piece, mult] : squarefree_factorization(u)) {
            UPoly m = piece.monic();
            if (std::find(recorded.begin(), recorded.end(), m) == recorded.end())
                recorded.push_back(m);
        }
    };
    auto record = [&](const RationalFunction& c) {
        note(c.num());
        note(c.den());
    };
    for (const auto& [m, c] : germ.terms())
        note(c.den());

    Mora<RationalFunction> mora(germ.nvars(), record);
    mora.run(sorted_jacobian(germ));

    ParametricMilnorResult out;
    out.mu_generic = staircase_count(mora, germ.nvars());
    std::sort(recorded.begin(), recorded.end(), [](const UPoly& a, const UPoly& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a.to_string() < b.to_string();
    });
    out.candidates = recorded;
    out.witnesses = generic_witnesses(out.candidates, 2, seed);
    for (const auto& w : out.witnesses) {
        auto mu = local_milnor(specialize_t(germ, w));
        if (mu != out.mu_generic)
            throw std::runtime_error("generic Milnor number not confirmed at t = " + w.get_str());
    }
    return out;
}

} // namespace infsing
