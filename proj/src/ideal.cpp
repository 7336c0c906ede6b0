#include "infsing/ideal.hpp"

#include "infsing/detail/sorted_poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace infsing {

using detail::SortedPoly;
using QSorted = SortedPoly<Rational>;

namespace {

void make_primitive(QSorted& p)
{
    if (p.empty())
        return;
    Integer den = 1;
    for (const auto& t : p.terms)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
    Integer content = 0;
    for (const auto& t : p.terms) {
        Integer v = t.c.get_num() * (den / t.c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    Rational s(den, content);
    s.canonicalize();
    if (sgn(p.lc()) < 0)
        s = -s;
    if (s != 1)
        detail::scale(p, s);
}

const QSorted* find_reducer(const Monomial& m, const std::vector<QSorted>& basis)
{
    for (const auto& g : basis)
        if (g.lm().divides(m))
            return &g;
    return nullptr;
}

// Full reduction: every term of the result is irreducible.
QSorted reduce_full(QSorted h, const std::vector<QSorted>& basis, const MonomialOrder& ord)
{
    QSorted rem;
    while (!h.empty()) {
        const QSorted* g = find_reducer(h.lm(), basis);
        if (!g) {
            rem.terms.push_back(std::move(h.terms.front()));
            h.terms.erase(h.terms.begin());
            continue;
        }
        Rational c = h.lc() / g->lc();
        Monomial q = h.lm() / g->lm();
        detail::sub_mul(h, c, q, *g, ord);
    }
    return rem;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

std::vector<QSorted> groebner(std::vector<QSorted> input, const MonomialOrder& ord)
{
    std::vector<QSorted> g;
    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto add = [&](QSorted h) {
        make_primitive(h);
        std::size_t k = g.size();
        for (std::size_t i = 0; i < k; ++i) {
            pairs.push_back({i, k, lcm(g[i].lm(), h.lm())});
            pending.insert({i, k});
        }
        g.push_back(std::move(h));
    };

    for (auto& f : input) {
        QSorted h = reduce_full(std::move(f), g, ord);
        if (!h.empty())
            add(std::move(h));
    }

    while (!pairs.empty()) {
        // normal strategy: smallest lcm first, ties broken by the ordering, then indices
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            if (a.lcm.degree() != b.lcm.degree())
                return a.lcm.degree() < b.lcm.degree();
            int c = ord.compare(a.lcm, b.lcm);
            if (c != 0)
                return c < 0;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
        Pair p = *best;
        pairs.erase(best);
        pending.erase({p.i, p.j});

        const QSorted& a = g[p.i];
        const QSorted& b = g[p.j];
        if (a.lm().coprime(b.lm()))
            continue;
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == p.i || k == p.j || !g[k].lm().divides(p.lcm))
                continue;
            auto key = [](std::size_t x, std::size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
            chain = !pending.count(key(p.i, k)) && !pending.count(key(p.j, k));
        }
        if (chain)
            continue;

        QSorted s;
        Monomial qa = p.lcm / a.lm();
        Monomial qb = p.lcm / b.lm();
        detail::sub_mul(s, Rational(Rational(-1) / a.lc()), qa, a, ord);
        detail::sub_mul(s, Rational(Rational(1) / b.lc()), qb, b, ord);
        QSorted h = reduce_full(std::move(s), g, ord);
        if (!h.empty())
            add(std::move(h));
    }

    // minimalize then interreduce
    std::vector<QSorted> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !g[j].lm().divides(g[i].lm()))
                continue;
            redundant = g[j].lm() != g[i].lm() || j < i;
        }
        if (!redundant)
            minimal.push_back(g[i]);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const QSorted& x, const QSorted& y) { return ord.compare(x.lm(), y.lm()) < 0; });
    std::vector<QSorted> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<QSorted> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        QSorted head;
        head.terms.push_back(minimal[i].terms.front());
        QSorted tail = minimal[i];
        tail.terms.erase(tail.terms.begin());
        QSorted r = reduce_full(std::move(tail), others, ord);
        head.terms.insert(head.terms.end(), r.terms.begin(), r.terms.end());
        make_primitive(head);
        reduced.push_back(std::move(head));
    }
    return reduced;
}

} // namespace

bool IdealBasis::is_unit() const
{
    return leading.size() == 1 && leading.front().is_one();
}

IdealBasis buchberger(const std::vector<QPoly>& gens, const MonomialOrder& ord)
{
    if (!ord.is_global())
        throw std::invalid_argument("buchberger requires a global monomial ordering");
    IdealBasis out;
    out.ordering = ord;
    out.generators = gens;
    if (!gens.empty())
        out.vars = gens.front().vars();
    std::vector<QSorted> input;
    for (const auto& f : gens) {
        if (!(f.vars() == out.vars))
            throw std::invalid_argument("mismatched ambient variables");
        if (!f.is_zero())
            input.push_back(detail::sorted(f, ord));
    }
    for (auto& g : groebner(std::move(input), ord)) {
        out.leading.push_back(g.lm());
        out.basis.push_back(detail::unsorted(g, out.vars));
    }
    return out;
}

QPoly normal_form(const QPoly& p, const IdealBasis& basis)
{
    if (!basis.ordering.is_global())
        throw std::invalid_argument("normal_form requires a global basis");
    std::vector<QSorted> g;
    for (const auto& b : basis.basis)
        g.push_back(detail::sorted(b, basis.ordering));
    QSorted r = reduce_full(detail::sorted(p, basis.ordering), g, basis.ordering);
    return detail::unsorted(r, p.vars());
}

std::optional<int> krull_dimension(const IdealBasis& basis)
{
    if (basis.is_unit())
        return std::nullopt;
    std::size_t n = basis.vars.size();
    int best = 0;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        int size = __builtin_popcountl(mask);
        if (size <= best)
            continue;
        bool independent = true;
        for (const auto& m : basis.leading) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (m[i] > 0 && !(mask & (1ul << i)))
                    inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent)
            best = size;
    }
    return best;
}

namespace {

std::optional<std::vector<int>> pure_power_bounds(const std::vector<Monomial>& leading, std::size_t n)
{
    std::vector<int> bound(n, -1);
    for (const auto& m : leading) {
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] > 0 && m[i] == m.degree()) {
                if (bound[i] < 0 || m[i] < bound[i])
                    bound[i] = m[i];
            }
        }
        if (m.is_one())
            return std::vector<int>(n, 0);
    }
    for (int b : bound)
        if (b < 0)
            return std::nullopt;
    return bound;
}

} // namespace

std::vector<Monomial> staircase(const std::vector<Monomial>& leading, std::size_t nvars)
{
    std::vector<Monomial> out;
    auto bound = pure_power_bounds(leading, nvars);
    if (!bound)
        return out;
    for (int b : *bound)
        if (b == 0)
            return out;
    std::vector<int> e(nvars, 0);
    while (true) {
        Monomial m(e);
        bool in_ideal = false;
        for (const auto& l : leading)
            if (l.divides(m)) {
                in_ideal = true;
                break;
            }
        if (!in_ideal)
            out.push_back(m);
        std::size_t i = 0;
        while (i < nvars) {
            if (++e[i] < (*bound)[i])
                break;
            e[i] = 0;
            ++i;
        }
        if (i == nvars)
            break;
    }
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::optional<std::size_t> staircase_size(const std::vector<Monomial>& leading, std::size_t nvars)
{
    if (!pure_power_bounds(leading, nvars))
        return std::nullopt;
    return staircase(leading, nvars).size();
}

std::optional<std::size_t> quotient_dimension(const IdealBasis& basis)
{
    if (basis.leading.empty())
        return basis.vars.size() == 0 ? std::optional<std::size_t>(1) : std::nullopt;
    return staircase_size(basis.leading, basis.vars.size());
}

std::vector<QPoly> eliminate(const std::vector<QPoly>& gens, const std::vector<std::string>& keep)
{
    if (gens.empty())
        return {};
    const VarList& vars = gens.front().vars();
    std::vector<bool> drop(vars.size(), true);
    for (const auto& k : keep)
        drop[vars.require(k)] = false;
    IdealBasis gb = buchberger(gens, MonomialOrder::elimination(drop));
    std::vector<QPoly> out;
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        if (gb.leading[i].degree_in(drop) == 0)
            out.push_back(gb.basis[i]);
    return out;
}

QPoly divide_exact(const QPoly& a, const QPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("division by the zero polynomial");
    QPoly rest = a;
    QPoly q(a.vars());
    const auto& [bm, bc] = *b.terms().rbegin();
    while (!rest.is_zero()) {
        const auto& [m, c] = *rest.terms().rbegin();
        if (!bm.divides(m))
            throw std::domain_error("divide_exact: not divisible");
        QPoly t = QPoly::term(a.vars(), m / bm, c / bc);
        q += t;
        rest -= t * b;
    }
    return q;
}

QPoly gcd(const QPoly& a, const QPoly& b)
{
    if (a.is_zero())
        return primitive(b);
    if (b.is_zero())
        return primitive(a);
    if (a.is_constant() || b.is_constant())
        return QPoly::constant(a.vars(), 1);
    std::string w = a.vars().fresh("w");
    VarList ext = a.vars().with_appended(w);
    QPoly wa = change_ring(a, ext) * QPoly::variable(ext, w);
    QPoly wb = change_ring(b, ext) * (QPoly::constant(ext, 1) - QPoly::variable(ext, w));
    auto inter = eliminate({wa, wb}, a.vars().names());
    if (inter.empty())
        throw std::logic_error("gcd: empty intersection");
    auto smallest = std::min_element(inter.begin(), inter.end(), [](const QPoly& x, const QPoly& y) {
        return x.degree() < y.degree();
    });
    QPoly l = specialize<Rational>(*smallest, {{w, Rational(0)}});
    return primitive(divide_exact(a * b, l));
}

QPoly squarefree_part(const QPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("squarefree_part of the zero polynomial");
    QPoly g = p;
    for (std::size_t i = 0; i < p.nvars() && !g.is_constant(); ++i) {
        QPoly d = derivative(p, i);
        if (!d.is_zero())
            g = gcd(g, d);
    }
    return primitive(divide_exact(p, g));
}

std::vector<QPoly> jacobian(const QPoly& f)
{
    std::vector<QPoly> out;
    for (std::size_t i = 0; i < f.nvars(); ++i)
        out.push_back(derivative(f, i));
    return out;
}

std::optional<std::size_t> total_mu(const QPoly& f)
{
    auto gens = jacobian(f);
    bool all_zero = std::all_of(gens.begin(), gens.end(), [](const QPoly& g) { return g.is_zero(); });
    if (all_zero)
        return f.nvars() == 0 ? std::optional<std::size_t>(1) : std::nullopt;
    return quotient_dimension(buchberger(gens));
}

} // namespace infsing
