#pragma once

// Working representation for the basis engines: terms kept sorted in
// decreasing order for one fixed monomial ordering.

#include "infsing/polynomial.hpp"

#include <algorithm>
#include <climits>
#include <vector>

namespace infsing::detail {

template <class K>
struct Term {
    Monomial m;
    K c;
};

template <class K>
struct SortedPoly {
    std::vector<Term<K>> terms;

    bool empty() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().m; }
    const K& lc() const { return terms.front().c; }

    int max_degree() const
    {
        int d = INT_MIN;
        for (const auto& t : terms)
            d = std::max(d, t.m.degree());
        return d;
    }
    int ecart() const { return max_degree() - lm().degree(); }
};

template <class K>
SortedPoly<K> sorted(const Polynomial<K>& p, const MonomialOrder& ord)
{
    SortedPoly<K> r;
    r.terms.reserve(p.size());
    for (const auto& [m, c] : p.terms())
        r.terms.push_back({m, c});
    std::sort(r.terms.begin(), r.terms.end(),
              [&](const Term<K>& a, const Term<K>& b) { return ord.compare(a.m, b.m) > 0; });
    return r;
}

template <class K>
Polynomial<K> unsorted(const SortedPoly<K>& p, const VarList& vars)
{
    Polynomial<K> r(vars);
    for (const auto& t : p.terms)
        r.add_term(t.m, t.c);
    return r;
}

template <class K>
void scale(SortedPoly<K>& p, const K& s)
{
    for (auto& t : p.terms)
        t.c *= s;
}

/// h <- h - c * m * g, dropping terms of degree >= cutoff.
template <class K>
void sub_mul(SortedPoly<K>& h, const K& c, const Monomial& m, const SortedPoly<K>& g,
             const MonomialOrder& ord, int cutoff = INT_MAX)
{
    std::vector<Term<K>> out;
    out.reserve(h.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < h.terms.size() || j < g.terms.size()) {
        if (j == g.terms.size()) {
            if (h.terms[i].m.degree() < cutoff)
                out.push_back(std::move(h.terms[i]));
            ++i;
            continue;
        }
        Monomial gm = m * g.terms[j].m;
        if (gm.degree() >= cutoff) {
            ++j;
            continue;
        }
        int cmp = i == h.terms.size() ? -1 : ord.compare(h.terms[i].m, gm);
        if (cmp > 0) {
            if (h.terms[i].m.degree() < cutoff)
                out.push_back(std::move(h.terms[i]));
            ++i;
        } else if (cmp < 0) {
            K v = c * g.terms[j].c;
            out.push_back({std::move(gm), -v});
            ++j;
        } else {
            K v = h.terms[i].c - c * g.terms[j].c;
            if (!is_zero(v))
                out.push_back({std::move(gm), std::move(v)});
            ++i;
            ++j;
        }
    }
    h.terms = std::move(out);
}

template <class K>
void truncate(SortedPoly<K>& h, int cutoff)
{
    if (cutoff == INT_MAX)
        return;
    std::erase_if(h.terms, [&](const Term<K>& t) { return t.m.degree() >= cutoff; });
}

} // namespace infsing::detail
