#include "toricq/poly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tq {

namespace {

bool divides(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp lcm_exp(const Exp& a, const Exp& b) {
    Exp c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
    return c;
}

Exp diff(const Exp& a, const Exp& b) {
    Exp c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

struct Cmp {
    const MonomialOrder* o;
    bool operator()(const Exp& a, const Exp& b) const { return o->less(b, a); } // descending
};

Poly normalize(std::map<Exp, Rat, Cmp>& m) {
    Poly p;
    for (auto& [e, c] : m)
        if (c != 0) p.terms.push_back({e, c});
    if (!p.terms.empty()) {
        Rat lc = p.terms[0].second;
        for (auto& t : p.terms) t.second /= lc;
    }
    return p;
}

// f - c * x^shift * g, accumulated in a map
void axpy(std::map<Exp, Rat, Cmp>& acc, const Rat& c, const Exp& shift, const Poly& g) {
    for (auto& [e, k] : g.terms) {
        Exp s(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) s[i] = e[i] + shift[i];
        Rat& slot = acc[s];
        slot -= c * k;
    }
}

Poly reduce(const Poly& f, const std::vector<Poly>& G, const MonomialOrder& o) {
    std::map<Exp, Rat, Cmp> acc(Cmp{&o});
    for (auto& [e, c] : f.terms) acc[e] += c;
    std::map<Exp, Rat, Cmp> done(Cmp{&o});
    while (!acc.empty()) {
        auto it = acc.begin();
        if (it->second == 0) {
            acc.erase(it);
            continue;
        }
        const Poly* g = nullptr;
        for (auto& h : G)
            if (!h.terms.empty() && divides(h.terms[0].first, it->first)) {
                g = &h;
                break;
            }
        if (!g) {
            done[it->first] += it->second;
            acc.erase(it);
            continue;
        }
        Rat c = it->second / g->terms[0].second;
        Exp sh = diff(it->first, g->terms[0].first);
        axpy(acc, c, sh, *g);
    }
    return normalize(done);
}

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& o) {
    Exp L = lcm_exp(f.terms[0].first, g.terms[0].first);
    std::map<Exp, Rat, Cmp> acc(Cmp{&o});
    axpy(acc, Rat(-1) / f.terms[0].second, diff(L, f.terms[0].first), f);
    axpy(acc, Rat(1) / g.terms[0].second, diff(L, g.terms[0].first), g);
    return normalize(acc);
}

} // namespace

Poly poly_from(const BinomialGen& g, const MonomialOrder& o) {
    std::map<Exp, Rat, Cmp> acc(Cmp{&o});
    acc[g.plus] += 1;
    if (!g.mono) acc[g.minus] -= 1;
    return normalize(acc);
}

std::vector<Poly> poly_groebner(std::vector<Poly> gens, const MonomialOrder& o) {
    std::vector<Poly> G;
    for (auto& g : gens) {
        Poly r = reduce(g, G, o);
        if (!r.is_zero()) G.push_back(r);
    }
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) pairs.insert({i, j});
    while (!pairs.empty()) {
        // normal strategy: smallest lcm
        auto best = pairs.begin();
        Exp bl = lcm_exp(G[best->first].terms[0].first, G[best->second].terms[0].first);
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            Exp l = lcm_exp(G[it->first].terms[0].first, G[it->second].terms[0].first);
            if (o.less(l, bl)) {
                bl = l;
                best = it;
            }
        }
        auto [i, j] = *best;
        pairs.erase(best);
        const Exp& a = G[i].terms[0].first;
        const Exp& b = G[j].terms[0].first;
        bool coprime = true;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] && b[k]) coprime = false;
        if (coprime) continue;
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (!divides(G[k].terms[0].first, bl)) continue;
            auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
            if (!pairs.count({p1.first, p1.second}) && !pairs.count({p2.first, p2.second})) chain = true;
        }
        if (chain) continue;
        Poly s = reduce(spoly(G[i], G[j], o), G, o);
        if (s.is_zero()) continue;
        G.push_back(s);
        for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.insert({k, G.size() - 1});
    }
    // minimal, then reduced
    std::vector<Poly> M;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool red = false;
        for (std::size_t j = 0; j < G.size() && !red; ++j) {
            if (i == j) continue;
            if (divides(G[j].terms[0].first, G[i].terms[0].first) &&
                (G[j].terms[0].first != G[i].terms[0].first || j < i))
                red = true;
        }
        if (!red) M.push_back(G[i]);
    }
    std::vector<Poly> R;
    for (std::size_t i = 0; i < M.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(M[j]);
        R.push_back(reduce(M[i], others, o));
    }
    std::sort(R.begin(), R.end(), [&](const Poly& x, const Poly& y) { return o.less(y.terms[0].first, x.terms[0].first); });
    return R;
}

} // namespace tq
