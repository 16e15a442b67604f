#include "toricq/binom.hpp"
#include "toricq/lp.hpp"
#include "toricq/poly.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace tq {

MonomialOrder MonomialOrder::degrevlex(std::size_t n) {
    MonomialOrder o;
    o.priority.resize(n);
    std::iota(o.priority.begin(), o.priority.end(), 0);
    return o;
}

MonomialOrder MonomialOrder::from_priority(std::vector<std::size_t> p) {
    std::vector<std::size_t> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != i) throw ValidationError("order: priority list is not a permutation");
    MonomialOrder o;
    o.priority = std::move(p);
    return o;
}

bool MonomialOrder::less(const Exp& a, const Exp& b) const {
    std::size_t n = priority.size();
    auto block = [&](std::size_t lo, std::size_t hi, bool weighted) -> int {
        long da = 0, db = 0;
        for (std::size_t k = lo; k < hi; ++k) {
            std::size_t v = priority[k];
            long w = weighted && !weights.empty() ? weights[v] : 1;
            da += w * a[v];
            db += w * b[v];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t k = hi; k-- > lo;) {
            std::size_t v = priority[k];
            if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
        }
        return 0;
    };
    if (elim) {
        int c = block(0, elim, false);
        if (c) return c < 0;
    }
    return block(elim, n, true) < 0;
}

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

// a - b + c
Exp shift(const Exp& a, const Exp& b, const Exp& c) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i] + c[i];
    return r;
}

bool is_one(const Exp& e) {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

// returns false for zero
bool make(const Exp& a, const Exp& b, const MonomialOrder& o, Binomial& out) {
    if (a == b) return false;
    out.mono = false;
    if (o.less(a, b)) {
        out.lead = b;
        out.tail = a;
    } else {
        out.lead = a;
        out.tail = b;
    }
    return true;
}

bool from_gen(const BinomialGen& g, const MonomialOrder& o, Binomial& out) {
    if (g.mono) {
        out.lead = g.plus;
        out.tail.clear();
        out.mono = true;
        return true;
    }
    return make(g.plus, g.minus, o, out);
}

const Binomial* find_divisor(const Exp& m, const std::vector<Binomial>& G, const Binomial* skip = nullptr) {
    for (auto& g : G)
        if (&g != skip && divides(g.lead, m)) return &g;
    return nullptr;
}

// full reduction; false if f reduces to zero
bool reduce(Binomial& f, const std::vector<Binomial>& G, const MonomialOrder& o, const Binomial* skip = nullptr) {
    for (;;) {
        const Binomial* g = find_divisor(f.lead, G, skip);
        if (!g) break;
        if (g->mono) {
            if (f.mono) return false;
            f.lead = f.tail;
            f.tail.clear();
            f.mono = true;
            continue;
        }
        Exp nl = shift(f.lead, g->lead, g->tail);
        if (f.mono) {
            f.lead = nl;
            continue;
        }
        Binomial h;
        if (!make(nl, f.tail, o, h)) return false;
        f = h;
    }
    if (!f.mono) {
        for (;;) {
            const Binomial* g = find_divisor(f.tail, G, skip);
            if (!g) break;
            if (g->mono) {
                f.tail.clear();
                f.mono = true;
                break;
            }
            f.tail = shift(f.tail, g->lead, g->tail);
        }
    }
    return true;
}

bool spoly(const Binomial& f, const Binomial& g, const MonomialOrder& o, Binomial& out) {
    if (f.mono && g.mono) return false;
    Exp L = lcm_exp(f.lead, g.lead);
    if (f.mono) {
        out.lead = shift(L, g.lead, g.tail);
        out.mono = true;
        out.tail.clear();
        return true;
    }
    if (g.mono) {
        out.lead = shift(L, f.lead, f.tail);
        out.mono = true;
        out.tail.clear();
        return true;
    }
    return make(shift(L, f.lead, f.tail), shift(L, g.lead, g.tail), o, out);
}

} // namespace

std::vector<Binomial> groebner_basis(std::size_t n, const std::vector<BinomialGen>& gens, const MonomialOrder& o) {
    if (o.priority.size() != n) throw ValidationError("order has wrong number of variables");
    std::vector<Binomial> G;
    for (auto& g : gens) {
        if (g.plus.size() != n || (!g.mono && g.minus.size() != n)) throw ValidationError("generator has wrong length");
        Binomial b;
        if (!from_gen(g, o, b)) continue;
        if (!reduce(b, G, o)) continue;
        if (b.mono && is_one(b.lead)) return {b};
        G.push_back(b);
    }
    using Pair = std::pair<std::size_t, std::size_t>;
    auto cmp = [&](const std::pair<Exp, Pair>& x, const std::pair<Exp, Pair>& y) {
        if (x.first != y.first) return o.less(y.first, x.first);
        return x.second > y.second;
    };
    std::priority_queue<std::pair<Exp, Pair>, std::vector<std::pair<Exp, Pair>>, decltype(cmp)> pq(cmp);
    std::set<Pair> pending;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            pq.push({lcm_exp(G[i].lead, G[j].lead), {i, j}});
            pending.insert({i, j});
        }
    };
    for (std::size_t j = 1; j < G.size(); ++j) add_pairs(j);
    while (!pq.empty()) {
        auto [L, pr] = pq.top();
        pq.pop();
        pending.erase(pr);
        auto [i, j] = pr;
        bool coprime = true;
        for (std::size_t k = 0; k < n && coprime; ++k)
            if (G[i].lead[k] && G[j].lead[k]) coprime = false;
        if (coprime) continue;
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j || !divides(G[k].lead, L)) continue;
            Pair p1{std::min(i, k), std::max(i, k)}, p2{std::min(j, k), std::max(j, k)};
            if (!pending.count(p1) && !pending.count(p2)) chain = true;
        }
        if (chain) continue;
        Binomial s;
        if (!spoly(G[i], G[j], o, s)) continue;
        if (!reduce(s, G, o)) continue;
        if (s.mono && is_one(s.lead)) return {s};
        G.push_back(s);
        add_pairs(G.size() - 1);
    }
    // minimal basis
    std::vector<Binomial> M;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool red = false;
        for (std::size_t j = 0; j < G.size() && !red; ++j) {
            if (i == j || !divides(G[j].lead, G[i].lead)) continue;
            if (G[j].lead != G[i].lead || j < i) red = true;
        }
        if (!red) M.push_back(G[i]);
    }
    // tail reduction
    for (std::size_t i = 0; i < M.size(); ++i) {
        Binomial f = M[i];
        reduce(f, M, o, &M[i]);
        M[i] = f;
    }
    std::sort(M.begin(), M.end(), [&](const Binomial& a, const Binomial& b) { return o.less(b.lead, a.lead); });
    return M;
}

BinomialIdeal::BinomialIdeal(std::size_t n, std::vector<BinomialGen> g)
    : nvars(n), gens(std::move(g)), order(MonomialOrder::degrevlex(n)) {}

BinomialIdeal::BinomialIdeal(std::size_t n, std::vector<BinomialGen> g, MonomialOrder o)
    : nvars(n), gens(std::move(g)), order(std::move(o)) {
    if (order.priority.size() != n) throw ValidationError("order has wrong number of variables");
}

const std::vector<Binomial>& BinomialIdeal::gb() const {
    if (!cache_) cache_ = std::make_shared<std::vector<Binomial>>(groebner_basis(nvars, gens, order));
    return *cache_;
}

bool BinomialIdeal::is_unit() const {
    auto& g = gb();
    return g.size() == 1 && g[0].mono && is_one(g[0].lead);
}

BinomialIdeal from_basis(std::size_t n, const std::vector<Binomial>& gb, const MonomialOrder& o) {
    std::vector<BinomialGen> g;
    for (auto& b : gb) g.push_back(b.mono ? BinomialGen::monomial(b.lead) : BinomialGen::binomial(b.lead, b.tail));
    return BinomialIdeal(n, g, o);
}

BinomialIdeal groebner(const BinomialIdeal& I) { return from_basis(I.nvars, I.gb(), I.order); }

BinomialIdeal with_order(const BinomialIdeal& I, const MonomialOrder& o) { return BinomialIdeal(I.nvars, I.gens, o); }

bool reduces_to_zero(const BinomialGen& f, const std::vector<Binomial>& gb, const MonomialOrder& o) {
    Binomial b;
    if (!from_gen(f, o, b)) return true;
    return !reduce(b, gb, o);
}

bool member(const BinomialIdeal& I, const BinomialGen& f) { return reduces_to_zero(f, I.gb(), I.order); }

bool contains(const BinomialIdeal& big, const BinomialIdeal& small) {
    if (big.nvars != small.nvars) throw ValidationError("ideals live in different rings");
    for (auto& g : small.gens)
        if (!member(big, g)) return false;
    return true;
}

bool equal(const BinomialIdeal& I, const BinomialIdeal& J) {
    if (I.nvars != J.nvars) throw ValidationError("ideals live in different rings");
    if (I.order == J.order) return I.gb() == J.gb();
    return I.gb() == with_order(J, I.order).gb();
}

bool certify_groebner(const std::vector<Binomial>& gb, const MonomialOrder& o) {
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            Binomial s;
            if (!spoly(gb[i], gb[j], o, s)) continue;
            if (reduce(s, gb, o)) return false;
        }
    return true;
}

namespace {

// positive weight making every binomial generator homogeneous, if any
std::optional<std::vector<long>> positive_grading(const BinomialIdeal& I) {
    std::size_t n = I.nvars;
    LP lp(n);
    for (auto& g : I.gens) {
        if (g.mono) continue;
        QVec a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = g.plus[i] - g.minus[i];
        lp.add(a, LP::EQ, 0);
    }
    for (std::size_t i = 0; i < n; ++i) {
        QVec a(n);
        a[i] = 1;
        lp.add(a, LP::GE, 1);
    }
    for (auto& c : lp.obj) c = 1;
    auto r = solve_lp(lp);
    if (r.status != LPResult::Optimal) return std::nullopt;
    IVec w = primitive(r.x);
    std::vector<long> out;
    for (auto& x : w) {
        if (!x.fits_slong_p() || x > 1000000) return std::nullopt;
        out.push_back(x.get_si());
    }
    return out;
}

} // namespace

BinomialIdeal saturate_var(const BinomialIdeal& I, std::size_t v) {
    std::size_t n = I.nvars;
    if (v >= n) throw ValidationError("saturate: variable out of range");
    bool touches = false;
    for (auto& g : I.gens)
        if (g.plus[v] || (!g.mono && g.minus[v])) touches = true;
    if (!touches) return I;
    if (auto w = positive_grading(I)) {
        // weighted revlex with v last: divide v out of the basis
        MonomialOrder o = I.order;
        o.elim = 0;
        o.weights = *w;
        auto& p = o.priority;
        p.erase(std::find(p.begin(), p.end(), v));
        p.push_back(v);
        auto G = groebner_basis(n, I.gens, o);
        std::vector<BinomialGen> out;
        for (auto& b : G) {
            if (b.mono) {
                Exp e = b.lead;
                e[v] = 0;
                out.push_back(BinomialGen::monomial(e));
            } else {
                int k = std::min(b.lead[v], b.tail[v]);
                Exp a = b.lead, c = b.tail;
                a[v] -= k;
                c[v] -= k;
                out.push_back(BinomialGen::binomial(a, c));
            }
        }
        BinomialIdeal r(n, out, I.order);
        return groebner(r);
    }
    // elimination with t*y_v - 1
    MonomialOrder o;
    o.priority.push_back(n);
    o.priority.insert(o.priority.end(), I.order.priority.begin(), I.order.priority.end());
    o.elim = 1;
    std::vector<BinomialGen> gens;
    for (auto& g : I.gens) {
        Exp p = g.plus;
        p.push_back(0);
        if (g.mono) gens.push_back(BinomialGen::monomial(p));
        else {
            Exp m = g.minus;
            m.push_back(0);
            gens.push_back(BinomialGen::binomial(p, m));
        }
    }
    Exp ty(n + 1, 0), one(n + 1, 0);
    ty[n] = 1;
    ty[v] = 1;
    gens.push_back(BinomialGen::binomial(ty, one));
    auto G = groebner_basis(n + 1, gens, o);
    std::vector<BinomialGen> out;
    for (auto& b : G) {
        if (b.lead[n] || (!b.mono && b.tail[n])) continue;
        Exp a(b.lead.begin(), b.lead.end() - 1);
        if (b.mono) out.push_back(BinomialGen::monomial(a));
        else out.push_back(BinomialGen::binomial(a, Exp(b.tail.begin(), b.tail.end() - 1)));
    }
    return groebner(BinomialIdeal(n, out, I.order));
}

BinomialIdeal saturate(const BinomialIdeal& I, const Exp& m) {
    if (m.size() != I.nvars) throw ValidationError("saturate: monomial has wrong length");
    BinomialIdeal r = I;
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v] > 0) r = saturate_var(r, v);
    return r;
}

BinomialIdeal saturate(const BinomialIdeal& I, const std::vector<Exp>& J) {
    if (J.empty()) throw ValidationError("saturate: empty monomial ideal");
    BinomialIdeal acc = saturate(I, J[0]);
    for (std::size_t k = 1; k < J.size(); ++k) acc = intersect(acc, saturate(I, J[k]));
    return acc;
}

BinomialIdeal intersect(const BinomialIdeal& I, const BinomialIdeal& J) {
    if (I.nvars != J.nvars) throw ValidationError("ideals live in different rings");
    std::size_t n = I.nvars;
    if (I.is_zero() || J.is_zero()) return BinomialIdeal(n, {}, I.order);
    MonomialOrder o;
    o.priority.push_back(n);
    o.priority.insert(o.priority.end(), I.order.priority.begin(), I.order.priority.end());
    o.elim = 1;
    auto lift = [&](const Binomial& b, bool times_t, bool one_minus_t) {
        Poly p;
        Exp a = b.lead;
        a.push_back(0);
        std::vector<std::pair<Exp, Rat>> base{{a, Rat(1)}};
        if (!b.mono) {
            Exp c = b.tail;
            c.push_back(0);
            base.push_back({c, Rat(-1)});
        }
        std::vector<std::pair<Exp, Rat>> terms;
        for (auto& [e, c] : base) {
            Exp et = e;
            et[n] = 1;
            if (times_t) terms.push_back({et, c});
            if (one_minus_t) {
                terms.push_back({e, c});
                terms.push_back({et, -c});
            }
        }
        std::sort(terms.begin(), terms.end(), [&](auto& x, auto& y) { return o.less(y.first, x.first); });
        p.terms = terms;
        Rat lc = p.terms[0].second;
        for (auto& t : p.terms) t.second /= lc;
        return p;
    };
    std::vector<Poly> gens;
    for (auto& b : I.gb()) gens.push_back(lift(b, true, false));
    for (auto& b : J.gb()) gens.push_back(lift(b, false, true));
    auto G = poly_groebner(gens, o);
    std::vector<BinomialGen> out;
    for (auto& p : G) {
        bool has_t = false;
        for (auto& [e, c] : p.terms)
            if (e[n]) has_t = true;
        if (has_t) continue;
        auto cut = [&](const Exp& e) { return Exp(e.begin(), e.end() - 1); };
        if (p.terms.size() == 1) out.push_back(BinomialGen::monomial(cut(p.terms[0].first)));
        else if (p.terms.size() == 2 && p.terms[0].second == 1 && p.terms[1].second == -1)
            out.push_back(BinomialGen::binomial(cut(p.terms[0].first), cut(p.terms[1].first)));
        else throw ComputeError("intersect: result left the binomial/monomial class");
    }
    return groebner(BinomialIdeal(n, out, I.order));
}

BinomialIdeal lattice_ideal(const std::vector<IVec>& basis, std::size_t n) {
    std::vector<BinomialGen> gens;
    for (auto& l : basis) {
        if (l.size() != n) throw ValidationError("lattice vector has wrong length");
        Exp p(n), m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!l[i].fits_sint_p()) throw ComputeError("lattice entry too large");
            int x = static_cast<int>(l[i].get_si());
            if (x > 0) p[i] = x;
            else m[i] = -x;
        }
        if (p != m) gens.push_back(BinomialGen::binomial(p, m));
    }
    BinomialIdeal I(n, gens);
    for (std::size_t v = 0; v < n; ++v) I = saturate_var(I, v);
    return groebner(I);
}

BinomialIdeal toric_ideal(const Mat& A) {
    Mat K = kernel_basis(A);
    return lattice_ideal(K.col_list(), A.cols);
}

bool Budget::exhausted(long used) const {
    if (items >= 0 && used > items) return true;
    if (ms >= 0) {
        auto el = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        if (el > ms) return true;
    }
    return false;
}

Census component_census(const BinomialIdeal& I, const Budget& budget) {
    std::size_t n = I.nvars;
    if (n > 24) throw ValidationError("census limited to 24 variables");
    Census cen;
    std::vector<unsigned long> masks(1UL << n);
    std::iota(masks.begin(), masks.end(), 0UL);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned long a, unsigned long b) {
        return __builtin_popcountl(a) < __builtin_popcountl(b);
    });
    auto touches = [&](const Exp& e, unsigned long Z) {
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] && (Z >> i & 1UL)) return true;
        return false;
    };
    struct Kept {
        unsigned long Z;
        CensusComponent c;
    };
    std::vector<Kept> kept;
    for (auto Z : masks) {
        if (budget.exhausted(static_cast<long>(cen.subsets_examined))) {
            cen.complete = false;
            break;
        }
        ++cen.subsets_examined;
        bool valid = true;
        std::vector<IVec> L;
        for (auto& g : I.gens) {
            if (g.mono) {
                if (!touches(g.plus, Z)) valid = false;
                continue;
            }
            bool a = touches(g.plus, Z), b = touches(g.minus, Z);
            if (a != b) valid = false;
            else if (!a) {
                IVec d(n);
                for (std::size_t i = 0; i < n; ++i) d[i] = g.plus[i] - g.minus[i];
                L.push_back(d);
            }
            if (!valid) break;
        }
        if (!valid) continue;
        ++cen.valid_subsets;
        Mat LB = lattice_basis(L, n);
        // contained in an earlier component?
        bool dominated = false;
        for (auto& k : kept) {
            if ((k.Z & Z) != k.Z) continue;
            bool inside = true;
            for (auto& b : k.c.ideal) {
                bool ta = touches(b.lead, Z), tb = touches(b.tail, Z);
                if (ta && tb) continue;
                if (ta != tb) {
                    inside = false;
                    break;
                }
                IVec d(n);
                for (std::size_t i = 0; i < n; ++i) d[i] = b.lead[i] - b.tail[i];
                if (!in_lattice(LB, d)) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        CensusComponent c;
        for (std::size_t i = 0; i < n; ++i)
            if (Z >> i & 1UL) c.Z.push_back(i);
        c.lattice = LB.row_list();
        c.torsion = 1;
        if (LB.rows) {
            for (auto& x : smith_normal_form(LB).d) c.torsion *= x;
        }
        c.ideal = lattice_ideal(c.lattice, n).gb();
        kept.push_back({Z, c});
    }
    for (auto& k : kept) cen.components.push_back(k.c);
    return cen;
}

std::string monomial_string(const Exp& e, const std::string& var, bool unicode, int base) {
    static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        s += var;
        std::string idx = std::to_string(static_cast<int>(i) + base);
        if (unicode)
            for (char ch : idx) s += sub[ch - '0'];
        else s += idx;
        if (e[i] > 1) {
            std::string ex = std::to_string(e[i]);
            if (unicode)
                for (char ch : ex) s += sup[ch - '0'];
            else s += "^" + ex;
        }
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const Binomial& b, const std::string& var, int base) {
    if (b.mono) return monomial_string(b.lead, var, false, base);
    return monomial_string(b.lead, var, false, base) + " - " + monomial_string(b.tail, var, false, base);
}

} // namespace tq
