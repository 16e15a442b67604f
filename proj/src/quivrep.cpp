#include "toricq/quivrep.hpp"
#include "toricq/lp.hpp"
#include "toricq/torvar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tq {

namespace {

struct DSU {
    std::vector<std::size_t> p;
    explicit DSU(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

Rat theta_sum(const QVec& theta, unsigned long mask) {
    Rat s = 0;
    for (std::size_t i = 0; i < theta.size(); ++i)
        if (mask >> i & 1UL) s += theta[i];
    return s;
}

// undirected spanning trees, each a sorted arrow list
void spanning_trees(const Quiver& q, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::size_t need = q.nv - 1;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, DSU)> rec = [&](std::size_t start, DSU d) {
        if (cur.size() == need) {
            f(cur);
            return;
        }
        for (std::size_t a = start; a + (need - cur.size()) <= q.na(); ++a) {
            const auto& ar = q.arrows[a];
            if (ar.tail == ar.head) continue;
            DSU d2 = d;
            if (!d2.unite(ar.tail, ar.head)) continue;
            cur.push_back(a);
            rec(a + 1, d2);
            cur.pop_back();
        }
    };
    rec(0, DSU(q.nv));
}

// flow on a tree solving inc x = theta
std::vector<Rat> tree_flow(const Quiver& q, const std::vector<std::size_t>& tree, const QVec& theta) {
    // peel leaves
    std::vector<Rat> x(tree.size());
    std::vector<Rat> need(theta.begin(), theta.end());
    std::vector<int> deg(q.nv, 0);
    std::vector<bool> used(tree.size(), false);
    for (auto a : tree) {
        ++deg[q.arrows[a].tail];
        ++deg[q.arrows[a].head];
    }
    for (std::size_t step = 0; step < tree.size(); ++step) {
        for (std::size_t k = 0; k < tree.size(); ++k) {
            if (used[k]) continue;
            const auto& ar = q.arrows[tree[k]];
            std::size_t leaf;
            if (deg[ar.head] == 1) leaf = ar.head;
            else if (deg[ar.tail] == 1) leaf = ar.tail;
            else continue;
            // inc x at leaf: +x if leaf is head, -x if tail
            x[k] = leaf == ar.head ? need[leaf] : -need[leaf];
            std::size_t other = leaf == ar.head ? ar.tail : ar.head;
            if (leaf == ar.head) need[other] += x[k];
            else need[other] -= x[k];
            need[leaf] = 0;
            --deg[ar.head];
            --deg[ar.tail];
            used[k] = true;
            break;
        }
    }
    return x;
}

} // namespace

bool Quiver::connected() const {
    if (nv == 0) return false;
    DSU d(nv);
    for (auto& a : arrows) d.unite(a.tail, a.head);
    for (std::size_t v = 1; v < nv; ++v)
        if (d.find(v) != d.find(0)) return false;
    return true;
}

bool Quiver::acyclic() const {
    std::vector<int> indeg(nv, 0);
    for (auto& a : arrows) {
        if (a.tail == a.head) return false;
        ++indeg[a.head];
    }
    std::vector<std::size_t> st;
    for (std::size_t v = 0; v < nv; ++v)
        if (!indeg[v]) st.push_back(v);
    std::size_t seen = 0;
    while (!st.empty()) {
        auto v = st.back();
        st.pop_back();
        ++seen;
        for (auto& a : arrows)
            if (a.tail == v && --indeg[a.head] == 0) st.push_back(a.head);
    }
    return seen == nv;
}

void Quiver::validate() const {
    if (nv == 0) throw ValidationError("quiver has no vertices");
    std::optional<std::size_t> len;
    for (auto& a : arrows) {
        if (a.tail >= nv || a.head >= nv) throw ValidationError("arrow endpoint out of range");
        if (a.label) {
            if (len && *len != a.label->size()) throw ValidationError("arrow labels have different lengths");
            len = a.label->size();
            for (auto& x : *a.label)
                if (x < 0) throw ValidationError("arrow label has a negative entry");
        }
    }
    if (!connected()) throw ValidationError("quiver is not connected");
}

IncidenceData incidence_data(const Quiver& q) {
    IncidenceData d;
    d.inc = Mat(q.nv, q.na());
    for (std::size_t a = 0; a < q.na(); ++a) {
        d.inc(q.arrows[a].head, a) += 1;
        d.inc(q.arrows[a].tail, a) -= 1;
    }
    d.weight_rank = rank(d.inc);
    d.circuit_basis = kernel_basis(d.inc);
    return d;
}

const char* to_string(Stability s) {
    switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Semistable: return "semistable";
    default: return "unstable";
    }
}

StabilityResult is_theta_stable(const Quiver& q, const Support& s, const QVec& theta) {
    if (theta.size() != q.nv) throw ValidationError("weight length differs from vertex count");
    if (q.nv > 30) throw ValidationError("stability check limited to 30 vertices");
    Rat tot = 0;
    for (auto& t : theta) tot += t;
    if (tot != 0) throw ValidationError("weight does not sum to zero");
    unsigned long full = (1UL << q.nv) - 1;
    StabilityResult r;
    std::optional<unsigned long> semi;
    for (unsigned long m = 1; m < full; ++m) {
        bool closed = true;
        for (std::size_t a = 0; a < q.na() && closed; ++a)
            if (s[a] && (m >> q.arrows[a].tail & 1UL) && !(m >> q.arrows[a].head & 1UL)) closed = false;
        if (!closed) continue;
        Rat v = theta_sum(theta, m);
        if (v < 0) {
            r.verdict = Stability::Unstable;
            for (std::size_t i = 0; i < q.nv; ++i)
                if (m >> i & 1UL) r.witness.push_back(i);
            return r;
        }
        if (v == 0 && !semi) semi = m;
    }
    if (semi) {
        r.verdict = Stability::Semistable;
        for (std::size_t i = 0; i < q.nv; ++i)
            if (*semi >> i & 1UL) r.witness.push_back(i);
    }
    return r;
}

std::vector<std::vector<std::size_t>> arborescences(const Quiver& q) {
    std::vector<std::vector<std::size_t>> in(q.nv);
    for (std::size_t a = 0; a < q.na(); ++a)
        if (q.arrows[a].tail != q.arrows[a].head) in[q.arrows[a].head].push_back(a);
    for (std::size_t v = 1; v < q.nv; ++v)
        if (in[v].empty()) throw ComputeError("vertex " + std::to_string(v) + " has no incoming arrow");
    {
        // reachability from 0
        std::vector<bool> seen(q.nv, false);
        std::vector<std::size_t> st{0};
        seen[0] = true;
        while (!st.empty()) {
            auto v = st.back();
            st.pop_back();
            for (auto& a : q.arrows)
                if (a.tail == v && !seen[a.head]) {
                    seen[a.head] = true;
                    st.push_back(a.head);
                }
        }
        for (std::size_t v = 0; v < q.nv; ++v)
            if (!seen[v]) throw ComputeError("vertex " + std::to_string(v) + " is not reachable from 0");
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(q.nv, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == q.nv) {
            // every vertex must reach the root following parents
            for (std::size_t u = 1; u < q.nv; ++u) {
                std::size_t w = u, steps = 0;
                while (w != 0 && steps <= q.nv) {
                    w = q.arrows[pick[w]].tail;
                    ++steps;
                }
                if (w != 0) return;
            }
            std::vector<std::size_t> t;
            for (std::size_t u = 1; u < q.nv; ++u) t.push_back(pick[u]);
            std::sort(t.begin(), t.end());
            out.push_back(t);
            return;
        }
        for (auto a : in[v]) {
            pick[v] = a;
            rec(v + 1);
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IVec> arborescence_ideal(const Quiver& q) {
    std::vector<IVec> out;
    for (auto& t : arborescences(q)) {
        IVec e(q.na());
        for (auto a : t) e[a] = 1;
        out.push_back(e);
    }
    return out;
}

IVec integral_weight(const QVec& theta) {
    Int l = 1;
    for (auto& t : theta) l = lcm(l, Int(t.get_den()));
    IVec w;
    for (auto& t : theta) w.push_back(Rat(t * l).get_num());
    return w;
}

QVec parse_weight(const std::string& s) {
    QVec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            Rat x(tok);
            x.canonicalize();
            v.push_back(x);
        } catch (...) {
            throw ValidationError("bad weight entry '" + tok + "'");
        }
    }
    return v;
}

ModuliFan moduli_fan(const Quiver& q, const QVec& theta) {
    q.validate();
    if (theta.size() != q.nv) throw ValidationError("weight length differs from vertex count");
    Rat tot = 0;
    for (auto& t : theta) tot += t;
    if (tot != 0) throw ValidationError("weight does not sum to zero");
    IncidenceData id = incidence_data(q);
    ModuliFan mf;
    mf.circuit_basis = id.circuit_basis;
    const Mat& K = id.circuit_basis;
    std::size_t c = K.cols;
    std::vector<std::pair<Cone, std::vector<std::size_t>>> cones;
    bool degenerate = false;
    spanning_trees(q, [&](const std::vector<std::size_t>& t) {
        auto x = tree_flow(q, t, theta);
        for (auto& v : x)
            if (v < 0) return;
        for (auto& v : x)
            if (v == 0) degenerate = true;
        std::vector<IVec> gens;
        for (std::size_t a = 0; a < q.na(); ++a)
            if (!std::binary_search(t.begin(), t.end(), a)) gens.push_back(K.row(a));
        cones.push_back({Cone::from_generators(c, gens), t});
    });
    if (degenerate) throw ValidationError("weight is not generic: a vertex of the fiber polyhedron is degenerate");
    if (cones.empty()) throw ValidationError("weight is not effective: fiber polyhedron is empty");
    std::sort(cones.begin(), cones.end(), [](auto& a, auto& b) { return a.first < b.first; });
    mf.fan.dim = c;
    for (auto& [cn, t] : cones) {
        if (!cn.strongly_convex()) throw ComputeError("moduli_fan: normal cone is not strongly convex");
        mf.fan.cones.push_back(cn);
        mf.trees.push_back(t);
    }
    validate_fan(mf.fan);
    mf.smooth = is_smooth(mf.fan);
    mf.projective = q.acyclic();
    return mf;
}

std::vector<IVec> tautological_classes(const Quiver& q) {
    std::vector<IVec> out;
    for (std::size_t i = 0; i < q.nv; ++i) {
        IVec w(q.nv);
        if (i) {
            w[i] = 1;
            w[0] = -1;
        }
        out.push_back(w);
    }
    return out;
}

std::vector<std::vector<std::size_t>> stable_trees(const Quiver& q, const QVec& theta) {
    std::vector<std::vector<std::size_t>> out;
    spanning_trees(q, [&](const std::vector<std::size_t>& t) {
        Support s(q.na(), false);
        for (auto a : t) s[a] = true;
        if (is_theta_stable(q, s, theta).verdict == Stability::Stable) out.push_back(t);
    });
    return out;
}

std::vector<int> subset_signs(std::size_t nv, const QVec& theta) {
    std::vector<int> s;
    for (unsigned long m = 1; m < (1UL << (nv - 1)); ++m) {
        Rat v = 0;
        for (std::size_t i = 1; i < nv; ++i)
            if (m >> (i - 1) & 1UL) v += theta[i];
        s.push_back(sgn(v));
    }
    return s;
}

ChamberComplex chamber_decomposition(const Quiver& q, const ChamberOracle& oracle0) {
    q.validate();
    if (q.nv < 2) throw ValidationError("chambers need at least two vertices");
    if (q.nv > 16) throw ValidationError("chamber decomposition limited to 16 vertices");
    std::size_t d = q.nv - 1;
    ChamberOracle oracle = oracle0 ? oracle0 : [&](const QVec& th) { return stable_trees(q, th); };
    // hyperplanes over theta_1..theta_{n-1}
    std::vector<IVec> hyp;
    for (unsigned long m = 1; m < (1UL << d); ++m) {
        IVec h(d);
        for (std::size_t i = 0; i < d; ++i)
            if (m >> i & 1UL) h[i] = 1;
        hyp.push_back(h);
    }
    // effective cone in the same coordinates
    IncidenceData id = incidence_data(q);
    std::vector<IVec> cols;
    for (std::size_t a = 0; a < q.na(); ++a) {
        IVec c = id.inc.col(a);
        cols.push_back(IVec(c.begin() + 1, c.end()));
    }
    Cone eff = Cone::from_generators(d, cols);
    std::vector<IVec> base = eff.facets;
    if (!eff.equations.empty()) throw ComputeError("effective cone is not full-dimensional");

    struct Cell {
        std::vector<int> sign;
    };
    std::vector<Cell> cells{Cell{}};
    for (std::size_t k = 0; k < hyp.size(); ++k) {
        std::vector<Cell> nxt;
        for (auto& c : cells)
            for (int sg : {1, -1}) {
                auto s = c.sign;
                s.push_back(sg);
                std::vector<IVec> strict;
                for (std::size_t j = 0; j < s.size(); ++j) strict.push_back(scale(Int(s[j]), hyp[j]));
                for (auto& b : base) strict.push_back(b);
                if (relative_interior_point(strict, {}, {}, d)) nxt.push_back(Cell{s});
            }
        cells = std::move(nxt);
    }
    ChamberComplex cc;
    cc.cells = cells.size();
    std::vector<QVec> samples;
    std::vector<std::vector<std::vector<std::size_t>>> labels;
    for (auto& c : cells) {
        std::vector<IVec> strict;
        for (std::size_t j = 0; j < c.sign.size(); ++j) strict.push_back(scale(Int(c.sign[j]), hyp[j]));
        for (auto& b : base) strict.push_back(b);
        QVec p = *relative_interior_point(strict, {}, {}, d);
        QVec th(q.nv);
        th[0] = 0;
        for (std::size_t i = 0; i < d; ++i) {
            th[i + 1] = p[i];
            th[0] -= p[i];
        }
        // integral representative
        IVec w = integral_weight(th);
        QVec thq = to_q(w);
        samples.push_back(thq);
        auto lab = oracle(thq);
        std::sort(lab.begin(), lab.end());
        labels.push_back(lab);
    }
    // walls that separate adjacent cells with different labels
    std::vector<bool> keep(hyp.size(), false);
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = a + 1; b < cells.size(); ++b) {
            std::size_t diff = 0, where = 0;
            for (std::size_t k = 0; k < hyp.size(); ++k)
                if (cells[a].sign[k] != cells[b].sign[k]) {
                    ++diff;
                    where = k;
                }
            if (diff == 1 && labels[a] != labels[b]) keep[where] = true;
        }
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < hyp.size(); ++k)
        if (keep[k]) {
            kept.push_back(k);
            cc.walls.push_back(hyp[k]);
        }
    std::map<std::vector<std::vector<std::size_t>>, std::size_t> seen;
    for (std::size_t a = 0; a < cells.size(); ++a) {
        if (seen.count(labels[a])) continue;
        seen[labels[a]] = cc.chambers.size();
        ChamberComplex::Chamber ch;
        for (auto k : kept) ch.sign.push_back(cells[a].sign[k]);
        ch.sample = samples[a];
        ch.stable = labels[a];
        cc.chambers.push_back(ch);
    }
    return cc;
}

} // namespace tq
