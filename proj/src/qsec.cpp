#include "toricq/qsec.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tq {

Mat pic_degrees(const CoxData& cox, const std::vector<std::size_t>& basis) {
    const auto& P = cox.deg.projection;
    std::size_t r = cox.deg.free_rank, nr = cox.ray_order.size();
    if (!cox.deg.torsion.empty()) throw ValidationError("class group has torsion; Pic coordinates need a free class group");
    if (basis.size() != r) throw ValidationError("Pic basis needs " + std::to_string(r) + " rays");
    Mat B(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        if (basis[j] >= nr) throw ValidationError("Pic basis ray index out of range");
        for (std::size_t i = 0; i < r; ++i) B(i, j) = P(i, basis[j]);
    }
    Int d = det(B);
    if (d != 1 && d != -1) throw ValidationError("chosen rays do not give a Z-basis of Pic");
    Mat D(r, nr);
    for (std::size_t k = 0; k < nr; ++k) {
        IVec col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = P(i, k);
        auto y = solve_integral(B, col);
        if (!y) throw ComputeError("Pic coordinates not integral");
        for (std::size_t i = 0; i < r; ++i) D(i, k) = (*y)[i];
    }
    return D;
}

namespace {

std::vector<std::size_t> default_basis(const CoxData& cox) {
    std::size_t r = cox.deg.free_rank, nr = cox.ray_order.size();
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (pick.size() == r) {
            try {
                pic_degrees(cox, pick);
                return true;
            } catch (const ValidationError&) {
                return false;
            }
        }
        for (std::size_t k = start; k < nr; ++k) {
            pick.push_back(k);
            if (rec(k + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!rec(0)) throw ValidationError("no set of ray classes forms a Z-basis of Pic");
    return pick;
}

bool fiber_is_bounded(const Mat& deg) { return fiber_bounded(deg); }

std::vector<IVec> minimal_fiber_points(const Mat& deg, const IVec& b) {
    std::size_t n = deg.cols, r = deg.rows;
    if (fiber_is_bounded(deg)) return lattice_points_in_fiber(deg, b);
    // (u, t) >= 0 with deg u = t b; Hilbert basis elements at t = 1
    std::vector<IVec> ineq, eq;
    for (std::size_t i = 0; i <= n; ++i) {
        IVec e(n + 1);
        e[i] = 1;
        ineq.push_back(e);
    }
    for (std::size_t i = 0; i < r; ++i) {
        IVec e(n + 1);
        for (std::size_t j = 0; j < n; ++j) e[j] = deg(i, j);
        e[n] = -b[i];
        eq.push_back(e);
    }
    Cone C = Cone::from_inequalities(n + 1, ineq, eq);
    std::vector<IVec> out;
    for (auto& h : hilbert_basis(C))
        if (h[n] == 1) out.push_back(IVec(h.begin(), h.end() - 1));
    std::sort(out.begin(), out.end());
    return out;
}

bool leq(const IVec& a, const IVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace

PolarizedToric polarize(const CoxData& cox, const std::vector<IVec>& bundles, std::optional<std::vector<std::size_t>> basis) {
    PolarizedToric X;
    X.cox = cox;
    X.basis = basis ? *basis : default_basis(cox);
    X.deg = pic_degrees(cox, X.basis);
    if (bundles.empty()) throw ValidationError("bundle sequence is empty");
    for (auto& L : bundles)
        if (L.size() != X.deg.rows) throw ValidationError("bundle class has wrong length " + str(L));
    if (!is_zero(bundles[0])) throw ValidationError("first bundle must be O");
    if (sort_unique(bundles).size() != bundles.size()) throw ValidationError("bundle classes are not distinct");
    X.bundles = bundles;
    for (std::size_t i = 1; i < bundles.size(); ++i)
        if (!basepoint_free(X, bundles[i])) throw ValidationError("bundle " + str(bundles[i]) + " is not basepoint-free");
    return X;
}

bool basepoint_free(const PolarizedToric& X, const IVec& L) {
    auto secs = minimal_fiber_points(X.deg, L);
    for (auto& e : X.cox.irrelevant_ideal) {
        bool ok = false;
        for (auto& u : secs) {
            bool off = true;
            for (std::size_t k = 0; k < u.size() && off; ++k)
                if (u[k] != 0 && e[k] == 0) off = false;
            if (off) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

std::vector<IVec> sections(const PolarizedToric& X, const IVec& from, const IVec& to) {
    if (from.size() != X.deg.rows || to.size() != X.deg.rows) throw ValidationError("class has wrong length");
    return minimal_fiber_points(X.deg, sub(to, from));
}

std::vector<IVec> indecomposable_sections(const PolarizedToric& X, std::size_t i, std::size_t j) {
    const auto& L = X.bundles;
    if (i >= L.size() || j >= L.size()) throw ValidationError("bundle index out of range");
    auto secs = sections(X, L[i], L[j]);
    std::vector<IVec> out;
    for (auto& s : secs) {
        bool dec = false;
        for (std::size_t k = 0; k < L.size() && !dec; ++k) {
            if (k == i || k == j) continue;
            for (auto& s1 : sections(X, L[i], L[k]))
                if (leq(s1, s)) {
                    dec = true;
                    break;
                }
        }
        if (!dec) out.push_back(s);
    }
    return out;
}

namespace {

struct Path {
    std::size_t tail, head;
    IVec div;
    Exp mult;
    std::vector<std::size_t> seq;
};

std::vector<PathPair> relations_up_to(const Quiver& q, std::size_t nrays, std::size_t bound, BinomialIdeal& ideal) {
    std::size_t na = q.na();
    std::vector<Path> all, frontier;
    for (std::size_t a = 0; a < na; ++a) {
        Exp m(na);
        m[a] = 1;
        frontier.push_back({q.arrows[a].tail, q.arrows[a].head, *q.arrows[a].label, m, {a}});
    }
    for (std::size_t len = 1; len <= bound && !frontier.empty(); ++len) {
        all.insert(all.end(), frontier.begin(), frontier.end());
        if (all.size() > 200000) throw ComputeError("relation search: too many paths at bound " + std::to_string(bound));
        if (len == bound) break;
        std::vector<Path> next;
        for (auto& p : frontier)
            for (std::size_t a = 0; a < na; ++a) {
                if (q.arrows[a].tail != p.head) continue;
                Path r = p;
                r.head = q.arrows[a].head;
                r.div = add(r.div, *q.arrows[a].label);
                ++r.mult[a];
                r.seq.push_back(a);
                next.push_back(std::move(r));
            }
        frontier = std::move(next);
    }
    (void)nrays;
    std::map<std::tuple<std::size_t, std::size_t, IVec>, std::vector<const Path*>> groups;
    for (auto& p : all) groups[{p.tail, p.head, p.div}].push_back(&p);
    struct Cand {
        std::size_t len;
        const Path *p, *r;
    };
    std::vector<Cand> cands;
    for (auto& [key, ps] : groups) {
        std::map<Exp, const Path*> uniq;
        for (auto* p : ps) {
            auto it = uniq.find(p->mult);
            if (it == uniq.end() || p->seq < it->second->seq) uniq[p->mult] = p;
        }
        std::vector<const Path*> reps;
        for (auto& [m, p] : uniq) reps.push_back(p);
        std::sort(reps.begin(), reps.end(), [](auto* a, auto* b) {
            return a->seq.size() != b->seq.size() ? a->seq.size() < b->seq.size() : a->seq < b->seq;
        });
        for (std::size_t k = 1; k < reps.size(); ++k)
            cands.push_back({std::max(reps[0]->seq.size(), reps[k]->seq.size()), reps[0], reps[k]});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.len != b.len) return a.len < b.len;
        if (a.p->seq != b.p->seq) return a.p->seq < b.p->seq;
        return a.r->seq < b.r->seq;
    });
    // drop pairs implied by strictly shorter relations
    std::vector<PathPair> rel;
    std::vector<BinomialGen> gens;
    ideal = BinomialIdeal(na, {});
    std::size_t cur = 0;
    for (auto& c : cands) {
        if (c.len != cur) {
            ideal = BinomialIdeal(na, gens);
            cur = c.len;
        }
        auto g = BinomialGen::binomial(c.p->mult, c.r->mult);
        if (!ideal.gens.empty() && member(ideal, g)) continue;
        gens.push_back(g);
        rel.push_back({c.p->seq, c.r->seq});
    }
    ideal = BinomialIdeal(na, gens);
    return rel;
}

} // namespace

SectionQuiver quiver_of_sections(const PolarizedToric& X, std::optional<std::size_t> bound) {
    const auto& L = X.bundles;
    std::size_t nv = L.size(), nr = X.nrays();
    SectionQuiver sq;
    sq.nrays = nr;
    sq.quiver.nv = nv;
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = 0; j < nv; ++j) {
            if (i == j) continue;
            for (auto& s : indecomposable_sections(X, i, j)) sq.quiver.arrows.push_back({i, j, s});
        }
    }
    // canonical order: tail, then label lex descending
    std::stable_sort(sq.quiver.arrows.begin(), sq.quiver.arrows.end(), [](const Arrow& a, const Arrow& b) {
        if (a.tail != b.tail) return a.tail < b.tail;
        if (*a.label != *b.label) return *a.label > *b.label;
        return a.head < b.head;
    });
    std::size_t na = sq.quiver.na();
    for (auto& a : sq.quiver.arrows)
        if (mul(X.deg, to_q(*a.label)) != to_q(sub(L[a.head], L[a.tail])))
            throw ComputeError("arrow label degree disagrees with its bundles");
    auto id = incidence_data(sq.quiver);
    sq.section_map = Mat(nv + nr, na);
    for (std::size_t a = 0; a < na; ++a) {
        for (std::size_t v = 0; v < nv; ++v) sq.section_map(v, a) = id.inc(v, a);
        for (std::size_t k = 0; k < nr; ++k) sq.section_map(nv + k, a) = (*sq.quiver.arrows[a].label)[k];
    }
    sq.bound = bound ? *bound : 2 * nv;
    if (sq.bound < 1) throw ValidationError("relation bound must be positive");
    BinomialIdeal I1(na, {}), I2(na, {});
    sq.relations = relations_up_to(sq.quiver, nr, sq.bound, I1);
    relations_up_to(sq.quiver, nr, sq.bound + 1, I2);
    sq.stabilized = equal(I1, I2);
    return sq;
}

BinomialIdeal relation_ideal(const SectionQuiver& sq) {
    std::size_t na = sq.quiver.na();
    std::vector<BinomialGen> gens;
    for (auto& [p, r] : sq.relations) {
        Exp a(na), b(na);
        for (auto x : p) ++a[x];
        for (auto x : r) ++b[x];
        gens.push_back(BinomialGen::binomial(a, b));
    }
    return BinomialIdeal(na, gens);
}

ModuliFan multilinear_series_fan(const SectionQuiver& sq, const QVec& theta) {
    if (theta.size() != sq.quiver.nv) throw ValidationError("weight length differs from vertex count");
    for (std::size_t i = 1; i < theta.size(); ++i)
        if (theta[i] <= 0) throw ValidationError("multilinear series needs theta_i > 0 for i != 0");
    return moduli_fan(sq.quiver, theta);
}

ImageVerdict image_equals_moduli(const SectionQuiver& sq) {
    std::size_t na = sq.quiver.na();
    ImageVerdict v{false, toric_ideal(sq.section_map), relation_ideal(sq), {}, {}, false};
    v.contained = contains(v.IQ, v.Irho);
    v.arborescence_monomials = arborescence_ideal(sq.quiver);
    v.equal = v.contained;
    for (auto& g : v.arborescence_monomials) {
        Exp e(na);
        for (std::size_t a = 0; a < na; ++a) e[a] = static_cast<int>(g[a].get_si());
        auto s = groebner(saturate(v.Irho, e));
        if (!equal(s, v.IQ)) v.equal = false;
        v.saturations.push_back(s);
    }
    v.IQ = groebner(v.IQ);
    v.Irho = groebner(v.Irho);
    return v;
}

bool multiplication_surjective(const PolarizedToric& X, const std::vector<IVec>& factors) {
    if (factors.empty()) throw ValidationError("need at least one factor");
    std::size_t r = X.deg.rows;
    IVec total(r);
    std::vector<std::vector<IVec>> secs;
    for (auto& L : factors) {
        if (L.size() != r) throw ValidationError("class has wrong length");
        total = add(total, L);
        secs.push_back(minimal_fiber_points(X.deg, L));
    }
    std::function<bool(std::size_t, const IVec&)> split = [&](std::size_t k, const IVec& rest) -> bool {
        if (k + 1 == secs.size()) return std::binary_search(secs[k].begin(), secs[k].end(), rest);
        for (auto& s : secs[k])
            if (leq(s, rest) && split(k + 1, sub(rest, s))) return true;
        return false;
    };
    for (auto& u : minimal_fiber_points(X.deg, total))
        if (!split(0, u)) return false;
    return true;
}

std::string div_monomial(const IVec& d, const std::vector<std::string>* names, bool unicode, int base) {
    Exp e;
    for (auto& x : d) e.push_back(static_cast<int>(x.get_si()));
    if (!names) return monomial_string(e, "x", unicode, base);
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        s += (*names)[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace tq
