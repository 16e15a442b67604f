#include "toricq/mckay.hpp"
#include "toricq/lp.hpp"
#include "toricq/torvar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace tq {

std::size_t AbelianAction::order() const {
    std::size_t o = 1;
    for (auto r : factors) o *= static_cast<std::size_t>(r);
    return o;
}

std::vector<long> AbelianAction::character(std::size_t idx) const {
    std::vector<long> ch(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
        ch[k] = static_cast<long>(idx % factors[k]);
        idx /= factors[k];
    }
    return ch;
}

std::size_t AbelianAction::index(const std::vector<long>& ch) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        long r = factors[k], c = ((ch[k] % r) + r) % r;
        idx = idx * r + c;
    }
    return idx;
}

std::size_t AbelianAction::shift(std::size_t rho, std::size_t i) const {
    auto ch = character(rho);
    for (std::size_t k = 0; k < ch.size(); ++k) ch[k] += alpha[i][k];
    return index(ch);
}

std::size_t AbelianAction::weight(const Exp& e) const {
    std::vector<long> ch(factors.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t k = 0; k < ch.size(); ++k) ch[k] += e[i] * alpha[i][k];
    return index(ch);
}

void AbelianAction::validate() const {
    if (alpha.empty()) throw ValidationError("action needs at least one coordinate");
    for (auto r : factors)
        if (r < 1) throw ValidationError("cyclic factor must be positive");
    for (auto& row : alpha) {
        if (row.size() != factors.size()) throw ValidationError("weight row has wrong length");
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] < 0 || row[k] >= factors[k]) throw ValidationError("weight not reduced modulo its factor");
    }
    if (order() > 4096) throw ValidationError("group order above 4096");
}

AbelianAction parse_action(const std::string& s) {
    AbelianAction a;
    std::stringstream ss(s);
    std::string part;
    std::size_t n = 0;
    bool first = true;
    while (std::getline(ss, part, ';')) {
        CyclicActionType t = parse_type(part);
        if (!t.r.fits_slong_p()) throw ValidationError("factor too large");
        long r = t.r.get_si();
        if (first) {
            n = t.a.size();
            a.alpha.assign(n, {});
            first = false;
        } else if (t.a.size() != n) {
            throw ValidationError("summands act on different dimensions");
        }
        a.factors.push_back(r);
        for (std::size_t j = 0; j < n; ++j) {
            Int w = t.a[j] % t.r;
            if (w < 0) w += t.r;
            a.alpha[j].push_back(w.get_si());
        }
    }
    if (first) throw ValidationError("empty action type");
    a.validate();
    return a;
}

McKayQuiver mckay_quiver(const AbelianAction& a) {
    a.validate();
    McKayQuiver m;
    m.action = a;
    std::size_t n = a.n(), g = a.order();
    m.quiver.nv = g;
    for (std::size_t rho = 0; rho < g; ++rho)
        for (std::size_t i = 0; i < n; ++i) {
            IVec lab(n);
            lab[i] = 1;
            m.quiver.arrows.push_back({rho, a.shift(rho, i), lab});
        }
    for (std::size_t rho = 0; rho < g; ++rho)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                std::vector<std::size_t> p{rho * n + i, a.shift(rho, i) * n + j};
                std::vector<std::size_t> q{rho * n + j, a.shift(rho, j) * n + i};
                m.relations.push_back({p, q});
            }
    return m;
}

BinomialIdeal relation_ideal(const McKayQuiver& q) {
    std::size_t na = q.quiver.na();
    std::vector<BinomialGen> gens;
    for (auto& [p, r] : q.relations) {
        Exp a(na), b(na);
        for (auto x : p) ++a[x];
        for (auto x : r) ++b[x];
        if (a != b) gens.push_back(BinomialGen::binomial(a, b));
    }
    return BinomialIdeal(na, gens);
}

std::vector<Staircase> fixed_g_clusters(const AbelianAction& a, std::size_t cap) {
    a.validate();
    std::size_t g = a.order(), n = a.n();
    if (g > cap) throw ValidationError("group order " + std::to_string(g) + " exceeds cluster cap " + std::to_string(cap));
    std::set<Staircase> level{Staircase{Exp(n, 0)}};
    for (std::size_t k = 1; k < g; ++k) {
        std::set<Staircase> next;
        for (auto& s : level) {
            std::vector<bool> used(g, false);
            for (auto& m : s) used[a.weight(m)] = true;
            for (auto& m : s)
                for (std::size_t i = 0; i < n; ++i) {
                    Exp c = m;
                    ++c[i];
                    if (std::binary_search(s.begin(), s.end(), c) || used[a.weight(c)]) continue;
                    bool ok = true;
                    for (std::size_t j = 0; j < n && ok; ++j) {
                        if (!c[j]) continue;
                        Exp d = c;
                        --d[j];
                        if (!std::binary_search(s.begin(), s.end(), d)) ok = false;
                    }
                    if (!ok) continue;
                    Staircase t = s;
                    t.insert(std::upper_bound(t.begin(), t.end(), c), c);
                    next.insert(t);
                }
        }
        level = std::move(next);
    }
    std::vector<Staircase> out(level.rbegin(), level.rend());
    return out;
}

Support cluster_to_rep(const Staircase& c, const McKayQuiver& q) {
    const auto& a = q.action;
    std::size_t n = a.n();
    Support s(q.quiver.na(), false);
    for (auto& m : c) {
        std::size_t rho = a.weight(m);
        for (std::size_t i = 0; i < n; ++i) {
            Exp e = m;
            ++e[i];
            if (std::binary_search(c.begin(), c.end(), e)) s[rho * n + i] = true;
        }
    }
    return s;
}

bool commutation_ok(const McKayQuiver& q, const Support& s) {
    for (auto& [p, r] : q.relations)
        if ((s[p[0]] && s[p[1]]) != (s[r[0]] && s[r[1]])) return false;
    return true;
}

std::optional<std::vector<IVec>> support_potential(const McKayQuiver& q, const Support& s) {
    std::size_t nv = q.quiver.nv, n = q.action.n();
    std::vector<std::optional<IVec>> m(nv);
    m[0] = IVec(n);
    std::vector<std::size_t> st{0};
    while (!st.empty()) {
        auto v = st.back();
        st.pop_back();
        for (std::size_t a = 0; a < q.quiver.na(); ++a) {
            if (!s[a]) continue;
            auto& ar = q.quiver.arrows[a];
            std::size_t i = q.var(a);
            if (ar.tail == v || ar.head == v) {
                IVec want = *m[v];
                std::size_t other;
                if (ar.tail == v) {
                    other = ar.head;
                    want[i] += 1;
                } else {
                    other = ar.tail;
                    want[i] -= 1;
                }
                if (ar.tail == ar.head) return std::nullopt;
                if (!m[other]) {
                    m[other] = want;
                    st.push_back(other);
                } else if (*m[other] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<IVec> out;
    for (auto& x : m) {
        if (!x) return std::nullopt; // disconnected
        out.push_back(*x);
    }
    return out;
}

bool generic_weight(const QVec& theta) {
    std::size_t nv = theta.size();
    if (nv > 24) throw ValidationError("genericity check limited to 24 vertices");
    for (unsigned long m = 1; m + 1 < (1UL << nv); ++m) {
        Rat s = 0;
        for (std::size_t i = 0; i < nv; ++i)
            if (m >> i & 1UL) s += theta[i];
        if (s == 0) return false;
    }
    return true;
}

namespace {

void check_weight(const McKayQuiver& q, const QVec& theta) {
    if (theta.size() != q.quiver.nv) throw ValidationError("weight length differs from group order");
    Rat tot = 0;
    for (auto& t : theta) tot += t;
    if (tot != 0) throw ValidationError("weight does not sum to zero");
    if (!generic_weight(theta)) throw ValidationError("weight is not generic");
}

// DFS over arrow bits with unit propagation on the commutation rules and a
// rollback union-find holding the torus potential
struct BitSearch {
    const McKayQuiver& q;
    const QVec& theta;
    const Budget& budget;
    std::size_t na, nv, n;
    std::vector<int> val;
    std::vector<std::vector<std::size_t>> rel_of;
    std::vector<std::size_t> parent, size;
    std::vector<std::vector<long>> off; // m(v) - m(parent)
    std::vector<std::size_t> trail, dsu_trail;
    std::vector<std::vector<std::size_t>> in_of, out_of;
    ConstellationSearch res;
    bool stop = false;

    BitSearch(const McKayQuiver& q_, const QVec& th, const Budget& b)
        : q(q_), theta(th), budget(b), na(q_.quiver.na()), nv(q_.quiver.nv), n(q_.action.n()),
          val(na, -1), rel_of(na), parent(nv), size(nv, 1), off(nv, std::vector<long>(n, 0)),
          in_of(nv), out_of(nv) {
        for (std::size_t v = 0; v < nv; ++v) parent[v] = v;
        for (std::size_t r = 0; r < q.relations.size(); ++r) {
            auto& [p, s] = q.relations[r];
            for (auto a : {p[0], p[1], s[0], s[1]}) rel_of[a].push_back(r);
        }
        for (auto& v : rel_of) v.erase(std::unique(v.begin(), v.end()), v.end());
        for (std::size_t a = 0; a < na; ++a) {
            auto& ar = q.quiver.arrows[a];
            if (ar.tail == ar.head) continue;
            out_of[ar.tail].push_back(a);
            in_of[ar.head].push_back(a);
        }
    }

    std::size_t find(std::size_t v, std::vector<long>& acc) const {
        acc.assign(n, 0);
        while (parent[v] != v) {
            for (std::size_t i = 0; i < n; ++i) acc[i] += off[v][i];
            v = parent[v];
        }
        return v;
    }

    bool link(std::size_t a) {
        auto& ar = q.quiver.arrows[a];
        std::size_t i = q.var(a);
        std::vector<long> ot, oh;
        std::size_t rt = find(ar.tail, ot), rh = find(ar.head, oh);
        if (rt == rh) {
            for (std::size_t k = 0; k < n; ++k)
                if (oh[k] - ot[k] != (k == i ? 1 : 0)) return false;
            return true;
        }
        // m(rh) - m(rt) = ot + e_i - oh
        std::vector<long> d(n);
        for (std::size_t k = 0; k < n; ++k) d[k] = ot[k] + (k == i ? 1 : 0) - oh[k];
        if (size[rh] > size[rt]) {
            std::swap(rh, rt);
            for (auto& x : d) x = -x;
        }
        parent[rh] = rt;
        off[rh] = d;
        size[rt] += size[rh];
        dsu_trail.push_back(rh);
        return true;
    }

    void undo_to(std::size_t t, std::size_t dt) {
        while (trail.size() > t) {
            val[trail.back()] = -1;
            trail.pop_back();
        }
        while (dsu_trail.size() > dt) {
            std::size_t r = dsu_trail.back();
            dsu_trail.pop_back();
            size[parent[r]] -= size[r];
            parent[r] = r;
            std::fill(off[r].begin(), off[r].end(), 0);
        }
    }

    bool vertex_ok(std::size_t v) const {
        if (theta[v] < 0) {
            bool any = false, open = false;
            for (auto a : out_of[v]) {
                if (val[a] == 1) any = true;
                if (val[a] == -1) open = true;
            }
            if (!any && !open) return false;
        } else {
            bool any = false, open = false;
            for (auto a : in_of[v]) {
                if (val[a] == 1) any = true;
                if (val[a] == -1) open = true;
            }
            if (!any && !open) return false;
        }
        return true;
    }

    bool assign(std::size_t a, int x, std::vector<std::size_t>& queue) {
        if (val[a] != -1) return val[a] == x;
        val[a] = x;
        trail.push_back(a);
        if (x == 1 && !link(a)) return false;
        queue.push_back(a);
        return true;
    }

    bool propagate(std::vector<std::size_t>& queue) {
        while (!queue.empty()) {
            std::size_t a = queue.back();
            queue.pop_back();
            auto& ar = q.quiver.arrows[a];
            if (!vertex_ok(ar.tail) || !vertex_ok(ar.head)) return false;
            for (auto r : rel_of[a]) {
                auto& [p, s] = q.relations[r];
                auto state = [&](const std::vector<std::size_t>& path) {
                    int x = val[path[0]], y = val[path[1]];
                    if (x == 0 || y == 0) return 0;
                    if (x == 1 && y == 1) return 1;
                    return -1;
                };
                int P = state(p), S = state(s);
                if (P == 1 && S == 0) return false;
                if (S == 1 && P == 0) return false;
                if (P == 1) {
                    if (!assign(s[0], 1, queue) || !assign(s[1], 1, queue)) return false;
                } else if (S == 1) {
                    if (!assign(p[0], 1, queue) || !assign(p[1], 1, queue)) return false;
                } else if (P == 0 && S == -1) {
                    if (val[s[0]] == 1 && !assign(s[1], 0, queue)) return false;
                    if (val[s[1]] == 1 && !assign(s[0], 0, queue)) return false;
                } else if (S == 0 && P == -1) {
                    if (val[p[0]] == 1 && !assign(p[1], 0, queue)) return false;
                    if (val[p[1]] == 1 && !assign(p[0], 0, queue)) return false;
                }
            }
        }
        return true;
    }

    void leaf() {
        Support s(na);
        for (std::size_t a = 0; a < na; ++a) s[a] = val[a] == 1;
        if (size[find_root(0)] != nv) return;
        if (is_theta_stable(q.quiver, s, theta).verdict == Stability::Stable) res.found.push_back(s);
    }

    std::size_t find_root(std::size_t v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }

    void dfs(std::size_t a) {
        if (stop) return;
        ++res.nodes;
        if ((res.nodes & 1023) == 0 && budget.exhausted(static_cast<long>(res.nodes))) {
            res.complete = false;
            stop = true;
            return;
        }
        while (a < na && val[a] != -1) ++a;
        if (a == na) {
            leaf();
            return;
        }
        for (int x : {1, 0}) {
            std::size_t t = trail.size(), dt = dsu_trail.size();
            std::vector<std::size_t> queue;
            if (assign(a, x, queue) && propagate(queue)) dfs(a + 1);
            undo_to(t, dt);
            if (stop) return;
        }
    }
};

} // namespace

ConstellationSearch fixed_stable_constellations(const McKayQuiver& q, const QVec& theta, const Budget& budget) {
    check_weight(q, theta);
    BitSearch bs(q, theta, budget);
    // loops can never carry a torus potential
    std::vector<std::size_t> queue;
    for (std::size_t a = 0; a < bs.na; ++a)
        if (q.quiver.arrows[a].tail == q.quiver.arrows[a].head) bs.assign(a, 0, queue);
    queue.clear();
    for (std::size_t v = 0; v < bs.nv; ++v)
        if (!bs.vertex_ok(v)) return bs.res;
    bs.dfs(0);
    std::sort(bs.res.found.begin(), bs.res.found.end());
    return bs.res;
}

LatticeMap cmt_lattice_map(const McKayQuiver& q) {
    auto id = incidence_data(q.quiver);
    std::size_t nv = q.quiver.nv, n = q.action.n(), na = q.quiver.na();
    Mat m(nv + n, na);
    for (std::size_t a = 0; a < na; ++a) {
        for (std::size_t v = 0; v < nv; ++v) m(v, a) = id.inc(v, a);
        m(nv + q.var(a), a) = 1;
    }
    return m;
}

Mat invariant_lattice(const AbelianAction& a) {
    std::size_t n = a.n(), k = a.factors.size();
    Mat A(k, n + k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < n; ++j) A(r, j) = a.alpha[j][r];
        A(r, n + r) = a.factors[r];
    }
    Mat K = kernel_basis(A);
    std::vector<IVec> gens;
    for (auto& c : K.col_list()) gens.push_back(IVec(c.begin(), c.begin() + n));
    return lattice_basis(gens, n);
}

CoherentFan coherent_component_fan(const McKayQuiver& q, const QVec& theta) {
    check_weight(q, theta);
    std::size_t nv = q.quiver.nv, n = q.action.n(), na = q.quiver.na();
    auto id = incidence_data(q.quiver);
    CoherentFan out;
    auto base_lp = [&]() {
        LP lp(na);
        for (std::size_t v = 1; v < nv; ++v) {
            QVec r(na);
            for (std::size_t a = 0; a < na; ++a) r[a] = id.inc(v, a);
            lp.add(r, LP::EQ, theta[v]);
        }
        return lp;
    };
    auto image = [&](const QVec& x) {
        QVec e(n);
        for (std::size_t a = 0; a < na; ++a) e[q.var(a)] += x[a];
        return e;
    };
    auto minimize = [&](const QVec& r) -> QVec {
        LP lp = base_lp();
        for (std::size_t a = 0; a < na; ++a) lp.obj[a] = r[q.var(a)];
        auto res = solve_lp(lp);
        ++out.lp_calls;
        if (res.status == LPResult::Infeasible) throw ComputeError("fiber polyhedron is empty");
        if (res.status == LPResult::Unbounded) throw ComputeError("objective unbounded on fiber polyhedron");
        return image(res.x);
    };
    std::vector<QVec> cand{minimize(QVec(n, Rat(1)))};
    auto is_vertex = [&](std::size_t k) {
        // c_k in conv(others) + orthant ?
        std::size_t m = cand.size();
        if (m == 1) return true;
        LP lp(m - 1);
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < m; ++j)
            if (j != k) idx.push_back(j);
        QVec one(m - 1, Rat(1));
        lp.add(one, LP::EQ, 1);
        for (std::size_t i = 0; i < n; ++i) {
            QVec r(m - 1);
            for (std::size_t t = 0; t < idx.size(); ++t) r[t] = cand[idx[t]][i];
            lp.add(r, LP::LE, cand[k][i]);
        }
        return solve_lp(lp).status != LPResult::Optimal;
    };
    std::vector<std::size_t> verts;
    std::vector<Cone> normals;
    for (;;) {
        verts.clear();
        normals.clear();
        for (std::size_t k = 0; k < cand.size(); ++k)
            if (is_vertex(k)) verts.push_back(k);
        bool grew = false;
        for (auto k : verts) {
            std::vector<IVec> gens;
            for (std::size_t i = 0; i < n; ++i) {
                IVec e(n);
                e[i] = 1;
                gens.push_back(e);
            }
            for (auto& c : cand) {
                QVec d(n);
                for (std::size_t i = 0; i < n; ++i) d[i] = c[i] - cand[k][i];
                IVec p = primitive(d);
                if (!is_zero(p)) gens.push_back(p);
            }
            Cone N = dual_cone(Cone::from_generators(n, gens));
            for (auto& r : N.rays) {
                QVec rq = to_q(r);
                QVec y = minimize(rq);
                if (dot(rq, y) < dot(rq, cand[k])) {
                    if (std::find(cand.begin(), cand.end(), y) != cand.end())
                        throw ComputeError("coherent fan: vertex search stalled");
                    cand.push_back(y);
                    grew = true;
                    break;
                }
            }
            if (grew) break;
            normals.push_back(N);
        }
        if (!grew) break;
    }
    Mat B = invariant_lattice(q.action);
    std::vector<std::pair<Cone, QVec>> cones;
    for (std::size_t t = 0; t < verts.size(); ++t) {
        std::vector<IVec> rs;
        for (auto& r : normals[t].rays) rs.push_back(primitive(B * r));
        cones.push_back({Cone::from_generators(n, rs), cand[verts[t]]});
    }
    std::sort(cones.begin(), cones.end(), [](auto& x, auto& y) { return x.first < y.first; });
    out.fan.dim = n;
    for (auto& [c, v] : cones) {
        out.fan.cones.push_back(c);
        out.vertices.push_back(v);
    }
    validate_fan(out.fan);
    out.smooth = is_smooth(out.fan);
    return out;
}

WallReport wall_report(const McKayQuiver& q, const QVec& from, const QVec& to, const Budget& budget) {
    check_weight(q, from);
    check_weight(q, to);
    std::size_t nv = q.quiver.nv;
    auto s1 = subset_signs(nv, from), s2 = subset_signs(nv, to);
    std::vector<std::size_t> diff;
    for (std::size_t k = 0; k < s1.size(); ++k)
        if (s1[k] != s2[k]) diff.push_back(k);
    if (diff.empty()) throw ValidationError("weights lie in the same chamber: not adjacent");
    if (diff.size() > 1) throw ValidationError("weights are separated by " + std::to_string(diff.size()) + " hyperplanes: not adjacent");
    WallReport w;
    w.hyperplane = diff[0];
    w.normal.assign(nv - 1, Int(0));
    unsigned long m = diff[0] + 1;
    for (std::size_t i = 0; i + 1 < nv; ++i)
        if (m >> i & 1UL) w.normal[i] = 1;
    auto A = fixed_stable_constellations(q, from, budget);
    auto B = fixed_stable_constellations(q, to, budget);
    w.complete = A.complete && B.complete;
    std::set_difference(A.found.begin(), A.found.end(), B.found.begin(), B.found.end(), std::back_inserter(w.lost));
    std::set_difference(B.found.begin(), B.found.end(), A.found.begin(), A.found.end(), std::back_inserter(w.gained));
    std::set_intersection(A.found.begin(), A.found.end(), B.found.begin(), B.found.end(), std::back_inserter(w.kept));
    if (w.complete && w.lost.empty() && w.gained.empty())
        throw ValidationError("weights lie in the same chamber: hyperplane is not a wall");
    w.from = coherent_component_fan(q, from);
    w.to = coherent_component_fan(q, to);
    w.fans_equal = w.from.fan == w.to.fan;
    w.isomorphism = fan_isomorphism(w.from.fan, w.to.fan);
    auto& f = w.from.fan.cones;
    auto& g = w.to.fan.cones;
    std::set_difference(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(w.only_from));
    std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(w.only_to));
    return w;
}

std::string support_string(const McKayQuiver& q, const Support& s) {
    static const char* names = "xyzwuvst";
    std::size_t n = q.action.n();
    std::string out = "{";
    bool first = true;
    for (std::size_t a = 0; a < s.size(); ++a) {
        if (!s[a]) continue;
        if (!first) out += ", ";
        first = false;
        auto& ar = q.quiver.arrows[a];
        std::string v = n <= 8 ? std::string(1, names[q.var(a)]) : "x" + std::to_string(q.var(a) + 1);
        out += std::to_string(ar.tail) + "-" + v + "->" + std::to_string(ar.head);
    }
    return out + "}";
}

} // namespace tq
