#include "toricq/torvar.hpp"
#include "toricq/lp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tq {

CyclicActionType parse_type(const std::string& s) {
    std::vector<Int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.emplace_back(tok);
        } catch (...) {
            throw ValidationError("bad integer in type: '" + tok + "'");
        }
    }
    if (v.size() < 2) throw ValidationError("type needs r and at least one weight");
    CyclicActionType t;
    t.r = v[0];
    if (t.r < 1) throw ValidationError("type: r must be positive");
    t.a.assign(v.begin() + 1, v.end());
    for (auto& x : t.a)
        if (x < 0 || x >= t.r) throw ValidationError("type: weights must lie in [0, r)");
    return t;
}

GradedSemigroup invariant_semigroup(const CyclicActionType& t) {
    std::size_t n = t.a.size();
    // L = {u : a.u = 0 mod r}
    Mat A(1, n + 1);
    for (std::size_t i = 0; i < n; ++i) A(0, i) = t.a[i];
    A(0, n) = -t.r;
    Mat K = kernel_basis(A);
    std::vector<IVec> gens;
    for (std::size_t j = 0; j < K.cols; ++j) {
        IVec c = K.col(j);
        c.pop_back();
        gens.push_back(c);
    }
    Mat L = lattice_basis(gens, n);
    std::vector<IVec> units;
    for (std::size_t i = 0; i < n; ++i) units.push_back(Mat::identity(n).row(i));
    Cone orth = Cone::from_generators(n, units);
    GradedSemigroup s;
    s.d = n;
    s.gens = hilbert_basis(orth, L);
    s.grading = Mat(0, n);
    return s;
}

JungHirzebruch jung_hirzebruch(const Int& r, const Int& a) {
    if (!(a > 0 && a < r)) throw ValidationError("jung_hirzebruch: need 0 < a < r");
    if (gcd(a, r) != 1) throw ValidationError("jung_hirzebruch: gcd(a, r) must be 1");
    JungHirzebruch jh;
    Int p = r, q = r - a;
    while (q > 0) {
        Int b;
        mpz_cdiv_q(b.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        jh.coefficients.push_back(b);
        Int nq = b * q - p;
        p = q;
        q = nq;
    }
    jh.generators.push_back({r, Int(0)});
    jh.generators.push_back({r - a, Int(1)});
    for (std::size_t i = 0; i < jh.coefficients.size(); ++i) {
        const IVec& u = jh.generators[i + 1];
        const IVec& w = jh.generators[i];
        jh.generators.push_back(sub(scale(jh.coefficients[i], u), w));
    }
    return jh;
}

bool in_semigroup(const std::vector<IVec>& gens, const IVec& v) {
    if (is_zero(v)) return true;
    if (gens.empty()) return false;
    Mat G = Mat::from_cols(gens, v.size());
    return fiber_point(G, v).has_value();
}

std::vector<IVec> minimal_generators(const std::vector<IVec>& gens0) {
    std::vector<IVec> gens;
    for (auto& g : sort_unique(gens0))
        if (!is_zero(g)) gens.push_back(g);
    std::vector<IVec> keep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<IVec> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (!in_semigroup(others, gens[i])) keep.push_back(gens[i]);
    }
    return keep;
}

NormalityResult is_normal(const GradedSemigroup& s) {
    std::vector<IVec> gens;
    for (auto& g : s.gens)
        if (!is_zero(g)) gens.push_back(g);
    NormalityResult res;
    if (gens.empty()) return res;
    Cone c = Cone::from_generators(s.d, gens);
    if (!c.strongly_convex()) throw ValidationError("is_normal: cone of the semigroup is not strongly convex");
    Mat L = lattice_basis(gens, s.d);
    res.hilbert = hilbert_basis(c, L);
    for (auto& h : res.hilbert)
        if (!in_semigroup(gens, h)) {
            res.normal = false;
            res.witness = h; // hilbert is sorted, so this is the lex-smallest
            break;
        }
    return res;
}

std::pair<Int, Int> cyclic_type_of_cone(const IVec& n1, const IVec& n2) {
    // U n1 = (0,1)
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), n1[0].get_mpz_t(), n1[1].get_mpz_t());
    if (g != 1) throw ComputeError("cyclic_type: ray is not primitive");
    // rows: (n1[1], -n1[0]) and (s, t); det = n1[1]*t + n1[0]*s = 1
    Int x = n1[1] * n2[0] - n1[0] * n2[1];
    Int y = s * n2[0] + t * n2[1];
    Int r = abs(x);
    if (r == 0) throw ComputeError("cyclic_type: degenerate cone");
    if (x < 0) x = -x; // reflection fixing (0,1)
    Int q = y % r;
    if (q < 0) q += r;
    Int a = (r - q) % r;
    if (r == 1) return {Int(1), Int(0)};
    Int inv;
    mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), r.get_mpz_t());
    return {r, std::min(a, inv)};
}

namespace {

// sums of positive-degree generators of total degree ell
std::vector<IVec> degree_sums(const std::vector<IVec>& pos, const std::vector<Int>& deg, const Int& ell, std::size_t d) {
    if (pos.empty()) return {};
    Mat D(1, pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) D(0, i) = deg[i];
    auto combos = lattice_points_in_fiber(D, {ell});
    Mat G = Mat::from_cols(pos, d);
    std::vector<IVec> out;
    for (auto& c : combos) out.push_back(G * c);
    return sort_unique(out);
}

bool in_hull_plus_cone(const IVec& u, const std::vector<IVec>& pts, const std::vector<IVec>& rays) {
    std::size_t d = u.size();
    LP lp(pts.size() + rays.size());
    for (std::size_t i = 0; i < d; ++i) {
        QVec a(pts.size() + rays.size());
        for (std::size_t k = 0; k < pts.size(); ++k) a[k] = pts[k][i];
        for (std::size_t k = 0; k < rays.size(); ++k) a[pts.size() + k] = rays[k][i];
        lp.add(a, LP::EQ, Rat(u[i]));
    }
    QVec one(pts.size() + rays.size());
    for (std::size_t k = 0; k < pts.size(); ++k) one[k] = 1;
    lp.add(one, LP::EQ, 1);
    return solve_lp(lp).status == LPResult::Optimal;
}

} // namespace

ProjCharts proj_charts(const GradedSemigroup& s, int ell_cap, int veronese_check) {
    if (s.grading.rows != 1 || s.grading.cols != s.d) throw ValidationError("proj_charts: need a single Z-grading");
    IVec nu = s.grading.row(0);
    std::vector<IVec> S0, P;
    std::vector<Int> pdeg;
    for (auto& g : s.gens) {
        Int dg = dot(nu, g);
        if (dg < 0) throw ValidationError("proj_charts: grading takes a negative value on a generator");
        if (is_zero(g)) continue;
        if (dg == 0) S0.push_back(g);
        else {
            P.push_back(g);
            pdeg.push_back(dg);
        }
    }
    if (P.empty()) throw ComputeError("proj_charts: no generator of positive degree (Proj is empty)");
    for (int ell = 1; ell <= ell_cap; ++ell) {
        auto T = degree_sums(P, pdeg, ell, s.d);
        if (T.empty()) continue;
        bool ok = true;
        for (int m = 2; m <= veronese_check && ok; ++m) {
            auto Tm = degree_sums(P, pdeg, Int(ell * m), s.d);
            std::set<IVec> prods(T.begin(), T.end());
            for (int k = 1; k < m; ++k) {
                std::set<IVec> nxt;
                for (auto& a : prods)
                    for (auto& b : T) nxt.insert(add(a, b));
                prods = std::move(nxt);
            }
            for (auto& x : Tm) {
                bool hit = false;
                for (auto& y : prods)
                    if (in_semigroup(S0, sub(x, y))) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        ProjCharts pc;
        pc.ell = ell;
        pc.degree_piece = T;
        for (std::size_t i = 0; i < T.size(); ++i) {
            std::vector<IVec> others;
            for (std::size_t j = 0; j < T.size(); ++j)
                if (j != i) others.push_back(T[j]);
            if (!others.empty() && in_hull_plus_cone(T[i], others, S0)) continue;
            Chart ch;
            ch.vertex = T[i];
            std::vector<IVec> g = S0;
            for (auto& v : T)
                if (v != T[i]) g.push_back(sub(v, T[i]));
            ch.generators = minimal_generators(g);
            if (!ch.generators.empty()) {
                Cone c = Cone::from_generators(s.d, ch.generators);
                if (!c.strongly_convex()) throw ComputeError("proj_charts: chart cone has lineality");
                NormalityResult nr = is_normal({s.d, ch.generators, Mat(0, s.d)});
                ch.hilbert = nr.hilbert;
                ch.normal = nr.normal;
                // two-dimensional chart: type from the dual cone inside M
                Mat L = lattice_basis(ch.generators, s.d);
                if (L.rows == 2 && rank(Mat::from_rows(ch.generators, s.d)) == 2 && ch.normal) {
                    // coordinates of the chart lattice
                    Mat Lt = L.transpose();
                    std::vector<IVec> coords;
                    for (auto& h : ch.hilbert) coords.push_back(*solve_integral(Lt, h));
                    Cone cc = Cone::from_generators(2, coords);
                    auto n = cc.facets; // rays of the N-cone
                    if (n.size() == 2) ch.cyclic_type = cyclic_type_of_cone(n[0], n[1]);
                }
            } else {
                ch.cyclic_type = std::make_pair(Int(1), Int(0));
            }
            pc.charts.push_back(ch);
        }
        return pc;
    }
    throw ComputeError("proj_charts: no generating degree found up to the cap");
}

GradedSemigroup git_quotient_semigroup(const GradedSemigroup& s, const IVec& chi, int j_max) {
    if (s.grading.cols != s.d || s.grading.rows != chi.size()) throw ValidationError("git: grading/character shape mismatch");
    std::vector<IVec> gens;
    for (auto& g : s.gens)
        if (!is_zero(g)) gens.push_back(g);
    std::size_t m = gens.size(), k = chi.size();
    // cone {(c, j) >= 0 : pi G c - j chi = 0} in Z^{m+1}
    Mat G = Mat::from_cols(gens, s.d);
    Mat PG = s.grading * G;
    std::vector<IVec> eq;
    for (std::size_t i = 0; i < k; ++i) {
        IVec row = PG.row(i);
        row.push_back(-chi[i]);
        eq.push_back(row);
    }
    std::vector<IVec> ineq;
    for (std::size_t i = 0; i <= m; ++i) ineq.push_back(Mat::identity(m + 1).row(i));
    Cone C = Cone::from_inequalities(m + 1, ineq, eq);
    std::vector<IVec> hb;
    if (!C.rays.empty()) hb = hilbert_basis(C);
    bool effective = false;
    std::vector<IVec> out;
    for (auto& h : hb) {
        IVec c(h.begin(), h.end() - 1);
        Int j = h.back();
        if (j > 0) effective = true;
        if (j > j_max) throw ComputeError("git: generators not found within j_max");
        IVec u = G * c;
        u.push_back(j);
        out.push_back(u);
    }
    if (!effective && !is_zero(chi)) throw ComputeError("git: character is not effective up to j_max");
    GradedSemigroup r;
    r.d = s.d + 1;
    r.gens = minimal_generators(out);
    r.grading = Mat(1, s.d + 1);
    r.grading(0, s.d) = 1;
    return r;
}

CoxData cox_data(const Fan& f, std::optional<std::vector<IVec>> ray_order) {
    CoxData cd;
    cd.fan = f;
    cd.ray_order = ray_order ? *ray_order : f.rays();
    auto fr = f.rays();
    if (sort_unique(cd.ray_order) != fr) throw ValidationError("cox_data: ray order is not a permutation of the fan rays");
    cd.div = Mat::from_rows(cd.ray_order, f.dim);
    cd.deg = cokernel_presentation(cd.div);
    for (auto& c : f.cones) {
        IVec e(cd.ray_order.size());
        for (std::size_t i = 0; i < cd.ray_order.size(); ++i)
            if (!std::binary_search(c.rays.begin(), c.rays.end(), cd.ray_order[i])) e[i] = 1;
        cd.irrelevant_ideal.push_back(e);
    }
    return cd;
}

bool is_simplicial(const Fan& f) {
    for (auto& c : f.cones)
        if (c.rays.size() != c.cone_dim()) return false;
    return true;
}

bool is_smooth(const Fan& f) {
    if (!is_simplicial(f)) return false;
    for (auto& c : f.cones) {
        if (c.rays.empty()) continue;
        auto sd = smith_normal_form(Mat::from_rows(c.rays, f.dim));
        for (auto& x : sd.d)
            if (x != 1) return false;
    }
    return true;
}

} // namespace tq
