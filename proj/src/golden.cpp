#include "toricq/golden.hpp"
#include "toricq/fixtures.hpp"
#include "toricq/lp.hpp"

#include <algorithm>
#include <set>

namespace tq {

namespace fx = fixtures;

namespace {

Exp E(std::initializer_list<int> xs) { return Exp(xs); }

BinomialGen bin(std::size_t n, std::vector<std::size_t> p, std::vector<std::size_t> m, int base = 1) {
    Exp a(n), b(n);
    for (auto i : p) ++a[i - base];
    for (auto i : m) ++b[i - base];
    return BinomialGen::binomial(a, b);
}

std::vector<IVec> sorted(std::vector<IVec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

GradedSemigroup polynomial_ring(const Mat& grading) {
    GradedSemigroup s;
    s.d = grading.cols;
    for (std::size_t i = 0; i < s.d; ++i) {
        IVec e(s.d);
        e[i] = 1;
        s.gens.push_back(e);
    }
    s.grading = grading;
    return s;
}

// p is not in the convex hull of the others
bool hull_vertex(const std::vector<IVec>& pts, std::size_t k) {
    std::size_t m = pts.size(), d = pts[k].size();
    LP lp(m - 1);
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < m; ++j)
        if (j != k) idx.push_back(j);
    lp.add(QVec(m - 1, Rat(1)), LP::EQ, 1);
    for (std::size_t i = 0; i < d; ++i) {
        QVec r(m - 1);
        for (std::size_t t = 0; t < idx.size(); ++t) r[t] = pts[idx[t]][i];
        lp.add(r, LP::EQ, Rat(pts[k][i]));
    }
    return solve_lp(lp).status != LPResult::Optimal;
}

RationalPolyhedron divisor_polyhedron(const std::vector<IVec>& rays, const IVec& a) {
    RationalPolyhedron p;
    p.dim = rays[0].size();
    for (std::size_t i = 0; i < rays.size(); ++i) p.ineqs.push_back({rays[i], a[i]});
    return p;
}

bool same_supports(const McKayQuiver& q, const std::vector<Support>& got, std::vector<std::vector<std::size_t>> want) {
    std::set<std::vector<std::size_t>> g, w(want.begin(), want.end());
    for (auto& s : got) {
        std::vector<std::size_t> v;
        for (std::size_t a = 0; a < s.size(); ++a)
            if (s[a]) v.push_back(a);
        g.insert(v);
    }
    (void)q;
    return g == w;
}

// arrow index in the McKay quiver from tail along variable i
std::size_t arr(const McKayQuiver& q, std::size_t rho, std::size_t i) { return rho * q.action.n() + i; }

std::vector<std::size_t> sup(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// (tail, head, label) multiset of a quiver
std::multiset<std::tuple<std::size_t, std::size_t, IVec>> arrow_set(const Quiver& q) {
    std::multiset<std::tuple<std::size_t, std::size_t, IVec>> s;
    for (auto& a : q.arrows) s.insert({a.tail, a.head, a.label ? *a.label : IVec{}});
    return s;
}

IVec div_of(std::size_t n, std::initializer_list<std::size_t> xs, int base) {
    IVec d(n);
    for (auto i : xs) d[i - base] += 1;
    return d;
}

bool fans_iso(const Fan& a, const Fan& b) { return a.cones.size() == b.cones.size() && fan_isomorphism(a, b).has_value(); }

Fan g_hilb_v4_expected(const Mat& B) {
    // e1, e2, e3 and the three midpoints, pushed into coordinates dual to B
    std::vector<IVec> f{ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1}), ivec({1, 1, 0}), ivec({1, 0, 1}), ivec({0, 1, 1})};
    std::vector<IVec> r;
    for (auto& x : f) r.push_back(primitive(B * x));
    return fx::make_fan(r, {{0, 3, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

bool flop_across(const McKayQuiver& q, const QVec& from, const QVec& to, std::string& note) {
    auto w = wall_report(q, from, to);
    bool flop = !w.fans_equal && w.from.fan.rays() == w.to.fan.rays() && w.from.smooth && w.to.smooth &&
                w.from.fan.cones.size() == w.to.fan.cones.size();
    note += std::to_string(w.only_from.size()) + "->" + std::to_string(w.only_to.size()) + " cones; ";
    return flop;
}

} // namespace

std::vector<GoldenCase> golden_cases() {
    std::vector<GoldenCase> g;
    auto add = [&](std::string l, std::string w, std::function<bool(std::string&)> f) { g.push_back({l, w, f}); };

    add("f1-cokernel", "cokernel of the F1 div map", [](std::string&) {
        Mat div = Mat::from_rows(fx::f1_rays(), 2);
        auto ck = cokernel_presentation(div);
        Mat want{{1, -1, 1, 0}, {0, 1, 0, 1}};
        Mat got(2, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) got(i, j) = ck.projection(i, j);
        return ck.free_rank == 2 && ck.torsion.empty() && hermite_normal_form(got).H == hermite_normal_form(want).H;
    });
    add("a2-semigroup", "dual cone semigroup of 1/3(1,2) is x^3, xy, y^3", [](std::string&) {
        auto s = invariant_semigroup(parse_type("3,1,2"));
        auto jh = jung_hirzebruch(3, 2);
        std::vector<IVec> want{ivec({0, 3}), ivec({1, 1}), ivec({3, 0})};
        return sorted(s.gens) == want && sorted(jh.generators) == want;
    });
    add("c714-gens", "1/7(1,4) generators x^7, x^3y, x^2y^3, xy^5, y^7", [](std::string&) {
        std::vector<IVec> want{ivec({0, 7}), ivec({1, 5}), ivec({2, 3}), ivec({3, 1}), ivec({7, 0})};
        return sorted(invariant_semigroup(parse_type("7,1,4")).gens) == want && sorted(jung_hirzebruch(7, 4).generators) == want;
    });
    add("c714-ideal", "toric ideal of 1/7(1,4) is the 2x2 minors", [](std::string&) {
        auto s = invariant_semigroup(parse_type("7,1,4"));
        auto gens = s.gens; // order (7,0),(3,1),(2,3),(1,5),(0,7)
        std::sort(gens.begin(), gens.end(), [](auto& a, auto& b) { return a > b; });
        auto I = toric_ideal(Mat::from_cols(gens, 2));
        // minors of [[y0,y1,y2,y3],[y1^2,y2,y3,y4]]
        std::vector<Exp> top{E({1, 0, 0, 0, 0}), E({0, 1, 0, 0, 0}), E({0, 0, 1, 0, 0}), E({0, 0, 0, 1, 0})};
        std::vector<Exp> bot{E({0, 2, 0, 0, 0}), E({0, 0, 1, 0, 0}), E({0, 0, 0, 1, 0}), E({0, 0, 0, 0, 1})};
        std::vector<BinomialGen> mins;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                Exp a(5), b(5);
                for (int k = 0; k < 5; ++k) {
                    a[k] = top[i][k] + bot[j][k];
                    b[k] = top[j][k] + bot[i][k];
                }
                mins.push_back(BinomialGen::binomial(a, b));
            }
        return equal(I, BinomialIdeal(5, mins));
    });
    add("f1-vertices", "F1 polytope: 4 vertices, x1x2x3 not a vertex", [](std::string&) {
        auto pts = lattice_points_in_fiber(Mat{{1, -1, 1, 0}, {0, 1, 0, 1}}, ivec({1, 1}));
        std::set<IVec> verts;
        for (std::size_t k = 0; k < pts.size(); ++k)
            if (hull_vertex(pts, k)) verts.insert(pts[k]);
        std::set<IVec> want{ivec({0, 0, 1, 1}), ivec({1, 0, 0, 1}), ivec({2, 1, 0, 0}), ivec({0, 1, 2, 0})};
        return pts.size() == 5 && verts == want;
    });
    add("f1-normal-fan", "inner normal fan of the F1 polygon is the F1 fan", [](std::string&) {
        auto f = inner_normal_fan(divisor_polyhedron(fx::f1_rays(), ivec({1, 0, 0, 1})));
        return f == fx::f1_fan();
    });
    add("res13-normal-fan", "normal fan of P for L = O(D0+D3) is the resolution fan", [](std::string&) {
        auto f = inner_normal_fan(divisor_polyhedron(fx::res13_rays(), ivec({1, 0, 0, 1})));
        return f == fx::res13_fan();
    });
    add("f1-sections", "H0(O(D1+D4)) on F1 has the 5 monomials", [](std::string&) {
        auto X = fx::f1_four();
        return sections(X, ivec({0, 0}), ivec({1, 1})).size() == 5;
    });
    add("res13-sections", "sections of L1 are x0 and x2x3^2", [](std::string&) {
        auto X = fx::res13();
        auto s = sections(X, ivec({0, 0}), ivec({1, 0}));
        return sorted(s) == sorted({ivec({1, 0, 0, 0}), ivec({0, 0, 1, 2})});
    });
    add("c311-gens", "1/3(1,1) generators x^3, x^2y, xy^2, y^3", [](std::string&) {
        std::vector<IVec> want{ivec({0, 3}), ivec({1, 2}), ivec({2, 1}), ivec({3, 0})};
        return sorted(invariant_semigroup(parse_type("3,1,1")).gens) == want;
    });
    add("cusp", "cusp semigroup is not normal, witness (2,2)", [](std::string&) {
        GradedSemigroup s;
        s.d = 2;
        s.gens = {ivec({4, 0}), ivec({3, 1}), ivec({1, 3}), ivec({0, 4})};
        auto r = is_normal(s);
        return !r.normal && r.witness && *r.witness == ivec({2, 2});
    });
    add("p123-charts", "P(1,2,3) charts are A^2, 1/2(1,1), 1/3(1,2)", [](std::string&) {
        auto pc = proj_charts(polynomial_ring(Mat{{1, 2, 3}}));
        std::set<std::pair<Int, Int>> t;
        for (auto& c : pc.charts)
            if (c.cyclic_type) t.insert(*c.cyclic_type);
        return pc.charts.size() == 3 && t == std::set<std::pair<Int, Int>>{{1, 0}, {2, 1}, {3, 2}};
    });
    add("f1-chart", "chart at x3x4 has coordinates x1/x3, x2x3/x4", [](std::string&) {
        auto gq = git_quotient_semigroup(polynomial_ring(Mat{{1, -1, 1, 0}, {0, 1, 0, 1}}), ivec({1, 1}), 3);
        auto pc = proj_charts(gq);
        if (pc.charts.size() != 4) return false;
        for (auto& c : pc.charts)
            if (c.vertex == ivec({0, 0, 1, 1, 1}))
                return sorted(c.generators) == sorted({ivec({1, 0, -1, 0, 0}), ivec({0, 1, 1, -1, 0})});
        return false;
    });
    add("p123-degree1", "degree-1 piece for P(1,2,3), chi = 6", [](std::string&) {
        auto gq = git_quotient_semigroup(polynomial_ring(Mat{{1, 2, 3}}), ivec({6}), 1);
        std::vector<IVec> d1;
        for (auto& x : gq.gens)
            if (x[3] == 1) d1.push_back(IVec(x.begin(), x.begin() + 3));
        std::vector<IVec> want{ivec({6, 0, 0}), ivec({4, 1, 0}), ivec({2, 2, 0}), ivec({0, 3, 0}),
                               ivec({3, 0, 1}), ivec({1, 1, 1}), ivec({0, 0, 2})};
        return sorted(d1) == sorted(want);
    });
    add("f1-git-degree1", "F1 GIT degree-1 piece has 5 monomials", [](std::string&) {
        auto gq = git_quotient_semigroup(polynomial_ring(Mat{{1, -1, 1, 0}, {0, 1, 0, 1}}), ivec({1, 1}), 1);
        std::size_t k = 0;
        for (auto& x : gq.gens) k += x[4] == 1;
        return k == 5;
    });
    add("res13-irrelevant", "irrelevant ideal (x0x1, x0x3, x2x3)", [](std::string&) {
        auto c = cox_data(fx::res13_fan(), fx::res13_rays());
        return sorted(c.irrelevant_ideal) == sorted({ivec({1, 1, 0, 0}), ivec({1, 0, 0, 1}), ivec({0, 0, 1, 1})});
    });
    add("f1-smooth", "F1 fan is smooth", [](std::string&) { return is_smooth(fx::f1_fan()); });
    add("p123-simplicial", "P(1,2,3) fan is simplicial, not smooth", [](std::string&) {
        auto f = fx::make_fan({ivec({-2, -3}), ivec({1, 0}), ivec({0, 1})}, {{0, 1}, {1, 2}, {2, 0}});
        return is_simplicial(f) && !is_smooth(f);
    });
    add("three-vertex-incidence", "three-vertex incidence matrix 3x4, circuit rank 2", [](std::string&) {
        auto d = incidence_data(fx::three_vertex_quiver());
        return d.inc == Mat{{-1, 0, -1, -1}, {1, -1, 1, 0}, {0, 1, 0, 1}} && d.circuit_basis.cols == 2;
    });
    add("challenge-circuits", "challenge quiver circuit rank 3", [](std::string&) {
        return incidence_data(fx::challenge_quiver()).circuit_basis.cols == 3;
    });
    add("beilinson-stable", "full Beilinson support is stable for theta_0 < 0 < theta_i", [](std::string&) {
        auto sq = quiver_of_sections(fx::beilinson(2));
        Support s(sq.quiver.na(), true);
        return is_theta_stable(sq.quiver, s, parse_weight("-3,1,2")).verdict == Stability::Stable;
    });
    add("a2-w1-stable", "W1 stable at theta and theta'", [](std::string&) {
        auto q = mckay_quiver(parse_action("3,1,2"));
        Support s(6, false);
        s[arr(q, 0, 0)] = s[arr(q, 1, 0)] = true;
        return is_theta_stable(q.quiver, s, parse_weight("-2,1,1")).verdict == Stability::Stable &&
               is_theta_stable(q.quiver, s, parse_weight("-1,-1,2")).verdict == Stability::Stable;
    });
    add("parallel-trees", "every arrow of the parallel quiver is a spanning tree", [](std::string&) {
        auto B = arborescence_ideal(fx::parallel_quiver(3));
        std::set<IVec> want;
        for (std::size_t a = 0; a < 4; ++a) {
            IVec e(4);
            e[a] = 1;
            want.insert(e);
        }
        return std::set<IVec>(B.begin(), B.end()) == want;
    });
    add("three-vertex-moduli", "moduli of the three-vertex quiver at (-2,1,1) is F1", [](std::string&) {
        auto m = moduli_fan(fx::three_vertex_quiver(), parse_weight("-2,1,1"));
        return m.smooth && fans_iso(m.fan, fx::f1_fan());
    });
    add("challenge-moduli", "moduli of the challenge quiver is the flop threefold", [](std::string&) {
        auto m = moduli_fan(fx::challenge_quiver(), parse_weight("-2,1,1"));
        return m.smooth && fans_iso(m.fan, fx::threefold_fan());
    });
    add("parallel-pm", "parallel arrows give P^m", [](std::string&) {
        for (std::size_t m = 1; m <= 3; ++m)
            if (!fans_iso(moduli_fan(fx::parallel_quiver(m), parse_weight("-1,1")).fan, fx::projective_space_fan(m))) return false;
        return true;
    });
    add("tautological", "tautological classes of the three-vertex quiver", [](std::string&) {
        auto t = tautological_classes(fx::three_vertex_quiver());
        return t.size() == 3 && t[1] == ivec({-1, 1, 0}) && t[2] == ivec({-1, 0, 1});
    });
    add("a2-chambers", "A2 McKay quiver has six GIT chambers", [](std::string& note) {
        auto q = mckay_quiver(parse_action("3,1,2"));
        auto cc = chamber_decomposition(q.quiver, [&](const QVec& th) {
            std::vector<std::vector<std::size_t>> out;
            for (auto& s : fixed_stable_constellations(q, th).found) {
                std::vector<std::size_t> v;
                for (std::size_t a = 0; a < s.size(); ++a)
                    if (s[a]) v.push_back(a);
                out.push_back(v);
            }
            return out;
        });
        note = std::to_string(cc.walls.size()) + " walls";
        return cc.chambers.size() == 6;
    });
    add("v4-flops", "Z/2xZ/2 in SL(3): three walls of C0, each a flop", [](std::string& note) {
        auto q = mckay_quiver(fx::z2z2_sl3());
        QVec c0 = parse_weight("-30,10,10,10");
        bool ok = true;
        for (std::size_t i = 1; i <= 3; ++i) {
            QVec t = c0;
            t[i] = -1;
            t[0] = -19;
            ok = flop_across(q, c0, t, note) && ok;
        }
        return ok;
    });
    add("twisted-cubic", "twisted cubic ideal", [](std::string&) {
        auto I = toric_ideal(Mat{{3, 2, 1, 0}, {0, 1, 2, 3}});
        BinomialIdeal want(4, {bin(4, {1, 3}, {2, 2}), bin(4, {1, 4}, {2, 3}), bin(4, {2, 4}, {3, 3})});
        return equal(I, want);
    });
    add("res13-section-ideal", "section lattice toric ideal (7x6)", [](std::string&) {
        auto sq = quiver_of_sections(fx::res13());
        auto I = toric_ideal(sq.section_map);
        BinomialIdeal want(6, {bin(6, {1, 4}, {2, 5}), bin(6, {3, 6}, {1, 4}), bin(6, {2, 5}, {3, 6})});
        return sq.section_map.rows == 7 && sq.section_map.cols == 6 && equal(I, want);
    });
    add("f1four-saturation", "saturating I_rho by B_Q recovers I_Q", [](std::string&) {
        auto v = image_equals_moduli(quiver_of_sections(fx::f1_four()));
        return v.equal;
    });
    add("f1four-intersection", "I_Q cap (y3,y4,y5) = I_rho", [](std::string&) {
        auto v = image_equals_moduli(quiver_of_sections(fx::f1_four()));
        BinomialIdeal m(7, {BinomialGen::monomial(E({0, 0, 1, 0, 0, 0, 0})), BinomialGen::monomial(E({0, 0, 0, 1, 0, 0, 0})),
                            BinomialGen::monomial(E({0, 0, 0, 0, 1, 0, 0}))});
        return equal(intersect(v.IQ, m), v.Irho);
    });
    add("f1four-ideals", "I_Q has the stated generators and differs from I_rho", [](std::string&) {
        auto v = image_equals_moduli(quiver_of_sections(fx::f1_four()));
        BinomialIdeal want(7, {bin(7, {3, 6}, {1, 5}), bin(7, {3, 7}, {2, 5}), bin(7, {2, 6}, {1, 7})});
        return equal(v.IQ, want) && !equal(v.IQ, v.Irho);
    });
    add("c712-census", "I_rho for 1/7(1,2) has 8 minimal components", [](std::string& note) {
        auto q = mckay_quiver(parse_action("7,1,2"));
        auto c = component_census(relation_ideal(q));
        note = std::to_string(c.components.size()) + " components";
        return c.complete && c.components.size() == 8;
    });
    add("a2-bound-quiver", "bound McKay quiver of 1/3(1,2)", [](std::string&) {
        auto q = mckay_quiver(parse_action("3,1,2"));
        // a1..a6: 0->1 x, 0->2 y, 1->2 x, 1->0 y, 2->0 x, 2->1 y
        std::vector<std::size_t> a{arr(q, 0, 0), arr(q, 0, 1), arr(q, 1, 0), arr(q, 1, 1), arr(q, 2, 0), arr(q, 2, 1)};
        std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> want{
            {{a[0], a[3]}, {a[1], a[4]}}, {{a[2], a[5]}, {a[3], a[0]}}, {{a[4], a[1]}, {a[5], a[2]}}};
        std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> got(q.relations.begin(), q.relations.end());
        return q.quiver.nv == 3 && q.quiver.na() == 6 && got == want;
    });
    add("cyclic-beilinson", "1/3(1,1,1) McKay quiver is the cyclic Beilinson quiver", [](std::string&) {
        auto q = mckay_quiver(parse_action("3,1,1,1"));
        for (auto& a : q.quiver.arrows)
            if (a.head != (a.tail + 1) % 3) return false;
        return q.quiver.na() == 9;
    });
    add("z2cubed-clusters", "(Z/2)^3 in SL(4) has 12 torus-fixed G-clusters", [](std::string&) {
        return fixed_g_clusters(fx::z2cubed_sl4()).size() == 12;
    });
    add("a2-clusters", "clusters {1,x,x^2} and {1,x,y} give W1 and W2", [](std::string&) {
        auto q = mckay_quiver(parse_action("3,1,2"));
        auto cl = fixed_g_clusters(q.action);
        if (cl.size() != 3) return false;
        auto w1 = cluster_to_rep(cl[0], q), w2 = cluster_to_rep(cl[1], q);
        return same_supports(q, {w1}, {sup({arr(q, 0, 0), arr(q, 1, 0)})}) &&
               same_supports(q, {w2}, {sup({arr(q, 0, 0), arr(q, 0, 1)})});
    });
    add("a2-constellations", "stable constellations at (-2,1,1) are W1, W2, W3", [](std::string&) {
        auto q = mckay_quiver(parse_action("3,1,2"));
        auto r = fixed_stable_constellations(q, parse_weight("-2,1,1"));
        return same_supports(q, r.found, {sup({arr(q, 0, 0), arr(q, 1, 0)}), sup({arr(q, 0, 0), arr(q, 0, 1)}),
                                          sup({arr(q, 0, 1), arr(q, 2, 1)})});
    });
    add("a2-constellations-c2", "stable constellations in C' are W1, W2', W3'", [](std::string&) {
        auto q = mckay_quiver(parse_action("3,1,2"));
        auto r = fixed_stable_constellations(q, parse_weight("-1,-1,2"));
        return same_supports(q, r.found, {sup({arr(q, 0, 0), arr(q, 1, 0)}), sup({arr(q, 0, 1), arr(q, 1, 0)}),
                                          sup({arr(q, 0, 1), arr(q, 1, 1)})});
    });
    add("z2cubed-walls", "(Z/2)^3: crossing each W_i keeps 4, loses 8, gains 4", [](std::string& note) {
        auto q = mckay_quiver(fx::z2cubed_sl4());
        QVec c0(8, Rat(10));
        c0[0] = -70;
        bool ok = true;
        for (std::size_t rho : {3, 5, 6}) {
            QVec t = c0;
            t[rho] = -1;
            t[0] = -59;
            auto w = wall_report(q, c0, t);
            note += std::to_string(w.kept.size()) + "/" + std::to_string(w.lost.size()) + "/" + std::to_string(w.gained.size()) + " ";
            ok = ok && w.kept.size() == 4 && w.lost.size() == 8 && w.gained.size() == 4;
        }
        return ok;
    });
    add("a2-cmt-ideal", "CMT map toric ideal for 1/3(1,2)", [](std::string&) {
        auto q = mckay_quiver(parse_action("3,1,2"));
        // a1..a6 as 1-based McKay arrow indices
        std::vector<std::size_t> m{arr(q, 0, 0) + 1, arr(q, 0, 1) + 1, arr(q, 1, 0) + 1, arr(q, 1, 1) + 1, arr(q, 2, 0) + 1, arr(q, 2, 1) + 1};
        BinomialIdeal want(6, {bin(6, {m[0], m[3]}, {m[1], m[4]}), bin(6, {m[2], m[5]}, {m[0], m[3]}),
                               bin(6, {m[1], m[4]}, {m[2], m[5]})});
        return equal(toric_ideal(cmt_lattice_map(q)), want);
    });
    add("a2-coherent-fan", "coherent component fan is the resolution fan", [](std::string&) {
        auto q = mckay_quiver(parse_action("3,1,2"));
        auto f = coherent_component_fan(q, parse_weight("-2,1,1"));
        return f.smooth && fans_iso(f.fan, fx::res13_fan());
    });
    add("v4-ghilb-fan", "G-Hilb fan of Z/2xZ/2 in SL(3)", [](std::string&) {
        auto q = mckay_quiver(fx::z2z2_sl3());
        auto f = coherent_component_fan(q, parse_weight("-3,1,1,1"));
        return f.smooth && f.fan == g_hilb_v4_expected(invariant_lattice(q.action));
    });
    add("a2-wall", "wall C -> C': lost W2, W3; gained W2', W3'; fan kept", [](std::string&) {
        auto q = mckay_quiver(parse_action("3,1,2"));
        auto w = wall_report(q, parse_weight("-2,1,1"), parse_weight("-1,-1,2"));
        return w.kept.size() == 1 && w.lost.size() == 2 && w.gained.size() == 2 && w.fans_equal &&
               same_supports(q, w.kept, {sup({arr(q, 0, 0), arr(q, 1, 0)})});
    });
    add("z2cubed-contraction", "(Z/2)^3: fan across W_i contracts E", [](std::string& note) {
        auto q = mckay_quiver(fx::z2cubed_sl4());
        QVec c0(8, Rat(10));
        c0[0] = -70;
        auto Y = coherent_component_fan(q, c0);
        bool ok = Y.fan.cones.size() == 12;
        std::set<std::vector<Cone>> tri;
        for (std::size_t rho : {3, 5, 6}) {
            QVec t = c0;
            t[rho] = -1;
            t[0] = -59;
            auto Yi = coherent_component_fan(q, t);
            auto r = Y.fan.rays(), ri = Yi.fan.rays();
            std::vector<IVec> gone;
            std::set_difference(r.begin(), r.end(), ri.begin(), ri.end(), std::back_inserter(gone));
            ok = ok && Yi.smooth && Yi.fan.cones.size() == 8 && gone.size() == 1 && std::includes(r.begin(), r.end(), ri.begin(), ri.end());
            tri.insert(Yi.fan.cones);
        }
        note = std::to_string(Y.fan.rays().size()) + " rays on Y";
        return ok && tri.size() == 3;
    });
    add("res13-indecomposable", "indecomposable sections of L1: only x0", [](std::string&) {
        auto s = indecomposable_sections(fx::res13(), 0, 1);
        return s == std::vector<IVec>{ivec({1, 0, 0, 0})};
    });
    add("f1four-quiver", "F1 four-bundle quiver: 7 arrows with the expected labels", [](std::string&) {
        auto sq = quiver_of_sections(fx::f1_four());
        std::multiset<std::tuple<std::size_t, std::size_t, IVec>> want{
            {0, 1, div_of(4, {1}, 1)}, {0, 1, div_of(4, {3}, 1)}, {0, 2, div_of(4, {4}, 1)}, {1, 2, div_of(4, {2}, 1)},
            {1, 3, div_of(4, {4}, 1)}, {2, 3, div_of(4, {1}, 1)}, {2, 3, div_of(4, {3}, 1)}};
        return arrow_set(sq.quiver) == want;
    });
    add("beilinson-quiver", "P^2 with (O,O(1),O(2)) is the bound Beilinson quiver", [](std::string&) {
        auto sq = quiver_of_sections(fx::beilinson(2));
        std::size_t s01 = 0, s12 = 0;
        for (auto& a : sq.quiver.arrows) (a.tail == 0 && a.head == 1 ? s01 : s12) += 1;
        return s01 == 3 && s12 == 3 && sq.relations.size() == 3;
    });
    add("res13-quiver", "quiver of sections of the resolution has the expected arrows and relations", [](std::string&) {
        auto sq = quiver_of_sections(fx::res13());
        std::multiset<std::tuple<std::size_t, std::size_t, IVec>> want{
            {0, 1, div_of(4, {0}, 0)}, {0, 2, div_of(4, {3}, 0)}, {1, 2, div_of(4, {0, 1}, 0)},
            {1, 0, div_of(4, {1, 2, 3}, 0)}, {2, 0, div_of(4, {0, 1, 2}, 0)}, {2, 1, div_of(4, {2, 3}, 0)}};
        std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> rel(sq.relations.begin(), sq.relations.end()),
            wr{{{0, 3}, {1, 4}}, {{2, 5}, {3, 0}}, {{4, 1}, {5, 2}}};
        return arrow_set(sq.quiver) == want && rel == wr;
    });
    add("del-pezzo-quiver", "del Pezzo six-bundle quiver has the expected 12 arrows", [](std::string& note) {
        auto sq = quiver_of_sections(fx::del_pezzo());
        // the drawing swaps vertices 4 and 5 relative to the listed arrows
        std::multiset<std::tuple<std::size_t, std::size_t, IVec>> want{
            {0, 1, div_of(6, {1, 2}, 1)}, {0, 1, div_of(6, {4, 5}, 1)}, {0, 2, div_of(6, {3, 4}, 1)},
            {0, 2, div_of(6, {1, 6}, 1)}, {0, 3, div_of(6, {5, 6}, 1)}, {0, 3, div_of(6, {2, 3}, 1)},
            {1, 5, div_of(6, {6}, 1)}, {1, 4, div_of(6, {3}, 1)}, {2, 5, div_of(6, {2}, 1)},
            {2, 4, div_of(6, {5}, 1)}, {3, 5, div_of(6, {4}, 1)}, {3, 4, div_of(6, {1}, 1)}};
        note = "vertices 4,5 swapped vs drawing";
        return arrow_set(sq.quiver) == want;
    });
    add("p2-series", "(O, O(1)) on P^2 gives the P^2 fan", [](std::string&) {
        auto cox = cox_data(fx::projective_space_fan(2));
        auto X = polarize(cox, {ivec({0}), ivec({1})});
        auto m = multilinear_series_fan(quiver_of_sections(X), parse_weight("-1,1"));
        return fans_iso(m.fan, fx::projective_space_fan(2));
    });
    add("f1-three-bundles", "(O, O(D1), O(D4)) on F1 gives the three-vertex quiver and F1", [](std::string&) {
        auto cox = cox_data(fx::f1_fan(), fx::f1_rays());
        auto X = polarize(cox, {ivec({0, 0}), ivec({1, 0}), ivec({0, 1})}, std::vector<std::size_t>{0, 3});
        auto sq = quiver_of_sections(X);
        std::multiset<std::pair<std::size_t, std::size_t>> shape, want{{0, 1}, {0, 1}, {1, 2}, {0, 2}};
        for (auto& a : sq.quiver.arrows) shape.insert({a.tail, a.head});
        return shape == want && fans_iso(multilinear_series_fan(sq, parse_weight("-2,1,1")).fan, fx::f1_fan());
    });
    add("threefold-series", "(O, O(0,1), O(1,0)) gives X back", [](std::string&) {
        auto sq = quiver_of_sections(fx::threefold());
        return sq.quiver.na() == 5 && fans_iso(multilinear_series_fan(sq, parse_weight("-2,1,1")).fan, fx::threefold_fan());
    });
    add("f1four-image", "image test: equal, 3 generators of I_Q", [](std::string&) {
        auto v = image_equals_moduli(quiver_of_sections(fx::f1_four()));
        return v.equal && v.IQ.gb().size() == 3;
    });
    add("res13-image", "image test on the resolution: I_Q = I_rho", [](std::string&) {
        auto v = image_equals_moduli(quiver_of_sections(fx::res13()));
        return v.equal && equal(v.IQ, v.Irho);
    });
    add("res13-mult", "multiplication H0(L1) x H0(L2) -> H0(L1+L2) is onto", [](std::string&) {
        return multiplication_surjective(fx::res13(), {ivec({1, 0}), ivec({0, 1})});
    });
    return g;
}

} // namespace tq
