// One PASS/FAIL line per acceptance criterion, with wall-clock limits.
#include "toricq/binom.hpp"
#include "toricq/fixtures.hpp"
#include "toricq/golden.hpp"
#include "toricq/mckay.hpp"
#include "toricq/qsec.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>

using namespace tq;
namespace fx = tq::fixtures;

namespace {

std::map<std::string, GoldenCase> by_slug() {
    std::map<std::string, GoldenCase> m;
    for (auto& c : golden_cases()) m.emplace(c.label, c);
    return m;
}

bool run_slugs(const std::vector<std::string>& slugs, std::string& note) {
    static auto cases = by_slug();
    bool ok = true;
    for (auto& s : slugs) {
        auto it = cases.find(s);
        std::string n;
        bool r = it != cases.end() && it->second.check(n);
        if (!r) note += s + " failed; ";
        ok = ok && r;
    }
    return ok;
}

// criterion 1: semigroup of 1/3(1,1) fed straight into toric_ideal
bool twisted_cubic(std::string& note) {
    auto s = invariant_semigroup(parse_type("3,1,1"));
    auto g = s.gens; // (0,3),(1,2),(2,1),(3,0)
    std::sort(g.begin(), g.end(), [](auto& a, auto& b) { return a > b; });
    auto I = toric_ideal(Mat::from_cols(g, 2));
    auto b = [](Exp p, Exp m) { return BinomialGen::binomial(p, m); };
    BinomialIdeal want(4, {b({1, 0, 1, 0}, {0, 2, 0, 0}), b({1, 0, 0, 1}, {0, 1, 1, 0}), b({0, 1, 0, 1}, {0, 0, 2, 0})});
    bool ok = g.size() == 4 && equal(I, want) && I.gb().size() == 3;
    if (!ok) note += "twisted cubic ideal differs; ";
    return ok;
}

// criterion 11, fan part. E is the only discrepant divisor of Y; each Y_i drops its ray
// and keeps every other ray, all of age one.
bool z2cubed_fans(std::string& note) {
    auto q = mckay_quiver(fx::z2cubed_sl4());
    auto B = invariant_lattice(q.action);
    // age is pairing with the invariant monomial xyzw, written in the rows of B
    auto c = solve_rational(B.transpose(), to_q(ivec({1, 1, 1, 1})));
    if (!c) {
        note += "xyzw not invariant; ";
        return false;
    }
    auto age = [&](const IVec& r) { return dot(r, *c); };
    QVec c0(8, Rat(10));
    c0[0] = -70;
    auto Y = coherent_component_fan(q, c0);
    auto rays = Y.fan.rays();
    std::vector<IVec> discrepant;
    for (auto& r : rays)
        if (age(r) != 1) discrepant.push_back(r);
    bool ok = Y.smooth && Y.fan.cones.size() == 12 && discrepant.size() == 1 && age(discrepant[0]) == 2;
    std::set<std::vector<Cone>> tri;
    for (std::size_t rho : {3, 5, 6}) {
        QVec t = c0;
        t[rho] = -1;
        t[0] = -59;
        auto Yi = coherent_component_fan(q, t);
        auto ri = Yi.fan.rays();
        std::vector<IVec> expect;
        for (auto& r : rays)
            if (discrepant.empty() || r != discrepant[0]) expect.push_back(r);
        bool crepant = std::all_of(ri.begin(), ri.end(), [&](const IVec& r) { return age(r) == 1; });
        bool step = Yi.smooth && crepant && ri == expect && Yi.fan.cones != Y.fan.cones;
        if (!step) note += "wall at character " + std::to_string(rho) + " fan mismatch; ";
        ok = ok && step;
        tri.insert(Yi.fan.cones);
    }
    note += "Y " + std::to_string(rays.size()) + " rays/" + std::to_string(Y.fan.cones.size()) + " cones, E ray removed on each Y_i; ";
    return ok && tri.size() == 3;
}

// criterion 12: compact versions of the property suites
bool properties(std::string& note) {
    std::mt19937 g(7);
    auto rnd = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); };
    auto rmat = [&](std::size_t r, std::size_t c, long lo, long hi) {
        Mat m(r, c);
        for (auto& x : m.a) x = rnd(lo, hi);
        return m;
    };
    bool ok = true;
    auto fail = [&](const char* what) {
        ok = false;
        note += std::string(what) + "; ";
    };
    for (int t = 0; t < 50; ++t) {
        auto A = rmat(rnd(1, 4), rnd(1, 4), -9, 9);
        auto h = hermite_normal_form(A);
        if (!(h.U * A == h.H) || abs(det(h.U)) != 1) fail("HNF identity");
        auto s = smith_normal_form(A);
        Mat D(A.rows, A.cols);
        for (std::size_t i = 0; i < s.d.size(); ++i) D(i, i) = s.d[i];
        if (!(s.left * A * s.right == D)) fail("SNF identity");
        for (std::size_t i = 0; i + 1 < s.d.size(); ++i)
            if (s.d[i + 1] % s.d[i] != 0) fail("SNF divisibility");
    }
    for (int t = 0; t < 30; ++t) {
        std::vector<IVec> gens;
        for (int k = 0; k < rnd(1, 4); ++k) gens.push_back(IVec{rnd(-3, 3), rnd(-3, 3), rnd(-3, 3)});
        auto c = Cone::from_generators(3, gens);
        if (!(dual_cone(dual_cone(c)) == c)) fail("dual involution");
        if (!c.strongly_convex()) continue;
        auto hb = hilbert_basis(c);
        for (std::size_t i = 0; i < hb.size(); ++i) {
            auto others = hb;
            others.erase(others.begin() + i);
            if (in_semigroup(others, hb[i])) fail("Hilbert basis not minimal");
        }
        for (long x = -2; x <= 2; ++x)
            for (long y = -2; y <= 2; ++y)
                for (long z = -2; z <= 2; ++z) {
                    IVec v{x, y, z};
                    if (c.contains(v) && !in_semigroup(hb, v)) fail("Hilbert basis misses a box point");
                }
    }
    std::vector<Fan> emitted;
    emitted.push_back(moduli_fan(fx::three_vertex_quiver(), parse_weight("-2,1,1")).fan);
    emitted.push_back(moduli_fan(fx::challenge_quiver(), parse_weight("-2,1,1")).fan);
    for (std::string t : {"3,1,2", "5,1,2", "2,1,1,0;2,0,1,1"}) {
        auto q = mckay_quiver(parse_action(t));
        QVec th(q.quiver.nv, Rat(1));
        th[0] = -Rat(static_cast<long>(q.quiver.nv) - 1);
        emitted.push_back(coherent_component_fan(q, th).fan);
    }
    for (auto& X : {fx::f1_four(), fx::res13(), fx::threefold(), fx::del_pezzo()}) {
        auto sq = quiver_of_sections(X);
        if (!contains(toric_ideal(sq.section_map), relation_ideal(sq))) fail("I_rho not inside I_Q");
        QVec th(sq.quiver.nv, Rat(1));
        th[0] = -Rat(static_cast<long>(sq.quiver.nv) - 1);
        try {
            emitted.push_back(multilinear_series_fan(sq, th).fan);
        } catch (const ValidationError&) {
        }
    }
    for (auto& f : emitted)
        if (!fan_is_valid(f)) fail("emitted fan not face-compatible");
    int pairs = 0;
    while (pairs < 100) {
        auto A = rmat(2, 5, 0, 3);
        for (std::size_t j = 0; j < 5; ++j) A(0, j) += 1;
        auto K = kernel_basis(A);
        auto I = toric_ideal(A);
        if (!certify_groebner(I.gb(), I.order)) fail("S-pair does not reduce to zero");
        std::vector<BinomialGen> gens;
        for (auto& b : I.gb()) gens.push_back(BinomialGen::binomial(b.lead, b.tail));
        if (!(groebner_basis(5, gens, I.order) == I.gb())) fail("Groebner basis not idempotent");
        Exp m(5);
        m[static_cast<std::size_t>(rnd(0, 4))] = 1;
        if (!equal(saturate(I, m), I)) fail("toric ideal not saturated");
        for (int k = 0; k < 10; ++k, ++pairs) {
            IVec u(5);
            for (std::size_t c = 0; c < K.cols; ++c) u = add(u, scale(rnd(-2, 2), K.col(c)));
            Exp p(5), q(5);
            for (std::size_t i = 0; i < 5; ++i) {
                if (u[i] > 0) p[i] = static_cast<int>(u[i].get_si());
                if (u[i] < 0) q[i] = static_cast<int>(-u[i].get_si());
            }
            if (!member(I, BinomialGen::binomial(p, q))) fail("kernel pair not in toric ideal");
        }
    }
    for (int t = 0; t < 20; ++t) {
        auto I = BinomialIdeal(4, {BinomialGen::binomial(Exp{static_cast<int>(rnd(0, 2)), 1, 0, static_cast<int>(rnd(0, 1))},
                                                         Exp{0, 0, static_cast<int>(rnd(1, 2)), 1})});
        Exp m{1, 0, 0, 1};
        auto S = saturate(I, m);
        if (!equal(saturate(S, m), S)) fail("saturation not idempotent");
    }
    auto q = fx::challenge_quiver();
    for (int t = 0; t < 50; ++t) {
        Support s(q.na());
        for (std::size_t a = 0; a < q.na(); ++a) s[a] = rnd(0, 1);
        QVec th{0, Rat(rnd(-5, 5)), Rat(rnd(-5, 5))};
        th[0] = -th[1] - th[2];
        auto v = is_theta_stable(q, s, th).verdict;
        for (long k : {2, 5}) {
            QVec t2 = th;
            for (auto& x : t2) x *= k;
            if (is_theta_stable(q, s, t2).verdict != v) fail("stability not scale invariant");
        }
    }
    return ok;
}

struct Criterion {
    int id;
    std::string name;
    double limit_ms;
    std::function<bool(std::string&)> check;
};

} // namespace

int main() {
    auto slugs = [](std::vector<std::string> s) { return [s](std::string& n) { return run_slugs(s, n); }; };
    std::vector<Criterion> cs{
        {1, "twisted cubic", 1000, [](std::string& n) { return run_slugs({"c311-gens", "twisted-cubic"}, n) && twisted_cubic(n); }},
        {2, "1/7(1,4) semigroup, minors, Jung-Hirzebruch", 1000, slugs({"c714-gens", "c714-ideal"})},
        {3, "P(1,2,3) degree-1 piece and charts", 1000, slugs({"p123-degree1", "p123-charts"})},
        {4, "F1 polytope, normal fan, chart", 2000, slugs({"f1-vertices", "f1-normal-fan", "f1-chart"})},
        {5, "cusp nonnormality witness", 1000, slugs({"cusp"})},
        {6, "quiver moduli: F1, flop threefold, P^m", 5000, slugs({"three-vertex-moduli", "challenge-moduli", "parallel-pm"})},
        {7, "F1 four-bundle ideals", 10000, slugs({"f1four-ideals", "f1four-intersection", "f1four-saturation", "f1four-image"})},
        {8, "1/3(1,2) G-Hilb via sections", 10000,
         slugs({"res13-quiver", "res13-mult", "res13-image", "res13-section-ideal", "a2-cmt-ideal", "a2-coherent-fan"})},
        {9, "A2 chambers, constellations, wall", 10000,
         slugs({"a2-chambers", "a2-constellations", "a2-constellations-c2", "a2-wall"})},
        {10, "1/7(1,2) census", 600000, slugs({"c712-census"})},
        {11, "(Z/2)^3 clusters, walls, contraction", 300000,
         [](std::string& n) { return run_slugs({"z2cubed-clusters", "z2cubed-walls"}, n) && z2cubed_fans(n); }},
        {12, "property suites", 120000, properties},
    };
    int failed = 0;
    for (auto& c : cs) {
        std::string note;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.check(note);
        } catch (const std::exception& e) {
            note += std::string("threw: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = ms <= c.limit_ms;
        if (!in_time) note += "over time limit; ";
        ok = ok && in_time;
        failed += !ok;
        std::printf("%s %2d %-46s %10.1f ms (limit %.0f ms)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), ms, c.limit_ms,
                    note.empty() ? "" : "  ", note.c_str());
    }
    return failed ? 1 : 0;
}
