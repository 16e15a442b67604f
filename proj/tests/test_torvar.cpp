#include "common.hpp"

#include <numeric>

using namespace tq;
using namespace tq::test;

namespace {

// irreducible elements of {u in N^n : sum a_i u_i = 0 mod r}, u in [0,r]^n
std::vector<IVec> brute_invariants(long r, const std::vector<long>& a) {
    std::size_t n = a.size();
    std::vector<IVec> pts;
    for (auto& v : box(n, 0, r)) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += v[i] * a[i];
        if (!is_zero(v) && s % r == 0) pts.push_back(v);
    }
    std::vector<IVec> out;
    for (auto& v : pts) {
        bool red = false;
        for (auto& w : pts) {
            auto d = sub(v, w);
            bool nonneg = std::all_of(d.begin(), d.end(), [](const Int& x) { return x >= 0; });
            if (nonneg && !is_zero(d)) {
                red = true;
                break;
            }
        }
        if (!red) out.push_back(v);
    }
    return sort_unique(out);
}

std::string type_string(long r, const std::vector<long>& a) {
    std::string s = std::to_string(r);
    for (auto x : a) s += "," + std::to_string(x);
    return s;
}

} // namespace

TEST_SUITE("torvar") {

TEST_CASE("invariant semigroup matches the brute-force irreducibles") {
    for (long r = 2; r <= 9; ++r)
        for (long a = 0; a < r; ++a) {
            std::vector<long> w{1, a};
            CHECK(sort_unique(invariant_semigroup(parse_type(type_string(r, w))).gens) == brute_invariants(r, w));
        }
    for (int t = 0; t < 10; ++t) {
        long r = rnd(2, 5);
        std::vector<long> w{rnd(0, r - 1), rnd(0, r - 1), rnd(0, r - 1)};
        CHECK(sort_unique(invariant_semigroup(parse_type(type_string(r, w))).gens) == brute_invariants(r, w));
    }
}

TEST_CASE("Jung-Hirzebruch generators equal the invariant semigroup") {
    for (long r = 2; r <= 17; ++r)
        for (long a = 1; a < r; ++a) {
            if (std::gcd(r, a) != 1) continue;
            auto jh = jung_hirzebruch(r, a);
            CHECK(sort_unique(jh.generators) == sort_unique(invariant_semigroup(parse_type(type_string(r, {1, a}))).gens));
            for (auto& b : jh.coefficients) CHECK(b >= 2);
        }
}

TEST_CASE("invariant semigroups of cyclic groups are normal") {
    for (long r = 2; r <= 7; ++r) CHECK(is_normal(invariant_semigroup(parse_type(type_string(r, {1, r - 1})))).normal);
}

TEST_CASE("malformed types are rejected") {
    CHECK_THROWS_AS(parse_type("0,1"), ValidationError);
    CHECK_THROWS_AS(parse_type("3,4"), ValidationError);
    CHECK_THROWS_AS(parse_type("x"), ValidationError);
}

TEST_CASE("Cox data: class map kills M, one irrelevant monomial per cone") {
    for (auto& [f, r] : std::vector<std::pair<Fan, std::vector<IVec>>>{
             {fixtures::f1_fan(), fixtures::f1_rays()}, {fixtures::res13_fan(), fixtures::res13_rays()},
             {fixtures::threefold_fan(), fixtures::threefold_rays()}, {fixtures::hexagon_fan(), fixtures::hexagon_rays()}}) {
        auto c = cox_data(f, r);
        CHECK((c.deg.projection * c.div).is_zero());
        CHECK(c.irrelevant_ideal.size() == f.cones.size());
        CHECK(c.deg.free_rank == r.size() - f.dim);
        for (std::size_t k = 0; k < f.cones.size(); ++k) {
            Int zeros = 0;
            for (auto& x : c.irrelevant_ideal[k]) zeros += x == 0;
            CHECK(zeros == Int(static_cast<long>(f.cones[k].rays.size())));
        }
    }
}

TEST_CASE("cyclic type of a 2-cone") {
    CHECK(cyclic_type_of_cone(ivec({1, 0}), ivec({1, 3})) == std::pair<Int, Int>{3, 2});
    CHECK(cyclic_type_of_cone(ivec({1, 0}), ivec({0, 1})).first == 1);
}

TEST_CASE("P^n charts are affine spaces") {
    for (long n = 1; n <= 3; ++n) {
        GradedSemigroup s;
        s.d = n + 1;
        for (long i = 0; i <= n; ++i) {
            IVec e(n + 1);
            e[i] = 1;
            s.gens.push_back(e);
        }
        s.grading = Mat(1, n + 1);
        for (long i = 0; i <= n; ++i) s.grading(0, i) = 1;
        auto pc = proj_charts(s);
        CHECK(pc.charts.size() == static_cast<std::size_t>(n + 1));
        for (auto& c : pc.charts) {
            CHECK(c.normal);
            CHECK(c.generators.size() == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("charts glue: localizations along shared faces agree") {
    auto ring = [](Mat g) {
        GradedSemigroup s;
        s.d = g.cols;
        for (std::size_t i = 0; i < s.d; ++i) {
            IVec e(s.d);
            e[i] = 1;
            s.gens.push_back(e);
        }
        s.grading = g;
        return s;
    };
    std::vector<ProjCharts> all{proj_charts(ring(Mat{{1, 2, 3}})), proj_charts(ring(Mat{{1, 1, 2}})),
                                proj_charts(git_quotient_semigroup(ring(Mat{{1, -1, 1, 0}, {0, 1, 0, 1}}), ivec({1, 1}), 3))};
    // g lies in S + N(-s) iff g + k s lies in S for some k
    auto in_loc = [](const std::vector<IVec>& S, const IVec& s, const IVec& g) {
        for (long k = 0; k <= 12; ++k)
            if (in_semigroup(S, add(g, scale(Int(k), s)))) return true;
        return false;
    };
    for (auto& pc : all)
        for (auto& a : pc.charts)
            for (auto& b : pc.charts) {
                if (&a == &b) continue;
                auto s = sub(b.vertex, a.vertex); // in S_a, inverted on the overlap
                auto t = sub(a.vertex, b.vertex);
                CHECK(in_semigroup(a.generators, s));
                for (auto& g : a.generators) CHECK(in_loc(b.generators, t, g));
                for (auto& g : b.generators) CHECK(in_loc(a.generators, s, g));
            }
}

TEST_CASE("GIT quotient by the trivial character is the degree-0 semigroup") {
    for (int t = 0; t < 10; ++t) {
        Mat g(1, 3);
        g(0, 0) = rnd(1, 3);
        g(0, 1) = -rnd(1, 3);
        g(0, 2) = rnd(-3, 3);
        GradedSemigroup s;
        s.d = 3;
        for (std::size_t i = 0; i < 3; ++i) {
            IVec e(3);
            e[i] = 1;
            s.gens.push_back(e);
        }
        s.grading = g;
        auto q = git_quotient_semigroup(s, ivec({0}), 2);
        std::vector<IVec> deg0;
        for (auto& x : q.gens)
            if (x[3] == 0) deg0.push_back(IVec(x.begin(), x.begin() + 3));
        // brute force: irreducible nonzero u >= 0 with g.u = 0
        std::vector<IVec> pts;
        for (auto& u : box(3, 0, 6))
            if (!is_zero(u) && dot(g.row(0), u) == 0) pts.push_back(u);
        std::vector<IVec> irr;
        for (auto& u : pts) {
            bool red = false;
            for (auto& w : pts) {
                auto d = sub(u, w);
                if (!is_zero(d) && std::all_of(d.begin(), d.end(), [](const Int& x) { return x >= 0; })) red = true;
            }
            if (!red) irr.push_back(u);
        }
        CHECK(sort_unique(deg0) == sort_unique(irr));
    }
}

}
