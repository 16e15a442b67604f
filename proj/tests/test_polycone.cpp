#include "common.hpp"
#include "toricq/lp.hpp"

using namespace tq;
using namespace tq::test;

namespace {

// irreducible lattice points of a 2-cone inside a box: the brute-force Hilbert basis
std::vector<IVec> brute_hilbert(const Cone& c, long B) {
    std::vector<IVec> pts;
    for (auto& v : box(c.dim, -B, B))
        if (!is_zero(v) && c.contains(v)) pts.push_back(v);
    std::vector<IVec> out;
    for (auto& v : pts) {
        bool red = false;
        for (auto& w : pts) {
            auto d = sub(v, w);
            if (!is_zero(d) && c.contains(d) && !is_zero(w)) {
                red = true;
                break;
            }
        }
        if (!red) out.push_back(v);
    }
    return sort_unique(out);
}

Cone random_cone(std::size_t d, std::size_t k) {
    std::vector<IVec> g;
    for (std::size_t i = 0; i < k; ++i) g.push_back(random_vec(d, -3, 3));
    return Cone::from_generators(d, g);
}

} // namespace

TEST_SUITE("polycone") {

TEST_CASE("dual cone is an involution") {
    for (int t = 0; t < 50; ++t) {
        auto c = random_cone(rnd(2, 4), rnd(1, 5));
        CHECK(dual_cone(dual_cone(c)) == c);
    }
}

TEST_CASE("dual cone pairs nonnegatively with the cone") {
    for (int t = 0; t < 30; ++t) {
        auto c = random_cone(3, rnd(2, 5));
        auto d = dual_cone(c);
        for (auto& u : d.generators())
            for (auto& v : c.generators()) CHECK(dot(u, v) >= 0);
    }
}

TEST_CASE("Hilbert basis of 2-cones matches the irreducibles") {
    for (int t = 0; t < 40; ++t) {
        IVec a = random_vec(2, -5, 5), b = random_vec(2, -5, 5);
        if (is_zero(a) || is_zero(b)) continue;
        auto c = Cone::from_generators(2, {a, b});
        if (!c.strongly_convex()) continue;
        CHECK(sort_unique(hilbert_basis(c)) == brute_hilbert(c, 6));
    }
}

TEST_CASE("Hilbert basis is minimal and generates the cone points in a box") {
    for (int t = 0; t < 15; ++t) {
        auto c = random_cone(3, rnd(2, 4));
        if (!c.strongly_convex()) continue;
        auto hb = hilbert_basis(c);
        for (std::size_t i = 0; i < hb.size(); ++i) {
            auto others = hb;
            others.erase(others.begin() + i);
            CHECK(!in_semigroup(others, hb[i]));
        }
        for (auto& v : box(3, -5, 5))
            if (c.contains(v)) CHECK(in_semigroup(hb, v));
    }
}

TEST_CASE("lattice points in a fiber agree with a box search") {
    for (int t = 0; t < 30; ++t) {
        auto A = random_mat(2, 4, 0, 3);
        for (std::size_t j = 0; j < 4; ++j) A(0, j) += 1; // bounded
        auto b = random_vec(2, 0, 6);
        std::vector<IVec> want;
        for (auto& x : box(4, 0, 6))
            if (A * x == b) want.push_back(x);
        CHECK(sort_unique(lattice_points_in_fiber(A, b)) == sort_unique(want));
    }
}

TEST_CASE("built-in fans are valid") {
    for (auto& f : {fixtures::f1_fan(), fixtures::res13_fan(), fixtures::threefold_fan(), fixtures::hexagon_fan(),
                    fixtures::projective_space_fan(3)}) {
        std::string why;
        CHECK_MESSAGE(fan_is_valid(f, &why), why);
    }
}

TEST_CASE("overlapping cones are rejected") {
    Fan f;
    f.dim = 2;
    f.cones = {Cone::from_generators(2, {ivec({1, 0}), ivec({0, 1})}), Cone::from_generators(2, {ivec({0, 1}), ivec({1, 1})})};
    CHECK(!fan_is_valid(f));
    CHECK_THROWS_AS(validate_fan(f), ComputeError);
    CHECK_THROWS_AS(fixtures::make_fan({ivec({1, 0}), ivec({0, 1}), ivec({1, 1})}, {{0, 1}, {1, 2}}), ComputeError);
}

TEST_CASE("normal fans of random lattice polygons are complete and valid") {
    for (int t = 0; t < 20; ++t) {
        RationalPolyhedron p;
        p.dim = 2;
        for (auto& r : fixtures::hexagon_rays()) p.ineqs.push_back({r, rnd(1, 4)});
        auto f = inner_normal_fan(p);
        std::string why;
        CHECK_MESSAGE(fan_is_valid(f, &why), why);
    }
}

TEST_CASE("fan isomorphism finds the F1 symmetry class") {
    Mat g{{1, 1}, {0, 1}};
    std::vector<IVec> rr;
    for (auto& r : fixtures::f1_rays()) rr.push_back(g * r);
    auto h = fixtures::make_fan(rr, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(fan_isomorphism(fixtures::f1_fan(), h).has_value());
    CHECK(!fan_isomorphism(fixtures::f1_fan(), fixtures::hexagon_fan()).has_value());
}

TEST_CASE("generic vectors lie in exactly one maximal cone of a normal fan") {
    for (int t = 0; t < 10; ++t) {
        RationalPolyhedron p;
        p.dim = 3;
        for (auto& r : box(3, -1, 1))
            if (!is_zero(r) && rnd(0, 2) > 0) p.ineqs.push_back({r, rnd(1, 3)});
        for (std::size_t i = 0; i < 3; ++i) {
            IVec e(3);
            e[i] = 1;
            p.ineqs.push_back({e, 2});
            p.ineqs.push_back({scale(Int(-1), e), 2});
        }
        auto f = inner_normal_fan(p);
        CHECK(fan_is_valid(f));
        for (int k = 0; k < 50; ++k) {
            auto v = random_vec(3, -97, 97);
            std::size_t in = 0, interior = 0;
            for (auto& c : f.cones) {
                in += c.contains(v);
                interior += c.contains_interior(v);
            }
            if (in != interior) continue; // on a wall: not generic
            CHECK(interior == 1);
        }
    }
}

TEST_CASE("V- and H-representations cut out the same lattice points") {
    for (int t = 0; t < 15; ++t) {
        RationalPolyhedron p;
        p.dim = 2;
        for (int k = 0; k < rnd(3, 6); ++k) {
            auto a = random_vec(2, -3, 3);
            if (!is_zero(a)) p.ineqs.push_back({a, rnd(-1, 4)}); // a.x + b >= 0
        }
        VRep v;
        try {
            v = vertices_and_rays(p);
        } catch (const ComputeError&) {
            continue; // empty, or no vertices
        }
        auto gens = v.rays.generators();
        for (auto& x : box(2, -6, 6)) {
            bool h = true;
            for (auto& [a, b] : p.ineqs) h = h && dot(a, x) + b >= 0;
            // x = sum l_i v_i + sum m_j g_j, l >= 0, sum l = 1, m >= 0
            LP lp(v.vertices.size() + gens.size());
            QVec one(lp.nvars);
            for (std::size_t i = 0; i < v.vertices.size(); ++i) one[i] = 1;
            lp.add(one, LP::EQ, 1);
            for (std::size_t c = 0; c < 2; ++c) {
                QVec row(lp.nvars);
                for (std::size_t i = 0; i < v.vertices.size(); ++i) row[i] = v.vertices[i][c];
                for (std::size_t j = 0; j < gens.size(); ++j) row[v.vertices.size() + j] = gens[j][c];
                lp.add(row, LP::EQ, Rat(x[c]));
            }
            bool vin = solve_lp(lp).status == LPResult::Optimal;
            CHECK(h == vin);
        }
    }
}

}
