#include "common.hpp"

using namespace tq;
using namespace tq::test;

namespace {

Quiver random_quiver(std::size_t nv, std::size_t na) {
    Quiver q;
    q.nv = nv;
    for (std::size_t i = 1; i < nv; ++i) q.arrows.push_back({static_cast<std::size_t>(rnd(0, i - 1)), i, std::nullopt});
    while (q.arrows.size() < na) {
        auto t = static_cast<std::size_t>(rnd(0, nv - 1)), h = static_cast<std::size_t>(rnd(0, nv - 1));
        if (t != h) q.arrows.push_back({t, h, std::nullopt});
    }
    return q;
}

QVec random_weight(std::size_t nv) {
    QVec th(nv);
    Rat s = 0;
    for (std::size_t i = 1; i < nv; ++i) {
        th[i] = rnd(-5, 5);
        s += th[i];
    }
    th[0] = -s;
    return th;
}

// stable iff theta > 0 on every proper nonempty subset closed under supported arrows
Stability brute_stability(const Quiver& q, const Support& s, const QVec& th) {
    bool semi = true, strict = true;
    for (std::size_t m = 1; m + 1 < (1u << q.nv); ++m) {
        bool closed = true;
        for (std::size_t a = 0; a < q.na(); ++a)
            if (s[a] && (m >> q.arrows[a].tail & 1) && !(m >> q.arrows[a].head & 1)) closed = false;
        if (!closed) continue;
        Rat w = 0;
        for (std::size_t v = 0; v < q.nv; ++v)
            if (m >> v & 1) w += th[v];
        if (w < 0) semi = false;
        if (w <= 0) strict = false;
    }
    return strict ? Stability::Stable : semi ? Stability::Semistable : Stability::Unstable;
}

// out-arborescences at 0 by the matrix-tree theorem
Int tree_count(const Quiver& q) {
    Mat L(q.nv - 1, q.nv - 1);
    for (auto& a : q.arrows) {
        if (a.head == 0 || a.tail == a.head) continue;
        L(a.head - 1, a.head - 1) += 1;
        if (a.tail != 0) L(a.tail - 1, a.head - 1) -= 1;
    }
    return q.nv == 1 ? Int(1) : det(L);
}

} // namespace

TEST_SUITE("quivrep") {

TEST_CASE("stability agrees with subset enumeration") {
    for (int t = 0; t < 200; ++t) {
        auto q = random_quiver(rnd(2, 5), rnd(3, 7));
        Support s(q.na());
        for (std::size_t a = 0; a < q.na(); ++a) s[a] = rnd(0, 1);
        auto th = random_weight(q.nv);
        CHECK(is_theta_stable(q, s, th).verdict == brute_stability(q, s, th));
    }
}

TEST_CASE("stability is invariant under positive scaling") {
    for (int t = 0; t < 100; ++t) {
        auto q = random_quiver(rnd(2, 5), rnd(3, 7));
        Support s(q.na());
        for (std::size_t a = 0; a < q.na(); ++a) s[a] = rnd(0, 1);
        auto th = random_weight(q.nv);
        auto v = is_theta_stable(q, s, th).verdict;
        for (long k : {2, 3, 7}) {
            QVec th2 = th;
            for (auto& x : th2) x *= k;
            CHECK(is_theta_stable(q, s, th2).verdict == v);
        }
        QVec half = th;
        for (auto& x : half) x /= 2;
        CHECK(is_theta_stable(q, s, half).verdict == v);
    }
}

TEST_CASE("unstable verdicts carry a violating closed subset") {
    for (int t = 0; t < 100; ++t) {
        auto q = random_quiver(rnd(2, 5), rnd(3, 7));
        Support s(q.na(), true);
        auto th = random_weight(q.nv);
        auto r = is_theta_stable(q, s, th);
        if (r.verdict != Stability::Unstable) continue;
        Rat w = 0;
        for (auto v : r.witness) w += th[v];
        CHECK(w < 0);
    }
}

TEST_CASE("arborescence count matches the matrix-tree theorem") {
    for (int t = 0; t < 60; ++t) {
        auto q = random_quiver(rnd(2, 5), rnd(3, 8));
        CHECK(Int(static_cast<long>(arborescences(q).size())) == tree_count(q));
    }
}

TEST_CASE("moduli fan: one cone per stable tree, valid and smooth") {
    for (int t = 0; t < 30; ++t) {
        auto q = random_quiver(rnd(2, 4), rnd(3, 6));
        QVec th(q.nv, Rat(1));
        th[0] = -Rat(static_cast<long>(q.nv) - 1);
        ModuliFan m;
        try {
            m = moduli_fan(q, th);
        } catch (const ValidationError&) {
            continue; // non-generic or empty
        }
        std::string why;
        CHECK_MESSAGE(fan_is_valid(m.fan, &why), why);
        CHECK(m.smooth);
        CHECK(m.fan.cones.size() == stable_trees(q, th).size());
        CHECK(m.projective == q.acyclic());
    }
}

TEST_CASE("non-generic weights are rejected") {
    CHECK_THROWS_AS(moduli_fan(fixtures::three_vertex_quiver(), parse_weight("-1,1,0")), ValidationError);
    CHECK_THROWS_AS(is_theta_stable(fixtures::three_vertex_quiver(), Support(4, true), parse_weight("1,1,1")), ValidationError);
}

TEST_CASE("incidence: columns are head minus tail, circuits in the kernel") {
    for (int t = 0; t < 30; ++t) {
        auto q = random_quiver(rnd(2, 5), rnd(3, 8));
        auto d = incidence_data(q);
        CHECK((d.inc * d.circuit_basis).is_zero());
        CHECK(d.circuit_basis.cols == q.na() - q.nv + 1);
        CHECK(d.weight_rank == q.nv - 1);
    }
}

TEST_CASE("A2 chambers agree between tree and constellation oracles") {
    auto q = mckay_quiver(parse_action("3,1,2"));
    auto cc = chamber_decomposition(q.quiver);
    CHECK(cc.chambers.size() == 6);
    for (auto& c : cc.chambers) CHECK(fixed_stable_constellations(q, c.sample).found.size() == 3);
}

TEST_CASE("incidence columns sum to zero") {
    for (int t = 0; t < 30; ++t) {
        auto d = incidence_data(random_quiver(rnd(2, 6), rnd(3, 9)));
        for (std::size_t a = 0; a < d.inc.cols; ++a) {
            Int s = 0;
            for (std::size_t v = 0; v < d.inc.rows; ++v) s += d.inc(v, a);
            CHECK(s == 0);
        }
    }
}

TEST_CASE("smooth moduli: rays minus dimension is vertices minus one") {
    auto f1 = moduli_fan(fixtures::three_vertex_quiver(), parse_weight("-2,1,1"));
    CHECK(f1.fan.rays().size() - f1.fan.dim == 2);
    for (std::size_t m = 1; m <= 4; ++m) {
        auto p = moduli_fan(fixtures::parallel_quiver(m), parse_weight("-1,1"));
        CHECK(p.fan.rays().size() - p.fan.dim == 1);
    }
}

TEST_CASE("weights in one chamber give the same fan and the same stable supports") {
    for (auto q : {fixtures::three_vertex_quiver(), fixtures::challenge_quiver(), mckay_quiver(parse_action("3,1,2")).quiver}) {
        auto cc = chamber_decomposition(q);
        for (auto& c : cc.chambers) {
            ModuliFan base;
            try {
                base = moduli_fan(q, c.sample);
            } catch (const ValidationError&) {
                continue; // empty fiber polyhedron
            }
            for (int k = 0; k < 5; ++k) {
                QVec th = c.sample;
                Rat s = 0;
                for (std::size_t v = 1; v < th.size(); ++v) {
                    th[v] = th[v] * rnd(2, 5) + Rat(rnd(-1, 1), 7);
                    s += th[v];
                }
                th[0] = -s;
                if (subset_signs(q.nv, th) != subset_signs(q.nv, c.sample)) continue;
                CHECK(moduli_fan(q, th).fan == base.fan);
                CHECK(stable_trees(q, th) == stable_trees(q, c.sample));
            }
        }
    }
}

TEST_CASE("A2: support stability is constant on chambers") {
    auto q = mckay_quiver(parse_action("3,1,2"));
    auto cc = chamber_decomposition(q.quiver);
    std::vector<Support> all;
    for (std::size_t m = 0; m < 64; ++m) {
        Support s(6);
        for (std::size_t a = 0; a < 6; ++a) s[a] = m >> a & 1;
        all.push_back(s);
    }
    for (int t = 0; t < 100; ++t) {
        QVec th{0, Rat(rnd(-9, 9)), Rat(rnd(-9, 9))};
        th[0] = -th[1] - th[2];
        if (!generic_weight(th)) continue;
        auto sg = subset_signs(3, th);
        for (auto& c : cc.chambers) {
            if (subset_signs(3, c.sample) != sg) continue;
            for (auto& s : all) CHECK(is_theta_stable(q.quiver, s, th).verdict == is_theta_stable(q.quiver, s, c.sample).verdict);
        }
    }
}

}
