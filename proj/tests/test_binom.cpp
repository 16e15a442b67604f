#include "common.hpp"

using namespace tq;
using namespace tq::test;

namespace {

BinomialGen pair_of(const IVec& u) {
    Exp p(u.size()), m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 0) p[i] = static_cast<int>(u[i].get_si());
        if (u[i] < 0) m[i] = static_cast<int>(-u[i].get_si());
    }
    return BinomialGen::binomial(p, m);
}

BinomialIdeal random_binomial_ideal(std::size_t n, std::size_t k) {
    std::vector<BinomialGen> g;
    for (std::size_t i = 0; i < k; ++i) {
        Exp a(n), b(n);
        for (auto& x : a) x = static_cast<int>(rnd(0, 2));
        for (auto& x : b) x = static_cast<int>(rnd(0, 2));
        if (a != b) g.push_back(BinomialGen::binomial(a, b));
    }
    return BinomialIdeal(n, g);
}

} // namespace

TEST_SUITE("binom") {

TEST_CASE("toric ideal membership on 100 random kernel pairs") {
    int done = 0;
    while (done < 100) {
        auto A = random_mat(2, 5, 0, 3);
        for (std::size_t j = 0; j < 5; ++j) A(0, j) += 1;
        auto K = kernel_basis(A);
        auto I = toric_ideal(A);
        for (int t = 0; t < 10; ++t, ++done) {
            IVec u(5);
            for (std::size_t c = 0; c < K.cols; ++c) u = add(u, scale(rnd(-2, 2), K.col(c)));
            if (is_zero(u)) continue;
            CHECK(member(I, pair_of(u)));
            // a non-kernel vector never lies in the ideal
            IVec w = u;
            w[static_cast<std::size_t>(rnd(0, 4))] += 1;
            CHECK(!member(I, pair_of(w)));
        }
    }
}

TEST_CASE("Groebner bases: idempotent and S-pairs reduce to zero") {
    for (int t = 0; t < 40; ++t) {
        auto I = random_binomial_ideal(rnd(2, 5), rnd(1, 4));
        auto& gb = I.gb();
        CHECK(certify_groebner(gb, I.order));
        std::vector<BinomialGen> gens;
        for (auto& b : gb) gens.push_back(b.mono ? BinomialGen::monomial(b.lead) : BinomialGen::binomial(b.lead, b.tail));
        CHECK(groebner_basis(I.nvars, gens, I.order) == gb);
        for (auto& g : I.gens) CHECK(reduces_to_zero(g, gb, I.order));
    }
}

TEST_CASE("other term orders give the same ideal") {
    for (int t = 0; t < 20; ++t) {
        auto I = random_binomial_ideal(4, 3);
        auto J = with_order(I, MonomialOrder::from_priority({3, 1, 0, 2}));
        CHECK(equal(I, J));
        CHECK(certify_groebner(J.gb(), J.order));
    }
}

TEST_CASE("saturation is idempotent and contains the ideal") {
    for (int t = 0; t < 25; ++t) {
        auto I = random_binomial_ideal(4, 3);
        Exp m(4);
        m[static_cast<std::size_t>(rnd(0, 3))] = 1;
        m[static_cast<std::size_t>(rnd(0, 3))] = 1;
        auto S = saturate(I, m);
        CHECK(contains(S, I));
        CHECK(equal(saturate(S, m), S));
    }
}

TEST_CASE("saturating a lattice basis ideal gives the toric ideal") {
    for (int t = 0; t < 15; ++t) {
        auto A = random_mat(1, 4, 1, 4);
        auto K = kernel_basis(A);
        std::vector<BinomialGen> g;
        for (std::size_t c = 0; c < K.cols; ++c) g.push_back(pair_of(K.col(c)));
        CHECK(equal(saturate(BinomialIdeal(4, g), Exp(4, 1)), toric_ideal(A)));
    }
}

TEST_CASE("intersection is contained in both and contains the product") {
    for (int t = 0; t < 15; ++t) {
        auto I = random_binomial_ideal(3, 2);
        BinomialIdeal M(3, {BinomialGen::monomial(Exp{1, 0, 0}), BinomialGen::monomial(Exp{0, rnd(1, 2) > 1 ? 2 : 1, 0})});
        BinomialIdeal K;
        try {
            K = intersect(I, M);
        } catch (const ComputeError&) {
            continue;
        }
        CHECK(contains(I, K));
        CHECK(contains(M, K));
        for (auto& a : I.gens)
            for (auto& b : M.gens) {
                Exp p = a.plus, q = a.minus;
                for (std::size_t i = 0; i < 3; ++i) {
                    p[i] += b.plus[i];
                    q[i] += b.plus[i];
                }
                CHECK(member(K, a.mono ? BinomialGen::monomial(p) : BinomialGen::binomial(p, q)));
            }
    }
}

TEST_CASE("unit ideal and zero ideal") {
    BinomialIdeal one(2, {BinomialGen::monomial(Exp{0, 0})});
    CHECK(one.is_unit());
    BinomialIdeal zero(2, {});
    CHECK(zero.is_zero());
    CHECK(contains(one, zero));
}

TEST_CASE("census of a reducible binomial ideal") {
    // (x1 x2 - x1 x3) = (x1) cap (x2 - x3)
    BinomialIdeal I(3, {BinomialGen::binomial(Exp{1, 1, 0}, Exp{1, 0, 1})});
    auto c = component_census(I);
    CHECK(c.complete);
    CHECK(c.components.size() == 2);
}

TEST_CASE("census respects an exhausted budget") {
    auto q = mckay_quiver(parse_action("7,1,2"));
    Budget b;
    b.items = 1;
    auto c = component_census(relation_ideal(q), b);
    CHECK(!c.complete);
}

TEST_CASE("monomial strings") {
    CHECK(monomial_string(Exp{2, 0, 1}) == "y1^2y3");
    CHECK(monomial_string(Exp{0, 0}) == "1");
}

TEST_CASE("census of a prime toric ideal has one component") {
    for (auto A : {Mat{{3, 2, 1, 0}, {0, 1, 2, 3}}, Mat{{1, 1, 1, 1}, {0, 1, 2, 4}}, Mat{{1, 2, 3}}}) {
        auto c = component_census(toric_ideal(A));
        CHECK(c.complete);
        CHECK(c.components.size() == 1);
    }
}

}
