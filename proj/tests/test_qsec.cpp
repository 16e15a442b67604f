#include "common.hpp"

using namespace tq;
using namespace tq::test;
namespace fx = tq::fixtures;

namespace {

std::vector<PolarizedToric> examples() {
    return {fx::f1_four(), fx::res13(), fx::threefold(), fx::del_pezzo(), fx::beilinson(2), fx::beilinson(3)};
}

IVec path_div(const SectionQuiver& sq, const std::vector<std::size_t>& p) {
    IVec d(sq.nrays);
    for (auto a : p) d = add(d, *sq.quiver.arrows[a].label);
    return d;
}

} // namespace

TEST_SUITE("qsec") {

TEST_CASE("sections agree with a box search on bounded fibers") {
    for (auto& X : {fx::f1_four(), fx::threefold(), fx::del_pezzo()}) {
        for (std::size_t i = 0; i < X.bundles.size(); ++i)
            for (std::size_t j = 0; j < X.bundles.size(); ++j) {
                if (!fiber_bounded(X.deg)) continue;
                auto b = sub(X.bundles[j], X.bundles[i]);
                std::vector<IVec> want;
                for (auto& u : box(X.nrays(), 0, 3))
                    if (X.deg * u == b) want.push_back(u);
                CHECK(sort_unique(sections(X, X.bundles[i], X.bundles[j])) == sort_unique(want));
            }
    }
}

TEST_CASE("indecomposable sections do not factor through a third bundle") {
    for (auto& X : examples())
        for (std::size_t i = 0; i < X.bundles.size(); ++i)
            for (std::size_t j = 0; j < X.bundles.size(); ++j) {
                if (i == j) continue;
                for (auto& s : indecomposable_sections(X, i, j))
                    for (std::size_t k = 0; k < X.bundles.size(); ++k) {
                        if (k == i || k == j) continue;
                        for (auto& s1 : sections(X, X.bundles[i], X.bundles[k])) {
                            auto r = sub(s, s1);
                            CHECK(!std::all_of(r.begin(), r.end(), [](const Int& x) { return x >= 0; }));
                        }
                    }
            }
}

TEST_CASE("relations join paths with equal endpoints and divisors") {
    for (auto& X : examples()) {
        auto sq = quiver_of_sections(X);
        CHECK(sq.stabilized);
        for (auto& [p, m] : sq.relations) {
            CHECK(sq.quiver.arrows[p.front()].tail == sq.quiver.arrows[m.front()].tail);
            CHECK(sq.quiver.arrows[p.back()].head == sq.quiver.arrows[m.back()].head);
            CHECK(path_div(sq, p) == path_div(sq, m));
            CHECK(p != m);
        }
    }
}

TEST_CASE("relation ideal lies in the toric ideal of every section quiver") {
    for (auto& X : examples()) {
        auto sq = quiver_of_sections(X);
        CHECK(contains(toric_ideal(sq.section_map), relation_ideal(sq)));
    }
}

TEST_CASE("Beilinson quiver of P^n: binomial arrow counts") {
    for (std::size_t n = 1; n <= 3; ++n) {
        auto sq = quiver_of_sections(fx::beilinson(n));
        CHECK(sq.quiver.na() == n * (n + 1));
        CHECK(sq.relations.size() == (n - 1) * n * (n + 1) / 2);
    }
}

TEST_CASE("series fans are valid") {
    for (auto& X : {fx::f1_four(), fx::threefold(), fx::beilinson(2)}) {
        auto sq = quiver_of_sections(X);
        QVec th(sq.quiver.nv, Rat(1));
        th[0] = -Rat(static_cast<long>(sq.quiver.nv) - 1);
        auto m = multilinear_series_fan(sq, th);
        std::string why;
        CHECK_MESSAGE(fan_is_valid(m.fan, &why), why);
    }
}

TEST_CASE("bundle validation") {
    auto cox = cox_data(fx::f1_fan(), fx::f1_rays());
    CHECK_THROWS_AS(polarize(cox, {ivec({1, 0})}), ValidationError);
    CHECK_THROWS_AS(polarize(cox, {ivec({0, 0}), ivec({1, 0}), ivec({1, 0})}), ValidationError);
    CHECK_THROWS_AS(polarize(cox, {ivec({0, 0}), ivec({-1, 0})}), ValidationError);
}

TEST_CASE("arrow divisors map to differences of bundle classes") {
    for (auto& X : examples()) {
        auto sq = quiver_of_sections(X);
        for (auto& a : sq.quiver.arrows) CHECK(X.deg * *a.label == sub(X.bundles[a.head], X.bundles[a.tail]));
    }
}

TEST_CASE("arrow labels are exactly the indecomposable sections") {
    for (auto& X : examples()) {
        auto sq = quiver_of_sections(X);
        for (std::size_t i = 0; i < X.bundles.size(); ++i)
            for (std::size_t j = 0; j < X.bundles.size(); ++j) {
                if (i == j) continue;
                std::vector<IVec> labels;
                for (auto& a : sq.quiver.arrows)
                    if (a.tail == i && a.head == j) labels.push_back(*a.label);
                CHECK(sort_unique(labels) == sort_unique(indecomposable_sections(X, i, j)));
                CHECK(sort_unique(labels).size() == labels.size());
            }
    }
}

TEST_CASE("two bundles give the complete linear series") {
    auto cox = cox_data(fx::f1_fan(), fx::f1_rays());
    for (auto L : {ivec({1, 0}), ivec({0, 1}), ivec({1, 1}), ivec({2, 1})}) {
        auto X = polarize(cox, {ivec({0, 0}), L}, std::vector<std::size_t>{0, 3});
        auto h0 = sections(X, ivec({0, 0}), L).size();
        auto m = multilinear_series_fan(quiver_of_sections(X), parse_weight("-1,1"));
        CHECK(fan_isomorphism(m.fan, fx::projective_space_fan(h0 - 1)).has_value());
    }
}

}
