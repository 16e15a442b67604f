#include "common.hpp"

using namespace tq;
using namespace tq::test;

TEST_SUITE("io") {

TEST_CASE("integers beyond 2^53 round trip as strings") {
    Int big("123456789012345678901234567890");
    auto j = to_json(big);
    CHECK(j.is_string());
    CHECK(int_from_json(j) == big);
    CHECK(to_json(Int(-5)).is_number_integer());
    CHECK(int_from_json(json("-7")) == -7);
}

TEST_CASE("matrices and vectors round trip") {
    for (int t = 0; t < 20; ++t) {
        auto m = random_mat(rnd(1, 4), rnd(1, 4), -100, 100);
        CHECK(mat_from_json(json::parse(to_json(m).dump())) == m);
        auto v = random_vec(4, -9, 9);
        CHECK(ivec_from_json(to_json(v)) == v);
    }
}

TEST_CASE("fans round trip with their ray order") {
    for (auto& f : {fixtures::f1_fan(), fixtures::threefold_fan(), fixtures::projective_space_fan(3)}) {
        auto rays = f.rays();
        auto [g, order] = fan_from_json(json::parse(to_json(f, &rays).dump()));
        CHECK(g == f);
        CHECK(order == rays);
    }
}

TEST_CASE("invalid fan JSON is rejected") {
    CHECK_THROWS_AS(fan_from_json(json::parse(R"({"dim":2,"rays":[[1,0],[0,1],[1,1]],"cones":[[0,1],[1,2]]})")), ValidationError);
    CHECK_THROWS_AS(fan_from_json(json::parse(R"({"dim":2,"rays":[[1,0]],"cones":[[0,3]]})")), ValidationError);
}

TEST_CASE("quivers and ideals round trip") {
    auto q = fixtures::three_vertex_quiver();
    auto q2 = quiver_from_json(json::parse(to_json(q).dump()));
    CHECK(q2.nv == q.nv);
    CHECK(q2.na() == q.na());
    for (std::size_t a = 0; a < q.na(); ++a) CHECK((q2.arrows[a].tail == q.arrows[a].tail && q2.arrows[a].head == q.arrows[a].head));
    auto I = relation_ideal(mckay_quiver(parse_action("3,1,2")));
    CHECK(equal(ideal_from_json(json::parse(to_json(I).dump())), I));
}

TEST_CASE("inline parsers") {
    CHECK(parse_ivec("1,-2,3") == ivec({1, -2, 3}));
    CHECK(parse_rows("1,2;3,4") == std::vector<IVec>{ivec({1, 2}), ivec({3, 4})});
    CHECK_THROWS_AS(parse_ivec("1,,2"), ValidationError);
}

TEST_CASE("DOT output names every ray and arrow") {
    auto d = fan_dot(fixtures::f1_fan());
    CHECK(d.find("graph") != std::string::npos);
    auto qd = quiver_dot(fixtures::three_vertex_quiver());
    CHECK(qd.find("->") != std::string::npos);
}

}
