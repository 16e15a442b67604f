#include "toricq/fixtures.hpp"

namespace tq::fixtures {

Fan make_fan(const std::vector<IVec>& rays, const std::vector<std::vector<std::size_t>>& cones) {
    Fan f;
    f.dim = rays.at(0).size();
    for (auto& c : cones) {
        std::vector<IVec> g;
        for (auto i : c) g.push_back(rays.at(i));
        f.cones.push_back(Cone::from_generators(f.dim, g));
    }
    f.canonicalize();
    validate_fan(f);
    return f;
}

std::vector<IVec> f1_rays() { return {ivec({1, 0}), ivec({0, 1}), ivec({-1, 1}), ivec({0, -1})}; }
Fan f1_fan() { return make_fan(f1_rays(), {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

std::vector<IVec> res13_rays() { return {ivec({3, 1}), ivec({2, 1}), ivec({1, 1}), ivec({0, 1})}; }
Fan res13_fan() { return make_fan(res13_rays(), {{0, 1}, {1, 2}, {2, 3}}); }

std::vector<IVec> threefold_rays() {
    return {ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({-1, -1, -1}), ivec({0, 1, 1}), ivec({1, 0, 1})};
}
Fan threefold_fan() {
    return make_fan(threefold_rays(), {{0, 1, 3}, {0, 3, 4}, {0, 1, 2}, {1, 3, 2}, {3, 4, 2}, {4, 0, 2}});
}

std::vector<IVec> hexagon_rays() {
    return {ivec({1, 0}), ivec({0, 1}), ivec({-1, 1}), ivec({-1, 0}), ivec({0, -1}), ivec({1, -1})};
}
Fan hexagon_fan() { return make_fan(hexagon_rays(), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}); }

Fan projective_space_fan(std::size_t n) {
    std::vector<IVec> rays;
    for (std::size_t i = 0; i < n; ++i) {
        IVec e(n);
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(IVec(n, Int(-1)));
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t skip = 0; skip <= n; ++skip) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != skip) c.push_back(i);
        cones.push_back(c);
    }
    return make_fan(rays, cones);
}

static Quiver quiver(std::size_t nv, std::vector<std::pair<std::size_t, std::size_t>> arrows) {
    Quiver q;
    q.nv = nv;
    for (auto [t, h] : arrows) q.arrows.push_back({t, h, std::nullopt});
    return q;
}

Quiver three_vertex_quiver() { return quiver(3, {{0, 1}, {1, 2}, {0, 1}, {0, 2}}); }
Quiver challenge_quiver() { return quiver(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 2}}); }
Quiver parallel_quiver(std::size_t m) {
    std::vector<std::pair<std::size_t, std::size_t>> a(m + 1, {0, 1});
    return quiver(2, a);
}

PolarizedToric f1_four() {
    auto cox = cox_data(f1_fan(), f1_rays());
    return polarize(cox, {ivec({0, 0}), ivec({1, 0}), ivec({0, 1}), ivec({1, 1})}, std::vector<std::size_t>{0, 3});
}

PolarizedToric res13() {
    auto cox = cox_data(res13_fan(), res13_rays());
    return polarize(cox, {ivec({0, 0}), ivec({1, 0}), ivec({0, 1})}, std::vector<std::size_t>{0, 3});
}

PolarizedToric threefold() {
    auto cox = cox_data(threefold_fan(), threefold_rays());
    return polarize(cox, {ivec({0, 0}), ivec({0, 1}), ivec({1, 0})}, std::vector<std::size_t>{2, 1});
}

PolarizedToric del_pezzo() {
    auto cox = cox_data(hexagon_fan(), hexagon_rays());
    auto basis = polarize(cox, {ivec({0, 0, 0, 0})}).basis;
    Mat deg = pic_degrees(cox, basis);
    std::vector<std::vector<long>> D{{0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0},
                                     {0, 0, 0, 0, 1, 1}, {1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}};
    std::vector<IVec> L;
    for (auto& d : D) L.push_back(deg * to_ivec(d));
    return polarize(cox, L, basis);
}

PolarizedToric beilinson(std::size_t n) {
    auto f = projective_space_fan(n);
    auto cox = cox_data(f);
    std::vector<IVec> L;
    for (std::size_t k = 0; k <= n; ++k) L.push_back(ivec({static_cast<long>(k)}));
    return polarize(cox, L);
}

AbelianAction z2z2_sl3() { return parse_action("2,1,1,0;2,0,1,1"); }
AbelianAction z2cubed_sl4() { return parse_action("2,1,0,0,1;2,0,1,0,1;2,0,0,1,1"); }

} // namespace tq::fixtures
