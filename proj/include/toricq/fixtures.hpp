#pragma once
// Worked examples used by the golden runner, the tests and the CLI.
#include "toricq/mckay.hpp"
#include "toricq/qsec.hpp"

namespace tq::fixtures {

Fan make_fan(const std::vector<IVec>& rays, const std::vector<std::vector<std::size_t>>& cones);

// rays (1,0),(0,1),(-1,1),(0,-1) as D1..D4
std::vector<IVec> f1_rays();
Fan f1_fan();
// minimal resolution of 1/3(1,2), rays D0..D3 in the x^3, xy basis of M
std::vector<IVec> res13_rays();
Fan res13_fan();
// smooth 3-fold with rays v1..v5
std::vector<IVec> threefold_rays();
Fan threefold_fan();
std::vector<IVec> hexagon_rays();
Fan hexagon_fan();
Fan projective_space_fan(std::size_t n);

Quiver three_vertex_quiver();       // 0->1, 1->2, 0->1, 0->2
Quiver challenge_quiver();  // 0->1 x2, 0->2, 1->2 x2
Quiver parallel_quiver(std::size_t m); // m+1 arrows 0->1

PolarizedToric f1_four();   // (O, D1, D4, D1+D4), Pic basis (D1, D4)
PolarizedToric res13();     // (O, L1, L2), L1 = O(D0), L2 = O(D3)
PolarizedToric threefold(); // (O, O(0,1), O(1,0)), O(k,l) = O(kD3 + lD2)
PolarizedToric del_pezzo(); // (O, D1+D2, D3+D4, D5+D6, D1+D2+D3, D4+D5+D6)
PolarizedToric beilinson(std::size_t n);

AbelianAction z2z2_sl3();   // 1/2(1,1,0) + 1/2(0,1,1)
AbelianAction z2cubed_sl4(); // x, y, z, w in characters 100, 010, 001, 111

} // namespace tq::fixtures
