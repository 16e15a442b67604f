#pragma once
#include "toricq/binom.hpp"
#include "toricq/quivrep.hpp"

namespace tq {

// diag(eps^alpha_1(g), ..., eps^alpha_n(g)); characters are mixed-radix over the factors
struct AbelianAction {
    std::vector<long> factors;             // r_1..r_k
    std::vector<std::vector<long>> alpha;  // n rows, k entries
    std::size_t n() const { return alpha.size(); }
    std::size_t order() const;
    std::vector<long> character(std::size_t idx) const;
    std::size_t index(const std::vector<long>& ch) const; // reduces mod factors
    std::size_t shift(std::size_t rho, std::size_t i) const; // rho + alpha_i
    std::size_t weight(const Exp& e) const;              // character of a monomial
    void validate() const;
};
// "r,a1,..,an" or several such joined by ';' (direct sum of cyclic types)
AbelianAction parse_action(const std::string& s);

struct McKayQuiver {
    AbelianAction action;
    Quiver quiver; // arrow rho*n+i : rho -> rho+alpha_i, label e_i
    // pairs of paths (arrow index sequences); commutation set, one per (rho, i<j)
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> relations;
    std::size_t var(std::size_t a) const { return a % action.n(); }
};
McKayQuiver mckay_quiver(const AbelianAction& a);
BinomialIdeal relation_ideal(const McKayQuiver& q);

using Staircase = std::vector<Exp>; // sorted
std::vector<Staircase> fixed_g_clusters(const AbelianAction& a, std::size_t cap = 64);
Support cluster_to_rep(const Staircase& c, const McKayQuiver& q);

struct ConstellationSearch {
    std::vector<Support> found;   // sorted
    bool complete = true;
    std::size_t nodes = 0;
};
ConstellationSearch fixed_stable_constellations(const McKayQuiver& q, const QVec& theta, const Budget& budget = {});
bool commutation_ok(const McKayQuiver& q, const Support& s);
// potential m with m(head) - m(tail) = e_i on the support, m(0) = 0; nullopt if none
std::optional<std::vector<IVec>> support_potential(const McKayQuiver& q, const Support& s);

LatticeMap cmt_lattice_map(const McKayQuiver& q);
// lattice of invariant Laurent monomials, HNF rows
Mat invariant_lattice(const AbelianAction& a);

struct CoherentFan {
    Fan fan;                       // in coordinates dual to invariant_lattice rows
    std::vector<QVec> vertices;    // vertices of E(P_theta) in Z^n, matching fan.cones order
    bool smooth = false;
    std::size_t lp_calls = 0;
};
CoherentFan coherent_component_fan(const McKayQuiver& q, const QVec& theta);
bool generic_weight(const QVec& theta);

struct WallReport {
    std::size_t hyperplane = 0; // index into subset_signs ordering
    IVec normal;                // over theta_1..theta_{n-1}
    std::vector<Support> lost, kept, gained;
    CoherentFan from, to;
    bool fans_equal = false;
    std::optional<Mat> isomorphism;
    std::vector<Cone> only_from, only_to;
    bool complete = true;
};
WallReport wall_report(const McKayQuiver& q, const QVec& from, const QVec& to, const Budget& budget = {});

std::string support_string(const McKayQuiver& q, const Support& s);

} // namespace tq
