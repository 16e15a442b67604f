#pragma once

#include "toricq/polycone.hpp"

namespace tq {

struct CyclicActionType {
    Int r;
    IVec a;
};
CyclicActionType parse_type(const std::string& s); // "r,a1,...,an"

struct GradedSemigroup {
    std::size_t d = 0;
    std::vector<IVec> gens;
    Mat grading; // k x d, may be 0 x d
};

GradedSemigroup invariant_semigroup(const CyclicActionType& t);

struct JungHirzebruch {
    std::vector<Int> coefficients;
    std::vector<IVec> generators; // in recursion order u_0, u_1, ...
};
JungHirzebruch jung_hirzebruch(const Int& r, const Int& a);

struct NormalityResult {
    bool normal = true;
    std::optional<IVec> witness;
    std::vector<IVec> hilbert; // Hilbert basis of cone(S) in ZS
};
NormalityResult is_normal(const GradedSemigroup& s);

// membership of v in the semigroup generated by gens (pointed cone assumed)
bool in_semigroup(const std::vector<IVec>& gens, const IVec& v);
// drop generators that are sums of others
std::vector<IVec> minimal_generators(const std::vector<IVec>& gens);

struct Chart {
    IVec vertex;                   // degree-ell element u_i
    std::vector<IVec> generators;  // minimal generators of S_i, ambient coordinates
    std::vector<IVec> hilbert;     // Hilbert basis of cone(S_i) in Z S_i
    bool normal = true;
    std::optional<std::pair<Int, Int>> cyclic_type; // (r, a) for 2-dimensional charts
};
struct ProjCharts {
    Int ell;
    std::vector<IVec> degree_piece; // sums of positive-degree generators of degree ell
    std::vector<Chart> charts;
};
ProjCharts proj_charts(const GradedSemigroup& s, int ell_cap = 12, int veronese_check = 3);

// (u, j) in Z^{d+1} generators of the chi-semi-invariant semigroup
GradedSemigroup git_quotient_semigroup(const GradedSemigroup& s, const IVec& chi, int j_max);

// classify a 2-dimensional cone <n1, n2> in Z^2 as 1/r(1,a), normalized to min(a, a^-1 mod r)
std::pair<Int, Int> cyclic_type_of_cone(const IVec& n1, const IVec& n2);

struct CoxData {
    Fan fan;
    std::vector<IVec> ray_order;
    Mat div;                              // rays x rank
    Cokernel deg;                         // class group presentation
    std::vector<IVec> irrelevant_ideal;   // squarefree exponent vectors, one per maximal cone
};
CoxData cox_data(const Fan& f, std::optional<std::vector<IVec>> ray_order = std::nullopt);

bool is_simplicial(const Fan& f);
bool is_smooth(const Fan& f);

} // namespace tq
