#pragma once

#include "toricq/polycone.hpp"

#include <functional>

namespace tq {

struct Arrow {
    std::size_t tail = 0, head = 0;
    std::optional<IVec> label;
};

struct Quiver {
    std::size_t nv = 0;
    std::vector<Arrow> arrows;

    std::size_t na() const { return arrows.size(); }
    bool connected() const;
    bool acyclic() const;
    void validate() const; // throws ValidationError
};

// arrow-support bitmask helpers
using Support = std::vector<bool>;

struct IncidenceData {
    Mat inc;             // nv x na, column a = e_head - e_tail
    std::size_t weight_rank = 0;
    Mat circuit_basis;   // na x c
};
IncidenceData incidence_data(const Quiver& q);

enum class Stability { Stable, Semistable, Unstable };
const char* to_string(Stability s);

struct StabilityResult {
    Stability verdict = Stability::Stable;
    std::vector<std::size_t> witness; // vertex subset violating (or, for semistable, with theta = 0)
};
StabilityResult is_theta_stable(const Quiver& q, const Support& s, const QVec& theta);

// out-arborescences rooted at 0, each as a sorted list of arrow indices
std::vector<std::vector<std::size_t>> arborescences(const Quiver& q);
std::vector<IVec> arborescence_ideal(const Quiver& q); // 0/1 exponent vectors over arrows

struct ModuliFan {
    Fan fan;             // in coordinates dual to the circuit basis
    bool smooth = false;
    bool projective = false;
    std::vector<std::vector<std::size_t>> trees; // tree of each vertex of P_theta, in fan-cone order
    Mat circuit_basis;
};
ModuliFan moduli_fan(const Quiver& q, const QVec& theta);

std::vector<IVec> tautological_classes(const Quiver& q);

// theta in Wt(Q) as integers, from any rational vector summing to zero
IVec integral_weight(const QVec& theta);
QVec parse_weight(const std::string& s);

// label used to merge arrangement cells: sorted list of stable torus-fixed supports
using ChamberOracle = std::function<std::vector<std::vector<std::size_t>>(const QVec& theta)>;

struct ChamberComplex {
    std::vector<IVec> walls; // normals over theta_1..theta_{n-1}
    struct Chamber {
        std::vector<int> sign; // against walls
        QVec sample;           // full theta, sums to zero
        std::vector<std::vector<std::size_t>> stable; // oracle value
    };
    std::vector<Chamber> chambers;
    std::size_t cells = 0;    // arrangement cells before merging
};
ChamberComplex chamber_decomposition(const Quiver& q, const ChamberOracle& oracle = nullptr);

// default oracle: theta-stable spanning trees
std::vector<std::vector<std::size_t>> stable_trees(const Quiver& q, const QVec& theta);

// all subset hyperplanes sum_{i in S} theta_i, S nonempty in {1..n-1}; sign pattern of theta
std::vector<int> subset_signs(std::size_t nv, const QVec& theta);

} // namespace tq
