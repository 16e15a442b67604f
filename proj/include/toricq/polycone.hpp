#pragma once

#include "toricq/latcore.hpp"

#include <optional>
#include <tuple>
#include <utility>

namespace tq {

// Rational polyhedral cone, kept in a canonical V-representation:
// primitive extreme rays modulo lineality (sorted), plus an HNF lineality basis.
// The H-representation (inner facet normals and equations) is cached alongside.
struct Cone {
    std::size_t dim = 0;
    std::vector<IVec> rays;
    std::vector<IVec> lineality;
    std::vector<IVec> facets;    // n.x >= 0
    std::vector<IVec> equations; // e.x == 0

    Cone() = default;
    static Cone from_generators(std::size_t dim, const std::vector<IVec>& gens);
    static Cone from_inequalities(std::size_t dim, const std::vector<IVec>& ineq,
                                  const std::vector<IVec>& eq = {});

    bool strongly_convex() const { return lineality.empty(); }
    std::size_t cone_dim() const { return dim - equations.size(); }
    std::vector<IVec> generators() const; // rays, then +/- lineality
    bool contains(const IVec& v) const;
    bool contains(const QVec& v) const;
    bool contains_interior(const IVec& v) const; // relative interior
    bool operator==(const Cone& o) const { return dim == o.dim && rays == o.rays && lineality == o.lineality; }
    bool operator<(const Cone& o) const {
        return std::tie(rays, lineality) < std::tie(o.rays, o.lineality);
    }
};

Cone dual_cone(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
bool is_face(const Cone& face, const Cone& c);
std::vector<Cone> facets_of(const Cone& c);

// Hilbert basis of c ∩ L, where L is the lattice with the given basis rows
// (default: saturation of the linear span of c in Z^dim). Sorted lexicographically.
std::vector<IVec> hilbert_basis(const Cone& c);
std::vector<IVec> hilbert_basis(const Cone& c, const Mat& lattice_rows);

// {x : a_i.x >= -offset_i}
struct RationalPolyhedron {
    std::size_t dim = 0;
    std::vector<std::pair<IVec, Int>> ineqs;
    std::optional<std::vector<QVec>> vertices;
    std::optional<Cone> recession;
};

struct VRep {
    std::vector<QVec> vertices;
    Cone rays;
};
VRep vertices_and_rays(const RationalPolyhedron& p);

struct Fan {
    std::size_t dim = 0;
    std::vector<Cone> cones; // maximal cones, sorted
    std::vector<IVec> rays() const; // sorted union of cone rays
    std::vector<std::vector<std::size_t>> cone_indices() const; // each cone as sorted ray indices
    void canonicalize();
    bool operator==(const Fan& o) const { return dim == o.dim && cones == o.cones; }
};

Fan inner_normal_fan(const RationalPolyhedron& p);

// throws ComputeError with a description on the first offending pair
void validate_fan(const Fan& f);
bool fan_is_valid(const Fan& f, std::string* why = nullptr);

// unimodular isomorphism search; returns T with T(F) = G
std::optional<Mat> fan_isomorphism(const Fan& f, const Fan& g);

// nonnegative integer solutions of A x = b, sorted. bound (per coordinate) optional.
std::vector<IVec> lattice_points_in_fiber(const Mat& A, const IVec& b,
                                          const std::optional<IVec>& bound = std::nullopt,
                                          std::size_t max_points = 1000000);
// first point found (not necessarily the smallest)
std::optional<IVec> fiber_point(const Mat& A, const IVec& b, const std::optional<IVec>& bound = std::nullopt);
bool fiber_bounded(const Mat& A); // {x >= 0 : A x = 0} == {0}

// cone hull helpers
std::vector<IVec> sort_unique(std::vector<IVec> v);

} // namespace tq
