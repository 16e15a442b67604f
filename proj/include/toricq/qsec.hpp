#pragma once
#include "toricq/binom.hpp"
#include "toricq/quivrep.hpp"
#include "toricq/torvar.hpp"

namespace tq {

struct PolarizedToric {
    CoxData cox;
    std::vector<std::size_t> basis; // rays whose classes give the Pic basis
    Mat deg;                        // rank x rays, ray classes in that basis
    std::vector<IVec> bundles;      // L_0 = 0, L_1, ..., L_r
    std::size_t nrays() const { return deg.cols; }
};
// basis: ray indices (into cox.ray_order); default = first unimodular choice
PolarizedToric polarize(const CoxData& cox, const std::vector<IVec>& bundles,
                        std::optional<std::vector<std::size_t>> basis = std::nullopt);
Mat pic_degrees(const CoxData& cox, const std::vector<std::size_t>& basis);
bool basepoint_free(const PolarizedToric& X, const IVec& L);

// T-invariant sections of L_to - L_from as divisor vectors. For an unbounded fiber
// these are the minimal ones (module generators over the degree-0 part).
std::vector<IVec> sections(const PolarizedToric& X, const IVec& from, const IVec& to);
std::vector<IVec> indecomposable_sections(const PolarizedToric& X, std::size_t i, std::size_t j);

using PathPair = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

struct SectionQuiver {
    Quiver quiver;                 // arrow labels = div vectors
    std::vector<PathPair> relations;
    Mat section_map;               // (inc ; div)
    std::size_t bound = 0;         // path length bound used for relations
    bool stabilized = false;       // same ideal at bound + 1
    std::size_t nrays = 0;
};
SectionQuiver quiver_of_sections(const PolarizedToric& X, std::optional<std::size_t> bound = std::nullopt);
BinomialIdeal relation_ideal(const SectionQuiver& sq);

ModuliFan multilinear_series_fan(const SectionQuiver& sq, const QVec& theta);

struct ImageVerdict {
    bool equal = false;
    BinomialIdeal IQ, Irho;
    std::vector<BinomialIdeal> saturations; // (I_rho : g^inf), one per arborescence monomial
    std::vector<IVec> arborescence_monomials;
    bool contained = false; // I_rho inside I_Q
};
ImageVerdict image_equals_moduli(const SectionQuiver& sq);

// factors: classes L_1..L_r (no O); tests H0(L_1) x ... x H0(L_r) -> H0(sum)
bool multiplication_surjective(const PolarizedToric& X, const std::vector<IVec>& factors);

std::string div_monomial(const IVec& d, const std::vector<std::string>* names = nullptr, bool unicode = false, int base = 0);

} // namespace tq
