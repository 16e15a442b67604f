#pragma once

#include "toricq/latcore.hpp"

#include <chrono>
#include <memory>

namespace tq {

using Exp = std::vector<int>;

// degrevlex on a priority list (priority[0] largest); an optional leading
// elimination block and an optional positive weight vector on the rest
struct MonomialOrder {
    std::vector<std::size_t> priority;
    std::size_t elim = 0;
    std::vector<long> weights; // empty = standard degree

    static MonomialOrder degrevlex(std::size_t n);
    static MonomialOrder from_priority(std::vector<std::size_t> p);
    bool less(const Exp& a, const Exp& b) const; // a < b
    std::size_t nvars() const { return priority.size(); }
    bool operator==(const MonomialOrder& o) const { return priority == o.priority && elim == o.elim && weights == o.weights; }
};

// y^lead - y^tail (lead > tail), or the monomial y^lead
struct Binomial {
    Exp lead, tail;
    bool mono = false;
    bool operator==(const Binomial& o) const { return mono == o.mono && lead == o.lead && (mono || tail == o.tail); }
};

// input form: y^plus - y^minus, or a monomial
struct BinomialGen {
    Exp plus, minus;
    bool mono = false;
    static BinomialGen binomial(Exp p, Exp m) { return {std::move(p), std::move(m), false}; }
    static BinomialGen monomial(Exp p) { return {std::move(p), {}, true}; }
};

struct BinomialIdeal {
    std::size_t nvars = 0;
    std::vector<BinomialGen> gens;
    MonomialOrder order;

    BinomialIdeal() = default;
    BinomialIdeal(std::size_t n, std::vector<BinomialGen> g);
    BinomialIdeal(std::size_t n, std::vector<BinomialGen> g, MonomialOrder o);

    // reduced Groebner basis, computed on first use
    const std::vector<Binomial>& gb() const;
    bool is_zero() const { return gb().empty(); }
    bool is_unit() const;

private:
    mutable std::shared_ptr<std::vector<Binomial>> cache_;
};

std::vector<Binomial> groebner_basis(std::size_t n, const std::vector<BinomialGen>& gens, const MonomialOrder& o);
BinomialIdeal groebner(const BinomialIdeal& I);

// normal form; returns true if it reduces to zero
bool reduces_to_zero(const BinomialGen& f, const std::vector<Binomial>& gb, const MonomialOrder& o);
bool member(const BinomialIdeal& I, const BinomialGen& f);
bool contains(const BinomialIdeal& big, const BinomialIdeal& small); // small ⊆ big
bool equal(const BinomialIdeal& I, const BinomialIdeal& J);

// every S-pair of the basis reduces to zero
bool certify_groebner(const std::vector<Binomial>& gb, const MonomialOrder& o);

BinomialIdeal toric_ideal(const Mat& A);
BinomialIdeal lattice_ideal(const std::vector<IVec>& basis, std::size_t n);
BinomialIdeal saturate_var(const BinomialIdeal& I, std::size_t var);
BinomialIdeal saturate(const BinomialIdeal& I, const Exp& m);
BinomialIdeal saturate(const BinomialIdeal& I, const std::vector<Exp>& monomial_ideal);
BinomialIdeal intersect(const BinomialIdeal& I, const BinomialIdeal& J);
BinomialIdeal with_order(const BinomialIdeal& I, const MonomialOrder& o);
BinomialIdeal from_basis(std::size_t n, const std::vector<Binomial>& gb, const MonomialOrder& o);

struct Budget {
    long items = -1; // -1 unlimited
    long ms = -1;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool exhausted(long used_items) const;
};

struct CensusComponent {
    std::vector<std::size_t> Z;   // vanishing coordinates
    std::vector<IVec> lattice;    // basis of L_Z (full coordinates, zero on Z)
    Int torsion;                  // |sat(L_Z) / L_Z|
    std::vector<Binomial> ideal;  // reduced basis of the lattice part
};
struct Census {
    std::vector<CensusComponent> components;
    std::size_t subsets_examined = 0, valid_subsets = 0;
    bool complete = true;
};
Census component_census(const BinomialIdeal& I, const Budget& budget = {});

// text rendering like y1y3 - y2^2
std::string to_string(const Binomial& b, const std::string& var = "y", int base = 1);
std::string monomial_string(const Exp& e, const std::string& var = "y", bool unicode = false, int base = 1);

} // namespace tq
