#pragma once

#include "toricq/binom.hpp"

namespace tq {

// general sparse polynomial over Q, terms sorted by decreasing monomial order
struct Poly {
    std::vector<std::pair<Exp, Rat>> terms;
    bool is_zero() const { return terms.empty(); }
};

Poly poly_from(const BinomialGen& g, const MonomialOrder& o);
std::vector<Poly> poly_groebner(std::vector<Poly> gens, const MonomialOrder& o);

} // namespace tq
