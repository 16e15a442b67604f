#pragma once
#include "toricq/binom.hpp"
#include "toricq/fixtures.hpp"
#include "toricq/io.hpp"
#include "toricq/mckay.hpp"
#include "toricq/qsec.hpp"

#include <doctest.h>

#include <random>

namespace tq::test {

inline std::mt19937& rng() {
    static std::mt19937 g(20260416);
    return g;
}

inline long rnd(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Mat random_mat(std::size_t r, std::size_t c, long lo, long hi) {
    Mat m(r, c);
    for (auto& x : m.a) x = rnd(lo, hi);
    return m;
}

inline IVec random_vec(std::size_t n, long lo, long hi) {
    IVec v(n);
    for (auto& x : v) x = rnd(lo, hi);
    return v;
}

// all integer points of [lo,hi]^d
inline std::vector<IVec> box(std::size_t d, long lo, long hi) {
    std::vector<IVec> out;
    IVec v(d, Int(lo));
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < d && v[i] == hi) v[i++] = lo;
        if (i == d) break;
        v[i] += 1;
    }
    return out;
}

inline Exp to_exp(const IVec& v) {
    Exp e;
    for (auto& x : v) e.push_back(static_cast<int>(x.get_si()));
    return e;
}

} // namespace tq::test
