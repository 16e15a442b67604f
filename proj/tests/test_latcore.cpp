#include "common.hpp"

#include <algorithm>
#include <numeric>

using namespace tq;
using namespace tq::test;

namespace {

Int leibniz(const Mat& A) {
    std::vector<std::size_t> p(A.rows);
    std::iota(p.begin(), p.end(), 0);
    Int total = 0;
    do {
        Int t = 1;
        int inv = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            t *= A(i, p[i]);
            for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
        }
        total += inv % 2 ? -t : t;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

bool unimodular(const Mat& U) { return abs(det(U)) == 1; }

Mat diag(const IVec& d, std::size_t r, std::size_t c) {
    Mat D(r, c);
    for (std::size_t i = 0; i < d.size(); ++i) D(i, i) = d[i];
    return D;
}

} // namespace

TEST_SUITE("latcore") {

TEST_CASE("det agrees with the permutation expansion") {
    for (int t = 0; t < 40; ++t) {
        auto n = static_cast<std::size_t>(rnd(1, 5));
        auto A = random_mat(n, n, -6, 6);
        CHECK(det(A) == leibniz(A));
    }
}

TEST_CASE("HNF: U A = H, U unimodular, echelon with reduced pivots") {
    for (int t = 0; t < 60; ++t) {
        auto A = random_mat(rnd(1, 5), rnd(1, 5), -9, 9);
        auto h = hermite_normal_form(A);
        CHECK(h.U * A == h.H);
        CHECK(unimodular(h.U));
        CHECK(h.rank == rank(A));
        std::size_t last = 0;
        for (std::size_t i = 0; i < h.rank; ++i) {
            std::size_t p = 0;
            while (h.H(i, p) == 0) ++p;
            if (i) CHECK(p > last);
            CHECK(h.H(i, p) > 0);
            for (std::size_t k = 0; k < i; ++k) CHECK((h.H(k, p) >= 0 && h.H(k, p) < h.H(i, p)));
            last = p;
        }
        for (std::size_t i = h.rank; i < h.H.rows; ++i) CHECK(h.H.row(i) == IVec(h.H.cols));
    }
}

TEST_CASE("SNF: left A right = diag with divisibility") {
    for (int t = 0; t < 60; ++t) {
        auto A = random_mat(rnd(1, 5), rnd(1, 5), -9, 9);
        auto s = smith_normal_form(A);
        CHECK(s.left * A * s.right == diag(s.d, A.rows, A.cols));
        CHECK(unimodular(s.left));
        CHECK(unimodular(s.right));
        CHECK(s.d.size() == rank(A));
        for (std::size_t i = 0; i < s.d.size(); ++i) {
            CHECK(s.d[i] > 0);
            if (i + 1 < s.d.size()) CHECK(s.d[i + 1] % s.d[i] == 0);
        }
    }
}

TEST_CASE("SNF invariant factor product matches gcd of maximal minors") {
    for (int t = 0; t < 30; ++t) {
        auto A = random_mat(2, 3, -7, 7);
        auto s = smith_normal_form(A);
        if (s.d.size() < 2) continue;
        Int g = 0;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b) {
                Int m = A(0, a) * A(1, b) - A(0, b) * A(1, a);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
            }
        CHECK(s.d[0] * s.d[1] == g);
    }
}

TEST_CASE("kernel basis is a saturated basis of the kernel") {
    for (int t = 0; t < 40; ++t) {
        auto A = random_mat(rnd(1, 3), rnd(2, 4), -5, 5);
        auto K = kernel_basis(A);
        CHECK(K.cols == A.cols - rank(A));
        if (K.cols == 0) continue;
        CHECK((A * K).is_zero());
        auto s = smith_normal_form(K);
        for (auto& d : s.d) CHECK(d == 1);
        // every kernel point in a small box is an integral combination
        for (auto& v : box(A.cols, -3, 3))
            if (is_zero(A * v)) CHECK(solve_integral(K, v).has_value());
    }
}

TEST_CASE("cokernel: projection kills the image and is onto") {
    auto div = Mat::from_rows(fixtures::f1_rays(), 2);
    auto ck = cokernel_presentation(div);
    CHECK(ck.free_rank == 2);
    CHECK((ck.projection * div).is_zero());
    Mat sq{{2, 0}, {0, 6}};
    auto c2 = cokernel_presentation(sq);
    CHECK(c2.free_rank == 0);
    CHECK(c2.torsion == ivec({2, 6}));
}

TEST_CASE("solve_integral agrees with a box search") {
    for (int t = 0; t < 40; ++t) {
        auto A = random_mat(2, 3, -3, 3);
        auto b = random_vec(2, -4, 4);
        bool any = false;
        for (auto& x : box(3, -6, 6))
            if (A * x == b) any = true;
        auto s = solve_integral(A, b);
        if (s) CHECK(A * *s == b);
        if (any) CHECK(s.has_value());
    }
}

TEST_CASE("lattice membership") {
    Mat B = lattice_basis({ivec({2, 0}), ivec({1, 3})}, 2);
    CHECK(in_lattice(B, ivec({3, 3})));
    CHECK(!in_lattice(B, ivec({1, 0})));
    auto S = saturation_basis({ivec({2, 0}), ivec({0, 2})}, 2);
    CHECK(in_lattice(S, ivec({1, 0})));
}

TEST_CASE("HNF is idempotent") {
    for (int t = 0; t < 40; ++t) {
        auto H = hermite_normal_form(random_mat(rnd(1, 4), rnd(1, 4), -9, 9)).H;
        CHECK(hermite_normal_form(H).H == H);
    }
}

TEST_CASE("cokernel torsion order is the product of nontrivial invariant factors") {
    for (int t = 0; t < 40; ++t) {
        auto A = random_mat(rnd(1, 4), rnd(1, 4), -6, 6);
        auto ck = cokernel_presentation(A);
        // free rows vanish on the image, torsion rows vanish mod their order
        auto PA = ck.projection * A;
        for (std::size_t i = 0; i < PA.rows; ++i)
            for (std::size_t j = 0; j < PA.cols; ++j) {
                if (i < ck.free_rank) CHECK(PA(i, j) == 0);
                else CHECK(PA(i, j) % ck.torsion[i - ck.free_rank] == 0);
            }
        Int a = 1, b = 1;
        for (auto& x : ck.torsion) a *= x;
        for (auto& x : smith_normal_form(A).d) b *= x;
        CHECK(a == b);
        CHECK(ck.free_rank == A.rows - rank(A));
    }
}

}
