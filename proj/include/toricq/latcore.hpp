#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tq {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// thrown for malformed input (maps to CLI exit 1)
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// thrown when a computation cannot proceed (exit 2)
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer matrix, row-major. Doubles as a lattice map Z^cols -> Z^rows.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Mat(std::initializer_list<std::initializer_list<long>> init);

    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<IVec>& rs, std::size_t ncols);
    static Mat from_cols(const std::vector<IVec>& cs, std::size_t nrows);

    IVec row(std::size_t i) const;
    IVec col(std::size_t j) const;
    std::vector<IVec> row_list() const;
    std::vector<IVec> col_list() const;
    Mat transpose() const;
    bool is_zero() const;
    std::string str() const;

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using LatticeMap = Mat;

Mat operator*(const Mat& A, const Mat& B);
IVec operator*(const Mat& A, const IVec& x);
QVec mul(const Mat& A, const QVec& x);

// small vector helpers
IVec ivec(std::initializer_list<long> xs);
IVec to_ivec(const std::vector<long>& xs);
Int dot(const IVec& u, const IVec& v);
Rat dot(const QVec& u, const QVec& v);
Rat dot(const IVec& u, const QVec& v);
IVec add(const IVec& u, const IVec& v);
IVec sub(const IVec& u, const IVec& v);
IVec scale(const Int& c, const IVec& v);
bool is_zero(const IVec& v);
Int content(const IVec& v);        // gcd of entries, >= 0
IVec primitive(const IVec& v);     // divide by content
IVec primitive(const QVec& v);     // clear denominators, then divide by content
QVec to_q(const IVec& v);
std::string str(const IVec& v);
std::string str(const QVec& v);

// row-style HNF: U*A = H, U unimodular
struct HNF {
    Mat H, U;
    std::size_t rank = 0;
};
HNF hermite_normal_form(const Mat& A);

struct SmithData {
    IVec d;          // nonzero invariant factors, d[i] | d[i+1]
    Mat left, right; // left*A*right = diag(d) padded with zeros
};
SmithData smith_normal_form(const Mat& A);

std::size_t rank(const Mat& A);
Int det(const Mat& A); // square only; exact via fraction-free elimination

// columns form the HNF-canonical basis of {x : A x = 0}
Mat kernel_basis(const Mat& A);

struct Cokernel {
    std::size_t free_rank = 0;
    IVec torsion;   // orders > 1
    Mat projection; // first free_rank rows free coords, then one row per torsion factor
};
Cokernel cokernel_presentation(const Mat& A);

std::optional<IVec> solve_integral(const Mat& A, const IVec& b);

// rational linear algebra helpers used by the geometry modules
std::optional<QVec> solve_rational(const Mat& A, const QVec& b); // unique solution if full column rank, else any
Mat saturation_basis(const std::vector<IVec>& gens, std::size_t dim); // basis (rows) of span(gens) ∩ Z^dim
Mat lattice_basis(const std::vector<IVec>& gens, std::size_t dim);    // HNF basis (rows) of Z-span(gens)
bool in_lattice(const Mat& basis_rows, const IVec& v, IVec* coords = nullptr);

} // namespace tq
