#include "toricq/latcore.hpp"

#include <algorithm>
#include <sstream>

namespace tq {

Mat::Mat(std::initializer_list<std::initializer_list<long>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    a.reserve(rows * cols);
    for (auto& r : init) {
        if (r.size() != cols) throw ValidationError("ragged matrix literal");
        for (long x : r) a.emplace_back(x);
    }
}

Mat Mat::identity(std::size_t n) {
    Mat I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

Mat Mat::from_rows(const std::vector<IVec>& rs, std::size_t ncols) {
    Mat M(rs.size(), ncols);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].size() != ncols) throw ValidationError("row length mismatch");
        for (std::size_t j = 0; j < ncols; ++j) M(i, j) = rs[i][j];
    }
    return M;
}

Mat Mat::from_cols(const std::vector<IVec>& cs, std::size_t nrows) {
    Mat M(nrows, cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j].size() != nrows) throw ValidationError("column length mismatch");
        for (std::size_t i = 0; i < nrows; ++i) M(i, j) = cs[j][i];
    }
    return M;
}

IVec Mat::row(std::size_t i) const { return IVec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }

IVec Mat::col(std::size_t j) const {
    IVec c(rows);
    for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<IVec> Mat::row_list() const {
    std::vector<IVec> out;
    for (std::size_t i = 0; i < rows; ++i) out.push_back(row(i));
    return out;
}

std::vector<IVec> Mat::col_list() const {
    std::vector<IVec> out;
    for (std::size_t j = 0; j < cols; ++j) out.push_back(col(j));
    return out;
}

Mat Mat::transpose() const {
    Mat T(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) T(j, i) = (*this)(i, j);
    return T;
}

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows; ++i) {
        os << (i ? "," : "") << tq::str(row(i));
    }
    os << "]";
    return os.str();
}

Mat operator*(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw ValidationError("matrix product: shape mismatch");
    Mat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Int& x = A(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C(i, j) += x * B(k, j);
        }
    return C;
}

IVec operator*(const Mat& A, const IVec& x) {
    if (A.cols != x.size()) throw ValidationError("matrix-vector product: shape mismatch");
    IVec y(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            if (x[j] != 0) y[i] += A(i, j) * x[j];
    return y;
}

QVec mul(const Mat& A, const QVec& x) {
    if (A.cols != x.size()) throw ValidationError("matrix-vector product: shape mismatch");
    QVec y(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            if (x[j] != 0) y[i] += Rat(A(i, j)) * x[j];
    return y;
}

IVec ivec(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

IVec to_ivec(const std::vector<long>& xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Int dot(const IVec& u, const IVec& v) {
    Int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Rat dot(const QVec& u, const QVec& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Rat dot(const IVec& u, const QVec& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += Rat(u[i]) * v[i];
    return s;
}

IVec add(const IVec& u, const IVec& v) {
    IVec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
    return w;
}

IVec sub(const IVec& u, const IVec& v) {
    IVec w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
    return w;
}

IVec scale(const Int& c, const IVec& v) {
    IVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = c * v[i];
    return w;
}

bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int content(const IVec& v) {
    Int g = 0;
    for (auto& x : v) g = gcd(g, x);
    return g;
}

IVec primitive(const IVec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    IVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
    return w;
}

IVec primitive(const QVec& v) {
    Int l = 1;
    for (auto& x : v) l = lcm(l, Int(x.get_den()));
    IVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat y = v[i] * l;
        w[i] = y.get_num();
    }
    return primitive(w);
}

QVec to_q(const IVec& v) {
    QVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
    return w;
}

std::string str(const IVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

std::string str(const QVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

namespace {

void swap_rows(Mat& M, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < M.cols; ++k) std::swap(M(i, k), M(j, k));
}

void swap_cols(Mat& M, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < M.rows; ++k) std::swap(M(k, i), M(k, j));
}

// row_i -= q * row_j
void axpy_row(Mat& M, std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < M.cols; ++k)
        if (M(j, k) != 0) M(i, k) -= q * M(j, k);
}

void axpy_col(Mat& M, std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < M.rows; ++k)
        if (M(k, j) != 0) M(k, i) -= q * M(k, j);
}

void negate_row(Mat& M, std::size_t i) {
    for (std::size_t k = 0; k < M.cols; ++k) M(i, k) = -M(i, k);
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

HNF hermite_normal_form(const Mat& A) {
    HNF out;
    out.H = A;
    out.U = Mat::identity(A.rows);
    Mat& H = out.H;
    Mat& U = out.U;
    std::size_t r = 0;
    for (std::size_t j = 0; j < A.cols && r < A.rows; ++j) {
        bool have = false;
        for (;;) {
            std::size_t p = A.rows;
            for (std::size_t i = r; i < A.rows; ++i)
                if (H(i, j) != 0 && (p == A.rows || abs(H(i, j)) < abs(H(p, j)))) p = i;
            if (p == A.rows) break;
            have = true;
            swap_rows(H, r, p);
            swap_rows(U, r, p);
            bool clean = true;
            for (std::size_t i = r + 1; i < A.rows; ++i) {
                if (H(i, j) == 0) continue;
                Int q = H(i, j) / H(r, j); // truncating is enough, min-abs pivot guarantees progress
                axpy_row(H, i, r, q);
                axpy_row(U, i, r, q);
                if (H(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!have) continue;
        if (H(r, j) < 0) {
            negate_row(H, r);
            negate_row(U, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(H(i, j), H(r, j));
            axpy_row(H, i, r, q);
            axpy_row(U, i, r, q);
        }
        ++r;
    }
    out.rank = r;
    return out;
}

SmithData smith_normal_form(const Mat& A) {
    Mat D = A;
    Mat L = Mat::identity(A.rows), R = Mat::identity(A.cols);
    std::size_t m = A.rows, n = A.cols;
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // pivot: smallest nonzero entry of the trailing block
        auto bring_min = [&]() -> bool {
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) pi = i, pj = j;
            if (pi == m) return false;
            swap_rows(D, t, pi);
            swap_rows(L, t, pi);
            swap_cols(D, t, pj);
            swap_cols(R, t, pj);
            return true;
        };
        if (!bring_min()) break;
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                Int q = D(i, t) / D(t, t);
                axpy_row(D, i, t, q);
                axpy_row(L, i, t, q);
                if (D(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Int q = D(t, j) / D(t, t);
                axpy_col(D, j, t, q);
                axpy_col(R, j, t, q);
                if (D(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // a remainder is smaller than the pivot; move it in and go again
                std::size_t pi = t, pj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (D(i, t) != 0 && abs(D(i, t)) < abs(D(pi, pj))) pi = i, pj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(t, j) != 0 && abs(D(t, j)) < abs(D(pi, pj))) pi = t, pj = j;
                swap_rows(D, t, pi);
                swap_rows(L, t, pi);
                swap_cols(D, t, pj);
                swap_cols(R, t, pj);
                continue;
            }
            // divisibility of the remaining block
            std::size_t bi = m;
            for (std::size_t i = t + 1; i < m && bi == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi == m) break;
            axpy_row(D, t, bi, Int(-1));
            axpy_row(L, t, bi, Int(-1));
        }
        if (D(t, t) < 0) {
            negate_row(D, t);
            negate_row(L, t);
        }
    }
    SmithData s;
    for (std::size_t i = 0; i < std::min(m, n); ++i)
        if (D(i, i) != 0) s.d.push_back(D(i, i));
    s.left = std::move(L);
    s.right = std::move(R);
    return s;
}

std::size_t rank(const Mat& A) { return hermite_normal_form(A).rank; }

Int det(const Mat& A) {
    if (A.rows != A.cols) throw ValidationError("det of non-square matrix");
    std::size_t n = A.rows;
    if (n == 0) return 1;
    Mat M = A;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(M, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M(i, j) = v;
            }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

Mat kernel_basis(const Mat& A) {
    HNF h = hermite_normal_form(A.transpose());
    std::size_t n = A.cols;
    std::vector<IVec> ker;
    for (std::size_t i = h.rank; i < n; ++i) ker.push_back(h.U.row(i));
    if (ker.empty()) return Mat(n, 0);
    HNF c = hermite_normal_form(Mat::from_rows(ker, n));
    std::vector<IVec> basis;
    for (std::size_t i = 0; i < c.rank; ++i) basis.push_back(c.H.row(i));
    return Mat::from_cols(basis, n);
}

Cokernel cokernel_presentation(const Mat& A) {
    SmithData s = smith_normal_form(A);
    std::size_t r = s.d.size();
    Cokernel out;
    std::vector<IVec> free_rows, tors_rows;
    for (std::size_t i = r; i < A.rows; ++i) free_rows.push_back(s.left.row(i));
    for (std::size_t i = 0; i < r; ++i) {
        if (s.d[i] == 1) continue;
        IVec row = s.left.row(i);
        for (auto& x : row) {
            x %= s.d[i];
            if (x < 0) x += s.d[i];
        }
        tors_rows.push_back(row);
        out.torsion.push_back(s.d[i]);
    }
    out.free_rank = free_rows.size();
    std::vector<IVec> rows;
    if (!free_rows.empty()) {
        HNF h = hermite_normal_form(Mat::from_rows(free_rows, A.rows));
        for (std::size_t i = 0; i < h.rank; ++i) rows.push_back(h.H.row(i));
    }
    for (auto& t : tors_rows) rows.push_back(t);
    out.projection = Mat::from_rows(rows, A.rows);
    return out;
}

std::optional<IVec> solve_integral(const Mat& A, const IVec& b) {
    if (b.size() != A.rows) throw ValidationError("solve_integral: length(b) != rows(A)");
    HNF h = hermite_normal_form(A.transpose()); // U * A^T = H, H is cols(A) x rows(A)
    const Mat& H = h.H;
    std::size_t n = A.cols, m = A.rows;
    IVec z(n);
    IVec resid = b;
    std::size_t col = 0;
    for (std::size_t k = 0; k < h.rank; ++k) {
        while (col < m && H(k, col) == 0) ++col;
        if (resid[col] % H(k, col) != 0) return std::nullopt;
        z[k] = resid[col] / H(k, col);
        for (std::size_t j = 0; j < m; ++j) resid[j] -= z[k] * H(k, j);
        ++col;
    }
    if (!is_zero(resid)) return std::nullopt;
    return h.U.transpose() * z;
}

std::optional<QVec> solve_rational(const Mat& A, const QVec& b) {
    std::size_t m = A.rows, n = A.cols;
    std::vector<QVec> M(m, QVec(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = A(i, j);
        M[i][n] = b[i];
    }
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        std::size_t p = r;
        while (p < m && M[p][j] == 0) ++p;
        if (p == m) continue;
        std::swap(M[p], M[r]);
        Rat inv = 1 / M[r][j];
        for (auto& x : M[r]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || M[i][j] == 0) continue;
            Rat f = M[i][j];
            for (std::size_t k = j; k <= n; ++k) M[i][k] -= f * M[r][k];
        }
        piv.push_back(j);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (M[i][n] != 0) return std::nullopt;
    QVec x(n);
    for (std::size_t k = 0; k < r; ++k) x[piv[k]] = M[k][n];
    return x;
}

Mat saturation_basis(const std::vector<IVec>& gens, std::size_t dim) {
    if (gens.empty()) return Mat(0, dim);
    Mat G = Mat::from_rows(gens, dim);
    Mat K = kernel_basis(G); // dim x k, columns span the orthogonal complement
    Mat S = kernel_basis(K.transpose());
    return S.transpose();
}

Mat lattice_basis(const std::vector<IVec>& gens, std::size_t dim) {
    if (gens.empty()) return Mat(0, dim);
    HNF h = hermite_normal_form(Mat::from_rows(gens, dim));
    std::vector<IVec> rows;
    for (std::size_t i = 0; i < h.rank; ++i) rows.push_back(h.H.row(i));
    return Mat::from_rows(rows, dim);
}

bool in_lattice(const Mat& basis_rows, const IVec& v, IVec* coords) {
    auto c = solve_integral(basis_rows.transpose(), v);
    if (!c) return false;
    if (coords) *coords = *c;
    return true;
}

} // namespace tq
