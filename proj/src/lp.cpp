#include "toricq/lp.hpp"

namespace tq {

namespace {

struct Tableau {
    std::size_t m, n; // rows, columns (without rhs)
    std::vector<QVec> t; // m rows of n+1 entries, last = rhs
    std::vector<std::size_t> basis;

    void pivot(std::size_t r, std::size_t c) {
        Rat inv = 1 / t[r][c];
        for (auto& x : t[r]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rat f = t[i][c];
            for (std::size_t j = 0; j <= n; ++j)
                if (t[r][j] != 0) t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // minimize cost.x over current tableau; allowed[j] false keeps column out of the basis
    bool run(const QVec& cost, const std::vector<bool>& allowed) {
        for (;;) {
            // reduced costs
            std::size_t enter = n;
            for (std::size_t j = 0; j < n && enter == n; ++j) {
                if (!allowed[j]) continue;
                Rat rc = cost[j];
                for (std::size_t i = 0; i < m; ++i)
                    if (t[i][j] != 0) rc -= cost[basis[i]] * t[i][j];
                if (rc < 0) enter = j;
            }
            if (enter == n) return true;
            std::size_t leave = m;
            Rat best;
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rat ratio = t[i][n] / t[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

LPResult solve_lp(const LP& lp) {
    // column layout: for each var x+ (and x- if free), then one slack per inequality, then artificials
    std::vector<std::size_t> pos(lp.nvars), neg(lp.nvars, SIZE_MAX);
    std::size_t n = 0;
    for (std::size_t j = 0; j < lp.nvars; ++j) {
        pos[j] = n++;
        if (lp.free_var[j]) neg[j] = n++;
    }
    std::size_t m = lp.rows.size();
    std::size_t nslack = 0;
    for (auto& r : lp.rows)
        if (r.s != LP::EQ) ++nslack;
    std::size_t art0 = n + nslack;
    std::size_t ntot = art0 + m;

    Tableau T;
    T.m = m;
    T.n = ntot;
    T.t.assign(m, QVec(ntot + 1));
    T.basis.resize(m);
    std::size_t s = n;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& r = lp.rows[i];
        QVec& row = T.t[i];
        for (std::size_t j = 0; j < lp.nvars; ++j) {
            row[pos[j]] = r.a[j];
            if (neg[j] != SIZE_MAX) row[neg[j]] = -r.a[j];
        }
        if (r.s == LP::LE) row[s++] = 1;
        else if (r.s == LP::GE) row[s++] = -1;
        row[ntot] = r.b;
        if (row[ntot] < 0)
            for (auto& x : row) x = -x;
        row[art0 + i] = 1;
        T.basis[i] = art0 + i;
    }

    std::vector<bool> allowed(ntot, true);
    QVec c1(ntot);
    for (std::size_t i = 0; i < m; ++i) c1[art0 + i] = 1;
    T.run(c1, allowed);
    Rat infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (T.basis[i] >= art0) infeas += T.t[i][ntot];
    LPResult res;
    if (infeas != 0) {
        res.status = LPResult::Infeasible;
        return res;
    }
    // drive remaining artificials out of the basis where possible
    for (std::size_t i = 0; i < m; ++i) {
        if (T.basis[i] < art0) continue;
        for (std::size_t j = 0; j < art0; ++j)
            if (T.t[i][j] != 0) {
                T.pivot(i, j);
                break;
            }
    }
    for (std::size_t j = art0; j < ntot; ++j) allowed[j] = false;

    QVec c2(ntot);
    for (std::size_t j = 0; j < lp.nvars; ++j) {
        c2[pos[j]] = lp.obj[j];
        if (neg[j] != SIZE_MAX) c2[neg[j]] = -lp.obj[j];
    }
    if (!T.run(c2, allowed)) {
        res.status = LPResult::Unbounded;
        return res;
    }
    QVec y(ntot);
    for (std::size_t i = 0; i < m; ++i) y[T.basis[i]] = T.t[i][ntot];
    res.x.assign(lp.nvars, Rat(0));
    for (std::size_t j = 0; j < lp.nvars; ++j) {
        res.x[j] = y[pos[j]];
        if (neg[j] != SIZE_MAX) res.x[j] -= y[neg[j]];
    }
    res.value = dot(lp.obj, res.x);
    res.status = LPResult::Optimal;
    return res;
}

std::optional<QVec> relative_interior_point(const std::vector<IVec>& strict, const std::vector<IVec>& weak,
                                            const std::vector<IVec>& eq, std::size_t dim) {
    // maximize t with strict.x >= t, t <= 1
    LP lp(dim + 1, true);
    auto ext = [&](const IVec& a, const Rat& tc) {
        QVec q(dim + 1);
        for (std::size_t j = 0; j < dim; ++j) q[j] = a[j];
        q[dim] = tc;
        return q;
    };
    for (auto& a : strict) lp.add(ext(a, -1), LP::GE, 0);
    for (auto& a : weak) lp.add(ext(a, 0), LP::GE, 0);
    for (auto& a : eq) lp.add(ext(a, 0), LP::EQ, 0);
    QVec tt(dim + 1);
    tt[dim] = 1;
    lp.add(tt, LP::LE, 1);
    lp.obj[dim] = -1;
    auto r = solve_lp(lp);
    if (r.status != LPResult::Optimal) return std::nullopt;
    if (!strict.empty() && r.x[dim] <= 0) return std::nullopt;
    r.x.pop_back();
    return r.x;
}

} // namespace tq
