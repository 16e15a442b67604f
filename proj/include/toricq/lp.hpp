#pragma once

#include "toricq/latcore.hpp"

namespace tq {

// Exact rational LP, dense two-phase simplex with Bland's rule.
// minimize obj.x subject to rows; variables >= 0 unless marked free.
struct LP {
    enum Sense { LE, GE, EQ };
    struct Row {
        QVec a;
        Sense s;
        Rat b;
    };
    std::size_t nvars = 0;
    std::vector<bool> free_var;
    std::vector<Row> rows;
    QVec obj;

    explicit LP(std::size_t n, bool all_free = false) : nvars(n), free_var(n, all_free), obj(n) {}
    void add(QVec a, Sense s, Rat b) { rows.push_back({std::move(a), s, std::move(b)}); }
    void add(const IVec& a, Sense s, const Rat& b) { rows.push_back({to_q(a), s, b}); }
};

struct LPResult {
    enum Status { Optimal, Infeasible, Unbounded } status = Infeasible;
    Rat value;
    QVec x;
};

LPResult solve_lp(const LP& lp);

// point satisfying strict[i].x > 0, weak[i].x >= 0, eq[i].x = 0, if any (free variables)
std::optional<QVec> relative_interior_point(const std::vector<IVec>& strict, const std::vector<IVec>& weak,
                                            const std::vector<IVec>& eq, std::size_t dim);

} // namespace tq
