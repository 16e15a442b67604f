#include "toricq/polycone.hpp"
#include "toricq/lp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tq {

std::vector<IVec> sort_unique(std::vector<IVec> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

namespace {

// incremental rational row echelon, used to enumerate independent row subsets
struct Echelon {
    std::vector<QVec> rows;
    std::vector<std::size_t> piv;

    // returns false if v is dependent on the current rows
    bool push(const IVec& v) {
        QVec r = to_q(v);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (r[piv[k]] == 0) continue;
            Rat f = r[piv[k]] / rows[k][piv[k]];
            for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * rows[k][j];
        }
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j] != 0) {
                rows.push_back(std::move(r));
                piv.push_back(j);
                return true;
            }
        return false;
    }
    std::size_t size() const { return rows.size(); }
};

std::vector<IVec> hnf_rows(const std::vector<IVec>& rows, std::size_t dim) {
    if (rows.empty()) return {};
    HNF h = hermite_normal_form(Mat::from_rows(rows, dim));
    std::vector<IVec> out;
    for (std::size_t i = 0; i < h.rank; ++i) out.push_back(h.H.row(i));
    return out;
}

// V-representation of {x : A x >= 0, E x = 0}
void vrep_of_hcone(std::size_t dim, const std::vector<IVec>& A, const std::vector<IVec>& E,
                   std::vector<IVec>& rays, std::vector<IVec>& lin) {
    std::vector<IVec> AE = A;
    AE.insert(AE.end(), E.begin(), E.end());
    if (AE.empty()) {
        lin = Mat::identity(dim).row_list();
        rays.clear();
        return;
    }
    Mat K = kernel_basis(Mat::from_rows(AE, dim));
    lin = K.transpose().row_list();
    std::vector<IVec> base = E;
    base.insert(base.end(), lin.begin(), lin.end());
    Echelon ech;
    for (auto& b : base) ech.push(b);
    rays.clear();
    if (ech.size() >= dim) return;
    std::size_t need = dim - 1 - ech.size();
    std::set<IVec> found;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, Echelon&)> rec = [&](std::size_t start, Echelon& e) {
        if (chosen.size() == need) {
            std::vector<IVec> rowsS = base;
            for (auto i : chosen) rowsS.push_back(A[i]);
            Mat Ks = kernel_basis(Mat::from_rows(rowsS, dim));
            if (Ks.cols != 1) return;
            IVec r = Ks.col(0);
            bool pos = true, neg = true;
            for (auto& a : A) {
                Int s = dot(a, r);
                if (s < 0) pos = false;
                if (s > 0) neg = false;
            }
            if (pos) found.insert(primitive(r));
            else if (neg) found.insert(primitive(scale(Int(-1), r)));
            return;
        }
        for (std::size_t i = start; i + (need - chosen.size()) <= A.size(); ++i) {
            Echelon e2 = e;
            if (!e2.push(A[i])) continue;
            chosen.push_back(i);
            rec(i + 1, e2);
            chosen.pop_back();
        }
    };
    rec(0, ech);
    rays.assign(found.begin(), found.end());
}

Cone finish(std::size_t dim, std::vector<IVec> rays, std::vector<IVec> lin) {
    Cone c;
    c.dim = dim;
    c.rays = sort_unique(std::move(rays));
    c.lineality = hnf_rows(lin, dim);
    std::vector<IVec> F, Eq;
    vrep_of_hcone(dim, c.rays, c.lineality, F, Eq);
    c.facets = F;
    c.equations = hnf_rows(Eq, dim);
    return c;
}

QVec mat_inverse_col(const Mat& M, std::size_t j) {
    QVec e(M.rows);
    e[j] = 1;
    auto x = solve_rational(M, e);
    if (!x) throw ComputeError("singular matrix");
    return *x;
}

std::vector<QVec> inverse_cols(const Mat& M) {
    std::vector<QVec> out;
    for (std::size_t j = 0; j < M.rows; ++j) out.push_back(mat_inverse_col(M, j));
    return out;
}

} // namespace

Cone Cone::from_generators(std::size_t dim, const std::vector<IVec>& gens) {
    for (auto& g : gens)
        if (g.size() != dim) throw ValidationError("cone generator has wrong length");
    std::vector<IVec> F, Eq;
    vrep_of_hcone(dim, gens, {}, F, Eq);
    std::vector<IVec> R, L;
    vrep_of_hcone(dim, F, Eq, R, L);
    Cone c;
    c.dim = dim;
    c.rays = sort_unique(R);
    c.lineality = hnf_rows(L, dim);
    c.facets = sort_unique(F);
    c.equations = hnf_rows(Eq, dim);
    return c;
}

Cone Cone::from_inequalities(std::size_t dim, const std::vector<IVec>& ineq, const std::vector<IVec>& eq) {
    std::vector<IVec> R, L;
    vrep_of_hcone(dim, ineq, eq, R, L);
    return finish(dim, R, L);
}

std::vector<IVec> Cone::generators() const {
    std::vector<IVec> g = rays;
    for (auto& l : lineality) {
        g.push_back(l);
        g.push_back(scale(Int(-1), l));
    }
    return g;
}

bool Cone::contains(const IVec& v) const {
    for (auto& f : facets)
        if (dot(f, v) < 0) return false;
    for (auto& e : equations)
        if (dot(e, v) != 0) return false;
    return true;
}

bool Cone::contains(const QVec& v) const {
    for (auto& f : facets)
        if (dot(f, v) < 0) return false;
    for (auto& e : equations)
        if (dot(e, v) != 0) return false;
    return true;
}

bool Cone::contains_interior(const IVec& v) const {
    for (auto& f : facets)
        if (dot(f, v) <= 0) return false;
    for (auto& e : equations)
        if (dot(e, v) != 0) return false;
    return true;
}

Cone dual_cone(const Cone& c) {
    Cone d;
    d.dim = c.dim;
    d.rays = sort_unique(c.facets);
    d.lineality = c.equations;
    d.facets = c.rays;
    d.equations = c.lineality;
    return d;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.dim != b.dim) throw ValidationError("cone intersection: dimension mismatch");
    std::vector<IVec> ineq = a.facets, eq = a.equations;
    ineq.insert(ineq.end(), b.facets.begin(), b.facets.end());
    eq.insert(eq.end(), b.equations.begin(), b.equations.end());
    return Cone::from_inequalities(a.dim, ineq, eq);
}

bool is_face(const Cone& face, const Cone& c) {
    auto g = face.generators();
    for (auto& v : g)
        if (!c.contains(v)) return false;
    IVec w(c.dim);
    for (auto& n : c.facets) {
        bool vanish = std::all_of(g.begin(), g.end(), [&](const IVec& v) { return dot(n, v) == 0; });
        if (vanish) w = add(w, n);
    }
    std::vector<IVec> fg;
    for (auto& r : c.rays)
        if (dot(w, r) == 0) fg.push_back(r);
    for (auto& l : c.lineality) {
        fg.push_back(l);
        fg.push_back(scale(Int(-1), l));
    }
    return Cone::from_generators(c.dim, fg) == face;
}

std::vector<Cone> facets_of(const Cone& c) {
    std::vector<Cone> out;
    for (auto& n : c.facets) {
        std::vector<IVec> fg;
        for (auto& r : c.rays)
            if (dot(n, r) == 0) fg.push_back(r);
        for (auto& l : c.lineality) {
            fg.push_back(l);
            fg.push_back(scale(Int(-1), l));
        }
        out.push_back(Cone::from_generators(c.dim, fg));
    }
    return out;
}

std::vector<IVec> hilbert_basis(const Cone& c) {
    if (!c.strongly_convex()) throw ValidationError("hilbert_basis: cone is not strongly convex");
    return hilbert_basis(c, saturation_basis(c.rays, c.dim));
}

std::vector<IVec> hilbert_basis(const Cone& c, const Mat& lattice_rows) {
    if (!c.strongly_convex()) throw ValidationError("hilbert_basis: cone is not strongly convex");
    if (c.rays.empty()) return {};
    Mat B = lattice_rows;
    Mat Bt = B.transpose();
    std::size_t k = B.rows;
    auto coords = [&](const IVec& r) {
        auto x = solve_rational(Bt, to_q(r));
        if (!x || mul(Bt, *x) != to_q(r)) throw ValidationError("hilbert_basis: ray outside the lattice span");
        return primitive(*x);
    };
    std::vector<IVec> R;
    for (auto& r : c.rays) R.push_back(coords(r));
    if (rank(Mat::from_rows(R, k)) < k) {
        Mat S = saturation_basis(R, k);
        B = S * B;
        Bt = B.transpose();
        k = B.rows;
        R.clear();
        for (auto& r : c.rays) R.push_back(coords(r));
    }
    Cone C = Cone::from_generators(k, R);
    R = C.rays;

    // pulling triangulation
    std::vector<std::vector<IVec>> simplices;
    std::function<void(const Cone&, std::vector<IVec>)> tri = [&](const Cone& cc, std::vector<IVec> apex) {
        if (cc.rays.size() == cc.cone_dim()) {
            auto s = apex;
            s.insert(s.end(), cc.rays.begin(), cc.rays.end());
            simplices.push_back(s);
            return;
        }
        const IVec& r0 = cc.rays[0];
        apex.push_back(r0);
        for (auto& f : facets_of(cc)) {
            if (f.contains(r0)) continue;
            tri(f, apex);
        }
    };
    tri(C, {});

    std::set<IVec> cand(R.begin(), R.end());
    for (auto& s : simplices) {
        Mat G = Mat::from_cols(s, k);
        Int D = abs(det(G));
        if (D == 1) continue;
        if (D > 2000000) throw ComputeError("hilbert_basis: simplicial cone determinant too large");
        SmithData sd = smith_normal_form(G);
        auto Linv = inverse_cols(sd.left);
        auto Ginv = inverse_cols(G);
        std::vector<Int> mods = sd.d;
        std::vector<Int> e(k, Int(0));
        // walk all elements of Z^k / G Z^k
        for (;;) {
            QVec x(k);
            for (std::size_t i = 0; i < k; ++i)
                if (e[i] != 0)
                    for (std::size_t j = 0; j < k; ++j) x[j] += Linv[i][j] * e[i];
            QVec lam(k);
            for (std::size_t i = 0; i < k; ++i)
                if (x[i] != 0)
                    for (std::size_t j = 0; j < k; ++j) lam[j] += Ginv[i][j] * x[i];
            IVec p(k);
            bool nz = false;
            for (std::size_t j = 0; j < k; ++j) {
                Rat f = lam[j];
                Int fl;
                mpz_fdiv_q(fl.get_mpz_t(), f.get_num_mpz_t(), f.get_den_mpz_t());
                f -= fl;
                if (f != 0) nz = true;
                lam[j] = f;
            }
            if (nz) {
                for (std::size_t i = 0; i < k; ++i) {
                    Rat acc = 0;
                    for (std::size_t j = 0; j < k; ++j) acc += Rat(G(i, j)) * lam[j];
                    p[i] = acc.get_num();
                }
                cand.insert(p);
            }
            std::size_t i = 0;
            for (; i < k; ++i) {
                if (i >= mods.size()) continue;
                e[i] += 1;
                if (e[i] < mods[i]) break;
                e[i] = 0;
            }
            if (i >= k) break;
        }
    }

    IVec w(k);
    for (auto& f : C.facets) w = add(w, f);
    std::vector<std::pair<Int, IVec>> byDeg;
    for (auto& x : cand) byDeg.push_back({dot(w, x), x});
    std::sort(byDeg.begin(), byDeg.end());
    std::vector<IVec> basis;
    for (auto& [dg, x] : byDeg) {
        bool red = false;
        for (auto& y : basis) {
            if (dot(w, y) >= dg) continue;
            if (C.contains(sub(x, y))) {
                red = true;
                break;
            }
        }
        if (!red) basis.push_back(x);
    }
    std::vector<IVec> out;
    for (auto& b : basis) out.push_back(Bt * b);
    return sort_unique(out);
}

VRep vertices_and_rays(const RationalPolyhedron& p) {
    std::size_t d = p.dim;
    std::vector<IVec> normals;
    for (auto& [a, b] : p.ineqs) {
        if (a.size() != d) throw ValidationError("polyhedron inequality has wrong length");
        normals.push_back(a);
    }
    VRep out;
    out.rays = Cone::from_inequalities(d, normals);
    if (!out.rays.strongly_convex()) throw ComputeError("polyhedron has lineality; no vertices");
    std::set<QVec> verts;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, Echelon&)> rec = [&](std::size_t start, Echelon& e) {
        if (chosen.size() == d) {
            Mat A(d, d);
            QVec b(d);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) A(i, j) = p.ineqs[chosen[i]].first[j];
                b[i] = -Rat(p.ineqs[chosen[i]].second);
            }
            auto x = solve_rational(A, b);
            if (!x) return;
            for (auto& [a, off] : p.ineqs)
                if (dot(a, *x) < -Rat(off)) return;
            verts.insert(*x);
            return;
        }
        for (std::size_t i = start; i + (d - chosen.size()) <= p.ineqs.size(); ++i) {
            Echelon e2 = e;
            if (!e2.push(p.ineqs[i].first)) continue;
            chosen.push_back(i);
            rec(i + 1, e2);
            chosen.pop_back();
        }
    };
    Echelon e0;
    rec(0, e0);
    if (verts.empty()) {
        if (d == 0) {
            for (auto& [a, off] : p.ineqs)
                if (off < 0) throw ComputeError("empty polyhedron");
            out.vertices.push_back({});
            return out;
        }
        throw ComputeError("empty polyhedron");
    }
    out.vertices.assign(verts.begin(), verts.end());
    return out;
}

std::vector<IVec> Fan::rays() const {
    std::vector<IVec> r;
    for (auto& c : cones) r.insert(r.end(), c.rays.begin(), c.rays.end());
    return sort_unique(r);
}

std::vector<std::vector<std::size_t>> Fan::cone_indices() const {
    auto R = rays();
    std::vector<std::vector<std::size_t>> out;
    for (auto& c : cones) {
        std::vector<std::size_t> ix;
        for (auto& r : c.rays) ix.push_back(std::lower_bound(R.begin(), R.end(), r) - R.begin());
        std::sort(ix.begin(), ix.end());
        out.push_back(ix);
    }
    return out;
}

void Fan::canonicalize() {
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
}

Fan inner_normal_fan(const RationalPolyhedron& p) {
    VRep vr = vertices_and_rays(p);
    Fan f;
    f.dim = p.dim;
    for (auto& v : vr.vertices) {
        std::vector<IVec> tight;
        for (auto& [a, off] : p.ineqs)
            if (dot(a, v) == -Rat(off)) tight.push_back(a);
        Cone c = Cone::from_generators(p.dim, tight);
        if (!c.strongly_convex()) throw ComputeError("normal cone is not strongly convex (polyhedron not full-dimensional)");
        f.cones.push_back(c);
    }
    f.canonicalize();
    validate_fan(f);
    return f;
}

bool fan_is_valid(const Fan& f, std::string* why) {
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        if (!f.cones[i].strongly_convex()) {
            if (why) *why = "cone " + std::to_string(i) + " is not strongly convex";
            return false;
        }
        for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
            // separation: h = 0 on shared rays, h > 0 on the rest of cone i, h < 0 on the rest of cone j
            auto& A = f.cones[i].rays;
            auto& B = f.cones[j].rays;
            std::vector<IVec> strict, eq;
            for (auto& r : A) (std::binary_search(B.begin(), B.end(), r) ? eq : strict).push_back(r);
            for (auto& r : B)
                if (!std::binary_search(A.begin(), A.end(), r)) strict.push_back(scale(Int(-1), r));
            if (!relative_interior_point(strict, {}, eq, f.dim)) {
                if (why) *why = "cones " + std::to_string(i) + " and " + std::to_string(j) + " meet outside a common face";
                return false;
            }
        }
    }
    return true;
}

void validate_fan(const Fan& f) {
    std::string why;
    if (!fan_is_valid(f, &why)) throw ComputeError("invalid fan: " + why);
}

std::optional<Mat> fan_isomorphism(const Fan& F, const Fan& G) {
    if (F.dim != G.dim || F.cones.size() != G.cones.size()) return std::nullopt;
    auto RF = F.rays(), RG = G.rays();
    if (RF.size() != RG.size()) return std::nullopt;
    std::size_t d = F.dim;
    auto CF = F.cone_indices(), CG = G.cone_indices();
    std::set<std::vector<std::size_t>> gset(CG.begin(), CG.end());
    {
        std::multiset<std::size_t> a, b;
        for (auto& c : CF) a.insert(c.size());
        for (auto& c : CG) b.insert(c.size());
        if (a != b) return std::nullopt;
    }
    if (RF.empty()) return d == 0 ? std::optional<Mat>(Mat::identity(0)) : std::nullopt;
    // d independent rays of F, taken from one cone when possible
    std::vector<std::size_t> pick;
    {
        Echelon e;
        for (auto& c : CF)
            if (c.size() >= d) {
                Echelon e2;
                std::vector<std::size_t> p2;
                for (auto i : c)
                    if (e2.push(RF[i])) p2.push_back(i);
                if (p2.size() == d) {
                    pick = p2;
                    break;
                }
            }
        if (pick.empty()) {
            for (std::size_t i = 0; i < RF.size(); ++i)
                if (e.push(RF[i])) pick.push_back(i);
            if (pick.size() < d) throw ComputeError("fan_isomorphism: rays do not span the ambient space");
        }
    }
    Mat Fsel = Mat::from_cols([&] {
        std::vector<IVec> v;
        for (auto i : pick) v.push_back(RF[i]);
        return v;
    }(), d);
    auto Finv = inverse_cols(Fsel); // Finv[j] = column j of Fsel^{-1}
    bool together = false;
    for (auto& c : CF)
        if (std::includes(c.begin(), c.end(), pick.begin(), pick.end())) together = true;

    std::vector<std::size_t> img;
    std::vector<bool> used(RG.size(), false);
    std::optional<Mat> result;
    std::function<void()> rec = [&]() {
        if (result) return;
        if (together && !img.empty()) {
            std::vector<std::size_t> s = img;
            std::sort(s.begin(), s.end());
            bool ok = false;
            for (auto& c : CG)
                if (std::includes(c.begin(), c.end(), s.begin(), s.end())) ok = true;
            if (!ok) return;
        }
        if (img.size() == d) {
            // T = Gsel * Fsel^{-1}
            Mat T(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    Rat acc = 0;
                    for (std::size_t k = 0; k < d; ++k) acc += Rat(RG[img[k]][i]) * Finv[j][k];
                    if (acc.get_den() != 1) return;
                    T(i, j) = acc.get_num();
                }
            Int dt = det(T);
            if (dt != 1 && dt != -1) return;
            std::vector<std::size_t> perm(RF.size());
            for (std::size_t r = 0; r < RF.size(); ++r) {
                IVec v = T * RF[r];
                auto it = std::lower_bound(RG.begin(), RG.end(), v);
                if (it == RG.end() || *it != v) return;
                perm[r] = it - RG.begin();
            }
            for (auto& c : CF) {
                std::vector<std::size_t> s;
                for (auto i : c) s.push_back(perm[i]);
                std::sort(s.begin(), s.end());
                if (!gset.count(s)) return;
            }
            result = T;
            return;
        }
        for (std::size_t g = 0; g < RG.size(); ++g) {
            if (used[g]) continue;
            used[g] = true;
            img.push_back(g);
            rec();
            img.pop_back();
            used[g] = false;
        }
    };
    rec();
    return result;
}

bool fiber_bounded(const Mat& A) {
    LP lp(A.cols);
    for (std::size_t i = 0; i < A.rows; ++i) lp.add(A.row(i), LP::EQ, 0);
    lp.add(QVec(A.cols, Rat(1)), LP::LE, 1);
    for (auto& o : lp.obj) o = -1;
    auto r = solve_lp(lp);
    return r.status == LPResult::Optimal && r.value == 0;
}

namespace {

std::vector<IVec> fiber_dfs(const Mat& A, const IVec& b, const std::optional<IVec>& bound, std::size_t max_points,
                            bool first_only) {
    if (b.size() != A.rows) throw ValidationError("fiber: length(b) != rows(A)");
    std::size_t n = A.cols;
    if (bound && bound->size() != n) throw ValidationError("fiber: bound has wrong length");
    if (!bound && !fiber_bounded(A)) throw ComputeError("fiber is unbounded and no bound was supplied");
    std::vector<IVec> out;
    IVec x(n);
    std::function<void(std::size_t, const IVec&)> rec = [&](std::size_t j, const IVec& rhs) {
        if (j == n) {
            if (is_zero(rhs)) out.push_back(x);
            return;
        }
        if (first_only && !out.empty()) return;
        std::size_t m = n - j;
        LP lp(m);
        for (std::size_t i = 0; i < A.rows; ++i) {
            QVec a(m);
            for (std::size_t k = 0; k < m; ++k) a[k] = A(i, j + k);
            lp.add(a, LP::EQ, Rat(rhs[i]));
        }
        if (bound)
            for (std::size_t k = 0; k < m; ++k) {
                QVec a(m);
                a[k] = 1;
                lp.add(a, LP::LE, Rat((*bound)[j + k]));
            }
        lp.obj[0] = 1;
        auto lo = solve_lp(lp);
        if (lo.status == LPResult::Infeasible) return;
        lp.obj[0] = -1;
        auto hi = solve_lp(lp);
        Int l, h;
        mpz_cdiv_q(l.get_mpz_t(), lo.value.get_num_mpz_t(), lo.value.get_den_mpz_t());
        Rat hv = -hi.value;
        mpz_fdiv_q(h.get_mpz_t(), hv.get_num_mpz_t(), hv.get_den_mpz_t());
        for (Int v = l; v <= h; ++v) {
            x[j] = v;
            IVec r2 = rhs;
            for (std::size_t i = 0; i < A.rows; ++i) r2[i] -= A(i, j) * v;
            rec(j + 1, r2);
            if (first_only && !out.empty()) return;
            if (out.size() > max_points) throw ComputeError("fiber: too many lattice points");
        }
        x[j] = 0;
    };
    rec(0, b);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<IVec> lattice_points_in_fiber(const Mat& A, const IVec& b, const std::optional<IVec>& bound,
                                          std::size_t max_points) {
    return fiber_dfs(A, b, bound, max_points, false);
}

std::optional<IVec> fiber_point(const Mat& A, const IVec& b, const std::optional<IVec>& bound) {
    auto v = fiber_dfs(A, b, bound, 1, true);
    if (v.empty()) return std::nullopt;
    return v[0];
}

} // namespace tq
