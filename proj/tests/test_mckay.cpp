#include "common.hpp"

#include <set>

using namespace tq;
using namespace tq::test;

namespace {

// relations hold on a 0/1 representation iff each pair of paths is both on or both off
bool brute_commutes(const McKayQuiver& q, const Support& s) {
    for (auto& [p, m] : q.relations) {
        bool a = true, b = true;
        for (auto x : p) a = a && s[x];
        for (auto x : m) b = b && s[x];
        if (a != b) return false;
    }
    return true;
}

// a torus-fixed point: potentials m(head) - m(tail) = e_var exist on every supported arrow
bool brute_potential(const McKayQuiver& q, const Support& s) {
    std::size_t nv = q.quiver.nv, n = q.action.n();
    std::vector<std::optional<IVec>> pot(nv);
    for (std::size_t root = 0; root < nv; ++root) {
        if (pot[root]) continue;
        pot[root] = IVec(n);
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (std::size_t a = 0; a < q.quiver.na(); ++a) {
                if (!s[a]) continue;
                auto& ar = q.quiver.arrows[a];
                IVec e(n);
                e[q.var(a)] = 1;
                if (ar.tail == v || ar.head == v) {
                    std::size_t w = ar.tail == v ? ar.head : ar.tail;
                    IVec want = ar.tail == v ? add(*pot[v], e) : sub(*pot[v], e);
                    if (!pot[w]) {
                        pot[w] = want;
                        stack.push_back(w);
                    } else if (*pot[w] != want)
                        return false;
                }
            }
        }
    }
    return true;
}

std::set<Support> brute_constellations(const McKayQuiver& q, const QVec& th) {
    std::set<Support> out;
    std::size_t na = q.quiver.na();
    for (std::size_t m = 0; m < (1u << na); ++m) {
        Support s(na);
        for (std::size_t a = 0; a < na; ++a) s[a] = m >> a & 1;
        bool loops = false;
        for (std::size_t a = 0; a < na; ++a) loops = loops || (s[a] && q.quiver.arrows[a].tail == q.quiver.arrows[a].head);
        if (loops || !brute_commutes(q, s) || !brute_potential(q, s)) continue;
        if (is_theta_stable(q.quiver, s, th).verdict == Stability::Stable) out.insert(s);
    }
    return out;
}

QVec positive_weight(std::size_t nv) {
    QVec th(nv, Rat(1));
    th[0] = -Rat(static_cast<long>(nv) - 1);
    return th;
}

} // namespace

TEST_SUITE("mckay") {

TEST_CASE("constellation search matches exhaustive enumeration") {
    for (std::string t : {"3,1,2", "4,1,3", "5,1,4", "5,1,2", "2,1,1", "3,1,1"}) {
        auto q = mckay_quiver(parse_action(t));
        std::vector<QVec> weights{positive_weight(q.quiver.nv)};
        for (int k = 0; k < 6; ++k) {
            QVec th(q.quiver.nv);
            Rat s = 0;
            for (std::size_t v = 1; v < th.size(); ++v) {
                th[v] = rnd(-6, 6) * 2 + 1;
                s += th[v];
            }
            th[0] = -s;
            if (generic_weight(th)) weights.push_back(th);
        }
        for (auto& th : weights) {
            auto r = fixed_stable_constellations(q, th);
            std::set<Support> got(r.found.begin(), r.found.end());
            CHECK_MESSAGE(got == brute_constellations(q, th), t);
        }
    }
}

TEST_CASE("clusters biject with constellations at positive weights") {
    for (std::string t : {"3,1,2", "5,1,4", "7,1,2", "3,1,1,1", "2,1,1,0;2,0,1,1", "4,1,1,2", "6,1,2,3"}) {
        auto q = mckay_quiver(parse_action(t));
        auto th = positive_weight(q.quiver.nv);
        std::set<Support> a, b;
        for (auto& c : fixed_g_clusters(q.action)) a.insert(cluster_to_rep(c, q));
        for (auto& s : fixed_stable_constellations(q, th).found) {
            CHECK(commutation_ok(q, s));
            CHECK(brute_commutes(q, s));
            CHECK(is_theta_stable(q.quiver, s, th).verdict == Stability::Stable);
            b.insert(s);
        }
        CHECK_MESSAGE(a == b, t);
    }
}

TEST_CASE("clusters are staircases with one monomial per character") {
    for (std::string t : {"3,1,2", "5,1,3", "2,1,1,0;2,0,1,1"}) {
        auto a = parse_action(t);
        for (auto& st : fixed_g_clusters(a)) {
            CHECK(st.size() == a.order());
            std::set<std::size_t> chars;
            for (auto& m : st) {
                chars.insert(a.weight(m));
                for (std::size_t i = 0; i < m.size(); ++i)
                    if (m[i] > 0) {
                        auto d = m;
                        --d[i];
                        CHECK(std::find(st.begin(), st.end(), d) != st.end());
                    }
            }
            CHECK(chars.size() == a.order());
        }
    }
}

TEST_CASE("G-Hilb fan: smooth, valid, one cone per cluster") {
    for (std::string t : {"3,1,2", "5,1,4", "7,1,3", "2,1,1,0;2,0,1,1", "6,1,2,3"}) {
        auto q = mckay_quiver(parse_action(t));
        auto f = coherent_component_fan(q, positive_weight(q.quiver.nv));
        std::string why;
        CHECK_MESSAGE(fan_is_valid(f.fan, &why), why);
        CHECK(f.smooth);
        CHECK(f.fan.cones.size() == fixed_g_clusters(q.action).size());
    }
}

TEST_CASE("relation ideal lies in the CMT toric ideal") {
    for (std::string t : {"3,1,2", "4,1,3", "2,1,1,0;2,0,1,1"}) {
        auto q = mckay_quiver(parse_action(t));
        CHECK(contains(toric_ideal(cmt_lattice_map(q)), relation_ideal(q)));
    }
}

TEST_CASE("trivial group: one vertex with n loops") {
    auto q = mckay_quiver(parse_action("1,0,0"));
    CHECK(q.quiver.nv == 1);
    CHECK(q.quiver.na() == 2);
}

TEST_CASE("non-generic weight and non-adjacent chambers are rejected") {
    auto q = mckay_quiver(parse_action("3,1,2"));
    CHECK_THROWS_AS(fixed_stable_constellations(q, parse_weight("-1,1,0")), ValidationError);
    CHECK_THROWS_AS(wall_report(q, parse_weight("-2,1,1"), parse_weight("2,-1,-1")), ValidationError);
}

TEST_CASE("malformed actions are rejected") {
    CHECK_THROWS_AS(parse_action("3,1,x"), ValidationError);
    CHECK_THROWS_AS(parse_action("2,1,1;3,1"), ValidationError);
}

TEST_CASE("McKay quiver: n arrows per vertex, balanced incidence") {
    for (std::string t : {"3,1,2", "7,1,2,4", "2,1,1,0;2,0,1,1", "4,1,1,2"}) {
        auto q = mckay_quiver(parse_action(t));
        CHECK(q.quiver.na() == q.action.n() * q.action.order());
        CHECK(q.quiver.nv == q.action.order());
        auto d = incidence_data(q.quiver);
        for (std::size_t a = 0; a < d.inc.cols; ++a) {
            Int s = 0;
            for (std::size_t v = 0; v < d.inc.rows; ++v) s += d.inc(v, a);
            CHECK(s == 0);
        }
    }
}

}
