#include "toricq/binom.hpp"
#include "toricq/fixtures.hpp"
#include "toricq/golden.hpp"
#include "toricq/io.hpp"
#include "toricq/mckay.hpp"
#include "toricq/qsec.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

using namespace tq;

namespace {


struct Out {
    json j;
    std::string text; // empty: render j
    std::string dot;  // empty: no DOT form
    bool complete = true;
};

struct Opts {
    std::string format;
    long budget_ms = -1, budget_items = -1;
    std::string order;
    Budget budget() const {
        Budget b;
        b.ms = budget_ms;
        b.items = budget_items;
        return b;
    }
};

std::vector<std::size_t> one_based(const std::string& s, std::size_t n, const char* what) {
    std::vector<std::size_t> v;
    for (auto& x : parse_ivec(s)) {
        if (x < 1 || x > Int(static_cast<long>(n))) throw ValidationError(std::string(what) + " index out of range: " + x.get_str());
        v.push_back(x.get_ui() - 1);
    }
    return v;
}

BinomialIdeal ordered(const BinomialIdeal& I, const Opts& o) {
    if (o.order.empty()) return I;
    auto p = one_based(o.order, I.nvars, "--order");
    if (p.size() != I.nvars) throw ValidationError("--order must list every variable once");
    auto q = p;
    std::sort(q.begin(), q.end());
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] != i) throw ValidationError("--order must list every variable once");
    return with_order(I, MonomialOrder::from_priority(p));
}

std::string ideal_text(const BinomialIdeal& I) {
    std::ostringstream os;
    auto& gb = I.gb();
    if (gb.empty()) return "0\n";
    for (auto& b : gb) {
        os << monomial_string(b.lead, "y", true);
        if (!b.mono) os << " - " << monomial_string(b.tail, "y", true);
        os << "\n";
    }
    return os.str();
}

json ideal_json(const BinomialIdeal& I) {
    json j = to_json(I);
    json gb = json::array();
    for (auto& b : I.gb()) gb.push_back(b.mono ? monomial_string(b.lead) : monomial_string(b.lead) + " - " + monomial_string(b.tail));
    j["groebner"] = gb;
    return j;
}

// flatten a JSON value into "key: value" lines
void render(const json& j, const std::string& pre, std::ostream& os) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object())) {
                os << pre << k << ":\n";
                render(v, pre + "  ", os);
            } else
                os << pre << k << ": " << v.dump() << "\n";
        }
    } else if (j.is_array()) {
        for (auto& v : j) {
            if (v.is_object()) {
                os << pre << "-\n";
                render(v, pre + "  ", os);
            } else
                os << pre << v.dump() << "\n";
        }
    } else
        os << pre << j.dump() << "\n";
}

json semigroup_json(const GradedSemigroup& s) {
    return {{"d", s.d}, {"gens", to_json(Mat::from_rows(s.gens, s.d))}, {"grading", to_json(s.grading)}};
}

GradedSemigroup semigroup_from_json(const json& j) {
    GradedSemigroup s;
    if (!j.is_object() || !j.contains("gens")) throw ValidationError("semigroup JSON needs \"gens\"");
    auto g = mat_from_json(j["gens"]);
    s.d = j.contains("d") ? j["d"].get<std::size_t>() : g.cols;
    if (g.rows && g.cols != s.d) throw ValidationError("semigroup generators have wrong length");
    s.gens = g.row_list();
    bool graded = j.contains("grading") && !j["grading"].empty();
    s.grading = graded ? mat_from_json(j["grading"]) : Mat(0, s.d);
    if (s.grading.rows && s.grading.cols != s.d) throw ValidationError("grading has wrong width");
    return s;
}

GradedSemigroup polynomial_ring(const Mat& grading) {
    GradedSemigroup s;
    s.d = grading.cols;
    for (std::size_t i = 0; i < s.d; ++i) {
        IVec e(s.d);
        e[i] = 1;
        s.gens.push_back(e);
    }
    s.grading = grading;
    return s;
}

// --fan accepts a file or one of the built-in names
std::pair<Fan, std::vector<IVec>> load_fan(const std::string& s) {
    namespace fx = fixtures;
    if (s == "f1") return {fx::f1_fan(), fx::f1_rays()};
    if (s == "res13") return {fx::res13_fan(), fx::res13_rays()};
    if (s == "threefold") return {fx::threefold_fan(), fx::threefold_rays()};
    if (s == "hexagon") return {fx::hexagon_fan(), fx::hexagon_rays()};
    if (s.size() == 2 && s[0] == 'p' && s[1] >= '1' && s[1] <= '9') {
        auto f = fx::projective_space_fan(s[1] - '0');
        return {f, f.rays()};
    }
    return fan_from_json(read_json_file(s));
}

std::vector<IVec> parse_bundles(const std::string& s, std::size_t rank) {
    auto rows = parse_rows(s);
    for (auto& r : rows)
        if (r.size() == 1 && r[0] == 0 && rank > 1) r = IVec(rank);
    return rows;
}

PolarizedToric load_polarized(const std::string& fan, const std::string& bundles, const std::string& basis) {
    auto [f, order] = load_fan(fan);
    auto cox = cox_data(f, order);
    std::optional<std::vector<std::size_t>> b;
    if (!basis.empty()) b = one_based(basis, order.size(), "--basis");
    std::size_t rank = cox.deg.free_rank;
    if (bundles.empty()) throw ValidationError("--bundles is required");
    return polarize(cox, parse_bundles(bundles, rank), b);
}

json moduli_json(const ModuliFan& m) {
    json trees = json::array();
    for (auto& t : m.trees) trees.push_back(t);
    return {{"fan", to_json(m.fan)}, {"smooth", m.smooth}, {"projective", m.projective},
            {"trees", trees}, {"circuit_basis", to_json(m.circuit_basis)}};
}

json support_json(const McKayQuiver& q, const Support& s) {
    std::vector<std::size_t> arrows;
    for (std::size_t a = 0; a < s.size(); ++a)
        if (s[a]) arrows.push_back(a);
    return {{"arrows", arrows}, {"text", support_string(q, s)}};
}

json supports_json(const McKayQuiver& q, const std::vector<Support>& v) {
    json a = json::array();
    for (auto& s : v) a.push_back(support_json(q, s));
    return a;
}

json cone_json(const Cone& c) { return to_json(Mat::from_rows(c.rays, c.dim)); }

std::string var_name(std::size_t i) {
    static const char* xyz[] = {"x", "y", "z", "w"};
    return i < 4 ? xyz[i] : "x" + std::to_string(i + 1);
}

// ---- commands -------------------------------------------------------------

Out cmd_quotient(const std::string& type) {
    auto t = parse_type(type);
    auto s = invariant_semigroup(t);
    auto I = toric_ideal(Mat::from_cols(s.gens, s.d));
    Out o;
    o.j = {{"type", type}, {"semigroup", semigroup_json(s)}, {"toric_ideal", ideal_json(I)}};
    if (t.a.size() == 2 && t.a[0] == 1) {
        auto jh = jung_hirzebruch(t.r, t.a[1]);
        o.j["jung_hirzebruch"] = to_json(IVec(jh.coefficients.begin(), jh.coefficients.end()));
    }
    std::ostringstream os;
    os << "generators:\n";
    for (auto& g : s.gens) {
        Exp e;
        for (auto& x : g) e.push_back(static_cast<int>(x.get_si()));
        os << "  " << monomial_string(e, "x", true) << "\n";
    }
    os << "toric ideal:\n" << ideal_text(I);
    o.text = os.str();
    return o;
}

Out cmd_jh(const std::string& r, const std::string& a) {
    auto jh = jung_hirzebruch(Int(r), Int(a));
    Out o;
    o.j = {{"r", to_json(Int(r))}, {"a", to_json(Int(a))},
           {"coefficients", to_json(IVec(jh.coefficients.begin(), jh.coefficients.end()))},
           {"generators", to_json(Mat::from_rows(jh.generators, 2))}};
    return o;
}

Out cmd_normal(const std::string& path, const std::string& gens) {
    GradedSemigroup s;
    if (!path.empty())
        s = semigroup_from_json(read_json_file(path));
    else if (!gens.empty()) {
        s.gens = parse_rows(gens);
        s.d = s.gens.empty() ? 0 : s.gens[0].size();
        s.grading = Mat(0, s.d);
    } else
        throw ValidationError("give --semigroup or --gens");
    auto r = is_normal(s);
    Out o;
    o.j = {{"normal", r.normal}, {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
           {"hilbert_basis", to_json(Mat::from_rows(r.hilbert, s.d))}};
    return o;
}

Out cmd_proj(const std::string& path, const std::string& grading) {
    GradedSemigroup s;
    if (!path.empty())
        s = semigroup_from_json(read_json_file(path));
    else if (!grading.empty()) {
        auto g = parse_rows(grading);
        s = polynomial_ring(Mat::from_rows(g, g[0].size()));
    } else
        throw ValidationError("give --semigroup or --grading");
    auto pc = proj_charts(s);
    json charts = json::array();
    for (auto& c : pc.charts) {
        json cj = {{"vertex", to_json(c.vertex)}, {"generators", to_json(Mat::from_rows(c.generators, s.d))},
                   {"normal", c.normal}};
        if (c.cyclic_type) cj["cyclic_type"] = {to_json(c.cyclic_type->first), to_json(c.cyclic_type->second)};
        charts.push_back(cj);
    }
    Out o;
    o.j = {{"ell", to_json(pc.ell)}, {"degree_piece", to_json(Mat::from_rows(pc.degree_piece, s.d))}, {"charts", charts}};
    return o;
}

Out cmd_git(const std::string& path, const std::string& grading, const std::string& chi, int jmax) {
    GradedSemigroup s;
    if (!path.empty())
        s = semigroup_from_json(read_json_file(path));
    else if (!grading.empty()) {
        auto g = parse_rows(grading);
        s = polynomial_ring(Mat::from_rows(g, g[0].size()));
    } else
        throw ValidationError("give --semigroup or --grading");
    auto q = git_quotient_semigroup(s, parse_ivec(chi), jmax);
    Out o;
    o.j = semigroup_json(q);
    return o;
}

Out cmd_cox(const std::string& fan) {
    auto [f, order] = load_fan(fan);
    auto c = cox_data(f, order);
    Out o;
    o.j = {{"fan", to_json(c.fan, &c.ray_order)},
           {"div", to_json(c.div)},
           {"class_group", {{"free_rank", c.deg.free_rank}, {"torsion", to_json(c.deg.torsion)}, {"deg", to_json(c.deg.projection)}}},
           {"irrelevant_ideal", to_json(Mat::from_rows(c.irrelevant_ideal, order.size()))},
           {"smooth", is_smooth(c.fan)},
           {"simplicial", is_simplicial(c.fan)}};
    o.dot = fan_dot(c.fan, &c.ray_order);
    return o;
}

Out cmd_quiver_moduli(const std::string& path, const std::string& theta) {
    auto q = quiver_from_json(read_json_file(path));
    auto m = moduli_fan(q, parse_weight(theta));
    Out o;
    o.j = moduli_json(m);
    o.dot = fan_dot(m.fan);
    return o;
}

Out cmd_chambers(const std::string& path) {
    auto q = quiver_from_json(read_json_file(path));
    auto cc = chamber_decomposition(q);
    json ch = json::array();
    for (auto& c : cc.chambers) {
        json st = json::array();
        for (auto& t : c.stable) st.push_back(t);
        ch.push_back({{"sign", c.sign}, {"sample", to_json(c.sample)}, {"stable", st}});
    }
    Out o;
    o.j = {{"walls", to_json(Mat::from_rows(cc.walls, q.nv ? q.nv - 1 : 0))}, {"cells", cc.cells}, {"chambers", ch}};
    return o;
}

Out cmd_ideal(const std::string& op, const std::string& ideal, const std::string& other, const std::string& matrix,
              const std::string& vars, const Opts& opt) {
    Out o;
    auto load = [](const std::string& p) {
        if (p.empty()) throw ValidationError("--ideal is required");
        return ideal_from_json(read_json_file(p));
    };
    if (op == "toric") {
        if (matrix.empty()) throw ValidationError("--matrix is required");
        auto rows = parse_rows(matrix);
        auto I = ordered(toric_ideal(Mat::from_rows(rows, rows[0].size())), opt);
        o.j = ideal_json(I);
        o.text = ideal_text(I);
    } else if (op == "saturate") {
        auto I = load(ideal);
        if (vars.empty()) throw ValidationError("--vars is required");
        Exp m(I.nvars);
        for (auto v : one_based(vars, I.nvars, "--vars")) m[v] = 1;
        auto S = ordered(saturate(I, m), opt);
        o.j = ideal_json(S);
        o.text = ideal_text(S);
    } else if (op == "intersect" || op == "equal") {
        auto I = load(ideal), J = load(other);
        if (I.nvars != J.nvars) throw ValidationError("ideals live in different rings");
        if (op == "equal") {
            bool a = contains(I, J), b = contains(J, I);
            o.j = {{"equal", a && b}, {"first_contains_second", a}, {"second_contains_first", b}};
        } else {
            auto K = ordered(intersect(I, J), opt);
            o.j = ideal_json(K);
            o.text = ideal_text(K);
        }
    } else {
        auto I = load(ideal);
        auto c = component_census(I, opt.budget());
        json comps = json::array();
        for (auto& k : c.components) {
            std::vector<std::size_t> z;
            for (auto v : k.Z) z.push_back(v + 1);
            comps.push_back({{"zero_vars", z}, {"lattice", to_json(Mat::from_rows(k.lattice, I.nvars))}, {"torsion", to_json(k.torsion)}});
        }
        o.j = {{"components", comps}, {"count", c.components.size()}, {"subsets_examined", c.subsets_examined}, {"complete", c.complete}};
        o.complete = c.complete;
    }
    return o;
}

Out cmd_mckay(const std::string& op, const std::string& type, const std::string& theta, const std::string& from,
              const std::string& to, const Opts& opt) {
    if (type.empty()) throw ValidationError("--type is required");
    auto q = mckay_quiver(parse_action(type));
    Out o;
    auto label = [&](std::size_t a) { return var_name(q.var(a)); };
    if (op == "quiver") {
        json rel = json::array();
        for (auto& [p, m] : q.relations) rel.push_back({{"plus", p}, {"minus", m}});
        o.j = {{"quiver", to_json(q.quiver)}, {"relations", rel}};
        o.dot = quiver_dot(q.quiver, label, "McKay");
    } else if (op == "clusters") {
        json cl = json::array();
        for (auto& s : fixed_g_clusters(q.action)) {
            json ms = json::array();
            for (auto& e : s) ms.push_back(monomial_string(e, "x", false));
            cl.push_back(ms);
        }
        o.j = {{"count", cl.size()}, {"clusters", cl}};
    } else if (op == "constellations") {
        if (theta.empty()) throw ValidationError("--theta is required");
        auto r = fixed_stable_constellations(q, parse_weight(theta), opt.budget());
        o.j = {{"count", r.found.size()}, {"constellations", supports_json(q, r.found)}, {"nodes", r.nodes}, {"complete", r.complete}};
        o.complete = r.complete;
    } else if (op == "ghilb") {
        if (theta.empty()) throw ValidationError("--theta is required");
        auto f = coherent_component_fan(q, parse_weight(theta));
        o.j = {{"fan", to_json(f.fan)}, {"smooth", f.smooth}, {"vertices", f.vertices.size()}};
        o.dot = fan_dot(f.fan, nullptr, "GHilb");
    } else {
        if (from.empty() || to.empty()) throw ValidationError("--from and --to are required");
        auto w = wall_report(q, parse_weight(from), parse_weight(to), opt.budget());
        json of = json::array(), ot = json::array();
        for (auto& c : w.only_from) of.push_back(cone_json(c));
        for (auto& c : w.only_to) ot.push_back(cone_json(c));
        o.j = {{"hyperplane", w.hyperplane}, {"normal", to_json(w.normal)},
               {"lost", supports_json(q, w.lost)}, {"kept", supports_json(q, w.kept)}, {"gained", supports_json(q, w.gained)},
               {"from_fan", to_json(w.from.fan)}, {"to_fan", to_json(w.to.fan)}, {"fans_equal", w.fans_equal},
               {"isomorphic", w.isomorphism.has_value()}, {"only_from", of}, {"only_to", ot}, {"complete", w.complete}};
        o.complete = w.complete;
    }
    return o;
}

Out cmd_qsec(const std::string& op, const std::string& fan, const std::string& bundles, const std::string& basis,
             const std::string& theta, const std::string& factors, long bound) {
    auto X = load_polarized(fan, bundles, basis);
    Out o;
    if (op == "mult-check") {
        if (factors.empty()) throw ValidationError("--factors is required");
        auto fs = parse_bundles(factors, X.deg.rows);
        o.j = {{"surjective", multiplication_surjective(X, fs)}};
        return o;
    }
    auto sq = quiver_of_sections(X, bound > 0 ? std::optional<std::size_t>(bound) : std::nullopt);
    if (op == "build") {
        json rel = json::array();
        for (auto& [p, m] : sq.relations) rel.push_back({{"plus", p}, {"minus", m}});
        json labels = json::array();
        for (auto& a : sq.quiver.arrows) labels.push_back(div_monomial(*a.label, nullptr, false, 0));
        o.j = {{"quiver", to_json(sq.quiver)}, {"labels", labels}, {"relations", rel},
               {"section_map", to_json(sq.section_map)}, {"bound", sq.bound}, {"stabilized", sq.stabilized}};
        o.dot = quiver_dot(sq.quiver, [&](std::size_t a) { return div_monomial(*sq.quiver.arrows[a].label, nullptr, true, 0); }, "sections");
    } else if (op == "series-fan") {
        if (theta.empty()) throw ValidationError("--theta is required");
        auto m = multilinear_series_fan(sq, parse_weight(theta));
        o.j = moduli_json(m);
        o.dot = fan_dot(m.fan);
    } else {
        auto v = image_equals_moduli(sq);
        o.j = {{"equal", v.equal}, {"contained", v.contained}, {"I_Q", ideal_json(v.IQ)}, {"I_rho", ideal_json(v.Irho)},
               {"arborescences", v.arborescence_monomials.size()}};
        o.text = std::string("equal: ") + (v.equal ? "yes" : "no") + "\nI_Q:\n" + ideal_text(v.IQ) + "I_rho:\n" + ideal_text(v.Irho);
    }
    return o;
}

// arrays of scalars stay on one line
void pretty(const json& j, int ind, std::ostream& os) {
    std::string pad(ind, ' '), in(ind + 2, ' ');
    if (j.is_object() && !j.empty()) {
        os << "{\n";
        std::size_t k = 0;
        for (auto& [key, v] : j.items()) {
            os << in << json(key).dump() << ": ";
            pretty(v, ind + 2, os);
            os << (++k < j.size() ? ",\n" : "\n");
        }
        os << pad << "}";
    } else if (j.is_array() && !j.empty() && (j.front().is_array() || j.front().is_object())) {
        os << "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            os << in;
            pretty(j[k], ind + 2, os);
            os << (k + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << "]";
    } else
        os << j.dump();
}

int cmd_examples(const std::string& format) {
    auto cases = golden_cases();
    json rows = json::array();
    std::size_t bad = 0;
    std::ostringstream os;
    for (auto& c : cases) {
        std::string note;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.check(note);
        } catch (const std::exception& e) {
            note = std::string("error: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        bad += !ok;
        rows.push_back({{"label", c.label}, {"what", c.what}, {"pass", ok}, {"note", note}});
        char buf[32];
        std::snprintf(buf, sizeof buf, "%8.1f ms", ms);
        os << (ok ? "PASS " : "FAIL ") << c.label << std::string(c.label.size() < 24 ? 24 - c.label.size() : 1, ' ') << buf << "  "
           << c.what << (note.empty() ? "" : "  [" + note + "]") << "\n";
    }
    os << cases.size() - bad << "/" << cases.size() << " passed\n";
    if (format == "json")
        {
        pretty(json{{"cases", rows}, {"passed", cases.size() - bad}, {"total", cases.size()}}, 0, std::cout);
        std::cout << "\n";
    }
    else
        std::cout << os.str();
    return bad ? 2 : 0;
}

int emit(const Out& o, const std::string& format) {
    if (format == "dot") {
        if (o.dot.empty()) throw ValidationError("no DOT form for this command");
        std::cout << o.dot;
    } else if (format == "text") {
        if (!o.text.empty())
            std::cout << o.text;
        else
            render(o.j, "", std::cout);
    } else {
        pretty(o.j, 0, std::cout);
        std::cout << "\n";
    }
    return o.complete ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toricq: toric geometry through quiver representations"};
    app.require_subcommand(1);
    app.fallthrough();
    Opts opt;
    app.add_option("--format", opt.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--budget-ms", opt.budget_ms, "wall-clock budget for enumerations");
    app.add_option("--budget-items", opt.budget_items, "item budget for enumerations");
    app.add_option("--order", opt.order, "monomial order as 1-based variable priority, e.g. 3,1,2");

    std::string type, r, a, semigroup, gens, grading, chi = "1", fan, quiver, theta, from, to, ideal, other, matrix, vars,
        bundles, basis, factors;
    int jmax = 3;
    long bound = 0;
    std::function<Out()> run;
    int special = -1;

    auto* quot = app.add_subcommand("quotient", "invariant semigroup and toric ideal of 1/r(a1,...,an)");
    quot->add_option("--type", type, "r,a1,...,an")->required();
    quot->callback([&] { run = [&] { return cmd_quotient(type); }; });

    auto* jh = app.add_subcommand("jh", "Jung-Hirzebruch data of 1/r(1,a)");
    jh->add_option("-r", r)->required();
    jh->add_option("-a", a)->required();
    jh->callback([&] { run = [&] { return cmd_jh(r, a); }; });

    auto* nc = app.add_subcommand("normal-check", "normality of an affine semigroup");
    nc->add_option("--semigroup", semigroup, "semigroup JSON file");
    nc->add_option("--gens", gens, "generators, e.g. 4,0;3,1;1,3;0,4");
    nc->callback([&] { run = [&] { return cmd_normal(semigroup, gens); }; });

    auto* pj = app.add_subcommand("proj", "affine charts of Proj of a graded semigroup");
    pj->add_option("--semigroup", semigroup, "semigroup JSON file");
    pj->add_option("--grading", grading, "grading of a polynomial ring, e.g. 1,2,3");
    pj->callback([&] { run = [&] { return cmd_proj(semigroup, grading); }; });

    auto* git = app.add_subcommand("git", "semigroup of the GIT quotient by a character");
    git->add_option("--semigroup", semigroup, "semigroup JSON file");
    git->add_option("--grading", grading, "grading rows of a polynomial ring, e.g. 1,-1,1,0;0,1,0,1");
    git->add_option("--chi", chi, "character")->required();
    git->add_option("--j-max", jmax, "largest multiple of chi searched");
    git->callback([&] { run = [&] { return cmd_git(semigroup, grading, chi, jmax); }; });

    auto* cox = app.add_subcommand("cox", "Cox data of a fan");
    cox->add_option("--fan", fan, "fan JSON file or f1|res13|threefold|hexagon|pN")->required();
    cox->callback([&] { run = [&] { return cmd_cox(fan); }; });

    auto* qm = app.add_subcommand("quiver-moduli", "fan of the moduli of theta-stable representations");
    qm->add_option("--quiver", quiver, "quiver JSON file")->required();
    qm->add_option("--theta", theta, "weight")->required();
    qm->callback([&] { run = [&] { return cmd_quiver_moduli(quiver, theta); }; });

    auto* ch = app.add_subcommand("chambers", "GIT chamber decomposition");
    ch->add_option("--quiver", quiver, "quiver JSON file")->required();
    ch->callback([&] { run = [&] { return cmd_chambers(quiver); }; });

    auto* id = app.add_subcommand("ideal", "binomial ideal operations");
    id->require_subcommand(1);
    for (std::string op : {"toric", "saturate", "intersect", "equal", "census"}) {
        auto* s = id->add_subcommand(op);
        if (op == "toric") s->add_option("--matrix", matrix, "rows, e.g. 3,2,1,0;0,1,2,3");
        else s->add_option("--ideal", ideal, "ideal JSON file");
        if (op == "intersect" || op == "equal") s->add_option("--with", other, "second ideal JSON file")->required();
        if (op == "saturate") s->add_option("--vars", vars, "1-based variables whose product saturates");
        s->callback([&, op] { run = [&, op] { return cmd_ideal(op, ideal, other, matrix, vars, opt); }; });
    }

    auto* mk = app.add_subcommand("mckay", "McKay quivers and G-Hilbert schemes");
    mk->require_subcommand(1);
    for (std::string op : {"quiver", "clusters", "constellations", "ghilb", "walls"}) {
        auto* s = mk->add_subcommand(op);
        s->add_option("--type", type, "r,a1,...,an; summands joined by ';'")->required();
        if (op == "constellations" || op == "ghilb") s->add_option("--theta", theta, "weight")->required();
        if (op == "walls") {
            s->add_option("--from", from, "weight")->required();
            s->add_option("--to", to, "weight")->required();
        }
        s->callback([&, op] { run = [&, op] { return cmd_mckay(op, type, theta, from, to, opt); }; });
    }

    auto* qs = app.add_subcommand("qsec", "quivers of sections");
    qs->require_subcommand(1);
    for (std::string op : {"build", "series-fan", "image-test", "mult-check"}) {
        auto* s = qs->add_subcommand(op);
        s->add_option("--fan", fan, "fan JSON file or f1|res13|threefold|hexagon|pN")->required();
        s->add_option("--bundles", bundles, "classes in the Pic basis, e.g. 0;1,0;0,1")->required();
        s->add_option("--basis", basis, "1-based rays giving the Pic basis");
        s->add_option("--bound", bound, "path length bound for relations");
        if (op == "series-fan") s->add_option("--theta", theta, "weight")->required();
        if (op == "mult-check") s->add_option("--factors", factors, "classes to multiply, e.g. 1,0;0,1")->required();
        s->callback([&, op] { run = [&, op] { return cmd_qsec(op, fan, bundles, basis, theta, factors, bound); }; });
    }

    auto* ex = app.add_subcommand("examples", "run the worked examples");
    ex->callback([&] { special = 0; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    try {
        if (special == 0) return cmd_examples(opt.format);
        return emit(run(), opt.format);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const ComputeError& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    }
}
