#include "toricq/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace tq {

json to_json(const Int& x) {
    static const Int lim("9007199254740991");
    if (abs(x) <= lim) return json(x.get_si());
    return json(x.get_str());
}

json to_json(const IVec& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const QVec& v) {
    json a = json::array();
    for (auto& x : v) {
        if (x.get_den() == 1) a.push_back(to_json(Int(x.get_num())));
        else a.push_back(x.get_str());
    }
    return a;
}

json to_json(const Mat& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) a.push_back(to_json(m.row(i)));
    return a;
}

json to_json(const Fan& f, const std::vector<IVec>* ray_order) {
    std::vector<IVec> rays = ray_order ? *ray_order : f.rays();
    json j;
    j["dim"] = f.dim;
    json r = json::array();
    for (auto& x : rays) r.push_back(to_json(x));
    j["rays"] = r;
    json cs = json::array();
    for (auto& c : f.cones) {
        json idx = json::array();
        std::vector<std::size_t> ids;
        for (auto& x : c.rays) {
            auto it = std::find(rays.begin(), rays.end(), x);
            if (it == rays.end()) throw ComputeError("fan output: cone ray missing from ray list");
            ids.push_back(static_cast<std::size_t>(it - rays.begin()));
        }
        std::sort(ids.begin(), ids.end());
        for (auto i : ids) idx.push_back(i);
        cs.push_back(idx);
    }
    j["cones"] = cs;
    return j;
}

json to_json(const Quiver& q) {
    json j;
    j["vertices"] = q.nv;
    json as = json::array();
    for (auto& a : q.arrows) {
        json x;
        x["tail"] = a.tail;
        x["head"] = a.head;
        if (a.label) x["label"] = to_json(*a.label);
        as.push_back(x);
    }
    j["arrows"] = as;
    return j;
}

json to_json(const BinomialIdeal& I) {
    json j;
    j["vars"] = I.nvars;
    json gs = json::array();
    for (auto& g : I.gens) {
        json x;
        if (g.mono) {
            x["mono"] = g.plus;
        } else {
            x["plus"] = g.plus;
            x["minus"] = g.minus;
        }
        gs.push_back(x);
    }
    j["gens"] = gs;
    return j;
}

Int int_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
        if (j.is_string()) return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
    throw ValidationError("expected an integer, got " + j.dump());
}

IVec ivec_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected an integer array, got " + j.dump());
    IVec v;
    for (auto& x : j) v.push_back(int_from_json(x));
    return v;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ValidationError("expected a nonempty array of rows");
    std::vector<IVec> rows;
    for (auto& r : j) rows.push_back(ivec_from_json(r));
    for (auto& r : rows)
        if (r.size() != rows[0].size()) throw ValidationError("ragged matrix");
    return Mat::from_rows(rows, rows[0].size());
}

std::pair<Fan, std::vector<IVec>> fan_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rays") || !j.contains("cones")) throw ValidationError("fan needs 'rays' and 'cones'");
    std::vector<IVec> rays;
    for (auto& r : j["rays"]) rays.push_back(ivec_from_json(r));
    if (rays.empty()) throw ValidationError("fan has no rays");
    std::size_t d = j.contains("dim") ? j["dim"].get<std::size_t>() : rays[0].size();
    for (auto& r : rays) {
        if (r.size() != d) throw ValidationError("ray has wrong dimension");
        if (is_zero(r) || content(r) != 1) throw ValidationError("ray " + str(r) + " is not primitive");
    }
    if (sort_unique(rays).size() != rays.size()) throw ValidationError("repeated ray");
    Fan f;
    f.dim = d;
    for (auto& c : j["cones"]) {
        std::vector<IVec> g;
        for (auto& i : c) {
            auto k = i.get<std::size_t>();
            if (k >= rays.size()) throw ValidationError("cone refers to missing ray");
            g.push_back(rays[k]);
        }
        Cone cn = Cone::from_generators(d, g);
        if (!cn.strongly_convex()) throw ValidationError("cone is not strongly convex");
        if (cn.rays.size() != g.size()) throw ValidationError("cone generator is not a ray of its cone");
        f.cones.push_back(cn);
    }
    f.canonicalize();
    std::string why;
    if (!fan_is_valid(f, &why)) throw ValidationError("not a fan: " + why);
    if (sort_unique(rays) != f.rays()) throw ValidationError("ray list differs from rays used by cones");
    return {f, rays};
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows")) throw ValidationError("quiver needs 'vertices' and 'arrows'");
    Quiver q;
    q.nv = j["vertices"].get<std::size_t>();
    for (auto& a : j["arrows"]) {
        Arrow ar;
        ar.tail = a.at("tail").get<std::size_t>();
        ar.head = a.at("head").get<std::size_t>();
        if (a.contains("label")) ar.label = ivec_from_json(a["label"]);
        q.arrows.push_back(ar);
    }
    q.validate();
    return q;
}

BinomialIdeal ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("gens")) throw ValidationError("ideal needs 'vars' and 'gens'");
    std::size_t n = j["vars"].get<std::size_t>();
    std::vector<BinomialGen> gens;
    auto exp = [&](const json& x) {
        Exp e = x.get<Exp>();
        if (e.size() != n) throw ValidationError("exponent vector has wrong length");
        for (int v : e)
            if (v < 0) throw ValidationError("negative exponent");
        return e;
    };
    for (auto& g : j["gens"]) {
        if (g.contains("mono")) gens.push_back(BinomialGen::monomial(exp(g["mono"])));
        else gens.push_back(BinomialGen::binomial(exp(g.at("plus")), exp(g.at("minus"))));
    }
    return BinomialIdeal(n, gens);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

IVec parse_ivec(const std::string& s) {
    IVec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw ValidationError("empty entry in '" + s + "'");
        tok = tok.substr(b, e - b + 1);
        Int x;
        if (x.set_str(tok, 10) != 0) throw ValidationError("bad integer '" + tok + "'");
        v.push_back(x);
    }
    return v;
}

std::vector<IVec> parse_rows(const std::string& s) {
    std::vector<IVec> rows;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';')) rows.push_back(parse_ivec(part));
    if (rows.empty()) throw ValidationError("empty matrix");
    return rows;
}

std::string fan_dot(const Fan& f, const std::vector<IVec>* ray_order, const std::string& name) {
    std::vector<IVec> rays = ray_order ? *ray_order : f.rays();
    std::ostringstream o;
    o << "graph " << name << " {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < rays.size(); ++i) o << "  r" << i << " [label=\"" << str(rays[i]) << "\"];\n";
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        o << "  c" << c << " [shape=box,label=\"σ" << c << "\"];\n";
        for (auto& x : f.cones[c].rays) {
            auto k = std::find(rays.begin(), rays.end(), x) - rays.begin();
            o << "  c" << c << " -- r" << k << ";\n";
        }
    }
    o << "}\n";
    return o.str();
}

std::string quiver_dot(const Quiver& q, const std::function<std::string(std::size_t)>& label_fn, const std::string& name) {
    std::ostringstream o;
    o << "digraph " << name << " {\n  rankdir=LR;\n";
    for (std::size_t v = 0; v < q.nv; ++v) o << "  v" << v << " [label=\"" << v << "\"];\n";
    for (std::size_t a = 0; a < q.na(); ++a) {
        auto& ar = q.arrows[a];
        o << "  v" << ar.tail << " -> v" << ar.head << " [label=\"";
        if (label_fn) o << label_fn(a);
        else o << "a" << a + 1;
        o << "\"];\n";
    }
    o << "}\n";
    return o.str();
}

} // namespace tq
