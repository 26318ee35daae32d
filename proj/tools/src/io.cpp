#include "io.hpp"

#include <sstream>

namespace linepin::io {

Json rat(const Rat& r) { return to_string(r); }

Json vec(const Vec& v) {
    Json a = Json::array();
    for (auto& x : v) a.push_back(rat(x));
    return a;
}

Json vec3(const Vec3& v) { return vec(Vec(v.begin(), v.end())); }
Json line(const LineCoords& u) { return vec(Vec(u.begin(), u.end())); }

Rat parse_rat_field(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (!j.is_string()) throw InputError(where + ": expected a rational string or integer");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const std::exception&) {
        throw InputError(where + ": cannot parse rational '" + j.get<std::string>() + "'");
    }
}

static Vec parse_vec(const Json& j, const std::string& where, std::size_t n = 0) {
    if (!j.is_array()) throw InputError(where + ": expected an array");
    if (n && j.size() != n) throw InputError(where + ": expected " + std::to_string(n) + " entries");
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_rat_field(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

ConvexPolytope parse_off(const std::string& text, const std::string& where) {
    std::istringstream in(text);
    std::string ln;
    std::vector<std::string> rows;
    while (std::getline(in, ln)) {
        auto h = ln.find('#');
        if (h != std::string::npos) ln.erase(h);
        if (ln.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(ln);
    }
    std::size_t at = 0;
    if (at < rows.size() && rows[at].find("OFF") != std::string::npos) ++at;
    if (at >= rows.size()) throw InputError(where + ": empty vertex list");
    std::size_t count = 0;
    {
        std::istringstream c(rows[at]);
        if (!(c >> count)) throw InputError(where + ": line " + std::to_string(at + 1) + ": expected vertex count");
        ++at;
    }
    ConvexPolytope P;
    for (std::size_t k = 0; k < count; ++k, ++at) {
        if (at >= rows.size()) throw InputError(where + ": expected " + std::to_string(count) + " vertices");
        std::istringstream r(rows[at]);
        Vec3 p;
        for (int i = 0; i < 3; ++i) {
            std::string tok;
            if (!(r >> tok)) throw InputError(where + ": line " + std::to_string(at + 1) + ": expected 3 coordinates");
            try {
                p[i] = parse_rat(tok);
            } catch (const std::exception&) {
                throw InputError(where + ": line " + std::to_string(at + 1) + ": bad coordinate '" + tok + "'");
            }
        }
        P.vertices.push_back(p);
    }
    return P;
}

Document parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("parse error: ") + e.what());
    }
    if (!j.is_object()) throw InputError("document: expected an object");
    Document d;
    if (j.contains("schema")) {
        if (!j["schema"].is_number_integer()) throw InputError("schema: expected an integer");
        d.schema = j["schema"].get<int>();
        if (d.schema != 1) throw InputError("schema: unsupported version " + std::to_string(d.schema));
    }
    if (j.contains("constraints")) {
        const Json& cs = j["constraints"];
        if (!cs.is_array()) throw InputError("constraints: expected an array");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            std::string w = "constraints[" + std::to_string(i) + "]";
            if (!cs[i].is_object() || !cs[i].contains("lambda") || !cs[i].contains("dir"))
                throw InputError(w + ": expected {lambda, dir}");
            Rat l = parse_rat_field(cs[i]["lambda"], w + ".lambda");
            Vec dv = parse_vec(cs[i]["dir"], w + ".dir", 3);
            try {
                d.constraints.push_back(make_constraint(l, {dv[0], dv[1], dv[2]}));
            } catch (const std::exception& e) {
                throw InputError(w + ": " + e.what());
            }
        }
    }
    if (j.contains("polytopes")) {
        const Json& ps = j["polytopes"];
        if (!ps.is_array()) throw InputError("polytopes: expected an array");
        for (std::size_t i = 0; i < ps.size(); ++i) {
            std::string w = "polytopes[" + std::to_string(i) + "]";
            if (ps[i].is_object() && ps[i].contains("off")) {
                if (!ps[i]["off"].is_string()) throw InputError(w + ".off: expected a string");
                d.polytopes.push_back(parse_off(ps[i]["off"].get<std::string>(), w + ".off"));
                continue;
            }
            if (!ps[i].is_object() || !ps[i].contains("vertices") || !ps[i]["vertices"].is_array())
                throw InputError(w + ": expected {vertices} or {off}");
            ConvexPolytope P;
            const Json& vs = ps[i]["vertices"];
            for (std::size_t k = 0; k < vs.size(); ++k) {
                Vec v = parse_vec(vs[k], w + ".vertices[" + std::to_string(k) + "]", 3);
                P.vertices.push_back({v[0], v[1], v[2]});
            }
            d.polytopes.push_back(P);
        }
    }
    for (const char* key : {"points", "halfspaces"}) {
        if (!j.contains(key)) continue;
        const Json& ps = j[key];
        if (!ps.is_array()) throw InputError(std::string(key) + ": expected an array");
        for (std::size_t i = 0; i < ps.size(); ++i)
            d.points.push_back(parse_vec(ps[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer()) throw InputError("dim: expected an integer");
        d.dim = j["dim"].get<int>();
    } else if (!d.points.empty()) {
        d.dim = static_cast<int>(d.points[0].size());
    }
    for (std::size_t i = 0; i < d.points.size(); ++i)
        if (static_cast<int>(d.points[i].size()) != d.dim)
            throw InputError("points[" + std::to_string(i) + "]: expected " + std::to_string(d.dim) + " entries");
    if (j.contains("options")) {
        if (!j["options"].is_object()) throw InputError("options: expected an object");
        d.options = j["options"];
    }
    return d;
}

Json serialize(const Document& d) {
    Json j;
    j["schema"] = d.schema;
    if (!d.constraints.empty()) {
        Json cs = Json::array();
        for (auto& g : d.constraints) cs.push_back({{"lambda", rat(g.lambda)}, {"dir", vec3(g.dir)}});
        j["constraints"] = cs;
    }
    if (!d.polytopes.empty()) {
        Json ps = Json::array();
        for (auto& P : d.polytopes) {
            Json vs = Json::array();
            for (auto& v : P.vertices) vs.push_back(vec3(v));
            ps.push_back({{"vertices", vs}});
        }
        j["polytopes"] = ps;
    }
    if (!d.points.empty()) {
        Json ps = Json::array();
        for (auto& p : d.points) ps.push_back(vec(p));
        j["points"] = ps;
        j["dim"] = d.dim;
    }
    if (!d.options.empty()) j["options"] = d.options;
    return j;
}

Json certificate(const EscapeCertificate& c) {
    if (auto* w = std::get_if<DirectWitness>(&c)) return {{"kind", "direct"}, {"u", line(w->u)}, {"scalable", w->scalable}};
    auto& s = std::get<SegmentWitness>(c);
    return {{"kind", "segment"}, {"p", vec(s.p)}, {"q", vec(s.q)}};
}

static const char* case_name(CaseKind k) {
    switch (k) {
    case CaseKind::TransversalLine: return "transversal_line";
    case CaseKind::PositiveSide: return "positive_side";
    case CaseKind::NegativeSide: return "negative_side";
    }
    return "?";
}

Json verdict(const PinningVerdict& v) {
    Json j;
    if (v.pinned()) {
        j["verdict"] = "pinned";
        j["case"] = case_name(v.isolation().kind);
        j["dimE"] = v.isolation().dimE;
    } else {
        j["verdict"] = "not_pinned";
        j["certificate"] = certificate(v.certificate());
    }
    return j;
}

Json family(const NamedFamily& f) {
    Document d;
    d.constraints = f.constraints;
    d.polytopes = f.polytopes;
    Json j = serialize(d);
    j["name"] = f.name;
    j["expected"] = f.expected;
    if (f.label) j["label"] = to_string(*f.label);
    if (!f.escape_dirs.empty()) {
        Json es = Json::array();
        for (auto& u : f.escape_dirs) es.push_back(line(u));
        j["escape_dirs"] = es;
    }
    return j;
}

} // namespace linepin::io
