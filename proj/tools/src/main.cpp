#include "io.hpp"
#include "linepin/errors.hpp"
#include "linepin/oracle.hpp"
#include "linepin/polytopes.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace linepin;
using io::Json;

namespace {

std::string input_path = "-";

std::string read_input() {
    if (input_path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream f(input_path);
    if (!f) throw io::InputError("cannot open " + input_path);
    return {std::istreambuf_iterator<char>(f), {}};
}

io::Document load() { return io::parse_document(read_input()); }

Json indices(const std::vector<std::size_t>& v) { return Json(v); }

Json cmd_check(const io::Document& d) {
    if (!d.polytopes.empty()) {
        PolytopeVerdict pv = decide_polytope_pinning(d.polytopes);
        Json j = io::verdict(pv.verdict);
        j["dropped"] = indices(pv.dropped);
        j["coplanar"] = indices(pv.coplanar);
        if (!pv.verdict.pinned()) {
            j["selection"] = indices(pv.selection);
            Json hs = Json::array();
            for (auto& h : pv.escape_cone) hs.push_back(io::vec(h));
            j["escape_cone"] = hs;
        }
        return j;
    }
    return io::verdict(decide_pinning(d.constraints));
}

Json cmd_minimize(const io::Document& d) {
    if (!d.polytopes.empty()) return {{"kept", indices(minimize_polytope_pinning(d.polytopes))}};
    MinimizeResult r = minimize_pinning(d.constraints);
    Json j = io::verdict(PinningVerdict{r.isolation});
    j["kept"] = indices(r.kept);
    return j;
}

Json cmd_classify(const io::Document& d) {
    Json j;
    if (!d.points.empty()) {
        SurroundingCase s = decompose_surrounding(d.points);
        j["surrounding"] = to_string(s.kind);
        if (!s.sizes.empty()) j["sizes"] = s.sizes;
        if (s.triangles) j["triangles"] = s.triangles;
        Json sx = Json::array();
        for (auto& x : s.simplices) sx.push_back(indices(x));
        j["simplices"] = sx;
        return j;
    }
    OrthoClassification c = classify_ortho_pinning(d.constraints);
    j["label"] = to_string(c.label);
    Json bs = Json::array();
    for (auto& b : c.blocks) bs.push_back({{"type", to_string(b.type)}, {"members", indices(b.members)}});
    j["blocks"] = bs;
    j["four_pinning"] = d.constraints.size() == 4 && detect_4pinning(d.constraints);
    return j;
}

Json cmd_orthogonalize(const io::Document& d) {
    io::Document out;
    out.constraints = orthogonalize_family(d.constraints);
    return io::serialize(out);
}

Json cmd_oracle(const io::Document& d, const SampleBudget& b) {
    OracleReport r = sample_escape(d.constraints, b);
    Json j;
    j["engine"] = r.engine_pinned ? "pinned" : "not_pinned";
    j["refuted"] = r.refuted ? io::line(*r.refuted) : Json(nullptr);
    Json pr = Json::array();
    for (std::size_t i = 0; i < r.per_radius.size(); ++i)
        pr.push_back({{"radius", io::rat(b.radii[i])},
                      {"witness", r.per_radius[i] ? io::line(*r.per_radius[i]) : Json(nullptr)}});
    j["per_radius"] = pr;
    j["samples"] = r.samples_tested;
    j["agreement"] = r.agreement;
    return j;
}

Json cmd_reduce_polytopes(const io::Document& d) {
    Json out = Json::array();
    io::Document cons;
    for (std::size_t i = 0; i < d.polytopes.size(); ++i) {
        Tangency t = tangency(d.polytopes[i]);
        Json e;
        e["index"] = i;
        e["tangency"] = to_string(t.kind);
        if (t.kind == TangencyKind::EdgeInterior || t.kind == TangencyKind::VertexContact) {
            e["z0"] = io::rat(t.z0);
            Json cs = Json::array();
            for (auto& g : constraints_of_polytope(d.polytopes[i])) {
                cs.push_back({{"lambda", io::rat(g.lambda)}, {"dir", io::vec3(g.dir)}});
                cons.constraints.push_back(g);
            }
            e["constraints"] = cs;
        }
        if (t.facet) e["facet"] = {{"n", io::vec3(t.facet->n)}, {"c", io::rat(t.facet->c)}};
        out.push_back(e);
    }
    Json j = io::serialize(cons);
    j["tangency"] = out;
    return j;
}

Json reduction(const io::Document& d, const std::string& which) {
    if (d.dim <= 0) throw io::InputError("dim: required and positive");
    std::vector<std::size_t> r;
    if (which == "steinitz") r = steinitz_reduce(d.points, d.dim);
    else if (which == "helly-flat") r = helly_flat_reduce(d.points, d.dim);
    else r = positive_cone_reduce(d.points, d.dim);
    return {{"kept", indices(r)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linepin: exact pinning decisions for lines and polytopes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("-i,--input", input_path, "input document, - for stdin");

    auto* check = app.add_subcommand("check", "decide whether the family pins the reference line");
    auto* minimize = app.add_subcommand("minimize", "minimal pinning subfamily");
    auto* classify = app.add_subcommand("classify", "orthogonal taxonomy, or surrounding decomposition of points");
    auto* ortho = app.add_subcommand("orthogonalize", "first-order model of the family");
    auto* gen = app.add_subcommand("generate", "emit a fixture family");
    std::string gen_name;
    int gen_n = 3;
    gen->add_option("name", gen_name)->required();
    gen->add_option("n", gen_n, "wedge count for infinite");
    bool list = false;
    gen->add_flag("--list", list, "print generator names");

    auto* oracle = app.add_subcommand("oracle", "sampling cross-check");
    std::vector<std::string> radii;
    SampleBudget budget;
    oracle->add_option("--radius", radii, "sampling radii as rationals");
    oracle->add_option("--grid", budget.grid);
    oracle->add_option("--random", budget.random);
    oracle->add_option("--seed", budget.seed);

    auto* reduce = app.add_subcommand("reduce-polytopes", "tangency report and induced constraints");
    auto* steinitz = app.add_subcommand("steinitz", "subset of points still surrounding the origin");
    auto* helly = app.add_subcommand("helly-flat", "halfspaces whose intersection is still the flat");
    auto* poscone = app.add_subcommand("positive-cone", "halfspaces keeping the cone in x_d > 0");

    // let "generate --list" through without a name
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--list") {
            for (auto& n : generator_names()) std::cout << n << "\n";
            return 0;
        }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Json out;
        if (*gen) {
            out = io::family(generate(gen_name, gen_n));
        } else {
            io::Document d = load();
            if (*check) out = cmd_check(d);
            else if (*minimize) out = cmd_minimize(d);
            else if (*classify) out = cmd_classify(d);
            else if (*ortho) out = cmd_orthogonalize(d);
            else if (*oracle) {
                if (!radii.empty()) {
                    budget.radii.clear();
                    for (auto& r : radii) budget.radii.push_back(io::parse_rat_field(r, "--radius"));
                }
                out = cmd_oracle(d, budget);
            } else if (*reduce) out = cmd_reduce_polytopes(d);
            else if (*steinitz) out = reduction(d, "steinitz");
            else if (*helly) out = reduction(d, "helly-flat");
            else if (*poscone) out = reduction(d, "positive-cone");
        }
        std::cout << out.dump() << "\n";
        return 0;
    } catch (const io::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
