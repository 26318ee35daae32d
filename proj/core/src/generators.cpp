#include "linepin/generators.hpp"
#include "linepin/cone.hpp"
#include "linepin/errors.hpp"
#include "linepin/oracle.hpp"

#include <tuple>

namespace linepin {

namespace {

Constraint G(const Rat& lambda, long dx, long dy, long dz) {
    return make_constraint(lambda, {Rat(dx), Rat(dy), Rat(dz)});
}

Constraint flip(const Constraint& g) {
    return make_constraint(g.lambda, {-g.dir[0], -g.dir[1], -g.dir[2]});
}

using Line = std::tuple<Rat, long, long>;   // height, horizontal direction

} // namespace

NamedFamily gen_ortho8() {
    std::vector<Line> lines{{0, 1, 0}, {1, 0, 1}, {2, 1, 1}, {3, 1, -2}};
    NamedFamily f{"ortho8", {}, {}, "pinned", OrthoClass::C8, {}};
    std::vector<Constraint> base;
    for (auto& [l, x, y] : lines) {
        Constraint g = G(l, x, y, 0);
        base.push_back(g);
        f.constraints.push_back(g);
        f.constraints.push_back(flip(g));
    }
    TransversalCount tc = common_transversals(base);
    if (tc.infinite || tc.count > 2) throw GenericityFailure("ortho8 lines have too many common transversals");
    return f;
}

NamedFamily gen_quadric_4block() {
    return {"quadric_4block",
            {G(0, -1, 0, 0), G(1, 1, 1, 0), G(2, -1, -2, 0), G(3, 1, 3, 0)},
            {},
            "not_pinned",
            std::nullopt,
            {}};
}

NamedFamily gen_tangent_4pinning() {
    return {"tangent_4pinning",
            {G(0, -100, 0, -1), G(1, 1, 1, 0), G(2, -1, -2, 0), G(3, 1, 3, 0)},
            {},
            "pinned negative_side 1",
            std::nullopt,
            {}};
}

NamedFamily gen_six_k1() {
    return {"six_k1",
            {G(0, 0, -1, -1), G(0, 0, 1, -1), G(1, 1, 0, 1), G(1, -1, 0, 1), G(2, -1, 1, 0), G(2, 1, -1, 0)},
            {},
            "pinned positive_side 1",
            std::nullopt,
            {}};
}

NamedFamily gen_six_k2() {
    return {"six_k2",
            {G(0, 0, -1, -1), G(0, 0, 1, -1), G(1, 1, 0, 1), G(1, -1, 0, 1), G(2, -1, -1, 0), G(3, 1, 1, 0)},
            {},
            "pinned negative_side 2",
            std::nullopt,
            {}};
}

static std::vector<Constraint> k3_tail() {
    // directions from the arctan 2 and arctan 3 angles
    return {G(-1, -1, 3, 0), G(Rat(-1, 2), 1, -2, 0), G(Rat(1, 4), 1, 2, 0), G(Rat(1, 3), -1, -3, 0)};
}

NamedFamily gen_six_k3_open() {
    NamedFamily f{"six_k3_open", {G(0, 0, -1, -1), G(0, 0, 1, -1)}, {}, "not_pinned", std::nullopt, {}};
    for (auto& g : k3_tail()) f.constraints.push_back(g);
    return f;
}

NamedFamily gen_six_k3() {
    NamedFamily f{"six_k3", {G(0, 0, -1, 1), G(0, 0, 1, 1)}, {}, "pinned positive_side 3", std::nullopt, {}};
    for (auto& g : k3_tail()) f.constraints.push_back(g);
    return f;
}

NamedFamily gen_five_block() {
    std::vector<Line> lines{{0, 1, 0}, {1, 0, 1}, {2, 1, 1}, {3, 1, -1}, {4, 1, 2}};
    std::vector<Constraint> base;
    for (auto& [l, x, y] : lines) base.push_back(G(l, x, y, 0));
    Mat N;
    for (auto& g : base) {
        Vec a = halfspace_of(g);
        a.pop_back();
        N.push_back(a);
    }
    for (std::size_t skip = 0; skip < 5; ++skip) {
        Mat sub;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != skip) sub.push_back(N[i]);
        if (rank(sub) != 4) throw GenericityFailure("four of the five-block normals are dependent");
    }
    for (unsigned mask = 0; mask < 32; ++mask) {
        Mat M;
        std::vector<Constraint> F;
        for (std::size_t i = 0; i < 5; ++i) {
            bool f = mask & (1u << i);
            M.push_back(f ? neg(N[i]) : N[i]);
            F.push_back(f ? flip(base[i]) : base[i]);
        }
        if (surrounds(M, 4)) return {"five_block", F, {}, "pinned", OrthoClass::C1, {}};
    }
    throw GenericityFailure("no orientation of the five lines surrounds the origin");
}

namespace {

struct OrthoRecipe {
    std::vector<Line> free;    // orientation searched
    std::vector<Line> pairs;   // both orientations
};

std::optional<OrthoRecipe> recipe_for(OrthoClass c) {
    switch (c) {
    case OrthoClass::C2a: return OrthoRecipe{{{0, 1, 0}, {1, 1, 0}, {2, 1, 0}, {0, 0, 1}, {1, 0, 1}, {2, 0, 1}}, {}};
    case OrthoClass::C2b: return OrthoRecipe{{{0, 1, 0}, {0, -1, 2}, {0, -1, -2}, {1, 0, 1}, {1, 2, -1}, {1, -2, -1}}, {}};
    case OrthoClass::C3a:
        return OrthoRecipe{{{0, 1, 0}, {1, 1, 1}, {2, 1, 2}, {3, 1, 3}, {4, 5, 8}, {5, 3, 5}}, {}};
    case OrthoClass::C3b: return OrthoRecipe{{{0, 1, 0}, {1, 1, 0}, {2, 0, 1}, {2, 1, -1}, {3, 0, 1}, {3, 1, 1}}, {}};
    case OrthoClass::C3c: return OrthoRecipe{{{0, 1, 0}, {1, 1, 1}, {2, 1, 2}, {3, 1, 3}, {5, 1, 0}, {1, 1, -1}}, {}};
    case OrthoClass::C4a: return OrthoRecipe{{{0, 1, 0}, {1, 1, 1}, {2, 1, 2}, {3, 1, 3}, {-1, 1, 0}, {4, 1, 0}}, {}};
    case OrthoClass::C4b: return OrthoRecipe{{{0, 1, 0}, {1, 1, 1}, {2, 1, 2}, {3, 1, 3}, {0, -1, 2}, {0, -1, -2}}, {}};
    case OrthoClass::C4c: return OrthoRecipe{{{0, 1, 0}, {1, 1, 0}, {2, 0, 1}, {2, 1, -1}, {3, 0, 1}, {4, 0, 1}}, {}};
    case OrthoClass::C4d: return OrthoRecipe{{{0, 1, 0}, {1, 1, 0}, {2, 0, 1}, {2, 1, -1}, {0, -1, 2}, {0, -1, -2}}, {}};
    case OrthoClass::C5a: return OrthoRecipe{{{0, 1, 0}, {1, 1, 1}, {2, 1, 2}, {3, 1, 3}}, {{4, 1, 0}}};
    case OrthoClass::C5b: return OrthoRecipe{{{0, 1, 0}, {1, 1, 0}, {2, 0, 1}, {2, 1, -1}}, {{3, 0, 1}}};
    case OrthoClass::C6a: return OrthoRecipe{{{0, 1, 0}, {1, 1, 0}, {2, 1, 0}}, {{3, 0, 1}, {4, 1, 1}}};
    case OrthoClass::C6b: return OrthoRecipe{{{0, 1, 0}, {0, -1, 2}, {0, -1, -2}}, {{1, 1, 0}, {2, 0, 1}}};
    case OrthoClass::C7: return OrthoRecipe{{{0, 1, 0}, {1, 1, 0}, {2, 1, 0}, {0, -1, 2}, {0, -1, -2}}, {{3, 0, 1}}};
    default: return std::nullopt;
    }
}

} // namespace

NamedFamily gen_char_ortho(OrthoClass label) {
    if (label == OrthoClass::C8) {
        NamedFamily f = gen_ortho8();
        f.name = "char_ortho_8";
        return f;
    }
    if (label == OrthoClass::C1) {
        NamedFamily f = gen_five_block();
        f.name = "char_ortho_1";
        return f;
    }
    auto recipe = recipe_for(label);
    if (!recipe) throw UnsupportedLabel("no instance for label " + to_string(label));
    std::string tag = to_string(label);
    std::string name = "char_ortho_" + tag.substr(1, tag.size() - 2);
    const std::size_t k = recipe->free.size();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<Constraint> F;
        for (std::size_t i = 0; i < k; ++i) {
            auto& [l, x, y] = recipe->free[i];
            Constraint g = G(l, x, y, 0);
            F.push_back(mask & (1u << i) ? flip(g) : g);
        }
        for (auto& [l, x, y] : recipe->pairs) {
            F.push_back(G(l, x, y, 0));
            F.push_back(G(l, -x, -y, 0));
        }
        try {
            if (classify_ortho_pinning(F).label == label) return {name, F, {}, "pinned", label, {}};
        } catch (const NotAMinimalOrthoPinning&) {
        }
    }
    throw UnsupportedLabel("instance search failed for label " + tag);
}

std::vector<OrthoClass> supported_char_ortho() {
    std::vector<OrthoClass> out;
    for (int i = 0; i < 16; ++i) {
        auto c = static_cast<OrthoClass>(i);
        if (c == OrthoClass::C1 || c == OrthoClass::C8 || recipe_for(c)) out.push_back(c);
    }
    return out;
}

namespace {

struct V2 {
    Rat x, y;
};

V2 circle_point(const Rat& t) { return {(1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)}; }
Rat cr(const V2& a, const V2& b) { return a.x * b.y - a.y * b.x; }
// b lies in cone(a, c), the cone spanning less than a half turn
bool in_cone(const V2& a, const V2& b, const V2& c) { return cr(a, b) >= 0 && cr(b, c) >= 0; }

ConvexPolytope mirror(const ConvexPolytope& P, int axis) {
    ConvexPolytope Q = P;
    for (auto& v : Q.vertices) v[axis] = -v[axis];
    return Q;
}

Vec3 P3(const Rat& x, const Rat& y, const Rat& z) { return {x, y, z}; }

} // namespace

NamedFamily gen_infinite(int n) {
    if (n < 1) throw PreconditionViolated("need at least one wedge");
    NamedFamily f{"infinite_" + std::to_string(n), {}, {}, "pinned", std::nullopt, {}};

    // edge on the y-axis, body on x >= 0
    ConvexPolytope D1{{P3(0, -1, 0), P3(0, 1, 0), P3(1, -1, -1), P3(1, 1, -1), P3(1, -1, 1), P3(1, 1, 1)}};
    // edge on {(t, 0, 1)}, body on y >= 0
    ConvexPolytope D3{{P3(-1, 0, 1), P3(1, 0, 1), P3(-1, 1, 0), P3(1, 1, 0), P3(-1, 1, 2), P3(1, 1, 2)}};
    // edges on {(t, -t, -1)} and {(t, -t, 2)}
    auto slab = [](const Rat& h) {
        return ConvexPolytope{{P3(1, -1, h), P3(-1, 1, h), P3(2, 0, h + 2), P3(2, 0, h - 2), P3(0, 2, h + 2),
                               P3(0, 2, h - 2)}};
    };
    f.polytopes = {D1, mirror(D1, 0), D3, mirror(D3, 1), slab(-1), slab(2)};

    // wedge directions: overlapping subdivision of the angular range of W
    const Rat T0(23, 100), T1(5, 8);
    const Rat step = (T1 - T0) / n, eps = step / 8;
    std::vector<std::pair<V2, V2>> vw;
    for (int i = 1; i <= n; ++i)
        vw.push_back({circle_point(T0 + step * (i - 1) - eps), circle_point(T0 + step * i + eps)});

    const V2 lowW{2, 1}, highW{1, 2};
    if (!in_cone(vw.front().first, lowW, vw.front().second) || !in_cone(vw.back().first, highW, vw.back().second))
        throw GenericityFailure("wedges do not cover the boundary of W");
    for (int i = 0; i + 1 < n; ++i)
        if (!(cr(vw[i + 1].first, vw[i].second) > 0)) throw GenericityFailure("consecutive wedges do not overlap");
    std::vector<V2> mid;
    for (int i = 0; i < n; ++i) {
        V2 m{vw[i].first.x + vw[i].second.x, vw[i].first.y + vw[i].second.y};
        if (!(cr(lowW, m) > 0 && cr(m, highW) > 0)) throw GenericityFailure("middle vector outside W");
        for (int j = 0; j < n; ++j)
            if (j != i && in_cone(vw[j].first, m, vw[j].second))
                throw GenericityFailure("middle vector covered by another wedge");
        mid.push_back(m);
        f.escape_dirs.push_back({Rat(0), m.x, m.y, Rat(0)});
    }

    // heights where the escape lines cross the wedge boundaries
    Rat Z = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (const V2& v : {vw[j].first, vw[j].second}) {
                Rat den = mid[i].y * v.x - mid[i].x * v.y;
                if (den == 0) continue;
                Rat z = -mid[i].x * v.y / den;
                if (abs(z) + 1 > Z) Z = abs(z) + 1;
            }
        }
    Z = Rat(Int(numerator(Z) / denominator(Z)) + 1);

    for (int i = 0; i < n; ++i) {
        const V2 &v = vw[i].first, &w = vw[i].second;
        V2 rv{-v.y, v.x}, rw{-w.y, w.x};
        if (w.x * rv.x + w.y * rv.y > 0) rv = {-rv.x, -rv.y};
        if (v.x * rw.x + v.y * rw.y > 0) rw = {-rw.x, -rw.y};
        V2 m{v.x + w.x, v.y + w.y};
        Rat s = 1;
        for (;;) {
            std::vector<V2> base{{0, 0}, {s * rv.x, s * rv.y}, {s * (rv.x - m.x), s * (rv.y - m.y)},
                                 {s * (rw.x - m.x), s * (rw.y - m.y)}, {s * rw.x, s * rw.y}};
            ConvexPolytope F;
            for (auto& b : base) {
                F.vertices.push_back(P3(b.x, b.y, -Z));
                F.vertices.push_back(P3(b.x, b.y, Z));
            }
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                if (j == i) continue;
                LineCoords u = f.escape_dirs[j];
                if (!line_meets(F, line_of(u))) ok = false;
            }
            if (ok) {
                f.polytopes.push_back(F);
                break;
            }
            s *= 2;
            if (s > 1 << 20) throw GenericityFailure("wedge cropping did not converge");
        }
    }
    return f;
}

std::vector<std::string> generator_names() {
    std::vector<std::string> out{"ortho8", "quadric_4block", "tangent_4pinning", "six_k1", "six_k2",
                                 "six_k3", "six_k3_open", "five_block", "infinite"};
    for (auto c : supported_char_ortho()) {
        std::string t = to_string(c);
        out.push_back("char_ortho_" + t.substr(1, t.size() - 2));
    }
    return out;
}

NamedFamily generate(const std::string& name, int n) {
    if (name == "ortho8") return gen_ortho8();
    if (name == "quadric_4block") return gen_quadric_4block();
    if (name == "tangent_4pinning") return gen_tangent_4pinning();
    if (name == "six_k1") return gen_six_k1();
    if (name == "six_k2") return gen_six_k2();
    if (name == "six_k3") return gen_six_k3();
    if (name == "six_k3_open") return gen_six_k3_open();
    if (name == "five_block") return gen_five_block();
    if (name == "infinite") return gen_infinite(n);
    const std::string pre = "char_ortho_";
    if (name.rfind(pre, 0) == 0) {
        auto c = ortho_class_from_string(name.substr(pre.size()));
        if (!c) throw UnsupportedLabel("unknown label " + name.substr(pre.size()));
        return gen_char_ortho(*c);
    }
    throw PreconditionViolated("unknown generator " + name);
}

} // namespace linepin
