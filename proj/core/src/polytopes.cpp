#include "linepin/polytopes.hpp"
#include "linepin/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace linepin {

std::string to_string(TangencyKind k) {
    switch (k) {
    case TangencyKind::InteriorIntersect: return "interior_intersect";
    case TangencyKind::EdgeInterior: return "edge_interior";
    case TangencyKind::VertexContact: return "vertex_contact";
    case TangencyKind::CoplanarFacet: return "coplanar_facet";
    case TangencyKind::Miss: return "miss";
    }
    return "?";
}

namespace {

Vec3 minus(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Rat dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Rat cross2(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) { return ax * by - ay * bx; }

struct AxisHit {
    bool miss = false;
    Rat lo, hi;
};

AxisHit axis_interval(const Hull3& H) {
    AxisHit r;
    bool haveLo = false, haveHi = false;
    for (auto& f : H.facets) {
        const Rat& nz = f.n[2];
        if (nz == 0) {
            if (f.c < 0) r.miss = true;
            continue;
        }
        Rat b = f.c / nz;
        if (nz > 0) {
            if (!haveHi || b < r.hi) r.hi = b;
            haveHi = true;
        } else {
            if (!haveLo || b > r.lo) r.lo = b;
            haveLo = true;
        }
    }
    if (!r.miss && r.lo > r.hi) r.miss = true;
    return r;
}

Vec3 centroid(const Hull3& H, const Facet& f) {
    Vec3 c{0, 0, 0};
    for (auto v : f.verts)
        for (int k = 0; k < 3; ++k) c[k] += H.verts[v][k];
    for (int k = 0; k < 3; ++k) c[k] /= static_cast<long>(f.verts.size());
    return c;
}

OrientedLine vertical_through(const Rat& x, const Rat& y) {
    return {{x, y, Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
}

// orient a constraint so a vertical probe through (px, py) satisfies it strictly
Constraint oriented(const Rat& lambda, const Vec3& dir, const Rat& px, const Rat& py) {
    Constraint g = make_constraint(lambda, dir);
    OrientedLine probe = vertical_through(px, py);
    int s = sgn(side_det(probe, g.line()));
    if (s > 0) g = make_constraint(lambda, {-dir[0], -dir[1], -dir[2]});
    if (s == 0) throw std::logic_error("probe line meets the constraint");
    if (sgn(side_det(probe, g.line())) >= 0 || sgn(side_det(vertical_through(-px, -py), g.line())) <= 0)
        throw std::logic_error("probe orientation is inconsistent");
    return g;
}

// halfspace from an edge line, oriented so the probe is strictly inside
Vec oriented_form(const OrientedLine& edge, const OrientedLine& probe) {
    Vec a = sidedness_form(edge);
    int s = sgn(side_det(probe, edge));
    if (s == 0) throw std::logic_error("probe line meets a facet edge");
    return s > 0 ? neg(a) : a;
}

bool on_segment(const Vec3& a, const Vec3& b, const Vec3& x) {
    Vec3 d = minus(b, a), e = minus(x, a);
    if (!parallel(Vec{d[0], d[1], d[2]}, Vec{e[0], e[1], e[2]})) return false;
    Rat t = dot3(e, d) / dot3(d, d);
    return t >= 0 && t <= 1;
}

} // namespace

Tangency tangency(const ConvexPolytope& P) {
    Hull3 H = hull3(P.vertices);
    Tangency t;
    AxisHit hit = axis_interval(H);
    if (hit.miss) return t;
    for (auto& f : H.facets)
        if (f.n[2] == 0 && f.c == 0) {
            t.kind = TangencyKind::CoplanarFacet;
            t.facet = f;
            return t;
        }
    if (hit.lo < hit.hi) {
        t.kind = TangencyKind::InteriorIntersect;
        return t;
    }
    t.z0 = hit.lo;
    Vec3 x0{0, 0, t.z0};
    std::vector<const Facet*> tight;
    Mat normals;
    for (auto& f : H.facets)
        if (dot3(f.n, x0) == f.c) {
            tight.push_back(&f);
            normals.push_back({f.n[0], f.n[1], f.n[2]});
        }
    int r = rank(normals);
    if (r == 2) {
        t.kind = TangencyKind::EdgeInterior;
        for (auto& [a, b] : H.edges)
            if (on_segment(H.verts[a], H.verts[b], x0)) {
                t.points = {H.verts[a], H.verts[b]};
                break;
            }
        return t;
    }
    if (r != 3) throw std::logic_error("unexpected contact with the reference line");
    t.kind = TangencyKind::VertexContact;
    std::size_t v = std::find(H.verts.begin(), H.verts.end(), x0) - H.verts.begin();
    std::vector<std::size_t> nb;
    for (auto& [a, b] : H.edges) {
        if (a == v) nb.push_back(b);
        if (b == v) nb.push_back(a);
    }
    auto e = [&](std::size_t w) { return minus(H.verts[w], x0); };
    std::size_t ia = nb.size(), ib = nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
        bool allLeft = true, allRight = true;
        for (std::size_t j = 0; j < nb.size(); ++j) {
            Rat c = cross2(e(nb[i])[0], e(nb[i])[1], e(nb[j])[0], e(nb[j])[1]);
            if (c < 0) allLeft = false;
            if (c > 0) allRight = false;
        }
        if (allLeft && ia == nb.size()) ia = i;
        if (allRight && ib == nb.size()) ib = i;
    }
    if (ia == nb.size() || ib == nb.size() || ia == ib) throw std::logic_error("no silhouette edges at the vertex");
    t.points = {x0, H.verts[nb[ia]], H.verts[nb[ib]]};
    return t;
}

std::vector<Constraint> constraints_of_polytope(const ConvexPolytope& P) {
    Tangency t = tangency(P);
    if (t.kind == TangencyKind::CoplanarFacet)
        throw CoplanarFacetExcluded("a facet plane contains the reference line");
    if (t.kind != TangencyKind::EdgeInterior && t.kind != TangencyKind::VertexContact)
        throw NotTangent("polytope is not tangent to the reference line (" + to_string(t.kind) + ")");
    if (t.kind == TangencyKind::EdgeInterior) {
        Vec3 d = minus(t.points[1], t.points[0]);
        Rat side = 0;
        for (auto& w : P.vertices) {
            Rat c = cross2(d[0], d[1], w[0], w[1]);
            if (abs(c) > abs(side)) side = c;
        }
        Rat px = -d[1], py = d[0];
        if (side < 0) { px = -px; py = -py; }
        return {oriented(t.z0, d, px, py)};
    }
    Vec3 ea = minus(t.points[1], t.points[0]);
    Vec3 eb = minus(t.points[2], t.points[0]);
    std::vector<Constraint> out;
    for (int k = 0; k < 2; ++k) {
        const Vec3& e = k == 0 ? ea : eb;
        const Vec3& o = k == 0 ? eb : ea;
        Rat px = -e[1], py = e[0];
        if (cross2(e[0], e[1], o[0], o[1]) < 0) { px = -px; py = -py; }
        out.push_back(oriented(t.z0, e, px, py));
    }
    return out;
}

std::vector<Piece> local_pieces(const ConvexPolytope& P) {
    Hull3 H = hull3(P.vertices);
    AxisHit hit = axis_interval(H);
    if (hit.miss) throw NotTangent("polytope misses the reference line");
    std::vector<Piece> pieces;
    bool coplanar = std::any_of(H.facets.begin(), H.facets.end(),
                                [](const Facet& f) { return f.n[2] == 0 && f.c == 0; });
    if (!coplanar && hit.lo < hit.hi) return {Piece{}};

    for (auto& f : H.facets) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (auto& [a, b] : H.edges)
            if (std::count(f.verts.begin(), f.verts.end(), a) && std::count(f.verts.begin(), f.verts.end(), b))
                edges.emplace_back(a, b);
        Vec3 c = centroid(H, f);

        if (f.n[2] != 0) {
            Rat z = f.c / f.n[2];
            if (z < hit.lo || z > hit.hi) continue;
            Vec3 x0{0, 0, z};
            OrientedLine probe = vertical_through(c[0], c[1]);
            Piece p;
            for (auto& [a, b] : edges) {
                if (!on_segment(H.verts[a], H.verts[b], x0)) continue;
                OrientedLine L{H.verts[a], minus(H.verts[b], H.verts[a])};
                p.push_back(oriented_form(L, probe));
            }
            pieces.push_back(std::move(p));
            continue;
        }
        if (f.c != 0) continue;

        // plane through the reference line; in-plane coordinate w along (-ny, nx)
        const Rat &nx = f.n[0], &ny = f.n[1];
        auto w = [&](const Vec3& p) { return -ny * p[0] + nx * p[1]; };
        std::vector<OrientedLine> touching;
        for (auto& [a, b] : edges) {
            const Vec3 &A = H.verts[a], &B = H.verts[b];
            Rat wa = w(A), wb = w(B);
            bool hits = false;
            if (wa == 0 && wb == 0) {
                Rat zl = std::min(A[2], B[2]), zh = std::max(A[2], B[2]);
                hits = !(zh < hit.lo || zl > hit.hi);
            } else if (sgn(wa) * sgn(wb) <= 0) {
                Rat z = A[2] + (B[2] - A[2]) * wa / (wa - wb);
                hits = z >= hit.lo && z <= hit.hi;
            }
            if (hits) touching.push_back({A, minus(B, A)});
        }
        for (int sigma : {1, -1}) {
            Piece p;
            p.push_back(scale(Rat(sigma), Vec{nx, ny, -nx, -ny, Rat(0)}));
            OrientedLine probe{c, {sigma * nx, sigma * ny, Rat(1)}};
            for (auto& L : touching) p.push_back(oriented_form(L, probe));
            pieces.push_back(std::move(p));
        }
    }
    return pieces;
}

bool line_meets(const ConvexPolytope& P, const OrientedLine& L) {
    Hull3 H = hull3(P.vertices);
    std::optional<Rat> lo, hi;
    for (auto& f : H.facets) {
        Rat a = dot3(f.n, L.dir);
        Rat b = f.c - dot3(f.n, L.point);
        if (a == 0) {
            if (b < 0) return false;
            continue;
        }
        Rat t = b / a;
        if (a > 0) {
            if (!hi || t < *hi) hi = t;
        } else {
            if (!lo || t > *lo) lo = t;
        }
    }
    return !(lo && hi && *lo > *hi);
}

bool polytopes_intersect(const ConvexPolytope& A, const ConvexPolytope& B) {
    Hull3 HA = hull3(A.vertices), HB = hull3(B.vertices);
    std::vector<const Facet*> fs;
    for (auto& f : HA.facets) fs.push_back(&f);
    for (auto& f : HB.facets) fs.push_back(&f);
    const std::size_t m = fs.size(), n = 6 + m;
    Mat M;
    Vec b;
    for (std::size_t i = 0; i < m; ++i) {
        Vec row(n, Rat(0));
        for (int k = 0; k < 3; ++k) {
            row[k] = fs[i]->n[k];
            row[3 + k] = -fs[i]->n[k];
        }
        row[6 + i] = 1;
        M.push_back(std::move(row));
        b.push_back(fs[i]->c);
    }
    return feasible_standard(M, b).has_value();
}

bool pairwise_disjoint(const std::vector<ConvexPolytope>& Ps) {
    for (std::size_t i = 0; i < Ps.size(); ++i)
        for (std::size_t j = i + 1; j < Ps.size(); ++j)
            if (polytopes_intersect(Ps[i], Ps[j])) return false;
    return true;
}

namespace {

struct Member {
    std::size_t index;
    std::vector<Piece> pieces;
};

struct Prepared {
    std::vector<Member> members;
    std::vector<std::size_t> dropped, coplanar;
};

Prepared prepare(const std::vector<ConvexPolytope>& family) {
    Prepared p;
    for (std::size_t i = 0; i < family.size(); ++i) {
        Tangency t = tangency(family[i]);
        switch (t.kind) {
        case TangencyKind::Miss:
            throw NotTangent("polytope " + std::to_string(i) + " misses the reference line");
        case TangencyKind::InteriorIntersect:
            p.dropped.push_back(i);
            break;
        case TangencyKind::CoplanarFacet:
            p.coplanar.push_back(i);
            p.members.push_back({i, local_pieces(family[i])});
            break;
        default:
            p.members.push_back({i, {halfspaces_of(constraints_of_polytope(family[i]))}});
        }
    }
    return p;
}

PolytopeVerdict decide_prepared(const Prepared& prep) {
    PolytopeVerdict out{decide_cone({}), prep.dropped, prep.coplanar, {}, {}};
    std::optional<IsolationCase> firstCase;
    std::vector<std::size_t> sel;
    bool escaped = false;

    std::function<void(std::size_t, const std::vector<Vec>&)> rec = [&](std::size_t k, const std::vector<Vec>& H) {
        if (escaped) return;
        if (k > 0 && k < prep.members.size()) {
            PinningVerdict v = decide_cone(H);
            if (v.pinned()) {
                if (!firstCase) firstCase = v.isolation();
                return;
            }
        }
        if (k == prep.members.size()) {
            PinningVerdict v = decide_cone(H);
            if (v.pinned()) {
                if (!firstCase) firstCase = v.isolation();
                return;
            }
            escaped = true;
            out.verdict = v;
            out.selection = sel;
            out.escape_cone = H;
            return;
        }
        for (std::size_t j = 0; j < prep.members[k].pieces.size() && !escaped; ++j) {
            std::vector<Vec> H2 = H;
            for (auto& a : prep.members[k].pieces[j]) H2.push_back(a);
            sel.push_back(j);
            rec(k + 1, H2);
            sel.pop_back();
        }
    };
    rec(0, {});
    if (!escaped) out.verdict = PinningVerdict{*firstCase};
    return out;
}

} // namespace

PolytopeVerdict decide_polytope_pinning(const std::vector<ConvexPolytope>& family) {
    return decide_prepared(prepare(family));
}

std::vector<std::size_t> minimize_polytope_pinning(const std::vector<ConvexPolytope>& family) {
    Prepared all = prepare(family);
    if (!decide_prepared(all).verdict.pinned()) throw NotAPinning("polytopes do not pin the reference line");
    std::vector<std::size_t> kept(family.size());
    std::iota(kept.begin(), kept.end(), 0);
    auto restrict_to = [&](const std::vector<std::size_t>& idx) {
        Prepared p;
        for (auto& m : all.members)
            if (std::count(idx.begin(), idx.end(), m.index)) p.members.push_back(m);
        return p;
    };
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::vector<std::size_t> trial;
        for (auto j : kept)
            if (j != i) trial.push_back(j);
        if (decide_prepared(restrict_to(trial)).verdict.pinned()) kept = std::move(trial);
    }
    bool anyCoplanar = false;
    for (auto i : kept)
        if (std::count(all.coplanar.begin(), all.coplanar.end(), i)) anyCoplanar = true;
    if (!anyCoplanar) {
        std::vector<ConvexPolytope> K;
        for (auto i : kept) K.push_back(family[i]);
        if (kept.size() > 8) throw BoundViolation("minimal polytope pinning with more than eight members");
        if (kept.size() > 6 && pairwise_disjoint(K))
            throw BoundViolation("minimal pinning by disjoint polytopes with more than six members");
    }
    return kept;
}

} // namespace linepin
