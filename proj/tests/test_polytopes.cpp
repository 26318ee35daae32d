#include "linepin/errors.hpp"
#include "linepin/generators.hpp"
#include "linepin/polytopes.hpp"
#include "support/ref.hpp"

#include <gtest/gtest.h>

using namespace linepin;

namespace {

ConvexPolytope box(Rat x0, Rat x1, Rat y0, Rat y1, Rat z0, Rat z1) {
    ConvexPolytope P;
    for (auto& x : {x0, x1})
        for (auto& y : {y0, y1})
            for (auto& z : {z0, z1}) P.vertices.push_back({x, y, z});
    return P;
}

bool meets_along(const std::vector<ConvexPolytope>& Ps, const LineCoords& u) {
    Rat t = Rat(1, 8) / inf_norm(Vec(u.begin(), u.end()));
    for (int k = 0; k <= 24; ++k, t /= 2) {
        LineCoords v{t * u[0], t * u[1], t * u[2], t * u[3]};
        for (auto& P : Ps)
            if (!ref::meets(P, line_of(v))) return false;
    }
    return true;
}

} // namespace

TEST(Polytopes, Hull3Cube) {
    ConvexPolytope P = box(0, 1, 0, 1, 0, 1);
    P.vertices.push_back({Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    Hull3 h = hull3(P.vertices);
    EXPECT_EQ(h.verts.size(), 8u);
    EXPECT_EQ(h.facets.size(), 6u);
    EXPECT_EQ(h.edges.size(), 12u);
    EXPECT_THROW(hull3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), DegeneratePolytope);
}

TEST(Polytopes, TangencyKinds) {
    EXPECT_EQ(tangency(box(1, 2, 0, 1, 0, 1)).kind, TangencyKind::Miss);
    EXPECT_EQ(tangency(box(-1, 1, -1, 1, -1, 1)).kind, TangencyKind::InteriorIntersect);
    auto fam = gen_infinite(3);
    Tangency e = tangency(fam.polytopes[0]);
    EXPECT_EQ(e.kind, TangencyKind::EdgeInterior);
    EXPECT_EQ(e.z0, 0);
    EXPECT_EQ(tangency(fam.polytopes[6]).kind, TangencyKind::CoplanarFacet);
    ConvexPolytope tet{{{0, -1, 1}, {0, 1, 1}, {1, 0, 0}, {1, 0, 2}}};
    Tangency te = tangency(tet);
    EXPECT_EQ(te.kind, TangencyKind::EdgeInterior);
    EXPECT_EQ(te.z0, 1);
    // pyramid with its apex on the axis
    ConvexPolytope tip{{{0, 0, 1}, {1, 0, 2}, {1, 1, 1}, {1, -1, 1}, {2, 0, 1}}};
    Tangency v = tangency(tip);
    EXPECT_EQ(v.kind, TangencyKind::VertexContact);
    EXPECT_EQ(v.z0, 1);
}

TEST(Polytopes, ConstraintsAreLocallyExact) {
    auto fam = gen_infinite(3);
    ConvexPolytope tip{{{0, 0, 1}, {1, 0, 2}, {1, 1, 1}, {1, -1, 1}, {2, 0, 1}}};
    std::vector<ConvexPolytope> Ps{fam.polytopes[0], fam.polytopes[2], fam.polytopes[4], tip};
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> c(-50, 50);
    for (auto& P : Ps) {
        auto G = constraints_of_polytope(P);
        ASSERT_FALSE(G.empty());
        int hits = 0;
        for (int s = 0; s < 400; ++s) {
            LineCoords u{Rat(c(rng), 5000), Rat(c(rng), 5000), Rat(c(rng), 5000), Rat(c(rng), 5000)};
            bool sat = true;
            for (auto& g : G) sat = sat && ref::satisfies(g, u);
            bool m = ref::meets(P, line_of(u));
            EXPECT_EQ(sat, m);
            hits += m;
        }
        EXPECT_GT(hits, 0);
    }
    EXPECT_THROW(constraints_of_polytope(fam.polytopes[6]), CoplanarFacetExcluded);
    EXPECT_THROW(constraints_of_polytope(box(1, 2, 0, 1, 0, 1)), NotTangent);
}

TEST(Polytopes, EdgeTetrahedron) {
    ConvexPolytope tet{{{0, -1, 1}, {0, 1, 1}, {1, 0, 0}, {1, 0, 2}}};
    auto G = constraints_of_polytope(tet);
    ASSERT_EQ(G.size(), 1u);
    EXPECT_EQ(G[0], make_constraint(1, {0, -1, 0}));
    // vertical probes on either side of the edge
    Rat e(1, 100);
    EXPECT_TRUE(ref::satisfies(G[0], {e, 0, e, 0}));
    EXPECT_FALSE(ref::satisfies(G[0], {-e, 0, -e, 0}));
    ConvexPolytope mirrored = tet;
    for (auto& v : mirrored.vertices) v[0] = -v[0];
    auto M = constraints_of_polytope(mirrored);
    ASSERT_EQ(M.size(), 1u);
    EXPECT_EQ(M[0], make_constraint(1, {0, 1, 0}));
}

TEST(Polytopes, DiamondPyramid) {
    // apex at the origin, base square in x = 1 with diagonals along y and z
    ConvexPolytope P{{{0, 0, 0}, {1, 1, 0}, {1, -1, 0}, {1, 0, 1}, {1, 0, -1}}};
    Tangency t = tangency(P);
    EXPECT_EQ(t.kind, TangencyKind::VertexContact);
    EXPECT_EQ(t.z0, 0);
    auto G = constraints_of_polytope(P);
    ASSERT_EQ(G.size(), 2u);
    std::vector<Vec3> dirs;
    for (auto& g : G) {
        EXPECT_EQ(g.lambda, 0);
        dirs.push_back(g.dir);
    }
    auto has = [&](const Vec3& d) {
        for (auto& x : dirs)
            if (parallel(Vec(x.begin(), x.end()), Vec(d.begin(), d.end()))) return true;
        return false;
    };
    EXPECT_TRUE(has({1, 1, 0}));
    EXPECT_TRUE(has({1, -1, 0}));
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> c(-50, 50);
    for (int s = 0; s < 300; ++s) {
        LineCoords u{Rat(c(rng), 5000), Rat(c(rng), 5000), Rat(c(rng), 5000), Rat(c(rng), 5000)};
        EXPECT_EQ(ref::satisfies(G[0], u) && ref::satisfies(G[1], u), ref::meets(P, line_of(u)));
    }
    // axis-aligned square base puts l0 in two facet planes
    ConvexPolytope Q{{{0, 0, 0}, {1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}}};
    EXPECT_EQ(tangency(Q).kind, TangencyKind::CoplanarFacet);
}

TEST(Polytopes, LineMeetsMatchesReference) {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> c(-4, 4);
    ConvexPolytope P{{{0, 0, 0}, {2, 0, 1}, {0, 3, 1}, {1, 1, 3}, {-1, 1, 1}}};
    for (int s = 0; s < 300; ++s) {
        LineCoords u{Rat(c(rng), 2), Rat(c(rng), 2), Rat(c(rng), 2), Rat(c(rng), 2)};
        EXPECT_EQ(line_meets(P, line_of(u)), ref::meets(P, line_of(u)));
    }
}

TEST(Polytopes, Disjointness) {
    EXPECT_TRUE(polytopes_intersect(box(0, 1, 0, 1, 0, 1), box(1, 2, 1, 2, 1, 2)));
    EXPECT_FALSE(polytopes_intersect(box(0, 1, 0, 1, 0, 1), box(2, 3, 0, 1, 0, 1)));
    EXPECT_TRUE(pairwise_disjoint({box(0, 1, 0, 1, 0, 1), box(2, 3, 0, 1, 0, 1), box(0, 1, 2, 3, 5, 6)}));
    // the wedges share a segment of the reference line
    EXPECT_FALSE(pairwise_disjoint(gen_infinite(3).polytopes));
}

TEST(Polytopes, InfiniteFamily) {
    for (int n : {3, 4}) {
        auto fam = gen_infinite(n);
        ASSERT_EQ(fam.polytopes.size(), static_cast<std::size_t>(6 + n));
        auto v = decide_polytope_pinning(fam.polytopes);
        EXPECT_TRUE(v.verdict.pinned());
        for (int i = 0; i < n; ++i) {
            auto Ps = fam.polytopes;
            Ps.erase(Ps.begin() + 6 + i);
            auto w = decide_polytope_pinning(Ps);
            ASSERT_FALSE(w.verdict.pinned());
            auto* d = std::get_if<DirectWitness>(&w.verdict.certificate());
            ASSERT_NE(d, nullptr);
            EXPECT_TRUE(meets_along(Ps, d->u));
            EXPECT_TRUE(meets_along(Ps, fam.escape_dirs[i]));
            EXPECT_FALSE(meets_along(fam.polytopes, fam.escape_dirs[i]));
        }
    }
}

TEST(Polytopes, DirectionsAloneDoNotPin) {
    auto fam = gen_infinite(3);
    std::vector<ConvexPolytope> D(fam.polytopes.begin(), fam.polytopes.begin() + 6);
    auto v = decide_polytope_pinning(D);
    ASSERT_FALSE(v.verdict.pinned());
    auto* d = std::get_if<DirectWitness>(&v.verdict.certificate());
    ASSERT_NE(d, nullptr);
    EXPECT_TRUE(meets_along(D, d->u));
}

TEST(Polytopes, InteriorMembersDropped) {
    auto fam = gen_infinite(3);
    auto Ps = fam.polytopes;
    Ps.push_back(box(-1, 1, -1, 1, 5, 6));
    auto v = decide_polytope_pinning(Ps);
    EXPECT_TRUE(v.verdict.pinned());
    EXPECT_EQ(v.dropped, (std::vector<std::size_t>{9}));
}
