#include "linepin/errors.hpp"
#include "linepin/polytopes.hpp"

#include <algorithm>
#include <cstdint>

namespace linepin {

namespace {

Vec3 minus(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

} // namespace

Hull3 hull3(const std::vector<Vec3>& input) {
    std::vector<Vec3> pts;
    for (auto& p : input)
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    if (pts.size() < 4) throw DegeneratePolytope("polytope needs four affinely independent vertices");
    Mat diffs;
    for (auto& p : pts) {
        Vec3 d = minus(p, pts[0]);
        diffs.push_back({d[0], d[1], d[2]});
    }
    if (rank(diffs) != 3) throw DegeneratePolytope("polytope is not full-dimensional");

    const std::size_t n = pts.size();
    std::vector<std::pair<Vec3, Rat>> planes;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec3 nv = cross(minus(pts[j], pts[i]), minus(pts[k], pts[i]));
                if (nv[0] == 0 && nv[1] == 0 && nv[2] == 0) continue;
                Rat c = dot3(nv, pts[i]);
                bool le = true, ge = true;
                for (auto& p : pts) {
                    int s = sgn(dot3(nv, p) - c);
                    if (s > 0) le = false;
                    if (s < 0) ge = false;
                }
                if (!le && !ge) continue;
                if (!le) {
                    nv = {-nv[0], -nv[1], -nv[2]};
                    c = -c;
                }
                Vec prim = primitive(Vec{nv[0], nv[1], nv[2], c});
                std::pair<Vec3, Rat> pl{{prim[0], prim[1], prim[2]}, prim[3]};
                if (std::find(planes.begin(), planes.end(), pl) == planes.end()) planes.push_back(pl);
            }

    Hull3 H;
    // extreme points lie on facets with normals of rank 3
    std::vector<std::size_t> newIndex(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        Mat normals;
        for (auto& [nv, c] : planes)
            if (dot3(nv, pts[i]) == c) normals.push_back({nv[0], nv[1], nv[2]});
        if (rank(normals) == 3) {
            newIndex[i] = H.verts.size();
            H.verts.push_back(pts[i]);
        }
    }
    for (auto& [nv, c] : planes) {
        Facet f{nv, c, {}};
        for (std::size_t i = 0; i < H.verts.size(); ++i)
            if (dot3(nv, H.verts[i]) == c) f.verts.push_back(i);
        H.facets.push_back(std::move(f));
    }
    for (std::size_t a = 0; a < H.facets.size(); ++a)
        for (std::size_t b = a + 1; b < H.facets.size(); ++b) {
            std::vector<std::size_t> common;
            for (auto v : H.facets[a].verts)
                if (std::find(H.facets[b].verts.begin(), H.facets[b].verts.end(), v) != H.facets[b].verts.end())
                    common.push_back(v);
            if (common.size() == 2) H.edges.emplace_back(common[0], common[1]);
        }
    return H;
}

} // namespace linepin
