#pragma once

#include "linepin/linespace.hpp"
#include "linepin/pinning.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linepin {

struct ConvexPolytope {
    std::vector<Vec3> vertices;
};

// n . p <= c, (n, c) primitive
struct Facet {
    Vec3 n;
    Rat c;
    std::vector<std::size_t> verts;
};

struct Hull3 {
    std::vector<Vec3> verts;   // extreme points only
    std::vector<Facet> facets;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

Hull3 hull3(const std::vector<Vec3>& pts);

enum class TangencyKind { InteriorIntersect, EdgeInterior, VertexContact, CoplanarFacet, Miss };

struct Tangency {
    TangencyKind kind = TangencyKind::Miss;
    Rat z0;                       // contact height for edge and vertex contacts
    std::vector<Vec3> points;     // edge endpoints; or vertex followed by far ends of the silhouette edges
    std::optional<Facet> facet;   // CoplanarFacet
};

std::string to_string(TangencyKind k);

Tangency tangency(const ConvexPolytope& P);
std::vector<Constraint> constraints_of_polytope(const ConvexPolytope& P);

// lines near the reference line meeting P form the union of these cones (intersected with the quadric)
using Piece = std::vector<Vec>;
std::vector<Piece> local_pieces(const ConvexPolytope& P);

bool line_meets(const ConvexPolytope& P, const OrientedLine& L);
bool polytopes_intersect(const ConvexPolytope& A, const ConvexPolytope& B);
bool pairwise_disjoint(const std::vector<ConvexPolytope>& Ps);

struct PolytopeVerdict {
    PinningVerdict verdict;
    std::vector<std::size_t> dropped;     // InteriorIntersect members
    std::vector<std::size_t> coplanar;    // members decided through the facet model
    std::vector<std::size_t> selection;   // piece chosen per used member when not pinned
    std::vector<Vec> escape_cone;         // halfspaces the certificate refers to
};

PolytopeVerdict decide_polytope_pinning(const std::vector<ConvexPolytope>& family);
std::vector<std::size_t> minimize_polytope_pinning(const std::vector<ConvexPolytope>& family);

} // namespace linepin
