#pragma once

#include "linepin/rational.hpp"

#include <array>
#include <vector>

namespace linepin {

using Vec3 = std::array<Rat, 3>;
using LineCoords = std::array<Rat, 4>;

struct OrientedLine {
    Vec3 point;
    Vec3 dir;
};

enum class Sidedness { Right, Left, MeetsOrParallel };

// det [[p1, p1+d1, p2, p2+d2]; [1 1 1 1]]
Rat side_det(const OrientedLine& a, const OrientedLine& b);
Sidedness passes_right(const OrientedLine& a, const OrientedLine& b);

// oriented line through (0,0,lambda); dir is kept as a primitive integer vector
struct Constraint {
    Rat lambda;
    Vec3 dir;

    OrientedLine line() const;
    bool operator==(const Constraint& o) const = default;
};
bool operator<(const Constraint& a, const Constraint& b);

Constraint make_constraint(const Rat& lambda, const Vec3& dir);

// line through (u1,u2,0) and (u3,u4,1)
OrientedLine line_of(const LineCoords& u);
Rat qform(const LineCoords& u);   // u2 u3 - u1 u4
Rat qform(const Vec& x);          // same on the first four entries
Vec lift(const LineCoords& u);
Vec embed(const LineCoords& u);
LineCoords coords4(const Vec& x);

Rat eval_zeta(const Constraint& g, const LineCoords& u);
bool satisfies(const Constraint& g, const LineCoords& u);
bool satisfies_all(const std::vector<Constraint>& F, const LineCoords& u);

// a in R^5 with zeta_g(u) = a . lift(u)
Vec halfspace_of(const Constraint& g);
std::vector<Vec> halfspaces_of(const std::vector<Constraint>& F);

// linear form a with side_det(line_of(u), L) = a . lift(u); L must meet or equal l0
Vec sidedness_form(const OrientedLine& L);

Constraint orthogonalize(const Constraint& g);
std::vector<Constraint> orthogonalize_family(const std::vector<Constraint>& F);
bool is_orthogonal(const Constraint& g);

bool meets_l0(const LineCoords& u);
std::array<Rat, 6> to_plucker(const LineCoords& u);

bool coplanar(const Constraint& a, const Constraint& b);
bool concurrent(const Constraint& a, const Constraint& b);
bool degenerate_pair(const Constraint& a, const Constraint& b);
bool has_degenerate_pair(const std::vector<Constraint>& F);

} // namespace linepin
