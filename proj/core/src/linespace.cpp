#include "linepin/linespace.hpp"
#include "linepin/errors.hpp"

#include <algorithm>

namespace linepin {

namespace {

Rat det4(std::array<std::array<Rat, 4>, 4> m) {
    Rat d = 1;
    for (int c = 0; c < 4; ++c) {
        int p = -1;
        for (int r = c; r < 4; ++r)
            if (m[r][c] != 0) { p = r; break; }
        if (p < 0) return 0;
        if (p != c) { std::swap(m[p], m[c]); d = -d; }
        d *= m[c][c];
        for (int r = c + 1; r < 4; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

Vec3 plus(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

} // namespace

Rat side_det(const OrientedLine& a, const OrientedLine& b) {
    std::array<Vec3, 4> pts{a.point, plus(a.point, a.dir), b.point, plus(b.point, b.dir)};
    std::array<std::array<Rat, 4>, 4> m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) m[r][c] = pts[c][r];
    for (int c = 0; c < 4; ++c) m[3][c] = 1;
    return det4(m);
}

Sidedness passes_right(const OrientedLine& a, const OrientedLine& b) {
    int s = sgn(side_det(a, b));
    if (s < 0) return Sidedness::Right;
    if (s > 0) return Sidedness::Left;
    return Sidedness::MeetsOrParallel;
}

OrientedLine Constraint::line() const { return {{Rat(0), Rat(0), lambda}, dir}; }

bool operator<(const Constraint& a, const Constraint& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.dir < b.dir;
}

Constraint make_constraint(const Rat& lambda, const Vec3& dir) {
    if (dir[0] == 0 && dir[1] == 0)
        throw DegenerateDirection("constraint direction must not be vertical or zero");
    Vec p = primitive(Vec{dir[0], dir[1], dir[2]});
    return {lambda, {p[0], p[1], p[2]}};
}

OrientedLine line_of(const LineCoords& u) {
    return {{u[0], u[1], Rat(0)}, {u[2] - u[0], u[3] - u[1], Rat(1)}};
}

Rat qform(const LineCoords& u) { return u[1] * u[2] - u[0] * u[3]; }
Rat qform(const Vec& x) { return x[1] * x[2] - x[0] * x[3]; }

Vec lift(const LineCoords& u) { return {u[0], u[1], u[2], u[3], qform(u)}; }
Vec embed(const LineCoords& u) { return {u[0], u[1], u[2], u[3], Rat(0)}; }
LineCoords coords4(const Vec& x) { return {x[0], x[1], x[2], x[3]}; }

Vec halfspace_of(const Constraint& g) {
    const Rat& l = g.lambda;
    const Rat &dx = g.dir[0], &dy = g.dir[1], &dz = g.dir[2];
    return {(1 - l) * dy, -(1 - l) * dx, l * dy, -l * dx, dz};
}

std::vector<Vec> halfspaces_of(const std::vector<Constraint>& F) {
    std::vector<Vec> H;
    H.reserve(F.size());
    for (auto& g : F) H.push_back(halfspace_of(g));
    return H;
}

Rat eval_zeta(const Constraint& g, const LineCoords& u) { return dot(halfspace_of(g), lift(u)); }

bool satisfies(const Constraint& g, const LineCoords& u) { return eval_zeta(g, u) <= 0; }

bool satisfies_all(const std::vector<Constraint>& F, const LineCoords& u) {
    return std::all_of(F.begin(), F.end(), [&](const Constraint& g) { return satisfies(g, u); });
}

Vec sidedness_form(const OrientedLine& L) {
    auto at = [&](const LineCoords& u) { return side_det(line_of(u), L); };
    LineCoords z{0, 0, 0, 0};
    if (at(z) != 0) throw PreconditionViolated("line does not meet the reference line");
    Vec a(5);
    for (int i = 0; i < 4; ++i) {
        LineCoords e{0, 0, 0, 0};
        e[i] = 1;
        a[i] = at(e);
    }
    a[4] = at({0, 1, 1, 0}) - a[1] - a[2];
    return a;
}

Constraint orthogonalize(const Constraint& g) {
    return make_constraint(g.lambda, {g.dir[0], g.dir[1], Rat(0)});
}

std::vector<Constraint> orthogonalize_family(const std::vector<Constraint>& F) {
    std::vector<Constraint> out;
    for (auto& g : F) {
        Constraint o = orthogonalize(g);
        if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
    }
    return out;
}

bool is_orthogonal(const Constraint& g) { return g.dir[2] == 0; }

bool meets_l0(const LineCoords& u) { return qform(u) == 0; }

std::array<Rat, 6> to_plucker(const LineCoords& u) {
    return {u[2] - u[0], u[3] - u[1], Rat(1), u[1], -u[0], u[0] * u[3] - u[1] * u[2]};
}

bool coplanar(const Constraint& a, const Constraint& b) {
    return a.dir[0] * b.dir[1] == a.dir[1] * b.dir[0];
}

bool concurrent(const Constraint& a, const Constraint& b) { return a.lambda == b.lambda; }

bool degenerate_pair(const Constraint& a, const Constraint& b) {
    return coplanar(a, b) && concurrent(a, b);
}

bool has_degenerate_pair(const std::vector<Constraint>& F) {
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = i + 1; j < F.size(); ++j)
            if (degenerate_pair(F[i], F[j])) return true;
    return false;
}

} // namespace linepin
