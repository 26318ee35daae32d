#include "ref.hpp"

#include <algorithm>
#include <numeric>

namespace ref {

Rat det(const Mat& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rat total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        Rat term = inv % 2 ? -1 : 1;
        for (int i = 0; i < n && term != 0; ++i) term *= m[i][p[i]];
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

Rat side_det(const OrientedLine& a, const OrientedLine& b) {
    Mat m(4, Vec(4));
    Vec3 pts[4];
    for (int i = 0; i < 3; ++i) {
        pts[0][i] = a.point[i];
        pts[1][i] = a.point[i] + a.dir[i];
        pts[2][i] = b.point[i];
        pts[3][i] = b.point[i] + b.dir[i];
    }
    for (int c = 0; c < 4; ++c) {
        for (int r = 0; r < 3; ++r) m[r][c] = pts[c][r];
        m[3][c] = 1;
    }
    return det(m);
}

static OrientedLine line_at(const LineCoords& u) {
    return {{u[0], u[1], Rat(0)}, {u[2] - u[0], u[3] - u[1], Rat(1)}};
}

Vec halfspace(const Constraint& g) {
    OrientedLine L{{Rat(0), Rat(0), g.lambda}, g.dir};
    Vec a(5);
    for (int i = 0; i < 4; ++i) {
        LineCoords e{0, 0, 0, 0};
        e[i] = 1;
        a[i] = ref::side_det(L, line_at(e));
    }
    a[4] = ref::side_det(L, line_at({0, 1, 1, 0})) - a[1] - a[2];
    return a;
}

bool satisfies(const Constraint& g, const LineCoords& u) {
    return ref::side_det({{Rat(0), Rat(0), g.lambda}, g.dir}, line_at(u)) <= 0;
}

bool escapes_along(const std::vector<Constraint>& F, const LineCoords& u, int steps) {
    if (u == LineCoords{0, 0, 0, 0}) return false;
    Rat t = 1;
    for (int k = 0; k <= steps; ++k, t /= 2) {
        LineCoords v{t * u[0], t * u[1], t * u[2], t * u[3]};
        for (auto& g : F)
            if (!ref::satisfies(g, v)) return false;
    }
    return true;
}

static Rat qf(const Vec& x) { return x[1] * x[2] - x[0] * x[3]; }

static bool in_halfspaces(const std::vector<Vec>& H, const Vec& x) {
    for (auto& a : H) {
        Rat s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
        if (s > 0) return false;
    }
    return true;
}

bool certificate_ok(const EscapeCertificate& c, const std::vector<Vec>& H) {
    if (auto* w = std::get_if<DirectWitness>(&c)) {
        if (w->u == LineCoords{0, 0, 0, 0}) return false;
        Rat t = 1;
        for (int k = 0; k <= 40; ++k, t /= 2) {
            Vec x{t * w->u[0], t * w->u[1], t * w->u[2], t * w->u[3], Rat(0)};
            x[4] = qf(x);
            if (!in_halfspaces(H, x)) return false;
        }
        return true;
    }
    auto& s = std::get<SegmentWitness>(c);
    if (!in_halfspaces(H, s.p) || !in_halfspaces(H, s.q)) return false;
    // segment must avoid the origin
    Mat pq{s.p, s.q};
    if (rank(pq) < 2) return false;
    Rat t = Rat(1, 1 << 20);
    for (int k = 0; k < 20; ++k, t /= 2) {
        Rat fp = t * s.p[4] - t * t * qf(s.p);
        Rat fq = t * s.q[4] - t * t * qf(s.q);
        if (!(fp * fq < 0)) return false;
    }
    return true;
}

bool certificate_ok(const EscapeCertificate& c, const std::vector<Constraint>& F) {
    std::vector<Vec> H;
    for (auto& g : F) H.push_back(halfspace(g));
    if (auto* w = std::get_if<DirectWitness>(&c)) return escapes_along(F, w->u) && certificate_ok(c, H);
    return certificate_ok(c, H);
}

// fraction-free elimination, reference copy
int rank(Mat m) {
    int r = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        for (int i = 0; i < rows; ++i)
            if (i != r && m[i][c] != 0) {
                Rat f = m[i][c] / m[r][c];
                for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            }
        ++r;
    }
    return r;
}

std::optional<Vec> coords_in(const Mat& S, const Vec& b) {
    // normal equations (S S^T) lambda = S b, then check S^T lambda = b
    const int k = static_cast<int>(S.size());
    const int d = static_cast<int>(b.size());
    Mat G(k, Vec(k));
    Vec rhs(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            for (int t = 0; t < d; ++t) G[i][j] += S[i][t] * S[j][t];
        for (int t = 0; t < d; ++t) rhs[i] += S[i][t] * b[t];
    }
    Rat D = det(G);
    if (D == 0) return std::nullopt;
    Vec lam(k);
    for (int i = 0; i < k; ++i) {
        Mat Gi = G;
        for (int r = 0; r < k; ++r) Gi[r][i] = rhs[r];
        lam[i] = det(Gi) / D;
    }
    for (int t = 0; t < d; ++t) {
        Rat s = 0;
        for (int i = 0; i < k; ++i) s += lam[i] * S[i][t];
        if (s != b[t]) return std::nullopt;
    }
    return lam;
}

bool in_cone(const Mat& X, const Vec& b) {
    const int d = static_cast<int>(b.size());
    bool zero = std::all_of(b.begin(), b.end(), [](const Rat& x) { return x == 0; });
    if (zero) return true;
    const int n = static_cast<int>(X.size());
    for (int k = 1; k <= std::min(n, d); ++k) {
        std::vector<bool> sel(n, false);
        std::fill(sel.begin(), sel.begin() + k, true);
        do {
            Mat S;
            for (int i = 0; i < n; ++i)
                if (sel[i]) S.push_back(X[i]);
            auto lam = coords_in(S, b);
            if (lam && std::all_of(lam->begin(), lam->end(), [](const Rat& x) { return x >= 0; })) return true;
        } while (std::prev_permutation(sel.begin(), sel.end()));
    }
    return false;
}

namespace {

Mat null_basis(const Mat& A, int n) {
    // reduced row echelon form, then one basis vector per free column
    Mat m = A;
    std::vector<int> piv;
    int r = 0;
    const int rows = static_cast<int>(m.size());
    for (int c = 0; c < n && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        Rat inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (int i = 0; i < rows; ++i)
            if (i != r && m[i][c] != 0) {
                Rat f = m[i][c];
                for (int j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
            }
        piv.push_back(c);
        ++r;
    }
    Mat N;
    for (int f = 0; f < n; ++f) {
        if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
        Vec x(n);
        x[f] = 1;
        for (int i = 0; i < r; ++i) x[piv[i]] = -m[i][f];
        N.push_back(x);
    }
    return N;
}

// Fourier-Motzkin: is {t : a.t <= b for all rows} nonempty
bool fm_feasible(std::vector<std::pair<Vec, Rat>> sys, int nv) {
    for (int k = nv - 1; k >= 0; --k) {
        std::vector<std::pair<Vec, Rat>> pos, negs, out;
        for (auto& [a, b] : sys) {
            if (a[k] > 0) pos.push_back({a, b});
            else if (a[k] < 0) negs.push_back({a, b});
            else out.push_back({a, b});
        }
        for (auto& [ap, bp] : pos)
            for (auto& [an, bn] : negs) {
                Rat sp = -an[k], sn = ap[k];
                Vec a(nv);
                for (int j = 0; j < nv; ++j) a[j] = sp * ap[j] + sn * an[j];
                a[k] = 0;
                Rat b = sp * bp + sn * bn;
                // scale so the first nonzero entry is +-1, then dedupe
                Rat lead = 0;
                for (auto& v : a)
                    if (v != 0) {
                        lead = abs(v);
                        break;
                    }
                if (lead != 0) {
                    for (auto& v : a) v /= lead;
                    b /= lead;
                }
                out.push_back({a, b});
            }
        std::sort(out.begin(), out.end());
        // keep the tightest bound per direction
        std::vector<std::pair<Vec, Rat>> tight;
        for (auto& e : out)
            if (tight.empty() || tight.back().first != e.first) tight.push_back(e);
        sys = std::move(tight);
    }
    for (auto& [a, b] : sys)
        if (b < 0) return false;
    return true;
}

// lambda_i >= 1 with sum lambda_i x_i = 0
bool positive_null(const Mat& X) {
    if (X.empty()) return true;
    const int n = static_cast<int>(X.size()), d = static_cast<int>(X[0].size());
    Mat A(d, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) A[j][i] = X[i][j];
    Mat N = null_basis(A, n);
    if (N.empty()) return false;
    const int nv = static_cast<int>(N.size());
    std::vector<std::pair<Vec, Rat>> sys;
    for (int i = 0; i < n; ++i) {
        Vec a(nv);
        for (int k = 0; k < nv; ++k) a[k] = -N[k][i];
        sys.push_back({a, Rat(-1)});
    }
    return fm_feasible(sys, nv);
}

} // namespace

bool spans_positively(const Mat& X, int d) { return !X.empty() && rank(X) == d && positive_null(X); }

bool cone_is_span(const Mat& X, int d) {
    (void)d;
    return positive_null(X);
}

bool critical_simplex(const Mat& X) {
    if (X.empty()) return false;
    const int d = static_cast<int>(X[0].size());
    Mat L;
    for (auto& x : X) {
        Vec y = x;
        y.push_back(1);
        L.push_back(y);
    }
    if (rank(L) != static_cast<int>(X.size())) return false;
    Vec b(d + 1);
    b[d] = 1;
    auto lam = coords_in(L, b);
    return lam && std::all_of(lam->begin(), lam->end(), [](const Rat& x) { return x > 0; });
}

static Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
static Rat dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool meets(const ConvexPolytope& P, const OrientedLine& L) {
    // project along the line direction and test the point against the 2D hull
    Vec3 a{0, 0, 0};
    for (int k = 0; k < 3 && a == Vec3{0, 0, 0}; ++k) {
        Vec3 e{0, 0, 0};
        e[k] = 1;
        a = cross(L.dir, e);
    }
    Vec3 b = cross(L.dir, a);
    auto proj = [&](const Vec3& x) { return std::pair<Rat, Rat>{dot3(a, x), dot3(b, x)}; };
    auto p = proj(L.point);
    std::vector<std::pair<Rat, Rat>> V;
    for (auto& v : P.vertices) V.push_back(proj(v));
    auto orient = [](const std::pair<Rat, Rat>& o, const std::pair<Rat, Rat>& s, const std::pair<Rat, Rat>& t) {
        return (s.first - o.first) * (t.second - o.second) - (s.second - o.second) * (t.first - o.first);
    };
    const std::size_t n = V.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (V[i] == p) return true;
        for (std::size_t j = i + 1; j < n; ++j) {
            // on segment
            if (orient(V[i], V[j], p) == 0) {
                auto lo = std::min(V[i], V[j]), hi = std::max(V[i], V[j]);
                if (lo <= p && p <= hi && V[i] != V[j]) return true;
            }
            for (std::size_t k = j + 1; k < n; ++k) {
                Rat s1 = orient(V[i], V[j], p), s2 = orient(V[j], V[k], p), s3 = orient(V[k], V[i], p);
                bool neg = s1 < 0 || s2 < 0 || s3 < 0, pos = s1 > 0 || s2 > 0 || s3 > 0;
                if (!(neg && pos) && orient(V[i], V[j], V[k]) != 0) return true;
            }
        }
    }
    return false;
}

std::array<Rat, 6> plucker(const LineCoords& u) {
    Vec3 p{u[0], u[1], Rat(0)}, q{u[2], u[3], Rat(1)};
    Vec3 d{q[0] - p[0], q[1] - p[1], q[2] - p[2]};
    Vec3 m = cross(p, q);
    return {d[0], d[1], d[2], m[0], m[1], m[2]};
}

Constraint random_constraint(std::mt19937_64& rng, int span, bool orthogonal) {
    std::uniform_int_distribution<int> c(-span, span), den(1, 2);
    for (;;) {
        int dx = c(rng), dy = c(rng), dz = orthogonal ? 0 : c(rng);
        if (dx == 0 && dy == 0) continue;
        return make_constraint(Rat(c(rng), den(rng)), {Rat(dx), Rat(dy), Rat(dz)});
    }
}

} // namespace ref

namespace ref {

std::vector<Constraint> random_family(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> size(lo, hi), coin(0, 2), c(-3, 3);
    int n = size(rng);
    std::vector<Constraint> F;
    while (static_cast<int>(F.size()) < n) {
        if (!F.empty() && coin(rng) == 0) {
            std::uniform_int_distribution<std::size_t> pick(0, F.size() - 1);
            const Constraint& g = F[pick(rng)];
            Rat s = coin(rng) == 1 ? -1 : 1;
            Constraint h = make_constraint(g.lambda, {s * g.dir[0], s * g.dir[1], Rat(c(rng))});
            if (std::find(F.begin(), F.end(), h) == F.end()) F.push_back(h);
            continue;
        }
        F.push_back(random_constraint(rng, 3, coin(rng) == 0));
    }
    return F;
}

Mat random_surrounding(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> c(-4, 4), w(1, 3), extra(0, d);
    // simplex around the origin, then extra points
    Mat X;
    do {
        X.assign(d, Vec(d));
        for (auto& x : X)
            for (auto& v : x) v = c(rng);
    } while (rank(X) != d);
    Vec last(d);
    for (auto& x : X) {
        Rat k = w(rng);
        for (int i = 0; i < d; ++i) last[i] -= k * x[i];
    }
    X.push_back(last);
    int more = d - 1 + extra(rng);
    for (int i = 0; i < more; ++i) {
        Vec x(d);
        for (auto& v : x) v = c(rng);
        X.push_back(x);
    }
    std::shuffle(X.begin(), X.end(), rng);
    return X;
}

} // namespace ref
