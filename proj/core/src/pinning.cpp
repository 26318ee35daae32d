#include "linepin/pinning.hpp"
#include "linepin/errors.hpp"

#include <algorithm>
#include <numeric>

namespace linepin {

namespace {

Rat bil(const Vec& x, const Vec& y) {
    return (x[1] * y[2] + x[2] * y[1] - x[0] * y[3] - x[3] * y[0]) / 2;
}

// visit index subsets of size k in lexicographic order; stop when f returns true
template <class F>
bool for_subsets(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (f(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// nonzero x in cone(G) with s*q(x) <= 0
std::optional<Vec> sign_point(const Mat& G, int s) {
    for (auto& g : G)
        if (s * sgn(qform(g)) <= 0) return g;
    std::optional<Vec> found;
    for (std::size_t k = 2; k <= std::min<std::size_t>(4, G.size()) && !found; ++k) {
        for_subsets(G.size(), k, [&](const std::vector<std::size_t>& S) {
            Mat rows;
            for (auto i : S) rows.push_back(G[i]);
            if (rank(rows) < static_cast<int>(k)) return false;
            Mat A(k + 1, Vec(k + 1, Rat(0)));
            Vec b(k + 1, Rat(0));
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) A[i][j] = s * bil(rows[i], rows[j]);
                A[i][k] = -1;
                A[k][i] = 1;
            }
            b[k] = 1;
            auto sol = solve(A, b);
            if (!sol || (*sol)[k] > 0) return false;
            for (std::size_t i = 0; i < k; ++i)
                if ((*sol)[i] <= 0) return false;
            Vec x(rows[0].size(), Rat(0));
            for (std::size_t i = 0; i < k; ++i) x = add(x, scale((*sol)[i], rows[i]));
            if (is_zero(x) || s * sgn(qform(x)) > 0) return false;
            found = primitive(x);
            return true;
        });
    }
    return found;
}

Rat fquad(const Vec& x) { return x[4] - qform(x); }

Vec extend(const Vec& x4) { return {x4[0], x4[1], x4[2], x4[3], Rat(0)}; }

// vertical extent of {s : (u, s) in C}; nullopt bounds are infinite
struct Extent {
    bool empty = false;
    std::optional<Rat> lo, hi;
};

Extent vertical_extent(const std::vector<Vec>& H, const LineCoords& u) {
    Extent e;
    for (auto& a : H) {
        Rat c = a[0] * u[0] + a[1] * u[1] + a[2] * u[2] + a[3] * u[3];
        if (a[4] == 0) {
            if (c > 0) e.empty = true;
            continue;
        }
        Rat bound = -c / a[4];
        if (a[4] > 0) {
            if (!e.hi || bound < *e.hi) e.hi = bound;
        } else {
            if (!e.lo || bound > *e.lo) e.lo = bound;
        }
    }
    return e;
}

bool scalable_direct(const std::vector<Vec>& H, const LineCoords& u) {
    if (is_zero(Vec(u.begin(), u.end()))) return false;
    Extent e = vertical_extent(H, u);
    if (e.empty) return false;
    Rat q = qform(u);
    Rat need_lo = std::min(Rat(0), q), need_hi = std::max(Rat(0), q);
    if (e.lo && *e.lo > need_lo) return false;
    if (e.hi && *e.hi < need_hi) return false;
    return true;
}

LineCoords normalized(const Vec& x) {
    Rat n = inf_norm(Vec(x.begin(), x.begin() + 4));
    Rat s = Rat(1, 8) / n;
    return {s * x[0], s * x[1], s * x[2], s * x[3]};
}

bool opposite(const Vec& a, const Vec& b) { return parallel(a, b) && dot(a, b) < 0; }

// scale so that the sign of f is stable on (0, 1] * x
Vec stabilize(const Vec& x) {
    Rat q = qform(x);
    if (x[4] > 0 && q > 0 && x[4] <= q) return scale(std::min<Rat>(Rat(1), x[4] / (2 * q)), x);
    if (x[4] < 0 && q < 0 && x[4] >= q) return scale(std::min<Rat>(Rat(1), x[4] / (2 * q)), x);
    return x;
}

EscapeCertificate escape(const ConeRep& C, const std::vector<Vec>& H, const std::vector<Vec>& extra) {
    Mat G = C.generators();
    std::vector<Vec> pts = G;
    for (auto& x : extra) pts.push_back(x);

    std::vector<Vec> cand;
    for (auto& p : pts) cand.push_back(p);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) cand.push_back(add(pts[i], pts[j]));
    if (!pts.empty()) {
        Vec s(5, Rat(0));
        for (auto& p : pts) s = add(s, p);
        cand.push_back(s);
    }
    for (auto& c : cand) {
        LineCoords u = coords4(c);
        if (scalable_direct(H, u)) return DirectWitness{normalized(c), true};
    }

    std::vector<Vec> up, down;
    for (auto& p : pts) {
        int s = sgn0(p);
        if (s > 0) up.push_back(p);
        if (s < 0) down.push_back(p);
    }
    for (auto& p : up)
        for (auto& n : down)
            if (!opposite(p, n)) return SegmentWitness{stabilize(p), stabilize(n)};
    throw std::logic_error("no escape certificate found");
}

int sign_of_g5(const Mat& G, bool& pos, bool& negv) {
    pos = negv = false;
    for (auto& g : G) {
        if (g[4] > 0) pos = true;
        if (g[4] < 0) negv = true;
    }
    return 0;
}

std::vector<Vec> witness_points(const QAnalysis& a) {
    std::vector<Vec> out;
    if (a.nonpos) out.push_back(extend(*a.nonpos));
    if (a.nonneg) out.push_back(extend(*a.nonneg));
    return out;
}

} // namespace

QAnalysis analyze_q(const ConeRep& K) {
    if (K.is_zero()) return {QSign::ZeroCone, std::nullopt, std::nullopt};
    Mat G = K.generators();
    QAnalysis a;
    a.nonpos = sign_point(G, +1);
    a.nonneg = sign_point(G, -1);
    if (!a.nonpos) a.sign = QSign::StrictlyPositive;
    else if (!a.nonneg) a.sign = QSign::StrictlyNegative;
    else a.sign = QSign::Indefinite;
    return a;
}

QSign q_sign_on_cone(const ConeRep& K) { return analyze_q(K).sign; }

int sgn0(const Vec& x) {
    if (x[4] != 0) return sgn(x[4]);
    return -sgn(qform(x));
}

PinningVerdict decide_cone(const std::vector<Vec>& H) {
    ConeRep C = cone_from_halfspaces(H, 5);
    if (C.rays.empty() && C.lineality.size() == 1 && C.lineality[0][4] != 0)
        return {IsolationCase{CaseKind::TransversalLine, 0}};

    Mat G = C.generators();
    bool pos, negv;
    sign_of_g5(G, pos, negv);

    if (pos && negv) return {escape(C, H, {})};

    ConeRep K = face_in_hyperplane(C, 4);
    if (K.is_zero()) {
        // C = {0}, or C meets T only at the origin
        return {IsolationCase{pos ? CaseKind::NegativeSide : CaseKind::PositiveSide, 0}};
    }
    QAnalysis a = analyze_q(K);
    int k = K.generated_dim();
    if (!pos && !negv) {
        if (a.sign == QSign::StrictlyPositive) return {IsolationCase{CaseKind::PositiveSide, k}};
        if (a.sign == QSign::StrictlyNegative) return {IsolationCase{CaseKind::NegativeSide, k}};
    } else if (pos) {
        if (a.sign == QSign::StrictlyNegative) return {IsolationCase{CaseKind::NegativeSide, k}};
    } else {
        if (a.sign == QSign::StrictlyPositive) return {IsolationCase{CaseKind::PositiveSide, k}};
    }
    return {escape(C, H, witness_points(a))};
}

PinningVerdict decide_pinning(const std::vector<Constraint>& F) {
    if (F.empty()) throw EmptyFamily("family is empty");
    return decide_cone(halfspaces_of(F));
}

bool verify_escape_cone(const EscapeCertificate& c, const std::vector<Vec>& H) {
    if (auto* d = std::get_if<DirectWitness>(&c)) {
        if (!d->scalable) return false;
        return scalable_direct(H, d->u);
    }
    auto& s = std::get<SegmentWitness>(c);
    if (s.p.size() != 5 || s.q.size() != 5) return false;
    if (is_zero(s.p) || is_zero(s.q) || opposite(s.p, s.q)) return false;
    if (!contains(H, s.p) || !contains(H, s.q)) return false;
    int a = sgn0(s.p), b = sgn0(s.q);
    if (a * b != -1) return false;
    return sgn(fquad(s.p)) == a && sgn(fquad(s.q)) == b;
}

bool verify_escape(const EscapeCertificate& c, const std::vector<Constraint>& F) {
    if (auto* d = std::get_if<DirectWitness>(&c))
        if (!satisfies_all(F, d->u)) return false;
    return verify_escape_cone(c, halfspaces_of(F));
}

namespace {

std::vector<Vec> pick(const std::vector<Vec>& H, const std::vector<std::size_t>& idx) {
    std::vector<Vec> out;
    for (auto i : idx) out.push_back(H[i]);
    return out;
}

bool pins(const std::vector<Vec>& H) { return decide_cone(H).pinned(); }

} // namespace

MinimizeResult minimize_pinning(const std::vector<Constraint>& F) {
    if (F.empty()) throw EmptyFamily("family is empty");
    std::vector<Vec> H = halfspaces_of(F);
    if (!pins(H)) throw NotAPinning("family does not pin the reference line");
    std::vector<std::size_t> kept(F.size());
    std::iota(kept.begin(), kept.end(), 0);
    for (std::size_t i = 0; i < F.size(); ++i) {
        std::vector<std::size_t> trial;
        for (auto j : kept)
            if (j != i) trial.push_back(j);
        if (pins(pick(H, trial))) kept = std::move(trial);
    }
    MinimizeResult r{kept, decide_cone(pick(H, kept)).isolation()};
    std::vector<Constraint> G;
    for (auto i : kept) G.push_back(F[i]);
    if (kept.size() > 8) throw BoundViolation("minimal pinning with more than eight constraints");
    if (kept.size() > 6 && !has_degenerate_pair(G))
        throw BoundViolation("minimal pinning without degenerate pair has more than six constraints");
    if (kept.size() > 6 && r.isolation.dimE >= 1)
        throw BoundViolation("minimal pinning with positive dimE has more than six constraints");
    return r;
}

bool is_minimal_pinning(const std::vector<Constraint>& F) {
    if (F.empty()) return false;
    std::vector<Vec> H = halfspaces_of(F);
    if (!pins(H)) return false;
    for (std::size_t i = 0; i < H.size(); ++i) {
        std::vector<Vec> rest;
        for (std::size_t j = 0; j < H.size(); ++j)
            if (j != i) rest.push_back(H[j]);
        if (pins(rest)) return false;
    }
    return true;
}

std::vector<std::size_t> steinitz_reduce(const Mat& X, int dim) {
    if (!surrounds(X, dim)) throw NotSurrounding("origin is not interior to the convex hull");
    std::vector<std::size_t> kept(X.size());
    std::iota(kept.begin(), kept.end(), 0);
    for (std::size_t i = 0; i < X.size(); ++i) {
        std::vector<std::size_t> trial;
        for (auto j : kept)
            if (j != i) trial.push_back(j);
        if (surrounds(pick(X, trial), dim)) kept = std::move(trial);
    }
    if (static_cast<int>(kept.size()) > 2 * dim)
        throw BoundViolation("irreducible surrounding set larger than 2d");
    return kept;
}

std::vector<std::size_t> helly_flat_reduce(const std::vector<Vec>& H, int dim) {
    ConeRep C = cone_from_halfspaces(H, dim);
    if (!C.rays.empty()) throw NotAFlat("intersection is not a linear subspace");
    Subspace E = span_of(C.lineality, dim);
    std::vector<std::size_t> idx;
    Mat proj;
    auto P = project_out(H, E);
    for (std::size_t i = 0; i < H.size(); ++i) {
        if (is_zero(P[i])) continue;
        idx.push_back(i);
        proj.push_back(P[i]);
    }
    int k = dim - E.dim();
    if (k == 0) return {};
    std::vector<std::size_t> out;
    for (auto j : steinitz_reduce(proj, k)) out.push_back(idx[j]);
    if (static_cast<int>(out.size()) > 2 * dim - 2 * E.dim())
        throw BoundViolation("flat certificate larger than 2d-2j");
    return out;
}

namespace {

// H in R^d with last coordinate distinguished
std::vector<std::size_t> pos_cone_rec(const std::vector<Vec>& H, int d) {
    Affine cut{neg(unit(d, d - 1)), Rat(1)};
    std::vector<std::size_t> Hd = farkas_certificate(H, d, cut);
    std::vector<Vec> Hs = pick(H, Hd);

    std::vector<Vec> Tcut = Hs;
    Tcut.push_back(unit(d, d - 1));
    Tcut.push_back(neg(unit(d, d - 1)));
    ConeRep CT = cone_from_halfspaces(Tcut, d);
    if (CT.is_zero()) return Hd;

    Subspace E = span_of(CT.generators(), d);
    std::vector<std::size_t> Kidx;
    for (auto i : Hd) {
        bool bd = std::all_of(E.basis.begin(), E.basis.end(), [&](const Vec& e) { return dot(H[i], e) == 0; });
        if (bd) Kidx.push_back(i);
    }

    // coordinates: basis of E-perp inside T_d, then e_d
    Mat ET = E.basis;
    ET.push_back(unit(d, d - 1));
    Mat W = nullspace(ET, d);
    W.push_back(unit(d, d - 1));
    int d2 = static_cast<int>(W.size());

    std::vector<std::size_t> K1;
    if (d2 >= 2 && !Kidx.empty()) {
        std::vector<Vec> HK;
        for (auto i : Kidx) {
            Vec b(d2);
            for (int j = 0; j < d2; ++j) b[j] = dot(W[j], H[i]);
            HK.push_back(b);
        }
        for (auto j : pos_cone_rec(HK, d2)) K1.push_back(Kidx[j]);
    }

    // normals restricted to E, surrounding the origin inside E
    std::vector<std::size_t> idx;
    Mat proj;
    for (std::size_t i = 0; i < H.size(); ++i) {
        Vec b(E.dim());
        for (int j = 0; j < E.dim(); ++j) b[j] = dot(E.basis[j], H[i]);
        if (is_zero(b)) continue;
        idx.push_back(i);
        proj.push_back(b);
    }
    std::vector<std::size_t> K2;
    for (auto j : steinitz_reduce(proj, E.dim())) K2.push_back(idx[j]);

    std::vector<std::size_t> out = K1;
    for (auto i : K2)
        if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::size_t> positive_cone_reduce(const std::vector<Vec>& H, int dim) {
    if (dim < 2) throw PreconditionViolated("dimension must be at least 2");
    for (auto& a : H) {
        if (static_cast<int>(a.size()) != dim) throw DimensionMismatch("halfspace has wrong dimension");
        bool vertical = true;
        for (int j = 0; j + 1 < dim; ++j)
            if (a[j] != 0) vertical = false;
        if (vertical) throw PreconditionViolated("halfspace bounded by the hyperplane x_d = 0");
    }
    std::vector<Vec> below = H;
    below.push_back(unit(dim, dim - 1));
    if (!cone_from_halfspaces(below, dim).is_zero())
        throw PreconditionViolated("cone is not contained in the open upper halfspace");
    auto out = pos_cone_rec(H, dim);
    if (static_cast<int>(out.size()) > 2 * dim - 2)
        throw BoundViolation("positive cone certificate larger than 2d-2");
    return out;
}

} // namespace linepin
