#include "linepin/cone.hpp"
#include "linepin/errors.hpp"

#include <algorithm>

namespace linepin {

Mat ConeRep::generators() const {
    Mat g = rays;
    for (auto& l : lineality) {
        g.push_back(l);
        g.push_back(neg(l));
    }
    return g;
}

int ConeRep::generated_dim() const {
    Mat g = rays;
    for (auto& l : lineality) g.push_back(l);
    return rank(g);
}

bool contains(const std::vector<Vec>& H, const Vec& x) {
    return std::all_of(H.begin(), H.end(), [&](const Vec& a) { return dot(a, x) <= 0; });
}

namespace {

void add_unique(Mat& rays, Vec r) {
    r = primitive(r);
    if (is_zero(r)) return;
    if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(std::move(r));
}

} // namespace

ConeRep cone_from_halfspaces(const std::vector<Vec>& H, int dim) {
    for (auto& a : H)
        if (static_cast<int>(a.size()) != dim) throw DimensionMismatch("halfspace has wrong dimension");

    Mat L;
    for (int i = 0; i < dim; ++i) L.push_back(unit(dim, i));
    Mat R;
    std::vector<const Vec*> done;

    for (auto& a : H) {
        std::size_t piv = L.size();
        for (std::size_t i = 0; i < L.size(); ++i)
            if (dot(a, L[i]) != 0) { piv = i; break; }

        if (piv < L.size()) {
            Vec l0 = L[piv];
            Rat al0 = dot(a, l0);
            if (al0 > 0) { l0 = neg(l0); al0 = -al0; }
            Mat L2;
            for (std::size_t i = 0; i < L.size(); ++i) {
                if (i == piv) continue;
                L2.push_back(sub(L[i], scale(dot(a, L[i]) / al0, l0)));
            }
            Mat R2;
            for (auto& r : R) add_unique(R2, sub(r, scale(dot(a, r) / al0, l0)));
            add_unique(R2, l0);
            L = std::move(L2);
            R = std::move(R2);
        } else {
            std::vector<std::size_t> pos, zer, ngt;
            std::vector<Rat> val(R.size());
            for (std::size_t i = 0; i < R.size(); ++i) {
                val[i] = dot(a, R[i]);
                int s = sgn(val[i]);
                (s > 0 ? pos : s < 0 ? ngt : zer).push_back(i);
            }
            if (!pos.empty()) {
                Mat R2;
                for (auto i : ngt) add_unique(R2, R[i]);
                for (auto i : zer) add_unique(R2, R[i]);
                int target = dim - static_cast<int>(L.size()) - 2;
                for (auto p : pos) {
                    for (auto n : ngt) {
                        Mat tight;
                        for (auto* b : done)
                            if (dot(*b, R[p]) == 0 && dot(*b, R[n]) == 0) tight.push_back(*b);
                        if (static_cast<int>(tight.size()) < target) continue;
                        if (rank(tight) != target) continue;
                        add_unique(R2, add(scale(val[p], R[n]), scale(-val[n], R[p])));
                    }
                }
                R = std::move(R2);
            }
        }
        done.push_back(&a);
    }

    ConeRep C;
    C.dim = dim;
    C.hrep = H;
    C.lineality = rref(L).rows;
    // reduce rays modulo lineality so the representation is canonical
    for (auto& r : R) {
        Vec x = r;
        for (std::size_t i = 0; i < C.lineality.size(); ++i) {
            int p = 0;
            while (C.lineality[i][p] == 0) ++p;
            if (x[p] != 0) x = sub(x, scale(x[p], C.lineality[i]));
        }
        add_unique(C.rays, x);
    }
    std::sort(C.rays.begin(), C.rays.end());
    return C;
}

Subspace span_of(const Mat& vs, int ambient) {
    Subspace S;
    S.ambient = ambient;
    S.basis = rref(vs).rows;
    return S;
}

Hull linear_hull(const ConeRep& C) {
    Hull h;
    Mat g = C.generators();
    h.span = span_of(g, C.dim);
    for (std::size_t i = 0; i < C.hrep.size(); ++i) {
        bool act = std::all_of(g.begin(), g.end(), [&](const Vec& x) { return dot(C.hrep[i], x) == 0; });
        if (act) h.active.push_back(i);
    }
    return h;
}

ConeRep face_in_hyperplane(const ConeRep& C, int k) {
    std::vector<Vec> H = C.hrep;
    H.push_back(unit(C.dim, k));
    H.push_back(neg(unit(C.dim, k)));
    ConeRep full = cone_from_halfspaces(H, C.dim);
    auto drop = [&](const Vec& v) {
        Vec r;
        for (int i = 0; i < C.dim; ++i)
            if (i != k) r.push_back(v[i]);
        return r;
    };
    std::vector<Vec> H2;
    for (auto& a : C.hrep) H2.push_back(drop(a));
    ConeRep out;
    out.dim = C.dim - 1;
    out.hrep = H2;
    Mat L;
    for (auto& l : full.lineality) L.push_back(drop(l));
    out.lineality = rref(L).rows;
    for (auto& r : full.rays) out.rays.push_back(drop(r));
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

Mat complement_basis(const Subspace& E) { return nullspace(E.basis, E.ambient); }

std::vector<Vec> project_out(const std::vector<Vec>& H, const Subspace& E) {
    Mat Q = complement_basis(E);
    std::vector<Vec> out;
    for (auto& a : H) {
        for (auto& e : E.basis)
            if (dot(a, e) != 0) throw NotContaining("halfspace does not contain the subspace");
        Vec b(Q.size());
        for (std::size_t j = 0; j < Q.size(); ++j) b[j] = dot(Q[j], a);
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace linepin
