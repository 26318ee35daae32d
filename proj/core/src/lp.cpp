#include "linepin/cone.hpp"
#include "linepin/errors.hpp"

namespace linepin {

// phase one of the simplex method with Bland's rule
std::optional<Vec> feasible_standard(const Mat& A, const Vec& b) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    if (m == 0) return Vec(n, Rat(0));
    const std::size_t cols = n + m;

    Mat T(m, Vec(cols + 1, Rat(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? -A[i][j] : A[i][j];
        T[i][n + i] = 1;
        T[i][cols] = flip ? -b[i] : b[i];
        basis[i] = n + i;
    }
    Vec cost(cols + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) cost[j] -= T[i][j];
        cost[cols] -= T[i][cols];
    }

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (cost[j] < 0) { enter = j; break; }
        if (enter == cols) break;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rat r = T[i][cols] / T[i][enter];
            if (leave == m || r < best || (r == best && basis[i] < basis[leave])) {
                leave = i;
                best = r;
            }
        }
        if (leave == m) break;   // unbounded cannot happen in phase one
        Rat p = T[leave][enter];
        for (auto& x : T[leave]) x /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rat f = T[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
        }
        if (cost[enter] != 0) {
            Rat f = cost[enter];
            for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    if (cost[cols] != 0) return std::nullopt;
    Vec x(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = T[i][cols];
    return x;
}

namespace {

// a.x <= 0 for a in H (subset), c.x = b; free x
std::optional<Vec> affine_point(const std::vector<Vec>& H, const std::vector<std::size_t>& idx,
                                int dim, const Affine& extra) {
    const std::size_t m = idx.size();
    const std::size_t n = 2 * dim + m;
    Mat A;
    Vec b;
    for (std::size_t r = 0; r < m; ++r) {
        Vec row(n, Rat(0));
        const Vec& a = H[idx[r]];
        for (int j = 0; j < dim; ++j) {
            row[j] = a[j];
            row[dim + j] = -a[j];
        }
        row[2 * dim + r] = 1;
        A.push_back(std::move(row));
        b.push_back(0);
    }
    Vec row(n, Rat(0));
    for (int j = 0; j < dim; ++j) {
        row[j] = extra.c[j];
        row[dim + j] = -extra.c[j];
    }
    A.push_back(std::move(row));
    b.push_back(extra.b);
    auto s = feasible_standard(A, b);
    if (!s) return std::nullopt;
    Vec x(dim);
    for (int j = 0; j < dim; ++j) x[j] = (*s)[j] - (*s)[dim + j];
    return x;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace

std::optional<Vec> lp_nonzero_point(const std::vector<Vec>& H, int dim, const std::optional<Affine>& extra) {
    if (extra) return affine_point(H, all_indices(H.size()), dim, *extra);
    ConeRep C = cone_from_halfspaces(H, dim);
    if (!C.rays.empty()) return C.rays.front();
    if (!C.lineality.empty()) return C.lineality.front();
    return std::nullopt;
}

std::vector<std::size_t> farkas_certificate(const std::vector<Vec>& H, int dim, const Affine& extra) {
    std::vector<std::size_t> keep = all_indices(H.size());
    if (affine_point(H, keep, dim, extra)) throw PreconditionViolated("system is feasible");
    for (std::size_t k = 0; k < keep.size();) {
        std::vector<std::size_t> trial = keep;
        trial.erase(trial.begin() + static_cast<long>(k));
        if (!affine_point(H, trial, dim, extra))
            keep = std::move(trial);
        else
            ++k;
    }
    if (static_cast<int>(keep.size()) > dim)
        throw BoundViolation("irreducible infeasible subsystem larger than the dimension");
    return keep;
}

bool origin_in_relint(const Mat& X) {
    if (X.empty()) return false;
    const std::size_t d = X[0].size();
    Mat A(d, Vec(X.size()));
    Vec b(d, Rat(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < X.size(); ++j) {
            A[i][j] = X[j][i];
            b[i] -= X[j][i];
        }
    return feasible_standard(A, b).has_value();
}

bool surrounds(const Mat& X, int dim) {
    if (X.empty()) return false;
    if (rank(X) != dim) return false;
    return origin_in_relint(X);
}

} // namespace linepin
