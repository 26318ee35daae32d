#pragma once

#include "linepin/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace linepin {

// {x : a.x <= 0 for all a in hrep}, with generators span(lineality) + cone(rays)
struct ConeRep {
    int dim = 0;
    std::vector<Vec> hrep;
    Mat lineality;   // RREF rows
    Mat rays;        // primitive integer, sorted, modulo lineality

    bool is_zero() const { return lineality.empty() && rays.empty(); }
    // rays, then +l and -l for each lineality vector
    Mat generators() const;
    int generated_dim() const;
};

ConeRep cone_from_halfspaces(const std::vector<Vec>& H, int dim);
bool contains(const std::vector<Vec>& H, const Vec& x);

struct Subspace {
    int ambient = 0;
    Mat basis;   // RREF rows
    int dim() const { return static_cast<int>(basis.size()); }
};

Subspace span_of(const Mat& vs, int ambient);

struct Hull {
    Subspace span;
    std::vector<std::size_t> active;   // halfspaces vanishing on the cone
};
Hull linear_hull(const ConeRep& C);

// C intersected with {x_k = 0}, coordinate k dropped
ConeRep face_in_hyperplane(const ConeRep& C, int k);

// Q^T a for a basis Q of the orthogonal complement of E; every a must vanish on E
std::vector<Vec> project_out(const std::vector<Vec>& H, const Subspace& E);
Mat complement_basis(const Subspace& E);

// affine condition c.x = b
struct Affine {
    Vec c;
    Rat b;
};

// x >= 0, A x = b
std::optional<Vec> feasible_standard(const Mat& A, const Vec& b);

std::optional<Vec> lp_nonzero_point(const std::vector<Vec>& H, int dim,
                                    const std::optional<Affine>& extra);
// indices of an irreducible subfamily of H that stays infeasible together with extra
std::vector<std::size_t> farkas_certificate(const std::vector<Vec>& H, int dim, const Affine& extra);

// 0 is a nonnegative combination of X with all weights >= 1 (relative interior of conv X)
bool origin_in_relint(const Mat& X);
// origin in the interior of conv X
bool surrounds(const Mat& X, int dim);

} // namespace linepin
