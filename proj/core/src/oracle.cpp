#include "linepin/oracle.hpp"
#include "linepin/errors.hpp"
#include "linepin/pinning.hpp"

#include <cmath>
#include <random>

namespace linepin {

Rat snap(double x, long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot snap a non-finite value");
    bool negative = x < 0;
    x = std::fabs(x);
    // convergents h/k
    Int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        Int ai(static_cast<long long>(a));
        Int h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        double frac = r - a;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
        if (r > 1e15) break;
    }
    if (k1 == 0) return Rat(0);
    Rat out(h1, k1);
    return negative ? -out : out;
}

namespace {

struct DoubleForm {
    double a[5];
};

double eval(const DoubleForm& f, const double u[4]) {
    double q = u[1] * u[2] - u[0] * u[3];
    return f.a[0] * u[0] + f.a[1] * u[1] + f.a[2] * u[2] + f.a[3] * u[3] + f.a[4] * q;
}

} // namespace

OracleReport sample_escape(const std::vector<Constraint>& F, const SampleBudget& budget) {
    for (std::size_t i = 1; i < budget.radii.size(); ++i)
        if (!(budget.radii[i] < budget.radii[i - 1]) || budget.radii[i] <= 0)
            throw PreconditionViolated("radii must be positive and strictly decreasing");
    std::vector<DoubleForm> forms;
    for (auto& g : F) {
        Vec h = halfspace_of(g);
        DoubleForm f;
        for (int k = 0; k < 5; ++k) f.a[k] = h[k].convert_to<double>();
        forms.push_back(f);
    }

    OracleReport rep;
    auto accept = [&](const double u[4], double r) -> std::optional<LineCoords> {
        double scaleTol = 1e-9 * r * r;
        for (auto& f : forms)
            if (eval(f, u) > scaleTol) return std::nullopt;
        LineCoords x{snap(u[0]), snap(u[1]), snap(u[2]), snap(u[3])};
        if (x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0) return std::nullopt;
        if (!satisfies_all(F, x)) return std::nullopt;
        return x;
    };

    for (std::size_t ri = 0; ri < budget.radii.size(); ++ri) {
        double r = budget.radii[ri].convert_to<double>();
        std::optional<LineCoords> hit;
        const int g = std::max(2, budget.grid);
        std::vector<double> axis(g);
        for (int k = 0; k < g; ++k) axis[k] = r * (-1.0 + 2.0 * k / (g - 1));
        for (int i0 = 0; i0 < g && !hit; ++i0)
            for (int i1 = 0; i1 < g && !hit; ++i1)
                for (int i2 = 0; i2 < g && !hit; ++i2)
                    for (int i3 = 0; i3 < g && !hit; ++i3) {
                        double u[4] = {axis[i0], axis[i1], axis[i2], axis[i3]};
                        ++rep.samples_tested;
                        hit = accept(u, r);
                    }
        std::mt19937_64 rng(budget.seed * 1000003ULL + ri);
        std::uniform_real_distribution<double> U(-r, r);
        for (int k = 0; k < budget.random && !hit; ++k) {
            double u[4] = {U(rng), U(rng), U(rng), U(rng)};
            ++rep.samples_tested;
            hit = accept(u, r);
        }
        rep.per_radius.push_back(hit);
    }
    if (!rep.per_radius.empty()) rep.refuted = rep.per_radius.back();

    PinningVerdict v = decide_pinning(F);
    rep.engine_pinned = v.pinned();
    if (rep.engine_pinned)
        rep.agreement = !rep.refuted;
    else
        rep.agreement = rep.refuted.has_value() || verify_escape(v.certificate(), F);
    return rep;
}

TransversalCount common_transversals(const std::vector<Constraint>& lines) {
    if (lines.size() != 4) throw WrongArity("transversal count takes four lines");
    for (auto& g : lines)
        if (!is_orthogonal(g)) throw PreconditionViolated("lines must be perpendicular to the reference line");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (coplanar(lines[i], lines[j]) || concurrent(lines[i], lines[j]))
                throw DegenerateTriple("two of the first three lines are coplanar or concurrent");

    // rows act on Pluecker vectors (D, M) through the reciprocal product
    Mat rows;
    for (auto& g : lines) {
        const Rat& l = g.lambda;
        Vec3 d = g.dir;
        Vec3 m{-l * d[1], l * d[0], Rat(0)};
        rows.push_back({m[0], m[1], m[2], d[0], d[1], d[2]});
    }
    Mat N = nullspace(rows, 6);
    if (N.size() >= 3) return {true, 0};
    auto K = [](const Vec& x, const Vec& y) {
        return (x[0] * y[3] + x[1] * y[4] + x[2] * y[5] + y[0] * x[3] + y[1] * x[4] + y[2] * x[5]) / 2;
    };
    Rat A = K(N[0], N[0]), B = K(N[0], N[1]), C = K(N[1], N[1]);
    if (A == 0 && B == 0 && C == 0) return {true, 0};
    Rat disc = B * B - A * C;
    return {false, disc > 0 ? 2 : disc == 0 ? 1 : 0};
}

} // namespace linepin
