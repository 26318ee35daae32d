#pragma once

#include "linepin/cone.hpp"
#include "linepin/linespace.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace linepin {

enum class CaseKind { TransversalLine, PositiveSide, NegativeSide };

struct IsolationCase {
    CaseKind kind;
    int dimE = 0;
    bool operator==(const IsolationCase&) const = default;
};

// a line in every neighbourhood of l0; scalable means t*u works for all t in (0,1]
struct DirectWitness {
    LineCoords u;
    bool scalable = false;
};

// endpoints in the lifted cone on opposite sides of the quadric
struct SegmentWitness {
    Vec p;
    Vec q;
};

using EscapeCertificate = std::variant<DirectWitness, SegmentWitness>;

struct PinningVerdict {
    std::variant<IsolationCase, EscapeCertificate> v;

    bool pinned() const { return std::holds_alternative<IsolationCase>(v); }
    const IsolationCase& isolation() const { return std::get<IsolationCase>(v); }
    const EscapeCertificate& certificate() const { return std::get<EscapeCertificate>(v); }
};

enum class QSign { StrictlyPositive, StrictlyNegative, ZeroCone, Indefinite };

struct QAnalysis {
    QSign sign;
    std::optional<Vec> nonpos;   // nonzero point of the cone with q <= 0
    std::optional<Vec> nonneg;   // nonzero point of the cone with q >= 0
};

// sign of u2 u3 - u1 u4 on a cone in R^4
QAnalysis analyze_q(const ConeRep& K);
QSign q_sign_on_cone(const ConeRep& K);

// decision on the lifted cone {a.x <= 0}, H in R^5
PinningVerdict decide_cone(const std::vector<Vec>& H);
PinningVerdict decide_pinning(const std::vector<Constraint>& F);

// sign of the quadric function f(x) = x5 - q(x) near the origin along x
int sgn0(const Vec& x);
bool verify_escape_cone(const EscapeCertificate& c, const std::vector<Vec>& H);
bool verify_escape(const EscapeCertificate& c, const std::vector<Constraint>& F);

struct MinimizeResult {
    std::vector<std::size_t> kept;
    IsolationCase isolation;
};
// greedy removal in input order
MinimizeResult minimize_pinning(const std::vector<Constraint>& F);
bool is_minimal_pinning(const std::vector<Constraint>& F);

std::vector<std::size_t> steinitz_reduce(const Mat& X, int dim);
std::vector<std::size_t> helly_flat_reduce(const std::vector<Vec>& H, int dim);
std::vector<std::size_t> positive_cone_reduce(const std::vector<Vec>& H, int dim);

} // namespace linepin
