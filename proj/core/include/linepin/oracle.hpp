#pragma once

#include "linepin/linespace.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace linepin {

struct SampleBudget {
    std::vector<Rat> radii{Rat(1), Rat(1, 4), Rat(1, 16), Rat(1, 64)};
    int grid = 9;          // points per axis
    int random = 10000;    // per radius
    std::uint64_t seed = 0;
};

struct OracleReport {
    std::optional<LineCoords> refuted;                  // exact witness at the smallest radius
    std::vector<std::optional<LineCoords>> per_radius;  // first exact witness at each radius
    std::size_t samples_tested = 0;
    bool engine_pinned = false;
    bool agreement = false;
};

OracleReport sample_escape(const std::vector<Constraint>& F, const SampleBudget& budget = {});

struct TransversalCount {
    bool infinite = false;
    int count = 0;   // real common transversals when finite, the reference line included
};

// four lines perpendicular to and meeting the reference line
TransversalCount common_transversals(const std::vector<Constraint>& lines);

// continued-fraction approximation with bounded denominator
Rat snap(double x, long max_den = 1000000);

} // namespace linepin
