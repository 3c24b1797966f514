#pragma once

#include "gcover/divisor.hpp"
#include "gcover/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcover {

/// Result of decomposing the scaled canonical target
///   13/2 lambda - delta_0' - 3/2 delta_0^T - 2 delta_0^N
/// as s U + (1-s) M + gamma lambda + E with U the normalized Koszul
/// class, M the Brill-Noether pullback and E an effective boundary
/// class. (The relation to the unscaled canonical class is an overall
/// factor 2.)
struct SlopeSolution {
    int i = 0;
    Rat s_max;      // in [0, 1]
    Rat gamma_max;  // gamma evaluated at s_max
    bool general_type = false;
    DivisorClass effective_E;  // the residual boundary class at s_max
    Rat s_bound_c3;            // 3i/(4i-2), the delta_0^N constraint
    Rat s_bound_c2;            // 2i/(2i-1), the delta_0^T constraint
};

SlopeSolution solve_slope(int i);

struct VerdictReport {
    int g = 0;
    std::string verdict;  // "general_type" | "inconclusive"
    std::string reason;
    std::optional<SlopeSolution> slope;
    std::vector<std::string> assumptions;
    // Pencil bounds backing effectivity, per i = 1..g/2.
    std::vector<std::pair<Rat, Rat>> pencil_bounds;  // (min_b_prime, min_b_c3)
};

/// Odd g = 2i+1 with i > 5 certifies general type; anything else is
/// inconclusive with the reason spelled out.
VerdictReport verdict(int g);

}  // namespace gcover
