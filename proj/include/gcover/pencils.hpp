#pragma once

#include "gcover/divisor.hpp"
#include "gcover/rational.hpp"

#include <optional>
#include <string>

namespace gcover {

enum class PencilKind { B_i, A_i_TN, A_i_c3 };

const char* pencil_name(PencilKind k);

/// Intersection numbers of a test pencil with the basis classes. B_i
/// intersects downstairs classes of M_g-bar; the A pencils intersect
/// upstairs classes. For A_{i,c3}^{S3,S3} the degree d of the pencil is
/// kept symbolic: `numbers` is per unit d, the individual delta_0-side
/// splits are not pinned by the source and only their total
/// (delta_0' + delta_0_c2 + delta_0_c3) is recorded.
struct PencilIntersection {
    PencilKind pencil = PencilKind::B_i;
    int i = 1;
    std::map<BasisLabel, Rat> numbers;
    std::optional<Rat> delta0_total;  // A_i_c3 only
    bool per_unit_degree = false;     // A_i_c3 only
    bool k3_caveat = false;           // i == 10: B_10 only fills the K3 locus Z
};

PencilIntersection pencil_numbers(PencilKind kind, int i);

/// Lower bound on b_i' from A_i^{T,N} . E >= 0:
///   [(2^(2i-1)+1) b0p + (2^(2i-1)-2) b0c2] (6i+18) / (2^(2i)-1) - (i+1) a.
Rat min_b_prime(int i, const Rat& a, const Rat& b0p, const Rat& b0c2);

/// Lower bound on b_{i,c3}^{S3,S3} per unit d, using the pinned
/// inequality A.(delta_0_c2 + delta_0_c3) >= A.delta_0':
///   (5/2)(6i+18) - (i+1) a.
/// Asserts > 7 whenever i >= 1 and a <= 13.
Rat min_b_c3(int i, const Rat& a);

}  // namespace gcover
