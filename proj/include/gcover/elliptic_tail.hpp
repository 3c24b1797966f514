#pragma once

#include "gcover/group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gcover {

/// A conjugation orbit of Hom(Z^2, G), i.e. an admissible G-cover class
/// over an elliptic curve, represented by the images (a, b) of the two
/// canonical generators. The representative is the lexicographically
/// least commuting pair in its orbit.
struct EllipticCoverClass {
    const FiniteGroup* group = nullptr;
    std::pair<int, int> pair;
    std::string label;
};

/// All conjugation classes of commuting pairs generating a subgroup in
/// class H.
std::vector<EllipticCoverClass> classes_with_image(const FiniteGroup& g, SubgroupClassId h);

/// The elliptic-curve automorphism action on Hom(Z^2, G) classes.
/// Order 6: (a, b) -> (b, b a^{-1}); order 4: (a, b) -> (b, a^{-1}).
struct AutAction {
    int order = 6;  // 4 or 6
};

std::pair<int, int> apply_aut(const AutAction& act, const FiniteGroup& g, std::pair<int, int> ab);

struct AutOrbits {
    // Indices into the class list handed in.
    std::vector<std::vector<int>> orbits;
    std::vector<bool> fixed;  // per class: fixed by the action, i.e. the automorphism lifts
};

AutOrbits aut_orbits(const FiniteGroup& g, const std::vector<EllipticCoverClass>& classes,
                     const AutAction& act);

struct BranchPoint {
    std::string label;          // "[E4']", ...
    int ram_index = 1;
    std::string local_picture;  // "(1/2,1/2)", "(1/3,1/3)", "(1,1/3)", "(1,1)"
};

struct BranchDatum {
    std::string base_point;  // "E4", "E6", "E0"
    std::vector<BranchPoint> fiber;
};

struct BranchDataRN {
    int degree = 0;
    std::vector<BranchDatum> data;

    int total_ramification() const;  // sum of (e - 1)
};

/// Branch data of the degree-4 cover R^N_{1,S3} -> M_{1,1}: the E4 and
/// E6 fibers are computed from the automorphism action on the four
/// N-classes; the nodal E0 fiber is the pinned picture (one point with
/// t_E = t~_E^3, one unramified).
BranchDataRN branch_data_RN();

/// Riemann-Hurwitz: 2g - 2 = degree (2 base_genus - 2) + sum (e - 1).
/// Every fiber must sum to the degree; throws
/// GcError(InconsistentProfile) otherwise or when g fails to be a
/// non-negative integer.
int genus_by_riemann_hurwitz(int degree, int base_genus, const std::vector<BranchDatum>& branch);

}  // namespace gcover
