#pragma once

#include "gcover/config.hpp"
#include "gcover/group.hpp"
#include "gcover/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcover {

enum class BoundaryKind { type_i, type_0 };
enum class Verdict { nonempty, empty, undecided };

const char* verdict_name(Verdict v);

/// Replayable existence data for a nonempty boundary label. Tuples use
/// the canonical ordering (alpha_1, beta_1, ..., alpha_h, beta_h,
/// gamma_1, ..., gamma_n).
struct BoundaryWitness {
    // type_i: monodromy on the genus-i side, one mark in the node class.
    // type_0: monodromy on the genus-(g-1) normalization, marks (w, w^-1).
    std::vector<int> side1;
    int subgroup1 = -1;  // subgroup id realized as exact image
    // type_i only: the genus-(g-i) side, one mark in the inverse class.
    std::vector<int> side2;
    int subgroup2 = -1;
    // type_0 only: gluing factor commuting with the local index.
    int gluing_factor = -1;
    // type_i only: conjugator aligning the two node types, and the
    // subgroup class of the glued cover it realizes.
    int conjugator = -1;
    int glued_class = -1;
};

/// A boundary divisor label of R_{g,G}-bar with its constructive
/// nonemptiness verdict.
struct BoundaryLabel {
    BoundaryKind kind = BoundaryKind::type_i;
    int i = 0;  // 1 <= i <= g/2 for type_i, 0 for type_0
    SubgroupClassId h1, h2;
    // Node G-type. For type_0 this is the canonical representative of
    // the inversion-symmetric class (branch choice quotiented away).
    ConjClassId node_type;
    InvSymClassId node_type_sym;  // type_0 only

    Verdict verdict = Verdict::undecided;
    std::optional<BoundaryWitness> witness;
    /// For empty labels: what was exhausted. For undecided: the cutoff.
    std::string certificate;
    /// Subgroup class ids achievable by gluing the two sides (type_i),
    /// or {h1} (type_0, by definition).
    std::vector<int> glued_classes;

    /// Commutator-membership heuristic for the node class, reported as
    /// a diagnostic only; `diagnostic_conflict` flags disagreement with
    /// the constructive verdict.
    bool commutator_diagnostic = false;
    bool diagnostic_conflict = false;

    std::string name(const FiniteGroup& g) const;  // e.g. "Delta_{0,c2}^{S3,S3}"
};

/// Enumerates all structurally possible labels at genus g and decides
/// each constructively by exact monodromy counts (character formula over
/// the subgroup lattice), with explicit witnesses found by search at the
/// smallest adequate genus and certified by replay at the stated genus.
/// With `restrict_to_component`, keeps only labels realizable inside the
/// closure of that component.
std::vector<BoundaryLabel> catalog(int g, const FiniteGroup& group,
                                   std::optional<SubgroupClassId> restrict_to_component = {},
                                   const Config& cfg = {});

/// Would-be necessary condition for a type-0 label: some h in the node
/// class lies in the commutator subgroup of some H2 in class h2.
/// Diagnostic only: it can disagree with the constructive verdict
/// (Delta_{0,c2}^{S3,S3} is nonempty although no transposition is a
/// commutator of S3) and never overrides it.
bool commutator_necessary_condition(const FiniteGroup& g, const BoundaryLabel& label);

/// Replays a label's witness from scratch: relations, mark classes,
/// exact image classes, gluing conditions.
bool replay_witness(const FiniteGroup& g, int genus, const BoundaryLabel& label);

}  // namespace gcover
