#pragma once

#include "gcover/config.hpp"
#include "gcover/group.hpp"
#include "gcover/rational.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace gcover {

/// A monodromy counting problem: group morphisms from the fundamental
/// group of a genus-g curve punctured at n marked points, presented by
/// the canonical generators (alpha_1, beta_1, ..., alpha_g, beta_g,
/// gamma_1, ..., gamma_n) with the single relation
///   [alpha_1,beta_1] ... [alpha_g,beta_g] gamma_1 ... gamma_n = 1,
/// gamma_i constrained to the conjugacy class mark_types[i].
struct CoverCountQuery {
    const FiniteGroup* group = nullptr;
    int genus = 0;
    std::vector<ConjClassId> mark_types;
    std::optional<SubgroupClassId> image_class;  // class of the generated subgroup
    bool up_to_conjugation = false;
};

enum class CountMethod { brute_force, frobenius, moebius };

const char* method_name(CountMethod m);

struct CoverCountResult {
    Int count;
    CountMethod method = CountMethod::brute_force;
};

/// Exhaustive enumeration over tuples. Honors every query field;
/// conjugation-orbit counting is a Burnside sum over per-centralizer
/// counts so memory stays O(1) in the tuple count. Throws
/// GcError(SearchTooLarge) once |G|^(2g+n) exceeds the configured cutoff,
/// with the required tuple count as witness.
CoverCountResult count_homs_brute(const CoverCountQuery& q, const Config& cfg = {});

/// Frobenius character formula
///   |G|^(2g-1) (prod |C_i|) sum_chi (prod chi(c_i)) / chi(1)^(n+2g-2),
/// proven integral. Requires a character table (built-in groups);
/// image-class restriction is not available on this path.
CoverCountResult count_homs_frobenius(const CoverCountQuery& q);

/// Moebius inversion over the subgroup lattice on top of per-subgroup
/// character-formula counts: homs whose image lies in the prescribed
/// subgroup class, optionally up to simultaneous conjugation.
CoverCountResult count_with_image_class(const CoverCountQuery& q);

struct NodeGluingQuery {
    const FiniteGroup* group = nullptr;
    ConjClassId node_type;
};

struct GluingFactors {
    std::vector<int> factors;  // centralizer of the class representative
    int orbit_count = 0;       // conjugation orbits within the centralizer
};

/// Gluing data at a node with local index in the given class: the
/// factors commuting with the representative.
GluingFactors gluing_factors(const NodeGluingQuery& q);

/// Exact counting context over one group: per-subgroup character-formula
/// counts with arbitrary per-mark element sets, plus image-exactly and
/// up-to-conjugation variants. Marks are given as sets of parent-group
/// elements and are intersected with the subgroup in question. Lazy,
/// internally synchronized, deterministic.
class HomCounter {
public:
    explicit HomCounter(const FiniteGroup& g);
    ~HomCounter();
    HomCounter(const HomCounter&) = delete;
    HomCounter& operator=(const HomCounter&) = delete;

    const FiniteGroup& group() const;

    /// Homs into the subgroup `sid` (image anywhere inside it).
    Int count_in_subgroup(int sid, int genus,
                          const std::vector<std::vector<int>>& marks) const;
    /// Homs with image exactly the subgroup `sid`.
    Int count_image_exact(int sid, int genus,
                          const std::vector<std::vector<int>>& marks) const;
    /// Homs with image a subgroup in class `h`.
    Int count_image_in_class(SubgroupClassId h, int genus,
                             const std::vector<std::vector<int>>& marks) const;
    /// Same, counted up to simultaneous conjugation (Burnside).
    Int count_image_in_class_up_to_conj(SubgroupClassId h, int genus,
                                        const std::vector<std::vector<int>>& marks) const;
    /// All homs counted up to simultaneous conjugation.
    Int count_total_up_to_conj(int genus, const std::vector<std::vector<int>>& marks) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Shared counter per group (keyed by address; groups are immutable).
const HomCounter& hom_counter(const FiniteGroup& g);

/// Searches for an explicit hom tuple (alpha_1, beta_1, ..., alpha_g,
/// beta_g, gamma_1, ..., gamma_n) with image exactly the subgroup `sid`
/// and gamma_i in marks[i]. The search runs at the smallest genus whose
/// exact count is non-zero and pads with identity pairs, so the returned
/// witness is valid at the requested genus (replay with
/// `verify_hom_tuple`). Returns nullopt when the count is zero or the
/// search exceeds `enum_budget`.
std::optional<std::vector<int>> find_hom_witness(const FiniteGroup& g, int sid, int genus,
                                                 const std::vector<std::vector<int>>& marks,
                                                 std::uint64_t enum_budget = 10000000ull);

/// Replays a tuple: relation, mark membership, and exact image subgroup.
bool verify_hom_tuple(const FiniteGroup& g, const std::vector<int>& tuple, int genus,
                      const std::vector<std::vector<int>>& marks, int expected_sid);

/// Left-to-right product [a1,b1]...[ag,bg] g1...gn of a canonical tuple.
int relation_product(const FiniteGroup& g, const std::vector<int>& tuple, int genus);

}  // namespace gcover
