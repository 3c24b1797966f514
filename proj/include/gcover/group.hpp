#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gcover {

// Element conjugacy class, canonically ordered by minimal member index.
// The class of the identity always has id 0.
struct ConjClassId {
    int id = -1;
    friend bool operator==(ConjClassId a, ConjClassId b) { return a.id == b.id; }
    friend bool operator!=(ConjClassId a, ConjClassId b) { return a.id != b.id; }
    friend bool operator<(ConjClassId a, ConjClassId b) { return a.id < b.id; }
};

// Class of the relation [h] ~ [h^{-1}] on element conjugacy classes.
struct InvSymClassId {
    int id = -1;
    friend bool operator==(InvSymClassId a, InvSymClassId b) { return a.id == b.id; }
    friend bool operator!=(InvSymClassId a, InvSymClassId b) { return a.id != b.id; }
    friend bool operator<(InvSymClassId a, InvSymClassId b) { return a.id < b.id; }
};

// Conjugacy class of subgroups. Classes are ordered by (representative
// order, lexicographic member set); the trivial class is id 0 and the
// full-group class is always last.
struct SubgroupClassId {
    int id = -1;
    friend bool operator==(SubgroupClassId a, SubgroupClassId b) { return a.id == b.id; }
    friend bool operator!=(SubgroupClassId a, SubgroupClassId b) { return a.id != b.id; }
    friend bool operator<(SubgroupClassId a, SubgroupClassId b) { return a.id < b.id; }
};

// Subgroups are stored as bitmasks over element indices; order is capped
// at kMaxOrder so a mask fits a machine word.
using ElemMask = std::uint32_t;

/// A finite group given by its multiplication table. All conjugation data
/// (element classes, centralizers, the full subgroup lattice and its
/// conjugacy classes, commutator subgroups) is derived eagerly at build
/// time; instances are immutable afterwards and safe to share across
/// threads.
class FiniteGroup {
public:
    static constexpr int kMaxOrder = 30;

    /// Validates the table (identity at index 0, two-sided inverses,
    /// associativity) and derives everything. Throws GcError(NotAGroup)
    /// with a witness triple on failure.
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> names = {});

    /// Built-in groups: "trivial", "mu2", "mu3", "mu4", "mu6", "S3".
    /// S3 element order is 1,(12),(13),(23),(123),(132).
    static const FiniteGroup& builtin(const std::string& name);
    static bool is_builtin_name(const std::string& name);
    static std::vector<std::string> builtin_names();

    /// Cayley-table file: line 1 = order n; next n lines = n indices
    /// (row x, column y gives x*y); optional trailing lines "idx name".
    static FiniteGroup from_stream(std::istream& in);
    static FiniteGroup from_file(const std::string& path);
    /// Resolves a built-in name first, else reads the path as a table file.
    static FiniteGroup resolve(const std::string& name_or_path);

    int order() const { return order_; }
    int mul(int x, int y) const { return table_[x][y]; }
    int inv(int x) const { return inverse_[x]; }
    int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int element_order(int x) const { return elem_order_[x]; }
    int power(int x, long e) const;
    const std::string& element_name(int x) const { return names_[x]; }
    const std::string& name() const { return group_name_; }
    bool is_abelian() const { return abelian_; }
    /// Index of a generator if the group is cyclic, -1 otherwise.
    int cyclic_generator() const { return cyclic_gen_; }

    // --- element conjugacy classes ---
    int class_count() const { return static_cast<int>(classes_.size()); }
    ConjClassId class_of(int x) const { return ConjClassId{class_of_[x]}; }
    const std::vector<int>& class_members(ConjClassId c) const { return classes_[c.id]; }
    int class_rep(ConjClassId c) const { return classes_[c.id].front(); }
    ConjClassId inverse_class(ConjClassId c) const { return ConjClassId{inverse_class_[c.id]}; }
    std::string class_name(ConjClassId c) const;
    /// Accepts a class name as printed, an element name, "c<k>" when the
    /// element order k identifies a unique class, or "e<idx>".
    ConjClassId class_by_token(const std::string& token) const;

    int inv_sym_class_count() const { return static_cast<int>(inv_sym_of_.empty() ? 0 : inv_sym_members_.size()); }
    InvSymClassId inv_sym_class_of(ConjClassId c) const { return InvSymClassId{inv_sym_of_[c.id]}; }
    const std::vector<int>& inv_sym_members(InvSymClassId s) const { return inv_sym_members_[s.id]; }
    /// Canonical representative: the member ConjClassId with least id.
    ConjClassId inv_sym_rep(InvSymClassId s) const { return ConjClassId{inv_sym_members_[s.id].front()}; }

    // --- centralizers ---
    std::vector<int> centralizer(int x) const;
    ElemMask centralizer_mask(int x) const { return centralizer_[x]; }

    // --- subgroup lattice ---
    int subgroup_count() const { return static_cast<int>(subgroups_.size()); }
    ElemMask subgroup_mask(int sid) const { return subgroups_[sid]; }
    const std::vector<int>& subgroup_members(int sid) const { return subgroup_members_[sid]; }
    /// Id of a mask that is known to be a subgroup; -1 if it is not one.
    int subgroup_id(ElemMask mask) const;
    /// Smallest subgroup containing the given elements.
    ElemMask closure(ElemMask seed) const;
    /// Precomputed closure(subgroup_mask(sid) | {x}).
    int subgroup_join(int sid, int x) const { return join_[sid][x]; }
    int trivial_subgroup_id() const { return trivial_subgroup_; }
    int full_subgroup_id() const { return full_subgroup_; }

    int subgroup_class_count() const { return static_cast<int>(subgroup_classes_.size()); }
    SubgroupClassId subgroup_class_of_id(int sid) const { return SubgroupClassId{subgroup_class_of_[sid]}; }
    const std::vector<int>& subgroup_class_members(SubgroupClassId c) const { return subgroup_classes_[c.id]; }
    /// Canonical representative: lexicographically least member set.
    int subgroup_class_rep(SubgroupClassId c) const { return subgroup_classes_[c.id].front(); }
    SubgroupClassId trivial_subgroup_class() const { return subgroup_class_of_id(trivial_subgroup_); }
    SubgroupClassId full_subgroup_class() const { return subgroup_class_of_id(full_subgroup_); }
    /// Class containment order: a <= b iff some member of a is contained
    /// in some member of b.
    bool subgroup_class_leq(SubgroupClassId a, SubgroupClassId b) const;
    std::string subgroup_class_name(SubgroupClassId c) const;
    /// Accepts "1"/"trivial", "full", the group name, or a derived class
    /// name ("T", "N", "mu2", "sub4_1", ...).
    SubgroupClassId subgroup_class_by_token(const std::string& token) const;

    /// Class of the subgroup generated by (or equal to) `elems`. With
    /// generated=false the set must already be closed, else
    /// GcError(NotASubgroup).
    SubgroupClassId subgroup_class_of(const std::vector<int>& elems, bool generated = false) const;

    /// Subgroup generated by all commutators [a,b], a,b in h.
    /// `h` must be a subgroup mask.
    ElemMask commutator_subgroup_mask(ElemMask h) const;
    std::vector<int> commutator_subgroup(const std::vector<int>& h) const;

    std::vector<int> mask_members(ElemMask m) const;
    ElemMask conjugate_mask(int g, ElemMask m) const;

    /// The subgroup as a standalone group (identity re-indexed to 0),
    /// with element maps to and from the parent.
    FiniteGroup subgroup_group(int sid, std::vector<int>* to_parent = nullptr,
                               std::vector<int>* from_parent = nullptr) const;

private:
    FiniteGroup() = default;
    void derive();

    int order_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<std::string> names_;
    std::string group_name_ = "G";
    std::vector<int> inverse_;
    std::vector<int> elem_order_;
    bool abelian_ = false;
    int cyclic_gen_ = -1;

    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> inverse_class_;
    std::vector<int> inv_sym_of_;
    std::vector<std::vector<int>> inv_sym_members_;

    std::vector<ElemMask> centralizer_;

    std::vector<ElemMask> subgroups_;
    std::vector<std::vector<int>> subgroup_members_;
    std::vector<std::vector<int>> join_;
    std::vector<int> subgroup_class_of_;
    std::vector<std::vector<int>> subgroup_classes_;
    int trivial_subgroup_ = -1;
    int full_subgroup_ = -1;
};

}  // namespace gcover
