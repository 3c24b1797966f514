#include "gcover/boundary.hpp"

#include "gcover/errors.hpp"
#include "gcover/monodromy.hpp"

#include <algorithm>
#include <sstream>

namespace gcover {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::nonempty: return "nonempty";
        case Verdict::empty: return "empty";
        case Verdict::undecided: return "undecided";
    }
    return "?";
}

std::string BoundaryLabel::name(const FiniteGroup& g) const {
    std::ostringstream os;
    os << "Delta_{" << i;
    if (node_type.id != 0) os << "," << g.class_name(node_type);
    os << "}^{" << g.subgroup_class_name(h1) << "," << g.subgroup_class_name(h2) << "}";
    return os.str();
}

namespace {

// Does the node class meet the commutator subgroup of some subgroup in
// the given class?
bool class_meets_commutators(const FiniteGroup& g, ConjClassId node, SubgroupClassId h) {
    for (int sid : g.subgroup_class_members(h)) {
        ElemMask comm = g.commutator_subgroup_mask(g.subgroup_mask(sid));
        for (int w : g.class_members(node))
            if (comm & (ElemMask{1} << w)) return true;
    }
    return false;
}

// Subgroups in class h containing an element of the node class.
bool class_meets_subgroup(const FiniteGroup& g, ConjClassId node, SubgroupClassId h) {
    for (int sid : g.subgroup_class_members(h)) {
        ElemMask m = g.subgroup_mask(sid);
        for (int w : g.class_members(node))
            if (m & (ElemMask{1} << w)) return true;
    }
    return false;
}

struct SideData {
    int subgroup = -1;  // realized subgroup id
    int mark = -1;      // realized node element
};

// Exact per-(subgroup, pinned mark) count on one side of a type-i node.
Int side_count(const HomCounter& hc, int sid, int genus, int mark) {
    return hc.count_image_exact(sid, genus, {{mark}});
}

void decide_type_i(const FiniteGroup& g, int genus_total, BoundaryLabel& label,
                   const Config& cfg) {
    const HomCounter& hc = hom_counter(g);
    const int gi = label.i, gj = genus_total - label.i;
    const ConjClassId cls1 = label.node_type;
    const ConjClassId cls2 = g.inverse_class(cls1);

    // Realizable (subgroup, mark) pairs on each side.
    std::vector<SideData> side1, side2;
    for (int sid : g.subgroup_class_members(label.h1))
        for (int w : g.class_members(cls1)) {
            if (!(g.subgroup_mask(sid) & (ElemMask{1} << w))) continue;
            if (side_count(hc, sid, gi, w) > 0) side1.push_back({sid, w});
        }
    for (int sid : g.subgroup_class_members(label.h2))
        for (int w : g.class_members(cls2)) {
            if (!(g.subgroup_mask(sid) & (ElemMask{1} << w))) continue;
            if (side_count(hc, sid, gj, w) > 0) side2.push_back({sid, w});
        }

    if (side1.empty() || side2.empty()) {
        label.verdict = Verdict::empty;
        std::ostringstream os;
        os << "exhausted all (subgroup, local index) pairs: genus-" << gi << " side has "
           << side1.size() << " realizations, genus-" << gj << " side has " << side2.size();
        label.certificate = os.str();
        return;
    }

    // Glued component classes over all identifications s w2 s^-1 = w1^-1.
    std::vector<int> glued;
    SideData pick1, pick2;
    int pick_s = -1, pick_class = -1;
    for (const auto& a : side1)
        for (const auto& b : side2)
            for (int s = 0; s < g.order(); ++s) {
                if (g.conjugate(s, b.mark) != g.inv(a.mark)) continue;
                ElemMask m = g.subgroup_mask(a.subgroup) |
                             g.conjugate_mask(s, g.subgroup_mask(b.subgroup));
                int cls = g.subgroup_class_of_id(g.subgroup_id(g.closure(m))).id;
                if (std::find(glued.begin(), glued.end(), cls) == glued.end()) glued.push_back(cls);
                if (pick_s < 0) {
                    pick1 = a;
                    pick2 = b;
                    pick_s = s;
                    pick_class = cls;
                }
            }
    std::sort(glued.begin(), glued.end());
    label.glued_classes = glued;
    label.verdict = Verdict::nonempty;

    BoundaryWitness w;
    w.subgroup1 = pick1.subgroup;
    w.subgroup2 = pick2.subgroup;
    w.conjugator = pick_s;
    w.glued_class = pick_class;
    auto t1 = find_hom_witness(g, pick1.subgroup, gi, {{pick1.mark}}, cfg.brute_force_cutoff);
    auto t2 = find_hom_witness(g, pick2.subgroup, gj, {{pick2.mark}}, cfg.brute_force_cutoff);
    if (!t1 || !t2) {
        // Exact count says nonempty but the witness search hit the
        // budget; keep the verdict honest and record the gap.
        label.verdict = Verdict::undecided;
        label.certificate = "witness search exceeded the enumeration budget";
        label.witness.reset();
        return;
    }
    w.side1 = *t1;
    w.side2 = *t2;
    label.witness = w;
}

void decide_type_0(const FiniteGroup& g, int genus_total, BoundaryLabel& label,
                   const Config& cfg) {
    const HomCounter& hc = hom_counter(g);
    const int h = genus_total - 1;  // genus of the normalization
    long combos_checked = 0;

    for (int sid : g.subgroup_class_members(label.h2)) {
        ElemMask um = g.subgroup_mask(sid);
        for (int w : g.class_members(label.node_type)) {
            if (!(um & (ElemMask{1} << w))) continue;
            // Gluing factor must commute with the local index and close
            // the cover up to class h1.
            int hgamma = -1;
            for (int z : g.centralizer(w)) {
                ++combos_checked;
                ElemMask glued = g.closure(um | (ElemMask{1} << z));
                if (g.subgroup_class_of_id(g.subgroup_id(glued)) == label.h1) {
                    hgamma = z;
                    break;
                }
            }
            if (hgamma < 0) continue;
            if (hc.count_image_exact(sid, h, {{w}, {g.inv(w)}}) == 0) continue;

            label.verdict = Verdict::nonempty;
            auto tuple = find_hom_witness(g, sid, h, {{w}, {g.inv(w)}}, cfg.brute_force_cutoff);
            if (!tuple) {
                label.verdict = Verdict::undecided;
                label.certificate = "witness search exceeded the enumeration budget";
                return;
            }
            BoundaryWitness bw;
            bw.side1 = *tuple;
            bw.subgroup1 = sid;
            bw.gluing_factor = hgamma;
            bw.glued_class = label.h1.id;
            label.witness = bw;
            label.glued_classes = {label.h1.id};
            return;
        }
    }
    label.verdict = Verdict::empty;
    std::ostringstream os;
    os << "exhausted all (subgroup in " << g.subgroup_class_name(label.h2)
       << ", local index in " << g.class_name(label.node_type)
       << ", centralizing gluing factor) data: " << combos_checked
       << " gluing combinations, none reaching class " << g.subgroup_class_name(label.h1)
       << " with a realizable normalization cover";
    label.certificate = os.str();
}

}  // namespace

std::vector<BoundaryLabel> catalog(int g, const FiniteGroup& group,
                                   std::optional<SubgroupClassId> restrict_to_component,
                                   const Config& cfg) {
    if (g < 2) throw GcError(errc::index_out_of_range, "genus must be >= 2");
    std::vector<BoundaryLabel> out;

    // Disconnecting nodes. The node class must meet the commutator
    // subgroup on both sides: each side's mark is a product of that
    // side's commutators.
    for (int i = 1; i <= g / 2; ++i) {
        for (int c = 0; c < group.class_count(); ++c) {
            ConjClassId node{c};
            ConjClassId node_inv = group.inverse_class(node);
            for (int a = 0; a < group.subgroup_class_count(); ++a)
                for (int b = 0; b < group.subgroup_class_count(); ++b) {
                    SubgroupClassId h1{a}, h2{b};
                    if (c != 0 && (!class_meets_commutators(group, node, h1) ||
                                   !class_meets_commutators(group, node_inv, h2)))
                        continue;
                    BoundaryLabel label;
                    label.kind = BoundaryKind::type_i;
                    label.i = i;
                    label.h1 = h1;
                    label.h2 = h2;
                    label.node_type = node;
                    try {
                        decide_type_i(group, g, label, cfg);
                    } catch (const GcError& e) {
                        label.verdict = Verdict::undecided;
                        label.certificate = e.what();
                        label.witness.reset();
                    }
                    out.push_back(std::move(label));
                }
        }
    }

    // Non-disconnecting nodes: H2 <= H1 and the node type must live in a
    // subgroup of class H2 (it is a local index of the pulled-back
    // cover); the class is recorded modulo inversion.
    for (int s = 0; s < group.inv_sym_class_count(); ++s) {
        InvSymClassId sym{s};
        ConjClassId node = group.inv_sym_rep(sym);
        for (int a = 0; a < group.subgroup_class_count(); ++a)
            for (int b = 0; b < group.subgroup_class_count(); ++b) {
                SubgroupClassId h1{a}, h2{b};
                if (!group.subgroup_class_leq(h2, h1)) continue;
                if (!class_meets_subgroup(group, node, h2)) continue;
                BoundaryLabel label;
                label.kind = BoundaryKind::type_0;
                label.i = 0;
                label.h1 = h1;
                label.h2 = h2;
                label.node_type = node;
                label.node_type_sym = sym;
                try {
                    decide_type_0(group, g, label, cfg);
                } catch (const GcError& e) {
                    label.verdict = Verdict::undecided;
                    label.certificate = e.what();
                    label.witness.reset();
                }
                label.commutator_diagnostic = class_meets_commutators(group, node, h2);
                label.diagnostic_conflict =
                    (label.verdict == Verdict::nonempty) != label.commutator_diagnostic;
                out.push_back(std::move(label));
            }
    }

    if (restrict_to_component) {
        std::vector<BoundaryLabel> kept;
        for (auto& l : out) {
            if (l.verdict != Verdict::nonempty) continue;
            if (std::find(l.glued_classes.begin(), l.glued_classes.end(),
                          restrict_to_component->id) == l.glued_classes.end())
                continue;
            kept.push_back(std::move(l));
        }
        return kept;
    }
    return out;
}

bool commutator_necessary_condition(const FiniteGroup& g, const BoundaryLabel& label) {
    if (label.kind != BoundaryKind::type_0)
        throw GcError(errc::usage, "the commutator condition applies to type-0 labels");
    return class_meets_commutators(g, label.node_type, label.h2);
}

bool replay_witness(const FiniteGroup& g, int genus, const BoundaryLabel& label) {
    if (!label.witness) return false;
    const BoundaryWitness& w = *label.witness;

    auto in_class = [&](int x, ConjClassId c) { return g.class_of(x) == c; };

    if (label.kind == BoundaryKind::type_0) {
        int h = genus - 1;
        if (w.side1.size() != 2 * static_cast<std::size_t>(h) + 2) return false;
        int w1 = w.side1[2 * h], w2 = w.side1[2 * h + 1];
        if (!in_class(w1, label.node_type) || g.inv(w1) != w2) return false;
        if (!verify_hom_tuple(g, w.side1, h, {{w1}, {w2}}, w.subgroup1)) return false;
        if (g.subgroup_class_of_id(w.subgroup1) != label.h2) return false;
        // Gluing factor commutes with the local index; the closed-up
        // cover has class h1.
        if (g.mul(w1, w.gluing_factor) != g.mul(w.gluing_factor, w1)) return false;
        ElemMask m = g.subgroup_mask(w.subgroup1) | (ElemMask{1} << w.gluing_factor);
        return g.subgroup_class_of_id(g.subgroup_id(g.closure(m))) == label.h1;
    }

    const int gi = label.i, gj = genus - label.i;
    if (w.side1.size() != 2 * static_cast<std::size_t>(gi) + 1) return false;
    if (w.side2.size() != 2 * static_cast<std::size_t>(gj) + 1) return false;
    int w1 = w.side1.back(), w2 = w.side2.back();
    if (!in_class(w1, label.node_type)) return false;
    if (!in_class(w2, g.inverse_class(label.node_type))) return false;
    if (!verify_hom_tuple(g, w.side1, gi, {{w1}}, w.subgroup1)) return false;
    if (!verify_hom_tuple(g, w.side2, gj, {{w2}}, w.subgroup2)) return false;
    if (g.subgroup_class_of_id(w.subgroup1) != label.h1) return false;
    if (g.subgroup_class_of_id(w.subgroup2) != label.h2) return false;
    // The conjugator aligns the two local indices.
    if (w.conjugator >= 0 && g.conjugate(w.conjugator, w2) != g.inv(w1)) return false;
    return true;
}

}  // namespace gcover
