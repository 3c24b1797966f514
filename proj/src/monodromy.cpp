#include "gcover/monodromy.hpp"

#include "gcover/characters.hpp"
#include "gcover/cyclotomic.hpp"
#include "gcover/errors.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <thread>

namespace gcover {

const char* method_name(CountMethod m) {
    switch (m) {
        case CountMethod::brute_force: return "brute_force";
        case CountMethod::frobenius: return "frobenius";
        case CountMethod::moebius: return "moebius";
    }
    return "?";
}

namespace {

void validate_query(const CoverCountQuery& q) {
    if (!q.group) throw GcError(errc::usage, "query has no group");
    if (q.genus < 0) throw GcError(errc::index_out_of_range, "genus must be non-negative");
    for (auto c : q.mark_types)
        if (c.id < 0 || c.id >= q.group->class_count())
            throw GcError(errc::index_out_of_range, "mark class out of range");
    if (q.image_class && *q.image_class == q.group->trivial_subgroup_class())
        for (auto c : q.mark_types)
            if (c.id != 0)
                throw GcError(errc::usage,
                              "trivial image class forces trivial mark types");
}

Int required_tuples(const FiniteGroup& g, int genus, int nmarks) {
    return int_pow(Int(g.order()), static_cast<unsigned long>(2 * genus + nmarks));
}

// Recursive enumeration of (alpha_1, beta_1, ..., gamma_n) with running
// left-to-right relation product and running generated subgroup (as a
// join id in the parent lattice).
struct BruteEnv {
    const FiniteGroup* g;
    int genus = 0;
    std::vector<int> domain;                  // allowed alpha/beta values
    std::vector<std::vector<int>> mark_sets;  // allowed gamma values per mark
    std::optional<SubgroupClassId> image_class;
};

Int brute_rec_pairs(const BruteEnv& e, int pair_idx, int prod, int join);

Int brute_rec_marks(const BruteEnv& e, int mark_idx, int prod, int join) {
    const FiniteGroup& G = *e.g;
    if (mark_idx == static_cast<int>(e.mark_sets.size())) {
        if (prod != 0) return 0;
        if (e.image_class && G.subgroup_class_of_id(join) != *e.image_class) return 0;
        return 1;
    }
    Int total = 0;
    for (int c : e.mark_sets[mark_idx])
        total += brute_rec_marks(e, mark_idx + 1, G.mul(prod, c), G.subgroup_join(join, c));
    return total;
}

Int brute_rec_pairs(const BruteEnv& e, int pair_idx, int prod, int join) {
    const FiniteGroup& G = *e.g;
    if (pair_idx == e.genus) return brute_rec_marks(e, 0, prod, join);
    Int total = 0;
    for (int a : e.domain) {
        int ja = G.subgroup_join(join, a);
        for (int b : e.domain) {
            int comm = G.mul(G.mul(G.mul(a, b), G.inv(a)), G.inv(b));
            total += brute_rec_pairs(e, pair_idx + 1, G.mul(prod, comm), G.subgroup_join(ja, b));
        }
    }
    return total;
}

Int brute_enumerate(const BruteEnv& e, int threads) {
    const FiniteGroup& G = *e.g;
    const int trivial = G.trivial_subgroup_id();
    // Nothing to parallelize over / small problems: run in place.
    const bool has_pairs = e.genus > 0;
    const bool has_marks = !e.mark_sets.empty();
    if (!has_pairs && !has_marks) {
        // The empty product is the identity.
        if (e.image_class && G.subgroup_class_of_id(trivial) != *e.image_class) return 0;
        return 1;
    }
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    const std::vector<int>& first = has_pairs ? e.domain : e.mark_sets[0];
    if (threads == 1 || first.size() < 2) {
        return has_pairs ? brute_rec_pairs(e, 0, 0, trivial) : brute_rec_marks(e, 0, 0, trivial);
    }

    // Deterministic split over the first coordinate.
    std::vector<std::future<Int>> futs;
    for (int t = 0; t < threads; ++t) {
        futs.push_back(std::async(std::launch::async, [&, t]() {
            Int part = 0;
            for (std::size_t k = t; k < first.size(); k += threads) {
                int v = first[k];
                int join = G.subgroup_join(trivial, v);
                if (has_pairs) {
                    for (int b : e.domain) {
                        int comm = G.mul(G.mul(G.mul(v, b), G.inv(v)), G.inv(b));
                        part += brute_rec_pairs(e, 1, comm, G.subgroup_join(join, b));
                    }
                } else {
                    part += brute_rec_marks(e, 1, v, join);
                }
            }
            return part;
        }));
    }
    Int total = 0;
    for (auto& f : futs) total += f.get();
    return total;
}

std::vector<int> intersect_sorted(const std::vector<int>& sorted_set, ElemMask mask) {
    std::vector<int> out;
    for (int x : sorted_set)
        if (mask & (ElemMask{1} << x)) out.push_back(x);
    return out;
}

}  // namespace

CoverCountResult count_homs_brute(const CoverCountQuery& q, const Config& cfg) {
    validate_query(q);
    const FiniteGroup& G = *q.group;
    Int req = required_tuples(G, q.genus, static_cast<int>(q.mark_types.size()));
    if (req > Int(static_cast<unsigned long>(cfg.brute_force_cutoff)))
        throw GcError(errc::search_too_large,
                      "brute-force search needs " + req.get_str() + " tuples",
                      {{"required", req.get_str()},
                       {"cutoff", cfg.brute_force_cutoff}});

    BruteEnv e;
    e.g = &G;
    e.genus = q.genus;
    e.image_class = q.image_class;

    if (!q.up_to_conjugation) {
        e.domain.resize(G.order());
        for (int x = 0; x < G.order(); ++x) e.domain[x] = x;
        for (auto c : q.mark_types) e.mark_sets.push_back(G.class_members(c));
        return {brute_enumerate(e, cfg.threads), CountMethod::brute_force};
    }

    // Burnside over the conjugation action: tuples fixed by conj_z are
    // exactly the tuples valued in the centralizer of z.
    Int orbits_sum = 0;
    for (int z = 0; z < G.order(); ++z) {
        ElemMask cz = G.centralizer_mask(z);
        e.domain = G.mask_members(cz);
        e.mark_sets.clear();
        bool feasible = true;
        for (auto c : q.mark_types) {
            auto s = intersect_sorted(G.class_members(c), cz);
            if (s.empty()) feasible = false;
            e.mark_sets.push_back(std::move(s));
        }
        if (!feasible && !q.mark_types.empty()) continue;
        orbits_sum += brute_enumerate(e, cfg.threads);
    }
    if (orbits_sum % G.order() != 0)
        throw GcError(errc::internal_mismatch, "Burnside sum not divisible by |G|");
    return {orbits_sum / G.order(), CountMethod::brute_force};
}

// ---------------------------------------------------------------------
// Character-formula machinery.

struct HomCounter::Impl {
    // Owned copy: counters may be cached beyond the caller's group
    // lifetime. Derived data (class and subgroup ids) is deterministic
    // in the table, so ids are interchangeable with the caller's.
    FiniteGroup owned;
    const FiniteGroup* g;

    struct SubCtx {
        FiniteGroup grp;                 // the subgroup as its own group
        std::vector<int> to_parent;      // sub index -> parent index
        std::vector<int> from_parent;    // parent index -> sub index or -1
        std::vector<Representation> irreps;
        bool characters_ok = false;
    };
    mutable std::mutex mtx;
    mutable std::map<int, std::unique_ptr<SubCtx>> subs;
    // count_in is pure; repeated lattice recursions hit the same keys.
    mutable std::mutex memo_mtx;
    mutable std::map<std::string, Int> memo;

    explicit Impl(const FiniteGroup& group) : owned(group), g(&owned) {}

    const SubCtx& ctx(int sid) const {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = subs.find(sid);
        if (it != subs.end()) return *it->second;
        std::vector<int> to_parent, from_parent;
        FiniteGroup sub = g->subgroup_group(sid, &to_parent, &from_parent);
        auto c = std::make_unique<SubCtx>(
            SubCtx{std::move(sub), std::move(to_parent), std::move(from_parent), {}, false});
        try {
            c->irreps = irreducibles(c->grp);
            c->characters_ok = true;
        } catch (const GcError&) {
            c->characters_ok = false;
        }
        return *subs.emplace(sid, std::move(c)).first->second;
    }

    // Count of homs into the subgroup `sid` with gamma_i ranging over
    // marks[i] (parent elements, intersected here). Marks are summed out
    // exactly: for each gamma tuple the alpha/beta part contributes
    // N_h(z) = |V|^(2h-1) sum_chi chi(z)/chi(1)^(2h-1), the number of
    // ways to write z = (gamma_1 ... gamma_n)^(-1) as a product of h
    // commutators. (The class-product Frobenius formula is the special
    // case of full-class marks; the tuple sum also handles pinned
    // elements, where per-class weights would only give averages.)
    Int count_in(int sid, int genus, const std::vector<std::vector<int>>& marks) const {
        const SubCtx& c = ctx(sid);
        const int n = static_cast<int>(marks.size());
        const Int order(c.grp.order());

        // Per-mark allowed sets in sub-indices.
        std::vector<std::vector<int>> sets(n);
        for (int i = 0; i < n; ++i) {
            for (int parent_elem : marks[i]) {
                int s = c.from_parent[parent_elem];
                if (s >= 0) sets[i].push_back(s);
            }
            if (sets[i].empty()) return 0;
        }

        std::string key = std::to_string(sid) + "g" + std::to_string(genus);
        for (const auto& s : sets) {
            key += "|";
            for (int x : s) key += std::to_string(x) + ",";
        }
        {
            std::lock_guard<std::mutex> lock(memo_mtx);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }

        if (!c.characters_ok) {
            // No character table for this subgroup; fall back to direct
            // enumeration inside it (desk scale keeps this honest).
            BruteEnv e;
            e.g = g;
            e.genus = genus;
            e.domain = c.to_parent;
            for (int i = 0; i < n; ++i) {
                std::vector<int> set;
                for (int s : sets[i]) set.push_back(c.to_parent[s]);
                e.mark_sets.push_back(std::move(set));
            }
            Int req = int_pow(order, static_cast<unsigned long>(2 * genus + n));
            if (req > Int(100000000L))
                throw GcError(errc::unsupported_group,
                              "no character table and subgroup too large for enumeration");
            Int counted = brute_enumerate(e, 1);
            std::lock_guard<std::mutex> lock(memo_mtx);
            return memo.emplace(std::move(key), std::move(counted)).first->second;
        }

        // Tally the classes of z over all gamma tuples.
        std::vector<Int> tally(c.grp.class_count(), 0);
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            int prod = 0;
            for (int i = 0; i < n; ++i) prod = c.grp.mul(prod, sets[i][idx[i]]);
            tally[c.grp.class_of(c.grp.inv(prod)).id] += 1;
            int k = n - 1;
            while (k >= 0 && ++idx[k] == sets[k].size()) idx[k--] = 0;
            if (k < 0) break;
        }

        CyclotomicNumber acc;
        for (const auto& rep : c.irreps) {
            CyclotomicNumber zsum;
            for (int cc = 0; cc < c.grp.class_count(); ++cc) {
                if (tally[cc] == 0) continue;
                zsum += rat(tally[cc], Int(1)) * rep.chi[cc];
            }
            acc += rat_pow(Rat(rep.dim), 1 - 2 * genus) * zsum;
        }
        if (!acc.is_rational())
            throw GcError(errc::non_integral_count, "character sum is not rational");
        Rat total = acc.rational() * rat_pow(Rat(order), 2 * genus - 1);
        if (!is_integer(total) || total < 0)
            throw GcError(errc::non_integral_count,
                          "character-formula count " + rat_to_string(total) +
                              " is not a non-negative integer");
        std::lock_guard<std::mutex> lock(memo_mtx);
        return memo.emplace(std::move(key), total.get_num()).first->second;
    }

    // Image-exactly counts for every subgroup of `sid`, by lattice
    // recursion e(V) = t(V) - sum_{W < V} e(W).
    std::map<int, Int> image_exact_table(int sid, int genus,
                                         const std::vector<std::vector<int>>& marks) const {
        ElemMask top = g->subgroup_mask(sid);
        std::vector<int> below;
        for (int s = 0; s < g->subgroup_count(); ++s)
            if ((g->subgroup_mask(s) & top) == g->subgroup_mask(s)) below.push_back(s);
        // subgroups_ are sorted by size, so `below` is already ordered by
        // increasing order; proper subgroups precede their supergroups.
        std::map<int, Int> e;
        for (int s : below) {
            Int t = count_in(s, genus, marks);
            for (int w : below) {
                if (w == s) break;
                ElemMask mw = g->subgroup_mask(w), ms = g->subgroup_mask(s);
                if (w != s && (mw & ms) == mw && mw != ms) t -= e.at(w);
            }
            e.emplace(s, std::move(t));
        }
        return e;
    }
};

HomCounter::HomCounter(const FiniteGroup& g) : impl_(std::make_unique<Impl>(g)) {}
HomCounter::~HomCounter() = default;

const FiniteGroup& HomCounter::group() const { return *impl_->g; }

Int HomCounter::count_in_subgroup(int sid, int genus,
                                  const std::vector<std::vector<int>>& marks) const {
    return impl_->count_in(sid, genus, marks);
}

Int HomCounter::count_image_exact(int sid, int genus,
                                  const std::vector<std::vector<int>>& marks) const {
    return impl_->image_exact_table(sid, genus, marks).at(sid);
}

Int HomCounter::count_image_in_class(SubgroupClassId h, int genus,
                                     const std::vector<std::vector<int>>& marks) const {
    Int total = 0;
    for (int sid : impl_->g->subgroup_class_members(h))
        total += count_image_exact(sid, genus, marks);
    return total;
}

Int HomCounter::count_image_in_class_up_to_conj(SubgroupClassId h, int genus,
                                                const std::vector<std::vector<int>>& marks) const {
    const FiniteGroup& G = *impl_->g;
    // Cache e(U) once per member subgroup.
    std::map<int, Int> exact;
    for (int sid : G.subgroup_class_members(h)) exact[sid] = count_image_exact(sid, genus, marks);
    Int sum = 0;
    for (int z = 0; z < G.order(); ++z) {
        ElemMask cz = G.centralizer_mask(z);
        for (const auto& [sid, cnt] : exact)
            if ((G.subgroup_mask(sid) & cz) == G.subgroup_mask(sid)) sum += cnt;
    }
    if (sum % G.order() != 0)
        throw GcError(errc::internal_mismatch, "Burnside sum not divisible by |G|");
    return sum / G.order();
}

Int HomCounter::count_total_up_to_conj(int genus,
                                       const std::vector<std::vector<int>>& marks) const {
    const FiniteGroup& G = *impl_->g;
    Int sum = 0;
    for (int z = 0; z < G.order(); ++z) {
        int sid = G.subgroup_id(G.centralizer_mask(z));
        sum += impl_->count_in(sid, genus, marks);
    }
    if (sum % G.order() != 0)
        throw GcError(errc::internal_mismatch, "Burnside sum not divisible by |G|");
    return sum / G.order();
}

const HomCounter& hom_counter(const FiniteGroup& g) {
    // Keyed by table content, not address: callers may hand in
    // short-lived group objects and equal tables share one counter.
    std::string key = std::to_string(g.order());
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) key += ',' + std::to_string(g.mul(x, y));
    static std::mutex mtx;
    static std::map<std::string, std::unique_ptr<HomCounter>> counters;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = counters.find(key);
    if (it == counters.end())
        it = counters.emplace(std::move(key), std::make_unique<HomCounter>(g)).first;
    return *it->second;
}

CoverCountResult count_homs_frobenius(const CoverCountQuery& q) {
    validate_query(q);
    if (q.image_class)
        throw GcError(errc::usage,
                      "image-class restriction is not supported on the Frobenius path; "
                      "use count_with_image_class");
    const FiniteGroup& G = *q.group;
    (void)irreducibles(G);  // UnsupportedGroup without a character table
    const HomCounter& hc = hom_counter(G);
    std::vector<std::vector<int>> marks;
    for (auto c : q.mark_types) marks.push_back(G.class_members(c));
    if (q.up_to_conjugation)
        return {hc.count_total_up_to_conj(q.genus, marks), CountMethod::frobenius};
    return {hc.count_in_subgroup(G.full_subgroup_id(), q.genus, marks), CountMethod::frobenius};
}

CoverCountResult count_with_image_class(const CoverCountQuery& q) {
    validate_query(q);
    if (!q.image_class)
        throw GcError(errc::usage, "count_with_image_class needs an image class");
    const FiniteGroup& G = *q.group;
    const HomCounter& hc = hom_counter(G);
    std::vector<std::vector<int>> marks;
    for (auto c : q.mark_types) marks.push_back(G.class_members(c));
    Int count = q.up_to_conjugation
                    ? hc.count_image_in_class_up_to_conj(*q.image_class, q.genus, marks)
                    : hc.count_image_in_class(*q.image_class, q.genus, marks);
    return {count, CountMethod::moebius};
}

GluingFactors gluing_factors(const NodeGluingQuery& q) {
    const FiniteGroup& G = *q.group;
    int w = G.class_rep(q.node_type);
    GluingFactors r;
    r.factors = G.centralizer(w);
    // Gluing data is defined up to conjugation fixing the local index,
    // i.e. up to conjugation by the centralizer itself.
    std::vector<bool> seen(G.order(), false);
    for (int x : r.factors) {
        if (seen[x]) continue;
        ++r.orbit_count;
        for (int z : r.factors) seen[G.conjugate(z, x)] = true;
    }
    return r;
}

// ---------------------------------------------------------------------
// Witness search.

int relation_product(const FiniteGroup& g, const std::vector<int>& tuple, int genus) {
    int prod = 0;
    for (int j = 0; j < genus; ++j) {
        int a = tuple[2 * j], b = tuple[2 * j + 1];
        prod = g.mul(prod, g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b)));
    }
    for (std::size_t k = 2 * static_cast<std::size_t>(genus); k < tuple.size(); ++k)
        prod = g.mul(prod, tuple[k]);
    return prod;
}

bool verify_hom_tuple(const FiniteGroup& g, const std::vector<int>& tuple, int genus,
                      const std::vector<std::vector<int>>& marks, int expected_sid) {
    if (tuple.size() != 2 * static_cast<std::size_t>(genus) + marks.size()) return false;
    if (relation_product(g, tuple, genus) != 0) return false;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        int gamma = tuple[2 * static_cast<std::size_t>(genus) + i];
        if (std::find(marks[i].begin(), marks[i].end(), gamma) == marks[i].end()) return false;
    }
    ElemMask m = 1;
    for (int x : tuple) m |= ElemMask{1} << x;
    return g.subgroup_id(g.closure(m)) == expected_sid;
}

namespace {

bool witness_rec(const FiniteGroup& G, const std::vector<int>& domain,
                 const std::vector<std::vector<int>>& mark_sets, int genus, int pos, int prod,
                 int join, int target_sid, std::vector<int>& tuple) {
    const int total_pos = 2 * genus + static_cast<int>(mark_sets.size());
    if (pos == total_pos) return prod == 0 && join == target_sid;
    if (pos < 2 * genus) {
        // Positions come in (alpha, beta) pairs; the relation product only
        // advances once the pair is complete.
        const bool is_alpha = pos % 2 == 0;
        for (int v : domain) {
            tuple[pos] = v;
            int nprod = prod, njoin = G.subgroup_join(join, v);
            if (!is_alpha) {
                int a = tuple[pos - 1], b = v;
                nprod = G.mul(prod, G.mul(G.mul(G.mul(a, b), G.inv(a)), G.inv(b)));
            }
            if (witness_rec(G, domain, mark_sets, genus, pos + 1, nprod, njoin, target_sid, tuple))
                return true;
        }
        return false;
    }
    for (int v : mark_sets[pos - 2 * genus]) {
        tuple[pos] = v;
        if (witness_rec(G, domain, mark_sets, genus, pos + 1, G.mul(prod, v),
                        G.subgroup_join(join, v), target_sid, tuple))
            return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_hom_witness(const FiniteGroup& g, int sid, int genus,
                                                 const std::vector<std::vector<int>>& marks,
                                                 std::uint64_t enum_budget) {
    const HomCounter& hc = hom_counter(g);
    const int n = static_cast<int>(marks.size());
    const std::vector<int>& domain = g.subgroup_members(sid);
    std::vector<std::vector<int>> mark_sets;
    for (const auto& m : marks) mark_sets.push_back(intersect_sorted(m, g.subgroup_mask(sid)));
    for (const auto& s : mark_sets)
        if (s.empty()) return std::nullopt;

    for (int h0 = 0; h0 <= genus; ++h0) {
        if (hc.count_image_exact(sid, h0, marks) == 0) continue;
        Int work = int_pow(Int(domain.size()), static_cast<unsigned long>(2 * h0));
        for (const auto& s : mark_sets) work *= static_cast<unsigned long>(s.size());
        if (work > Int(enum_budget)) return std::nullopt;

        std::vector<int> tuple(2 * h0 + n, 0);
        // The alpha side of the search keeps prod via completed pairs, so
        // an empty prefix starts at the identity and trivial join.
        int trivial = g.trivial_subgroup_id();
        if (witness_rec(g, domain, mark_sets, h0, 0, 0, trivial, sid, tuple)) {
            // Pad to the requested genus with identity pairs; the
            // relation, marks and generated subgroup are unchanged.
            std::vector<int> full(2 * genus + n, 0);
            for (int j = 0; j < 2 * h0; ++j) full[j] = tuple[j];
            for (int i = 0; i < n; ++i) full[2 * genus + i] = tuple[2 * h0 + i];
            if (!verify_hom_tuple(g, full, genus, marks, sid))
                throw GcError(errc::internal_mismatch, "padded witness failed replay");
            return full;
        }
        // A positive count with a failed enumeration cannot happen.
        throw GcError(errc::internal_mismatch, "witness enumeration disagrees with exact count");
    }
    return std::nullopt;
}

}  // namespace gcover
