#include "gcover/elliptic_tail.hpp"

#include "gcover/errors.hpp"

#include <algorithm>
#include <map>

namespace gcover {

namespace {

std::pair<int, int> canonical_pair(const FiniteGroup& g, std::pair<int, int> ab) {
    std::pair<int, int> best = ab;
    for (int z = 0; z < g.order(); ++z)
        best = std::min(best, {g.conjugate(z, ab.first), g.conjugate(z, ab.second)});
    return best;
}

}  // namespace

std::vector<EllipticCoverClass> classes_with_image(const FiniteGroup& g, SubgroupClassId h) {
    std::vector<EllipticCoverClass> out;
    std::map<std::pair<int, int>, bool> seen;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            if (g.mul(a, b) != g.mul(b, a)) continue;
            if (g.subgroup_class_of({a, b}, /*generated=*/true) != h) continue;
            auto rep = canonical_pair(g, {a, b});
            if (seen.emplace(rep, true).second) {
                EllipticCoverClass c;
                c.group = &g;
                c.pair = rep;
                c.label = "a->" + g.element_name(rep.first) + "; b->" + g.element_name(rep.second);
                out.push_back(std::move(c));
            }
        }
    return out;
}

std::pair<int, int> apply_aut(const AutAction& act, const FiniteGroup& g, std::pair<int, int> ab) {
    auto [x, y] = ab;
    if (act.order == 6) return {y, g.mul(y, g.inv(x))};
    if (act.order == 4) return {y, g.inv(x)};
    throw GcError(errc::index_out_of_range, "automorphism order must be 4 or 6");
}

AutOrbits aut_orbits(const FiniteGroup& g, const std::vector<EllipticCoverClass>& classes,
                     const AutAction& act) {
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < static_cast<int>(classes.size()); ++i) index[classes[i].pair] = i;

    auto step = [&](int i) {
        auto img = canonical_pair(g, apply_aut(act, g, classes[i].pair));
        auto it = index.find(img);
        if (it == index.end())
            throw GcError(errc::internal_mismatch,
                          "automorphism action leaves the class list (image class not preserved)");
        return it->second;
    };

    AutOrbits r;
    r.fixed.assign(classes.size(), false);
    std::vector<bool> visited(classes.size(), false);
    for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
        if (visited[i]) continue;
        std::vector<int> orbit;
        int j = i;
        while (!visited[j]) {
            visited[j] = true;
            orbit.push_back(j);
            j = step(j);
        }
        if (orbit.size() == 1) r.fixed[orbit[0]] = step(orbit[0]) == orbit[0];
        r.orbits.push_back(std::move(orbit));
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (step(static_cast<int>(i)) == static_cast<int>(i)) r.fixed[i] = true;
    return r;
}

int BranchDataRN::total_ramification() const {
    int t = 0;
    for (const auto& d : data)
        for (const auto& p : d.fiber) t += p.ram_index - 1;
    return t;
}

BranchDataRN branch_data_RN() {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    SubgroupClassId n_class = s3.subgroup_class_by_token("N");
    auto classes = classes_with_image(s3, n_class);
    if (classes.size() != 4)
        throw GcError(errc::internal_mismatch, "expected 4 N-cover classes over an elliptic curve");

    BranchDataRN r;
    r.degree = static_cast<int>(classes.size());

    auto fiber_from_orbits = [&](int order, const std::string& base, const std::string& picture) {
        auto orb = aut_orbits(s3, classes, AutAction{order});
        BranchDatum d;
        d.base_point = base;
        // One fiber point per orbit; the ramification index is the orbit
        // size. Primed labels go to the ramified points.
        std::vector<std::vector<int>> sorted = orb.orbits;
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });
        int primes = 0;
        for (const auto& o : sorted) {
            BranchPoint p;
            ++primes;
            p.label = "[" + base + (primes == 1 ? "'" : "''") + "]";
            p.ram_index = static_cast<int>(o.size());
            p.local_picture = picture;
            d.fiber.push_back(std::move(p));
        }
        return d;
    };

    BranchDatum e4 = fiber_from_orbits(4, "E4", "(1/2,1/2)");
    BranchDatum e6 = fiber_from_orbits(6, "E6", "(1/3,1/3)");

    // The nodal fiber is pinned from the deformation picture: [E0'] has
    // an order-3 stabilizer at the node (t_E = t~_E^3), [E0''] is
    // unramified.
    BranchDatum e0;
    e0.base_point = "E0";
    e0.fiber.push_back({"[E0']", 3, "(1,1/3)"});
    e0.fiber.push_back({"[E0'']", 1, "(1,1)"});

    r.data = {e4, e6, e0};
    return r;
}

int genus_by_riemann_hurwitz(int degree, int base_genus,
                             const std::vector<BranchDatum>& branch) {
    if (degree <= 0) throw GcError(errc::inconsistent_profile, "degree must be positive");
    long total = 0;
    for (const auto& d : branch) {
        long fiber_sum = 0;
        for (const auto& p : d.fiber) {
            if (p.ram_index < 1)
                throw GcError(errc::inconsistent_profile, "ramification index must be >= 1");
            fiber_sum += p.ram_index;
            total += p.ram_index - 1;
        }
        if (fiber_sum != degree)
            throw GcError(errc::inconsistent_profile,
                          "fiber over " + d.base_point + " sums to " + std::to_string(fiber_sum) +
                              ", degree is " + std::to_string(degree));
    }
    long two_g_minus_2 = static_cast<long>(degree) * (2L * base_genus - 2) + total;
    if ((two_g_minus_2 + 2) % 2 != 0 || two_g_minus_2 + 2 < 0)
        throw GcError(errc::inconsistent_profile, "Riemann-Hurwitz genus is not a non-negative integer");
    return static_cast<int>((two_g_minus_2 + 2) / 2);
}

}  // namespace gcover
