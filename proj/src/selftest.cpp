#include "gcover/selftest.hpp"

#include "gcover/boundary.hpp"
#include "gcover/characters.hpp"
#include "gcover/divisor.hpp"
#include "gcover/elliptic_tail.hpp"
#include "gcover/errors.hpp"
#include "gcover/grr.hpp"
#include "gcover/kodaira.hpp"
#include "gcover/monodromy.hpp"
#include "gcover/pencils.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

namespace gcover::selftest {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream log;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "FAILED: " << what << "; ";
        }
    }
};

// 1. Brute force against the Frobenius character formula, exhaustively
// over small groups, genera and Hurwitz data.
CriterionResult criterion_1() {
    Check c;
    long comparisons = 0;
    for (const std::string gname : {"mu2", "mu3", "S3"}) {
        const FiniteGroup& G = FiniteGroup::builtin(gname);
        for (int g = 1; g <= 2; ++g)
            for (int n = 0; n <= 2; ++n) {
                std::vector<int> classes(n, 0);
                bool done = false;
                while (!done) {
                    CoverCountQuery q;
                    q.group = &G;
                    q.genus = g;
                    for (int k = 0; k < n; ++k) q.mark_types.push_back(ConjClassId{classes[k]});
                    Int brute = count_homs_brute(q).count;
                    Int frob = count_homs_frobenius(q).count;
                    ++comparisons;
                    if (brute != frob)
                        c.require(false, gname + " g=" + std::to_string(g) + " brute " +
                                             brute.get_str() + " != frobenius " + frob.get_str());
                    // Odometer over all class vectors.
                    int k = n - 1;
                    while (k >= 0 && ++classes[k] == G.class_count()) classes[k--] = 0;
                    done = k < 0;
                    if (n == 0) done = true;
                }
            }
    }
    c.log << comparisons << " exact equalities";
    return {1, "Hurwitz count oracle equality (brute = Frobenius)", c.ok, c.log.str(), 0};
}

// 2. Connected mu2-covers on genus i: 2^(2i) - 1, tied to the pencil
// number A_i^{T,N}.lambda = (2^(2i)-1)(i+1).
CriterionResult criterion_2() {
    Check c;
    const FiniteGroup& mu2 = FiniteGroup::builtin("mu2");
    for (int i = 1; i <= 3; ++i) {
        CoverCountQuery q;
        q.group = &mu2;
        q.genus = i;
        q.image_class = mu2.full_subgroup_class();
        CoverCountQuery qb = q;
        Int brute = count_homs_brute(qb).count;
        Int expected = int_pow(2, 2 * static_cast<unsigned long>(i)) - 1;
        c.require(brute == expected, "genus " + std::to_string(i) + " count " + brute.get_str());
        auto pencil = pencil_numbers(PencilKind::A_i_TN, i);
        c.require(pencil.numbers.at(BasisLabel::lambda()) == rat(expected * (i + 1), Int(1)),
                  "A_i_TN lambda number at i=" + std::to_string(i));
    }
    c.log << "2^(2i)-1 for i=1,2,3, matching the pencil lambda numbers";
    return {2, "mu2 connected-cover counts", c.ok, c.log.str(), 0};
}

// 3. The elliptic-tail suite around R^N_{1,S3} -> M_{1,1}.
CriterionResult criterion_3() {
    Check c;
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    auto classes = classes_with_image(s3, s3.subgroup_class_by_token("N"));
    c.require(classes.size() == 4, "expected 4 N-classes, got " + std::to_string(classes.size()));

    auto o6 = aut_orbits(s3, classes, AutAction{6});
    int fixed6 = 0;
    std::multiset<std::size_t> sizes6;
    for (const auto& o : o6.orbits) sizes6.insert(o.size());
    for (bool f : o6.fixed) fixed6 += f;
    c.require(fixed6 == 1 && sizes6 == std::multiset<std::size_t>{1, 3},
              "order-6 orbit type is not (fixed + 3-orbit)");

    auto o4 = aut_orbits(s3, classes, AutAction{4});
    std::multiset<std::size_t> sizes4;
    for (const auto& o : o4.orbits) sizes4.insert(o.size());
    c.require(sizes4 == std::multiset<std::size_t>{2, 2}, "order-4 orbit type is not (2,2)");

    auto rn = branch_data_RN();
    c.require(rn.degree == 4, "degree");
    c.require(rn.total_ramification() == 6, "total ramification");
    for (const auto& d : rn.data)
        c.require(d.fiber.size() == 2, "fiber cardinality over " + d.base_point);
    c.require(genus_by_riemann_hurwitz(rn.degree, 0, rn.data) == 0, "Riemann-Hurwitz genus");
    c.log << "4 classes, orbits (1+3)/(2+2), degree 4, ramification 6, genus 0";
    return {3, "elliptic-tail suite", c.ok, c.log.str(), 0};
}

// 4. Which cover classes are fixed by the order-6 tail automorphism.
CriterionResult criterion_4() {
    Check c;
    for (const std::string gname : {"mu2", "mu3", "mu4", "mu6"}) {
        const FiniteGroup& G = FiniteGroup::builtin(gname);
        for (int h = 0; h < G.subgroup_class_count(); ++h) {
            auto classes = classes_with_image(G, SubgroupClassId{h});
            auto orb = aut_orbits(G, classes, AutAction{6});
            for (std::size_t k = 0; k < classes.size(); ++k)
                if (orb.fixed[k])
                    c.require(classes[k].pair == std::make_pair(0, 0),
                              gname + ": non-trivial fixed class " + classes[k].label);
        }
    }
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    std::set<std::string> fixed_labels;
    for (int h = 0; h < s3.subgroup_class_count(); ++h) {
        auto classes = classes_with_image(s3, SubgroupClassId{h});
        auto orb = aut_orbits(s3, classes, AutAction{6});
        for (std::size_t k = 0; k < classes.size(); ++k)
            if (orb.fixed[k]) fixed_labels.insert(classes[k].label);
    }
    std::set<std::string> expected{"a->1; b->1", "a->(123); b->(132)"};
    c.require(fixed_labels == expected, "S3 fixed set is not {trivial, class (iii)}");
    c.log << "abelian tails only fix the trivial cover; S3 adds the N-class (iii)";
    return {4, "elliptic-tail lifting behavior", c.ok, c.log.str(), 0};
}

// 5. Canonical class and pullback patterns for 2 <= g <= 60.
CriterionResult criterion_5() {
    Check c;
    for (int g = 2; g <= 60; ++g) {
        DivisorClass k = canonical_class(g);  // throws on internal mismatch
        c.require(k.coeff(BasisLabel::lambda()) == 13, "lambda at g=" + std::to_string(g));
        c.require(k.coeff(BasisLabel::delta_prime(0)) == -2, "delta_0'");
        c.require(k.coeff(BasisLabel::delta_0_c2()) == -3, "delta_0_c2");
        c.require(k.coeff(BasisLabel::delta_0_c3()) == -4, "delta_0_c3");
        for (int i = 1; i <= g / 2; ++i) {
            c.require(k.coeff(BasisLabel::delta_prime(i)) == (i == 1 ? -3 : -2), "delta_i'");
            c.require(k.coeff(BasisLabel::delta_i_c3(i)) == (i == 1 ? -7 : -4), "delta_i_c3");
        }
        DivisorClass p0 = pullback_delta(0, g);
        c.require(p0.coeff(BasisLabel::delta_prime(0)) == 1 &&
                      p0.coeff(BasisLabel::delta_0_c2()) == 2 &&
                      p0.coeff(BasisLabel::delta_0_c3()) == 3,
                  "pullback pattern (1,2,3)");
        for (int i = 1; i <= g / 2; ++i) {
            DivisorClass pi = pullback_delta(i, g);
            c.require(pi.coeff(BasisLabel::delta_prime(i)) == 1 &&
                          pi.coeff(BasisLabel::delta_i_c3(i)) == 3,
                      "pullback pattern (1,3)");
        }
    }
    c.log << "Hurwitz route equals the closed form for 2 <= g <= 60";
    return {5, "divisor algebra: canonical class and pullbacks", c.ok, c.log.str(), 0};
}

// 6. GRR node coefficients for the 2-dimensional representation.
CriterionResult criterion_6() {
    Check c;
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    Representation R = representation_by_name(s3, "R");
    for (int b = 1; b <= 4; ++b) {
        DivisorClass got = ch1_pushforward(13, R, b);
        DivisorClass want = c1_E0b(6, b);
        c.require(got == want, "ch1 != c1(E_{0," + std::to_string(b) + "})");
        c.require(got.coeff(BasisLabel::delta_0_c2()) == rat(-1, 4), "delta_0^T coefficient");
        c.require(got.coeff(BasisLabel::delta_0_c3()) == rat(-2, 3), "delta_0^N coefficient");
        c.require(got.coeff(BasisLabel::lambda()) == 2, "lambda coefficient");
        c.require(got.coeff(BasisLabel::kappa1()) == 2 * rat(binomial(b, 2), Int(1)),
                  "kappa1 coefficient");
    }
    c.log << "ch1 reproduces 2 lambda + 2 C(b,2) kappa1 - 1/4 delta_0^T - 2/3 delta_0^N";
    return {6, "GRR node coefficients", c.ok, c.log.str(), 0};
}

// 7. The Koszul closed form, including the independently derived i = 2
// vector.
CriterionResult criterion_7() {
    Check c;
    for (int i = 2; i <= 30; ++i) {
        try {
            koszul_class(i);
        } catch (const GcError& e) {
            c.require(false, std::string("i=") + std::to_string(i) + ": " + e.what());
        }
    }
    KoszulClass k2 = koszul_class(2);
    DivisorClass per_unit = rat(k2.norm_factor, Int(1)) * k2.normalized;
    DivisorClass expect(5);
    expect.set(BasisLabel::lambda(), 28);
    expect.set(BasisLabel::delta_prime(0), -4);
    expect.set(BasisLabel::delta_0_c2(), rat(-13, 2));
    expect.set(BasisLabel::delta_0_c3(), -8);
    c.require(per_unit == expect, "i=2 telescoping vector");
    c.log << "telescoping sum equals the closed form for 2 <= i <= 30";
    return {7, "Koszul divisor closed form", c.ok, c.log.str(), 0};
}

// 8. Rank identities behind the virtual-divisor argument.
CriterionResult criterion_8() {
    Check c;
    for (long i = 1; i <= 30; ++i) {
        c.require(4 * i * binomial(2 * i + 1, i) == 4 * (2 * i + 1) * binomial(2 * i, i - 1),
                  "binomial identity at i=" + std::to_string(i));
        long g = 2 * i + 1;
        for (int b = 0; b <= 5; ++b)
            c.require(rank_E(static_cast<int>(i), 0, b + 1) == Int(2 * (2 * b + 1) * (g - 1)),
                      "rank E_{0,b+1} at i=" + std::to_string(i));
        c.require(rank_E(static_cast<int>(i), static_cast<int>(i) - 1, 2) ==
                      4 * i * binomial(2 * i + 1, i),
                  "rank E_{i-1,2} at i=" + std::to_string(i));
    }
    c.log << "4i C(2i+1,i) = 4(2i+1) C(2i,i-1) and rank formulas, i <= 30";
    return {8, "syzygy bundle rank identities", c.ok, c.log.str(), 0};
}

// 9. Effectivity bounds from the pencils.
CriterionResult criterion_9() {
    Check c;
    for (int i = 1; i <= 20; ++i) {
        Rat bp = min_b_prime(i, 13, 2, 3);
        c.require(bp >= 3, "min_b_prime(" + std::to_string(i) + ") = " + rat_to_string(bp));
        Rat bc = min_b_c3(i, 13);
        c.require(bc == rat(2 * i + 32), "min_b_c3 closed form at i=" + std::to_string(i));
        c.require(bc > 7, "min_b_c3 > 7");
    }
    c.log << "b_i' >= 3 and b_{i,c3} = 2i+32 > 7 for 1 <= i <= 20";
    return {9, "pencil effectivity bounds", c.ok, c.log.str(), 0};
}

// 10. The slope decomposition and the main verdict.
CriterionResult criterion_10() {
    Check c;
    for (int i = 2; i <= 50; ++i) {
        SlopeSolution s = solve_slope(i);
        c.require(s.s_max == std::min(rat(3 * i, 4 * i - 2), Rat(1)),
                  "s_max at i=" + std::to_string(i));
        c.require(s.gamma_max == rat(i - 5, 2 * (i + 1)), "gamma_max at i=" + std::to_string(i));
        c.require((s.gamma_max > 0) == (i > 5), "gamma positivity");
        c.require(rat(3 * i, 4 * i - 2) < rat(2 * i, 2 * i - 1),
                  "the delta_0^N constraint must bind");
        // Reassemble the decomposition and compare coefficientwise.
        DivisorClass lhs = s.s_max * koszul_class(i).normalized +
                           (Rat(1) - s.s_max) * pullback_brill_noether(i) + s.effective_E;
        lhs.add(BasisLabel::lambda(), s.gamma_max);
        DivisorClass target(2 * i + 1);
        target.set(BasisLabel::lambda(), rat(13, 2));
        target.set(BasisLabel::delta_prime(0), -1);
        target.set(BasisLabel::delta_0_c2(), rat(-3, 2));
        target.set(BasisLabel::delta_0_c3(), -2);
        c.require(lhs == target, "decomposition identity at i=" + std::to_string(i));
        c.require(s.effective_E.is_effective(), "effective residual at s_max");
    }
    c.require(verdict(13).verdict == "general_type", "verdict(13)");
    c.require(verdict(11).verdict == "inconclusive", "verdict(11)");
    c.require(verdict(12).verdict == "inconclusive", "verdict(12) parity gate");
    c.log << "s_max = 3i/(4i-2), gamma = (i-5)/(2(i+1)), identity for 2 <= i <= 50";
    return {10, "Kodaira slope verdict", c.ok, c.log.str(), 0};
}

// 11. The boundary catalog at genus 13.
CriterionResult criterion_11() {
    Check c;
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    const int g = 13;
    auto labels = catalog(g, s3);

    auto cls = [&](const std::string& t) { return s3.subgroup_class_by_token(t); };
    auto node = [&](const std::string& t) { return s3.class_by_token(t); };

    auto find = [&](BoundaryKind kind, int i, const std::string& h1, const std::string& h2,
                    const std::string& nd) -> const BoundaryLabel* {
        for (const auto& l : labels)
            if (l.kind == kind && l.i == i && l.h1 == cls(h1) && l.h2 == cls(h2) &&
                l.node_type == node(nd))
                return &l;
        return nullptr;
    };
    auto expect = [&](BoundaryKind kind, int i, const std::string& h1, const std::string& h2,
                      const std::string& nd, Verdict v) {
        const BoundaryLabel* l = find(kind, i, h1, h2, nd);
        std::string name = "Delta_{" + std::to_string(i) + (nd == "1" ? "" : "," + nd) + "}^{" +
                           h1 + "," + h2 + "}";
        if (!l) {
            c.require(false, name + " missing from the catalog");
            return;
        }
        c.require(l->verdict == v, name + " expected " + verdict_name(v) + ", got " +
                                       verdict_name(l->verdict));
        if (l->verdict == Verdict::nonempty)
            c.require(replay_witness(s3, g, *l), name + " witness replay");
    };

    // Type-0 labels: 8 nonempty with trivial node type
    // (every H2 <= H1 pair except (S3,1)), the 4 nonempty twisted ones,
    // and the two pinned empty ones.
    for (const char* pair : {"1,1", "T,1", "N,1", "T,T", "N,N", "S3,T", "S3,N", "S3,S3"}) {
        std::string p(pair);
        auto comma = p.find(',');
        expect(BoundaryKind::type_0, 0, p.substr(0, comma), p.substr(comma + 1), "1",
               Verdict::nonempty);
    }
    expect(BoundaryKind::type_0, 0, "S3", "1", "1", Verdict::empty);
    expect(BoundaryKind::type_0, 0, "T", "T", "c2", Verdict::nonempty);
    expect(BoundaryKind::type_0, 0, "S3", "S3", "c2", Verdict::nonempty);
    expect(BoundaryKind::type_0, 0, "N", "N", "c3", Verdict::nonempty);
    expect(BoundaryKind::type_0, 0, "S3", "S3", "c3", Verdict::nonempty);
    expect(BoundaryKind::type_0, 0, "S3", "T", "c2", Verdict::empty);
    expect(BoundaryKind::type_0, 0, "S3", "N", "c3", Verdict::empty);

    // Type-i labels for 1 <= i <= 6. With a trivial node type every
    // (H1,H2) pair is a structural candidate; an S3 side of genus 1 is
    // impossible (a commuting pair generates an abelian group).
    const char* names[4] = {"1", "T", "N", "S3"};
    for (int i = 1; i <= 6; ++i) {
        for (const char* a : names)
            for (const char* b : names) {
                bool possible = i >= 2 || std::string(a) != "S3";
                expect(BoundaryKind::type_i, i, a, b, "1",
                       possible ? Verdict::nonempty : Verdict::empty);
            }
        expect(BoundaryKind::type_i, i, "S3", "S3", "c3", Verdict::nonempty);
        // ... and it is the only label with non-trivial stabilizer.
        for (const auto& l : labels)
            if (l.kind == BoundaryKind::type_i && l.i == i && l.node_type.id != 0)
                c.require(l.h1 == cls("S3") && l.h2 == cls("S3") && l.node_type == node("c3"),
                          "unexpected twisted type-i label");
    }
    c.log << labels.size() << " labels decided with certified verdicts";
    return {11, "boundary catalog at g = 13", c.ok, c.log.str(), 0};
}

}  // namespace

std::vector<CriterionResult> run_all() {
    using Clock = std::chrono::steady_clock;
    std::vector<std::function<CriterionResult()>> criteria = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
        criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
    };
    // Runtime budgets in milliseconds, where a criterion carries one.
    std::vector<long> budget = {60000, 0, 1000, 0, 0, 0, 0, 0, 0, 1000, 300000};

    std::vector<CriterionResult> out;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto t0 = Clock::now();
        CriterionResult r;
        try {
            r = criteria[k]();
        } catch (const std::exception& e) {
            r.id = static_cast<int>(k + 1);
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        if (budget[k] > 0 && r.elapsed_ms > budget[k]) {
            r.pass = false;
            r.detail += " [exceeded " + std::to_string(budget[k]) + " ms budget]";
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool run_all(std::ostream& os) {
    bool all = true;
    for (const auto& r : run_all()) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.title << " ("
           << r.elapsed_ms << " ms) - " << r.detail << "\n";
        all = all && r.pass;
    }
    return all;
}

}  // namespace gcover::selftest
