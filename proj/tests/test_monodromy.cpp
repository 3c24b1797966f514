#include "gcover/monodromy.hpp"

#include "gcover/errors.hpp"
#include "gcover/group.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gcover;

namespace {

CoverCountQuery query(const FiniteGroup& g, int genus, std::vector<std::string> marks = {},
                      const std::string& image = "", bool conj = false) {
    CoverCountQuery q;
    q.group = &g;
    q.genus = genus;
    for (const auto& m : marks) q.mark_types.push_back(g.class_by_token(m));
    if (!image.empty()) q.image_class = g.subgroup_class_by_token(image);
    q.up_to_conjugation = conj;
    return q;
}

}  // namespace

TEST_CASE("pinned counts") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    // Commuting pairs in S3.
    CHECK(count_homs_brute(query(s3, 1)).count == 18);
    CHECK(count_homs_frobenius(query(s3, 1)).count == 18);
    // Empty product relation at genus 0.
    for (const auto& name : FiniteGroup::builtin_names())
        CHECK(count_homs_brute(query(FiniteGroup::builtin(name), 0)).count == 1);
    // |Hom(Z^4, mu3)| = 81.
    CHECK(count_homs_frobenius(query(FiniteGroup::builtin("mu3"), 2)).count == 81);
    // g=2 S3: both paths agree (value computed by both, not assumed).
    Int v1 = count_homs_brute(query(s3, 2)).count;
    Int v2 = count_homs_frobenius(query(s3, 2)).count;
    CHECK(v1 == v2);
}

TEST_CASE("oracle equality exhaustively over built-ins, g <= 2, n <= 2") {
    for (const auto& name : FiniteGroup::builtin_names()) {
        const FiniteGroup& g = FiniteGroup::builtin(name);
        for (int genus = 0; genus <= 2; ++genus)
            for (int n = 0; n <= 2; ++n) {
                std::vector<int> cls(n, 0);
                while (true) {
                    CoverCountQuery q;
                    q.group = &g;
                    q.genus = genus;
                    for (int k = 0; k < n; ++k) q.mark_types.push_back(ConjClassId{cls[k]});
                    CHECK(count_homs_brute(q).count == count_homs_frobenius(q).count);
                    int k = n - 1;
                    while (k >= 0 && ++cls[k] == g.class_count()) cls[k--] = 0;
                    if (k < 0) break;
                }
            }
    }
}

TEST_CASE("mark-type inversion symmetry") {
    // Replacing every class by its inverse and reversing the order
    // leaves counts unchanged.
    for (const auto& name : {"mu3", "mu4", "S3"}) {
        const FiniteGroup& g = FiniteGroup::builtin(name);
        for (int c1 = 0; c1 < g.class_count(); ++c1)
            for (int c2 = 0; c2 < g.class_count(); ++c2) {
                CoverCountQuery q;
                q.group = &g;
                q.genus = 1;
                q.mark_types = {ConjClassId{c1}, ConjClassId{c2}};
                CoverCountQuery qi;
                qi.group = &g;
                qi.genus = 1;
                qi.mark_types = {g.inverse_class(ConjClassId{c2}),
                                 g.inverse_class(ConjClassId{c1})};
                CHECK(count_homs_frobenius(q).count == count_homs_frobenius(qi).count);
            }
    }
}

TEST_CASE("image-class counts") {
    const FiniteGroup& mu2 = FiniteGroup::builtin("mu2");
    for (int i = 1; i <= 3; ++i) {
        auto q = query(mu2, i, {}, "full");
        Int expected = int_pow(2, 2 * static_cast<unsigned long>(i)) - 1;
        CHECK(count_homs_brute(q).count == expected);
        CHECK(count_with_image_class(q).count == expected);
    }

    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    // Trivial image class: only the trivial map.
    CHECK(count_with_image_class(query(s3, 2, {}, "1")).count == 1);
    // The four N-cover classes over an elliptic curve, and the three
    // mu2-quotients of Z^2.
    CHECK(count_with_image_class(query(s3, 1, {}, "N", true)).count == 4);
    CHECK(count_with_image_class(query(s3, 1, {}, "T", true)).count == 3);
    // Brute force agrees, with and without conjugation.
    for (const char* image : {"1", "T", "N", "S3"})
        for (bool conj : {false, true}) {
            auto q = query(s3, 1, {}, image, conj);
            CHECK(count_homs_brute(q).count == count_with_image_class(q).count);
        }
}

TEST_CASE("connected-count consistency") {
    // Summing image-exact counts over all subgroup classes gives the
    // total Hom count.
    for (const auto& name : {"mu6", "S3"}) {
        const FiniteGroup& g = FiniteGroup::builtin(name);
        for (int genus = 1; genus <= 2; ++genus)
            for (int c = 0; c < g.class_count(); ++c) {
                CoverCountQuery base = query(g, genus);
                base.mark_types = {ConjClassId{c}};
                Int total = count_homs_frobenius(base).count;
                Int sum = 0;
                for (int h = 0; h < g.subgroup_class_count(); ++h) {
                    CoverCountQuery q = base;
                    q.image_class = SubgroupClassId{h};
                    if (*q.image_class == g.trivial_subgroup_class() && c != 0) continue;
                    sum += count_with_image_class(q).count;
                }
                CHECK(sum == total);
            }
    }
}

TEST_CASE("up-to-conjugation totals agree between paths") {
    for (const auto& name : {"mu3", "S3"}) {
        const FiniteGroup& g = FiniteGroup::builtin(name);
        for (int genus = 1; genus <= 2; ++genus) {
            auto q = query(g, genus, {}, "", true);
            CHECK(count_homs_brute(q).count == count_homs_frobenius(q).count);
        }
    }
    // With marks too.
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    auto q = query(s3, 1, {"c2", "c2"}, "", true);
    CHECK(count_homs_brute(q).count == count_homs_frobenius(q).count);
    auto q2 = query(s3, 2, {"c2", "c2"}, "S3", true);
    CHECK(count_homs_brute(q2).count == count_with_image_class(q2).count);
}

TEST_CASE("query validation") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    auto q = query(s3, 1, {"c2"}, "1");
    CHECK_THROWS_AS((void)count_with_image_class(q), GcError);
    auto qf = query(s3, 1, {}, "S3");
    CHECK_THROWS_AS((void)count_homs_frobenius(qf), GcError);
}

TEST_CASE("groups without character tables") {
    // Klein four-group: the Frobenius path refuses, the lattice path
    // falls back to enumeration inside subgroups, brute force agrees.
    std::vector<std::vector<int>> v4{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    FiniteGroup g = FiniteGroup::from_table(v4);
    CHECK_THROWS_AS((void)count_homs_frobenius(query(g, 2)), GcError);
    auto qi = query(g, 2, {}, "full");
    CHECK(count_with_image_class(qi).count == 210);
    CHECK(count_homs_brute(qi).count == 210);
    auto q1 = query(g, 1, {}, "full");
    CHECK(count_with_image_class(q1).count == 6);
}

TEST_CASE("search cutoff") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    Config tiny;
    tiny.brute_force_cutoff = 100;
    try {
        (void)count_homs_brute(query(s3, 2), tiny);
        CHECK(false);
    } catch (const GcError& e) {
        CHECK(e.code() == std::string(errc::search_too_large));
        CHECK(e.witness().contains("required"));
        CHECK(e.witness().at("required").get<std::string>() == "1296");
    }
}

TEST_CASE("threaded brute force is deterministic") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    Config one, four;
    one.threads = 1;
    four.threads = 4;
    auto q = query(s3, 2, {"c3", "c3"});
    CHECK(count_homs_brute(q, one).count == count_homs_brute(q, four).count);
}

TEST_CASE("gluing factors") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    auto triv = gluing_factors({&s3, s3.class_by_token("1")});
    CHECK(triv.factors.size() == 6);
    CHECK(triv.orbit_count == 3);  // conjugacy classes of S3 itself
    auto c2 = gluing_factors({&s3, s3.class_by_token("c2")});
    CHECK(c2.factors.size() == 2);
    auto c3 = gluing_factors({&s3, s3.class_by_token("c3")});
    CHECK(c3.factors.size() == 3);
}

TEST_CASE("witness search and replay") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    int full = s3.full_subgroup_id();
    // Image exactly S3 with one c3 mark at genus 5: found by searching a
    // smaller genus and padding, then replayed at genus 5.
    std::vector<std::vector<int>> marks{{4, 5}};
    auto w = find_hom_witness(s3, full, 5, marks);
    REQUIRE(w.has_value());
    CHECK(w->size() == 11);
    CHECK(verify_hom_tuple(s3, *w, 5, marks, full));
    // No commuting pair generates S3.
    CHECK_FALSE(find_hom_witness(s3, full, 1, {{0}}).has_value());
}
