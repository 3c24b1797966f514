#include "gcover/group.hpp"

#include "gcover/errors.hpp"

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace gcover;

TEST_CASE("trivial group") {
    FiniteGroup g = FiniteGroup::from_table({{0}});
    CHECK(g.order() == 1);
    CHECK(g.class_count() == 1);
    CHECK(g.subgroup_class_count() == 1);
    CHECK(g.subgroup_count() == 1);
}

TEST_CASE("S3 structure") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());

    // 3 element classes of sizes {1,2,3}.
    std::multiset<std::size_t> sizes;
    for (int c = 0; c < s3.class_count(); ++c)
        sizes.insert(s3.class_members(ConjClassId{c}).size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

    // 6 subgroups in 4 classes.
    CHECK(s3.subgroup_count() == 6);
    CHECK(s3.subgroup_class_count() == 4);

    // Element order convention: 1,(12),(13),(23),(123),(132).
    CHECK(s3.element_name(1) == "(12)");
    CHECK(s3.element_name(4) == "(123)");
    CHECK(s3.element_order(1) == 2);
    CHECK(s3.element_order(4) == 3);
    // (12)(23) = (123) under "apply right factor first".
    CHECK(s3.mul(1, 3) == 4);

    // Class names.
    CHECK(s3.class_name(s3.class_of(1)) == "c2");
    CHECK(s3.class_name(s3.class_of(4)) == "c3");
    CHECK(s3.class_by_token("c2") == s3.class_of(1));

    // Subgroup class names and the containment order.
    auto t = s3.subgroup_class_by_token("T");
    auto n = s3.subgroup_class_by_token("N");
    auto full = s3.subgroup_class_by_token("S3");
    auto triv = s3.subgroup_class_by_token("1");
    CHECK(s3.subgroup_class_leq(t, full));
    CHECK(s3.subgroup_class_leq(n, full));
    CHECK(s3.subgroup_class_leq(triv, t));
    CHECK_FALSE(s3.subgroup_class_leq(t, n));
    CHECK_FALSE(s3.subgroup_class_leq(full, t));
}

TEST_CASE("centralizers in S3") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    CHECK(s3.centralizer(0).size() == 6);
    // Brute-force oracle.
    for (int x = 0; x < 6; ++x) {
        std::vector<int> manual;
        for (int y = 0; y < 6; ++y)
            if (s3.mul(x, y) == s3.mul(y, x)) manual.push_back(y);
        CHECK(s3.centralizer(x) == manual);
    }
    CHECK(s3.centralizer(1) == std::vector<int>{0, 1});
    CHECK(s3.centralizer(4) == std::vector<int>{0, 4, 5});
}

TEST_CASE("orbit-stabilizer for all built-ins") {
    for (const auto& name : FiniteGroup::builtin_names()) {
        const FiniteGroup& g = FiniteGroup::builtin(name);
        for (int x = 0; x < g.order(); ++x) {
            auto cls = g.class_members(g.class_of(x));
            CHECK(static_cast<int>(cls.size() * g.centralizer(x).size()) == g.order());
        }
    }
}

TEST_CASE("inverse-symmetric classes") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    // All S3 classes are inversion-closed: 3 underline classes.
    CHECK(s3.inv_sym_class_count() == 3);
    for (int c = 0; c < s3.class_count(); ++c)
        CHECK(s3.inv_sym_class_of(ConjClassId{c}) ==
              s3.inv_sym_class_of(s3.inverse_class(ConjClassId{c})));

    // mu3: the two non-trivial classes pair up.
    const FiniteGroup& mu3 = FiniteGroup::builtin("mu3");
    CHECK(mu3.class_count() == 3);
    CHECK(mu3.inv_sym_class_count() == 2);

    for (const auto& name : FiniteGroup::builtin_names()) {
        const FiniteGroup& g = FiniteGroup::builtin(name);
        for (int s = 0; s < g.inv_sym_class_count(); ++s) {
            auto members = g.inv_sym_members(InvSymClassId{s});
            CHECK(members.size() >= 1);
            CHECK(members.size() <= 2);
        }
    }
}

TEST_CASE("mu4 subgroup classes") {
    const FiniteGroup& mu4 = FiniteGroup::builtin("mu4");
    CHECK(mu4.class_count() == 4);  // abelian: singletons
    CHECK(mu4.subgroup_class_count() == 3);
    CHECK(mu4.subgroup_class_name(SubgroupClassId{1}) == "mu2");
}

TEST_CASE("subgroup_class_of") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    CHECK(s3.subgroup_class_of({0}) == s3.subgroup_class_by_token("1"));
    CHECK(s3.subgroup_class_of({0, 1}) == s3.subgroup_class_by_token("T"));
    CHECK(s3.subgroup_class_of({1, 4}, /*generated=*/true) == s3.subgroup_class_by_token("S3"));
    CHECK_THROWS_AS((void)s3.subgroup_class_of({0, 1, 4}), GcError);  // not closed
}

TEST_CASE("commutator subgroups") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    // [S3,S3] = N.
    auto n = s3.commutator_subgroup({0, 1, 2, 3, 4, 5});
    CHECK(n == std::vector<int>{0, 4, 5});
    // Brute-force oracle over all 36 commutators.
    std::set<int> comms;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            comms.insert(s3.mul(s3.mul(s3.mul(a, b), s3.inv(a)), s3.inv(b)));
    for (int x : comms) CHECK(std::count(n.begin(), n.end(), x) == 1);
    // Abelian subgroups have trivial commutators.
    CHECK(s3.commutator_subgroup({0, 1}) == std::vector<int>{0});
    CHECK(s3.commutator_subgroup({0}) == std::vector<int>{0});
}

TEST_CASE("NotAGroup witnesses") {
    // Identity not at 0.
    CHECK_THROWS_WITH_AS((void)FiniteGroup::from_table({{1, 0}, {0, 1}}),
                         doctest::Contains("identity"), GcError);
    // Associativity failure with a witness triple: a quasigroup table.
    std::vector<std::vector<int>> t{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
    try {
        (void)FiniteGroup::from_table(t);
        CHECK(false);
    } catch (const GcError& e) {
        CHECK(e.code() == std::string(errc::not_a_group));
    }
}

TEST_CASE("Cayley-table file round trip") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    std::ostringstream os;
    os << s3.order() << "\n";
    for (int x = 0; x < 6; ++x) {
        for (int y = 0; y < 6; ++y) os << s3.mul(x, y) << " ";
        os << "\n";
    }
    for (int x = 0; x < 6; ++x) os << x << " " << s3.element_name(x) << "\n";
    std::istringstream is(os.str());
    FiniteGroup read = FiniteGroup::from_stream(is);
    CHECK(read.order() == 6);
    CHECK(read.element_name(4) == "(123)");
    CHECK(read.subgroup_class_count() == 4);
}
