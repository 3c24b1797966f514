#include "gcover/pencils.hpp"

#include "gcover/errors.hpp"
#include "gcover/group.hpp"
#include "gcover/monodromy.hpp"

#include <doctest.h>

using namespace gcover;

TEST_CASE("B_i numbers") {
    auto b2 = pencil_numbers(PencilKind::B_i, 2);
    CHECK(b2.numbers.at(BasisLabel::lambda()) == 3);
    CHECK(b2.numbers.at(BasisLabel::delta_base(0)) == 30);
    CHECK(b2.numbers.at(BasisLabel::delta_base(2)) == -1);
    CHECK_FALSE(b2.per_unit_degree);
    CHECK_FALSE(b2.k3_caveat);
    CHECK(pencil_numbers(PencilKind::B_i, 10).k3_caveat);
}

TEST_CASE("A_i^{T,N} numbers") {
    auto a1 = pencil_numbers(PencilKind::A_i_TN, 1);
    CHECK(a1.numbers.at(BasisLabel::lambda()) == 6);           // 3 * 2
    CHECK(a1.numbers.at(BasisLabel::delta_prime(0)) == 72);    // 3 * 24
    CHECK(a1.numbers.at(BasisLabel::delta_0_c2()) == 0);       // 2^(2i-1) - 2 = 0 at i=1
    CHECK(a1.numbers.at(BasisLabel::delta_0_c3()) == 0);
    CHECK(a1.numbers.at(BasisLabel::delta_prime(1)) == -3);
    CHECK(a1.numbers.at(BasisLabel::delta_i_c3(1)) == 0);

    // The delta_0 side numbers must sum to deg * (6i+18), which is the
    // pullback consistency A . pi^* delta_0.
    for (int i = 1; i <= 6; ++i) {
        auto a = pencil_numbers(PencilKind::A_i_TN, i);
        Rat deg = rat(int_pow(2, 2 * static_cast<unsigned long>(i)) - 1, Int(1));
        Rat side = a.numbers.at(BasisLabel::delta_prime(0)) +
                   2 * a.numbers.at(BasisLabel::delta_0_c2()) +
                   3 * a.numbers.at(BasisLabel::delta_0_c3());
        // delta_0' + delta_0_c2 + delta_0_c3 entries weighted (1,1,1):
        Rat plain = a.numbers.at(BasisLabel::delta_prime(0)) +
                    a.numbers.at(BasisLabel::delta_0_c2()) +
                    a.numbers.at(BasisLabel::delta_0_c3());
        CHECK(plain == deg * rat(6 * i + 18));
        CHECK(side >= plain);  // the (1,2,3) weighting only increases it
    }
}

TEST_CASE("A_i^{T,N} lambda number ties to the mu2 cover count") {
    const FiniteGroup& mu2 = FiniteGroup::builtin("mu2");
    for (int i = 1; i <= 3; ++i) {
        CoverCountQuery q;
        q.group = &mu2;
        q.genus = i;
        q.image_class = mu2.full_subgroup_class();
        Int covers = count_homs_brute(q).count;
        auto a = pencil_numbers(PencilKind::A_i_TN, i);
        CHECK(a.numbers.at(BasisLabel::lambda()) == rat(covers * (i + 1), Int(1)));
    }
}

TEST_CASE("A_{i,c3}^{S3,S3} numbers per unit degree") {
    auto a = pencil_numbers(PencilKind::A_i_c3, 3);
    CHECK(a.per_unit_degree);
    CHECK(a.numbers.at(BasisLabel::lambda()) == 4);
    CHECK(a.numbers.at(BasisLabel::delta_i_c3(3)) == -1);
    REQUIRE(a.delta0_total.has_value());
    CHECK(*a.delta0_total == 36);
    CHECK(a.numbers.count(BasisLabel::delta_prime(0)) == 0);  // split not pinned
}

TEST_CASE("min_b_prime") {
    // i=1: [(2+1)*2 + 0*3] * 24 / 3 - 2*13 = 48 - 26 = 22 >= 3.
    CHECK(min_b_prime(1, 13, 2, 3) == 22);
    // Dropping the lambda term restores the full 48.
    CHECK(min_b_prime(1, 0, 2, 3) == 48);
    // Monotone: increasing a decreases the bound.
    CHECK(min_b_prime(3, 13, 2, 3) < min_b_prime(3, 12, 2, 3));
    CHECK(min_b_prime(3, 0, 2, 3) == min_b_prime(3, 13, 2, 3) + rat(4 * 13));
    for (int i = 1; i <= 20; ++i) CHECK(min_b_prime(i, 13, 2, 3) >= 3);
}

TEST_CASE("min_b_c3") {
    CHECK(min_b_c3(1, 13) == 34);  // 60 - 26
    for (int i = 1; i <= 20; ++i) {
        CHECK(min_b_c3(i, 13) == rat(2 * i + 32));
        CHECK(min_b_c3(i, 13) > 7);
        CHECK(min_b_c3(i, 0) == rat(15 * i + 45));
    }
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS((void)pencil_numbers(PencilKind::B_i, 0), GcError);
    CHECK_THROWS_AS((void)min_b_prime(0, 13, 2, 3), GcError);
}
