#include "gcover/grr.hpp"

#include "gcover/characters.hpp"
#include "gcover/errors.hpp"
#include "gcover/group.hpp"

#include <doctest.h>

using namespace gcover;

TEST_CASE("Bernoulli polynomials") {
    CHECK(bernoulli_poly(0).coeffs == std::vector<Rat>{Rat(1)});
    CHECK(bernoulli_poly(1).coeffs == std::vector<Rat>{rat(-1, 2), Rat(1)});
    CHECK(bernoulli_poly(2).coeffs == std::vector<Rat>{rat(1, 6), Rat(-1), Rat(1)});
    CHECK(bernoulli_poly(2).eval(rat(1, 2)) == rat(-1, 12));
    CHECK(bernoulli_number(2) == rat(1, 6));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(12) == rat(-691, 2730));
}

TEST_CASE("generating function oracle") {
    // sum_d B_d(x) t^d / d! = t e^{xt} / (e^t - 1), i.e.
    // (e^t - 1) sum_d B_d(x) t^d/d! = t e^{xt}, compared termwise to
    // order N as polynomial identities in x with exact coefficients.
    const int N = 8;
    // lhs_m(x) = sum_{d+k=m, k>=1} B_d(x) / (d! k!) for the coefficient
    // of t^m; rhs: x^{m-1} / (m-1)!.
    auto factorial = [](int n) {
        Int f = 1;
        for (int k = 2; k <= n; ++k) f *= k;
        return f;
    };
    for (int m = 1; m <= N; ++m) {
        std::vector<Rat> lhs(m, Rat(0));  // coefficients in x, degree < m
        for (int d = 0; d < m; ++d) {
            int k = m - d;  // k >= 1
            auto bp = bernoulli_poly(d);
            Rat scale = rat(Int(1), factorial(d) * factorial(k));
            for (int j = 0; j <= d; ++j) lhs[j] += bp.coeffs[j] * scale;
        }
        // rhs coefficient of t^m is x^{m-1}/(m-1)!.
        std::vector<Rat> rhs(m, Rat(0));
        rhs[m - 1] = rat(Int(1), factorial(m - 1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Raabe multiplication identity") {
    // sum_{k=0}^{r-1} B_2(k/r) = B_2 / r for r = 2, 3.
    auto b2 = bernoulli_poly(2);
    for (int r : {2, 3}) {
        Rat s(0);
        for (int k = 0; k < r; ++k) s += b2.eval(rat(k, r));
        CHECK(s == bernoulli_number(2) / r);
    }
    // B_2 symmetric under x -> 1 - x.
    for (int num = 0; num <= 6; ++num) {
        Rat x = rat(num, 7);
        CHECK(b2.eval(x) == b2.eval(Rat(1) - x));
    }
}

TEST_CASE("ch1 of the Hodge case is lambda") {
    // Trivial representation, b = 1: u_* omega, whose first Chern class
    // is the Hodge class itself in the assembled basis.
    for (const auto& name : {"trivial", "S3"}) {
        const FiniteGroup& g = FiniteGroup::builtin(name);
        DivisorClass got = ch1_pushforward(13, trivial_representation(g), 1);
        DivisorClass lambda(13);
        lambda.set(BasisLabel::lambda(), 1);
        CHECK(got == lambda);
    }
    // Raw kappa_1 part for the trivial group: B_2/2 = 1/12, and the only
    // node stratum is the untwisted one.
    DivisorClass fine =
        ch1_pushforward(13, trivial_representation(FiniteGroup::builtin("trivial")), 1, true);
    CHECK(fine.coeff(BasisLabel::kappa1()) == rat(1, 12));
}

TEST_CASE("ch1 for the S3 representations") {
    const FiniteGroup& s3 = FiniteGroup::builtin("S3");
    Representation R = representation_by_name(s3, "R");

    for (int b = 1; b <= 3; ++b) CHECK(ch1_pushforward(13, R, b) == c1_E0b(6, b));

    // The parity representation only feels the order-2 strata: its
    // deviation from lambda is supported on delta_0_c2.
    Representation eps = representation_by_name(s3, "eps");
    DivisorClass dev = ch1_pushforward(13, eps, 1);
    dev.add(BasisLabel::lambda(), -1);
    for (const auto& [label, coeff] : dev.coeffs())
        CHECK(label == BasisLabel::delta_0_c2());
    CHECK(dev.coeff(BasisLabel::delta_0_c2()) == rat(-1, 4));

    // Degree >= 2 is out of scope by contract.
    CHECK_THROWS_AS((void)ch1_pushforward(13, R, 1, false, 2), GcError);
    // Non-S3 groups need the fine flag.
    const FiniteGroup& mu3 = FiniteGroup::builtin("mu3");
    auto reps = irreducibles(mu3);
    CHECK_THROWS_AS((void)ch1_pushforward(13, reps[1], 1), GcError);
    CHECK_NOTHROW((void)ch1_pushforward(13, reps[1], 1, true));
}

TEST_CASE("c1(E_{0,b}) pinned values") {
    DivisorClass b1 = c1_E0b(6, 1);
    CHECK(b1.coeff(BasisLabel::lambda()) == 2);
    CHECK(b1.coeff(BasisLabel::kappa1()) == 0);
    CHECK(b1.coeff(BasisLabel::delta_0_c2()) == rat(-1, 4));
    CHECK(b1.coeff(BasisLabel::delta_0_c3()) == rat(-2, 3));
    CHECK(c1_E0b(6, 2).coeff(BasisLabel::kappa1()) == 2);
    CHECK(c1_E0b(6, 3).coeff(BasisLabel::kappa1()) == 6);
}

TEST_CASE("ranks") {
    for (int i = 1; i <= 30; ++i) {
        long g = 2L * i + 1;
        for (int b = 0; b <= 5; ++b)
            CHECK(rank_E(i, 0, b + 1) == Int(2 * (2 * b + 1) * (g - 1)));
        CHECK(rank_E(i, i - 1, 2) == 4 * i * binomial(g, i));
    }
    // g=3: h^0(omega tensor R) = 2g - 2 = 4.
    CHECK(rank_E(1, 0, 1) == 4);
}

TEST_CASE("Koszul class") {
    // The closed-form assertion runs inside; reaching the return value
    // means the telescoping matched for each i.
    for (int i = 2; i <= 30; ++i) (void)koszul_class(i);

    KoszulClass k2 = koszul_class(2);
    CHECK(k2.prefactor_rank == rank_E(2, 1, 2));
    CHECK(k2.norm_factor == 4);  // 2 C(2,1)
    DivisorClass per_unit = rat(k2.norm_factor, Int(1)) * k2.normalized;
    CHECK(per_unit.coeff(BasisLabel::lambda()) == 28);
    CHECK(per_unit.coeff(BasisLabel::delta_prime(0)) == -4);
    CHECK(per_unit.coeff(BasisLabel::delta_0_c2()) == rat(-13, 2));
    CHECK(per_unit.coeff(BasisLabel::delta_0_c3()) == -8);
    CHECK(k2.cls == rat(k2.prefactor_rank, Int(1)) * per_unit);

    // Normalized coefficients straight from the closed form.
    KoszulClass k6 = koszul_class(6);
    CHECK(k6.normalized.coeff(BasisLabel::lambda()) == rat(2 * 19, 6));
    CHECK(k6.normalized.coeff(BasisLabel::delta_prime(0)) == -1);
    CHECK(k6.normalized.coeff(BasisLabel::delta_0_c2()) == rat(-37, 24));
    CHECK(k6.normalized.coeff(BasisLabel::delta_0_c3()) == rat(-32, 18));
}

TEST_CASE("syzygy bundle spec") {
    auto e01 = syzygy_bundle(6, 0, 1);
    CHECK(e01.rank == rank_E(6, 0, 1));
    REQUIRE(e01.c1.has_value());
    CHECK(*e01.c1 == c1_E0b(6, 1));
    auto e52 = syzygy_bundle(6, 5, 2);
    CHECK(e52.rank == rank_E(6, 5, 2));
    CHECK_FALSE(e52.c1.has_value());
    CHECK(e52.rank > 0);
    CHECK_THROWS_AS((void)syzygy_bundle(6, 0, 0), GcError);
}

TEST_CASE("Brill-Noether pullback") {
    DivisorClass m6 = pullback_brill_noether(6);
    CHECK(m6.coeff(BasisLabel::lambda()) == rat(48, 7));
    CHECK(m6.coeff(BasisLabel::delta_prime(0)) == -1);
    CHECK(m6.coeff(BasisLabel::delta_0_c2()) == -2);
    CHECK(m6.coeff(BasisLabel::delta_0_c3()) == -3);
    // The boundary pattern (1,2,3) matches pi^* delta_0.
    for (int i = 1; i <= 10; ++i) {
        DivisorClass m = pullback_brill_noether(i);
        CHECK(m.coeff(BasisLabel::delta_prime(0)) * 2 == m.coeff(BasisLabel::delta_0_c2()));
        CHECK(m.coeff(BasisLabel::delta_prime(0)) * 3 == m.coeff(BasisLabel::delta_0_c3()));
    }
}
