#include "gcover/kodaira.hpp"

#include "gcover/errors.hpp"
#include "gcover/grr.hpp"
#include "gcover/pencils.hpp"

#include <algorithm>

namespace gcover {

SlopeSolution solve_slope(int i) {
    if (i < 2) throw GcError(errc::index_out_of_range, "half-genus must be >= 2");
    const int g = 2 * i + 1;

    SlopeSolution sol;
    sol.i = i;
    // Effectivity of E against delta_0^T: s (6i+1)/(4i) + (1-s) 2 >= 3/2,
    // and against delta_0^N: s (5i+2)/(3i) + (1-s) 3 >= 2.
    sol.s_bound_c2 = rat(2 * i, 2 * i - 1);
    sol.s_bound_c3 = rat(3 * i, 4 * i - 2);
    sol.s_max = std::min({sol.s_bound_c2, sol.s_bound_c3, Rat(1)});
    // gamma(s) = (i-11)/(2(i+1)) + s (4i-2)/(i(i+1)).
    sol.gamma_max = rat(i - 11, 2 * (i + 1)) + sol.s_max * rat(4 * i - 2, i * (i + 1));

    DivisorClass target(g);
    target.set(BasisLabel::lambda(), rat(13, 2));
    target.set(BasisLabel::delta_prime(0), -1);
    target.set(BasisLabel::delta_0_c2(), rat(-3, 2));
    target.set(BasisLabel::delta_0_c3(), -2);

    DivisorClass koszul_norm = koszul_class(i).normalized;
    DivisorClass bn = pullback_brill_noether(i);

    DivisorClass residual = target - sol.s_max * koszul_norm - (Rat(1) - sol.s_max) * bn;
    residual.add(BasisLabel::lambda(), -sol.gamma_max);
    if (residual.coeff(BasisLabel::lambda()) != 0)
        throw GcError(errc::internal_mismatch, "lambda does not cancel in the slope residual");
    sol.effective_E = residual;
    sol.general_type = sol.gamma_max > 0 && residual.is_effective();
    return sol;
}

VerdictReport verdict(int g) {
    VerdictReport r;
    r.g = g;
    if (g < 0) throw GcError(errc::index_out_of_range, "genus must be non-negative");
    if (g % 2 == 0) {
        r.verdict = "inconclusive";
        r.reason = "even genus is outside the method's scope (it needs g = 2i+1)";
        return r;
    }
    const int i = (g - 1) / 2;
    if (i < 2) {
        r.verdict = "inconclusive";
        r.reason = "half-genus " + std::to_string(i) + " is below the Koszul range (i >= 2)";
        return r;
    }
    r.slope = solve_slope(i);
    for (int j = 1; j <= g / 2; ++j)
        r.pencil_bounds.emplace_back(min_b_prime(j, 13, 2, 3), min_b_c3(j, 13));
    r.assumptions = {
        "lambda is big on the moduli of connected S3-covers",
        "pluricanonical forms extend over the desingularization (elliptic-tail analysis)",
        "effectivity of the Koszul divisor (hyperelliptic point off U_g)",
        "A.(delta_0_c2 + delta_0_c3) >= A.delta_0' for the c3 pencils",
        "i = 10 caveat: the genus-10 pencils only fill the K3 locus Z; the decomposition "
        "must avoid Z'",
        "the slope target is the canonical class scaled by 1/2",
    };
    if (r.slope->general_type) {
        r.verdict = "general_type";
        r.reason = "gamma = " + rat_to_string(r.slope->gamma_max) +
                   " > 0 with an effective residual boundary class";
    } else {
        r.verdict = "inconclusive";
        r.reason = "maximal gamma = " + rat_to_string(r.slope->gamma_max) +
                   " is not positive (it is positive exactly for i > 5)";
    }
    return r;
}

}  // namespace gcover
