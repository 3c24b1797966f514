#pragma once

#include "gcover/characters.hpp"
#include "gcover/divisor.hpp"
#include "gcover/rational.hpp"

#include <optional>
#include <vector>

namespace gcover {

/// Bernoulli polynomial B_d(x), exact coefficients ascending in x.
/// Convention: B_1(x) = x - 1/2 (the generating function t e^{xt}/(e^t-1)).
struct BernoulliPoly {
    int d = 0;
    std::vector<Rat> coeffs;

    Rat eval(const Rat& x) const;
    /// B_d = B_d(0).
    Rat constant() const { return coeffs.empty() ? Rat(0) : coeffs.front(); }
};

BernoulliPoly bernoulli_poly(int d);
Rat bernoulli_number(int d);

/// Degree-1 Chern character of R u_* (omega^b tensor W_C) over the
/// irreducible-curve locus, from the Grothendieck-Riemann-Roch node
/// formula: the smooth term w B_2(b)/2 kappa_1 plus, for every type-0
/// node stratum with local index class [h] of order r, the pushforward
/// (1/2) r^2 [sum_k w(k) B_2(k/r)/2] of the stratum class. The result is
/// assembled on {lambda, kappa1, delta_0', delta_0_c2, delta_0_c3}: the
/// Hodge expansion of lambda is split off so the untwisted rank-1 case
/// returns lambda on the nose. Only degree 1 is implemented; the psi,
/// psi' classes of higher degrees are out of scope and rejected.
///
/// For groups other than S3 (and the trivial group) per-stratum fine
/// output must be requested explicitly.
DivisorClass ch1_pushforward(int g, const Representation& rep, int twist_b = 1,
                             bool fine_output = false, int degree = 1);

/// Pinned first Chern class of E_{0,b} = u_*(omega^b tensor R_C):
/// 2 lambda + 2 C(b,2) kappa_1 - (1/4) delta_0^T - (2/3) delta_0^N at
/// genus 2i+1, kappa_1 kept symbolic.
DivisorClass c1_E0b(int i, int b);

/// chi(wedge^j M_omega tensor omega^b tensor R) under vanishing h^1:
/// 2 C(g-2, j-1)(2-2g) + C(g-1, j)[2b(2g-2) + 2(1-g)], g = 2i+1.
Int rank_E(int i, int j, int b);

/// One syzygy bundle E_{j,b} at half-genus i (g = 2i+1): its exact rank
/// (computed under vanishing h^1) and, for j = 0, its first Chern class
/// with kappa_1 kept symbolic. Higher exterior powers only enter through
/// their ranks and the exact sequences behind koszul_class, so c1 is
/// populated for j = 0 alone.
struct SyzygyBundleSpec {
    int j = 0;
    int b = 1;
    int i = 2;
    Int rank;
    std::optional<DivisorClass> c1;
};

SyzygyBundleSpec syzygy_bundle(int i, int j, int b);

struct KoszulClass {
    Int prefactor_rank;   // rk E_{i-1,2}
    Int norm_factor;      // 2 C(2i-2, i-1)
    DivisorClass cls;     // full class, prefactor included
    DivisorClass normalized;  // per unit prefactor_rank * norm_factor
};

/// The Koszul divisor class [U_g-bar] for g = 2i+1: the telescoping sum
/// rk(E_{i-1,2}) sum_b (-1)^(b+1) [C(g,i-b) c1(E_{0,b+1}) +
/// rk(E_{0,b+1}) C(g-1,i-b-1) lambda], with kappa_1 eliminated, checked
/// exactly against the closed form
/// rk 2 C(2i-2,i-1) [2(3i+1)/i lambda - delta_0' - (6i+1)/(4i) delta_0^T
/// - (5i+2)/(3i) delta_0^N]. Throws GcError(ClosedFormMismatch) if the
/// two expressions ever disagree.
KoszulClass koszul_class(int i);

/// Pullback of the Brill-Noether divisor M^i_{g,i+1}, normalized to unit
/// scalar: 6(i+2)/(i+1) lambda - delta_0' - 2 delta_0^T - 3 delta_0^N.
DivisorClass pullback_brill_noether(int i);

}  // namespace gcover
