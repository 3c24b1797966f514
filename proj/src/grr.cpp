#include "gcover/grr.hpp"

#include "gcover/errors.hpp"

#include <mutex>
#include <vector>

namespace gcover {

Rat BernoulliPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) acc = acc * x + coeffs[k];
    return acc;
}

Rat bernoulli_number(int d) {
    static std::vector<Rat> cache{Rat(1)};
    static std::mutex mtx;
    if (d < 0) throw GcError(errc::index_out_of_range, "Bernoulli index must be >= 0");
    std::lock_guard<std::mutex> lock(mtx);
    // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j.
    for (int m = static_cast<int>(cache.size()); m <= d; ++m) {
        Rat s(0);
        for (int j = 0; j < m; ++j) s += rat(binomial(m + 1, j), Int(1)) * cache[j];
        cache.push_back(-s / rat(m + 1));
    }
    return cache[d];
}

BernoulliPoly bernoulli_poly(int d) {
    if (d < 0) throw GcError(errc::index_out_of_range, "Bernoulli degree must be >= 0");
    BernoulliPoly p;
    p.d = d;
    p.coeffs.assign(d + 1, Rat(0));
    // B_d(x) = sum_k C(d, k) B_k x^{d-k}.
    for (int k = 0; k <= d; ++k)
        p.coeffs[d - k] = rat(binomial(d, k), Int(1)) * bernoulli_number(k);
    return p;
}

DivisorClass ch1_pushforward(int g, const Representation& rep, int twist_b, bool fine_output,
                             int degree) {
    if (degree != 1)
        throw GcError(errc::unsupported_degree,
                      "only the degree-1 Chern character is implemented (psi classes of the "
                      "node stack enter for d >= 2)");
    const FiniteGroup& G = *rep.group;
    const bool s3_like = G.order() == 6 && !G.is_abelian();
    const bool trivial_grp = G.order() == 1;
    if (!s3_like && !trivial_grp && !fine_output)
        throw GcError(errc::usage,
                      "coarse assembly is defined on the S3 basis; request fine output for " +
                          G.name());

    const BernoulliPoly b2 = bernoulli_poly(2);
    const int w = rep.dim;
    DivisorClass raw(g);
    raw.add(BasisLabel::kappa1(), Rat(w) * b2.eval(rat(twist_b)) / 2);

    auto stratum_label = [&](ConjClassId c) -> BasisLabel {
        int ord = G.element_order(G.class_rep(c));
        if (fine_output)
            return BasisLabel::fine(0, "class", "class", G.class_name(c));
        if (ord == 1) return BasisLabel::delta_prime(0);
        if (s3_like && ord == 2) return BasisLabel::delta_0_c2();
        if (s3_like && ord == 3) return BasisLabel::delta_0_c3();
        throw GcError(errc::usage, "unexpected stratum order for coarse assembly");
    };

    for (int c = 0; c < G.class_count(); ++c) {
        ConjClassId cls{c};
        int h = G.class_rep(cls);
        int r = G.element_order(h);
        EigenMultiplicities m = eigen_multiplicities(rep, h);
        Rat s(0);
        for (int k = 0; k < r; ++k) s += Rat(m.w[k]) * b2.eval(rat(k, r)) / 2;
        // Pushforward of the stratum fundamental class: each of the m
        // branches contributes a 1/r gerbe factor; inversion-symmetric
        // classes carry both branches of their nodes.
        int branches = G.inverse_class(cls) == cls ? 2 : 1;
        Rat coeff = rat(1, 2) * rat(r) * rat(r) * s * rat(branches, r);
        raw.add(stratum_label(cls), coeff);
    }

    if (fine_output) return raw;

    // Split off the Hodge class: lambda is exactly this formula for the
    // untwisted rank-1 case.
    DivisorClass hodge(g);
    hodge.add(BasisLabel::kappa1(), rat(1, 12));
    hodge.add(BasisLabel::delta_prime(0), rat(1, 12));
    if (s3_like) {
        hodge.add(BasisLabel::delta_0_c2(), rat(2, 12));
        hodge.add(BasisLabel::delta_0_c3(), rat(3, 12));
    }
    DivisorClass out = raw - Rat(w) * hodge;
    out.add(BasisLabel::lambda(), w);
    return out;
}

DivisorClass c1_E0b(int i, int b) {
    if (b < 1) throw GcError(errc::index_out_of_range, "twist must be >= 1");
    DivisorClass d(2 * i + 1);
    d.set(BasisLabel::lambda(), 2);
    d.set(BasisLabel::kappa1(), 2 * rat(binomial(b, 2), Int(1)));
    d.set(BasisLabel::delta_0_c2(), rat(-1, 4));
    d.set(BasisLabel::delta_0_c3(), rat(-2, 3));
    return d;
}

Int rank_E(int i, int j, int b) {
    const long g = 2L * i + 1;
    return 2 * binomial(g - 2, j - 1) * (2 - 2 * g) +
           binomial(g - 1, j) * (2L * b * (2 * g - 2) + 2 * (1 - g));
}

SyzygyBundleSpec syzygy_bundle(int i, int j, int b) {
    if (i < 1 || b < 1 || j < 0 || j > 2 * i)
        throw GcError(errc::index_out_of_range, "syzygy bundle indices out of range");
    SyzygyBundleSpec s;
    s.i = i;
    s.j = j;
    s.b = b;
    s.rank = rank_E(i, j, b);
    if (s.rank <= 0)
        throw GcError(errc::internal_mismatch, "syzygy bundle has non-positive rank");
    if (j == 0) s.c1 = c1_E0b(i, b);
    return s;
}

KoszulClass koszul_class(int i) {
    if (i < 2) throw GcError(errc::index_out_of_range, "half-genus must be >= 2");
    const int g = 2 * i + 1;

    DivisorClass sum(g);
    for (int b = 0; b <= i; ++b) {
        DivisorClass term = rat(binomial(g, i - b), Int(1)) * c1_E0b(i, b + 1);
        term.add(BasisLabel::lambda(),
                 rat(rank_E(i, 0, b + 1) * binomial(g - 1, i - b - 1), Int(1)));
        sum += (b % 2 == 0 ? Rat(-1) : Rat(1)) * term;
    }
    sum = kappa1_substitution(sum);

    KoszulClass k;
    k.prefactor_rank = rank_E(i, i - 1, 2);
    k.norm_factor = 2 * binomial(2 * i - 2, i - 1);

    DivisorClass normalized(g);
    normalized.set(BasisLabel::lambda(), rat(2 * (3 * i + 1), i));
    normalized.set(BasisLabel::delta_prime(0), -1);
    normalized.set(BasisLabel::delta_0_c2(), -rat(6 * i + 1, 4 * i));
    normalized.set(BasisLabel::delta_0_c3(), -rat(5 * i + 2, 3 * i));
    k.normalized = normalized;

    DivisorClass closed = rat(k.norm_factor, Int(1)) * normalized;
    if (!(sum == closed))
        throw GcError(errc::closed_form_mismatch,
                      "telescoping sum disagrees with the closed form at i = " + std::to_string(i));
    k.cls = rat(k.prefactor_rank, Int(1)) * sum;
    return k;
}

DivisorClass pullback_brill_noether(int i) {
    if (i < 1) throw GcError(errc::index_out_of_range, "half-genus must be >= 1");
    DivisorClass d(2 * i + 1);
    d.set(BasisLabel::lambda(), rat(6 * (i + 2), i + 1));
    d.set(BasisLabel::delta_prime(0), -1);
    d.set(BasisLabel::delta_0_c2(), -2);
    d.set(BasisLabel::delta_0_c3(), -3);
    return d;
}

}  // namespace gcover
