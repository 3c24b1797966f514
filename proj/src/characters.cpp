#include "gcover/characters.hpp"

#include "gcover/errors.hpp"

#include <algorithm>

namespace gcover {

Representation trivial_representation(const FiniteGroup& g) {
    Representation r;
    r.group = &g;
    r.dim = 1;
    r.name = "I";
    r.chi.assign(g.class_count(), CyclotomicNumber(Rat(1)));
    return r;
}

std::vector<Representation> irreducibles(const FiniteGroup& g) {
    const int n = g.order();

    if (int gen = g.cyclic_generator(); gen >= 0) {
        // Abelian with singleton classes: the class id of g^k is the
        // element index itself, so index characters through powers of the
        // generator.
        std::vector<Representation> reps;
        for (int j = 0; j < n; ++j) {
            Representation r;
            r.group = &g;
            r.dim = 1;
            r.name = n == 1 ? "I" : "chi" + std::to_string(j);
            r.chi.assign(n, CyclotomicNumber(Rat(0)));
            int x = 0;  // gen^k
            for (int k = 0; k < n; ++k) {
                r.chi[g.class_of(x).id] = CyclotomicNumber::zeta(n, static_cast<long>(j) * k);
                x = g.mul(x, gen);
            }
            reps.push_back(std::move(r));
        }
        return reps;
    }

    if (n == 6 && !g.is_abelian()) {
        // Classes keyed by element order: 1, the transpositions, the
        // 3-cycles.
        auto class_of_order = [&](int ord) {
            for (int c = 0; c < g.class_count(); ++c)
                if (g.element_order(g.class_rep(ConjClassId{c})) == ord) return c;
            throw GcError(errc::unsupported_group, "order-6 group without expected classes");
        };
        const int c1 = class_of_order(1), c2 = class_of_order(2), c3 = class_of_order(3);
        auto make = [&](const std::string& name, int dim, long v1, long v2, long v3) {
            Representation r;
            r.group = &g;
            r.dim = dim;
            r.name = name;
            r.chi.assign(3, CyclotomicNumber(Rat(0)));
            r.chi[c1] = CyclotomicNumber(Rat(v1));
            r.chi[c2] = CyclotomicNumber(Rat(v2));
            r.chi[c3] = CyclotomicNumber(Rat(v3));
            return r;
        };
        return {make("I", 1, 1, 1, 1), make("eps", 1, 1, -1, 1), make("R", 2, 2, 0, -1)};
    }

    throw GcError(errc::unsupported_group,
                  "character tables are shipped only for cyclic groups and S3");
}

Representation representation_by_name(const FiniteGroup& g, const std::string& name) {
    for (auto& r : irreducibles(g))
        if (r.name == name) return r;
    throw GcError(errc::usage, "no irreducible named '" + name + "' for group " + g.name());
}

long EigenMultiplicities::total() const {
    long t = 0;
    for (long x : w) t += x;
    return t;
}

bool EigenMultiplicities::trivial_action() const {
    for (int k = 1; k < static_cast<int>(w.size()); ++k)
        if (w[k] != 0) return false;
    return true;
}

EigenMultiplicities eigen_multiplicities(const Representation& rep, int h) {
    const FiniteGroup& g = *rep.group;
    const int r = g.element_order(h);
    EigenMultiplicities m;
    m.r = r;
    m.w.assign(r, 0);
    for (int k = 0; k < r; ++k) {
        CyclotomicNumber s;
        int hj = 0;  // h^j
        for (int j = 0; j < r; ++j) {
            s += CyclotomicNumber::zeta(r, static_cast<long>(-k) * j) * rep.character_of(hj);
            hj = g.mul(hj, h);
        }
        Rat val;
        if (!s.is_rational())
            throw GcError(errc::non_integral_multiplicity,
                          "eigenvalue multiplicity is not rational for " + rep.name);
        val = s.rational() / r;
        if (!is_integer(val) || val < 0)
            throw GcError(errc::non_integral_multiplicity,
                          "eigenvalue multiplicity " + rat_to_string(val) +
                              " is not a non-negative integer");
        m.w[k] = static_cast<long>(val.get_num().get_si());
    }
    return m;
}

Rat age(const EigenMultiplicities& m) {
    Rat a(0);
    for (int k = 0; k < static_cast<int>(m.w.size()); ++k) a += rat(static_cast<long>(k) * m.w[k], m.r);
    return a;
}

bool is_quasireflection(const EigenMultiplicities& m) {
    long nontrivial = 0;
    for (int k = 1; k < static_cast<int>(m.w.size()); ++k) nontrivial += m.w[k];
    return nontrivial == 1;
}

JuniorVerdict junior_check(const std::vector<EigenMultiplicities>& elements) {
    JuniorVerdict v;
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        if (elements[i].trivial_action()) continue;
        Rat a = age(elements[i]);
        if (a < 1) {
            v.junior = true;
            v.witness_index = i;
            v.witness_age = a;
            return v;
        }
    }
    return v;
}

}  // namespace gcover
