#pragma once

#include "gcover/cyclotomic.hpp"
#include "gcover/group.hpp"
#include "gcover/rational.hpp"

#include <string>
#include <vector>

namespace gcover {

/// An irreducible (or any) complex representation known through its
/// character, one exact cyclotomic value per element conjugacy class.
struct Representation {
    const FiniteGroup* group = nullptr;
    int dim = 0;
    std::string name;
    std::vector<CyclotomicNumber> chi;  // indexed by ConjClassId

    const CyclotomicNumber& character(ConjClassId c) const { return chi[c.id]; }
    CyclotomicNumber character_of(int element) const { return chi[group->class_of(element).id]; }
};

/// Complete irreducible character table. Supported: cyclic groups of any
/// order (characters zeta_n^{jk} on the privileged generator) and the
/// S3-shaped group (order 6, non-abelian) with the table I, eps, R =
/// (2, 0, -1) on the classes (1, c2, c3). Anything else throws
/// GcError(UnsupportedGroup): character tables for arbitrary Cayley
/// tables are out of scope.
std::vector<Representation> irreducibles(const FiniteGroup& g);

Representation trivial_representation(const FiniteGroup& g);

/// Finds an irreducible by name ("R", "eps", "I", "chi1", ...).
Representation representation_by_name(const FiniteGroup& g, const std::string& name);

/// Eigenvalue multiplicities of rep(h) acting on the representation
/// space: w[k] = multiplicity of the eigenvalue zeta_r^k, r = order(h),
/// with the privileged root exp(2*pi*i/r).
struct EigenMultiplicities {
    int r = 1;
    std::vector<long> w;

    long total() const;
    /// True when every non-trivial eigenvalue is absent (identity action).
    bool trivial_action() const;
};

/// w[k] = (1/r) sum_j zeta_r^(-kj) chi(h^j); throws
/// GcError(NonIntegralMultiplicity) if a value fails to be a non-negative
/// integer, which would mean the character table is corrupt.
EigenMultiplicities eigen_multiplicities(const Representation& rep, int h);

/// age = sum_k k * w[k] / r.
Rat age(const EigenMultiplicities& m);

/// A quasireflection fixes a hyperplane: exactly one non-identity
/// eigenvalue, with multiplicity 1.
bool is_quasireflection(const EigenMultiplicities& m);

struct JuniorVerdict {
    bool junior = false;
    int witness_index = -1;  // index into the checked list
    Rat witness_age;         // meaningful when junior
};

/// junior iff some non-trivial entry has age < 1. The caller excludes
/// quasireflections; entries with trivial action are skipped here.
JuniorVerdict junior_check(const std::vector<EigenMultiplicities>& elements);

}  // namespace gcover
