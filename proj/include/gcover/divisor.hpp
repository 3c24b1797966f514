#pragma once

#include "gcover/rational.hpp"

#include <json.hpp>

#include <compare>
#include <map>
#include <string>

namespace gcover {

/// Basis label for Pic_Q classes. Downstairs classes of M_g-bar carry
/// kind delta_base; everything else lives upstairs on R_{g,S3}-bar.
/// Fine labels name a single boundary divisor Delta_{i,[h]}^{H1,H2};
/// they aggregate onto the coarse labels by the fixed surjection
///   delta_0'    = sum_{H2<=H1} delta_0^{H1,H2}
///   delta_0_c2  = delta_{0,c2}^{T,T} + delta_{0,c2}^{S3,S3}
///   delta_0_c3  = delta_{0,c3}^{N,N} + delta_{0,c3}^{S3,S3}
///   delta_i'    = sum over trivial-node-type pairs, and
///   delta_{i,c3}^{S3,S3} stays fine = coarse.
struct BasisLabel {
    enum class Kind {
        lambda,
        kappa1,
        delta_base,   // delta_i on M_g-bar
        delta_prime,  // delta_i' upstairs
        delta_0_c2,   // = delta_0^T
        delta_0_c3,   // = delta_0^N
        delta_i_c3,   // delta_{i,c3}^{S3,S3}
        fine,
    };

    Kind kind = Kind::lambda;
    int i = 0;  // meaningful for delta_base, delta_prime, delta_i_c3 and fine
    // Fine-only payload.
    std::string h1, h2, node;  // subgroup class names and node-type name ("1","c2","c3")

    static BasisLabel lambda() { return {Kind::lambda, 0, "", "", ""}; }
    static BasisLabel kappa1() { return {Kind::kappa1, 0, "", "", ""}; }
    static BasisLabel delta_base(int i) { return {Kind::delta_base, i, "", "", ""}; }
    static BasisLabel delta_prime(int i) { return {Kind::delta_prime, i, "", "", ""}; }
    static BasisLabel delta_0_c2() { return {Kind::delta_0_c2, 0, "", "", ""}; }
    static BasisLabel delta_0_c3() { return {Kind::delta_0_c3, 0, "", "", ""}; }
    static BasisLabel delta_i_c3(int i) { return {Kind::delta_i_c3, i, "", "", ""}; }
    static BasisLabel fine(int i, std::string h1, std::string h2, std::string node);

    std::string to_string() const;
    static BasisLabel from_string(const std::string& s);

    friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

/// Sparse exact-rational vector over the labeled basis. Absent labels
/// mean coefficient zero; classes carry their genus and mixing genera is
/// a hard error.
class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(int genus) : genus_(genus) {}

    int genus() const { return genus_; }
    Rat coeff(const BasisLabel& l) const;
    DivisorClass& set(const BasisLabel& l, const Rat& c);
    DivisorClass& add(const BasisLabel& l, const Rat& c);
    const std::map<BasisLabel, Rat>& coeffs() const { return coeffs_; }

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rat& s);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(DivisorClass a, const Rat& s) { return a *= s; }
    friend DivisorClass operator*(const Rat& s, DivisorClass a) { return a *= s; }

    bool operator==(const DivisorClass& o) const;
    bool is_zero() const;
    /// Coefficient-wise >= 0.
    bool is_effective() const;

    nlohmann::json to_json() const;
    static DivisorClass from_json(const nlohmann::json& j);

private:
    void prune();
    int genus_ = 0;
    std::map<BasisLabel, Rat> coeffs_;
};

/// pi^* delta_i: i >= 1 gives delta_i' + 3 delta_{i,c3}^{S3,S3};
/// i = 0 gives delta_0' + 2 delta_0_c2 + 3 delta_0_c3.
DivisorClass pullback_delta(int i, int g);

/// Pullback of a downstairs class: lambda and kappa1 pull back to the
/// same labels, delta_base(i) through pullback_delta.
DivisorClass pullback(const DivisorClass& downstairs);

/// R = delta_0_c2 + 2 delta_0_c3 + 2 sum_i delta_{i,c3}^{S3,S3}.
DivisorClass ramification_divisor(int g);

/// K on R_{g,S3}-bar, derived as pi^* K_{M_g-bar} + R and checked
/// against the closed form 13 lambda - (2 delta_0' + 3 delta_0_c2 +
/// 4 delta_0_c3) - (3 delta_1' + 7 delta_{1,c3}) - sum_{i>=2}
/// (2 delta_i' + 4 delta_{i,c3}). Throws GcError(InternalMismatch) if
/// the two derivations ever disagree.
DivisorClass canonical_class(int g);

/// kappa_1 -> 12 lambda - delta_0' - 2 delta_0_c2 - 3 delta_0_c3
/// (valid on the irreducible-curve locus, where the delta_i with i >= 1
/// restrict to zero). Idempotent on kappa1-free classes.
///
/// Caveat: this identifies kappa_1 on the cover moduli with the
/// pullback of kappa_1 downstairs. That identification is validated
/// here only through the closed-form reproduction of the Koszul class,
/// not derived independently.
DivisorClass kappa1_substitution(const DivisorClass& c);

/// Collapses fine labels onto the coarse basis by the fixed surjection.
DivisorClass aggregate_fine(const DivisorClass& c);

}  // namespace gcover
