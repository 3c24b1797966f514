#pragma once

#include "gcover/rational.hpp"

#include <vector>

namespace gcover {

/// Exact element of Q(zeta_n), stored on the power basis
/// {1, zeta, ..., zeta^(phi(n)-1)} after reduction modulo the n-th
/// cyclotomic polynomial. Reduction is canonical: two equal numbers have
/// equal conductor-n coefficient vectors, so operator== is coefficient
/// comparison after promoting to a common conductor.
///
/// The privileged root is exp(2*pi*i/n) throughout; conjugation is
/// zeta -> zeta^(n-1).
class CyclotomicNumber {
public:
    CyclotomicNumber() : n_(1), c_{Rat(0)} {}
    explicit CyclotomicNumber(const Rat& value) : n_(1), c_{value} {}

    static CyclotomicNumber zeta(int n, long k = 1);

    int conductor() const { return n_; }
    /// Coefficient of zeta^k in the reduced form (k < phi(n)).
    Rat coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }

    CyclotomicNumber promoted(int m) const;  // n_ must divide m

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const Rat& s);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rat& s) { return a *= s; }
    friend CyclotomicNumber operator*(const Rat& s, CyclotomicNumber a) { return a *= s; }

    /// Complex conjugation.
    CyclotomicNumber conjugated() const;

    bool is_zero() const;
    bool operator==(const CyclotomicNumber& o) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    bool is_rational() const;
    /// Throws GcError(NonIntegralMultiplicity-adjacent semantics are the
    /// caller's; this throws a plain GcError) when the number is not
    /// rational.
    Rat rational() const;

    std::string to_string() const;

    /// Coefficients of the n-th cyclotomic polynomial (monic, ascending).
    static const std::vector<Rat>& cyclotomic_polynomial(int n);

private:
    CyclotomicNumber(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) { reduce(); }
    void reduce();

    int n_;
    std::vector<Rat> c_;  // reduced: size <= phi(n_)
};

int euler_phi(int n);

}  // namespace gcover
