#pragma once

#include <gmpxx.h>

#include <string>

namespace gcover {

// Exact arithmetic backbone. All counts are mpz_class, all class
// coefficients mpq_class; no floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(a, b) does not reduce on its own; these do.
Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

// Binomial coefficient, 0 outside the Pascal triangle.
Int binomial(long n, long k);

Int int_pow(const Int& base, unsigned long e);

// Integer exponents of either sign; base must be nonzero for e < 0.
Rat rat_pow(const Rat& base, long e);

bool is_integer(const Rat& q);

// Canonical "p/q" form, denominator always printed ("13/1", "-2/3").
std::string rat_to_string(const Rat& q);

// Accepts "p/q" or a bare integer "p".
Rat rat_from_string(const std::string& s);

}  // namespace gcover
