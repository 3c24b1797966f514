#include "gcover/rational.hpp"

#include <stdexcept>

namespace gcover {

Rat rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return 1;
    if (e > 0) {
        Rat r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw std::domain_error("0 raised to a negative power");
    return rat_pow(Rat(1) / base, -e);
}

bool is_integer(const Rat& q) {
    return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0;
}

std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace gcover
