#include "gcover/cyclotomic.hpp"

#include "gcover/errors.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gcover {

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace {

// Exact polynomial division, quotient only; divisor must be monic and
// must divide exactly (both hold for cyclotomic factors of x^n - 1).
std::vector<Rat> poly_div_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<Rat> q(dn - dd + 1, Rat(0));
    for (int k = dn - dd; k >= 0; --k) {
        Rat c = num[k + dd];
        q[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    return q;
}

}  // namespace

const std::vector<Rat>& CyclotomicNumber::cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<Rat>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<Rat>&(int)> get = [&](int m) -> const std::vector<Rat>& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        // x^m - 1 divided by the product of Phi_d for proper divisors d.
        std::vector<Rat> num(m + 1, Rat(0));
        num[0] = -1;
        num[m] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = poly_div_exact(std::move(num), get(d));
        return cache.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

void CyclotomicNumber::reduce() {
    // First fold exponents mod n (the vector may arrive with degree < n
    // from convolution already folded, but be safe), then take the
    // remainder modulo Phi_n.
    if (static_cast<int>(c_.size()) > n_) {
        std::vector<Rat> folded(n_, Rat(0));
        for (int k = 0; k < static_cast<int>(c_.size()); ++k) folded[k % n_] += c_[k];
        c_ = std::move(folded);
    }
    const auto& phi = cyclotomic_polynomial(n_);
    const int dd = static_cast<int>(phi.size()) - 1;
    for (int k = static_cast<int>(c_.size()) - 1; k >= dd; --k) {
        Rat c = c_[k];
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) c_[k - dd + j] -= c * phi[j];
    }
    if (static_cast<int>(c_.size()) > dd) c_.resize(dd);
    if (c_.empty()) c_.push_back(Rat(0));
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
}

CyclotomicNumber CyclotomicNumber::zeta(int n, long k) {
    if (n <= 0) throw GcError(errc::index_out_of_range, "conductor must be positive");
    long e = k % n;
    if (e < 0) e += n;
    std::vector<Rat> c(n, Rat(0));
    c[static_cast<std::size_t>(e)] = 1;
    return CyclotomicNumber(n, std::move(c));
}

CyclotomicNumber CyclotomicNumber::promoted(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw GcError(errc::index_out_of_range, "conductor does not divide target");
    const int stride = m / n_;
    std::vector<Rat> c(m, Rat(0));
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) c[k * stride] = c_[k];
    return CyclotomicNumber(m, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    int m = std::lcm(n_, o.n_);
    CyclotomicNumber a = promoted(m), b = o.promoted(m);
    if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size(), Rat(0));
    for (int k = 0; k < static_cast<int>(b.c_.size()); ++k) a.c_[k] += b.c_[k];
    a.reduce();
    return *this = a;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    return *this += -o;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    int m = std::lcm(n_, o.n_);
    CyclotomicNumber a = promoted(m), b = o.promoted(m);
    std::vector<Rat> prod(m, Rat(0));
    for (int i = 0; i < static_cast<int>(a.c_.size()); ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < static_cast<int>(b.c_.size()); ++j) {
            if (b.c_[j] == 0) continue;
            prod[(i + j) % m] += a.c_[i] * b.c_[j];
        }
    }
    return *this = CyclotomicNumber(m, std::move(prod));
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rat& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

CyclotomicNumber CyclotomicNumber::conjugated() const {
    std::vector<Rat> c(n_, Rat(0));
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) c[(n_ - k) % n_] += c_[k];
    return CyclotomicNumber(n_, std::move(c));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    return (*this - o).is_zero();
}

bool CyclotomicNumber::is_rational() const {
    for (int k = 1; k < static_cast<int>(c_.size()); ++k)
        if (c_[k] != 0) return false;
    return true;
}

Rat CyclotomicNumber::rational() const {
    if (!is_rational())
        throw GcError(errc::non_integral_count, "cyclotomic number is not rational: " + to_string());
    return c_[0];
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << rat_to_string(c_[k]);
        if (k > 0) os << "*z" << n_ << "^" << k;
        first = false;
    }
    if (first) os << "0/1";
    return os.str();
}

}  // namespace gcover
