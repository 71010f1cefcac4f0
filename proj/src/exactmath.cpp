#include "arpaforge/exactmath.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arpaforge {

BigInt binom(long n, long r) {
    if (n < 0) throw std::invalid_argument("binom: n must be non-negative");
    if (r < 0 || r > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be non-negative");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

namespace {

void require_set(const std::vector<long>& s, const char* name) {
    std::set<long> dedup(s.begin(), s.end());
    if (dedup.size() != s.size())
        throw std::invalid_argument(std::string("h_lagrange: ") + name + " has repeated elements");
}

}  // namespace

Rational h_lagrange(const std::vector<long>& A, const std::vector<long>& B) {
    require_set(A, "A");
    require_set(B, "B");
    if (A.size() >= B.size()) throw std::invalid_argument("h_lagrange: requires |A| < |B|");
    Rational total;
    for (long i : B) {
        BigInt numer = 1;
        for (long a : A) numer *= BigInt(i - a);
        BigInt denom = 1;
        for (long b : B)
            if (b != i) denom *= BigInt(i - b);
        total += Rational(numer, denom);
    }
    return total;
}

BigInt s_sum(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("s_sum: arguments must be natural");
    if (c > b) throw std::invalid_argument("s_sum: requires c <= b");
    BigInt total = 0;
    long rmax = std::min(a, c);
    for (long r = 0; r <= rmax; ++r) {
        BigInt term = binom(a, r) * binom(b - r, c - r);
        total += (r % 2 == 0) ? term : -term;
    }
    return total;
}

BigInt u_sum(long a, long b, long c, long d, long e) {
    if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0)
        throw std::invalid_argument("u_sum: arguments must be natural");
    if (c > b) throw std::invalid_argument("u_sum: requires c <= b");
    if (e > d) throw std::invalid_argument("u_sum: requires e <= d");
    BigInt total = 0;
    long rmax = std::min({a, c, e});
    for (long r = 0; r <= rmax; ++r) {
        BigInt term = binom(a, r) * binom(b - r, c - r) * binom(d - r, e - r);
        total += (r % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace arpaforge
