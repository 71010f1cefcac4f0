#include "arpaforge/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace arpaforge {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace arpaforge
