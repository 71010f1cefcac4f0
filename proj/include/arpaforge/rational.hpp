#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace arpaforge {

/// Arbitrary-precision integer. Every count, multiplicity and matrix entry
/// in this library is one of these; there is no fixed-width fast path.
using BigInt = mpz_class;

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Exact rational number, always stored reduced with a positive denominator.
/// Equality is structural: two Rationals compare equal iff their reduced
/// numerator/denominator pairs coincide.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const;

    /// Renders as "num/den"; integers render without the "/den" part.
    std::string str() const;
    static Rational parse(const std::string& s);

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace arpaforge
