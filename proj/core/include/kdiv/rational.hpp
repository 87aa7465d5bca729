#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace kdiv::exact {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always held in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
///
/// Every operation is exact.  Division by zero throws std::domain_error
/// instead of invoking GMP's undefined behaviour.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: integers embed implicitly
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    /// Parses "p", "-p" or "p/q" (q != 0).  Throws std::invalid_argument
    /// on anything else; the result is canonicalized.
    static Rational from_string(std::string_view s);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }
    Rational abs() const;

    /// Canonical text form: "p/q", or just "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) { Rational r = a; r /= b; return r; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// 2^e as an arbitrary-precision integer.
Int pow2(unsigned long e);

}  // namespace kdiv::exact
