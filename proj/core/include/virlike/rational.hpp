#ifndef VIRLIKE_RATIONAL_HPP
#define VIRLIKE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace virlike {

/// Arbitrary-precision rational number in canonical form: denominator > 0,
/// gcd(numerator, denominator) = 1. All arithmetic is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses the canonical text form "p" or "p/q" (optional leading '-',
    /// no whitespace, denominator omitted when 1). Throws std::invalid_argument
    /// on malformed or non-canonical input such as "2/4" or "1/-2".
    static Rational from_string(const std::string& text);

    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational inverse() const;

    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

}  // namespace virlike

#endif
