#include "virlike/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace virlike {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

namespace {

bool valid_integer_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    if (i == s.size()) return false;
    if (s[i] == '0' && s.size() > i + 1) return false;  // no leading zeros
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    if (!valid_integer_token(num) || num == "-0")
        throw std::invalid_argument("malformed rational '" + text + "'");
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(mpz_class(num));
    } else {
        std::string den = text.substr(slash + 1);
        if (!valid_integer_token(den) || den.front() == '-')
            throw std::invalid_argument("malformed rational '" + text + "'");
        if (den == "0") throw std::invalid_argument("zero denominator in '" + text + "'");
        if (den == "1")
            throw std::invalid_argument("non-canonical rational '" + text + "' (denominator 1 must be omitted)");
        q = mpq_class(mpz_class(num), mpz_class(den));
        mpq_class canon = q;
        canon.canonicalize();
        if (cmp(canon, q) != 0 || canon.get_den() != mpz_class(den))
            throw std::invalid_argument("non-canonical rational '" + text + "'");
        q = canon;
    }
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
}

std::string Rational::str() const {
    return q_.get_str();
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-q_));
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) {
    return os << v.str();
}

}  // namespace virlike
