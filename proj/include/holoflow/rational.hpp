#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <string>

#include "holoflow/errors.hpp"

namespace holoflow {

// Arbitrary-precision rational, the base scalar of the whole library.
// Always kept in lowest terms with a positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {} // NOLINT(google-explicit-constructor)
    Rational(int n) : q_(n) {}                            // NOLINT(google-explicit-constructor)

    Rational(long num, long den) {
        if (den == 0) throw ZeroDenominatorError("rational with zero denominator");
        q_ = mpq_class(mpz_class(num), mpz_class(den));
        q_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw ZeroDenominatorError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "num/den" or a bare integer string.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
            return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw ParameterError("cannot parse rational: '" + s + "'");
        }
    }

    // Canonical wire format: "num/den", lowest terms, positive denominator.
    std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    // Human format: omits "/1".
    std::string pretty() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return str();
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(static_cast<mpq_class>(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDenominatorError("division by zero rational");
        q_ /= o.q_;
        return *this;
    }

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

    Rational inverse() const {
        if (is_zero()) throw ZeroDenominatorError("inverse of zero");
        return Rational(q_.get_den(), q_.get_num());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }

private:
    mpq_class q_;
};

inline Rational rat_make(long num, long den) { return Rational(num, den); }

} // namespace holoflow
