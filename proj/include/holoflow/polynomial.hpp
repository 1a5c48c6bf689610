#pragma once

#include <string>
#include <utility>
#include <vector>

#include "holoflow/errors.hpp"
#include "holoflow/rational.hpp"

namespace holoflow {

// Univariate polynomial over Rational, coefficients stored by ascending degree.
// The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    // c * x^deg
    static Polynomial monomial(int deg, const Rational& c) {
        if (deg < 0) throw ParameterError("monomial degree must be >= 0");
        std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
        v.back() = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero

    Rational coeff(int j) const {
        if (j < 0 || static_cast<size_t>(j) >= c_.size()) return Rational(0);
        return c_[static_cast<size_t>(j)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational leading() const {
        if (is_zero()) throw ParameterError("leading coefficient of zero polynomial");
        return c_.back();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> d(c_.size() - 1);
        for (size_t j = 1; j < c_.size(); ++j) d[j - 1] = Rational(static_cast<long>(j)) * c_[j];
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t j = 0; j < a.c_.size(); ++j) v[j] += a.c_[j];
        for (size_t j = 0; j < b.c_.size(); ++j) v[j] += b.c_[j];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t j = 0; j < a.c_.size(); ++j) v[j] += a.c_[j];
        for (size_t j = 0; j < b.c_.size(); ++j) v[j] -= b.c_[j];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> v(p.c_.size());
        for (size_t j = 0; j < p.c_.size(); ++j) v[j] = s * p.c_[j];
        return Polynomial(std::move(v));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& den) const {
        if (den.is_zero()) throw ZeroDenominatorError("polynomial division by zero");
        Polynomial rem = *this;
        if (degree() < den.degree()) return {Polynomial(), rem};
        std::vector<Rational> q(static_cast<size_t>(degree() - den.degree()) + 1, Rational(0));
        Rational lead_inv = den.leading().inverse();
        while (!rem.is_zero() && rem.degree() >= den.degree()) {
            int shift = rem.degree() - den.degree();
            Rational f = rem.leading() * lead_inv;
            q[static_cast<size_t>(shift)] = f;
            rem = rem - (f * Polynomial::monomial(shift, Rational(1)) * den);
        }
        return {Polynomial(std::move(q)), rem};
    }

    Polynomial monic() const {
        if (is_zero()) throw ParameterError("monic form of zero polynomial");
        return leading().inverse() * *this;
    }

    // Monic gcd by the Euclidean scheme; gcd(0, 0) is taken as 0.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.monic();
    }

    // Number of distinct roots over the algebraic closure:
    // deg(p) - deg(gcd(p, p')).
    int squarefree_degree() const {
        if (is_zero()) throw std::domain_error("squarefree degree of zero polynomial");
        Polynomial g = gcd(*this, derivative());
        return degree() - g.degree();
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t j = c_.size(); j-- > 0;) {
            const Rational& c = c_[j];
            if (c.is_zero()) continue;
            if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
            else if (c.sign() < 0) out += "-";
            Rational a = c.abs();
            bool unit = (a == Rational(1));
            if (j == 0) out += a.pretty();
            else {
                if (!unit) out += a.pretty() + "*";
                out += var;
                if (j > 1) out += "^" + std::to_string(j);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline int poly_squarefree_degree(const Polynomial& p) { return p.squarefree_degree(); }

} // namespace holoflow
