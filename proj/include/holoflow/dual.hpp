#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "holoflow/errors.hpp"
#include "holoflow/rational.hpp"

namespace holoflow {

// Forward-mode dual number over Rational with a fixed number of independent
// variables per computation context. Arithmetic is exact; the partials obey
// the product and quotient rules with no truncation error.
class Dual {
public:
    Dual(Rational value, std::vector<Rational> partials)
        : v_(std::move(value)), d_(std::move(partials)) {}

    static Dual constant(const Rational& v, int nvars) {
        check_nvars(nvars);
        return Dual(v, std::vector<Rational>(static_cast<size_t>(nvars), Rational(0)));
    }

    // Seed lift: partial var_index = 1, all others 0.
    static Dual variable(const Rational& v, int var_index, int nvars) {
        check_nvars(nvars);
        if (var_index < 0 || var_index >= nvars)
            throw IndexError("dual seed index " + std::to_string(var_index) + " out of range [0," +
                             std::to_string(nvars) + ")");
        std::vector<Rational> d(static_cast<size_t>(nvars), Rational(0));
        d[static_cast<size_t>(var_index)] = Rational(1);
        return Dual(v, std::move(d));
    }

    const Rational& value() const { return v_; }
    const Rational& partial(int j) const { return d_.at(static_cast<size_t>(j)); }
    const std::vector<Rational>& partials() const { return d_; }
    int nvars() const { return static_cast<int>(d_.size()); }

    Dual operator-() const {
        std::vector<Rational> d(d_.size());
        for (size_t j = 0; j < d_.size(); ++j) d[j] = -d_[j];
        return Dual(-v_, std::move(d));
    }

    friend Dual operator+(const Dual& a, const Dual& b) {
        a.match(b);
        std::vector<Rational> d(a.d_.size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = a.d_[j] + b.d_[j];
        return Dual(a.v_ + b.v_, std::move(d));
    }

    friend Dual operator-(const Dual& a, const Dual& b) {
        a.match(b);
        std::vector<Rational> d(a.d_.size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = a.d_[j] - b.d_[j];
        return Dual(a.v_ - b.v_, std::move(d));
    }

    friend Dual operator*(const Dual& a, const Dual& b) {
        a.match(b);
        std::vector<Rational> d(a.d_.size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = a.v_ * b.d_[j] + b.v_ * a.d_[j];
        return Dual(a.v_ * b.v_, std::move(d));
    }

    // Quotient rule. The divisor must be a unit, i.e. have nonzero value part.
    friend Dual operator/(const Dual& a, const Dual& b) {
        a.match(b);
        if (b.v_.is_zero()) throw ZeroDenominatorError("division by non-unit dual (zero value part)");
        Rational q = a.v_ / b.v_;
        std::vector<Rational> d(a.d_.size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = (a.d_[j] - q * b.d_[j]) / b.v_;
        return Dual(q, std::move(d));
    }

    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    Dual& operator/=(const Dual& o) { return *this = *this / o; }

    friend bool operator==(const Dual& a, const Dual& b) { return a.v_ == b.v_ && a.d_ == b.d_; }
    friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }

private:
    static void check_nvars(int nvars) {
        if (nvars < 0) throw ParameterError("dual context needs nvars >= 0");
    }

    void match(const Dual& o) const {
        if (d_.size() != o.d_.size())
            throw ParameterError("dual values from different contexts combined (nvars " +
                                 std::to_string(d_.size()) + " vs " + std::to_string(o.d_.size()) + ")");
    }

    Rational v_;
    std::vector<Rational> d_;
};

inline Dual dual_lift_constant(const Rational& v, int nvars) { return Dual::constant(v, nvars); }
inline Dual dual_lift_variable(const Rational& v, int var_index, int nvars) {
    return Dual::variable(v, var_index, nvars);
}

} // namespace holoflow
