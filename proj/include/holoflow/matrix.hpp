#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "holoflow/dual.hpp"
#include "holoflow/errors.hpp"
#include "holoflow/polynomial.hpp"
#include "holoflow/rational.hpp"

namespace holoflow {

// Scalar requirements for exact matrix algebra. A scalar is a unit iff it can
// be divided by; for duals that is "value part nonzero", which is weaker than
// "nonzero", so elimination cannot decide singularity for them (see det()).
template <typename T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static Rational from_int(long n, const Rational&) { return Rational(n); }
    static bool is_unit(const Rational& x) { return !x.is_zero(); }
    static constexpr bool unit_iff_nonzero = true;
};

template <>
struct FieldTraits<Dual> {
    static Dual zero_like(const Dual& proto) { return Dual::constant(Rational(0), proto.nvars()); }
    static Dual one_like(const Dual& proto) { return Dual::constant(Rational(1), proto.nvars()); }
    static Dual from_int(long n, const Dual& proto) { return Dual::constant(Rational(n), proto.nvars()); }
    static bool is_unit(const Dual& x) { return !x.value().is_zero(); }
    static constexpr bool unit_iff_nonzero = false;
};

// Dense square matrix over an exact scalar (Rational or Dual).
template <typename T>
class Matrix {
public:
    Matrix(int t, const T& fill) : t_(check_size(t)), e_(static_cast<size_t>(t) * t, fill) {}

    static Matrix identity_like(int t, const T& proto) {
        Matrix m(t, FieldTraits<T>::zero_like(proto));
        for (int i = 0; i < t; ++i) m(i, i) = FieldTraits<T>::one_like(proto);
        return m;
    }

    int size() const { return t_; }

    T& operator()(int i, int j) { return e_[idx(i, j)]; }
    const T& operator()(int i, int j) const { return e_[idx(i, j)]; }

    const T& proto() const { return e_.front(); }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.t_ == b.t_ && a.e_ == b.e_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.match(b);
        Matrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.match(b);
        Matrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.match(b);
        const int t = a.t_;
        Matrix r(t, FieldTraits<T>::zero_like(a.proto()));
        for (int i = 0; i < t; ++i) {
            for (int k = 0; k < t; ++k) {
                const T& aik = a(i, k);
                for (int j = 0; j < t; ++j) r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }

    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r = m;
        for (auto& e : r.e_) e = s * e;
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& e : r.e_) e = -e;
        return r;
    }

    T trace() const {
        T acc = FieldTraits<T>::zero_like(proto());
        for (int i = 0; i < t_; ++i) acc += (*this)(i, i);
        return acc;
    }

    Matrix pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Matrix r = identity_like(t_, proto());
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    Matrix transpose() const {
        Matrix r = *this;
        for (int i = 0; i < t_; ++i)
            for (int j = 0; j < t_; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    bool is_diagonal() const {
        const T zero = FieldTraits<T>::zero_like(proto());
        for (int i = 0; i < t_; ++i)
            for (int j = 0; j < t_; ++j)
                if (i != j && !((*this)(i, j) == zero)) return false;
        return true;
    }

    // Gauss-Jordan with unit pivoting. Exact; throws SingularMatrixError when
    // no unit pivot exists in some column.
    Matrix inverse() const {
        Matrix a = *this;
        Matrix inv = identity_like(t_, proto());
        for (int c = 0; c < t_; ++c) {
            int piv = -1;
            for (int i = c; i < t_; ++i)
                if (FieldTraits<T>::is_unit(a(i, c))) { piv = i; break; }
            if (piv < 0) throw SingularMatrixError("matrix is singular (column " + std::to_string(c) + ")");
            a.swap_rows(c, piv);
            inv.swap_rows(c, piv);
            T p = a(c, c);
            for (int j = 0; j < t_; ++j) {
                a(c, j) /= p;
                inv(c, j) /= p;
            }
            for (int i = 0; i < t_; ++i) {
                if (i == c) continue;
                T f = a(i, c);
                if (f == FieldTraits<T>::zero_like(proto())) continue;
                for (int j = 0; j < t_; ++j) {
                    a(i, j) -= f * a(c, j);
                    inv(i, j) -= f * inv(c, j);
                }
            }
        }
        return inv;
    }

    // Exact determinant. Over Rational, elimination decides everything. Over a
    // scalar whose non-units are not all zero (Dual), a pivot breakdown does
    // not mean det = 0, so we fall back to the division-free route via the
    // characteristic polynomial (integer divisions only).
    T det() const {
        Matrix a = *this;
        T d = FieldTraits<T>::one_like(proto());
        const T zero = FieldTraits<T>::zero_like(proto());
        for (int c = 0; c < t_; ++c) {
            int piv = -1;
            for (int i = c; i < t_; ++i)
                if (FieldTraits<T>::is_unit(a(i, c))) { piv = i; break; }
            if (piv < 0) {
                if constexpr (FieldTraits<T>::unit_iff_nonzero) {
                    bool all_zero = true;
                    for (int i = c; i < t_; ++i) all_zero = all_zero && a(i, c) == zero;
                    if (all_zero) return zero;
                }
                return det_leverrier();
            }
            if (piv != c) {
                a.swap_rows(c, piv);
                d = -d;
            }
            d *= a(c, c);
            T pinv = FieldTraits<T>::one_like(proto()) / a(c, c);
            for (int i = c + 1; i < t_; ++i) {
                T f = a(i, c) * pinv;
                if (f == zero) continue;
                for (int j = c; j < t_; ++j) a(i, j) -= f * a(c, j);
            }
        }
        return d;
    }

    // Coefficients of det(xI - M), ascending degree, leading coefficient 1.
    // Faddeev-LeVerrier: valid over any commutative Q-algebra.
    std::vector<T> charpoly_coeffs() const {
        const T one = FieldTraits<T>::one_like(proto());
        std::vector<T> c(static_cast<size_t>(t_) + 1, FieldTraits<T>::zero_like(proto()));
        c[static_cast<size_t>(t_)] = one;
        Matrix m = *this;
        Matrix mk = *this;
        for (int k = 1; k <= t_; ++k) {
            if (k > 1) {
                Matrix shifted = mk;
                for (int i = 0; i < t_; ++i) shifted(i, i) += c[static_cast<size_t>(t_ - k + 1)];
                mk = m * shifted;
            }
            T ck = -(mk.trace() / FieldTraits<T>::from_int(k, proto()));
            c[static_cast<size_t>(t_ - k)] = ck;
        }
        return c;
    }

private:
    static int check_size(int t) {
        if (t < 1) throw ParameterError("matrix size must be >= 1");
        return t;
    }

    T det_leverrier() const {
        std::vector<T> c = charpoly_coeffs();
        // det(M) = (-1)^t * c_0
        return (t_ % 2 == 0) ? c[0] : -c[0];
    }

    void match(const Matrix& o) const {
        if (t_ != o.t_)
            throw ParameterError("matrix size mismatch: " + std::to_string(t_) + " vs " + std::to_string(o.t_));
    }

    void swap_rows(int i, int k) {
        if (i == k) return;
        for (int j = 0; j < t_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

    size_t idx(int i, int j) const {
        if (i < 0 || i >= t_ || j < 0 || j >= t_)
            throw IndexError("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        return static_cast<size_t>(i) * t_ + j;
    }

    int t_;
    std::vector<T> e_;
};

using RationalMatrix = Matrix<Rational>;
using DualMatrix = Matrix<Dual>;

inline RationalMatrix identity(int t) { return RationalMatrix::identity_like(t, Rational(0)); }

inline RationalMatrix diagonal(const std::vector<Rational>& entries) {
    RationalMatrix m(static_cast<int>(entries.size()), Rational(0));
    for (int i = 0; i < m.size(); ++i) m(i, i) = entries[static_cast<size_t>(i)];
    return m;
}

inline DualMatrix lift_to_dual(const RationalMatrix& m, int nvars) {
    DualMatrix d(m.size(), Dual::constant(Rational(0), nvars));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) d(i, j) = Dual::constant(m(i, j), nvars);
    return d;
}

inline RationalMatrix mat_inverse(const RationalMatrix& m) { return m.inverse(); }

// Monic characteristic polynomial det(xI - m). Spectral predicates are
// defined over Rational matrices only.
inline Polynomial charpoly(const RationalMatrix& m) {
    return Polynomial(m.charpoly_coeffs());
}

// Substitute m into p (used by the Cayley-Hamilton checks).
inline RationalMatrix poly_apply(const Polynomial& p, const RationalMatrix& m) {
    RationalMatrix acc(m.size(), Rational(0));
    for (int j = p.degree(); j >= 0; --j) {
        acc = acc * m;
        for (int i = 0; i < m.size(); ++i) acc(i, i) += p.coeff(j);
    }
    return acc;
}

// Algebraic multiplicity of v as an eigenvalue of m.
inline int eigenvalue_multiplicity(const RationalMatrix& m, const Rational& v) {
    Polynomial p = charpoly(m);
    Polynomial lin({-v, Rational(1)});
    int e = 0;
    while (!p.is_zero() && p.eval(v).is_zero()) {
        p = p.divmod(lin).first;
        ++e;
    }
    return e;
}

// Palindromic coefficient test: coeff(x^j) == coeff(x^(t-j)) for all j.
inline bool is_reciprocal(const Polynomial& p) {
    int d = p.degree();
    for (int j = 0; j <= d; ++j)
        if (p.coeff(j) != p.coeff(d - j)) return false;
    return true;
}

} // namespace holoflow
