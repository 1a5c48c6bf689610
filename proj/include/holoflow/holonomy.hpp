#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holoflow/constructions.hpp"
#include "holoflow/errors.hpp"
#include "holoflow/matrix.hpp"

namespace holoflow {

// Q = A * P * A * P^-1. det(Q) = det(A)^2 = 1 for every involution A.
template <typename T>
Matrix<T> conjugator_image(const Matrix<T>& a, const Matrix<T>& p) {
    return a * p * a * p.inverse();
}

// (tr Q, tr Q^2, ..., tr Q^k)
template <typename T>
std::vector<T> trace_vector(const Matrix<T>& q, int k) {
    if (k < 1) throw ParameterError("trace vector needs k >= 1");
    std::vector<T> out;
    out.reserve(static_cast<size_t>(k));
    Matrix<T> qp = q;
    for (int i = 1; i <= k; ++i) {
        out.push_back(qp.trace());
        if (i < k) qp = qp * q;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact Jacobian of (x_1..x_k) -> (tr Q, ..., tr Q^k) at a rational point,
// computed with one dual-number sweep. Entry (i,j) = d tr(Q^(i+1)) / d x_j.

struct JacobianReport {
    std::string recipe;
    int t = 0;
    int k = 0;
    std::vector<Rational> point;
    std::vector<std::vector<Rational>> jacobian; // k x k
    Rational determinant;
};

inline JacobianReport jacobian(const PRecipe& recipe, const InvolutionProfile& a_profile,
                               std::span<const Rational> point) {
    const int k = recipe.arity();
    if (static_cast<int>(point.size()) != k)
        throw ParameterError("jacobian point arity mismatch: expected " + std::to_string(k) + ", got " +
                             std::to_string(point.size()));
    if (a_profile.t != recipe.t())
        throw ParameterError("involution size does not match recipe size");

    DualMatrix p = recipe.evaluate_dual(point);
    DualMatrix a = lift_to_dual(build_involution(a_profile), k);
    DualMatrix q = [&] {
        try {
            return conjugator_image(a, p);
        } catch (const SingularMatrixError&) {
            throw SingularMatrixError("recipe " + recipe.id() + " is singular at the requested point");
        }
    }();

    std::vector<Dual> traces = trace_vector(q, k);

    JacobianReport rep;
    rep.recipe = recipe.id();
    rep.t = recipe.t();
    rep.k = k;
    rep.point.assign(point.begin(), point.end());
    rep.jacobian.resize(static_cast<size_t>(k));
    RationalMatrix jac(k, Rational(0));
    for (int i = 0; i < k; ++i) {
        rep.jacobian[static_cast<size_t>(i)].resize(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) {
            jac(i, j) = traces[static_cast<size_t>(i)].partial(j);
            rep.jacobian[static_cast<size_t>(i)][static_cast<size_t>(j)] = jac(i, j);
        }
    }
    rep.determinant = jac.det();
    return rep;
}

// ---------------------------------------------------------------------------
// The five closed-form trace displays for Q = APAP^-1 along the recipe
// families, evaluated exactly, term by term as displayed. Scalar T is
// Rational or Dual (the dual route yields the formulas' exact derivatives).

enum class TraceFormula {
    Case1Odd,      // t odd:  t-1 + (x+2t-6)/x
    Case1Even,     // t even: degree-1 over degree-1 in x
    Case2Even,     // t even, two -1 eigenvalues
    Case2OddHalfEven, // t odd, (t-1)/2 even (generic recipe, t != 5)
    Case2OddHalfOdd,  // t odd, (t-1)/2 odd
};

inline std::string trace_formula_id(TraceFormula f) {
    switch (f) {
        case TraceFormula::Case1Odd: return "case1-odd";
        case TraceFormula::Case1Even: return "case1-even";
        case TraceFormula::Case2Even: return "case2-even";
        case TraceFormula::Case2OddHalfEven: return "case2-odd-heven";
        case TraceFormula::Case2OddHalfOdd: return "case2-odd-hodd";
    }
    throw ParameterError("bad formula");
}

inline TraceFormula trace_formula_by_id(const std::string& id) {
    for (TraceFormula f : {TraceFormula::Case1Odd, TraceFormula::Case1Even, TraceFormula::Case2Even,
                           TraceFormula::Case2OddHalfEven, TraceFormula::Case2OddHalfOdd})
        if (trace_formula_id(f) == id) return f;
    throw ParameterError("unknown trace formula id '" + id + "'");
}

// Sizes 5 <= t <= 14 on which each display is asserted to equal the direct
// trace. The bespoke t=5 variant of the odd case-2 recipe has its own trace
// function, so the half-even class starts at t=9.
inline std::vector<int> trace_formula_applicable_t(TraceFormula f) {
    switch (f) {
        case TraceFormula::Case1Odd: return {5, 7, 9, 11, 13};
        case TraceFormula::Case1Even: return {6, 8, 10, 12, 14};
        case TraceFormula::Case2Even: return {6, 8, 10, 12, 14};
        case TraceFormula::Case2OddHalfEven: return {9, 13};
        case TraceFormula::Case2OddHalfOdd: return {7, 11};
    }
    throw ParameterError("bad formula");
}

inline PRecipe trace_formula_recipe(TraceFormula f, int t) {
    switch (f) {
        case TraceFormula::Case1Odd:
        case TraceFormula::Case1Even: return PRecipe::case1(t);
        default: return PRecipe::case2(t);
    }
}

namespace detail {

template <typename T>
void check_formula_t(TraceFormula f, int t) {
    auto bad = [&](const char* need) {
        throw ParameterError(std::string("formula ") + trace_formula_id(f) + " needs " + need + ", got t=" +
                             std::to_string(t));
    };
    switch (f) {
        case TraceFormula::Case1Odd:
            if (t % 2 == 0 || t < 5) bad("odd t >= 5");
            break;
        case TraceFormula::Case1Even:
            if (t % 2 == 1 || t < 6) bad("even t >= 6");
            break;
        case TraceFormula::Case2Even:
            if (t % 2 == 1 || t < 6) bad("even t >= 6");
            break;
        case TraceFormula::Case2OddHalfEven:
            if (t % 2 == 0 || t < 7 || ((t - 1) / 2) % 2 != 0) bad("odd t >= 7 with (t-1)/2 even");
            break;
        case TraceFormula::Case2OddHalfOdd:
            if (t % 2 == 0 || t < 7 || ((t - 1) / 2) % 2 != 1) bad("odd t >= 7 with (t-1)/2 odd");
            break;
    }
}

} // namespace detail

template <typename T>
T closed_form_trace_t(TraceFormula f, int t, std::span<const T> point) {
    detail::check_formula_t<T>(f, t);
    const T& proto = point[0];
    auto ci = [&](long n) { return FieldTraits<T>::from_int(n, proto); };
    auto pole_check = [&](const T& den) {
        if (!FieldTraits<T>::is_unit(den)) throw PoleError("formula " + trace_formula_id(f) + " has a pole here");
        return den;
    };

    switch (f) {
        case TraceFormula::Case1Odd: {
            if (point.size() != 1) throw ParameterError("case1 formulas take one parameter");
            const T& x = point[0];
            return ci(t - 1) + (x + ci(2 * t - 6)) / pole_check(x);
        }
        case TraceFormula::Case1Even: {
            if (point.size() != 1) throw ParameterError("case1 formulas take one parameter");
            const T& x = point[0];
            T num = ci(t * t - 6 * t + 8) / ci(2) * x + ci(t * t * t - 10 * t * t + 28 * t - 32) / ci(4);
            T den = ci(t - 2) / ci(2) * x + ci(t * t - 6 * t + 4) / ci(4);
            return num / pole_check(den);
        }
        case TraceFormula::Case2Even: {
            if (point.size() != 2) throw ParameterError("case2 formulas take two parameters");
            const T &x = point[0], &y = point[1];
            T d = pole_check(ci(1) - x - y + y * x - y * y + x * x);
            T s = ci(t - 4);
            s -= ci(2) * (ci(-1) + x) / d;
            s -= (-y - x) * (-y + x) / d;
            s -= (ci(-1) + x) * y / d;
            s -= ci(2) * (y - ci(1)) / d;
            s -= (-x + x * y - y * y + x * x) / d;
            s -= (-(y * y) - y + y * x + x * x) / d;
            s -= x * (y - ci(1)) / d;
            s -= (y - x) * (y + x) / d;
            return s;
        }
        case TraceFormula::Case2OddHalfEven: {
            if (point.size() != 2) throw ParameterError("case2 formulas take two parameters");
            const T &x = point[0], &y = point[1];
            T d = pole_check(ci(1) + y + ci(2) * x + y * y);
            T s = ci(t - 6);
            s -= ci(2) * y / d;
            s -= (-y - x) / d;
            s -= (ci(1) + y * y) / d;
            s -= (ci(-1) - ci(2) * x - y * y + y * x) / d;
            s -= y * (ci(1) + x) / d;
            s -= (-(y * y)) / d;
            s += (y + ci(2) * x) / d;
            s += ci(1) / d;
            s += (ci(1) + y + x + y * y) / d;
            s += (ci(1) + y + x + y * x) / d;
            s -= (-x - y * y + y * x) / d;
            s -= (ci(1) + ci(2) * y + ci(2) * x) / d;
            s -= x * (ci(-1) + y) / d;
            s += (y - x) * (ci(-1) + y) / d;
            return s;
        }
        case TraceFormula::Case2OddHalfOdd: {
            if (point.size() != 2) throw ParameterError("case2 formulas take two parameters");
            const T &x = point[0], &y = point[1];
            T d = pole_check(y * y + ci(2) * y + ci(2) * x);
            T s = ci(t - 6);
            s -= ci(3) * y / d;
            s -= (-y - x) / d;
            s -= ci(2) * y * y / d;
            s -= (y + x) / d;
            s -= (-(y * y) + y * x - y - x) / d;
            s -= (x * y + y + x) / d;
            s += (y * y + y + x) / d;
            s += x / d;
            s += (y * x + ci(2) * x + y) / d;
            s -= y * (x - y - ci(1)) / d;
            s -= x * y / d;
            s += y * (y - x) / d;
            return s;
        }
    }
    throw ParameterError("bad formula");
}

inline Rational closed_form_trace(TraceFormula f, int t, std::span<const Rational> point) {
    return closed_form_trace_t<Rational>(f, t, point);
}

// The half-even display is internally inconsistent with the recipe it
// accompanies: it exceeds the direct trace by exactly 2y^2/(1+y+2x+y^2) at
// every non-pole point of the applicable sizes. The residual is exposed so
// the verification layer can pin the deviation instead of hiding it.
inline Rational case2_odd_heven_residual(const Rational& x, const Rational& y) {
    Rational d = Rational(1) + y + Rational(2) * x + y * y;
    if (d.is_zero()) throw PoleError("residual pole");
    return Rational(2) * y * y / d;
}

// ---------------------------------------------------------------------------
// Admissibility of C = APAP^-1: exactly 2k+1 distinct eigenvalues (1 and k
// reciprocal pairs).

struct AdmissibilityReport {
    int distinct_eigenvalue_count = 0;
    int expected = 0; // 2k+1
    int multiplicity_of_one = 0;
    bool reciprocal = false;
    bool admissible = false;
};

// Spectral content of a given generator C.
inline AdmissibilityReport admissibility_of(const RationalMatrix& c, int k) {
    Polynomial chi = charpoly(c);
    AdmissibilityReport rep;
    rep.distinct_eigenvalue_count = chi.squarefree_degree();
    rep.expected = 2 * k + 1;
    rep.multiplicity_of_one = eigenvalue_multiplicity(c, Rational(1));
    rep.reciprocal = is_reciprocal(chi);
    rep.admissible = rep.distinct_eigenvalue_count == rep.expected;
    return rep;
}

// `power` replaces C by C^power before the spectral analysis (the covering
// passage used to push an eigenvalue off 1); default 1.
inline AdmissibilityReport admissibility_check(const RationalMatrix& a, const RationalMatrix& p, int k,
                                               int power = 1) {
    if (power < 1) throw ParameterError("admissibility power must be >= 1");
    RationalMatrix c = conjugator_image(a, p);
    if (power > 1) c = c.pow(power);
    return admissibility_of(c, k);
}

// The trace relation satisfied by every non-admissible C whose spectrum is
// {lambda x t/2, lambda^-1 x t/2}: (tr C)^2 = (t/2) tr(C^2) + t^2/2.
inline bool nonadmissible_relation_check(int t, const Rational& lambda) {
    if (t < 2 || t % 2 != 0) throw ParameterError("relation check needs even t >= 2");
    if (lambda.is_zero()) throw std::domain_error("lambda must be nonzero");
    std::vector<Rational> diag;
    diag.reserve(static_cast<size_t>(t));
    for (int i = 0; i < t / 2; ++i) diag.push_back(lambda);
    for (int i = 0; i < t / 2; ++i) diag.push_back(lambda.inverse());
    RationalMatrix c = diagonal(diag);
    Rational tr = c.trace();
    Rational tr2 = (c * c).trace();
    Rational half(t, 2);
    return tr * tr == half * tr2 + Rational(static_cast<long>(t) * t, 2);
}

} // namespace holoflow
