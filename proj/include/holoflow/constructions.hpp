#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "holoflow/dual.hpp"
#include "holoflow/errors.hpp"
#include "holoflow/matrix.hpp"
#include "holoflow/rational.hpp"

namespace holoflow {

// ---------------------------------------------------------------------------
// Involutions A with A^2 = Id (diagonal +-1 family) or A^2 = -Id (symplectic
// block family).

struct InvolutionProfile {
    enum class Kind { DiagonalPM, Symplectic };

    Kind kind;
    int t;
    int k; // number of -1 eigenvalues; meaningful for DiagonalPM only

    static InvolutionProfile diagonal_pm(int t, int k) {
        if (t < 2) throw ProfileError("diagonal involution needs t >= 2");
        if (k < 1 || k > t / 2)
            throw ProfileError("diagonal involution needs 1 <= k <= floor(t/2), got k=" + std::to_string(k) +
                               " for t=" + std::to_string(t));
        return {Kind::DiagonalPM, t, k};
    }

    static InvolutionProfile symplectic(int t) {
        if (t < 2 || t % 2 != 0) throw ProfileError("symplectic involution needs even t >= 2");
        return {Kind::Symplectic, t, 0};
    }
};

inline RationalMatrix build_involution(const InvolutionProfile& profile) {
    RationalMatrix a(profile.t, Rational(0));
    if (profile.kind == InvolutionProfile::Kind::DiagonalPM) {
        for (int i = 0; i < profile.t; ++i) a(i, i) = i < profile.k ? Rational(-1) : Rational(1);
    } else {
        for (int b = 0; b < profile.t / 2; ++b) {
            a(2 * b, 2 * b + 1) = Rational(1);
            a(2 * b + 1, 2 * b) = Rational(-1);
        }
    }
    return a;
}

// ---------------------------------------------------------------------------
// Affine forms c + sum_j a_j x_j: the symbolic entries of the conjugator
// recipes. Evaluation at a rational point is exact; the dual evaluation seeds
// every variable at once.

struct LinForm {
    Rational c;
    std::vector<Rational> a; // length = arity of the enclosing recipe

    static LinForm constant(const Rational& v, int nvars) {
        return {v, std::vector<Rational>(static_cast<size_t>(nvars), Rational(0))};
    }

    static LinForm variable(int j, int nvars) {
        LinForm f = constant(Rational(0), nvars);
        f.a[static_cast<size_t>(j)] = Rational(1);
        return f;
    }

    LinForm operator+(const LinForm& o) const {
        LinForm r = *this;
        r.c += o.c;
        for (size_t j = 0; j < r.a.size(); ++j) r.a[j] += o.a[j];
        return r;
    }

    LinForm operator-(const LinForm& o) const {
        LinForm r = *this;
        r.c -= o.c;
        for (size_t j = 0; j < r.a.size(); ++j) r.a[j] -= o.a[j];
        return r;
    }

    Rational eval(std::span<const Rational> params) const {
        Rational v = c;
        for (size_t j = 0; j < a.size(); ++j) v += a[j] * params[j];
        return v;
    }

    Dual eval_dual(std::span<const Rational> params) const {
        return Dual(eval(params), a);
    }

    // Renders "y+x", "y-x", "x2", "1", "0", ... with higher-index variables
    // first (the convention used by the recipe listings).
    std::string str(std::span<const std::string> names) const {
        std::string out;
        for (size_t j = a.size(); j-- > 0;) {
            const Rational& coef = a[j];
            if (coef.is_zero()) continue;
            if (!out.empty()) out += coef.sign() > 0 ? "+" : "-";
            else if (coef.sign() < 0) out += "-";
            Rational mag = coef.abs();
            if (mag != Rational(1)) out += mag.pretty() + "*";
            out += names[j];
        }
        if (!c.is_zero() || out.empty()) {
            if (!out.empty()) out += c.sign() > 0 ? "+" : "-";
            else if (c.sign() < 0) out += "-";
            if (!c.is_zero() || out.empty()) out += c.abs().pretty();
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Conjugator recipes P(x_1..x_k). Case 1 deforms one entry, Case 2 two, and
// Case 3 places k variables on the core antidiagonal plus a fixed border
// pattern. The displayed t=9 / t=13 / t=14 instances are reproduced
// entry-for-entry; other sizes follow the same placement rules.

enum class ConjugatorCase { One, Two, Three };

class PRecipe {
public:
    static PRecipe case1(int t) {
        if (t < 4) throw RecipeError("case1 needs t >= 4");
        return PRecipe(ConjugatorCase::One, t, 1);
    }

    static PRecipe case2(int t) {
        if (t < 4 || (t % 2 == 1 && t < 5)) throw RecipeError("case2 needs t >= 4");
        return PRecipe(ConjugatorCase::Two, t, 2);
    }

    static PRecipe case3(int t, int k) {
        if (k < 3) throw RecipeError("case3 needs k >= 3 (more than two -1 eigenvalues)");
        if (t < 6) throw RecipeError("case3 needs t >= 6");
        // The core antidiagonal has floor(t/2)-1 slot pairs; x1 takes the
        // innermost one and x4..xk need one each, the rest hold x2.
        if (k > t / 2)
            throw RecipeError("case3 with k=" + std::to_string(k) + " exceeds the antidiagonal slots of t=" +
                              std::to_string(t));
        return PRecipe(ConjugatorCase::Three, t, k);
    }

    static PRecipe by_id(const std::string& id, int t, int k) {
        if (id == "case1") return case1(t);
        if (id == "case2") return case2(t);
        if (id == "case3") return case3(t, k);
        throw RecipeError("unknown recipe id '" + id + "' (expected case1|case2|case3)");
    }

    ConjugatorCase kase() const { return case_; }
    int t() const { return t_; }
    int arity() const { return arity_; }

    std::string id() const {
        switch (case_) {
            case ConjugatorCase::One: return "case1";
            case ConjugatorCase::Two: return "case2";
            default: return "case3";
        }
    }

    std::vector<std::string> var_names() const {
        if (case_ == ConjugatorCase::One) return {"x"};
        if (case_ == ConjugatorCase::Two) return {"x", "y"};
        std::vector<std::string> names;
        names.reserve(static_cast<size_t>(arity_));
        for (int i = 1; i <= arity_; ++i) names.push_back("x" + std::to_string(i));
        return names;
    }

    // The matching involution: diag(-1 x k, 1 x (t-k)) with k = 1, 2, or the
    // recipe arity.
    InvolutionProfile involution() const { return InvolutionProfile::diagonal_pm(t_, arity_); }

    const std::vector<std::vector<LinForm>>& symbolic() const {
        if (sym_.empty()) sym_ = build_symbolic();
        return sym_;
    }

    RationalMatrix evaluate(std::span<const Rational> params) const {
        check_arity(params.size());
        const auto& sym = symbolic();
        RationalMatrix p(t_, Rational(0));
        for (int i = 0; i < t_; ++i)
            for (int j = 0; j < t_; ++j) p(i, j) = sym[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(params);
        return p;
    }

    DualMatrix evaluate_dual(std::span<const Rational> params) const {
        check_arity(params.size());
        const auto& sym = symbolic();
        DualMatrix p(t_, Dual::constant(Rational(0), arity_));
        for (int i = 0; i < t_; ++i)
            for (int j = 0; j < t_; ++j)
                p(i, j) = sym[static_cast<size_t>(i)][static_cast<size_t>(j)].eval_dual(params);
        return p;
    }

private:
    PRecipe(ConjugatorCase c, int t, int arity) : case_(c), t_(t), arity_(arity) {}

    void check_arity(size_t n) const {
        if (static_cast<int>(n) != arity_)
            throw ParameterError("recipe " + id() + " for t=" + std::to_string(t_) + " takes " +
                                 std::to_string(arity_) + " parameter(s), got " + std::to_string(n));
    }

    std::vector<std::vector<LinForm>> build_symbolic() const {
        const int t = t_;
        std::vector grid(static_cast<size_t>(t),
                         std::vector<LinForm>(static_cast<size_t>(t), LinForm::constant(Rational(0), arity_)));
        auto at = [&](int i, int j) -> LinForm& {
            return grid[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; // 1-based, as in the listings
        };
        auto c1 = LinForm::constant(Rational(1), arity_);
        auto var = [&](int j) { return LinForm::variable(j, arity_); };

        switch (case_) {
            case ConjugatorCase::One: {
                const LinForm x = var(0);
                if (t % 2 == 0) {
                    // core rows/cols 2..t-1: mirror image of the identity
                    for (int i = 2; i <= t - 1; ++i) at(i, t + 1 - i) = c1;
                    for (int k = 1; k <= t; ++k) {
                        at(k, 1) = at(1, k) = (k % 2 == 1) ? c1 : LinForm::constant(Rational(0), arity_);
                    }
                    for (int k = 1; k <= t; ++k) at(k, t) = (k % 2 == 0) ? c1 : LinForm::constant(Rational(0), arity_);
                    for (int k = 1; k <= t; ++k) {
                        if (k == 2) at(t, k) = x;
                        else at(t, k) = (k % 2 == 0) ? c1 : LinForm::constant(Rational(0), arity_);
                    }
                } else {
                    for (int i = 2; i <= t - 1; ++i) at(i, i) = c1; // core identity
                    for (int k = 1; k <= t; ++k) {
                        bool one = (k % 2 == 0 && k != 2) || k == 1;
                        at(1, k) = one ? c1 : LinForm::constant(Rational(0), arity_);
                    }
                    for (int k = 1; k <= t - 1; ++k) at(k + 1, 1) = (k % 2 == 0) ? c1 : LinForm::constant(Rational(0), arity_);
                    for (int k = 1; k <= t; ++k) at(k, t) = (k % 2 == 0) ? c1 : LinForm::constant(Rational(0), arity_);
                    for (int k = 2; k <= t; ++k) {
                        if (k == 2) at(t, k) = x;
                        else at(t, k) = (k % 2 == 0) ? c1 : LinForm::constant(Rational(0), arity_);
                    }
                }
                break;
            }
            case ConjugatorCase::Two: {
                const LinForm x = var(0), y = var(1);
                for (int i = 2; i <= t - 1; ++i) at(i, i) = c1; // core identity
                const int yrow = (t % 2 == 0) ? t / 2 : (t - 1) / 2;
                for (int k = 1; k <= t; ++k) {
                    if (k == yrow) at(k, 1) = y;
                    else at(k, 1) = (k % 2 == 1) ? c1 : LinForm::constant(Rational(0), arity_);
                }
                at(1, 2) = y + x;
                at(1, t - 1) = y;
                at(t, 2) = x;
                at(t, t - 1) = y - x;
                if (t % 2 == 1) {
                    if (t != 5) {
                        at(1, (t + 3) / 2) = c1;
                        at(1, (t - 1) / 2) = c1;
                    } else {
                        at(1, 3) = c1;
                    }
                }
                const int xrow = (t % 2 == 0) ? t / 2 + 1 : (t + 1) / 2 + 1;
                for (int k = 1; k <= t; ++k) {
                    if (k == xrow) at(k, t) = x;
                    else at(k, t) = (k % 2 == 0) ? c1 : LinForm::constant(Rational(0), arity_);
                }
                break;
            }
            case ConjugatorCase::Three: {
                const int k = arity_;
                for (int i = 1; i <= t; ++i) at(i, i) = c1;
                auto xi = [&](int n) { return var(n - 1); }; // x_n
                if (t % 2 == 0) {
                    at(1, 2) = xi(2);
                    at(1, t / 2) = xi(3);
                    at(1, (t + 2) / 2) = xi(3);
                    at(1, t - 1) = xi(1);
                    at(2, t - 2) = xi(3);
                    at(t / 2, 1) = xi(2);
                    at((t + 2) / 2, 1) = xi(3);
                    at(t / 2, t) = xi(3);
                    at((t + 2) / 2, t) = xi(1);
                    at(t - 1, 1) = c1;
                    at(t, 2) = xi(3);
                    at(t, t - 1) = xi(2);
                } else {
                    at(1, 2) = xi(2);
                    at(1, (t + 1) / 2) = xi(3);
                    at(1, t - 1) = xi(1);
                    at(2, t - 2) = xi(3);
                    at((t - 1) / 2, 1) = xi(2);
                    at((t + 1) / 2, 1) = c1;
                    at((t + 3) / 2, 1) = xi(3);
                    at(t - 1, 1) = c1;
                    at((t - 1) / 2, t) = xi(3);
                    at((t + 3) / 2, t) = xi(1);
                    at(t, 2) = xi(3);
                    at(t, t - 1) = xi(2);
                }
                // Core antidiagonal pairs (i, t+1-i), 2 <= i < t+1-i, from the
                // outside in: x2 fills the outer slots, then x5..xk, then x4,
                // with x1 innermost.
                const int slots = t / 2 - 1;
                std::vector<int> order;
                order.reserve(static_cast<size_t>(slots));
                for (int s = 0; s < slots - k + 2; ++s) order.push_back(2);
                for (int v = 5; v <= k; ++v) order.push_back(v);
                if (k >= 4) order.push_back(4);
                order.push_back(1);
                for (int s = 0; s < slots; ++s) {
                    int i = 2 + s, j = t + 1 - i;
                    at(i, j) = xi(order[static_cast<size_t>(s)]);
                    at(j, i) = xi(order[static_cast<size_t>(s)]);
                }
                break;
            }
        }
        return grid;
    }

    ConjugatorCase case_;
    int t_;
    int arity_;
    mutable std::vector<std::vector<LinForm>> sym_;
};

inline RationalMatrix build_P(const PRecipe& recipe, std::span<const Rational> params) {
    return recipe.evaluate(params);
}

// ---------------------------------------------------------------------------
// Diagonal generators described by (weight, multiplicity) blocks with
// strictly decreasing weights.

class EigenSpec {
public:
    using Block = std::pair<Rational, int>;

    explicit EigenSpec(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        if (blocks_.empty()) throw SpecError("eigen spec needs at least one block");
        for (size_t b = 0; b < blocks_.size(); ++b) {
            if (blocks_[b].second < 1) throw SpecError("eigen spec multiplicities must be >= 1");
            if (b > 0 && !(blocks_[b - 1].first > blocks_[b].first))
                throw SpecError("eigen spec weights must be strictly decreasing");
        }
    }

    const std::vector<Block>& blocks() const { return blocks_; }

    int block_count() const { return static_cast<int>(blocks_.size()); }

    int t() const {
        int n = 0;
        for (const auto& [w, m] : blocks_) n += m;
        return n;
    }

    // Blocks listed source-first (minimal weight first).
    std::vector<Block> ascending() const {
        std::vector<Block> a(blocks_.rbegin(), blocks_.rend());
        return a;
    }

    // True when the weight multiset is closed under lambda -> 1/lambda with
    // matching multiplicities (the shape of any C conjugate to its inverse).
    bool reciprocal_closed() const {
        for (const auto& [w, m] : blocks_) {
            if (w.is_zero()) return false;
            Rational inv = w.inverse();
            bool found = false;
            for (const auto& [w2, m2] : blocks_)
                if (w2 == inv && m2 == m) { found = true; break; }
            if (!found) return false;
        }
        return true;
    }

    // Groups adjacent equal diagonal entries; the diagonal must be strictly
    // decreasing blockwise for the spec to round-trip.
    static EigenSpec from_diagonal(const RationalMatrix& m) {
        if (!m.is_diagonal()) throw SpecError("matrix is not diagonal");
        std::vector<Block> blocks;
        for (int i = 0; i < m.size(); ++i) {
            if (!blocks.empty() && blocks.back().first == m(i, i)) ++blocks.back().second;
            else blocks.emplace_back(m(i, i), 1);
        }
        return EigenSpec(std::move(blocks));
    }

    EigenSpec negated() const {
        std::vector<Block> blocks(blocks_.rbegin(), blocks_.rend());
        for (auto& [w, m] : blocks) w = -w;
        return EigenSpec(std::move(blocks));
    }

private:
    std::vector<Block> blocks_;
};

inline RationalMatrix build_C_diag(const EigenSpec& spec) {
    RationalMatrix c(spec.t(), Rational(0));
    int i = 0;
    for (const auto& [w, m] : spec.blocks())
        for (int r = 0; r < m; ++r) {
            c(i, i) = w;
            ++i;
        }
    return c;
}

} // namespace holoflow
