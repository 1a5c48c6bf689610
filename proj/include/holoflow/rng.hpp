#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "holoflow/matrix.hpp"
#include "holoflow/rational.hpp"

namespace holoflow {

// Deterministic random source. mt19937_64 output is fixed by the standard,
// so identical seeds give identical streams on every platform; distributions
// are derived by plain modulo to keep that guarantee (std::uniform_int_distribution
// is implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}

    uint64_t next() { return g_(); }

    long uniform_int(long lo, long hi) {
        if (hi < lo) throw ParameterError("empty integer range");
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(g_() % span);
    }

    // Nonzero numerator in [-num_bound, num_bound], denominator in [1, den_bound].
    Rational rational(long num_bound, long den_bound, bool allow_zero = true) {
        long num = uniform_int(-num_bound, num_bound);
        while (!allow_zero && num == 0) num = uniform_int(-num_bound, num_bound);
        long den = uniform_int(1, den_bound);
        return Rational(num, den);
    }

    RationalMatrix integer_matrix(int t, long lo, long hi) {
        RationalMatrix m(t, Rational(0));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) m(i, j) = Rational(uniform_int(lo, hi));
        return m;
    }

    RationalMatrix invertible_integer_matrix(int t, long lo, long hi) {
        for (;;) {
            RationalMatrix m = integer_matrix(t, lo, hi);
            if (!m.det().is_zero()) return m;
        }
    }

    std::vector<long> integer_point(int arity, long lo, long hi) {
        std::vector<long> p(static_cast<size_t>(arity));
        for (auto& v : p) v = uniform_int(lo, hi);
        return p;
    }

private:
    std::mt19937_64 g_;
};

} // namespace holoflow
