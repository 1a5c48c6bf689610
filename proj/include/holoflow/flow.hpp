#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holoflow/constructions.hpp"
#include "holoflow/errors.hpp"

namespace holoflow {

// ---------------------------------------------------------------------------
// Fixed set of the diagonal flow. Components are indexed 1..m in ascending
// weight order, so component 1 is the global source side and component m the
// global sink side.

struct FixedComponent {
    int index = 0;       // 1-based, ascending weight
    int weight_rank = 0; // == index
    Rational weight;
    int multiplicity = 0;
    int dimension = 0; // multiplicity - 1
    bool is_point() const { return multiplicity == 1; }

    std::string kind() const { return is_point() ? "point" : "RP^" + std::to_string(dimension); }
};

inline std::vector<FixedComponent> fixed_components(const EigenSpec& spec) {
    if (spec.block_count() < 2) throw DegenerateFlowError("flow is trivial: spec has a single weight");
    std::vector<FixedComponent> out;
    int idx = 1;
    for (const auto& [w, m] : spec.ascending()) {
        FixedComponent c;
        c.index = idx;
        c.weight_rank = idx;
        c.weight = w;
        c.multiplicity = m;
        c.dimension = m - 1;
        out.push_back(std::move(c));
        ++idx;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Flowlines from component a to component b. Writing N for the total
// multiplicity of blocks a..b and I for the multiplicity strictly between
// them, the stratum is an (N-2)-sphere minus an (I-1)-subsphere; the removed
// subsphere is the doubled equator shared by the two flowline families.

struct FlowlineStratum {
    int source = 0;
    int sink = 0;
    bool nonempty = false;
    int dimension = -1;
    std::string descriptor = "\xE2\x88\x85"; // empty-set symbol
};

inline FlowlineStratum flowline_stratum(const EigenSpec& spec, int a, int b) {
    const auto asc = spec.ascending();
    const int m = static_cast<int>(asc.size());
    if (a < 1 || a > m || b < 1 || b > m)
        throw IndexError("component index out of range 1.." + std::to_string(m));
    FlowlineStratum s;
    s.source = a;
    s.sink = b;
    if (a >= b) return s;
    int total = 0, inner = 0;
    for (int j = a; j <= b; ++j) total += asc[static_cast<size_t>(j - 1)].second;
    for (int j = a + 1; j <= b - 1; ++j) inner += asc[static_cast<size_t>(j - 1)].second;
    s.nonempty = true;
    s.dimension = total - 2;
    s.descriptor = "S^" + std::to_string(s.dimension);
    if (inner > 0) s.descriptor += " minus S^" + std::to_string(inner - 1);
    return s;
}

// ---------------------------------------------------------------------------
// Leaf space of the flow of C_i on RP^n: the i nested spheres of dimensions
// n-1, n-3, ..., n+1-2i. A stratum of positive dimension carries the double
// equator; the terminal S^0 (odd n, i = (n+1)/2) does not.

struct LeafSpace {
    struct Stratum {
        int index = 0; // 1-based, outermost first
        int dimension = 0;
        bool double_equator = false;
    };

    enum class Kind { DiagonalFlow, Bundle };

    Kind kind = Kind::DiagonalFlow;
    int n = 0;
    int i = 0;
    std::vector<Stratum> strata;

    // bundle descriptor (A^2 = -Id case)
    int bundle_base_dim = 0;
    int bundle_fiber_dim = 0;
    int bundle_total_dim = 0;
    bool bundle_base_nonorientable = false;
    bool bundle_forced_nontrivial = false;
    bool pullback_simply_connected = false;
};

inline void check_leafspace_params(int n, int i) {
    if (n < 2) throw ParameterError("leaf space needs n >= 2");
    if (i < 1 || i > (n + 1) / 2)
        throw ParameterError("leaf space index i must satisfy 1 <= i <= floor((n+1)/2), got i=" +
                             std::to_string(i) + " for n=" + std::to_string(n));
}

inline LeafSpace leaf_space(int n, int i) {
    check_leafspace_params(n, i);
    LeafSpace ls;
    ls.kind = LeafSpace::Kind::DiagonalFlow;
    ls.n = n;
    ls.i = i;
    for (int j = 1; j <= i; ++j) {
        LeafSpace::Stratum s;
        s.index = j;
        s.dimension = n + 1 - 2 * j;
        s.double_equator = s.dimension > 0;
        ls.strata.push_back(s);
    }
    return ls;
}

// Boundary of a tubular neighborhood of RP^(k-1) inside RP^(2k-1): an
// S^(k-1) bundle over RP^(k-1); its pullback over S^(k-1) is simply
// connected for k >= 3.
inline LeafSpace bundle_leaf_space(int k) {
    if (k < 3) throw ParameterError("bundle leaf space needs k >= 3");
    LeafSpace ls;
    ls.kind = LeafSpace::Kind::Bundle;
    ls.n = 2 * k - 1;
    ls.bundle_base_dim = k - 1;
    ls.bundle_fiber_dim = k - 1;
    ls.bundle_total_dim = 2 * k - 2;
    ls.bundle_base_nonorientable = (k - 1) % 2 == 0;
    ls.bundle_forced_nontrivial = ls.bundle_base_nonorientable;
    ls.pullback_simply_connected = true;
    return ls;
}

// ---------------------------------------------------------------------------
// The full stratum diagram of C_i on RP^n (every source/sink pair), grouped
// into rows by dimension, and the involution induced by reversing the weight
// order. Within each row the involution is the reversal, so the fixed strata
// are the centers of odd-length rows.

struct DiagramStratum {
    int source = 0;
    int sink = 0;
    int dimension = 0;
    int row_position = 0; // 1-based within the row of equal dimension
    bool double_equator = false;

    std::string label() const {
        return "S^" + std::to_string(dimension) + "_" + std::to_string(row_position);
    }
};

struct StratumInvolution {
    int n = 0;
    int i = 0;
    int components = 0;
    std::vector<DiagramStratum> strata;            // all nonempty strata, by descending dim then position
    std::vector<std::pair<int, int>> permutation;  // indices into strata (self-pairs included once)

    const DiagramStratum& image_of(int strata_index) const {
        for (const auto& [u, v] : permutation) {
            if (u == strata_index) return strata[static_cast<size_t>(v)];
            if (v == strata_index) return strata[static_cast<size_t>(u)];
        }
        throw IndexError("stratum index out of range");
    }
};

// Canonical eigen-spec shape of C_i on RP^n: i reciprocal pairs around a
// fixed block of multiplicity n+1-2i (absent when 2i = n+1).
inline EigenSpec canonical_flow_spec(int n, int i) {
    check_leafspace_params(n, i);
    const int t = n + 1;
    std::vector<EigenSpec::Block> blocks;
    for (int j = i; j >= 1; --j) blocks.emplace_back(Rational(j), 1);
    if (t - 2 * i > 0) blocks.emplace_back(Rational(0), t - 2 * i);
    for (int j = 1; j <= i; ++j) blocks.emplace_back(Rational(-j), 1);
    return EigenSpec(std::move(blocks));
}

inline StratumInvolution involution_on_strata(int n, int i) {
    check_leafspace_params(n, i);
    EigenSpec spec = canonical_flow_spec(n, i);
    const int m = spec.block_count();

    StratumInvolution inv;
    inv.n = n;
    inv.i = i;
    inv.components = m;

    std::map<int, std::vector<DiagramStratum>, std::greater<>> rows;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            FlowlineStratum fs = flowline_stratum(spec, a, b);
            DiagramStratum d;
            d.source = a;
            d.sink = b;
            d.dimension = fs.dimension;
            d.double_equator = b > a + 1;
            rows[d.dimension].push_back(d);
        }

    for (auto& [dim, row] : rows) {
        std::sort(row.begin(), row.end(),
                  [](const DiagramStratum& x, const DiagramStratum& y) { return x.source < y.source; });
        int pos = 1;
        for (auto& d : row) d.row_position = pos++;
        int base = static_cast<int>(inv.strata.size());
        for (const auto& d : row) inv.strata.push_back(d);
        // tau(a, b) = (m+1-b, m+1-a): reverses each row
        const int count = static_cast<int>(row.size());
        for (int p = 1; p <= count; ++p) {
            int q = count + 1 - p;
            if (p <= q) inv.permutation.emplace_back(base + p - 1, base + q - 1);
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Limit components of a flowline: the minimal (alpha) and maximal (omega)
// weight blocks meeting the support of the homogeneous coordinates.
//
// Coordinate convention for points: ascending block order, i.e. the first
// mult_1 coordinates belong to component 1 (the source side), matching the
// component indexing of fixed_components.

struct LimitPair {
    int alpha = 0;
    int omega = 0;
};

inline LimitPair analytic_limits(std::span<const Rational> point, const EigenSpec& spec) {
    if (static_cast<int>(point.size()) != spec.t())
        throw ParameterError("point has " + std::to_string(point.size()) + " coordinates, spec has t=" +
                             std::to_string(spec.t()));
    const auto asc = spec.ascending();
    int lo = 0, hi = 0;
    int coord = 0, block = 1;
    for (const auto& [w, m] : asc) {
        for (int r = 0; r < m; ++r, ++coord) {
            if (!point[static_cast<size_t>(coord)].is_zero()) {
                if (lo == 0) lo = block;
                hi = block;
            }
        }
        ++block;
    }
    if (lo == 0) throw std::domain_error("zero vector has no projective class");
    return {lo, hi};
}

// Floating-point oracle for analytic_limits: pushes the point along
// [x_j * exp(w_j t)] with stepwise renormalization and classifies the
// dominant block at t = +-horizon. Ambiguity is reported, not raised.
struct NumericLimitResult {
    bool conclusive = false;
    LimitPair limits;
    std::string reason; // set when inconclusive
};

inline NumericLimitResult numeric_limits_oracle(std::span<const double> point, const EigenSpec& spec,
                                                double horizon = 256.0, double tolerance = 1e-8,
                                                double support_eps = 1e-10) {
    if (horizon <= 0) throw ParameterError("horizon must be positive");
    if (static_cast<int>(point.size()) != spec.t())
        throw ParameterError("point size does not match spec");

    const auto asc = spec.ascending();
    const int m = static_cast<int>(asc.size());
    std::vector<double> weight_of(point.size());
    std::vector<int> block_of(point.size());
    {
        size_t coord = 0;
        for (int b = 0; b < m; ++b)
            for (int r = 0; r < asc[static_cast<size_t>(b)].second; ++r, ++coord) {
                weight_of[coord] = asc[static_cast<size_t>(b)].first.to_double();
                block_of[coord] = b + 1;
            }
    }

    std::vector<double> unit(point.begin(), point.end());
    double norm = 0;
    for (double v : unit) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0) throw std::domain_error("zero vector has no projective class");
    for (double& v : unit) v /= norm;

    auto evolve_and_classify = [&](double direction) -> std::optional<int> {
        std::vector<double> y = unit;
        const int steps = static_cast<int>(std::ceil(horizon));
        for (int s = 0; s < steps; ++s) {
            double n2 = 0;
            for (size_t j = 0; j < y.size(); ++j) {
                y[j] *= std::exp(direction * weight_of[j]);
                n2 += y[j] * y[j];
            }
            double inv = 1.0 / std::sqrt(n2);
            for (double& v : y) v *= inv;
        }
        std::vector<double> mass(static_cast<size_t>(m) + 1, 0.0);
        for (size_t j = 0; j < y.size(); ++j) mass[static_cast<size_t>(block_of[j])] += y[j] * y[j];
        int best = 1;
        for (int b = 2; b <= m; ++b)
            if (mass[static_cast<size_t>(b)] > mass[static_cast<size_t>(best)]) best = b;
        if (mass[static_cast<size_t>(best)] < 1.0 - tolerance) return std::nullopt;
        return best;
    };

    NumericLimitResult res;
    auto omega = evolve_and_classify(+1.0);
    auto alpha = evolve_and_classify(-1.0);
    if (!alpha || !omega) {
        res.reason = "no block dominates within tolerance";
        return res;
    }

    // The claimed limit blocks must be visibly supported in the input;
    // coordinates under support_eps cannot be trusted through the float path.
    auto visible = [&](int b) {
        double peak = 0;
        for (size_t j = 0; j < unit.size(); ++j)
            if (block_of[j] == b) peak = std::max(peak, std::abs(unit[j]));
        return peak >= support_eps;
    };
    if (!visible(*alpha) || !visible(*omega)) {
        res.reason = "limit block support below threshold";
        return res;
    }

    res.conclusive = true;
    res.limits = {*alpha, *omega};
    return res;
}

// ---------------------------------------------------------------------------
// The interval quotient I* = I_1 u ... u I_(2i-1) u {0'}: a chain of
// intervals with one doubled origin on the center interval. The involution
// reverses the chain and swaps the two origins.

struct IntervalStar {
    int intervals = 0;
    int doubled = 0;              // 1-based index of the interval carrying the extra origin
    std::vector<int> involution;  // involution[j-1] = image of interval j (1-based)
    bool origin_swap = false;

    bool involution_is_identity() const {
        for (int j = 1; j <= intervals; ++j)
            if (involution[static_cast<size_t>(j - 1)] != j) return false;
        return true;
    }

    bool involution_is_reversal() const {
        for (int j = 1; j <= intervals; ++j)
            if (involution[static_cast<size_t>(j - 1)] != intervals + 1 - j) return false;
        return true;
    }

    bool self_inverse() const {
        for (int j = 1; j <= intervals; ++j) {
            int im = involution[static_cast<size_t>(j - 1)];
            if (im < 1 || im > intervals || involution[static_cast<size_t>(im - 1)] != j) return false;
        }
        return true;
    }
};

inline IntervalStar interval_quotient(int i) {
    if (i < 1) throw ParameterError("interval quotient needs i >= 1");
    IntervalStar star;
    star.intervals = 2 * i - 1;
    star.doubled = i;
    star.involution.resize(static_cast<size_t>(star.intervals));
    for (int j = 1; j <= star.intervals; ++j) star.involution[static_cast<size_t>(j - 1)] = 2 * i - j;
    star.origin_swap = true;
    return star;
}

inline IntervalStar identity_star(int i) {
    IntervalStar star = interval_quotient(i);
    for (int j = 1; j <= star.intervals; ++j) star.involution[static_cast<size_t>(j - 1)] = j;
    star.origin_swap = false;
    return star;
}

// Enumerates every embedded closed arc running from an interval endpoint to
// another and selecting one origin copy when it crosses the doubled point.
// Returns true iff no such arc is setwise invariant under the involution,
// i.e. the non-Hausdorff obstruction holds.
inline bool invariant_embedding_obstruction(const IntervalStar& star) {
    if (!star.self_inverse()) throw ParameterError("interval involution is not self-inverse");
    const bool ident = star.involution_is_identity();
    if (!ident && !star.involution_is_reversal())
        throw ParameterError("unsupported interval involution (not a chain symmetry)");
    const int n = star.intervals;
    // Nodes 0..n bound the chain; arc (p,q) covers intervals p+1..q.
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q <= n; ++q) {
            bool covers_doubled = (p <= star.doubled - 1) && (q >= star.doubled);
            // setwise image of the covered interval range
            int ip, iq;
            if (ident) {
                ip = p;
                iq = q;
            } else {
                ip = n - q;
                iq = n - p;
            }
            bool set_invariant = (ip == p && iq == q);
            if (!set_invariant) continue;
            if (!covers_doubled) return false; // an invariant arc avoiding the doubled point
            // The arc selects one origin copy; it is invariant iff that
            // selection is preserved.
            if (!star.origin_swap) return false;
        }
    }
    return true;
}

} // namespace holoflow
