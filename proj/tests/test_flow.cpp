#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "holoflow/flow.hpp"
#include "holoflow/rng.hpp"
#include "holoflow/verify.hpp"

using namespace holoflow;

namespace {

EigenSpec spec_of(std::vector<EigenSpec::Block> blocks) { return EigenSpec(std::move(blocks)); }

std::vector<Rational> coords(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("fixed components") {
    // lambda, 1 (x5), lambda^-1 on RP^6
    EigenSpec c1 = spec_of({{Rational(2), 1}, {Rational(1), 5}, {Rational(1, 2), 1}});
    auto comps = fixed_components(c1);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].is_point());
    CHECK(comps[1].kind() == "RP^4");
    CHECK(comps[2].is_point());
    CHECK(comps[0].weight == Rational(1, 2)); // source side: minimal weight

    // symplectic-style spectrum: two projective planes
    EigenSpec bundle = spec_of({{Rational(2), 3}, {Rational(1, 2), 3}});
    auto comps2 = fixed_components(bundle);
    REQUIRE(comps2.size() == 2);
    CHECK(comps2[0].kind() == "RP^2");
    CHECK(comps2[1].kind() == "RP^2");

    CHECK_THROWS_AS(fixed_components(spec_of({{Rational(1), 7}})), DegenerateFlowError);
}

TEST_CASE("flowline strata match the tables") {
    // C1 on even n = 2k: blocks 1, 2k-1, 1
    for (int k = 2; k <= 6; ++k) {
        EigenSpec c1 = spec_of({{Rational(2), 1}, {Rational(1), 2 * k - 1}, {Rational(1, 2), 1}});
        FlowlineStratum top = flowline_stratum(c1, 1, 3);
        CHECK(top.nonempty);
        CHECK(top.dimension == 2 * k - 1);
        CHECK(top.descriptor == "S^" + std::to_string(2 * k - 1) + " minus S^" + std::to_string(2 * k - 2));
        CHECK(flowline_stratum(c1, 1, 2).dimension == 2 * k - 2);
        CHECK(flowline_stratum(c1, 2, 3).dimension == 2 * k - 2);
        CHECK_FALSE(flowline_stratum(c1, 3, 2).nonempty);
        CHECK_FALSE(flowline_stratum(c1, 2, 2).nonempty);
    }

    // C2 on even n = 2k: blocks 1,1,2k-3,1,1
    for (int k = 2; k <= 6; ++k) {
        EigenSpec c2 = spec_of({{Rational(4), 1}, {Rational(2), 1}, {Rational(1), 2 * k - 3},
                                {Rational(1, 2), 1}, {Rational(1, 4), 1}});
        CHECK(flowline_stratum(c2, 1, 2).descriptor == "S^0");
        CHECK(flowline_stratum(c2, 1, 3).descriptor ==
              "S^" + std::to_string(2 * k - 3) + " minus S^0");
        CHECK(flowline_stratum(c2, 2, 3).descriptor == "S^" + std::to_string(2 * k - 4));
        CHECK(flowline_stratum(c2, 1, 4).descriptor ==
              "S^" + std::to_string(2 * k - 2) + " minus S^" + std::to_string(2 * k - 3));
        CHECK(flowline_stratum(c2, 2, 4).descriptor ==
              "S^" + std::to_string(2 * k - 3) + " minus S^" + std::to_string(2 * k - 4));
        CHECK(flowline_stratum(c2, 3, 4).descriptor == "S^" + std::to_string(2 * k - 4));
        CHECK(flowline_stratum(c2, 1, 5).descriptor ==
              "S^" + std::to_string(2 * k - 1) + " minus S^" + std::to_string(2 * k - 2));
        CHECK(flowline_stratum(c2, 2, 5).descriptor ==
              "S^" + std::to_string(2 * k - 2) + " minus S^" + std::to_string(2 * k - 3));
        CHECK(flowline_stratum(c2, 3, 5).descriptor ==
              "S^" + std::to_string(2 * k - 3) + " minus S^0");
        CHECK(flowline_stratum(c2, 4, 5).descriptor == "S^0");
    }

    CHECK_THROWS_AS(flowline_stratum(spec_of({{Rational(2), 1}, {Rational(1), 1}}), 0, 1), IndexError);
    CHECK_THROWS_AS(flowline_stratum(spec_of({{Rational(2), 1}, {Rational(1), 1}}), 1, 3), IndexError);
}

TEST_CASE("emptiness pattern is strictly lower triangular") {
    Rng rng(11);
    for (int s = 0; s < 10; ++s) {
        int m = static_cast<int>(rng.uniform_int(2, 13));
        std::vector<EigenSpec::Block> blocks;
        for (int b = 0; b < m; ++b)
            blocks.emplace_back(Rational(m - b), static_cast<int>(rng.uniform_int(1, 3)));
        EigenSpec spec = spec_of(std::move(blocks));
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b)
                CHECK(flowline_stratum(spec, a, b).nonempty == (a < b));
    }
}

TEST_CASE("leaf spaces") {
    LeafSpace l3 = leaf_space(6, 3);
    REQUIRE(l3.strata.size() == 3);
    CHECK(l3.strata[0].dimension == 5);
    CHECK(l3.strata[1].dimension == 3);
    CHECK(l3.strata[2].dimension == 1);
    for (const auto& s : l3.strata) CHECK(s.double_equator);

    LeafSpace l2 = leaf_space(6, 2);
    REQUIRE(l2.strata.size() == 2);
    CHECK(l2.strata[0].dimension == 5);
    CHECK(l2.strata[1].dimension == 3);

    // odd n with i = (n+1)/2 ends in a plain S^0
    LeafSpace lk = leaf_space(7, 4);
    REQUIRE(lk.strata.size() == 4);
    CHECK(lk.strata.back().dimension == 0);
    CHECK_FALSE(lk.strata.back().double_equator);
    CHECK(lk.strata[2].dimension == 2);
    CHECK(lk.strata[2].double_equator);

    // top stratum always has dimension n-1; count equals i
    for (int n = 4; n <= 9; ++n)
        for (int i = 1; i <= (n + 1) / 2; ++i) {
            LeafSpace ls = leaf_space(n, i);
            CHECK(static_cast<int>(ls.strata.size()) == i);
            CHECK(ls.strata.front().dimension == n - 1);
        }

    CHECK_THROWS_AS(leaf_space(6, 9), ParameterError);
    CHECK_THROWS_AS(leaf_space(6, 0), ParameterError);
}

TEST_CASE("involution on the stratum diagram") {
    StratumInvolution inv = involution_on_strata(6, 3);
    CHECK(inv.components == 7);

    // row counts 1,2,3,4,5,6 from dimension 5 down to 0
    std::map<int, int> rows;
    for (const auto& d : inv.strata) rows[d.dimension]++;
    CHECK(rows == std::map<int, int>{{0, 6}, {1, 5}, {2, 4}, {3, 3}, {4, 2}, {5, 1}});

    auto find = [&](int dim, int pos) -> int {
        for (size_t i = 0; i < inv.strata.size(); ++i)
            if (inv.strata[i].dimension == dim && inv.strata[i].row_position == pos)
                return static_cast<int>(i);
        FAIL("stratum not found");
        return -1;
    };

    // tau(S^0_j) = S^0_(7-j)
    for (int j = 1; j <= 6; ++j)
        CHECK(inv.image_of(find(0, j)).row_position == 7 - j);
    // tau(S^i_j) = S^i_(7-i-j): at i=1, j=3 the stratum is fixed
    CHECK(inv.image_of(find(1, 3)).row_position == 3);
    CHECK(inv.image_of(find(1, 1)).row_position == 5);
    CHECK(inv.image_of(find(3, 1)).row_position == 3);
    CHECK(inv.image_of(find(5, 1)).row_position == 1);

    // permutation is an involution preserving dimension
    for (size_t i = 0; i < inv.strata.size(); ++i) {
        const DiagramStratum& im = inv.image_of(static_cast<int>(i));
        CHECK(im.dimension == inv.strata[i].dimension);
        CHECK(inv.image_of(find(im.dimension, im.row_position)).row_position ==
              inv.strata[i].row_position);
    }

    // fixed strata are the centers of odd rows: dims 5, 3, 1 here
    int fixed = 0;
    for (const auto& [u, v] : inv.permutation)
        if (u == v) ++fixed;
    CHECK(fixed == 3);
}

TEST_CASE("analytic limits") {
    EigenSpec spec = spec_of({{Rational(2), 1}, {Rational(1), 1}, {Rational(1, 2), 1}});
    LimitPair full = analytic_limits(coords({1, 1, 1}), spec);
    CHECK(full.alpha == 1);
    CHECK(full.omega == 3);

    LimitPair fixedpt = analytic_limits(coords({0, 1, 0}), spec);
    CHECK(fixedpt.alpha == 2);
    CHECK(fixedpt.omega == 2);

    LimitPair partial = analytic_limits(coords({0, 1, 1}), spec);
    CHECK(partial.alpha == 2);
    CHECK(partial.omega == 3);

    CHECK_THROWS_AS(analytic_limits(coords({0, 0, 0}), spec), std::domain_error);
    CHECK_THROWS_AS(analytic_limits(coords({1, 1}), spec), ParameterError);
}

TEST_CASE("negating the weights reverses the flow") {
    Rng rng(90210);
    for (const auto& os : oracle_specs()) {
        EigenSpec neg = os.spec.negated();
        for (int s = 0; s < 50; ++s) {
            std::vector<Rational> pt;
            bool nonzero = false;
            for (int j = 0; j < os.spec.t(); ++j) {
                long v = rng.uniform_int(-4, 4);
                pt.emplace_back(v);
                nonzero = nonzero || v != 0;
            }
            if (!nonzero) continue;
            LimitPair fwd = analytic_limits(pt, os.spec);
            // component indices flip under weight reversal: j -> m+1-j
            const int m = os.spec.block_count();
            LimitPair rev = analytic_limits(pt, neg);
            CHECK(rev.alpha == m + 1 - fwd.omega);
            CHECK(rev.omega == m + 1 - fwd.alpha);
        }
    }
}

TEST_CASE("numeric oracle agrees with the analytic rule") {
    EigenSpec spec = spec_of({{Rational(1), 1}, {Rational(0), 1}, {Rational(-1), 1}});
    std::vector<double> p{1.0, 1.0, 1.0};
    NumericLimitResult r = numeric_limits_oracle(p, spec);
    REQUIRE(r.conclusive);
    CHECK(r.limits.alpha == 1);
    CHECK(r.limits.omega == 3);

    // support threshold: a 1e-12 coordinate is below 1e-10 and must come back
    // inconclusive; at 1e-8 it is classified by true support
    std::vector<double> tiny{1e-12, 1.0, 0.0};
    NumericLimitResult rt = numeric_limits_oracle(tiny, spec);
    CHECK_FALSE(rt.conclusive);
    std::vector<double> small{1e-8, 1.0, 0.0};
    NumericLimitResult rs = numeric_limits_oracle(small, spec);
    REQUIRE(rs.conclusive);
    CHECK(rs.limits.alpha == 1);
    CHECK(rs.limits.omega == 2);

    CHECK_THROWS_AS(numeric_limits_oracle(p, spec, -1.0), ParameterError);
}

TEST_CASE("oracle equivalence over seeded random points") {
    for (const auto& os : oracle_specs()) {
        OracleAgreement agg = run_flow_oracle(os, 17, 200);
        INFO(os.name);
        CHECK(agg.agreements == 200);
        CHECK(agg.inconclusive == 0);
        CHECK(agg.disagreements == 0);
    }
}

TEST_CASE("interval quotient and its involution") {
    IntervalStar s2 = interval_quotient(2);
    CHECK(s2.intervals == 3);
    CHECK(s2.doubled == 2);
    CHECK(s2.involution == std::vector<int>{3, 2, 1});
    CHECK(s2.origin_swap);
    CHECK(s2.self_inverse());

    IntervalStar s1 = interval_quotient(1);
    CHECK(s1.intervals == 1);
    CHECK(s1.involution == std::vector<int>{1});

    for (int i = 1; i <= 6; ++i) CHECK(interval_quotient(i).self_inverse());
    CHECK_THROWS_AS(interval_quotient(0), ParameterError);
}

TEST_CASE("embedding obstruction") {
    for (int i = 1; i <= 6; ++i) CHECK(invariant_embedding_obstruction(interval_quotient(i)));
    for (int i = 1; i <= 6; ++i) CHECK_FALSE(invariant_embedding_obstruction(identity_star(i)));

    // reflection without origin swap also admits an invariant arc
    IntervalStar noswap = interval_quotient(2);
    noswap.origin_swap = false;
    CHECK_FALSE(invariant_embedding_obstruction(noswap));
}

TEST_CASE("bundle leaf space") {
    LeafSpace b3 = bundle_leaf_space(3);
    CHECK(b3.kind == LeafSpace::Kind::Bundle);
    CHECK(b3.bundle_base_dim == 2);
    CHECK(b3.bundle_fiber_dim == 2);
    CHECK(b3.bundle_total_dim == 4);
    CHECK(b3.pullback_simply_connected);
    CHECK(b3.bundle_base_nonorientable); // RP^2
    CHECK(b3.bundle_forced_nontrivial);

    LeafSpace b4 = bundle_leaf_space(4);
    CHECK_FALSE(b4.bundle_base_nonorientable); // RP^3 is orientable

    CHECK_THROWS_AS(bundle_leaf_space(2), ParameterError);
}
