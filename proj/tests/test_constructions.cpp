#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "holoflow/constructions.hpp"
#include "holoflow/rng.hpp"

using namespace holoflow;

TEST_CASE("diagonal involutions") {
    RationalMatrix a = build_involution(InvolutionProfile::diagonal_pm(7, 3));
    for (int i = 0; i < 7; ++i)
        CHECK(a(i, i) == (i < 3 ? Rational(-1) : Rational(1)));
    CHECK(a * a == identity(7));

    CHECK_THROWS_AS(InvolutionProfile::diagonal_pm(4, 3), ProfileError);
    CHECK_THROWS_AS(InvolutionProfile::diagonal_pm(5, 0), ProfileError);
}

TEST_CASE("symplectic involutions") {
    RationalMatrix a = build_involution(InvolutionProfile::symplectic(4));
    RationalMatrix want(4, Rational(0));
    want(0, 1) = Rational(1);
    want(1, 0) = Rational(-1);
    want(2, 3) = Rational(1);
    want(3, 2) = Rational(-1);
    CHECK(a == want);
    CHECK(a * a == -identity(4));
    CHECK_THROWS_AS(InvolutionProfile::symplectic(5), ProfileError);
}

TEST_CASE("involution squares for all sizes up to 14") {
    for (int t = 2; t <= 14; ++t) {
        for (int k = 1; k <= t / 2; ++k) {
            RationalMatrix a = build_involution(InvolutionProfile::diagonal_pm(t, k));
            CHECK(a * a == identity(t));
        }
        if (t % 2 == 0) {
            RationalMatrix s = build_involution(InvolutionProfile::symplectic(t));
            CHECK(s * s == -identity(t));
        }
    }
}

namespace {

std::vector<std::vector<std::string>> render(const PRecipe& recipe) {
    const auto names = recipe.var_names();
    std::vector<std::vector<std::string>> out;
    for (const auto& row : recipe.symbolic()) {
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(e.str(names));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

TEST_CASE("case2 t=9 reproduces the displayed conjugator entry for entry") {
    const std::vector<std::vector<std::string>> want = {
        {"1", "y+x", "0", "1", "0", "1", "0", "y", "0"},
        {"0", "1", "0", "0", "0", "0", "0", "0", "1"},
        {"1", "0", "1", "0", "0", "0", "0", "0", "0"},
        {"y", "0", "0", "1", "0", "0", "0", "0", "1"},
        {"1", "0", "0", "0", "1", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "1", "0", "0", "x"},
        {"1", "0", "0", "0", "0", "0", "1", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "1", "1"},
        {"1", "x", "0", "0", "0", "0", "0", "y-x", "0"},
    };
    CHECK(render(PRecipe::case2(9)) == want);
}

TEST_CASE("case3 t=13 k=5 reproduces the displayed conjugator") {
    const std::vector<std::vector<std::string>> want = {
        {"1", "x2", "0", "0", "0", "0", "x3", "0", "0", "0", "0", "x1", "0"},
        {"0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "x3", "x2", "0"},
        {"0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "x2", "0", "0"},
        {"0", "0", "0", "1", "0", "0", "0", "0", "0", "x5", "0", "0", "0"},
        {"0", "0", "0", "0", "1", "0", "0", "0", "x4", "0", "0", "0", "0"},
        {"x2", "0", "0", "0", "0", "1", "0", "x1", "0", "0", "0", "0", "x3"},
        {"1", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0"},
        {"x3", "0", "0", "0", "0", "x1", "0", "1", "0", "0", "0", "0", "x1"},
        {"0", "0", "0", "0", "x4", "0", "0", "0", "1", "0", "0", "0", "0"},
        {"0", "0", "0", "x5", "0", "0", "0", "0", "0", "1", "0", "0", "0"},
        {"0", "0", "x2", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0"},
        {"1", "x2", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0"},
        {"0", "x3", "0", "0", "0", "0", "0", "0", "0", "0", "0", "x2", "1"},
    };
    CHECK(render(PRecipe::case3(13, 5)) == want);
}

TEST_CASE("case3 t=14 k=6 reproduces the displayed conjugator") {
    const std::vector<std::vector<std::string>> want = {
        {"1", "x2", "0", "0", "0", "0", "x3", "x3", "0", "0", "0", "0", "x1", "0"},
        {"0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "x3", "x2", "0"},
        {"0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "x2", "0", "0"},
        {"0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "x5", "0", "0", "0"},
        {"0", "0", "0", "0", "1", "0", "0", "0", "0", "x6", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "0", "1", "0", "0", "x4", "0", "0", "0", "0", "0"},
        {"x2", "0", "0", "0", "0", "0", "1", "x1", "0", "0", "0", "0", "0", "x3"},
        {"x3", "0", "0", "0", "0", "0", "x1", "1", "0", "0", "0", "0", "0", "x1"},
        {"0", "0", "0", "0", "0", "x4", "0", "0", "1", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "x6", "0", "0", "0", "0", "1", "0", "0", "0", "0"},
        {"0", "0", "0", "x5", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"},
        {"0", "0", "x2", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0"},
        {"1", "x2", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0"},
        {"0", "x3", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "x2", "1"},
    };
    CHECK(render(PRecipe::case3(14, 6)) == want);
}

TEST_CASE("recipe evaluation and arity checks") {
    PRecipe r = PRecipe::case1(5);
    std::vector<Rational> x1{Rational(1)};
    RationalMatrix p = r.evaluate(x1);
    CHECK(!p.det().is_zero()); // invertible at x=1
    CHECK(p(4, 1) == Rational(1));

    CHECK_THROWS_AS(r.evaluate(std::vector<Rational>{Rational(1), Rational(2)}), ParameterError);
    CHECK_THROWS_AS(PRecipe::case3(13, 2), RecipeError);
    CHECK_THROWS_AS(PRecipe::case3(6, 4), RecipeError); // k exceeds floor(t/2)
    CHECK_THROWS_AS(PRecipe::by_id("case9", 6, 0), RecipeError);
}

TEST_CASE("generic recipe points are invertible") {
    // degenerate points exist but are thin: demand >= 95 of 100 seeded draws
    std::vector<PRecipe> recipes;
    for (int t : {5, 6, 9, 10, 13})
        recipes.push_back(t % 2 ? PRecipe::case1(t) : PRecipe::case2(t));
    recipes.push_back(PRecipe::case3(13, 5));
    recipes.push_back(PRecipe::case3(14, 6));
    recipes.push_back(PRecipe::case3(8, 4));
    for (const auto& recipe : recipes) {
        Rng rng(808 + static_cast<uint64_t>(recipe.t()));
        int invertible = 0;
        for (int s = 0; s < 100; ++s) {
            std::vector<Rational> pt;
            for (int j = 0; j < recipe.arity(); ++j) pt.emplace_back(rng.uniform_int(-5, 5));
            if (!recipe.evaluate(pt).det().is_zero()) ++invertible;
        }
        INFO(recipe.id() << " t=" << recipe.t());
        CHECK(invertible >= 95);
    }
}

TEST_CASE("diagonal generator construction") {
    EigenSpec spec({{Rational(2), 1}, {Rational(1), 1}, {Rational(1, 2), 1}});
    CHECK(build_C_diag(spec) == diagonal({Rational(2), Rational(1), Rational(1, 2)}));
    CHECK(spec.reciprocal_closed());

    CHECK_THROWS_AS(EigenSpec({{Rational(2), 2}, {Rational(1), 1}, {Rational(2), 1}}), SpecError);
    CHECK_THROWS_AS(EigenSpec({{Rational(2), 0}}), SpecError);

    // round trip through the diagonal
    EigenSpec spec2({{Rational(3), 2}, {Rational(1), 3}, {Rational(1, 3), 2}});
    EigenSpec back = EigenSpec::from_diagonal(build_C_diag(spec2));
    CHECK(back.blocks() == spec2.blocks());

    // the interleaved eigenvalue order is a conjugate of the canonical one:
    // same trace, determinant and charpoly
    RationalMatrix canonical = build_C_diag(EigenSpec(
        {{Rational(3), 1}, {Rational(2), 1}, {Rational(1), 2}, {Rational(1, 2), 1}, {Rational(1, 3), 1}}));
    RationalMatrix interleaved = diagonal(
        {Rational(2), Rational(3), Rational(1, 2), Rational(1, 3), Rational(1), Rational(1)});
    CHECK(canonical.trace() == interleaved.trace());
    CHECK(charpoly(canonical) == charpoly(interleaved));
}

TEST_CASE("linform rendering") {
    LinForm zero = LinForm::constant(Rational(0), 2);
    LinForm one = LinForm::constant(Rational(1), 2);
    LinForm x = LinForm::variable(0, 2);
    LinForm y = LinForm::variable(1, 2);
    std::vector<std::string> names{"x", "y"};
    CHECK(zero.str(names) == "0");
    CHECK(one.str(names) == "1");
    CHECK((y + x).str(names) == "y+x");
    CHECK((y - x).str(names) == "y-x");
    CHECK((x - y).str(names) == "-y+x");
    CHECK(x.str(names) == "x");
}
