#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "holoflow/constructions.hpp"
#include "holoflow/flow.hpp"
#include "holoflow/holonomy.hpp"
#include "holoflow/rational.hpp"
#include "holoflow/reference.hpp"

namespace holoflow {

using json = nlohmann::ordered_json;

inline json rationals_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(r.str());
    return arr;
}

// Matrix wire format: { "t": n, "entries": [["num/den", ...], ...] } row-major.
inline json matrix_to_json(const RationalMatrix& m) {
    json j;
    j["t"] = m.size();
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.size(); ++k) row.push_back(m(i, k).str());
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

inline RationalMatrix matrix_from_json(const json& j) {
    if (!j.contains("t") || !j.contains("entries")) throw ParameterError("matrix JSON needs 't' and 'entries'");
    int t = j.at("t").get<int>();
    const auto& rows = j.at("entries");
    if (t < 1 || static_cast<int>(rows.size()) != t) throw ParameterError("matrix JSON has inconsistent size");
    RationalMatrix m(t, Rational(0));
    for (int i = 0; i < t; ++i) {
        const auto& row = rows.at(static_cast<size_t>(i));
        if (static_cast<int>(row.size()) != t) throw ParameterError("matrix JSON row has wrong length");
        for (int k = 0; k < t; ++k) m(i, k) = Rational::parse(row.at(static_cast<size_t>(k)).get<std::string>());
    }
    return m;
}

inline RationalMatrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open matrix file '" + path + "'");
    json j;
    in >> j;
    return matrix_from_json(j);
}

inline json jacobian_report_to_json(const JacobianReport& rep) {
    json j;
    j["recipe"] = rep.recipe;
    j["t"] = rep.t;
    j["k"] = rep.k;
    j["point"] = rationals_to_json(rep.point);
    json rows = json::array();
    for (const auto& r : rep.jacobian) rows.push_back(rationals_to_json(r));
    j["jacobian"] = std::move(rows);
    j["det"] = rep.determinant.str();
    if (const JacobianClaim* claim = find_jacobian_claim(rep.recipe, rep.t, rep.point)) {
        Rational want = Rational::parse(claim->expected);
        j["matches_paper"] = rep.determinant == want;
        j["paper_value"] = want.str();
    }
    return j;
}

inline json symbolic_recipe_to_json(const PRecipe& recipe) {
    json j;
    j["recipe"] = recipe.id();
    j["t"] = recipe.t();
    j["k"] = recipe.arity();
    const auto names = recipe.var_names();
    json rows = json::array();
    for (const auto& row : recipe.symbolic()) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.str(names));
        rows.push_back(std::move(r));
    }
    j["entries"] = std::move(rows);
    return j;
}

inline json admissibility_to_json(const AdmissibilityReport& rep) {
    json j;
    j["distinct_eigenvalue_count"] = rep.distinct_eigenvalue_count;
    j["expected"] = rep.expected;
    j["multiplicity_of_one"] = rep.multiplicity_of_one;
    j["reciprocal"] = rep.reciprocal;
    j["admissible"] = rep.admissible;
    return j;
}

inline json leafspace_to_json(int n, int i) {
    EigenSpec spec = canonical_flow_spec(n, i);
    json j;
    j["n"] = n;
    j["i"] = i;

    json comps = json::array();
    for (const auto& c : fixed_components(spec)) {
        json e;
        e["index"] = c.index;
        e["kind"] = c.kind();
        e["dimension"] = c.dimension;
        comps.push_back(std::move(e));
    }
    j["components"] = std::move(comps);

    const int m = spec.block_count();
    json strata = json::array();
    for (int b = 1; b <= m; ++b)
        for (int a = 1; a <= m; ++a) {
            FlowlineStratum s = flowline_stratum(spec, a, b);
            json e;
            e["source"] = a;
            e["sink"] = b;
            e["dim"] = s.dimension;
            e["descriptor"] = s.descriptor;
            strata.push_back(std::move(e));
        }
    j["strata"] = std::move(strata);

    json ls = json::array();
    for (const auto& s : leaf_space(n, i).strata) {
        json e;
        e["dimension"] = s.dimension;
        e["double_equator"] = s.double_equator;
        ls.push_back(std::move(e));
    }
    j["leaf_space"] = std::move(ls);

    StratumInvolution inv = involution_on_strata(n, i);
    json pairs = json::array();
    json fixed = json::array();
    for (const auto& [u, v] : inv.permutation) {
        if (u == v) {
            json e;
            e["label"] = inv.strata[static_cast<size_t>(u)].label();
            e["origins_swapped"] = inv.strata[static_cast<size_t>(u)].double_equator;
            fixed.push_back(std::move(e));
        } else {
            pairs.push_back(json::array(
                {inv.strata[static_cast<size_t>(u)].label(), inv.strata[static_cast<size_t>(v)].label()}));
        }
    }
    json invj;
    invj["pairs"] = std::move(pairs);
    invj["fixed"] = std::move(fixed);
    j["involution"] = std::move(invj);
    return j;
}

inline json interval_star_to_json(const IntervalStar& star) {
    json j;
    j["intervals"] = star.intervals;
    j["doubled"] = star.doubled;
    j["involution"] = star.involution;
    j["origin_swap"] = star.origin_swap;
    j["obstruction"] = invariant_embedding_obstruction(star);
    return j;
}

// One row of a verification report.
struct ClaimResult {
    std::string claim;
    std::optional<std::string> expected; // reference value when one applies
    std::string computed;
    bool match = false;
    std::optional<std::string> note;
};

struct VerificationReport {
    std::string command;
    json inputs = json::object();
    std::vector<ClaimResult> results;

    bool all_match() const {
        for (const auto& r : results)
            if (!r.match) return false;
        return true;
    }
};

// Timing is kept out of the serialized report so identical command + seed
// produce byte-identical JSON.
inline json verification_to_json(const VerificationReport& rep) {
    json j;
    j["artifact_version"] = kVersion;
    j["command"] = rep.command;
    j["inputs"] = rep.inputs;
    json rows = json::array();
    for (const auto& r : rep.results) {
        json e;
        e["claim"] = r.claim;
        if (r.expected) e["paper_value"] = *r.expected;
        e["computed"] = r.computed;
        e["match"] = r.match;
        if (r.note) e["note"] = *r.note;
        rows.push_back(std::move(e));
    }
    j["results"] = std::move(rows);
    j["all_match"] = rep.all_match();
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write JSON file '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace holoflow
