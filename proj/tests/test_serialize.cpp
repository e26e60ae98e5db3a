#include <doctest.h>

#include "slrep/serialize.hpp"
#include "slrep/unipmod.hpp"

using namespace slrep;

TEST_CASE("cocycle module round trip") {
    DifferenceModule m = standard_sum({2, 1}, 3);
    json j = to_json(m.underlying);
    CHECK(cocycle_module_from_json(j) == m.underlying);
    // Determinism: dumping twice is byte-identical.
    CHECK(j.dump() == to_json(m.underlying).dump());
    CHECK(j.at("level") == 3);
    CHECK(j.at("rank") == 3);
}

TEST_CASE("witness round trip") {
    RfMatrix phi = RfMatrix::identity(2, 3);
    phi.at(0, 1) = parse_ratfunc("(x1 - x2)/(x2 - x3)", 3);
    TrivializationWitness w{phi};
    json j = to_json(w, 3);
    CHECK(witness_from_json(j, 3).phi == phi);
}

TEST_CASE("subgroup spec and canonical form round trip") {
    OpenSubgroupSpec spec;
    spec.support = {1, 2};
    spec.window = {1, 2, 3};
    spec.extra_gens = {Permutation::transposition(8, 1, 2)};
    json j = to_json(spec);
    OpenSubgroupSpec back = subgroup_spec_from_json(j, 8);
    CHECK(back.support == spec.support);
    CHECK(back.window == spec.window);
    CHECK(back.extra_gens == spec.extra_gens);

    CanonicalOpenSubgroup canon = canonicalize_open_subgroup(spec, 8);
    json cj = to_json(canon);
    CHECK(canonical_subgroup_from_json(cj) == canon);
    // T ascending and H lexicographically sorted by construction.
    CHECK(std::is_sorted(canon.T.begin(), canon.T.end()));
    CHECK(std::is_sorted(canon.H.begin(), canon.H.end()));
}

TEST_CASE("perm module expression round trip") {
    PermModuleExpr e = product_decompose(2, 3);
    json j = to_json(e);
    CHECK(perm_module_expr_from_json(j) == e);
}

TEST_CASE("classification report shape") {
    Classification c = classify_module(standard_sum({2, 1}, 3), 3);
    json j = classification_to_json(c);
    CHECK(j.at("rank") == 3);
    CHECK(j.at("jordan") == json::array({2, 1}));
    CHECK(j.at("nu").size() == 3);
}
