#include <doctest.h>

#include "slrep/permgroup.hpp"

using namespace slrep;

TEST_CASE("stabilizer join computes the intersection with certification") {
    // <stab({1,2}), stab({2,3})> = stab({2}) inside S_5; order 4! = 24.
    CHECK(stabilizer_join({1, 2}, {2, 3}, 5, true) == std::vector<int>{2});
    {
        std::vector<Permutation> gens = pointwise_stabilizer_gens({1, 2}, 5);
        for (auto& g : pointwise_stabilizer_gens({2, 3}, 5)) gens.push_back(g);
        CHECK(group_order(gens, 5) == 24);
    }

    CHECK(stabilizer_join({1}, {1}, 3, true) == std::vector<int>{1});

    // Disjoint supports generate everything: S_5 closure of order 120.
    CHECK(stabilizer_join({1}, {2}, 5, true).empty());
    {
        std::vector<Permutation> gens = pointwise_stabilizer_gens({1}, 5);
        for (auto& g : pointwise_stabilizer_gens({2}, 5)) gens.push_back(g);
        CHECK(group_order(gens, 5) == 120);
    }
}

TEST_CASE("stabilizer join demands room for the embedding argument") {
    CHECK_THROWS_AS(stabilizer_join({1, 2}, {3, 4}, 4, false), domain_error);
}

TEST_CASE("closure cap raises a resource error") {
    std::vector<Permutation> gens;
    for (int i = 1; i < 8; ++i) gens.push_back(Permutation::adjacent(8, i));
    CHECK_THROWS_AS(group_closure(gens, 8, 1000), resource_error);
}

TEST_CASE("canonicalize open subgroups") {
    // Full point group on the support.
    {
        OpenSubgroupSpec spec{{1, 2}, {1, 2}, {Permutation::transposition(6, 1, 2)}};
        auto canon = canonicalize_open_subgroup(spec, 6);
        CHECK(canon.T == std::vector<int>{1, 2});
        CHECK(canon.H.size() == 2);
        CHECK(verify_canonical_subgroup(spec, canon, 6));
    }
    // Pointwise stabilizer alone: trivial H.
    {
        OpenSubgroupSpec spec{{1, 2}, {1, 2}, {}};
        auto canon = canonicalize_open_subgroup(spec, 6);
        CHECK(canon.T == std::vector<int>{1, 2});
        CHECK(canon.H == std::vector<std::vector<int>>{{1, 2}});
        CHECK(verify_canonical_subgroup(spec, canon, 6));
    }
    // Cyclic of order 3 in a window of size 6.
    {
        Permutation cycle({2, 3, 1, 4, 5, 6});
        OpenSubgroupSpec spec{{1, 2, 3}, {1, 2, 3}, {cycle}};
        auto canon = canonicalize_open_subgroup(spec, 6);
        CHECK(canon.T == std::vector<int>{1, 2, 3});
        CHECK(canon.H.size() == 3);
        CHECK(verify_canonical_subgroup(spec, canon, 6));
    }
}

TEST_CASE("canonicalization shrinks movable supports") {
    // The generator moves 2 off the support, so only {1} survives.
    Permutation g = Permutation::transposition(8, 2, 3);
    OpenSubgroupSpec spec{{1, 2}, {1, 2, 3}, {g}};
    auto canon = canonicalize_open_subgroup(spec, 8);
    CHECK(canon.T == std::vector<int>{1});
    CHECK(canon.H == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("canonicalization is presentation-invariant") {
    Permutation cycle({2, 3, 1, 4, 5, 6, 7, 8});
    OpenSubgroupSpec spec{{1, 2, 3}, {1, 2, 3}, {cycle}};
    auto canon = canonicalize_open_subgroup(spec, 8);

    OpenSubgroupSpec redundant = spec;
    redundant.extra_gens.push_back(cycle * cycle);  // already in the group
    CHECK(canonicalize_open_subgroup(redundant, 8) == canon);
}

TEST_CASE("invalid specs are rejected") {
    OpenSubgroupSpec spec{{1, 2}, {1, 2}, {Permutation::transposition(8, 2, 5)}};
    CHECK_THROWS_AS(canonicalize_open_subgroup(spec, 8), domain_error);

    OpenSubgroupSpec too_small{{1, 2, 3}, {1, 2, 3, 4}, {}};
    CHECK_THROWS_AS(canonicalize_open_subgroup(too_small, 6), domain_error);
}

TEST_CASE("embedding counts") {
    CHECK(embedding_count({1, 0}, 2, 4) == 12);
    CHECK(embedding_count({1, 0}, 0, 9) == 1);
    CHECK(embedding_count({2, 0}, 1, 2) == 3);  // nonzero vectors of F_2^2
    CHECK(embedding_count({1, 0}, 5, 3) == 0);
    CHECK(embedding_count({3, 0}, 2, 3) == (27 - 1) * (27 - 3));
}

TEST_CASE("growth bound chain") {
    CHECK(growth_bounds_check({1, 0}, 1, 0, 10));
    CHECK(growth_bounds_check({1, 0}, 0, 3, 7));
    CHECK(growth_bounds_check({2, 1}, 2, 1, 6));
    for (long q : {1L, 2L, 3L})
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= 2; ++m)
                for (int N = n + m; N <= 8; ++N)
                    CHECK(growth_bounds_check({q, q == 1 ? 0 : 1}, n, m, N));
}
