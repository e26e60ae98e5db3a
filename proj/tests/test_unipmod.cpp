#include <doctest.h>

#include "slrep/unipmod.hpp"

using namespace slrep;

namespace {

RfMatrix from_strings(std::vector<std::vector<std::string>> rows, int n) {
    RfMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = parse_ratfunc(rows[r][c], n);
    return m;
}

/// Random invertible matrix with entries polynomial in the differences
/// x_i - x_{i+1}, the conjugators the classification must be blind to.
RfMatrix random_difference_conjugator(SeededSource& src, int N, int n, int degree) {
    while (true) {
        RfMatrix m(N, N, n);
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                RatFunc e = RatFunc::constant(make_rational(src.next_int(-4, 4)), n);
                for (int d = 0; d < degree; ++d) {
                    int i = static_cast<int>(src.next_int(1, n - 1));
                    RatFunc diff = RatFunc::variable(i, n) - RatFunc::variable(i + 1, n);
                    long k = src.next_int(-3, 3);
                    if (k != 0) e = e + RatFunc::constant(make_rational(k), n) * diff;
                }
                m.at(r, c) = e;
            }
        if (!m.det().is_zero()) return m;
    }
}

} // namespace

TEST_CASE("standard indecomposables") {
    DifferenceModule m1 = standard_indecomposable(1, 3);
    CHECK(m1.underlying == CocycleModule::trivial(3, 1));

    DifferenceModule m2 = standard_indecomposable(2, 3);
    CHECK(m2.underlying.gen_matrix(1) == from_strings({{"1", "x2 - x1"}, {"0", "1"}}, 3));
    CHECK(m2.underlying.gen_matrix(2) == RfMatrix::identity(2, 3));

    DifferenceModule m3 = standard_indecomposable(3, 2);
    CHECK(m3.underlying.gen_matrix(1) ==
          from_strings({{"1", "x2 - x1", "x2^2 - 2*x1*x2 + x1^2"},
                        {"0", "1", "2*x2 - 2*x1"},
                        {"0", "0", "1"}},
                       2));

    CHECK_THROWS_AS(standard_indecomposable(0, 3), domain_error);
    CHECK_THROWS_AS(standard_indecomposable(2, 1), domain_error);
}

TEST_CASE("standard modules are valid difference modules") {
    for (int N = 1; N <= 3; ++N)
        for (int n = 2; n <= 4; ++n) {
            DifferenceModule m = standard_indecomposable(N, n);
            CHECK(validate_difference_module(m));
        }
    // A module with an absolute coordinate in an entry is not one.
    std::vector<RfMatrix> gens{from_strings({{"x1/x2"}}, 2)};
    DifferenceModule bad{CocycleModule(2, 1, std::move(gens))};
    CHECK_FALSE(validate_difference_module(bad));
}

TEST_CASE("shift invariance test") {
    CHECK(is_shift_invariant(parse_ratfunc("x1 - x2", 2)));
    CHECK(is_shift_invariant(parse_ratfunc("(x1 - x2)^2/(x2 - x3)", 3)));
    CHECK(is_shift_invariant(parse_ratfunc("5", 2)));
    CHECK_FALSE(is_shift_invariant(parse_ratfunc("x1", 2)));
    CHECK_FALSE(is_shift_invariant(parse_ratfunc("x1/x2", 2)));
}

TEST_CASE("one-parameter extraction from adapted witnesses") {
    {
        DifferenceModule m{CocycleModule::trivial(2, 2)};
        OneParamFamily fam = one_param_extract(m, TrivializationWitness{RfMatrix::identity(2, 2)});
        CHECK(fam.nu.is_zero());
        CHECK(fam.family.size() == 1);
    }
    {
        // Monomial-basis witness for the rank-2 standard module.
        DifferenceModule m = standard_indecomposable(2, 2);
        TrivializationWitness w{from_strings({{"1", "-x1"}, {"0", "1"}}, 2)};
        OneParamFamily fam = one_param_extract(m, w);
        QMatrix expected(2, 2);
        expected.at(0, 1) = -1;
        CHECK(fam.nu == expected);
        REQUIRE(fam.family.size() == 2);
        CHECK(fam.family[1] == expected);
        CHECK(jordan_lengths(fam) == std::vector<int>{2});
    }
    {
        // Rank-3 standard with the monomial-basis witness exp(-x1 W).
        DifferenceModule m = standard_indecomposable(3, 2);
        TrivializationWitness w{from_strings(
            {{"1", "-x1", "x1^2"}, {"0", "1", "-2*x1"}, {"0", "0", "1"}}, 2)};
        OneParamFamily fam = one_param_extract(m, w);
        CHECK(jordan_lengths(fam) == std::vector<int>{3});
        QMatrix expected(3, 3);
        expected.at(0, 1) = -1;
        expected.at(1, 2) = -2;
        CHECK(fam.nu == expected);
    }
}

TEST_CASE("extraction rejects witnesses not adapted to the shift") {
    // (x1 + x2) I is a perfectly valid witness for the trivial module but
    // shifts to a genuinely x-dependent cocycle.
    DifferenceModule m{CocycleModule::trivial(2, 1)};
    TrivializationWitness w{from_strings({{"x1 + x2"}}, 2)};
    CHECK(witness_is_valid(m.underlying, w));
    CHECK_THROWS_AS(one_param_extract(m, w), inconsistency_error);
}

TEST_CASE("jordan lengths from nilpotent structure") {
    {
        OneParamFamily fam;
        fam.nu = QMatrix(3, 3);
        fam.family = exp_lambda(fam.nu);
        CHECK(jordan_lengths(fam) == std::vector<int>{1, 1, 1});
    }
    {
        // Block diagonal of sizes 2 and 1.
        QMatrix nu(3, 3);
        nu.at(0, 1) = 1;
        OneParamFamily fam;
        fam.nu = nu;
        fam.family = exp_lambda(nu);
        CHECK(jordan_lengths(fam) == std::vector<int>{2, 1});
    }
}

TEST_CASE("partitions are enumerated deterministically") {
    auto parts = partitions_of(4);
    REQUIRE(parts.size() == 5);
    CHECK(parts[0] == std::vector<int>{4});
    CHECK(parts[1] == std::vector<int>{3, 1});
    CHECK(parts[2] == std::vector<int>{2, 2});
    CHECK(parts[3] == std::vector<int>{2, 1, 1});
    CHECK(parts[4] == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("classification of plain standard sums") {
    CHECK(classify_module(DifferenceModule{CocycleModule::trivial(3, 2)}, 5).jordan ==
          std::vector<int>{1, 1});
    CHECK(classify_module(standard_indecomposable(4, 3), 5).jordan == std::vector<int>{4});
    CHECK(classify_module(standard_sum({1, 1, 2}, 3), 5).jordan == std::vector<int>{2, 1, 1});
}

TEST_CASE("classification is blind to difference-subfield conjugation") {
    SeededSource src(404);
    const int n = 3;
    for (const auto& parts : {std::vector<int>{2}, std::vector<int>{2, 1}, std::vector<int>{3}}) {
        DifferenceModule m = standard_sum(parts, n);
        int N = m.underlying.rank();
        for (int trial = 0; trial < 3; ++trial) {
            RfMatrix A = random_difference_conjugator(src, N, n, 1);
            DifferenceModule conj{conjugate_module(m.underlying, A)};
            CHECK(validate_difference_module(conj));
            Classification c = classify_module(conj, 99 + trial);
            CHECK(c.jordan == parts);
            // The witness and the family pass their own verification en route;
            // nu's Jordan structure is the one constructed.
            CHECK(witness_is_valid(conj.underlying, c.witness));
        }
    }
}

TEST_CASE("same multiset means an explicit basis change over the difference field") {
    SeededSource src(11);
    const int n = 3;
    DifferenceModule m1 = standard_sum({2, 1}, n);
    RfMatrix A = random_difference_conjugator(src, 3, n, 1);
    DifferenceModule m2{conjugate_module(m1.underlying, A)};

    Classification c1 = classify_module(m1, 1);
    Classification c2 = classify_module(m2, 2);
    REQUIRE(c1.jordan == c2.jordan);

    // phi2 = Y^{-1} phi1 up to the standard factor, so the intertwiner
    // Y = phi1 phi2^{-1} is over the difference subfield and maps m1 to m2:
    // f2 = Y^{-1} f1 sigma(Y).
    RfMatrix Y = c1.witness.phi * c2.witness.phi.inverted();
    for (int r = 0; r < Y.rows(); ++r)
        for (int c = 0; c < Y.cols(); ++c) CHECK(is_shift_invariant(Y.at(r, c)));
    CHECK(conjugate_module(m1.underlying, Y) == m2.underlying);
}
