#include <doctest.h>

#include "slrep/matrix.hpp"

using namespace slrep;

namespace {

RfMatrix from_strings(std::vector<std::vector<std::string>> rows, int n) {
    RfMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = parse_ratfunc(rows[r][c], n);
    return m;
}

} // namespace

TEST_CASE("rank of exact matrices") {
    CHECK(rank_exact(RfMatrix::identity(3, 1)) == 3);
    CHECK(rank_exact(from_strings({{"1", "x1"}, {"1", "x2"}}, 2)) == 2);
    CHECK(rank_exact(from_strings({{"x1", "x2"}, {"2*x1", "2*x2"}}, 2)) == 1);
}

TEST_CASE("specialized rank never exceeds exact rank") {
    SeededSource src(123);
    CHECK(rank_specialized(RfMatrix::identity(3, 1), src) == 3);
    CHECK(rank_specialized(from_strings({{"1", "x1"}, {"1", "x2"}}, 2), src) == 2);
    RfMatrix zero(2, 3, 2);
    CHECK(rank_specialized(zero, src) == 0);

    SeededSource gen(77);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(gen.next_int(1, 3));
        int rows = static_cast<int>(gen.next_int(1, 4));
        int cols = static_cast<int>(gen.next_int(1, 4));
        RfMatrix m(rows, cols, n);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                MultiPoly p = MultiPoly::constant(make_rational(gen.next_int(-4, 4)), n);
                if (gen.next_int(0, 1)) p = p + MultiPoly::variable(static_cast<int>(gen.next_int(1, n)), n);
                m.at(r, c) = RatFunc::from_poly(p);
            }
        SeededSource spec(trial);
        CHECK(rank_specialized(m, spec) <= rank_exact(m));
    }
}

TEST_CASE("determinant and inverse") {
    RfMatrix m = from_strings({{"1", "x1"}, {"1", "x2"}}, 2);
    CHECK(m.det() == parse_ratfunc("x2 - x1", 2));
    RfMatrix inv = m.inverted();
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());

    RfMatrix singular = from_strings({{"x1", "x2"}, {"2*x1", "2*x2"}}, 2);
    CHECK(singular.det().is_zero());
    CHECK_THROWS_AS(singular.inverted(), domain_error);
}

TEST_CASE("kernel basis is canonical and annihilates") {
    RfMatrix m = from_strings({{"1", "x1", "x1"}, {"1", "x2", "x2"}}, 2);
    auto kernel = kernel_basis(m);
    REQUIRE(kernel.size() == 1);
    for (int r = 0; r < m.rows(); ++r) {
        RatFunc acc(2);
        for (int c = 0; c < m.cols(); ++c) acc = acc + m.at(r, c) * kernel[0][c];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("kronecker and block structure") {
    RfMatrix a = from_strings({{"x1", "0"}, {"0", "1"}}, 2);
    RfMatrix b = from_strings({{"0", "1"}, {"1", "0"}}, 2);
    RfMatrix kron = a.kronecker(b);
    CHECK(kron.rows() == 4);
    CHECK(kron.at(0, 1) == parse_ratfunc("x1", 2));
    CHECK(kron.at(0, 0).is_zero());

    RfMatrix blocks = a.block_diag(b);
    CHECK(blocks.rows() == 4);
    CHECK(rank_exact(blocks) == 4);
}

TEST_CASE("rational matrix helpers") {
    QMatrix q(2, 2);
    q.at(0, 0) = 1;
    q.at(0, 1) = make_rational(1, 2);
    q.at(1, 0) = 2;
    q.at(1, 1) = 1;
    CHECK(q.det() == 0);
    CHECK(q.rank() == 1);
    auto kernel = q.kernel();
    REQUIRE(kernel.size() == 1);

    QMatrix nilpotent(2, 2);
    nilpotent.at(0, 1) = 1;
    CHECK((nilpotent * nilpotent).is_zero());
    CHECK(nilpotent.pow(2).is_zero());

    QMatrix inv = QMatrix::identity(3).scaled(make_rational(2)).inverted();
    CHECK(inv.at(0, 0) == make_rational(1, 2));
}
