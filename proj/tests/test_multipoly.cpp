#include <doctest.h>

#include "slrep/multipoly.hpp"
#include "slrep/seeded.hpp"

using namespace slrep;

namespace {

MultiPoly x(int i, int n) { return MultiPoly::variable(i, n); }

MultiPoly random_poly(SeededSource& src, int n, int max_deg = 2) {
    MultiPoly p(n);
    int terms = static_cast<int>(src.next_int(1, 4));
    for (int t = 0; t < terms; ++t) {
        Monomial m(n, 0);
        int deg = static_cast<int>(src.next_int(0, max_deg));
        for (int d = 0; d < deg; ++d) m[src.next_int(0, n - 1)] += 1;
        p.add_term(m, make_rational(src.next_int(-9, 9)));
    }
    return p;
}

} // namespace

TEST_CASE("elementary symmetric polynomials") {
    // sigma_2(x1, x2, x3) = x1 x2 + x1 x3 + x2 x3
    MultiPoly expected = x(1, 3) * x(2, 3) + x(1, 3) * x(3, 3) + x(2, 3) * x(3, 3);
    CHECK(elementary_symmetric(2, {1, 2, 3}, 3) == expected);

    CHECK(elementary_symmetric(0, {1, 2}, 2) == MultiPoly::constant(Rational(1), 2));
    CHECK(elementary_symmetric(3, {1, 2}, 2).is_zero());
}

TEST_CASE("elementary symmetric against the generating product") {
    // prod_i (t + x_i) = sum_s sigma_s(x) t^{k-s}, with t adjoined as x5.
    const int n = 5;
    MultiPoly prod = MultiPoly::constant(Rational(1), n);
    for (int i = 1; i <= 4; ++i) prod = prod * (x(5, n) + x(i, n));
    for (int s = 0; s <= 4; ++s) {
        MultiPoly expected(n);
        for (const auto& [m, c] : prod.terms())
            if (m[4] == 4 - s) {
                Monomial t = m;
                t[4] = 0;
                expected.add_term(t, c);
            }
        CHECK(elementary_symmetric(s, {1, 2, 3, 4}, n) == expected);
    }
}

TEST_CASE("vandermonde products") {
    CHECK(vandermonde_product({1, 2}, 2) == x(1, 2) - x(2, 2));
    CHECK(vandermonde_product({2, 1}, 2) == -(x(1, 2) - x(2, 2)));
    MultiPoly expected =
        (x(1, 3) - x(2, 3)) * (x(1, 3) - x(3, 3)) * (x(2, 3) - x(3, 3));
    CHECK(vandermonde_product({1, 2, 3}, 3) == expected);
    CHECK(vandermonde_product({1, 1, 2}, 3).is_zero());
}

TEST_CASE("vandermonde changes sign under transpositions of the sequence") {
    SeededSource src(7);
    std::vector<int> seq{1, 2, 3, 4};
    MultiPoly base = vandermonde_product(seq, 4);
    for (int i = 0; i < 3; ++i) {
        auto swapped = seq;
        std::swap(swapped[i], swapped[i + 1]);
        CHECK(vandermonde_product(swapped, 4) == -base);
    }
}

TEST_CASE("graded lex leading terms") {
    // x1^2 beats x1 x2 beats x2^2 beats anything of lower degree.
    MultiPoly p = x(1, 2) * x(1, 2) + x(1, 2) * x(2, 2) + x(2, 2) + MultiPoly::constant(Rational(5), 2);
    CHECK(p.leading_monomial() == Monomial{2, 0});
    CHECK(p.degree() == 2);
    CHECK(p.degree_in(2) == 1);
}

TEST_CASE("exact division") {
    MultiPoly a = x(1, 2) * x(1, 2) - x(2, 2) * x(2, 2);
    MultiPoly b = x(1, 2) - x(2, 2);
    auto q = a.divided_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == x(1, 2) + x(2, 2));
    CHECK_FALSE((x(1, 2) + MultiPoly::constant(Rational(1), 2)).divided_exact(x(2, 2)).has_value());
}

TEST_CASE("gcd of multivariate polynomials") {
    const int n = 3;
    MultiPoly f = x(1, n) - x(2, n);
    MultiPoly g = x(2, n) + x(3, n);
    MultiPoly h = x(1, n) * x(3, n) + MultiPoly::constant(Rational(2), n);

    CHECK(poly_gcd(f * g, f * h) == f.primitive_part());
    CHECK(poly_gcd(f, g).is_one());
    CHECK(poly_gcd(MultiPoly::zero(n), f) == f.primitive_part());
    CHECK(poly_gcd(f, MultiPoly::constant(Rational(7), n)).is_one());

    // Content normalization: integer-primitive, positive leading coefficient.
    MultiPoly scaled = f * MultiPoly::constant(make_rational(-6, 4), n);
    CHECK(poly_gcd(scaled * g, scaled * h) == f.primitive_part());
}

TEST_CASE("gcd handles repeated factors and monomials") {
    const int n = 2;
    MultiPoly f = (x(1, n) - x(2, n)).pow(2);
    MultiPoly g = (x(1, n) - x(2, n)) * (x(1, n) + x(2, n));
    CHECK(poly_gcd(f, g) == (x(1, n) - x(2, n)));

    MultiPoly mono = MultiPoly::monomial(Rational(4), {3, 1});
    MultiPoly p = x(1, n) * x(1, n) * x(2, n) * (x(1, n) + x(2, n));
    CHECK(poly_gcd(mono, p) == MultiPoly::monomial(Rational(1), {2, 1}));
}

TEST_CASE("arithmetic is exact and canonical on random inputs") {
    SeededSource src(42);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(src.next_int(1, 4));
        MultiPoly f = random_poly(src, n), g = random_poly(src, n), h = random_poly(src, n);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK(f - f == MultiPoly::zero(n));
    }
}

TEST_CASE("permuting variables is a left action on polynomials") {
    SeededSource src(11);
    const int n = 4;
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly f = random_poly(src, n);
        std::vector<int> im1{2, 3, 4, 1}, im2{2, 1, 4, 3};
        Permutation p{im1}, q{im2};
        CHECK(f.permuted(p * q) == f.permuted(q).permuted(p));
    }
}

TEST_CASE("homogeneous parts decompose the polynomial") {
    SeededSource src(5);
    MultiPoly f = random_poly(src, 3, 3);
    MultiPoly sum(3);
    for (int d = 0; d <= f.degree(); ++d) sum = sum + f.homogeneous_part(d);
    CHECK(sum == f);
}
