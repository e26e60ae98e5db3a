#ifndef SLREP_TEST_SUPPORT_HPP
#define SLREP_TEST_SUPPORT_HPP

#include "slrep/matrix.hpp"
#include "slrep/seeded.hpp"

namespace slrep::testsupport {

inline MultiPoly random_degree1_poly(SeededSource& src, int n, long lo = -9, long hi = 9) {
    MultiPoly p = MultiPoly::constant(make_rational(src.next_int(lo, hi)), n);
    for (int v = 1; v <= n; ++v) {
        long k = src.next_int(lo, hi);
        if (k != 0) p = p + MultiPoly::variable(v, n) * make_rational(k);
    }
    return p;
}

inline RfMatrix random_dense_matrix(SeededSource& src, int N, int n) {
    RfMatrix m(N, N, n);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) m.at(r, c) = RatFunc::from_poly(random_degree1_poly(src, N ? n : n));
    return m;
}

/// Random invertible matrix with a monomial determinant: unit lower
/// triangular times a diagonal of variables/constants times unit upper
/// triangular, all with degree <= 1 entries. Keeps the denominators of the
/// induced coboundary (and of Hilbert-90 averages over S_n) monomial, so
/// exact round trips stay cheap at n = 4.
inline RfMatrix random_monomial_det_matrix(SeededSource& src, int N, int n) {
    RfMatrix L = RfMatrix::identity(N, n), U = RfMatrix::identity(N, n), D(N, N, n);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            if (r > c) L.at(r, c) = RatFunc::from_poly(random_degree1_poly(src, n, -4, 4));
            if (r < c) U.at(r, c) = RatFunc::from_poly(random_degree1_poly(src, n, -4, 4));
        }
    for (int i = 0; i < N; ++i) {
        long pick = src.next_int(0, n);
        if (pick == 0) {
            long c = src.next_int(1, 5);
            D.at(i, i) = RatFunc::constant(make_rational(c), n);
        } else {
            D.at(i, i) = RatFunc::variable(static_cast<int>(pick), n);
        }
    }
    return L * D * U;
}

} // namespace slrep::testsupport

#endif
