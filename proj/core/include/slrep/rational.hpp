#ifndef SLREP_RATIONAL_HPP
#define SLREP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "slrep/errors.hpp"

namespace slrep {

// Exact integers and rationals. GMP keeps mpq_class canonical
// (gcd(|num|, den) = 1, den >= 1) as long as values are built through
// arithmetic or through make_rational below.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(const Int& n, unsigned k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(unsigned n, unsigned k) { return binomial(Int(n), k); }

inline Int pow_int(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace slrep

#endif
