#ifndef SLREP_MULTIPOLY_HPP
#define SLREP_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slrep/permutation.hpp"
#include "slrep/rational.hpp"

namespace slrep {

/// Exponent vector indexed by variable 1..n (0-based storage).
using Monomial = std::vector<int>;

/// Graded lexicographic order: compare total degree first, then
/// exponents left to right. The largest term is the leading term.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int total_degree(const Monomial& m);

/// Sparse multivariate polynomial over the rationals in variables x1..xn.
/// Terms are kept in a map ordered by graded lex, never storing a zero
/// coefficient, so equal values have identical representations.
class MultiPoly {
public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(const Rational& c, int nvars);
    static MultiPoly variable(int index, int nvars);
    static MultiPoly monomial(const Rational& c, Monomial m);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Single power of a single variable (x_i^k, coefficient 1)?
    bool is_single_variable_power() const;
    int term_count() const { return static_cast<int>(terms_.size()); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(int var) const;

    const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly pow(int e) const;

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Relabel variables: x_i becomes x_{p(i)}.
    MultiPoly permuted(const Permutation& p) const;

    /// Substitute each variable by a polynomial (all replacements share a
    /// common variable count, which becomes the result's).
    MultiPoly substituted(const std::vector<MultiPoly>& replacement) const;

    /// Same polynomial viewed in a larger variable set.
    MultiPoly extended(int new_nvars) const;

    /// Evaluate at a rational point.
    Rational evaluated(const std::vector<Rational>& point) const;

    /// Homogeneous component of total degree d.
    MultiPoly homogeneous_part(int d) const;
    bool is_homogeneous() const;

    /// Positive rational c such that poly/c has coprime integer
    /// coefficients; sign chosen so the leading coefficient of poly/c is
    /// positive. Zero polynomial yields 1.
    Rational rational_content() const;
    MultiPoly primitive_part() const;

    /// Exact quotient; nullopt when the division leaves a remainder.
    std::optional<MultiPoly> divided_exact(const MultiPoly& divisor) const;

    std::string str() const;

private:
    int nvars_;
    std::map<Monomial, Rational, GrlexLess> terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

/// gcd over Q[x1..xn], computed by content/primitive-part recursion on the
/// highest active variable with a primitive pseudo-remainder sequence.
/// Normalized: integer-primitive with positive leading coefficient;
/// gcd with a nonzero constant is 1.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Elementary symmetric polynomial sigma_s of the listed variables at level
/// n. sigma_0 = 1; s > |vars| yields the zero polynomial.
MultiPoly elementary_symmetric(int s, const std::vector<int>& vars, int n);

/// prod_{i<j} (x_{v_i} - x_{v_j}); antisymmetric in the sequence, zero when
/// a variable repeats.
MultiPoly vandermonde_product(const std::vector<int>& vars, int n);

} // namespace slrep

#endif
