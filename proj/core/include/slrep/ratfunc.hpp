#ifndef SLREP_RATFUNC_HPP
#define SLREP_RATFUNC_HPP

#include <string>
#include <vector>

#include "slrep/multipoly.hpp"

namespace slrep {

/// Element of K = Q(x1..xn), stored as a normalized fraction:
/// gcd(num, den) = 1 and den has leading coefficient 1 under graded lex.
/// Two equal values always have identical representations.
class RatFunc {
public:
    RatFunc() : num_(0), den_(0) {}
    explicit RatFunc(int nvars)
        : num_(MultiPoly::zero(nvars)), den_(MultiPoly::constant(Rational(1), nvars)) {}
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc from_poly(MultiPoly p);
    static RatFunc constant(const Rational& c, int nvars);
    static RatFunc variable(int index, int nvars);

    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    Rational constant_value() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(int e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc permuted(const Permutation& p) const;
    RatFunc extended(int new_nvars) const;
    /// Substitute each variable by a rational function.
    RatFunc substituted(const std::vector<RatFunc>& replacement) const;
    /// Evaluate at a rational point; nullopt-like failure is a domain error
    /// when the denominator vanishes.
    Rational evaluated(const std::vector<Rational>& point) const;
    bool denominator_vanishes_at(const std::vector<Rational>& point) const;

    /// Canonical text form; parse(str()) == *this bit-exactly.
    std::string str() const;

private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

inline RatFunc operator*(const Rational& c, const RatFunc& f) {
    return RatFunc::constant(c, f.nvars()) * f;
}

/// Variable action x_i -> x_{p(i)}.
RatFunc apply_permutation(const Permutation& p, const RatFunc& f);

/// True iff every generator fixes f.
bool is_fixed_by(const RatFunc& f, const std::vector<Permutation>& gens);

/// Parse the expression grammar: identifiers x1, x2, ...; integer literals;
/// operators + - * / ^ with usual precedence; parentheses. The level must
/// cover every variable mentioned.
RatFunc parse_ratfunc(const std::string& text, int nvars);

/// Same, inferring the level from the largest variable index present
/// (minimum 1).
RatFunc parse_ratfunc(const std::string& text);

} // namespace slrep

#endif
