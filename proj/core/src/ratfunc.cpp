#include "slrep/ratfunc.hpp"

#include <sstream>

namespace slrep {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw domain_error("numerator/denominator level mismatch");
    if (den_.is_zero()) throw domain_error("zero denominator");
    normalize();
}

RatFunc RatFunc::from_poly(MultiPoly p) {
    int n = p.nvars();
    return RatFunc(std::move(p), MultiPoly::constant(Rational(1), n));
}

RatFunc RatFunc::constant(const Rational& c, int nvars) {
    return from_poly(MultiPoly::constant(c, nvars));
}

RatFunc RatFunc::variable(int index, int nvars) {
    return from_poly(MultiPoly::variable(index, nvars));
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw domain_error("not a constant");
    return num_.constant_term();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(Rational(1), num_.nvars());
        return;
    }
    if (!den_.is_one()) {
        MultiPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *num_.divided_exact(g);
            den_ = *den_.divided_exact(g);
        }
    }
    const Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (nvars() != o.nvars()) throw domain_error("rational function level mismatch");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Common-denominator form through gcd of the denominators.
    MultiPoly g = poly_gcd(den_, o.den_);
    MultiPoly da = g.is_one() ? den_ : *den_.divided_exact(g);
    MultiPoly db = g.is_one() ? o.den_ : *o.den_.divided_exact(g);
    return RatFunc(num_ * db + o.num_ * da, da * db * g);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (nvars() != o.nvars()) throw domain_error("rational function level mismatch");
    if (is_zero() || o.is_zero()) return RatFunc(nvars());
    // Cross-cancel before multiplying to keep intermediate products small.
    MultiPoly g1 = poly_gcd(num_, o.den_);
    MultiPoly g2 = poly_gcd(o.num_, den_);
    const MultiPoly n1 = g1.is_one() ? num_ : *num_.divided_exact(g1);
    const MultiPoly d2 = g1.is_one() ? o.den_ : *o.den_.divided_exact(g1);
    const MultiPoly n2 = g2.is_one() ? o.num_ : *o.num_.divided_exact(g2);
    const MultiPoly d1 = g2.is_one() ? den_ : *den_.divided_exact(g2);
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r = constant(Rational(1), nvars());
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

RatFunc RatFunc::permuted(const Permutation& p) const {
    return RatFunc(num_.permuted(p), den_.permuted(p));
}

RatFunc RatFunc::extended(int new_nvars) const {
    return RatFunc(num_.extended(new_nvars), den_.extended(new_nvars));
}

RatFunc RatFunc::substituted(const std::vector<RatFunc>& replacement) const {
    if (static_cast<int>(replacement.size()) != nvars())
        throw domain_error("substitution needs one replacement per variable");
    int out = replacement.empty() ? 0 : replacement.front().nvars();
    // Clear to a fraction first: substitute into num and den separately.
    std::vector<MultiPoly> nums, dens;
    nums.reserve(replacement.size());
    dens.reserve(replacement.size());
    for (const auto& r : replacement) {
        nums.push_back(r.num());
        dens.push_back(r.den());
    }
    // f(num/den per variable): multiply through by den^deg termwise.
    // Done separately for numerator and denominator polynomials.
    auto substitute_poly = [&](const MultiPoly& p) -> RatFunc {
        RatFunc acc(out);
        for (const auto& [m, c] : p.terms()) {
            RatFunc term = RatFunc::constant(c, out);
            for (int v = 1; v <= p.nvars(); ++v) {
                int e = m[v - 1];
                if (e > 0) term = term * RatFunc(nums[v - 1], dens[v - 1]).pow(e);
            }
            acc = acc + term;
        }
        return acc;
    };
    RatFunc pn = substitute_poly(num_);
    RatFunc pd = substitute_poly(den_);
    if (pd.is_zero()) throw domain_error("substitution sends denominator to zero");
    return pn / pd;
}

Rational RatFunc::evaluated(const std::vector<Rational>& point) const {
    Rational d = den_.evaluated(point);
    if (d == 0) throw domain_error("denominator vanishes at evaluation point");
    return num_.evaluated(point) / d;
}

bool RatFunc::denominator_vanishes_at(const std::vector<Rational>& point) const {
    return den_.evaluated(point) == 0;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream out;
    if (num_.term_count() <= 1) {
        out << num_.str();
    } else {
        out << "(" << num_.str() << ")";
    }
    out << "/";
    // A bare denominator is only unambiguous for a single power of a single
    // variable; anything else gets parentheses.
    if (den_.is_single_variable_power()) {
        out << den_.str();
    } else {
        out << "(" << den_.str() << ")";
    }
    return out.str();
}

RatFunc apply_permutation(const Permutation& p, const RatFunc& f) {
    if (p.size() != f.nvars()) throw domain_error("permutation level mismatch");
    return f.permuted(p);
}

bool is_fixed_by(const RatFunc& f, const std::vector<Permutation>& gens) {
    for (const auto& g : gens)
        if (!(apply_permutation(g, f) == f)) return false;
    return true;
}

} // namespace slrep
