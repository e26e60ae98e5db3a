#ifndef SLREP_UPOLY_HPP
#define SLREP_UPOLY_HPP

#include <vector>

#include "slrep/ratfunc.hpp"

namespace slrep {

/// Univariate polynomial in an abstract t with coefficients in K = Q(x1..xn).
/// Coefficient 0 is the constant term; no trailing zero coefficients stored.
class UPoly {
public:
    UPoly() : nvars_(0) {}
    explicit UPoly(int nvars) : nvars_(nvars) {}
    UPoly(std::vector<RatFunc> coeffs, int nvars);

    static UPoly constant(const RatFunc& c);
    static UPoly t(int nvars);  // the variable itself
    static UPoly from_coeffs(std::initializer_list<RatFunc> coeffs, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const RatFunc& leading() const;
    bool is_monic() const;
    RatFunc coeff(int i) const;
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const RatFunc& c) const;
    UPoly pow(int e) const;
    bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<UPoly, UPoly> divrem(const UPoly& divisor) const;

    std::string str() const;

private:
    void trim();
    int nvars_;
    std::vector<RatFunc> coeffs_;
};

/// Monic gcd over K[t].
UPoly upoly_gcd(UPoly a, UPoly b);

/// Extended Euclid: returns (g, u, v) monic g with u*a + v*b = g.
std::tuple<UPoly, UPoly, UPoly> upoly_extended_gcd(const UPoly& a, const UPoly& b);

} // namespace slrep

#endif
