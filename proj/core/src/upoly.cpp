#include "slrep/upoly.hpp"

#include <sstream>

#include "slrep/errors.hpp"

namespace slrep {

UPoly::UPoly(std::vector<RatFunc> coeffs, int nvars) : nvars_(nvars), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.nvars() != nvars_) throw domain_error("coefficient level mismatch");
    trim();
}

UPoly UPoly::constant(const RatFunc& c) {
    UPoly p(c.nvars());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

UPoly UPoly::t(int nvars) {
    UPoly p(nvars);
    p.coeffs_ = {RatFunc(nvars), RatFunc::constant(Rational(1), nvars)};
    return p;
}

UPoly UPoly::from_coeffs(std::initializer_list<RatFunc> coeffs, int nvars) {
    return UPoly(std::vector<RatFunc>(coeffs), nvars);
}

const RatFunc& UPoly::leading() const {
    if (coeffs_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool UPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

RatFunc UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return RatFunc(nvars_);
    return coeffs_[i];
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r(nvars_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), RatFunc(nvars_));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(nvars_);
    UPoly r(nvars_);
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, RatFunc(nvars_));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

UPoly UPoly::scaled(const RatFunc& c) const {
    if (c.is_zero()) return UPoly(nvars_);
    UPoly r = *this;
    for (auto& k : r.coeffs_) k = k * c;
    return r;
}

UPoly UPoly::pow(int e) const {
    if (e < 0) throw domain_error("negative power");
    UPoly r = constant(RatFunc::constant(Rational(1), nvars_));
    UPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& divisor) const {
    if (divisor.is_zero()) throw domain_error("division by zero polynomial");
    UPoly q(nvars_), r = *this;
    RatFunc lead_inv = divisor.leading().inverse();
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        int shift = r.degree() - divisor.degree();
        RatFunc c = r.leading() * lead_inv;
        UPoly term(nvars_);
        term.coeffs_.assign(shift + 1, RatFunc(nvars_));
        term.coeffs_[shift] = c;
        q = q + term;
        r = r - divisor * term;
    }
    return {q, r};
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << coeffs_[i].str() << ")";
        if (i >= 1) out << "*t";
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inverse());
}

std::tuple<UPoly, UPoly, UPoly> upoly_extended_gcd(const UPoly& a, const UPoly& b) {
    const int n = a.nvars();
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(RatFunc::constant(Rational(1), n)), s1(n);
    UPoly t0(n), t1 = UPoly::constant(RatFunc::constant(Rational(1), n));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = std::exchange(r1, r);
        UPoly s = s0 - q * s1;
        s0 = std::exchange(s1, s);
        UPoly t = t0 - q * t1;
        t0 = std::exchange(t1, t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    RatFunc inv = r0.leading().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

} // namespace slrep
