#include "slrep/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace slrep {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // Same degree: lexicographic with earlier variables dominating, so the
    // grlex-larger monomial has the larger leading exponent block.
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

MultiPoly MultiPoly::constant(const Rational& c, int nvars) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int index, int nvars) {
    if (index < 1 || index > nvars) throw domain_error("variable index outside level");
    MultiPoly p(nvars);
    Monomial m(nvars, 0);
    m[index - 1] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, Monomial m) {
    MultiPoly p(static_cast<int>(m.size()));
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
           terms_.begin()->second == 1;
}

bool MultiPoly::is_single_variable_power() const {
    if (terms_.size() != 1) return false;
    const auto& [m, c] = *terms_.begin();
    if (c != 1) return false;
    int nz = 0;
    for (int e : m)
        if (e > 0) ++nz;
    return nz == 1;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var - 1]);
    return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw domain_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw domain_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw domain_error("polynomial level mismatch");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw domain_error("polynomial level mismatch");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw domain_error("polynomial level mismatch");
    MultiPoly r(nvars_);
    Monomial prod(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) prod[i] = ma[i] + mb[i];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw domain_error("negative polynomial power");
    MultiPoly r = constant(Rational(1), nvars_);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

MultiPoly MultiPoly::permuted(const Permutation& p) const {
    if (p.size() != nvars_) throw domain_error("permutation level mismatch");
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial pm(nvars_, 0);
        for (int i = 1; i <= nvars_; ++i) pm[p(i) - 1] = m[i - 1];
        r.terms_.emplace(std::move(pm), c);
    }
    return r;
}

MultiPoly MultiPoly::substituted(const std::vector<MultiPoly>& replacement) const {
    if (static_cast<int>(replacement.size()) != nvars_)
        throw domain_error("substitution needs one replacement per variable");
    int out_vars = replacement.empty() ? 0 : replacement.front().nvars();
    for (const auto& r : replacement)
        if (r.nvars() != out_vars) throw domain_error("substitution replacements disagree on level");

    // Memoize powers per variable up to the needed degree.
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (int v = 1; v <= nvars_; ++v)
        powers[v - 1].push_back(MultiPoly::constant(Rational(1), out_vars));

    MultiPoly acc(out_vars);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(c, out_vars);
        for (int v = 1; v <= nvars_; ++v) {
            int e = m[v - 1];
            if (e == 0) continue;
            auto& pw = powers[v - 1];
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * replacement[v - 1]);
            term = term * pw[e];
        }
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::extended(int new_nvars) const {
    if (new_nvars < nvars_) throw domain_error("cannot shrink variable set");
    MultiPoly r(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial em = m;
        em.resize(new_nvars, 0);
        r.terms_.emplace(std::move(em), c);
    }
    return r;
}

Rational MultiPoly::evaluated(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw domain_error("evaluation point level mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) == d) r.terms_.emplace(m, c);
    return r;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != d) return false;
    return true;
}

Rational MultiPoly::rational_content() const {
    if (terms_.empty()) return Rational(1);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content = make_rational(num_gcd, den_lcm);
    if (leading_coefficient() < 0) content = -content;
    return content;
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = rational_content();
    MultiPoly r(nvars_);
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k / c);
    return r;
}

std::optional<MultiPoly> MultiPoly::divided_exact(const MultiPoly& divisor) const {
    if (nvars_ != divisor.nvars_) throw domain_error("polynomial level mismatch");
    if (divisor.is_zero()) throw domain_error("division by zero polynomial");
    if (is_zero()) return MultiPoly(nvars_);
    if (divisor.is_one()) return *this;

    MultiPoly rem = *this;
    MultiPoly quot(nvars_);
    const Monomial& dlm = divisor.leading_monomial();
    const Rational& dlc = divisor.leading_coefficient();
    Monomial q(nvars_);
    while (!rem.is_zero()) {
        const Monomial& rlm = rem.leading_monomial();
        for (int i = 0; i < nvars_; ++i) {
            q[i] = rlm[i] - dlm[i];
            if (q[i] < 0) return std::nullopt;
        }
        Rational qc = rem.leading_coefficient() / dlc;
        quot.add_term(q, qc);
        rem = rem - divisor * MultiPoly::monomial(qc, q);
    }
    return quot;
}

namespace {

// View p as univariate in `var`: map from exponent to coefficient poly
// (with var's slot zeroed).
std::map<int, MultiPoly> coefficients_in(const MultiPoly& p, int var) {
    std::map<int, MultiPoly> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial base = m;
        int e = base[var - 1];
        base[var - 1] = 0;
        auto [it, inserted] = out.try_emplace(e, MultiPoly(p.nvars()));
        it->second.add_term(base, c);
    }
    return out;
}

MultiPoly leading_coeff_in(const MultiPoly& p, int var) {
    int d = p.degree_in(var);
    MultiPoly lc(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var - 1] == d) {
            Monomial base = m;
            base[var - 1] = 0;
            lc.add_term(base, c);
        }
    }
    return lc;
}

MultiPoly content_in(const MultiPoly& p, int var) {
    auto coeffs = coefficients_in(p, var);
    MultiPoly g(p.nvars());
    for (const auto& [e, c] : coeffs) {
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Pseudo-remainder of f by g in `var`: lc(g)^(deg f - deg g + 1) * f = q*g + r.
MultiPoly pseudo_remainder(MultiPoly f, const MultiPoly& g, int var) {
    const int dg = g.degree_in(var);
    const MultiPoly glc = leading_coeff_in(g, var);
    int guard = f.degree_in(var) - dg + 1;
    while (!f.is_zero() && f.degree_in(var) >= dg && guard-- > 0) {
        int df = f.degree_in(var);
        MultiPoly flc = leading_coeff_in(f, var);
        MultiPoly shift(f.nvars());
        Monomial m(f.nvars(), 0);
        m[var - 1] = df - dg;
        shift.add_term(m, Rational(1));
        f = f * glc - g * (flc * shift);
    }
    return f;
}

int highest_active_variable(const MultiPoly& a, const MultiPoly& b) {
    int n = a.nvars();
    for (int v = n; v >= 1; --v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return 0;
}

MultiPoly monomial_gcd(const MultiPoly& a, const MultiPoly& b) {
    Monomial g(a.nvars(), 0);
    bool first = true;
    auto fold = [&](const MultiPoly& p) {
        for (const auto& [m, c] : p.terms()) {
            if (first) {
                g = m;
                first = false;
            } else {
                for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
            }
        }
    };
    fold(a);
    fold(b);
    return MultiPoly::monomial(Rational(1), g);
}

} // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw domain_error("polynomial level mismatch");
    const int n = a.nvars();
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(Rational(1), n);
    if (a == b) return a.primitive_part();

    // Monomials divide out cheaply; common for denominators.
    if (a.term_count() == 1 || b.term_count() == 1) return monomial_gcd(a, b);

    int var = highest_active_variable(a, b);
    if (var == 0) return MultiPoly::constant(Rational(1), n);

    // Content/primitive split in the last active variable, then a
    // subresultant remainder sequence on the primitive parts. Each
    // remainder is divided by the known subresultant factor g h^delta,
    // an exact division, so no recursive content gcds are needed until
    // the very end.
    MultiPoly ca = content_in(a, var);
    MultiPoly cb = content_in(b, var);
    MultiPoly c = poly_gcd(ca, cb);

    MultiPoly A = (*a.divided_exact(ca)).primitive_part();
    MultiPoly B = (*b.divided_exact(cb)).primitive_part();
    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);

    MultiPoly g = MultiPoly::constant(Rational(1), n);
    MultiPoly h = MultiPoly::constant(Rational(1), n);
    while (true) {
        const int delta = A.degree_in(var) - B.degree_in(var);
        MultiPoly rem = pseudo_remainder(A, B, var);
        if (rem.is_zero()) break;
        if (rem.degree_in(var) == 0) {
            // Coprime primitive parts.
            return c.primitive_part();
        }
        MultiPoly divisor = g * h.pow(delta);
        A = std::move(B);
        B = *rem.divided_exact(divisor);
        g = leading_coeff_in(A, var);
        // h = g^delta / h^(delta-1), exact in the coefficient ring.
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = *g.pow(delta).divided_exact(h.pow(delta - 1));
        }
    }
    if (B.degree_in(var) == 0) return c.primitive_part();
    MultiPoly Bc = content_in(B, var);
    return (c * (*B.divided_exact(Bc))).primitive_part();
}

MultiPoly elementary_symmetric(int s, const std::vector<int>& vars, int n) {
    if (s < 0) throw domain_error("elementary symmetric index must be non-negative");
    const int k = static_cast<int>(vars.size());
    if (s > k) return MultiPoly::zero(n);
    // Row by row of the generating product prod_i (1 + x_{v_i} t).
    std::vector<MultiPoly> e(s + 1, MultiPoly::zero(n));
    e[0] = MultiPoly::constant(Rational(1), n);
    for (int i = 0; i < k; ++i) {
        MultiPoly x = MultiPoly::variable(vars[i], n);
        for (int j = std::min(s, i + 1); j >= 1; --j) e[j] = e[j] + e[j - 1] * x;
    }
    return e[s];
}

MultiPoly vandermonde_product(const std::vector<int>& vars, int n) {
    MultiPoly prod = MultiPoly::constant(Rational(1), n);
    for (size_t i = 0; i < vars.size(); ++i) {
        for (size_t j = i + 1; j < vars.size(); ++j) {
            if (vars[i] == vars[j]) return MultiPoly::zero(n);
            prod = prod * (MultiPoly::variable(vars[i], n) - MultiPoly::variable(vars[j], n));
        }
    }
    return prod;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading term first: grlex descending.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;

        std::ostringstream vars;
        bool any_var = false;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (any_var) vars << "*";
            vars << "x" << (i + 1);
            if (m[i] > 1) vars << "^" << m[i];
            any_var = true;
        }
        if (!any_var) {
            out << ac.get_str();
        } else if (ac == 1) {
            out << vars.str();
        } else {
            out << ac.get_str() << "*" << vars.str();
        }
    }
    return out.str();
}

} // namespace slrep
