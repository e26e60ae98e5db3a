#include "slrep/grading.hpp"

#include <algorithm>

#include "slrep/errors.hpp"

namespace slrep {

int degree_valuation(const RatFunc& f) {
    if (f.is_zero()) throw domain_error("valuation of zero is undefined");
    return f.den().degree() - f.num().degree();
}

GradedSlice project_degree(const RatFunc& f, int d) {
    GradedSlice slice;
    slice.degree = d;
    slice.value = RatFunc(std::max(f.nvars(), 0));
    if (f.is_zero()) return slice;

    const int n = f.nvars();
    const MultiPoly& num = f.num();
    const MultiPoly& den = f.den();
    const int E = den.degree();
    const MultiPoly top = den.homogeneous_part(E);

    // Graded pieces g_{-E-m} of 1/den, from den * g = 1:
    //   g_{-E} = 1/top,
    //   g_{-E-m} = -(1/top) sum_{j>=1} den_{E-j} g_{-E-m+j}.
    // Each piece is homogeneous of its degree. We need pieces down to
    // degree d - deg(num); nothing below the top numerator degree
    // contributes.
    const int num_top = num.degree();
    // Lowest degree of a numerator homogeneous part:
    int num_low = num_top;
    for (const auto& [m, c] : num.terms()) num_low = std::min(num_low, total_degree(m));

    const int depth = num_top - d - E;  // g-pieces needed: -E, ..., -E-depth
    if (depth < 0) return slice;

    RatFunc top_inv = RatFunc::from_poly(top).inverse();
    std::vector<RatFunc> g;  // g[m] has degree -E-m
    g.reserve(depth + 1);
    g.push_back(top_inv);
    for (int m = 1; m <= depth; ++m) {
        RatFunc acc(n);
        for (int j = 1; j <= std::min(m, E); ++j) {
            MultiPoly denj = den.homogeneous_part(E - j);
            if (denj.is_zero()) continue;
            acc = acc + RatFunc::from_poly(denj) * g[m - j];
        }
        g.push_back(-(top_inv * acc));
    }

    RatFunc value(n);
    for (int e = num_low; e <= num_top; ++e) {
        int m = e - d - E;  // num_e * g_{-E-m} contributes to degree d
        if (m < 0 || m > depth) continue;
        MultiPoly nume = num.homogeneous_part(e);
        if (nume.is_zero()) continue;
        value = value + RatFunc::from_poly(nume) * g[m];
    }
    slice.value = value;
    return slice;
}

bool is_homogeneous_of_degree(const RatFunc& f, int d) {
    if (f.is_zero()) return true;
    const int n = f.nvars();
    // Substitute x_i -> y x_i with y the fresh variable n+1 and compare
    // against y^d f.
    std::vector<RatFunc> repl;
    RatFunc y = RatFunc::variable(n + 1, n + 1);
    for (int i = 1; i <= n; ++i) repl.push_back(RatFunc::variable(i, n + 1) * y);
    RatFunc scaled = f.substituted(repl);
    RatFunc expect = f.extended(n + 1) * y.pow(d);
    return scaled == expect;
}

bool check_v0_linearity(const RatFunc& f, const RatFunc& g, const RatFunc& c, int d) {
    if (!is_homogeneous_of_degree(c, 0))
        throw domain_error("c must be homogeneous of degree 0");
    const int n = f.nvars();

    RatFunc sum_slice = project_degree(f + g, d).value;
    if (!(sum_slice == project_degree(f, d).value + project_degree(g, d).value)) return false;

    if (!(project_degree(c * f, d).value == c * project_degree(f, d).value)) return false;

    for (int i = 1; i < n; ++i) {
        Permutation s = Permutation::adjacent(n, i);
        if (!(project_degree(apply_permutation(s, f), d).value ==
              apply_permutation(s, project_degree(f, d).value)))
            return false;
    }
    return true;
}

bool has_even_parity(const RatFunc& f) {
    auto even = [](const MultiPoly& p) {
        for (const auto& [m, c] : p.terms())
            for (int e : m)
                if (e % 2 != 0) return false;
        return true;
    };
    return even(f.num()) && even(f.den());
}

std::map<std::vector<int>, RatFunc> square_subfield_decompose(const RatFunc& f) {
    const int n = f.nvars();
    std::map<std::vector<int>, RatFunc> out;
    if (f.is_zero()) return out;

    // Variables actually present in the denominator.
    std::vector<int> den_vars;
    for (int v = 1; v <= n; ++v)
        if (f.den().degree_in(v) > 0) den_vars.push_back(v);
    if (den_vars.size() > 12)
        throw resource_error("square_subfield_decompose: denominator involves " +
                             std::to_string(den_vars.size()) + " variables, cap is 12");

    // Rationalize: multiply numerator and denominator by den(eps x) over
    // all nontrivial sign patterns eps of the denominator variables. The
    // full product over all 2^k patterns is invariant under each sign
    // flip, hence even in every variable.
    const MultiPoly& den = f.den();
    const size_t patterns = size_t(1) << den_vars.size();
    MultiPoly cofactor = MultiPoly::constant(Rational(1), n);
    for (size_t mask = 1; mask < patterns; ++mask) {
        MultiPoly flipped(n);
        for (const auto& [m, c] : den.terms()) {
            int sign = 1;
            for (size_t b = 0; b < den_vars.size(); ++b)
                if (((mask >> b) & 1) && m[den_vars[b] - 1] % 2 != 0) sign = -sign;
            flipped.add_term(m, sign == 1 ? c : -c);
        }
        cofactor = cofactor * flipped;
    }
    MultiPoly num = f.num() * cofactor;
    MultiPoly even_den = den * cofactor;

    // Group numerator monomials by odd-parity support; dividing a parity
    // class by its square-free monomial leaves all exponents even.
    std::map<std::vector<int>, MultiPoly> classes;
    for (const auto& [m, c] : num.terms()) {
        std::vector<int> support;
        Monomial reduced = m;
        for (int v = 1; v <= n; ++v) {
            if (m[v - 1] % 2 != 0) {
                support.push_back(v);
                reduced[v - 1] -= 1;
            }
        }
        auto [it, inserted] = classes.try_emplace(support, MultiPoly(n));
        it->second.add_term(reduced, c);
    }

    for (auto& [support, poly] : classes) {
        RatFunc c(std::move(poly), even_den);
        if (!c.is_zero()) out.emplace(support, std::move(c));
    }
    return out;
}

} // namespace slrep
