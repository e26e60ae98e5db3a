#include "slrep/permmod.hpp"

#include <algorithm>
#include <functional>

#include "slrep/errors.hpp"
#include "slrep/permgroup.hpp"

namespace slrep {

std::vector<std::vector<int>> subsets_colex(int n, int s) {
    std::vector<std::vector<int>> out;
    if (s < 0 || s > n) return out;
    std::vector<int> cur(s);
    // Colex: compare reversed sorted lists; generate by choosing the largest
    // element last, recursively.
    std::function<void(int, int)> rec = [&](int pos, int max_allowed) {
        if (pos < 0) {
            out.push_back(cur);
            return;
        }
        for (int v = pos + 1; v <= max_allowed; ++v) {
            cur[pos] = v;
            rec(pos - 1, v - 1);
        }
    };
    if (s == 0) {
        out.push_back({});
        return out;
    }
    rec(s - 1, n);
    // rec enumerates with the top element ascending outermost, which is
    // colex order already; each emitted list is ascending.
    return out;
}

PermModuleExpr product_decompose(int a, int b) {
    if (a < 0 || b < 0) throw domain_error("product_decompose needs non-negative sizes");
    PermModuleExpr expr;
    for (int j = 0; j <= std::min(a, b); ++j) {
        // multinomial(a+b-j; j, a-j, b-j)
        Int mult = factorial(static_cast<unsigned>(a + b - j)) /
                   (factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(a - j)) *
                    factorial(static_cast<unsigned>(b - j)));
        expr.kappa[a + b - j] += mult;
    }
    return expr;
}

bool product_dimension_identity(int a, int b, int n) {
    PermModuleExpr expr = product_decompose(a, b);
    Int lhs = binomial(static_cast<unsigned>(n), static_cast<unsigned>(a)) *
              binomial(static_cast<unsigned>(n), static_cast<unsigned>(b));
    Int rhs(0);
    for (const auto& [s, mult] : expr.kappa)
        rhs += mult * binomial(static_cast<unsigned>(n), static_cast<unsigned>(s));
    return lhs == rhs;
}

SplitMatrixResult split_matrix(const std::vector<int>& T_in, const std::vector<RatFunc>& basis,
                               int n) {
    std::vector<int> T = T_in;
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    for (int t : T)
        if (t < 1 || t > n) throw domain_error("T point outside {1..n}");

    const int k = static_cast<int>(T.size());
    Int expected = factorial(static_cast<unsigned>(k));
    if (Int(static_cast<unsigned long>(basis.size())) != expected)
        throw domain_error("need |T|! = " + expected.get_str() + " basis elements, got " +
                           std::to_string(basis.size()));

    // Precondition: basis elements fixed by the pointwise stabilizer of T.
    std::vector<Permutation> stab = pointwise_stabilizer_gens(T, n);
    for (size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].nvars() != n) throw domain_error("basis element level mismatch");
        if (!is_fixed_by(basis[j], stab))
            throw domain_error("basis element " + std::to_string(j) +
                               " is not fixed by the pointwise stabilizer of T");
    }

    // Rows over all orderings of T: the coset representatives of the
    // pointwise stabilizer inside the setwise stabilizer.
    std::vector<int> perm_of_T(k);
    for (int i = 0; i < k; ++i) perm_of_T[i] = i;
    SplitMatrixResult result;
    result.matrix = RfMatrix(static_cast<int>(basis.size()), static_cast<int>(basis.size()), n);
    int row = 0;
    do {
        Permutation xi = Permutation::identity(n);
        {
            std::vector<int> images(n);
            for (int i = 1; i <= n; ++i) images[i - 1] = i;
            for (int i = 0; i < k; ++i) images[T[i] - 1] = T[perm_of_T[i]];
            xi = Permutation(std::move(images));
        }
        for (size_t j = 0; j < basis.size(); ++j)
            result.matrix.at(row, static_cast<int>(j)) = apply_permutation(xi, basis[j]);
        ++row;
    } while (std::next_permutation(perm_of_T.begin(), perm_of_T.end()));

    result.det = result.matrix.det();
    result.is_basis = !result.det.is_zero();
    return result;
}

std::vector<Int> binomial_basis_coeffs(int N) {
    if (N < 0) throw domain_error("binomial_basis_coeffs needs N >= 0");
    // Triangular solve of sum_i a_i C(m, i) = m^N for m = 0..N.
    std::vector<Int> a(N + 1, Int(0));
    for (int m = 0; m <= N; ++m) {
        Int rhs = N == 0 ? Int(1) : pow_int(Int(m), static_cast<unsigned>(N));
        for (int i = 0; i < m; ++i) rhs -= a[i] * binomial(static_cast<unsigned>(m), static_cast<unsigned>(i));
        a[m] = rhs;
    }
    return a;
}

AlphaMapResult alpha_map_matrix(int N, int n) {
    if (N < 0) throw domain_error("alpha_map_matrix needs N >= 0");
    if (n < N + 1) throw domain_error("alpha_map_matrix needs level n >= N + 1");

    const auto Ns = subsets_colex(n, N);
    const auto N1s = subsets_colex(n, N + 1);
    const int rows = static_cast<int>(Ns.size()) * n;
    const int cols_left = N * static_cast<int>(Ns.size());
    const int cols_right = (N + 1) * static_cast<int>(N1s.size());

    if (cols_left + cols_right != rows)
        throw inconsistency_error("alpha map dimension identity failed (impossible: Pascal's rule)");

    std::map<std::vector<int>, int> index_of_N;
    for (size_t i = 0; i < Ns.size(); ++i) index_of_N[Ns[i]] = static_cast<int>(i);

    auto row_index = [&](const std::vector<int>& S, int t) {
        return index_of_N.at(S) * n + (t - 1);
    };

    AlphaMapResult res;
    res.matrix = RfMatrix(rows, cols_left + cols_right, n);

    // Left block: copy s of the size-N object, s = 0..N-1. The basis vector
    // [S] maps to sum_{t in S} sigma_s(S \ {t}) [S, t].
    int col = 0;
    for (int s = 0; s < N; ++s) {
        for (const auto& S : Ns) {
            for (int t : S) {
                std::vector<int> rest;
                for (int u : S)
                    if (u != t) rest.push_back(u);
                res.matrix.at(row_index(S, t), col) =
                    RatFunc::from_poly(elementary_symmetric(s, rest, n));
            }
            ++col;
        }
    }
    // Right block: copy s of the size-(N+1) object, s = 0..N. The basis
    // vector [T] maps to sum_{t in T} sigma_s(T \ {t}) [T \ {t}, t].
    for (int s = 0; s <= N; ++s) {
        for (const auto& T : N1s) {
            for (int t : T) {
                std::vector<int> rest;
                for (int u : T)
                    if (u != t) rest.push_back(u);
                res.matrix.at(row_index(rest, t), col) =
                    RatFunc::from_poly(elementary_symmetric(s, rest, n));
            }
            ++col;
        }
    }

    res.rank = rank_exact(res.matrix);
    res.bijective = res.rank == rows;
    return res;
}

bool omega_iso_check(int N, int n) {
    if (N < 0 || N > n) throw domain_error("omega_iso_check needs 0 <= N <= n");
    const auto subsets = subsets_colex(n, N);
    for (int i = 1; i < n; ++i) {
        Permutation s = Permutation::adjacent(n, i);
        for (const auto& S : subsets) {
            // Left route: permute the basis label, then attach the coefficient.
            std::vector<int> sS;
            for (int v : S) sS.push_back(s(v));
            std::vector<int> sorted_sS = sS;
            std::sort(sorted_sS.begin(), sorted_sS.end());
            MultiPoly lhs_coeff = vandermonde_product(sorted_sS, n);

            // Right route: apply the semilinear exterior-power action to
            // vandermonde(S) * e_S: the coefficient maps through the
            // variable permutation and the wedge factors pick up the sign
            // of the sort.
            MultiPoly moved = vandermonde_product(S, n).permuted(s);
            // Sign of sorting (s(v) for v in S ascending-ordered input).
            int sign = 1;
            std::vector<int> tmp = sS;
            for (size_t a = 0; a < tmp.size(); ++a)
                for (size_t b = a + 1; b < tmp.size(); ++b)
                    if (tmp[a] > tmp[b]) sign = -sign;
            MultiPoly rhs_coeff = sign == 1 ? moved : -moved;

            if (!(lhs_coeff == rhs_coeff)) return false;
        }
    }
    return true;
}

int hom_orbit_count(int s, int t, int n) {
    if (s < 0 || t < 0 || s > n || t > n) throw domain_error("hom_orbit_count needs s, t <= n");
    return std::min(s, t) - std::max(0, s + t - n) + 1;
}

PartialFractions partial_fractions(const UPoly& num, const std::vector<DenFactor>& factored_den) {
    if (factored_den.empty()) throw domain_error("need at least one denominator factor");
    const int n = num.nvars();
    for (const auto& f : factored_den) {
        if (f.poly.nvars() != n) throw domain_error("denominator factor level mismatch");
        if (f.poly.degree() < 1) throw domain_error("denominator factor must be non-constant");
        if (!f.poly.is_monic()) throw domain_error("denominator factor must be monic in t");
        if (f.multiplicity < 1) throw domain_error("factor multiplicity must be >= 1");
    }
    for (size_t i = 0; i < factored_den.size(); ++i)
        for (size_t j = i + 1; j < factored_den.size(); ++j) {
            UPoly g = upoly_gcd(factored_den[i].poly, factored_den[j].poly);
            if (g.degree() != 0)
                throw domain_error("denominator factors " + std::to_string(i) + " and " +
                                   std::to_string(j) + " are not coprime");
        }

    UPoly D = UPoly::constant(RatFunc::constant(Rational(1), n));
    std::vector<UPoly> blocks;  // Q_i^{m_i}
    for (const auto& f : factored_den) {
        blocks.push_back(f.poly.pow(f.multiplicity));
        D = D * blocks.back();
    }

    PartialFractions out;
    auto [q, r] = num.divrem(D);
    out.polynomial_part = q;

    // r / D splits across the coprime blocks: with U_i = D / Q_i^{m_i},
    // A_i = r * U_i^{-1} mod Q_i^{m_i}.
    for (size_t i = 0; i < factored_den.size(); ++i) {
        const UPoly& block = blocks[i];
        UPoly U = D.divrem(block).first;
        auto [g, inv, unused] = upoly_extended_gcd(U, block);
        if (g.degree() != 0)
            throw inconsistency_error("cofactor not invertible modulo its block");
        // g is the monic unit 1; inv * U = 1 (mod block).
        UPoly A = (r * inv).divrem(block).second;

        // Q-adic digits: A = sum_j B_j Q^j, deg B_j < deg Q, so
        // A / Q^m = sum_j B_j / Q^{m-j}; numerator over Q^k is B_{m-k}.
        const UPoly& Q = factored_den[i].poly;
        const int m = factored_den[i].multiplicity;
        std::vector<UPoly> digits;
        UPoly rest = A;
        for (int j = 0; j < m; ++j) {
            auto [quot, rem] = rest.divrem(Q);
            digits.push_back(rem);
            rest = quot;
        }
        if (!rest.is_zero())
            throw inconsistency_error("partial fraction digit expansion overflowed its block");
        std::vector<UPoly> nums(m, UPoly(n));
        for (int k = 1; k <= m; ++k) nums[k - 1] = digits[m - k];
        out.numerators.push_back(std::move(nums));
    }
    return out;
}

std::pair<UPoly, UPoly> resum_partial_fractions(const PartialFractions& pf,
                                                const std::vector<DenFactor>& factored_den) {
    if (pf.numerators.size() != factored_den.size())
        throw domain_error("decomposition and factorization disagree");
    int n = pf.polynomial_part.nvars();
    if (n == 0 && !factored_den.empty()) n = factored_den.front().poly.nvars();

    UPoly D = UPoly::constant(RatFunc::constant(Rational(1), n));
    std::vector<UPoly> blocks;
    for (const auto& f : factored_den) {
        blocks.push_back(f.poly.pow(f.multiplicity));
        D = D * blocks.back();
    }
    UPoly total = pf.polynomial_part * D;
    for (size_t i = 0; i < factored_den.size(); ++i) {
        UPoly cofactor = D.divrem(blocks[i]).first;
        const UPoly& Q = factored_den[i].poly;
        const int m = factored_den[i].multiplicity;
        for (int k = 1; k <= m; ++k) {
            // numerator over Q^k contributes num * Q^{m-k} * cofactor.
            total = total + pf.numerators[i][k - 1] * Q.pow(m - k) * cofactor;
        }
    }
    return {total, D};
}

} // namespace slrep
