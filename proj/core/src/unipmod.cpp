#include "slrep/unipmod.hpp"

#include <algorithm>
#include <functional>

#include "slrep/errors.hpp"
#include "slrep/seeded.hpp"

namespace slrep {

bool is_shift_invariant(const RatFunc& f) {
    const int n = f.nvars();
    std::vector<RatFunc> repl;
    RatFunc lambda = RatFunc::variable(n + 1, n + 1);
    for (int i = 1; i <= n; ++i) repl.push_back(RatFunc::variable(i, n + 1) + lambda);
    return f.substituted(repl) == f.extended(n + 1);
}

bool validate_difference_module(const DifferenceModule& m) {
    if (!validate_cocycle(m.underlying)) return false;
    for (const auto& g : m.underlying.gen_matrices())
        for (int r = 0; r < g.rows(); ++r)
            for (int c = 0; c < g.cols(); ++c)
                if (!is_shift_invariant(g.at(r, c))) return false;
    return true;
}

std::vector<QMatrix> exp_lambda(const QMatrix& nu) {
    const int N = nu.rows();
    std::vector<QMatrix> coeffs;
    coeffs.push_back(QMatrix::identity(N));
    QMatrix power = QMatrix::identity(N);
    Rational fact(1);
    for (int k = 1; k <= N; ++k) {
        power = power * nu;
        if (power.is_zero()) break;
        if (k == N) throw domain_error("exp_lambda requires a nilpotent matrix");
        fact *= k;
        coeffs.push_back(power.scaled(Rational(1) / fact));
    }
    return coeffs;
}

namespace {

/// Weighted one-block shift: entry (i, i+1) = i+1 (0-indexed), so
/// exp(u W_N) is the Pascal matrix with entries C(j, i) u^{j-i}.
QMatrix weighted_shift_block(int N) {
    QMatrix W(N, N);
    for (int i = 0; i + 1 < N; ++i) W.at(i, i + 1) = i + 1;
    return W;
}

QMatrix nilpotent_for_partition(const std::vector<int>& parts) {
    QMatrix nu(0, 0);
    for (int p : parts) nu = nu.block_diag(weighted_shift_block(p));
    return nu;
}

/// sum_k scalar^k (nu^k / k!) for nilpotent nu, as a matrix over K.
RfMatrix exp_scaled(const QMatrix& nu, const RatFunc& scalar) {
    const int N = nu.rows();
    const int n = scalar.nvars();
    auto coeffs = exp_lambda(nu);
    RfMatrix out(N, N, n);
    RatFunc power = RatFunc::constant(Rational(1), n);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) power = power * scalar;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                const Rational& q = coeffs[k].at(r, c);
                if (q != 0) out.at(r, c) = out.at(r, c) + RatFunc::constant(q, n) * power;
            }
    }
    return out;
}

} // namespace

DifferenceModule standard_indecomposable(int N, int n) {
    if (N < 1) throw domain_error("standard_indecomposable needs N >= 1");
    if (n < 2) throw domain_error("standard_indecomposable needs level n >= 2");
    std::vector<RfMatrix> gens;
    RatFunc diff = RatFunc::variable(2, n) - RatFunc::variable(1, n);
    gens.push_back(exp_scaled(weighted_shift_block(N), diff));
    for (int i = 2; i < n; ++i) gens.push_back(RfMatrix::identity(N, n));
    return DifferenceModule{CocycleModule(n, N, std::move(gens))};
}

DifferenceModule standard_sum(const std::vector<int>& parts, int n) {
    if (parts.empty()) throw domain_error("standard_sum needs at least one part");
    DifferenceModule acc = standard_indecomposable(parts[0], n);
    for (size_t i = 1; i < parts.size(); ++i)
        acc.underlying = direct_sum(acc.underlying, standard_indecomposable(parts[i], n).underlying);
    return acc;
}

OneParamFamily one_param_extract(const DifferenceModule& m, const TrivializationWitness& witness) {
    const CocycleModule& mod = m.underlying;
    const int n = mod.level();
    const int N = mod.rank();

    if (!witness_is_valid(mod, witness))
        throw domain_error("witness does not trivialize the module");
    if (!validate_difference_module(m))
        throw domain_error("module entries are not shift-invariant");

    // Adjoin lambda as variable n+1 and shift the witness.
    std::vector<RatFunc> shift;
    RatFunc lambda = RatFunc::variable(n + 1, n + 1);
    for (int i = 1; i <= n; ++i) shift.push_back(RatFunc::variable(i, n + 1) + lambda);
    shift.push_back(lambda);  // lambda maps to itself when extending entries

    RfMatrix phi_ext = witness.phi.extended(n + 1);
    RfMatrix phi_shifted(N, N, n + 1);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            RatFunc e = witness.phi.at(r, c).extended(n + 1);
            phi_shifted.at(r, c) = e.substituted(shift);
        }
    RfMatrix C = phi_ext.inverted() * phi_shifted;

    // Entries must be polynomials in lambda alone with rational coefficients.
    int max_deg = 0;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            const RatFunc& e = C.at(r, c);
            if (!e.den().is_one())
                throw inconsistency_error(
                    "one_param_extract: entry has a non-constant denominator (witness or module "
                    "invalid)");
            for (int v = 1; v <= n; ++v)
                if (e.num().degree_in(v) > 0)
                    throw inconsistency_error(
                        "one_param_extract: entry depends on x-variables (witness or module "
                        "invalid)");
            max_deg = std::max(max_deg, e.num().degree_in(n + 1));
        }

    OneParamFamily fam;
    fam.family.assign(max_deg + 1, QMatrix(N, N));
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            for (const auto& [mono, coeff] : C.at(r, c).num().terms())
                fam.family[mono[n]].at(r, c) = coeff;
        }
    fam.nu = fam.family.size() > 1 ? fam.family[1] : QMatrix(N, N);

    // nu must be nilpotent; a polynomial one-parameter family cannot fail
    // this in characteristic zero, so failure flags a bug.
    QMatrix power = fam.nu;
    for (int k = 1; k < N && !power.is_zero(); ++k) power = power * fam.nu;
    if (!power.is_zero() && N > 0)
        throw inconsistency_error("one_param_extract: nu is not nilpotent");

    // Certify N(lambda) = exp(lambda nu) ...
    auto expc = exp_lambda(fam.nu);
    if (expc.size() != fam.family.size())
        throw inconsistency_error("one_param_extract: family does not match exp(lambda nu)");
    for (size_t k = 0; k < expc.size(); ++k)
        if (!(expc[k] == fam.family[k]))
            throw inconsistency_error("one_param_extract: family does not match exp(lambda nu)");

    // ... and the homomorphism law N(lambda+mu) = N(lambda) N(mu):
    // coefficient of lambda^a mu^b must satisfy C(a+b, a) F_{a+b} = F_a F_b.
    const int L = static_cast<int>(fam.family.size());
    for (int a = 0; a < L; ++a)
        for (int b = 0; a + b < L; ++b) {
            QMatrix lhs = fam.family[a + b].scaled(
                Rational(binomial(static_cast<unsigned>(a + b), static_cast<unsigned>(a))));
            if (!(lhs == fam.family[a] * fam.family[b]))
                throw inconsistency_error("one_param_extract: homomorphism law failed");
        }
    return fam;
}

std::vector<int> jordan_lengths(const OneParamFamily& fam) {
    const int N = fam.nu.rows();
    // r_k = rank(nu^k); blocks of size >= k number r_{k-1} - r_k.
    std::vector<int> ranks{N};
    QMatrix power = QMatrix::identity(N);
    for (int k = 1; k <= N; ++k) {
        power = power * fam.nu;
        ranks.push_back(power.rank());
        if (ranks.back() == 0) break;
    }
    while (static_cast<int>(ranks.size()) <= N) ranks.push_back(0);

    std::vector<int> sizes;
    for (int k = 1; k <= N; ++k) {
        int count_ge_k = ranks[k - 1] - ranks[k];
        int count_ge_k1 = k < N ? ranks[k] - ranks[k + 1] : 0;
        int exactly_k = count_ge_k - count_ge_k1;
        for (int c = 0; c < exactly_k; ++c) sizes.push_back(k);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

std::vector<std::vector<int>> partitions_of(int N) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(N, N);
    return out;
}

namespace {

/// Everything about the module rewritten in difference coordinates
/// u_i = x_i - x_{i+1} (i = 1..n-1). Entries of a difference module are
/// z-free in the coordinates (u, z = x1), which is checked exactly.
struct DifferenceCoordinates {
    int n = 0;       // x-level
    int unvars = 0;  // n - 1
    std::vector<RfMatrix> gens;                       // entries over u
    std::vector<std::vector<RatFunc>> gen_actions;    // s_i as substitution on u
};

RatFunc drop_z(const RatFunc& f, int n) {
    // f lives over (u_1..u_{n-1}, z); require z absent and truncate.
    if (f.num().degree_in(n) > 0 || f.den().degree_in(n) > 0)
        throw inconsistency_error("entry depends on x1 in difference coordinates");
    auto truncate = [&](const MultiPoly& p) {
        MultiPoly q(n - 1);
        for (const auto& [m, c] : p.terms()) {
            Monomial t(m.begin(), m.end() - 1);
            q.add_term(t, c);
        }
        return q;
    };
    return RatFunc(truncate(f.num()), truncate(f.den()));
}

DifferenceCoordinates to_difference_coords(const CocycleModule& mod) {
    DifferenceCoordinates dc;
    dc.n = mod.level();
    dc.unvars = dc.n - 1;

    // x_j = z - (u_1 + ... + u_{j-1}), with u_i = variable i and z =
    // variable n in the intermediate (u, z) coordinates.
    std::vector<RatFunc> x_to_uz;
    for (int j = 1; j <= dc.n; ++j) {
        RatFunc e = RatFunc::variable(dc.n, dc.n);  // z
        for (int i = 1; i < j; ++i) e = e - RatFunc::variable(i, dc.n);
        x_to_uz.push_back(e);
    }

    for (const auto& g : mod.gen_matrices()) {
        RfMatrix converted(g.rows(), g.cols(), dc.unvars);
        for (int r = 0; r < g.rows(); ++r)
            for (int c = 0; c < g.cols(); ++c)
                converted.at(r, c) = drop_z(g.at(r, c).substituted(x_to_uz), dc.n);
        dc.gens.push_back(std::move(converted));
    }

    // s_i acting on the u variables.
    for (int i = 1; i < dc.n; ++i) {
        std::vector<RatFunc> action;
        for (int j = 1; j <= dc.unvars; ++j) {
            RatFunc uj = RatFunc::variable(j, dc.unvars);
            if (j == i - 1) {
                action.push_back(uj + RatFunc::variable(i, dc.unvars));
            } else if (j == i) {
                action.push_back(-uj);
            } else if (j == i + 1) {
                action.push_back(RatFunc::variable(i, dc.unvars) + uj);
            } else {
                action.push_back(uj);
            }
        }
        dc.gen_actions.push_back(std::move(action));
    }
    return dc;
}

std::vector<Monomial> monomials_up_to(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = e;
            rec(pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(0, d);
    return out;
}

Rational eval_monomial(const Monomial& m, const std::vector<Rational>& point) {
    Rational v(1);
    for (size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) v *= point[i];
    return v;
}

struct CandidateSolver {
    const DifferenceCoordinates& dc;
    const QMatrix& nu;
    int N;
    int degree_budget;
    SeededSource& src;

    std::vector<Monomial> monos;
    std::vector<RfMatrix> twists;  // E_i over u

    CandidateSolver(const DifferenceCoordinates& dc_, const QMatrix& nu_, int budget,
                    SeededSource& src_)
        : dc(dc_), nu(nu_), N(nu_.rows()), degree_budget(budget), src(src_) {
        monos = monomials_up_to(dc.unvars, degree_budget);
        // E_1 = exp((x2 - x1) nu) = exp(-u_1 nu); E_i = identity otherwise.
        RatFunc minus_u1 = -RatFunc::variable(1, dc.unvars);
        for (size_t i = 0; i < dc.gens.size(); ++i)
            twists.push_back(i == 0 ? exp_scaled(nu, minus_u1) : RfMatrix::identity(N, dc.unvars));
    }

    int unknowns() const { return static_cast<int>(monos.size()) * N * N; }
    int unknown_id(int alpha, int r, int c) const { return (alpha * N + r) * N + c; }

    /// One specialization point contributes one block of linear equations:
    /// sum_k f_i[r,k](xi) C0[k,c](s_i xi) = sum_k C0[r,k](xi) E_i[k,c](xi).
    void add_point_equations(std::vector<std::vector<Rational>>& rows) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            std::vector<Rational> xi(dc.unvars);
            for (auto& q : xi) q = Rational(src.next_int(-40, 40), src.next_int(1, 7));
            for (auto& q : xi) q.canonicalize();

            bool ok = true;
            for (const auto& g : dc.gens)
                for (int r = 0; r < N && ok; ++r)
                    for (int c = 0; c < N; ++c)
                        if (g.at(r, c).denominator_vanishes_at(xi)) {
                            ok = false;
                            break;
                        }
            if (!ok) continue;

            for (size_t gi = 0; gi < dc.gens.size(); ++gi) {
                // Transformed point: coordinates of s_i(u_j) evaluated at xi.
                std::vector<Rational> xi_s(dc.unvars);
                for (int j = 0; j < dc.unvars; ++j)
                    xi_s[j] = dc.gen_actions[gi][j].evaluated(xi);

                std::vector<std::vector<Rational>> mono_at_xi_s(monos.size());
                std::vector<Rational> mono_xi(monos.size()), mono_xis(monos.size());
                for (size_t a = 0; a < monos.size(); ++a) {
                    mono_xi[a] = eval_monomial(monos[a], xi);
                    mono_xis[a] = eval_monomial(monos[a], xi_s);
                }

                for (int r = 0; r < N; ++r)
                    for (int c = 0; c < N; ++c) {
                        std::vector<Rational> row(unknowns(), Rational(0));
                        for (int k = 0; k < N; ++k) {
                            Rational fv = dc.gens[gi].at(r, k).evaluated(xi);
                            if (fv != 0)
                                for (size_t a = 0; a < monos.size(); ++a)
                                    row[unknown_id(static_cast<int>(a), k, c)] += fv * mono_xis[a];
                            Rational ev = twists[gi].at(k, c).evaluated(xi);
                            if (ev != 0)
                                for (size_t a = 0; a < monos.size(); ++a)
                                    row[unknown_id(static_cast<int>(a), r, k)] -= mono_xi[a] * ev;
                        }
                        rows.push_back(std::move(row));
                    }
            }
            return;
        }
        throw resource_error("classify_module: could not find a pole-free specialization point");
    }

    RfMatrix build_candidate(const std::vector<Rational>& coeffs) const {
        RfMatrix C0(N, N, dc.unvars);
        for (size_t a = 0; a < monos.size(); ++a)
            for (int r = 0; r < N; ++r)
                for (int c = 0; c < N; ++c) {
                    const Rational& q = coeffs[unknown_id(static_cast<int>(a), r, c)];
                    if (q != 0)
                        C0.at(r, c) =
                            C0.at(r, c) + RatFunc::from_poly(MultiPoly::monomial(q, monos[a]));
                }
        return C0;
    }

    bool exact_residual_ok(const RfMatrix& C0) const {
        for (size_t gi = 0; gi < dc.gens.size(); ++gi) {
            RfMatrix lhs = dc.gens[gi] * C0.substituted(dc.gen_actions[gi]);
            RfMatrix rhs = C0 * twists[gi];
            if (!(lhs == rhs)) return false;
        }
        return true;
    }

    /// Returns an invertible exact solution of the twisted witness system,
    /// or nothing if the candidate partition fails at this budget.
    std::optional<RfMatrix> solve() {
        std::vector<std::vector<Rational>> rows;
        int points = static_cast<int>(monos.size()) + 2;
        for (int p = 0; p < points; ++p) add_point_equations(rows);

        for (int round = 0; round < 5; ++round) {
            QMatrix sys(static_cast<int>(rows.size()), unknowns());
            for (size_t r = 0; r < rows.size(); ++r)
                for (int c = 0; c < unknowns(); ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
            auto kernel = sys.kernel();
            if (kernel.empty()) return std::nullopt;

            bool saw_spurious = false;
            for (int combo = 0; combo < 8; ++combo) {
                std::vector<Rational> coeffs(unknowns(), Rational(0));
                for (const auto& basis_vec : kernel) {
                    long w = src.next_int(-9, 9);
                    if (w == 0) continue;
                    for (int c = 0; c < unknowns(); ++c) coeffs[c] += Rational(w) * basis_vec[c];
                }
                RfMatrix C0 = build_candidate(coeffs);
                if (!exact_residual_ok(C0)) {
                    saw_spurious = true;
                    break;
                }
                if (!C0.det().is_zero()) return C0;
            }
            if (!saw_spurious) return std::nullopt;  // genuine solutions, all singular
            // The specialized kernel was too big; sharpen with more points.
            for (int p = 0; p < points; ++p) add_point_equations(rows);
        }
        return std::nullopt;
    }
};

} // namespace

Classification classify_module(const DifferenceModule& m, std::uint64_t seed,
                               int max_degree_budget) {
    const CocycleModule& mod = m.underlying;
    const int n = mod.level();
    const int N = mod.rank();
    if (n < 2) throw domain_error("classify_module needs level n >= 2");
    if (!validate_difference_module(m))
        throw domain_error("classify_module requires a valid difference module");

    DifferenceCoordinates dc = to_difference_coords(mod);
    auto partitions = partitions_of(N);

    SeededSource src(seed);
    for (int budget = 0; budget <= max_degree_budget; ++budget) {
        for (const auto& parts : partitions) {
            QMatrix nu_candidate = nilpotent_for_partition(parts);
            CandidateSolver solver(dc, nu_candidate, budget, src);
            auto C0 = solver.solve();
            if (!C0) continue;

            // Witness phi = C0(x) * exp(-x1 nu) back in x-coordinates.
            std::vector<RatFunc> u_to_x;
            for (int i = 1; i < n; ++i)
                u_to_x.push_back(RatFunc::variable(i, n) - RatFunc::variable(i + 1, n));
            RfMatrix C0x = C0->substituted(u_to_x);
            RfMatrix expm = exp_scaled(nu_candidate, -RatFunc::variable(1, n));
            TrivializationWitness witness{C0x * expm};
            if (!witness_is_valid(mod, witness))
                throw inconsistency_error("classify_module: solver produced an invalid witness");

            Classification result;
            result.witness = witness;
            result.family = one_param_extract(m, witness);
            result.nu = result.family.nu;
            result.jordan = jordan_lengths(result.family);
            return result;
        }
    }
    throw resource_error(
        "classify_module: no shift-adapted witness within the degree budget; the module may "
        "require a larger budget");
}

} // namespace slrep
