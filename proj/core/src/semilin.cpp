#include "slrep/semilin.hpp"

#include <algorithm>
#include <map>

#include "slrep/errors.hpp"

namespace slrep {

CocycleModule::CocycleModule(int level, int rank, std::vector<RfMatrix> gen_matrices)
    : level_(level), rank_(rank), gen_matrices_(std::move(gen_matrices)) {
    if (level_ < 1) throw domain_error("module level must be >= 1");
    if (static_cast<int>(gen_matrices_.size()) != std::max(0, level_ - 1))
        throw domain_error("need one generator matrix per adjacent transposition");
    for (const auto& g : gen_matrices_) {
        if (g.rows() != rank_ || g.cols() != rank_)
            throw domain_error("generator matrix is not rank x rank");
        if (g.nvars() != level_) throw domain_error("generator matrix level mismatch");
    }
}

CocycleModule CocycleModule::trivial(int level, int rank) {
    std::vector<RfMatrix> gens(std::max(0, level - 1), RfMatrix::identity(rank, level));
    return CocycleModule(level, rank, std::move(gens));
}

const RfMatrix& CocycleModule::gen_matrix(int i) const {
    if (i < 1 || i > level_ - 1) throw domain_error("generator index outside 1..n-1");
    return gen_matrices_[i - 1];
}

RfMatrix CocycleModule::cocycle_at(const Permutation& sigma) const {
    if (sigma.size() != level_) throw domain_error("permutation level mismatch");
    // Reduce sigma by descents: sigma * s_{j1} * ... * s_{jm} = id, so
    // sigma = s_{jm} * ... * s_{j1}, and the cocycle rule unrolls to
    // f_sigma = prod_k prefix_k(f_{s_{i_k}}) over the word left to right.
    Permutation tau = sigma;
    std::vector<int> word;
    while (!tau.is_identity()) {
        int descent = -1;
        for (int i = 1; i < level_; ++i) {
            if (tau(i) > tau(i + 1)) {
                descent = i;
                break;
            }
        }
        word.push_back(descent);
        tau = tau * Permutation::adjacent(level_, descent);
    }
    std::reverse(word.begin(), word.end());
    RfMatrix acc = RfMatrix::identity(rank_, level_);
    Permutation prefix = Permutation::identity(level_);
    for (int i : word) {
        acc = acc * gen_matrix(i).permuted(prefix);
        prefix = prefix * Permutation::adjacent(level_, i);
    }
    return acc;
}

std::vector<std::pair<Permutation, RfMatrix>> CocycleModule::full_cocycle() const {
    // Breadth-first over S_n: f_{sigma s_i} = f_sigma * sigma(f_{s_i}).
    std::map<Permutation, RfMatrix> table;
    table.emplace(Permutation::identity(level_), RfMatrix::identity(rank_, level_));
    std::vector<Permutation> frontier{Permutation::identity(level_)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& sigma : frontier) {
            for (int i = 1; i < level_; ++i) {
                Permutation tau = sigma * Permutation::adjacent(level_, i);
                if (table.count(tau)) continue;
                table.emplace(tau, table.at(sigma) * gen_matrix(i).permuted(sigma));
                next.push_back(tau);
            }
        }
        frontier = std::move(next);
    }
    return {table.begin(), table.end()};
}

bool validate_cocycle(const CocycleModule& m) {
    const int n = m.level();
    for (int i = 1; i < n; ++i)
        if (m.gen_matrix(i).det().is_zero())
            throw domain_error("invalid module: generator matrix for swap " + std::to_string(i) +
                               " is singular");

    auto s = [&](int i) { return Permutation::adjacent(n, i); };
    const RfMatrix id = RfMatrix::identity(m.rank(), n);

    for (int i = 1; i < n; ++i) {
        const RfMatrix& f = m.gen_matrix(i);
        if (!(f * f.permuted(s(i)) == id)) return false;
    }
    for (int i = 1; i + 1 < n; ++i) {
        const RfMatrix& a = m.gen_matrix(i);
        const RfMatrix& b = m.gen_matrix(i + 1);
        RfMatrix lhs = a * b.permuted(s(i)) * a.permuted(s(i) * s(i + 1));
        RfMatrix rhs = b * a.permuted(s(i + 1)) * b.permuted(s(i + 1) * s(i));
        if (!(lhs == rhs)) return false;
    }
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            const RfMatrix& a = m.gen_matrix(i);
            const RfMatrix& b = m.gen_matrix(j);
            if (!(a * b.permuted(s(i)) == b * a.permuted(s(j)))) return false;
        }
    return true;
}

CocycleModule coboundary_from(const RfMatrix& phi, int level) {
    if (phi.nvars() != level) throw domain_error("phi level mismatch");
    if (phi.det().is_zero()) throw domain_error("phi is singular");
    std::vector<RfMatrix> gens;
    for (int i = 1; i < level; ++i) {
        Permutation si = Permutation::adjacent(level, i);
        gens.push_back(phi * phi.permuted(si).inverted());
    }
    return CocycleModule(level, phi.rows(), std::move(gens));
}

bool witness_is_valid(const CocycleModule& m, const TrivializationWitness& w) {
    const int n = m.level();
    if (w.phi.rows() != m.rank() || w.phi.cols() != m.rank() || w.phi.nvars() != n) return false;
    if (w.phi.det().is_zero()) return false;
    for (int i = 1; i < n; ++i) {
        Permutation si = Permutation::adjacent(n, i);
        if (!(m.gen_matrix(i) * w.phi.permuted(si) == w.phi)) return false;
    }
    return true;
}

TrivializationWitness speiser_trivialize(const CocycleModule& m, std::uint64_t seed) {
    if (!validate_cocycle(m)) throw domain_error("speiser_trivialize requires a valid cocycle");
    const int n = m.level();
    const int N = m.rank();
    if (n > 6)
        throw resource_error("speiser averaging sums over n! elements; configured cap is n <= 6");

    auto table = m.full_cocycle();
    SeededSource src(seed);
    const int retries = 8;
    for (int attempt = 0; attempt < retries; ++attempt) {
        // Probe with random degree <= 1 entries, integer coefficients in [-9, 9].
        RfMatrix probe(N, N, n);
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                MultiPoly p = MultiPoly::constant(make_rational(src.next_int(-9, 9)), n);
                for (int v = 1; v <= n; ++v) {
                    long k = src.next_int(-9, 9);
                    if (k != 0) p = p + MultiPoly::variable(v, n) * make_rational(k);
                }
                probe.at(r, c) = RatFunc::from_poly(p);
            }

        RfMatrix phi(N, N, n);
        for (const auto& [sigma, f_sigma] : table) phi = phi + f_sigma * probe.permuted(sigma);

        // Cheap specialization pre-filter, then the exact determinant.
        SeededSource spec_src(seed ^ 0x5eedf11e);
        bool invertible = false;
        try {
            invertible = rank_specialized(phi, spec_src) == N;
        } catch (const resource_error&) {
            invertible = false;
        }
        if (!invertible) invertible = !phi.det().is_zero();
        if (invertible) return TrivializationWitness{phi};
    }
    throw resource_error("speiser_trivialize: all " + std::to_string(retries) +
                         " probe attempts yielded singular averages");
}

EigenIndependenceReport check_eigen_independence(const std::vector<std::vector<RatFunc>>& vectors,
                                                 const CocycleModule& m,
                                                 const std::vector<RatFunc>& chi) {
    const int n = m.level();
    const int N = m.rank();
    if (static_cast<int>(chi.size()) != n - 1)
        throw domain_error("need one character value per generator");
    if (vectors.empty()) throw domain_error("need at least one vector");

    // Precondition: each vector is a chi-eigenvector.
    for (size_t k = 0; k < vectors.size(); ++k) {
        if (static_cast<int>(vectors[k].size()) != N) throw domain_error("vector length != rank");
        for (int i = 1; i < n; ++i) {
            Permutation si = Permutation::adjacent(n, i);
            for (int r = 0; r < N; ++r) {
                RatFunc lhs(n);
                for (int c = 0; c < N; ++c)
                    lhs = lhs + m.gen_matrix(i).at(r, c) * vectors[k][c].permuted(si);
                if (!(lhs == chi[i - 1] * vectors[k][r]))
                    throw domain_error("vector " + std::to_string(k) +
                                       " is not an eigenvector for generator swap " +
                                       std::to_string(i));
            }
        }
    }

    // Columns are the vectors; K-rank decides everything.
    RfMatrix mat(N, static_cast<int>(vectors.size()), n);
    for (int r = 0; r < N; ++r)
        for (size_t c = 0; c < vectors.size(); ++c) mat.at(r, static_cast<int>(c)) = vectors[c][r];

    EigenIndependenceReport report;
    if (rank_exact(mat) == static_cast<int>(vectors.size())) {
        report.independent_over_K = true;
        return report;
    }

    // Dependent over K. The reduced kernel basis is canonical, hence fixed
    // by every generator; entries outside the invariant field would
    // contradict the eigenvector hypothesis.
    std::vector<Permutation> gens;
    for (int i = 1; i < n; ++i) gens.push_back(Permutation::adjacent(n, i));
    for (const auto& kv : kernel_basis(mat))
        for (const auto& entry : kv)
            if (!is_fixed_by(entry, gens)) return report;  // value() false: a bug detector
    report.dependent_over_invariants = true;
    return report;
}

CocycleModule direct_sum(const CocycleModule& a, const CocycleModule& b) {
    if (a.level() != b.level()) throw domain_error("direct sum needs equal levels");
    std::vector<RfMatrix> gens;
    for (int i = 1; i < a.level(); ++i) gens.push_back(a.gen_matrix(i).block_diag(b.gen_matrix(i)));
    return CocycleModule(a.level(), a.rank() + b.rank(), std::move(gens));
}

CocycleModule tensor_product(const CocycleModule& a, const CocycleModule& b) {
    if (a.level() != b.level()) throw domain_error("tensor product needs equal levels");
    std::vector<RfMatrix> gens;
    for (int i = 1; i < a.level(); ++i) gens.push_back(a.gen_matrix(i).kronecker(b.gen_matrix(i)));
    return CocycleModule(a.level(), a.rank() * b.rank(), std::move(gens));
}

CocycleModule conjugate_module(const CocycleModule& m, const RfMatrix& g) {
    if (g.nvars() != m.level()) throw domain_error("conjugator level mismatch");
    if (g.det().is_zero()) throw domain_error("conjugator is singular");
    RfMatrix ginv = g.inverted();
    std::vector<RfMatrix> gens;
    for (int i = 1; i < m.level(); ++i) {
        Permutation si = Permutation::adjacent(m.level(), i);
        gens.push_back(ginv * m.gen_matrix(i) * g.permuted(si));
    }
    return CocycleModule(m.level(), m.rank(), std::move(gens));
}

} // namespace slrep
