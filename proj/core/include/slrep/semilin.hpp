#ifndef SLREP_SEMILIN_HPP
#define SLREP_SEMILIN_HPP

#include <map>
#include <string>
#include <vector>

#include "slrep/matrix.hpp"

namespace slrep {

/// Finite-rank semilinear module over K at level n, presented by one
/// invertible matrix per adjacent transposition s_i = (i, i+1). A vector v
/// transforms as v -> f_sigma * sigma(v), and words compose by the cocycle
/// rule f_{sigma tau} = f_sigma * sigma(f_tau).
class CocycleModule {
public:
    CocycleModule() : level_(0), rank_(0) {}
    CocycleModule(int level, int rank, std::vector<RfMatrix> gen_matrices);

    static CocycleModule trivial(int level, int rank);

    int level() const { return level_; }
    int rank() const { return rank_; }

    /// Matrix of s_i = (i, i+1), i in 1..level-1.
    const RfMatrix& gen_matrix(int i) const;
    const std::vector<RfMatrix>& gen_matrices() const { return gen_matrices_; }

    /// f_sigma for an arbitrary permutation, composed along a reduced word.
    RfMatrix cocycle_at(const Permutation& sigma) const;

    /// f_sigma for every element of S_level, in lexicographic order of the
    /// image sequences. Built by breadth-first extension from generators.
    std::vector<std::pair<Permutation, RfMatrix>> full_cocycle() const;

    bool operator==(const CocycleModule&) const = default;

private:
    int level_;
    int rank_;
    std::vector<RfMatrix> gen_matrices_;
};

/// True iff the assigned matrices satisfy the semilinear Coxeter relations:
/// involution f_s * s(f_s) = 1, the braid relation for adjacent pairs, and
/// commutation for distant pairs. Non-invertible generators are a domain
/// error.
bool validate_cocycle(const CocycleModule& m);

/// The coboundary module f_s = phi * s(phi)^{-1}; singular phi is a domain
/// error. validate_cocycle holds by construction.
CocycleModule coboundary_from(const RfMatrix& phi, int level);

/// Witness of trivializability: f_sigma = phi * sigma(phi)^{-1} for all
/// generators (hence all of S_n).
struct TrivializationWitness {
    RfMatrix phi;
};

/// Checks the witness equation f_s * s(phi) = phi on every generator.
bool witness_is_valid(const CocycleModule& m, const TrivializationWitness& w);

/// Constructive Hilbert 90: phi = sum_sigma f_sigma * sigma(B) over seeded
/// probe matrices B with degree <= 1 integer-coefficient entries, retried
/// until invertible (8 attempts, then a resource error). Requires a valid
/// cocycle and level <= 6 (the sum has n! terms). Deterministic given seed.
TrivializationWitness speiser_trivialize(const CocycleModule& m, std::uint64_t seed);

struct EigenIndependenceReport {
    bool independent_over_K = false;
    bool dependent_over_invariants = false;  // "not applicable" case
    /// Lemma-level conclusion: invariant-independence implies K-independence.
    bool value() const { return independent_over_K || dependent_over_invariants; }
};

/// For chi-eigenvectors (f_s * s(v) = chi_s * v, checked first): verifies
/// that independence over the invariant subfield forces independence over
/// K. Since the canonical reduced kernel of the vector matrix has invariant
/// entries, a K-dependency always descends; a report with value() == false
/// would expose a bug.
EigenIndependenceReport check_eigen_independence(const std::vector<std::vector<RatFunc>>& vectors,
                                                 const CocycleModule& m,
                                                 const std::vector<RatFunc>& chi);

CocycleModule direct_sum(const CocycleModule& a, const CocycleModule& b);
CocycleModule tensor_product(const CocycleModule& a, const CocycleModule& b);

/// Basis change to g^{-1} f_sigma sigma(g); preserves cocycle validity.
CocycleModule conjugate_module(const CocycleModule& m, const RfMatrix& g);

} // namespace slrep

#endif
