#ifndef SLREP_UNIPMOD_HPP
#define SLREP_UNIPMOD_HPP

#include <vector>

#include "slrep/semilin.hpp"

namespace slrep {

/// Cocycle module whose generator matrices have all entries in the
/// difference subfield (unchanged under the simultaneous shift
/// x_i -> x_i + lambda for a fresh lambda).
struct DifferenceModule {
    CocycleModule underlying;
};

/// Shift-invariance of a single value, tested exactly by adjoining a fresh
/// variable for the shift.
bool is_shift_invariant(const RatFunc& f);

/// Validates cocycle relations plus entrywise shift-invariance.
bool validate_difference_module(const DifferenceModule& m);

/// One-parameter unipotent family: nu nilpotent over Q and
/// N(lambda) = exp(lambda nu), a polynomial matrix since nu^rank = 0.
struct OneParamFamily {
    QMatrix nu;
    /// family[k] is the coefficient of lambda^k; family[0] = identity.
    std::vector<QMatrix> family;

    int rank() const { return nu.rows(); }
};

/// Matrix exponential exp(lambda nu) of a nilpotent nu, as lambda-power
/// coefficients.
std::vector<QMatrix> exp_lambda(const QMatrix& nu);

/// The rank-N module on the basis 1, x1, ..., x1^{N-1}: a transposition
/// moving x1 to x_m acts by the Pascal-type matrix with entry (i, j) =
/// C(j, i) (x_m - x1)^{j-i}; transpositions not moving x1 act trivially.
/// Entries lie in the difference subfield. Requires N >= 1, n >= 2.
DifferenceModule standard_indecomposable(int N, int n);

/// Direct sum of standard indecomposables for a partition (any order).
DifferenceModule standard_sum(const std::vector<int>& parts, int n);

/// From a trivializing witness: computes phi^{-1} * phi(x -> x + lambda),
/// verifies every entry is a polynomial in lambda alone with rational
/// coefficients (else an inconsistency error: the witness is not adapted to
/// the shift), extracts nu = d/dlambda at 0, and certifies both
/// N(lambda) = exp(lambda nu) and N(lambda + mu) = N(lambda) N(mu) as exact
/// polynomial identities.
OneParamFamily one_param_extract(const DifferenceModule& m, const TrivializationWitness& witness);

/// Jordan block sizes of nu, descending, from ranks of its powers.
std::vector<int> jordan_lengths(const OneParamFamily& fam);

struct Classification {
    std::vector<int> jordan;  // descending
    QMatrix nu;
    TrivializationWitness witness;
    OneParamFamily family;
};

/// Classify a difference module by finding a shift-adapted witness
/// phi = C0 * exp(-x1 nu_pi) with C0 over the difference subfield, searched
/// by ascending polynomial-degree budget over candidate partitions pi, then
/// running one_param_extract on it. Deterministic given seed. Inputs whose
/// adapted witnesses need entry degrees beyond the budget raise a resource
/// error.
Classification classify_module(const DifferenceModule& m, std::uint64_t seed,
                               int max_degree_budget = 4);

/// Partitions of N, each sorted descending, in a fixed deterministic order
/// (descending lexicographic, so {N} first).
std::vector<std::vector<int>> partitions_of(int N);

} // namespace slrep

#endif
