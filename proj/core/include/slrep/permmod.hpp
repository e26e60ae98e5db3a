#ifndef SLREP_PERMMOD_HPP
#define SLREP_PERMMOD_HPP

#include <map>
#include <vector>

#include "slrep/matrix.hpp"
#include "slrep/upoly.hpp"

namespace slrep {

/// Formal non-negative-integer combination of the basic objects indexed by
/// subset size s; kappa[s] is the multiplicity.
struct PermModuleExpr {
    std::map<int, Int> kappa;
    bool operator==(const PermModuleExpr&) const = default;
};

/// All s-subsets of {1..n} in colexicographic order of the sorted index
/// lists (the stable basis order used for serialization and matrices).
std::vector<std::vector<int>> subsets_colex(int n, int s);

/// Decomposition of the product of the size-a and size-b basic objects:
/// multiplicity of size a+b-j is multinomial(a+b-j; j, a-j, b-j) for
/// j = 0..min(a,b). The dimension identity
/// C(n,a) C(n,b) = sum_j N_j C(n, a+b-j) holds at every level n >= a+b.
PermModuleExpr product_decompose(int a, int b);

/// Dimension-identity check at a concrete level (exact).
bool product_dimension_identity(int a, int b, int n);

struct SplitMatrixResult {
    RfMatrix matrix;
    RatFunc det;
    bool is_basis;  // nonzero determinant certifies the isomorphism
};

/// The |T|! x |T|! matrix [xi_i(f_j)] over the orderings xi of T, for basis
/// candidates f_j fixed by the pointwise stabilizer of T. Yields the exact
/// determinant; zero means "not a basis".
SplitMatrixResult split_matrix(const std::vector<int>& T, const std::vector<RatFunc>& basis,
                               int n);

/// Integers a_{0..N} with sum_i a_i C(t, i) = t^N; a_i = i! S(N, i).
std::vector<Int> binomial_basis_coeffs(int N);

struct AlphaMapResult {
    RfMatrix matrix;
    int rank = 0;
    bool bijective = false;
};

/// Level-n matrix of the map from N copies of the size-N object plus N+1
/// copies of the size-(N+1) object to (size-N object) x (points), built
/// from elementary symmetric coefficients. The domain and codomain
/// dimensions agree by Pascal's rule; exact full rank certifies
/// bijectivity. Requires n >= N + 1.
AlphaMapResult alpha_map_matrix(int N, int n);

/// Checks that [S] -> vandermonde(sorted S) * (wedge of the points of S)
/// intertwines the basis-permuting action with the signed exterior-power
/// action, for every adjacent transposition and every N-subset at level n.
bool omega_iso_check(int N, int n);

/// Number of orbits of the setwise stabilizer of a fixed s-subset acting on
/// t-subsets of {1..n}: one orbit per realizable intersection size, so
/// min(s,t) - max(0, s+t-n) + 1. At every finite level this exceeds 1 for
/// 0 < s = t even though the colimit object has only scalar endomorphisms;
/// callers should not read endomorphism counts off finite levels.
int hom_orbit_count(int s, int t, int n);

/// One factor of a partial-fraction denominator: monic-in-t polynomial with
/// a multiplicity, asserted irreducible by the caller (recorded, not
/// verified).
struct DenFactor {
    UPoly poly;
    int multiplicity = 1;
};

struct PartialFractions {
    UPoly polynomial_part;
    /// numerators[i][m-1] is the numerator over factors[i].poly^m,
    /// of t-degree < deg factors[i].poly.
    std::vector<std::vector<UPoly>> numerators;
};

/// Decompose num / prod_i Q_i^{m_i} with pairwise coprime monic Q_i.
/// The decomposition is unique given the factorization and reconstructs the
/// input exactly; non-coprime or non-monic factors are domain errors.
PartialFractions partial_fractions(const UPoly& num, const std::vector<DenFactor>& factored_den);

/// Exact resummation of a decomposition (for reconstruction checks):
/// returns (numerator, denominator) as univariate polynomials.
std::pair<UPoly, UPoly> resum_partial_fractions(const PartialFractions& pf,
                                                const std::vector<DenFactor>& factored_den);

} // namespace slrep

#endif
