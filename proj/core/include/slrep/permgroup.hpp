#ifndef SLREP_PERMGROUP_HPP
#define SLREP_PERMGROUP_HPP

#include <set>
#include <vector>

#include "slrep/permutation.hpp"
#include "slrep/rational.hpp"

namespace slrep {

/// Explicit element-list closure of <gens> inside S_n. Exceeding the cap is
/// a resource error; window sizes here are small by design, so no
/// stabilizer-chain machinery.
constexpr size_t kClosureCap = 1000000;

std::vector<Permutation> group_closure(const std::vector<Permutation>& gens, int n,
                                       size_t cap = kClosureCap);

/// Order of <gens> inside S_n, same cap.
Int group_order(const std::vector<Permutation>& gens, int n, size_t cap = kClosureCap);

/// Generators (adjacent transpositions of the free points) of the pointwise
/// stabilizer of `fixed` inside S_n.
std::vector<Permutation> pointwise_stabilizer_gens(const std::vector<int>& fixed, int n);

/// Presentation of an open subgroup: a promised support S (the pointwise
/// stabilizer of S is contained in the subgroup) plus finitely many extra
/// generators supported inside a window W containing S.
struct OpenSubgroupSpec {
    std::vector<int> support;             // S
    std::vector<int> window;              // W, contains S
    std::vector<Permutation> extra_gens;  // act only inside W
};

/// Canonical form (T, H): minimal support T and the induced subgroup of the
/// permutations of T, stored as a full sorted element list.
struct CanonicalOpenSubgroup {
    std::vector<int> T;                     // ascending
    std::vector<std::vector<int>> H;        // images on T, lexicographically sorted
    bool operator==(const CanonicalOpenSubgroup&) const = default;
};

/// Returns T1 n T2. With verify = true additionally certifies, by explicit
/// closure inside S_n, that the two pointwise stabilizers generate the
/// pointwise stabilizer of the intersection; requires
/// n >= |T1 u T2| + |T2 \ T1|.
std::vector<int> stabilizer_join(const std::vector<int>& T1, const std::vector<int>& T2, int n,
                                 bool verify = false);

/// Canonicalize a finitely presented open subgroup. Requires
/// n >= |W| + |S| (fresh points needed for the minimality argument).
CanonicalOpenSubgroup canonicalize_open_subgroup(const OpenSubgroupSpec& spec, int n);

/// Certifies by explicit closure inside S_n that the subgroup presented by
/// `spec` cuts out exactly {g : g(T) = T, g|T in H}. Resource error when
/// |H| * (n - |T|)! would exceed the closure cap.
bool verify_canonical_subgroup(const OpenSubgroupSpec& spec, const CanonicalOpenSubgroup& canon,
                               int n);

/// q = 1 for plain sets; otherwise a prime power, with v the dimension of
/// the fixed subspace.
struct GrowthParams {
    long q = 1;
    long v = 0;
};

/// Number of embeddings of the rank-n object into the rank-N object:
/// the falling factorial N(N-1)...(N-n+1) for q = 1, and
/// prod_{i<n} (q^N - q^i) for q > 1. Zero when n > N.
Int embedding_count(const GrowthParams& params, int n, int N);

/// Checks the growth chain numerically: with L the stated lower bound
/// ([N]_q - [n+m-1]_q)^n / d_n(n) and the upper-bound witness
/// q^{vn} d_n(N) for the middle quantity,
///   L <= d_{m+n}(N) / (d_m(N) d_n(n)) <= q^{vn} d_n(N) <= q^{vn} [N]_q^n.
bool growth_bounds_check(const GrowthParams& params, int n, int m, int N);

} // namespace slrep

#endif
