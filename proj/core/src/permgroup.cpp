#include "slrep/permgroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "slrep/errors.hpp"

namespace slrep {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<int> image_of_set(const Permutation& g, const std::vector<int>& set) {
    std::vector<int> img;
    img.reserve(set.size());
    for (int t : set) img.push_back(g(t));
    return sorted_unique(std::move(img));
}

} // namespace

std::vector<Permutation> group_closure(const std::vector<Permutation>& gens, int n, size_t cap) {
    if (n > 16) throw domain_error("group closure supports n <= 16");
    for (const auto& g : gens)
        if (g.size() != n) throw domain_error("generator degree differs from n");

    std::unordered_set<std::uint64_t> seen;
    std::vector<Permutation> elements;
    std::vector<size_t> frontier;
    seen.reserve(1 << 12);

    Permutation id = Permutation::identity(n);
    seen.insert(id.pack());
    elements.push_back(id);
    frontier.push_back(0);

    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t idx : frontier) {
            for (const auto& g : gens) {
                Permutation h = g * elements[idx];
                std::uint64_t key = h.pack();
                if (seen.insert(key).second) {
                    if (elements.size() >= cap)
                        throw resource_error("group closure exceeded cap of " + std::to_string(cap) +
                                             " elements");
                    elements.push_back(std::move(h));
                    next.push_back(elements.size() - 1);
                }
            }
        }
        frontier = std::move(next);
    }
    return elements;
}

Int group_order(const std::vector<Permutation>& gens, int n, size_t cap) {
    return Int(static_cast<unsigned long>(group_closure(gens, n, cap).size()));
}

std::vector<Permutation> pointwise_stabilizer_gens(const std::vector<int>& fixed, int n) {
    std::vector<int> sorted_fixed = sorted_unique(fixed);
    std::vector<int> free;
    for (int i = 1; i <= n; ++i)
        if (!contains(sorted_fixed, i)) free.push_back(i);
    std::vector<Permutation> gens;
    for (size_t i = 0; i + 1 < free.size(); ++i)
        gens.push_back(Permutation::transposition(n, free[i], free[i + 1]));
    return gens;
}

std::vector<int> stabilizer_join(const std::vector<int>& T1, const std::vector<int>& T2, int n,
                                 bool verify) {
    std::vector<int> a = sorted_unique(T1), b = sorted_unique(T2);
    for (int t : a)
        if (t < 1 || t > n) throw domain_error("support point outside {1..n}");
    for (int t : b)
        if (t < 1 || t > n) throw domain_error("support point outside {1..n}");

    std::vector<int> uni, diff, inter;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(diff));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));

    const int required = static_cast<int>(uni.size() + diff.size());
    if (n < required)
        throw domain_error("stabilizer_join needs level n >= |T1 u T2| + |T2 \\ T1| = " +
                           std::to_string(required) + ", got n = " + std::to_string(n));

    if (verify) {
        std::vector<Permutation> gens = pointwise_stabilizer_gens(a, n);
        for (auto& g : pointwise_stabilizer_gens(b, n)) gens.push_back(std::move(g));
        Int generated = group_order(gens, n);
        Int expected = factorial(static_cast<unsigned>(n - inter.size()));
        if (generated != expected)
            throw inconsistency_error(
                "strong generation failed: generated order " + generated.get_str() +
                ", pointwise stabilizer of the intersection has order " + expected.get_str());
    }
    return inter;
}

CanonicalOpenSubgroup canonicalize_open_subgroup(const OpenSubgroupSpec& spec, int n) {
    std::vector<int> S = sorted_unique(spec.support);
    std::vector<int> W = sorted_unique(spec.window);
    for (int s : S)
        if (!contains(W, s)) throw domain_error("support must lie inside the window");
    for (int w : W)
        if (w < 1 || w > n) throw domain_error("window point outside {1..n}");

    const int required = static_cast<int>(W.size() + S.size());
    if (n < required)
        throw domain_error("canonicalize_open_subgroup needs level n >= |W| + |S| = " +
                           std::to_string(required) + ", got n = " + std::to_string(n));

    for (const auto& g : spec.extra_gens) {
        if (g.size() != n) throw domain_error("extra generator degree differs from level");
        for (int moved : g.support())
            if (!contains(W, moved))
                throw domain_error("invalid spec: extra generator moves point " +
                                   std::to_string(moved) + " outside the window");
    }

    // Minimal support: iterate T -> T n g(T) until every extra generator
    // preserves T as a set. Products and stabilizer elements cannot move T
    // once the generators do not, so generator checks suffice; each shrink
    // step is justified by strong generation.
    std::vector<int> T = S;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& g : spec.extra_gens) {
            std::vector<int> gT = image_of_set(g, T);
            if (gT != T) {
                std::vector<int> inter;
                std::set_intersection(T.begin(), T.end(), gT.begin(), gT.end(),
                                      std::back_inserter(inter));
                T = std::move(inter);
                changed = true;
            }
        }
    }

    // H = image in Sym(T) of the generated subgroup; stabilizer elements
    // restrict to the identity, so the extra generators generate it.
    const int k = static_cast<int>(T.size());
    std::vector<Permutation> restricted;
    for (const auto& g : spec.extra_gens) {
        std::vector<int> images(k);
        for (int i = 0; i < k; ++i) {
            int img = g(T[i]);
            auto it = std::lower_bound(T.begin(), T.end(), img);
            images[i] = static_cast<int>(it - T.begin()) + 1;
        }
        restricted.push_back(Permutation(std::move(images)));
    }
    std::vector<Permutation> H_elements =
        k == 0 ? std::vector<Permutation>{} : group_closure(restricted, k);
    if (k == 0) H_elements = {};

    CanonicalOpenSubgroup canon;
    canon.T = T;
    for (const auto& h : H_elements) canon.H.push_back(h.images());
    if (canon.H.empty() && k >= 0) canon.H.push_back(Permutation::identity(k).images());
    std::sort(canon.H.begin(), canon.H.end());
    canon.H.erase(std::unique(canon.H.begin(), canon.H.end()), canon.H.end());
    return canon;
}

bool verify_canonical_subgroup(const OpenSubgroupSpec& spec, const CanonicalOpenSubgroup& canon,
                               int n) {
    // Expected order |H| * (n - |T|)! of the cut-out subgroup inside S_n.
    Int expected = Int(static_cast<unsigned long>(canon.H.size())) *
                   factorial(static_cast<unsigned>(n - canon.T.size()));
    if (expected > Int(static_cast<unsigned long>(kClosureCap)))
        throw resource_error("verification closure would exceed the element cap");

    std::vector<Permutation> gens = pointwise_stabilizer_gens(spec.support, n);
    for (const auto& g : spec.extra_gens) gens.push_back(g);
    std::vector<Permutation> closure = group_closure(gens, n);

    if (Int(static_cast<unsigned long>(closure.size())) != expected) return false;

    std::set<std::vector<int>> H_set(canon.H.begin(), canon.H.end());
    const auto& T = canon.T;
    for (const auto& g : closure) {
        std::vector<int> img = image_of_set(g, T);
        if (img != T) return false;
        std::vector<int> restriction(T.size());
        for (size_t i = 0; i < T.size(); ++i) {
            int to = g(T[i]);
            auto it = std::lower_bound(T.begin(), T.end(), to);
            restriction[i] = static_cast<int>(it - T.begin()) + 1;
        }
        if (!H_set.count(restriction)) return false;
    }
    return true;
}

namespace {

Int bracket_q(const GrowthParams& p, int s) {
    if (p.q == 1) return Int(s);
    return pow_int(Int(p.q), static_cast<unsigned>(s));
}

} // namespace

Int embedding_count(const GrowthParams& params, int n, int N) {
    if (n < 0 || N < 0) throw domain_error("embedding_count needs non-negative arguments");
    if (params.q == 1 && params.v != 0) throw domain_error("q = 1 forces v = 0");
    if (n > N) return 0;
    Int result(1);
    Int bN = bracket_q(params, N);
    for (int i = 0; i < n; ++i) result *= bN - bracket_q(params, i);
    return result;
}

bool growth_bounds_check(const GrowthParams& params, int n, int m, int N) {
    if (n < 0 || m < 0 || n + m > N) throw domain_error("growth_bounds_check needs 0 <= n, m, n+m <= N");
    const Int d_nn = embedding_count(params, n, n);
    const Int d_nN = embedding_count(params, n, N);
    const Int d_mN = embedding_count(params, m, N);
    const Int d_mnN = embedding_count(params, m + n, N);
    const Int qvn = params.q == 1 ? Int(1) : pow_int(Int(params.q), static_cast<unsigned>(params.v * n));

    // Lower bound ([N]_q - [n+m-1]_q)^n / d_n(n); the base is guarded by the
    // precondition and irrelevant when n = 0.
    Rational lower(0);
    if (n == 0) {
        lower = Rational(1);
    } else {
        Int base = bracket_q(params, N) - bracket_q(params, n + m - 1);
        Int basen(1);
        for (int i = 0; i < n; ++i) basen *= base;
        lower = Rational(basen) / Rational(d_nn);
    }

    if (d_mN == 0 || d_nn == 0) return false;
    Rational middle = Rational(d_mnN) / (Rational(d_mN) * Rational(d_nn));
    Rational witness = Rational(qvn * d_nN);

    Int bNn(1);
    for (int i = 0; i < n; ++i) bNn *= bracket_q(params, N);
    Rational top = Rational(qvn * bNn);

    return lower <= middle && middle <= witness && witness <= top;
}

} // namespace slrep
