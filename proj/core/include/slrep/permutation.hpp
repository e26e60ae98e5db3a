#ifndef SLREP_PERMUTATION_HPP
#define SLREP_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "slrep/errors.hpp"

namespace slrep {

/// Permutation of {1..n}, stored as the image sequence: images()[i-1] is the
/// image of i. Composition is (p * q)(i) = p(q(i)), so acting on rational
/// functions by variable substitution is a left action.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
                throw domain_error("permutation images are not a bijection of {1..n}");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    /// The transposition (a b) in S_n.
    static Permutation transposition(int n, int a, int b) {
        if (a < 1 || b < 1 || a > n || b > n)
            throw domain_error("transposition points outside {1..n}");
        Permutation p = identity(n);
        std::swap(p.images_[a - 1], p.images_[b - 1]);
        return p;
    }

    /// Adjacent transposition s_i = (i, i+1).
    static Permutation adjacent(int n, int i) { return transposition(n, i, i + 1); }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation operator*(const Permutation& q) const {
        if (size() != q.size()) throw domain_error("composing permutations of different degree");
        std::vector<int> im(images_.size());
        for (int i = 1; i <= size(); ++i) im[i - 1] = (*this)(q(i));
        Permutation r;
        r.images_ = std::move(im);
        return r;
    }

    Permutation inverse() const {
        std::vector<int> im(images_.size());
        for (int i = 1; i <= size(); ++i) im[images_[i - 1] - 1] = i;
        Permutation r;
        r.images_ = std::move(im);
        return r;
    }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    int sign() const {
        std::vector<bool> seen(images_.size(), false);
        int s = 1;
        for (int i = 1; i <= size(); ++i) {
            if (seen[i - 1]) continue;
            int len = 0;
            for (int j = i; !seen[j - 1]; j = (*this)(j)) {
                seen[j - 1] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    /// Points moved by the permutation.
    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) s.push_back(i);
        return s;
    }

    /// Packed encoding, 4 bits per point; requires n <= 16. Used as a hash
    /// key during group closure.
    std::uint64_t pack() const {
        std::uint64_t code = 0;
        for (int i = size() - 1; i >= 0; --i) code = (code << 4) | static_cast<std::uint64_t>(images_[i] - 1);
        return code;
    }

    static Permutation unpack(std::uint64_t code, int n) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) {
            im[i] = static_cast<int>(code & 0xf) + 1;
            code >>= 4;
        }
        return Permutation(std::move(im));
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

} // namespace slrep

#endif
