#include "slrep/matrix.hpp"

#include <algorithm>

namespace slrep {

RfMatrix::RfMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      entries_(static_cast<size_t>(rows) * cols, RatFunc(nvars)) {}

RfMatrix RfMatrix::identity(int n, int nvars) {
    RfMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc::constant(Rational(1), nvars);
    return m;
}

RfMatrix RfMatrix::operator+(const RfMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix shape mismatch");
    RfMatrix r(rows_, cols_, nvars_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

RfMatrix RfMatrix::operator-(const RfMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix shape mismatch");
    RfMatrix r(rows_, cols_, nvars_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

RfMatrix RfMatrix::operator*(const RfMatrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix shape mismatch in product");
    RfMatrix r(rows_, o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const RatFunc& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const RatFunc& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    }
    return r;
}

RfMatrix RfMatrix::scaled(const RatFunc& c) const {
    RfMatrix r(rows_, cols_, nvars_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
    return r;
}

bool RfMatrix::operator==(const RfMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

bool RfMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

RfMatrix RfMatrix::permuted(const Permutation& p) const {
    RfMatrix r(rows_, cols_, nvars_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].permuted(p);
    return r;
}

RfMatrix RfMatrix::extended(int new_nvars) const {
    RfMatrix r(rows_, cols_, new_nvars);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].extended(new_nvars);
    return r;
}

RfMatrix RfMatrix::substituted(const std::vector<RatFunc>& replacement) const {
    int out = replacement.empty() ? 0 : replacement.front().nvars();
    RfMatrix r(rows_, cols_, out);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].substituted(replacement);
    return r;
}

RfMatrix RfMatrix::transposed() const {
    RfMatrix r(cols_, rows_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RfMatrix RfMatrix::block_diag(const RfMatrix& o) const {
    if (nvars_ != o.nvars_) throw domain_error("matrix level mismatch");
    RfMatrix r(rows_ + o.rows_, cols_ + o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
    return r;
}

RfMatrix RfMatrix::kronecker(const RfMatrix& o) const {
    if (nvars_ != o.nvars_) throw domain_error("matrix level mismatch");
    RfMatrix r(rows_ * o.rows_, cols_ * o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (int k = 0; k < o.rows_; ++k)
                for (int l = 0; l < o.cols_; ++l)
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
        }
    return r;
}

namespace {

// Shared elimination core. Returns pivot count; optionally accumulates the
// determinant (square case) and the reduced rows for kernel extraction.
struct Elimination {
    RfMatrix m;
    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col;

    explicit Elimination(RfMatrix input) : m(std::move(input)) {
        pivot_row_of_col.assign(m.cols(), -1);
        int row = 0;
        for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
            int pr = -1;
            for (int r = row; r < m.rows(); ++r) {
                if (!m.at(r, col).is_zero()) {
                    pr = r;
                    break;
                }
            }
            if (pr < 0) continue;
            if (pr != row)
                for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(row, c));
            // Scale the pivot row to 1 and clear the column everywhere
            // (full reduction keeps the kernel basis canonical).
            RatFunc inv = m.at(row, col).inverse();
            for (int c = col; c < m.cols(); ++c)
                if (!m.at(row, c).is_zero()) m.at(row, c) = m.at(row, c) * inv;
            for (int r = 0; r < m.rows(); ++r) {
                if (r == row || m.at(r, col).is_zero()) continue;
                RatFunc factor = m.at(r, col);
                for (int c = col; c < m.cols(); ++c) {
                    if (m.at(row, c).is_zero()) continue;
                    m.at(r, c) = m.at(r, c) - factor * m.at(row, c);
                }
            }
            pivot_row_of_col[col] = row;
            pivot_col_of_row.push_back(col);
            ++row;
        }
    }

    int rank() const { return static_cast<int>(pivot_col_of_row.size()); }
};

} // namespace

RatFunc RfMatrix::det() const {
    if (rows_ != cols_) throw domain_error("determinant of non-square matrix");
    const int N = rows_;
    if (N == 0) return RatFunc::constant(Rational(1), nvars_);

    if (N <= 10) {
        // Laplace expansion with memoized column-subset minors: division
        // free, so no greatest-common-divisor work on large pivots.
        std::vector<RatFunc> dp(size_t(1) << N, RatFunc(nvars_));
        dp[0] = RatFunc::constant(Rational(1), nvars_);
        for (unsigned mask = 1; mask < (1u << N); ++mask) {
            int row = __builtin_popcount(mask) - 1;
            RatFunc acc(nvars_);
            // Expansion along the last row of the sub-block: sign
            // (-1)^(row + position of the column within the mask).
            int sign = (row % 2 == 0) ? 1 : -1;
            for (int j = 0; j < N; ++j) {
                if (!(mask & (1u << j))) continue;
                const RatFunc& entry = at(row, j);
                if (!entry.is_zero()) {
                    RatFunc term = entry * dp[mask & ~(1u << j)];
                    acc = sign > 0 ? acc + term : acc - term;
                }
                sign = -sign;
            }
            dp[mask] = std::move(acc);
        }
        return dp[(1u << N) - 1];
    }

    // Large matrices: ordinary elimination, dividing as we go.
    RfMatrix w = *this;
    RatFunc result = RatFunc::constant(Rational(1), nvars_);
    for (int col = 0; col < cols_; ++col) {
        int pr = -1;
        for (int r = col; r < rows_; ++r)
            if (!w.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) return RatFunc(nvars_);
        if (pr != col) {
            for (int c = 0; c < cols_; ++c) std::swap(w.at(pr, c), w.at(col, c));
            result = -result;
        }
        const RatFunc& pivot = w.at(col, col);
        result = result * pivot;
        RatFunc inv = pivot.inverse();
        for (int r = col + 1; r < rows_; ++r) {
            if (w.at(r, col).is_zero()) continue;
            RatFunc factor = w.at(r, col) * inv;
            for (int c = col; c < cols_; ++c) {
                if (w.at(col, c).is_zero()) continue;
                w.at(r, c) = w.at(r, c) - factor * w.at(col, c);
            }
        }
    }
    return result;
}

RfMatrix RfMatrix::inverted() const {
    if (rows_ != cols_) throw domain_error("inverse of non-square matrix");
    const int N = rows_;
    if (N <= 4) {
        // Adjugate over the determinant; keeps all gcd work against the
        // single determinant rather than between evolving pivots.
        RatFunc d = det();
        if (d.is_zero()) throw domain_error("matrix is singular");
        RatFunc dinv = d.inverse();
        RfMatrix inv(N, N, nvars_);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                RfMatrix minor(N - 1, N - 1, nvars_);
                for (int r = 0, rr = 0; r < N; ++r) {
                    if (r == j) continue;
                    for (int c = 0, cc = 0; c < N; ++c) {
                        if (c == i) continue;
                        minor.at(rr, cc) = at(r, c);
                        ++cc;
                    }
                    ++rr;
                }
                RatFunc cof = minor.det() * dinv;
                inv.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
            }
        return inv;
    }
    RfMatrix aug(rows_, 2 * cols_, nvars_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = RatFunc::constant(Rational(1), nvars_);
    }
    Elimination e(std::move(aug));
    // The left block is invertible iff every left column carries a pivot,
    // in which case full reduction leaves the identity there.
    for (int j = 0; j < cols_; ++j)
        if (e.pivot_row_of_col[j] != j) throw domain_error("matrix is singular");
    RfMatrix inv(rows_, cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = e.m.at(i, cols_ + j);
    return inv;
}

int rank_exact(const RfMatrix& m) {
    Elimination e(m);
    return e.rank();
}

int rank_specialized(const RfMatrix& m, SeededSource& src) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Rational> point(m.nvars());
        for (auto& p : point) p = src.next_rational();
        bool bad = false;
        QMatrix q(m.rows(), m.cols());
        for (int i = 0; i < m.rows() && !bad; ++i)
            for (int j = 0; j < m.cols(); ++j) {
                if (m.at(i, j).denominator_vanishes_at(point)) {
                    bad = true;
                    break;
                }
                q.at(i, j) = m.at(i, j).evaluated(point);
            }
        if (!bad) return q.rank();
    }
    throw resource_error("rank_specialized: 16 consecutive specializations hit a denominator zero");
}

std::vector<std::vector<RatFunc>> kernel_basis(const RfMatrix& m) {
    Elimination e(m);
    std::vector<std::vector<RatFunc>> basis;
    const int n = m.cols();
    for (int col = 0; col < n; ++col) {
        if (e.pivot_row_of_col[col] >= 0) continue;
        std::vector<RatFunc> v(n, RatFunc(m.nvars()));
        v[col] = RatFunc::constant(Rational(1), m.nvars());
        for (int c = 0; c < n; ++c) {
            int pr = e.pivot_row_of_col[c];
            if (pr >= 0) v[c] = -e.m.at(pr, col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rational(0)) {}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix shape mismatch");
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix shape mismatch in product");
    QMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
    return r;
}

bool QMatrix::operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

bool QMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

QMatrix QMatrix::block_diag(const QMatrix& o) const {
    QMatrix r(rows_ + o.rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
    return r;
}

QMatrix QMatrix::pow(int e) const {
    if (rows_ != cols_ || e < 0) throw domain_error("matrix power needs square base, e >= 0");
    QMatrix r = identity(rows_);
    QMatrix base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

namespace {

struct QElimination {
    QMatrix m;
    std::vector<int> pivot_row_of_col;
    int rank = 0;
    Rational det_acc = 1;
    bool det_zero = false;

    explicit QElimination(QMatrix input) : m(std::move(input)) {
        pivot_row_of_col.assign(m.cols(), -1);
        int row = 0;
        for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
            int pr = -1;
            for (int r = row; r < m.rows(); ++r)
                if (m.at(r, col) != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) {
                det_zero = true;
                continue;
            }
            if (pr != row) {
                for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(row, c));
                det_acc = -det_acc;
            }
            det_acc *= m.at(row, col);
            Rational inv = Rational(1) / m.at(row, col);
            for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
            for (int r = 0; r < m.rows(); ++r) {
                if (r == row || m.at(r, col) == 0) continue;
                Rational f = m.at(r, col);
                for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
            }
            pivot_row_of_col[col] = row;
            ++row;
        }
        rank = row;
    }
};

} // namespace

int QMatrix::rank() const { return QElimination(*this).rank; }

Rational QMatrix::det() const {
    if (rows_ != cols_) throw domain_error("determinant of non-square matrix");
    if (rows_ == 0) return 1;
    QElimination e(*this);
    if (e.rank < rows_) return 0;
    return e.det_acc;
}

QMatrix QMatrix::inverted() const {
    if (rows_ != cols_) throw domain_error("inverse of non-square matrix");
    QMatrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    QElimination e(std::move(aug));
    for (int j = 0; j < cols_; ++j)
        if (e.pivot_row_of_col[j] != j) throw domain_error("matrix is singular");
    QMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = e.m.at(i, cols_ + j);
    return inv;
}

std::vector<std::vector<Rational>> QMatrix::kernel() const {
    QElimination e(*this);
    std::vector<std::vector<Rational>> basis;
    for (int col = 0; col < cols_; ++col) {
        if (e.pivot_row_of_col[col] >= 0) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[col] = 1;
        for (int c = 0; c < cols_; ++c) {
            int pr = e.pivot_row_of_col[c];
            if (pr >= 0) v[c] = -e.m.at(pr, col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace slrep
