#ifndef SLREP_MATRIX_HPP
#define SLREP_MATRIX_HPP

#include <functional>
#include <vector>

#include "slrep/ratfunc.hpp"
#include "slrep/seeded.hpp"

namespace slrep {

/// Dense matrix over the field of rational functions. Backs every rank and
/// determinant certificate in the library.
class RfMatrix {
public:
    RfMatrix() : rows_(0), cols_(0), nvars_(0) {}
    RfMatrix(int rows, int cols, int nvars);
    static RfMatrix identity(int n, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    RatFunc& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const RatFunc& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

    RfMatrix operator+(const RfMatrix& o) const;
    RfMatrix operator-(const RfMatrix& o) const;
    RfMatrix operator*(const RfMatrix& o) const;
    RfMatrix scaled(const RatFunc& c) const;
    bool operator==(const RfMatrix& o) const;

    bool is_identity() const;

    /// Entrywise variable permutation.
    RfMatrix permuted(const Permutation& p) const;
    RfMatrix extended(int new_nvars) const;
    RfMatrix substituted(const std::vector<RatFunc>& replacement) const;
    RfMatrix transposed() const;

    RfMatrix block_diag(const RfMatrix& o) const;
    RfMatrix kronecker(const RfMatrix& o) const;

    RatFunc det() const;
    /// Inverse; domain error when singular.
    RfMatrix inverted() const;

    std::vector<std::vector<std::string>> to_strings() const;

private:
    int rows_, cols_, nvars_;
    std::vector<RatFunc> entries_;
};

/// Exact rank over the fraction field. Gaussian elimination with the
/// deterministic pivot rule: columns left to right, first nonzero row.
int rank_exact(const RfMatrix& m);

/// Rank after substituting seeded random rationals for the variables,
/// resampling (up to 16 times) when a denominator vanishes. Always
/// <= rank_exact; equality off a measure-zero set, so full-rank claims may
/// be pre-screened here but must be confirmed exactly.
int rank_specialized(const RfMatrix& m, SeededSource& src);

/// Reduced row echelon basis of the right kernel, pivot-normalized; the
/// canonical basis of the solution space of m v = 0.
std::vector<std::vector<RatFunc>> kernel_basis(const RfMatrix& m);

/// Dense matrix over the rationals.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols);
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix scaled(const Rational& c) const;
    bool operator==(const QMatrix& o) const;
    bool is_zero() const;

    QMatrix block_diag(const QMatrix& o) const;
    QMatrix pow(int e) const;

    int rank() const;
    Rational det() const;
    QMatrix inverted() const;
    /// Basis of the right kernel in reduced echelon form.
    std::vector<std::vector<Rational>> kernel() const;

private:
    int rows_, cols_;
    std::vector<Rational> entries_;
};

} // namespace slrep

#endif
