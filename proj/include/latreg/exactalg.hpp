#pragma once

// Exact integer and rational linear algebra.
//
// Every quantity here is arbitrary precision (GMP through boost::multiprecision).
// Matrices are plain values: row-major, immutable once handed out by an operation.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "latreg/errors.hpp"

namespace latreg {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix must have at least one row and one column");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix must have at least one row and one column");
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged matrix literal");
            entries_.insert(entries_.end(), r.begin(), r.end());
        }
    }

    /// Builds a matrix from a list of equal-length rows.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty() || rows.front().empty()) throw DimensionError("matrix must have at least one row and one column");
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DimensionError("ragged row list");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Builds a matrix whose columns are the given equal-length vectors.
    static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
        return from_rows(cols).transposed();
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<T>& entries() const noexcept { return entries_; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
        if (a.cols_ != x.size()) throw DimensionError("matrix-vector product: length mismatch");
        std::vector<T> y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
        return y;
    }

private:
    Matrix() = default;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

/// True iff every entry has denominator 1.
bool is_integral(const RatMatrix& m);
bool is_integral(const RatVector& v);

/// Throws DegeneracyError when some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
IntVector to_integer(const RatVector& v);

/// Exact determinant by fraction-aware Gaussian elimination.
Rational det(const RatMatrix& m);
/// Exact determinant by Bareiss elimination; stays in the integers throughout.
Integer det(const IntMatrix& m);

/// Exact rank over the rationals.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Inverse of a square nonsingular matrix; throws DegeneracyError when singular.
RatMatrix inverse(const RatMatrix& m);

/// Column-style Hermite normal form: h = m * u with u unimodular.
///
/// h is lower triangular in echelon sense: each pivot row has a single positive
/// pivot with zeros to its right, and the entries left of the pivot in that row lie
/// in [0, pivot). Columns past the rank are zero.
struct HermiteForm {
    IntMatrix h;
    IntMatrix u;
};
HermiteForm hnf(const IntMatrix& m);

/// Smith normal form: s = u * m * v with u, v unimodular, s diagonal,
/// diagonal entries nonnegative and each dividing the next.
struct SmithForm {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
};
SmithForm snf(const IntMatrix& m);

/// Nonzero invariant factors of m, in divisibility order.
std::vector<Integer> invariant_factors(const IntMatrix& m);

enum class RankMode {
    relative,  ///< index inside the saturation of the span, whatever its rank
    full,      ///< the vectors must span all of Q^n, otherwise the index is reported as 0
};

/// Index of the lattice generated by `vectors` inside (its rational span) ∩ Z^n.
Integer sublattice_index(const std::vector<IntVector>& vectors, std::size_t n, RankMode mode = RankMode::relative);

/// Inverse of a unimodular integer matrix, exact; throws DegeneracyError if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

Integer gcd_of(const IntVector& v);
/// Divides a nonzero vector by the gcd of its entries.
IntVector primitive(const IntVector& v);

/// x ↦ linear * x + translation.
class AffineMap {
public:
    /// Validates that `linear` is square, invertible, and matches the translation length.
    AffineMap(RatMatrix linear, RatVector translation);

    static AffineMap identity(std::size_t n);

    const RatMatrix& linear() const noexcept { return linear_; }
    const RatVector& translation() const noexcept { return translation_; }
    std::size_t dim() const noexcept { return translation_.size(); }

    RatVector operator()(const RatVector& x) const;
    RatVector operator()(const IntVector& x) const;

    friend bool operator==(const AffineMap& a, const AffineMap& b) {
        return a.linear_ == b.linear_ && a.translation_ == b.translation_;
    }

private:
    RatMatrix linear_;
    RatVector translation_;
};

/// (f ∘ g)(x) = f(g(x)).
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap inverse(const AffineMap& f);

/// The unique affine map sending src[i] to dst[i]; needs n+1 affinely independent sources.
AffineMap solve_affine_map(const std::vector<RatVector>& src, const std::vector<RatVector>& dst);

/// Integral linear part with |det| = 1 and integral translation.
bool is_lattice_affine(const AffineMap& map);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace latreg
