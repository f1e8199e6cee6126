#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quiverlab/rational.hpp"

namespace quiverlab {

/// Dense matrix over the rationals. 0xn and nx0 shapes are legal; all
/// elimination uses the first nonzero entry in column order as pivot, so
/// every derived object (rref, rank, kernel bases) is canonical and
/// byte-reproducible.
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RMatrix identity(std::size_t n);
    static RMatrix zero(std::size_t rows, std::size_t cols) { return RMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const RMatrix& other) const;
    bool operator!=(const RMatrix& other) const { return !(*this == other); }

    RMatrix transpose() const;
    RMatrix operator*(const RMatrix& rhs) const;
    RMatrix operator+(const RMatrix& rhs) const;
    RMatrix operator-(const RMatrix& rhs) const;
    RMatrix operator-() const;

    /// Row/column sub-blocks, half-open ranges.
    RMatrix rows_block(std::size_t r0, std::size_t r1) const;
    RMatrix cols_block(std::size_t c0, std::size_t c1) const;
    RMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

    std::vector<Rational> col(std::size_t c) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RMatrix vstack(const RMatrix& top, const RMatrix& bottom);
RMatrix hstack(const RMatrix& left, const RMatrix& right);
RMatrix from_column(const std::vector<Rational>& v);

/// Reduced row echelon form; pivot column indices (ascending) go to
/// pivot_cols when non-null.
RMatrix rref(const RMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const RMatrix& m);

/// Columns form the canonical basis of ker(m): one column per free column
/// of the rref, with a 1 in the free coordinate.
RMatrix kernel_basis(const RMatrix& m);

/// One solution of m x = b, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const RMatrix& m, const std::vector<Rational>& b);

/// A right inverse section: matrix s with m * s = identity(rows). Requires m
/// to have full row rank; nullopt otherwise.
std::optional<RMatrix> right_inverse(const RMatrix& m);

/// Canonical basis of the column span (rref of the transpose, transposed
/// back). Two matrices span the same space iff their canonical bases agree.
RMatrix col_space_basis(const RMatrix& m);

/// Does span(sub) lie inside span(space)? Both live in the same ambient
/// dimension (rows).
bool span_contains(const RMatrix& space, const RMatrix& sub);

/// Basis of the intersection of the given column spans; all must share the
/// ambient dimension.
RMatrix intersect(const std::vector<RMatrix>& spans);

} // namespace quiverlab
