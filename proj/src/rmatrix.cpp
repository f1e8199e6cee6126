#include "quiverlab/rmatrix.hpp"

#include <algorithm>

namespace quiverlab {

RMatrix RMatrix::identity(std::size_t n) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RMatrix::is_zero() const {
    for (const auto& q : data_)
        if (q != 0) return false;
    return true;
}

bool RMatrix::operator==(const RMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RMatrix RMatrix::transpose() const {
    RMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RMatrix RMatrix::operator*(const RMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw input_error("matrix product shape mismatch");
    RMatrix p(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                if (rhs.at(k, c) == 0) continue;
                p.at(r, c) += a * rhs.at(k, c);
            }
        }
    return p;
}

RMatrix RMatrix::operator+(const RMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("matrix sum shape mismatch");
    RMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + rhs.data_[i];
    return s;
}

RMatrix RMatrix::operator-(const RMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("matrix difference shape mismatch");
    RMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - rhs.data_[i];
    return s;
}

RMatrix RMatrix::operator-() const {
    RMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = -data_[i];
    return s;
}

RMatrix RMatrix::rows_block(std::size_t r0, std::size_t r1) const { return block(r0, r1, 0, cols_); }
RMatrix RMatrix::cols_block(std::size_t c0, std::size_t c1) const { return block(0, rows_, c0, c1); }

RMatrix RMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    if (r1 > rows_ || c1 > cols_ || r0 > r1 || c0 > c1) throw input_error("block range out of bounds");
    RMatrix b(r1 - r0, c1 - c0);
    for (std::size_t r = r0; r < r1; ++r)
        for (std::size_t c = c0; c < c1; ++c) b.at(r - r0, c - c0) = at(r, c);
    return b;
}

std::vector<Rational> RMatrix::col(std::size_t c) const {
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

RMatrix vstack(const RMatrix& top, const RMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw input_error("vstack column mismatch");
    RMatrix s(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) s.at(r, c) = top.at(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) s.at(top.rows() + r, c) = bottom.at(r, c);
    return s;
}

RMatrix hstack(const RMatrix& left, const RMatrix& right) {
    if (left.rows() != right.rows()) throw input_error("hstack row mismatch");
    RMatrix s(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) s.at(r, c) = left.at(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c) s.at(r, left.cols() + c) = right.at(r, c);
    }
    return s;
}

RMatrix from_column(const std::vector<Rational>& v) {
    RMatrix m(v.size(), 1);
    for (std::size_t r = 0; r < v.size(); ++r) m.at(r, 0) = v[r];
    return m;
}

RMatrix rref(const RMatrix& m, std::vector<std::size_t>* pivot_cols) {
    RMatrix r = m;
    if (pivot_cols) pivot_cols->clear();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
        std::size_t pivot = lead;
        while (pivot < r.rows() && r.at(pivot, c) == 0) ++pivot;
        if (pivot == r.rows()) continue;
        if (pivot != lead)
            for (std::size_t k = c; k < r.cols(); ++k) std::swap(r.at(pivot, k), r.at(lead, k));
        Rational inv = 1 / r.at(lead, c);
        for (std::size_t k = c; k < r.cols(); ++k) r.at(lead, k) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, c) == 0) continue;
            Rational factor = r.at(i, c);
            for (std::size_t k = c; k < r.cols(); ++k) r.at(i, k) -= factor * r.at(lead, k);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++lead;
    }
    return r;
}

std::size_t rank(const RMatrix& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

RMatrix kernel_basis(const RMatrix& m) {
    std::vector<std::size_t> pivots;
    RMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RMatrix k(m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        k.at(fc, j) = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) k.at(pivots[p], j) = -r.at(p, fc);
    }
    return k;
}

std::optional<std::vector<Rational>> solve(const RMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw input_error("solve: rhs length mismatch");
    RMatrix aug = hstack(m, from_column(b));
    std::vector<std::size_t> pivots;
    RMatrix r = rref(aug, &pivots);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt; // pivot in rhs column
    std::vector<Rational> x(m.cols());
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = r.at(p, m.cols());
    return x;
}

std::optional<RMatrix> right_inverse(const RMatrix& m) {
    RMatrix s(m.cols(), m.rows());
    for (std::size_t c = 0; c < m.rows(); ++c) {
        std::vector<Rational> e(m.rows());
        e[c] = 1;
        auto x = solve(m, e);
        if (!x) return std::nullopt;
        for (std::size_t r = 0; r < m.cols(); ++r) s.at(r, c) = (*x)[r];
    }
    return s;
}

RMatrix col_space_basis(const RMatrix& m) {
    std::vector<std::size_t> pivots;
    RMatrix r = rref(m.transpose(), &pivots);
    RMatrix basis(m.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t c = 0; c < m.rows(); ++c) basis.at(c, j) = r.at(j, c);
    return basis;
}

bool span_contains(const RMatrix& space, const RMatrix& sub) {
    if (space.rows() != sub.rows()) throw input_error("span_contains: ambient dimension mismatch");
    return rank(hstack(space, sub)) == rank(space);
}

RMatrix intersect(const std::vector<RMatrix>& spans) {
    if (spans.empty()) throw input_error("intersect: no spans given");
    std::size_t n = spans[0].rows();
    for (const auto& s : spans)
        if (s.rows() != n) throw input_error("intersect: ambient dimension mismatch");
    RMatrix current = col_space_basis(spans[0]);
    for (std::size_t i = 1; i < spans.size(); ++i) {
        // span(V) ∩ span(W) = V * (x-part of ker[V | -W])
        const RMatrix other = spans[i];
        RMatrix combined = hstack(current, -other);
        RMatrix k = kernel_basis(combined);
        RMatrix xs = k.rows_block(0, current.cols());
        current = col_space_basis(current * xs);
    }
    return current;
}

} // namespace quiverlab
