#pragma once

#include <string>
#include <vector>

#include "lyubeznik/free_vector.hpp"

namespace lyz {

/// Dense matrix of polynomials. Acts on column vectors: R^cols -> R^rows.
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(RingPtr ring, std::size_t n);
    static PolyMatrix from_columns(RingPtr ring, std::size_t rows, const std::vector<FreeVector>& columns);
    /// Row-major nested list; all rows must have equal length.
    static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    FreeVector column(std::size_t c) const;
    std::vector<FreeVector> columns() const;

    PolyMatrix transpose() const;
    PolyMatrix frobenius(unsigned e) const;
    PolyMatrix scaled(const Polynomial& f) const;
    bool is_zero() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    FreeVector apply(const FreeVector& v) const;

    bool operator==(const PolyMatrix& other) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> entries_;
};

/// Columns of `a` followed by columns of `b`.
PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);

} // namespace lyz
