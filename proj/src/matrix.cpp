#include "lyubeznik/matrix.hpp"

namespace lyz {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Polynomial::constant(ring, 1);
    }
    return m;
}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, std::size_t rows, const std::vector<FreeVector>& columns) {
    PolyMatrix m(ring, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].rank() != rows) {
            throw Error("column rank does not match matrix height");
        }
        const auto coords = columns[c].coords();
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = coords[r];
        }
    }
    return m;
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    PolyMatrix m(ring, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw Error("ragged matrix rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

FreeVector PolyMatrix::column(std::size_t c) const {
    std::vector<Polynomial> coords;
    coords.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        coords.push_back((*this)(r, c));
    }
    if (rows_ == 0) {
        return FreeVector(ring_, 0);
    }
    return FreeVector::from_coords(ring_, coords);
}

std::vector<FreeVector> PolyMatrix::columns() const {
    std::vector<FreeVector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        out.push_back(column(c));
    }
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

PolyMatrix PolyMatrix::frobenius(unsigned e) const {
    PolyMatrix m = *this;
    for (auto& x : m.entries_) {
        x = x.frobenius(e);
    }
    return m;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& f) const {
    PolyMatrix m = *this;
    for (auto& x : m.entries_) {
        x = f * x;
    }
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& x : entries_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    check_same_ring(a.ring_, b.ring_);
    if (a.cols_ != b.rows_) {
        throw Error("matrix dimensions do not match for product");
    }
    PolyMatrix m(a.ring_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Polynomial& x = a(r, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                if (!b(k, c).is_zero()) {
                    m(r, c) += x * b(k, c);
                }
            }
        }
    }
    return m;
}

FreeVector PolyMatrix::apply(const FreeVector& v) const {
    if (v.rank() != cols_) {
        throw Error("vector rank does not match matrix width");
    }
    FreeVector out(ring_, rows_);
    const auto coords = v.coords();
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!coords[c].is_zero()) {
            out += coords[c] * column(c);
        }
    }
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string PolyMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        s += r == 0 ? "[" : ", [";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c != 0) {
                s += ", ";
            }
            s += (*this)(r, c).to_string();
        }
        s += "]";
    }
    return s + "]";
}

PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows()) {
        throw Error("hconcat of matrices with different heights");
    }
    PolyMatrix m(a.ring(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            m(r, c) = a(r, c);
        }
        for (std::size_t c = 0; c < b.cols(); ++c) {
            m(r, a.cols() + c) = b(r, c);
        }
    }
    return m;
}

} // namespace lyz
