#pragma once

#include <string>
#include <vector>

#include "lyubeznik/polynomial.hpp"

namespace lyz {

/// Element of the free module R^r, stored as one term list over all components
/// (descending in the plain position-last module order).
class FreeVector {
public:
    FreeVector(RingPtr ring, std::size_t rank);
    /// Takes arbitrary terms and normalizes them; every component must be below `rank`.
    FreeVector(RingPtr ring, std::size_t rank, TermList terms);

    static FreeVector unit(RingPtr ring, std::size_t rank, std::size_t i);
    static FreeVector from_coords(RingPtr ring, const std::vector<Polynomial>& coords);
    static FreeVector from_poly(const Polynomial& f) { return from_coords(f.ring(), {f}); }

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const TermList& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial coord(std::size_t i) const;
    std::vector<Polynomial> coords() const;

    FreeVector& operator+=(const FreeVector& rhs);
    FreeVector& operator-=(const FreeVector& rhs);
    friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
    friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }
    FreeVector operator-() const;
    friend FreeVector operator*(const Polynomial& f, const FreeVector& v);

    FreeVector frobenius(unsigned e) const;
    /// Places this vector into R^new_rank starting at component `offset`.
    FreeVector embedded(std::size_t new_rank, std::size_t offset) const;
    /// Components [first, first + count) as a vector of R^count.
    FreeVector slice(std::size_t first, std::size_t count) const;

    bool operator==(const FreeVector& other) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t rank_;
    TermList terms_;
};

TermOrder plain_order(const Ring& ring);

} // namespace lyz
