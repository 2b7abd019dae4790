#pragma once

// Sparse term-list kernels shared by Polynomial, FreeVector and the Groebner engine.
// A term list is kept strictly descending under a TermOrder with no zero coefficients.

#include <span>
#include <vector>

#include "lyubeznik/ring.hpp"

namespace lyz {

struct Term {
    Monomial mono;
    std::uint32_t comp = 0;
    Coeff coef = 0;

    bool operator==(const Term&) const = default;
};

using TermList = std::vector<Term>;

/// Module order on terms m*e_c.
///
/// With `split > 0`, components below `split` dominate every component at or
/// above it (block position-over-term). Within a block: optional per-component
/// degree shifts, then the ring's monomial order, then lower component index wins.
struct TermOrder {
    const Ring* ring = nullptr;
    std::uint32_t split = 0;
    std::span<const std::int32_t> shifts{};

    int compare(const Term& a, const Term& b) const {
        if (split != 0) {
            const bool ha = a.comp >= split;
            const bool hb = b.comp >= split;
            if (ha != hb) {
                return ha ? -1 : 1;
            }
        }
        if (!shifts.empty()) {
            const std::int64_t wa = std::int64_t(a.mono.degree) + shifts[a.comp];
            const std::int64_t wb = std::int64_t(b.mono.degree) + shifts[b.comp];
            if (wa != wb) {
                return wa > wb ? 1 : -1;
            }
        }
        const int c = ring->compare(a.mono, b.mono);
        if (c != 0) {
            return c;
        }
        if (a.comp != b.comp) {
            return a.comp < b.comp ? 1 : -1;
        }
        return 0;
    }

    bool greater(const Term& a, const Term& b) const { return compare(a, b) > 0; }
};

namespace terms {

/// Sort descending, merge equal monomials, drop zeros.
void normalize(TermList& t, const TermOrder& ord);

/// out = f + c * (m * g). `out` must not alias f or g.
void add_scaled(TermList& out, std::span<const Term> f, Coeff c, const Monomial& m,
                std::span<const Term> g, const TermOrder& ord);

/// f + g.
TermList add(std::span<const Term> f, std::span<const Term> g, const TermOrder& ord);
/// f - g.
TermList sub(std::span<const Term> f, std::span<const Term> g, const TermOrder& ord);

void scale(TermList& t, Coeff c, const Ring& ring);
void negate(TermList& t, const Ring& ring);

/// Product of a scalar-valued term list (all components 0) with a module term list.
TermList multiply(std::span<const Term> poly, std::span<const Term> vec, const TermOrder& ord);

/// Each exponent multiplied by p^e; coefficients are fixed by Frobenius on F_p.
TermList frobenius(std::span<const Term> t, unsigned e, const Ring& ring);

} // namespace terms
} // namespace lyz
