#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lyubeznik/ring.hpp"
#include "lyubeznik/terms.hpp"

namespace lyz {

/// Sparse polynomial over F_p; terms strictly descending in the ring's order.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring);
    /// Takes arbitrary terms (components ignored) and brings them to canonical form.
    Polynomial(RingPtr ring, TermList terms);

    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);

    const RingPtr& ring() const { return ring_; }
    const TermList& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1; }
    Coeff constant_term() const;
    /// Largest term; undefined on zero.
    const Term& lead() const { return terms_.front(); }
    /// Maximal total degree; 0 for the zero polynomial.
    std::uint32_t degree() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    Polynomial scaled(Coeff c) const;
    Polynomial pow(std::uint64_t k) const;
    /// a^(p^e); computed by scaling exponents.
    Polynomial frobenius(unsigned e) const;
    /// Divided by its leading coefficient.
    Polynomial monic() const;

    /// Substitutes X_k -> X_k + shift[k].
    Polynomial translate(const std::vector<std::int64_t>& shift) const;

    bool operator==(const Polynomial& other) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    TermList terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

std::string monomial_to_string(const Monomial& m, const Ring& ring);

/// Exact quotient a / b when b divides a; throws Error otherwise.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

} // namespace lyz
