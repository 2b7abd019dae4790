#include "lyubeznik/polynomial.hpp"

#include <ostream>

namespace lyz {

namespace {

TermOrder poly_order(const RingPtr& ring) { return TermOrder{ring.get()}; }

} // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, TermList terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (auto& t : terms_) {
        t.comp = 0;
        t.coef %= ring_->characteristic();
    }
    terms::normalize(terms_, poly_order(ring_));
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
    Polynomial p(ring);
    const Coeff v = ring->from_int(c);
    if (v != 0) {
        p.terms_.push_back(Term{Monomial{}, 0, v});
    }
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) {
        throw Error("variable index out of range");
    }
    Monomial m;
    m.exp[index] = 1;
    m.degree = 1;
    return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
    Polynomial p(ring);
    c %= ring->characteristic();
    if (c != 0) {
        p.terms_.push_back(Term{m, 0, c});
    }
    return p;
}

Coeff Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) {
        return terms_.back().coef;
    }
    return 0;
}

std::uint32_t Polynomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.mono.degree);
    }
    return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_same_ring(ring_, rhs.ring_);
    terms_ = terms::add(terms_, rhs.terms_, poly_order(ring_));
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_same_ring(ring_, rhs.ring_);
    terms_ = terms::sub(terms_, rhs.terms_, poly_order(ring_));
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_);
    const bool a_smaller = a.size() <= b.size();
    r.terms_ = terms::multiply(a_smaller ? a.terms_ : b.terms_, a_smaller ? b.terms_ : a.terms_,
                               poly_order(a.ring_));
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    terms::negate(r.terms_, *ring_);
    return r;
}

Polynomial Polynomial::scaled(Coeff c) const {
    Polynomial r = *this;
    terms::scale(r.terms_, c % ring_->characteristic(), *ring_);
    return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
    // Base-p digits of k: f^k = prod_i (f^(p^i))^(d_i), and f^(p^i) is an exponent scaling.
    const Coeff p = ring_->characteristic();
    Polynomial result = constant(ring_, 1);
    unsigned e = 0;
    while (k > 0) {
        const std::uint64_t digit = k % p;
        if (digit != 0) {
            const Polynomial base = frobenius(e);
            for (std::uint64_t i = 0; i < digit; ++i) {
                result *= base;
            }
        }
        k /= p;
        ++e;
    }
    return result;
}

Polynomial Polynomial::frobenius(unsigned e) const {
    Polynomial r(ring_);
    r.terms_ = terms::frobenius(terms_, e, *ring_);
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) {
        return *this;
    }
    return scaled(ring_->inv(terms_.front().coef));
}

Polynomial Polynomial::translate(const std::vector<std::int64_t>& shift) const {
    const std::size_t n = ring_->nvars();
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial xi = variable(ring_, i);
        if (i < shift.size() && shift[i] != 0) {
            xi += constant(ring_, shift[i]);
        }
        images.push_back(std::move(xi));
    }
    Polynomial result(ring_);
    for (const auto& t : terms_) {
        Polynomial term = constant(ring_, t.coef);
        for (std::size_t i = 0; i < n; ++i) {
            if (t.mono.exp[i] != 0) {
                term *= images[i].pow(t.mono.exp[i]);
            }
        }
        result += term;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
    check_same_ring(ring_, other.ring_);
    return terms_ == other.terms_;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
    std::string s;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        if (m.exp[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += '*';
        }
        s += ring.var_names()[i];
        if (m.exp[i] > 1) {
            s += '^' + std::to_string(m.exp[i]);
        }
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty()) {
            s += " + ";
        }
        if (t.mono.is_one()) {
            s += std::to_string(t.coef);
        } else if (t.coef == 1) {
            s += monomial_to_string(t.mono, *ring_);
        } else {
            s += std::to_string(t.coef) + '*' + monomial_to_string(t.mono, *ring_);
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a.ring(), b.ring());
    if (b.is_zero()) {
        throw Error("division by the zero polynomial");
    }
    const Ring& ring = *a.ring();
    const std::size_t n = ring.nvars();
    const TermOrder ord{&ring};
    const Term& lb = b.lead();
    const Coeff inv_lb = ring.inv(lb.coef);
    TermList rem = a.terms();
    TermList quot;
    TermList scratch;
    while (!rem.empty()) {
        const Term& lt = rem.front();
        if (!mono_divides(lb.mono, lt.mono, n)) {
            throw Error("polynomial division is not exact");
        }
        const Monomial q = mono_div(lt.mono, lb.mono, n);
        const Coeff c = ring.mul(lt.coef, inv_lb);
        quot.push_back(Term{q, 0, c});
        terms::add_scaled(scratch, rem, ring.neg(c), q, b.terms(), ord);
        rem.swap(scratch);
    }
    return Polynomial(a.ring(), std::move(quot));
}

} // namespace lyz
