#include "lyubeznik/free_vector.hpp"

namespace lyz {

TermOrder plain_order(const Ring& ring) { return TermOrder{&ring}; }

FreeVector::FreeVector(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

FreeVector::FreeVector(RingPtr ring, std::size_t rank, TermList terms)
    : ring_(std::move(ring)), rank_(rank), terms_(std::move(terms)) {
    for (auto& t : terms_) {
        if (t.comp >= rank_) {
            throw Error("vector component " + std::to_string(t.comp) + " outside rank " + std::to_string(rank_));
        }
        t.coef %= ring_->characteristic();
    }
    terms::normalize(terms_, plain_order(*ring_));
}

FreeVector FreeVector::unit(RingPtr ring, std::size_t rank, std::size_t i) {
    if (i >= rank) {
        throw Error("unit vector index out of range");
    }
    FreeVector v(std::move(ring), rank);
    v.terms_.push_back(Term{Monomial{}, std::uint32_t(i), 1});
    return v;
}

FreeVector FreeVector::from_coords(RingPtr ring, const std::vector<Polynomial>& coords) {
    TermList all;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        check_same_ring(ring, coords[i].ring());
        for (Term t : coords[i].terms()) {
            t.comp = std::uint32_t(i);
            all.push_back(t);
        }
    }
    return FreeVector(std::move(ring), coords.size(), std::move(all));
}

Polynomial FreeVector::coord(std::size_t i) const {
    TermList t;
    for (const auto& term : terms_) {
        if (term.comp == i) {
            t.push_back(Term{term.mono, 0, term.coef});
        }
    }
    return Polynomial(ring_, std::move(t));
}

std::vector<Polynomial> FreeVector::coords() const {
    std::vector<TermList> parts(rank_);
    for (const auto& term : terms_) {
        parts[term.comp].push_back(Term{term.mono, 0, term.coef});
    }
    std::vector<Polynomial> out;
    out.reserve(rank_);
    for (auto& part : parts) {
        out.emplace_back(ring_, std::move(part));
    }
    return out;
}

FreeVector& FreeVector::operator+=(const FreeVector& rhs) {
    check_same_ring(ring_, rhs.ring_);
    if (rank_ != rhs.rank_) {
        throw Error("rank mismatch in vector sum");
    }
    terms_ = terms::add(terms_, rhs.terms_, plain_order(*ring_));
    return *this;
}

FreeVector& FreeVector::operator-=(const FreeVector& rhs) {
    check_same_ring(ring_, rhs.ring_);
    if (rank_ != rhs.rank_) {
        throw Error("rank mismatch in vector difference");
    }
    terms_ = terms::sub(terms_, rhs.terms_, plain_order(*ring_));
    return *this;
}

FreeVector FreeVector::operator-() const {
    FreeVector r = *this;
    terms::negate(r.terms_, *ring_);
    return r;
}

FreeVector operator*(const Polynomial& f, const FreeVector& v) {
    check_same_ring(f.ring(), v.ring_);
    FreeVector r(v.ring_, v.rank_);
    r.terms_ = terms::multiply(f.terms(), v.terms_, plain_order(*v.ring_));
    return r;
}

FreeVector FreeVector::frobenius(unsigned e) const {
    FreeVector r(ring_, rank_);
    r.terms_ = terms::frobenius(terms_, e, *ring_);
    return r;
}

FreeVector FreeVector::embedded(std::size_t new_rank, std::size_t offset) const {
    if (offset + rank_ > new_rank) {
        throw Error("embedding does not fit");
    }
    FreeVector r(ring_, new_rank);
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
        t.comp += std::uint32_t(offset);
    }
    return r;
}

FreeVector FreeVector::slice(std::size_t first, std::size_t count) const {
    FreeVector r(ring_, count);
    for (const auto& t : terms_) {
        if (t.comp >= first && t.comp < first + count) {
            r.terms_.push_back(Term{t.mono, std::uint32_t(t.comp - first), t.coef});
        }
    }
    return r;
}

bool FreeVector::operator==(const FreeVector& other) const {
    check_same_ring(ring_, other.ring_);
    return rank_ == other.rank_ && terms_ == other.terms_;
}

std::string FreeVector::to_string() const {
    std::string s = "[";
    const auto cs = coords();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i != 0) {
            s += ", ";
        }
        s += cs[i].to_string();
    }
    return s + "]";
}

} // namespace lyz
