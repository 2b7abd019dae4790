#include "lyubeznik/filter_regular.hpp"

#include <random>
#include <set>

namespace lyz {

bool is_filter_regular_step(const Subquotient& m, const std::vector<Polynomial>& prefix, const Polynomial& g) {
    Submodule p = m.W;
    for (const auto& gj : prefix) {
        std::vector<FreeVector> scaled;
        for (const auto& v : m.V.generators()) {
            scaled.push_back(gj * v);
        }
        p = sub_sum(p, Submodule(m.V.ring(), m.rank(), std::move(scaled)));
    }
    p = p.reduced();
    const Submodule colon = sub_intersect(sub_colon(p, g), m.V);
    return is_m_torsion(Subquotient{colon, p});
}

namespace {

class CandidateStream {
public:
    CandidateStream(const RingPtr& ring, std::uint64_t seed, std::size_t position)
        : ring_(ring), rng_(seed * 0x9e3779b97f4a7c15ULL + position) {
        const std::size_t n = ring->nvars();
        linear_total_ = 1;
        for (std::size_t i = 0; i < n && linear_total_ < (1u << 30); ++i) {
            linear_total_ *= ring->characteristic();
        }
        linear_total_ -= 1;
    }

    Polynomial next() {
        const std::size_t n = ring_->nvars();
        const Coeff p = ring_->characteristic();
        std::uniform_int_distribution<Coeff> coef(0, p - 1);
        for (;;) {
            std::vector<Coeff> key;
            Polynomial f(ring_);
            if (seen_linear_.size() < linear_total_ && misses_ < 64 * (linear_total_ + 1)) {
                for (std::size_t i = 0; i < n; ++i) {
                    const Coeff c = coef(rng_);
                    key.push_back(c);
                    if (c != 0) {
                        f += Polynomial::variable(ring_, i).scaled(c);
                    }
                }
                if (f.is_zero() || !seen_linear_.insert(key).second) {
                    ++misses_;
                    continue;
                }
                return f;
            }
            // Quadratic forms plus a linear part, still inside m.
            for (std::size_t i = 0; i < n; ++i) {
                const Coeff c = coef(rng_);
                key.push_back(c);
                if (c != 0) {
                    f += Polynomial::variable(ring_, i).scaled(c);
                }
                for (std::size_t k = i; k < n; ++k) {
                    const Coeff d = coef(rng_);
                    key.push_back(d);
                    if (d != 0) {
                        f += (Polynomial::variable(ring_, i) * Polynomial::variable(ring_, k)).scaled(d);
                    }
                }
            }
            if (f.degree() < 2 || !seen_quadratic_.insert(key).second) {
                continue;
            }
            return f;
        }
    }

private:
    RingPtr ring_;
    std::mt19937_64 rng_;
    std::size_t linear_total_ = 0;
    std::size_t misses_ = 0;
    std::set<std::vector<Coeff>> seen_linear_;
    std::set<std::vector<Coeff>> seen_quadratic_;
};

} // namespace

FilterRegularSeq find_filter_regular_sequence(const Subquotient& m, std::size_t t, const FilterRegularOptions& opts) {
    const RingPtr& ring = m.V.ring();
    FilterRegularSeq seq;
    seq.seed = opts.seed;
    for (std::size_t pos = 0; pos < t; ++pos) {
        std::size_t tried = 0;
        bool accepted = false;
        if (pos < opts.forced.size()) {
            const Polynomial& g = opts.forced[pos];
            ++tried;
            if (g.constant_term() != 0 || g.is_zero()) {
                throw Error("forced candidate " + g.to_string() + " does not lie in the maximal ideal");
            }
            if (is_filter_regular_step(m, seq.elements, g)) {
                seq.elements.push_back(g);
                accepted = true;
            }
        }
        CandidateStream stream(ring, opts.seed, pos);
        while (!accepted) {
            if (tried >= opts.max_candidates) {
                throw ResourceLimit("no filter-regular element found at position " + std::to_string(pos + 1) +
                                    " after " + std::to_string(tried) + " candidates");
            }
            Polynomial g = stream.next();
            ++tried;
            if (is_filter_regular_step(m, seq.elements, g)) {
                seq.elements.push_back(std::move(g));
                accepted = true;
            }
        }
        seq.tried.push_back(tried);
    }
    return seq;
}

} // namespace lyz
