#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "lyubeznik/groebner.hpp"
#include "lyubeznik/parse.hpp"

namespace lyz::testing {

inline Polynomial P(const RingPtr& ring, std::string_view s) {
    return parse_poly(s, ring);
}

inline std::vector<Polynomial> Ps(const RingPtr& ring, std::string_view s) {
    return parse_poly_list(s, ring);
}

inline Submodule I(const RingPtr& ring, std::string_view s) {
    return Submodule::ideal(ring, parse_poly_list(s, ring));
}

inline FreeVector vec(const RingPtr& ring, std::string_view s) {
    return FreeVector::from_coords(ring, parse_poly_list(s, ring));
}

inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t deg) {
    std::vector<Monomial> out;
    Monomial m;
    auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
        if (var + 1 == n) {
            m.exp[var] = Exponent(left);
            m.degree = deg;
            out.push_back(m);
            m.exp[var] = 0;
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            m.exp[var] = Exponent(e);
            self(self, var + 1, left - e);
        }
        m.exp[var] = 0;
    };
    if (n == 0) {
        if (deg == 0) {
            out.push_back(m);
        }
        return out;
    }
    rec(rec, 0, deg);
    return out;
}

inline std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t deg) {
    std::vector<Monomial> out;
    for (std::uint32_t d = 0; d <= deg; ++d) {
        auto ms = monomials_of_degree(n, d);
        out.insert(out.end(), ms.begin(), ms.end());
    }
    return out;
}

/// Incremental row echelon form over F_p on sparse vectors indexed by (monomial, component).
class SpanOracle {
public:
    explicit SpanOracle(RingPtr ring) : ring_(std::move(ring)) {}

    void add(const FreeVector& v) {
        Row r = to_row(v);
        reduce(r);
        if (!r.empty()) {
            const std::size_t piv = r.begin()->first;
            const Coeff inv = ring_->inv(r.begin()->second);
            for (auto& [c, x] : r) {
                x = ring_->mul(x, inv);
            }
            pivots_.emplace(piv, std::move(r));
        }
    }

    bool contains(const FreeVector& v) {
        Row r = to_row(v);
        reduce(r);
        return r.empty();
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    using Key = std::pair<std::array<Exponent, kMaxVars>, std::uint32_t>;
    using Row = std::map<std::size_t, Coeff>;

    Row to_row(const FreeVector& v) {
        Row r;
        for (const auto& t : v.terms()) {
            auto [it, fresh] = index_.emplace(Key{t.mono.exp, t.comp}, index_.size());
            (void)fresh;
            r[it->second] = ring_->add(r[it->second], t.coef);
        }
        std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
        return r;
    }

    void reduce(Row& r) const {
        auto it = r.begin();
        while (it != r.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            const Coeff c = it->second;
            const std::size_t col = it->first;
            for (const auto& [k, x] : p->second) {
                Coeff& y = r[k];
                y = ring_->sub(y, ring_->mul(c, x));
            }
            std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
            it = r.upper_bound(col);
        }
    }

    RingPtr ring_;
    std::map<Key, std::size_t> index_;
    std::map<std::size_t, Row> pivots_;
};

/// Is v in the F_p-span of {mono * g : g in gens, deg(mono) <= deg_bound}? Exact membership
/// test for homogeneous inputs when deg_bound >= deg(v).
inline bool in_span(const std::vector<FreeVector>& gens, const FreeVector& v, std::uint32_t deg_bound) {
    const RingPtr& ring = v.ring();
    SpanOracle oracle(ring);
    for (const auto& m : monomials_up_to(ring->nvars(), deg_bound)) {
        const Polynomial mono = Polynomial::monomial(ring, m);
        for (const auto& g : gens) {
            oracle.add(mono * g);
        }
    }
    return oracle.contains(v);
}

inline std::uint32_t vec_degree(const FreeVector& v) {
    std::uint32_t d = 0;
    for (const auto& t : v.terms()) {
        d = std::max(d, t.mono.degree);
    }
    return d;
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }

    Polynomial homogeneous(const RingPtr& ring, std::uint32_t deg, std::size_t max_terms) {
        const auto ms = monomials_of_degree(ring->nvars(), deg);
        Polynomial f(ring);
        const std::size_t k = uniform(1, max_terms);
        for (std::size_t i = 0; i < k; ++i) {
            const Coeff c = Coeff(uniform(1, ring->characteristic() - 1));
            f += Polynomial::monomial(ring, ms[uniform(0, ms.size() - 1)], c);
        }
        return f;
    }

    Polynomial dense(const RingPtr& ring, std::uint32_t max_deg, std::size_t max_terms, bool constant_term = true) {
        const auto ms = monomials_up_to(ring->nvars(), max_deg);
        Polynomial f(ring);
        const std::size_t k = uniform(1, max_terms);
        for (std::size_t i = 0; i < k; ++i) {
            const Monomial& m = ms[uniform(0, ms.size() - 1)];
            if (!constant_term && m.degree == 0) {
                continue;
            }
            f += Polynomial::monomial(ring, m, Coeff(uniform(1, ring->characteristic() - 1)));
        }
        return f;
    }

    /// Vector with every coordinate homogeneous of degree deg (or zero).
    FreeVector homogeneous_vec(const RingPtr& ring, std::size_t rank, std::uint32_t deg, std::size_t max_terms) {
        std::vector<Polynomial> coords;
        for (std::size_t i = 0; i < rank; ++i) {
            coords.push_back(uniform(0, 3) == 0 ? Polynomial(ring) : homogeneous(ring, deg, max_terms));
        }
        return FreeVector::from_coords(ring, coords);
    }

    /// Random homogeneous combination of gens landing in degree deg (gens homogeneous).
    FreeVector combination(const RingPtr& ring, std::size_t rank, const std::vector<FreeVector>& gens,
                           std::uint32_t deg) {
        FreeVector out(ring, rank);
        for (const auto& g : gens) {
            const std::uint32_t dg = vec_degree(g);
            if (g.is_zero() || dg > deg || uniform(0, 1) == 0) {
                continue;
            }
            out += homogeneous(ring, deg - dg, 3) * g;
        }
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace lyz::testing
