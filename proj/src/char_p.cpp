#include "lyubeznik/char_p.hpp"

namespace lyz {

Submodule bracket_power(const Submodule& s, unsigned e) { return s.frobenius(e); }

PolyMatrix bracket_power(const PolyMatrix& m, unsigned e) { return m.frobenius(e); }

namespace {

// (I : f^k), stopping early once a colon step changes nothing.
Submodule colon_power(Submodule ideal, const Polynomial& f, std::uint64_t k) {
    for (std::uint64_t s = 0; s < k; ++s) {
        if (ideal.is_full()) {
            return ideal;
        }
        Submodule next = sub_colon(ideal, f).reduced();
        if (next == ideal) {
            return ideal;
        }
        ideal = std::move(next);
    }
    return ideal;
}

Polynomial product(const std::vector<Polynomial>& f, std::size_t count) {
    Polynomial r = Polynomial::constant(f.front().ring(), 1);
    for (std::size_t i = 0; i < count; ++i) {
        r *= f[i];
    }
    return r;
}

void check_nonzero(const std::vector<Polynomial>& f) {
    for (const auto& x : f) {
        if (x.is_zero()) {
            throw Error("limit ideals need nonzero polynomials");
        }
    }
}

} // namespace

LowerLimitResult limit_closure(const std::vector<Polynomial>& f, std::size_t e_max) {
    if (f.empty()) {
        throw Error("limit closure of an empty sequence");
    }
    check_nonzero(f);
    const RingPtr& ring = f.front().ring();
    const std::uint64_t p = ring->characteristic();
    // g_e = (f_1^q, ..., f_n^q) : (f_1...f_n)^(q-1), q = p^e; the colon by the product
    // power is taken one factor at a time.
    auto g = [&](unsigned e) {
        std::uint64_t q = 1;
        for (unsigned k = 0; k < e; ++k) {
            q *= p;
        }
        std::vector<Polynomial> pows;
        pows.reserve(f.size());
        for (const auto& x : f) {
            pows.push_back(x.frobenius(e));
        }
        Submodule ideal = Submodule::ideal(ring, pows).reduced();
        for (const auto& x : f) {
            ideal = colon_power(std::move(ideal), x, q - 1);
        }
        return ideal;
    };
    Submodule prev = g(1);
    for (unsigned e = 1; e <= e_max; ++e) {
        Submodule next = g(e + 1);
        if (next == prev) {
            return LowerLimitResult{prev, e};
        }
        prev = std::move(next);
    }
    throw ResourceLimit("limit closure did not stabilize within " + std::to_string(e_max) + " Frobenius steps");
}

LowerLimitResult lower_limit(const std::vector<Polynomial>& f, const RingPtr& ring) {
    for (const auto& x : f) {
        check_same_ring(ring, x.ring());
    }
    check_nonzero(f);
    if (f.size() <= 1) {
        return LowerLimitResult{Submodule(ring, 1), 0};
    }
    std::vector<Polynomial> head(f.begin(), f.end() - 1);
    LowerLimitResult lim = limit_closure(head);
    return LowerLimitResult{sub_saturate(lim.ideal, f.back()).reduced(), lim.stabilization_index};
}

Submodule limit_closure_step(const std::vector<Polynomial>& f, std::uint64_t j) {
    check_nonzero(f);
    const RingPtr& ring = f.front().ring();
    std::vector<Polynomial> pows;
    for (const auto& x : f) {
        pows.push_back(x.pow(j + 1));
    }
    const Submodule num = Submodule::ideal(ring, pows);
    if (j == 0) {
        return num.reduced();
    }
    return sub_colon(num, product(f, f.size()).pow(j)).reduced();
}

std::optional<LowerLimitResult> lower_limit_oracle(const std::vector<Polynomial>& f, std::size_t j_max) {
    if (f.empty()) {
        throw Error("the lower limit oracle needs at least one polynomial");
    }
    check_nonzero(f);
    const RingPtr& ring = f.front().ring();
    const std::size_t n = f.size();
    const Polynomial prod = product(f, n);
    auto step = [&](std::uint64_t j) {
        std::vector<Polynomial> pows;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            pows.push_back(f[i].pow(j + 1));
        }
        const Submodule num = Submodule::ideal(ring, pows);
        return sub_colon(num, prod.pow(j)).reduced();
    };
    Submodule prev = step(0);
    for (std::size_t j = 1; j <= j_max; ++j) {
        Submodule next = step(j);
        if (next == prev) {
            return LowerLimitResult{prev, j - 1};
        }
        prev = std::move(next);
    }
    return std::nullopt;
}

} // namespace lyz
