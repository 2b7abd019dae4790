#include "lyubeznik/terms.hpp"

#include <algorithm>

namespace lyz::terms {

void normalize(TermList& t, const TermOrder& ord) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.greater(a, b); });
    const Ring& ring = *ord.ring;
    std::size_t w = 0;
    for (std::size_t r = 0; r < t.size();) {
        Term acc = t[r];
        std::size_t s = r + 1;
        while (s < t.size() && t[s].comp == acc.comp && t[s].mono == acc.mono) {
            acc.coef = ring.add(acc.coef, t[s].coef);
            ++s;
        }
        if (acc.coef != 0) {
            t[w++] = acc;
        }
        r = s;
    }
    t.resize(w);
}

void add_scaled(TermList& out, std::span<const Term> f, Coeff c, const Monomial& m,
                std::span<const Term> g, const TermOrder& ord) {
    const Ring& ring = *ord.ring;
    const std::size_t n = ring.nvars();
    out.clear();
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    Term gt;
    bool have_g = false;
    auto load_g = [&]() {
        if (j < g.size()) {
            gt.mono = mono_mul(g[j].mono, m, n);
            gt.comp = g[j].comp;
            gt.coef = ring.mul(g[j].coef, c);
            have_g = true;
        } else {
            have_g = false;
        }
    };
    if (c == 0) {
        out.assign(f.begin(), f.end());
        return;
    }
    load_g();
    while (i < f.size() && have_g) {
        const int cmp = ord.compare(f[i], gt);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back(gt);
            ++j;
            load_g();
        } else {
            const Coeff s = ring.add(f[i].coef, gt.coef);
            if (s != 0) {
                out.push_back(f[i]);
                out.back().coef = s;
            }
            ++i;
            ++j;
            load_g();
        }
    }
    while (i < f.size()) {
        out.push_back(f[i++]);
    }
    while (have_g) {
        out.push_back(gt);
        ++j;
        load_g();
    }
}

TermList add(std::span<const Term> f, std::span<const Term> g, const TermOrder& ord) {
    TermList out;
    add_scaled(out, f, 1, Monomial{}, g, ord);
    return out;
}

TermList sub(std::span<const Term> f, std::span<const Term> g, const TermOrder& ord) {
    TermList out;
    add_scaled(out, f, ord.ring->neg(1), Monomial{}, g, ord);
    return out;
}

void scale(TermList& t, Coeff c, const Ring& ring) {
    if (c == 0) {
        t.clear();
        return;
    }
    if (c == 1) {
        return;
    }
    for (auto& term : t) {
        term.coef = ring.mul(term.coef, c);
    }
}

void negate(TermList& t, const Ring& ring) {
    for (auto& term : t) {
        term.coef = ring.neg(term.coef);
    }
}

TermList multiply(std::span<const Term> poly, std::span<const Term> vec, const TermOrder& ord) {
    const Ring& ring = *ord.ring;
    const std::size_t n = ring.nvars();
    if (poly.empty() || vec.empty()) {
        return {};
    }
    if (poly.size() == 1) {
        TermList out;
        out.reserve(vec.size());
        for (const auto& v : vec) {
            out.push_back(Term{mono_mul(v.mono, poly[0].mono, n), v.comp, ring.mul(v.coef, poly[0].coef)});
        }
        return out;
    }
    // Merge the shifted copies pairwise; each copy is already sorted.
    std::vector<TermList> parts;
    parts.reserve(poly.size());
    for (const auto& pt : poly) {
        TermList part;
        part.reserve(vec.size());
        for (const auto& v : vec) {
            part.push_back(Term{mono_mul(v.mono, pt.mono, n), v.comp, ring.mul(v.coef, pt.coef)});
        }
        parts.push_back(std::move(part));
    }
    while (parts.size() > 1) {
        std::vector<TermList> next;
        next.reserve((parts.size() + 1) / 2);
        for (std::size_t k = 0; k + 1 < parts.size(); k += 2) {
            next.push_back(add(parts[k], parts[k + 1], ord));
        }
        if (parts.size() % 2 == 1) {
            next.push_back(std::move(parts.back()));
        }
        parts = std::move(next);
    }
    return std::move(parts.front());
}

TermList frobenius(std::span<const Term> t, unsigned e, const Ring& ring) {
    std::uint64_t q = 1;
    for (unsigned k = 0; k < e; ++k) {
        q *= ring.characteristic();
        if (q > (std::uint64_t(1) << 32)) {
            throw ExponentOverflow("Frobenius power p^" + std::to_string(e) + " is too large");
        }
    }
    TermList out;
    out.reserve(t.size());
    for (const auto& term : t) {
        out.push_back(Term{mono_scale(term.mono, q, ring.nvars()), term.comp, term.coef});
    }
    // Scaling exponents preserves every order we support, so no resort is needed.
    return out;
}

} // namespace lyz::terms
