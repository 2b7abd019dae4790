#include "lyubeznik/module_ops.hpp"

#include <map>

namespace lyz {

void Subquotient::check() const {
    if (V.rank() != W.rank()) {
        throw Error("subquotient with mismatched ranks");
    }
    if (!V.contains(W)) {
        throw Error("subquotient denominator is not contained in the numerator");
    }
}

Submodule maximal_ideal(const RingPtr& ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        vars.push_back(Polynomial::variable(ring, i));
    }
    return Submodule::ideal(ring, vars);
}

Submodule sub_preimage(const PolyMatrix& m, const Submodule& t, const Submodule& v) {
    check_same_ring(m.ring(), t.ring());
    check_same_ring(m.ring(), v.ring());
    const std::size_t s = t.rank();
    const std::size_t r = v.rank();
    if (m.rows() != s || m.cols() != r) {
        throw Error("preimage matrix has the wrong shape");
    }
    const RingPtr& ring = v.ring();
    if (t.is_full()) {
        return v;
    }
    std::vector<TermList> gens;
    for (const auto& vl : v.generators()) {
        if (vl.is_zero()) {
            continue;
        }
        FreeVector top = m.apply(vl);
        TermList row = top.terms();
        for (Term x : vl.terms()) {
            x.comp += std::uint32_t(s);
            row.push_back(x);
        }
        gens.push_back(std::move(row));
    }
    for (const auto& tg : t.basis()) {
        gens.push_back(tg.terms());
    }
    auto out = eliminate_first_block(ring, s, r, std::move(gens));
    return Submodule(ring, r, std::move(out));
}

Submodule sub_intersect(const Submodule& a, const Submodule& b) {
    check_same_ring(a.ring(), b.ring());
    if (a.rank() != b.rank()) {
        throw Error("intersection of submodules with different ranks");
    }
    if (a.is_zero() || b.is_zero()) {
        return Submodule(a.ring(), a.rank());
    }
    if (a.contains(b)) {
        return b;
    }
    if (b.contains(a)) {
        return a;
    }
    return sub_preimage(PolyMatrix::identity(a.ring(), a.rank()), a, b);
}

Submodule sub_colon(const Submodule& w, const Polynomial& f) {
    check_same_ring(w.ring(), f.ring());
    if (f.is_zero()) {
        throw Error("colon by the zero polynomial");
    }
    if (f.is_constant()) {
        return w;
    }
    const PolyMatrix m = PolyMatrix::identity(w.ring(), w.rank()).scaled(f);
    return sub_preimage(m, w, Submodule::full(w.ring(), w.rank()));
}

Submodule sub_colon_ideal(const Submodule& w, const Submodule& ideal) {
    check_same_ring(w.ring(), ideal.ring());
    if (ideal.rank() != 1) {
        throw Error("colon by a submodule that is not an ideal");
    }
    if (ideal.is_zero()) {
        throw Error("colon by the zero ideal");
    }
    Submodule acc = Submodule::full(w.ring(), w.rank());
    for (const auto& g : ideal.basis()) {
        const Polynomial f = g.coord(0);
        if (f.is_constant()) {
            return w;
        }
        const PolyMatrix m = PolyMatrix::identity(w.ring(), w.rank()).scaled(f);
        acc = sub_preimage(m, w, acc);
    }
    return acc;
}

Submodule sub_saturate(const Submodule& w, const Polynomial& f) {
    Submodule cur = w;
    for (;;) {
        Submodule next = sub_colon(cur, f);
        if (cur.contains(next)) {
            return cur;
        }
        cur = next.reduced();
    }
}

std::size_t krull_dim(const Submodule& ideal) {
    if (ideal.rank() != 1) {
        throw Error("Krull dimension requested for a submodule of rank " + std::to_string(ideal.rank()));
    }
    const std::size_t n = ideal.ring()->nvars();
    const auto& basis = ideal.basis();
    std::vector<std::uint32_t> supports;
    for (const auto& g : basis) {
        const Monomial& lead = g.terms().front().mono;
        if (lead.is_one()) {
            throw Error("Krull dimension of the zero ring (unit ideal)");
        }
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (lead.exp[i] != 0) {
                s |= 1u << i;
            }
        }
        supports.push_back(s);
    }
    // Largest set of variables containing the support of no leading monomial.
    std::size_t best = 0;
    for (std::uint32_t set = 0; set < (1u << n); ++set) {
        const std::size_t size = std::size_t(__builtin_popcount(set));
        if (size <= best) {
            continue;
        }
        bool independent = true;
        for (std::uint32_t s : supports) {
            if ((s & ~set) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) {
            best = size;
        }
    }
    return best;
}

bool is_m_torsion(const Subquotient& q) {
    if (q.W.contains(q.V)) {
        return true;
    }
    const RingPtr& ring = q.V.ring();
    for (std::size_t k = 0; k < ring->nvars(); ++k) {
        if (!sub_saturate(q.W, Polynomial::variable(ring, k)).contains(q.V)) {
            return false;
        }
    }
    return true;
}

std::size_t fp_rank(const std::vector<FreeVector>& vs) {
    if (vs.empty()) {
        return 0;
    }
    const Ring& ring = *vs.front().ring();
    const TermOrder ord{&ring};
    // Row echelon form keyed by leading term.
    std::vector<TermList> pivots;
    auto find_pivot = [&](const Term& t) -> const TermList* {
        for (const auto& p : pivots) {
            if (p.front().comp == t.comp && p.front().mono == t.mono) {
                return &p;
            }
        }
        return nullptr;
    };
    TermList tmp;
    for (const auto& v : vs) {
        TermList row = v.terms();
        // Eliminate leading terms until the lead is new.
        for (;;) {
            if (row.empty()) {
                break;
            }
            const TermList* p = find_pivot(row.front());
            if (p == nullptr) {
                break;
            }
            terms::add_scaled(tmp, row, ring.neg(ring.mul(row.front().coef, ring.inv(p->front().coef))), Monomial{},
                              *p, ord);
            row.swap(tmp);
        }
        if (!row.empty()) {
            pivots.push_back(std::move(row));
        }
    }
    return pivots.size();
}

std::size_t socle_dimension(const Subquotient& q) {
    const RingPtr& ring = q.V.ring();
    Submodule acc = q.V;
    for (std::size_t k = 0; k < ring->nvars(); ++k) {
        const PolyMatrix m = PolyMatrix::identity(ring, q.rank()).scaled(Polynomial::variable(ring, k));
        acc = sub_preimage(m, q.W, acc);
    }
    std::vector<FreeVector> nfs;
    for (const auto& g : acc.generators()) {
        FreeVector nf = q.W.normal_form(g);
        if (!nf.is_zero()) {
            nfs.push_back(std::move(nf));
        }
    }
    return fp_rank(nfs);
}

} // namespace lyz
