#include "lyubeznik/homalg.hpp"

#include "lyubeznik/char_p.hpp"

namespace lyz {

std::size_t FreeResolution::rank(std::size_t k) const {
    if (k == 0) {
        return 1;
    }
    if (k > d.size()) {
        return 0;
    }
    return d[k - 1].cols();
}

PolyMatrix FreeResolution::differential(std::size_t k, const RingPtr& ring) const {
    if (k == 0) {
        throw Error("differential index starts at 1");
    }
    if (k <= d.size()) {
        return d[k - 1];
    }
    return PolyMatrix(ring, rank(k - 1), 0);
}

FreeResolution FreeResolution::frobenius(unsigned e) const {
    FreeResolution r;
    for (const auto& m : d) {
        r.d.push_back(m.frobenius(e));
    }
    return r;
}

PolyMatrix FPModule::relation_matrix() const {
    return PolyMatrix::from_columns(ring(), rank(), relations.generators());
}

bool FPModuleMap::is_well_defined() const {
    for (const auto& rel : source.relations.generators()) {
        if (!target.relations.contains(matrix.apply(rel))) {
            return false;
        }
    }
    return true;
}

namespace {

PolyMatrix drop_column(const PolyMatrix& m, std::size_t col) {
    PolyMatrix r(m.ring(), m.rows(), m.cols() - 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t c = 0, w = 0; c < m.cols(); ++c) {
            if (c != col) {
                r(i, w++) = m(i, c);
            }
        }
    }
    return r;
}

PolyMatrix drop_row(const PolyMatrix& m, std::size_t row) {
    PolyMatrix r(m.ring(), m.rows() - 1, m.cols());
    for (std::size_t i = 0, w = 0; i < m.rows(); ++i) {
        if (i == row) {
            continue;
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            r(w, c) = m(i, c);
        }
        ++w;
    }
    return r;
}

// Removes unit entries of `next` together with the redundant generator of F_k they expose.
void prune(PolyMatrix& cur, PolyMatrix& next) {
    const Ring& ring = *cur.ring();
    for (;;) {
        std::size_t ur = 0, uc = 0;
        bool found = false;
        for (std::size_t r = 0; r < next.rows() && !found; ++r) {
            for (std::size_t c = 0; c < next.cols(); ++c) {
                const Polynomial& x = next(r, c);
                if (!x.is_zero() && x.is_constant()) {
                    ur = r;
                    uc = c;
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            return;
        }
        const Coeff inv = ring.inv(next(ur, uc).constant_term());
        for (std::size_t c = 0; c < next.cols(); ++c) {
            if (c == uc || next(ur, c).is_zero()) {
                continue;
            }
            const Polynomial factor = next(ur, c).scaled(inv);
            for (std::size_t r = 0; r < next.rows(); ++r) {
                if (!next(r, uc).is_zero()) {
                    next(r, c) -= factor * next(r, uc);
                }
            }
        }
        next = drop_column(drop_row(next, ur), uc);
        cur = drop_column(cur, ur);
    }
}

PolyMatrix drop_zero_columns(const PolyMatrix& m) {
    std::vector<FreeVector> keep;
    for (const auto& col : m.columns()) {
        if (!col.is_zero()) {
            keep.push_back(col);
        }
    }
    return PolyMatrix::from_columns(m.ring(), m.rows(), keep);
}

Submodule column_span(const PolyMatrix& m) { return Submodule(m.ring(), m.rows(), m.columns()); }

} // namespace

FreeResolution free_resolution(const Submodule& ideal, std::size_t length) {
    if (ideal.rank() != 1) {
        throw Error("free resolution of a submodule of rank " + std::to_string(ideal.rank()));
    }
    if (ideal.is_full()) {
        throw Error("free resolution of R/I with I the unit ideal");
    }
    FreeResolution res;
    const RingPtr& ring = ideal.ring();
    if (ideal.is_zero() || length == 0) {
        return res;
    }
    res.d.push_back(PolyMatrix::from_columns(ring, 1, ideal.basis()));
    while (res.d.size() < length) {
        PolyMatrix& cur = res.d.back();
        const Submodule syz = column_span(cur).syzygies();
        std::vector<FreeVector> cols;
        for (const auto& v : syz.generators()) {
            if (!v.is_zero()) {
                cols.push_back(v);
            }
        }
        if (cols.empty()) {
            break;
        }
        PolyMatrix next = PolyMatrix::from_columns(ring, cur.cols(), cols);
        prune(cur, next);
        next = drop_zero_columns(next);
        if (next.cols() == 0) {
            break;
        }
        res.d.push_back(std::move(next));
    }
    return res;
}

std::vector<PolyMatrix> lift_chain_map(const PolyMatrix& m0, const FreeResolution& source,
                                       const FreeResolution& target, std::size_t length) {
    const RingPtr& ring = m0.ring();
    std::vector<PolyMatrix> maps{m0};
    for (std::size_t k = 1; k <= length; ++k) {
        const PolyMatrix a = maps.back() * source.differential(k, ring);
        const PolyMatrix dt = target.differential(k, ring);
        PolyMatrix mk(ring, dt.cols(), a.cols());
        const Submodule span = column_span(dt);
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const FreeVector col = a.column(c);
            if (col.is_zero()) {
                continue;
            }
            const auto coeffs = span.lift(col);
            if (!coeffs) {
                throw Error("chain map lift failed at degree " + std::to_string(k));
            }
            for (std::size_t r = 0; r < coeffs->size(); ++r) {
                mk(r, c) = (*coeffs)[r];
            }
        }
        maps.push_back(std::move(mk));
    }
    return maps;
}

std::vector<PolyMatrix> lift_frobenius_chain_map(const FreeResolution& res, unsigned e, std::size_t length) {
    if (res.d.empty()) {
        throw Error("chain map lift needs a nonempty resolution");
    }
    const RingPtr& ring = res.d.front().ring();
    return lift_chain_map(PolyMatrix::identity(ring, 1), res.frobenius(e), res, length);
}

namespace {

Submodule transposed_image(const FreeResolution& res, std::size_t j, const RingPtr& ring) {
    const std::size_t rj = res.rank(j);
    if (j == 0) {
        return Submodule(ring, rj);
    }
    return column_span(res.differential(j, ring).transpose());
}

} // namespace

ExtModule ext_module(std::size_t j, const FreeResolution& res, const RingPtr& ring) {
    const std::size_t rj = res.rank(j);
    Submodule cycles_sub(ring, rj);
    if (rj > 0) {
        if (res.rank(j + 1) == 0) {
            cycles_sub = Submodule::full(ring, rj);
        } else {
            cycles_sub = column_span(res.differential(j + 1, ring).transpose()).syzygies();
        }
    }
    std::vector<FreeVector> z;
    for (const auto& v : cycles_sub.basis()) {
        z.push_back(v);
    }
    Submodule boundaries = transposed_image(res, j, ring);
    Submodule k0(ring, 0);
    for (;;) {
        const PolyMatrix zm = PolyMatrix::from_columns(ring, rj, z);
        k0 = sub_preimage(zm, boundaries, Submodule::full(ring, z.size())).reduced();
        // A relation with a unit coordinate makes that generator redundant.
        std::size_t drop = z.size();
        for (const auto& rel : k0.basis()) {
            for (const auto& t : rel.terms()) {
                if (t.mono.is_one()) {
                    drop = t.comp;
                    break;
                }
            }
            if (drop != z.size()) {
                break;
            }
        }
        if (drop == z.size()) {
            break;
        }
        z.erase(z.begin() + std::ptrdiff_t(drop));
    }
    ExtModule ext{FPModule{k0}, PolyMatrix::from_columns(ring, rj, z), boundaries};
    return ext;
}

ExtFrobenius ext_frobenius_map(std::size_t j, const Submodule& ideal) {
    const FreeResolution res = free_resolution(ideal, j + 1);
    return ext_frobenius_map(j, res, ideal.ring());
}

ExtFrobenius ext_frobenius_map(std::size_t j, const FreeResolution& res, const RingPtr& ring) {
    ExtModule ext = ext_module(j, res, ring);
    const std::size_t k = ext.module.rank();
    const std::size_t rj = res.rank(j);
    FPModule target{bracket_power(ext.module.relations, 1)};
    PolyMatrix u(ring, k, k);
    if (k > 0) {
        const PolyMatrix mt =
            j == 0 ? PolyMatrix::identity(ring, 1) : lift_frobenius_chain_map(res, 1, j)[j].transpose();
        // Cycles of the Frobenius complex are generated by the Frobenius of the cycles, modulo boundaries.
        const PolyMatrix zp = ext.cycles.frobenius(1);
        std::vector<FreeVector> gens = zp.columns();
        const Submodule bp = ext.boundaries.frobenius(1);
        gens.insert(gens.end(), bp.generators().begin(), bp.generators().end());
        const Submodule span(ring, rj, gens);
        for (std::size_t l = 0; l < k; ++l) {
            const FreeVector image = mt.apply(ext.cycles.column(l));
            const auto coeffs = span.lift(image);
            if (!coeffs) {
                throw Error("Frobenius map on Ext: image is not a cycle");
            }
            for (std::size_t r = 0; r < k; ++r) {
                u(r, l) = (*coeffs)[r];
            }
        }
    }
    FPModuleMap map{ext.module, target, u};
    if (!map.is_well_defined()) {
        throw Error("Frobenius map on Ext is not well defined");
    }
    return ExtFrobenius{std::move(ext), std::move(map)};
}

Submodule kernel_of_map(const FPModuleMap& phi) {
    return sub_preimage(phi.matrix, phi.target.relations, Submodule::full(phi.source.ring(), phi.source.rank()));
}

Submodule annihilator(const FPModule& m) {
    const RingPtr& ring = m.ring();
    Submodule acc = Submodule::full(ring, 1);
    for (std::size_t i = 0; i < m.rank(); ++i) {
        PolyMatrix e(ring, m.rank(), 1);
        e(i, 0) = Polynomial::constant(ring, 1);
        acc = sub_preimage(e, m.relations, acc);
    }
    return acc;
}

} // namespace lyz
