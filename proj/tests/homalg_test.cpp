#include <gtest/gtest.h>

#include "lyubeznik/char_p.hpp"
#include "lyubeznik/homalg.hpp"
#include "lyubeznik/module_ops.hpp"
#include "support.hpp"

using namespace lyz;
using namespace lyz::testing;

namespace {

struct Fixture {
    const char* name;
    std::size_t n;
    const char* gens;
};

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> f{
        {"ci2", 4, "X1, X2"},
        {"ci3", 4, "X1*X2 + X3^2, X4^2, X1 + X2*X3"},
        {"cycle4", 4, "X1*X2, X2*X3, X3*X4, X4*X1"},
        {"twisted", 4, "X1*X3 + X2^2, X1*X4 + X2*X3, X2*X4 + X3^2"},
        {"lines", 3, "X1*X2, X1*X3, X2*X3"},
        {"m2", 3, "X1^2, X1*X2, X2^2, X3"},
    };
    return f;
}

Submodule column_span(const PolyMatrix& m) {
    return Submodule(m.ring(), m.rows(), m.columns());
}

} // namespace

TEST(Homalg, ResolutionIsExact) {
    for (const auto& fx : fixtures()) {
        auto ring = make_ring(2, fx.n);
        const Submodule c = I(ring, fx.gens);
        const FreeResolution res = free_resolution(c, fx.n + 1);
        ASSERT_FALSE(res.d.empty());
        EXPECT_EQ(column_span(res.differential(1, ring)), c) << fx.name;
        for (std::size_t k = 1; k <= res.d.size(); ++k) {
            const PolyMatrix dk = res.differential(k, ring);
            const PolyMatrix dn = res.differential(k + 1, ring);
            EXPECT_TRUE((dk * dn).is_zero()) << fx.name << " k=" << k;
            // ker d_k = im d_(k+1)
            EXPECT_EQ(column_span(dk).syzygies(), column_span(dn)) << fx.name << " k=" << k;
        }
        // by Hilbert's syzygy theorem the resolution stops by step n
        EXPECT_LE(res.d.size(), fx.n) << fx.name;
    }
}

TEST(Homalg, FrobeniusChainMapSquaresCommute) {
    for (const auto& fx : fixtures()) {
        auto ring = make_ring(2, fx.n);
        const FreeResolution res = free_resolution(I(ring, fx.gens), fx.n + 1);
        const FreeResolution fres = res.frobenius(1);
        const auto maps = lift_frobenius_chain_map(res, 1, res.d.size());
        ASSERT_EQ(maps.size(), res.d.size() + 1);
        for (std::size_t k = 1; k < maps.size(); ++k) {
            EXPECT_EQ(res.differential(k, ring) * maps[k], maps[k - 1] * fres.differential(k, ring))
                << fx.name << " k=" << k;
        }
    }
}

TEST(Homalg, GenericChainLift) {
    auto ring = make_ring(3, 3);
    const Submodule a = I(ring, "X1^2, X2^2");
    const Submodule b = I(ring, "X1, X2");
    // R/a -> R/b induced by the identity
    const FreeResolution ra = free_resolution(a, 3), rb = free_resolution(b, 3);
    const auto maps = lift_chain_map(PolyMatrix::identity(ring, 1), ra, rb, 2);
    for (std::size_t k = 1; k < maps.size(); ++k) {
        EXPECT_EQ(rb.differential(k, ring) * maps[k], maps[k - 1] * ra.differential(k, ring));
    }
}

TEST(Homalg, ExtOfCompleteIntersection) {
    auto ring = make_ring(2, 4);
    const Submodule c = I(ring, "X1, X2");
    const FreeResolution res = free_resolution(c, 5);
    for (std::size_t j = 0; j <= 4; ++j) {
        const ExtModule e = ext_module(j, res, ring);
        if (j == 2) {
            ASSERT_EQ(e.module.rank(), 1u);
            EXPECT_EQ(e.module.relations, c);
        } else {
            EXPECT_TRUE(e.module.is_zero()) << j;
        }
    }
    const ExtFrobenius f = ext_frobenius_map(2, c);
    EXPECT_TRUE(f.map.is_well_defined());
    EXPECT_EQ(f.map.target.relations, bracket_power(c, 1));
    // the map R/c -> R/c^[2] is multiplication by X1*X2 up to a unit
    EXPECT_EQ(Submodule(ring, 1, {f.map.matrix.column(0)}), I(ring, "X1*X2"));
}

TEST(Homalg, ExtAnnihilatedByIdeal) {
    for (const auto& fx : fixtures()) {
        auto ring = make_ring(2, fx.n);
        const Submodule c = I(ring, fx.gens);
        const FreeResolution res = free_resolution(c, fx.n + 1);
        for (std::size_t j = 0; j <= fx.n; ++j) {
            const ExtModule e = ext_module(j, res, ring);
            if (e.module.is_zero()) {
                continue;
            }
            const Submodule ann = annihilator(e.module);
            EXPECT_TRUE(ann.contains(c)) << fx.name << " j=" << j;
            for (const auto& g : c.generators()) {
                for (std::size_t l = 0; l < e.module.rank(); ++l) {
                    EXPECT_TRUE(e.module.relations.contains(g.coord(0) * FreeVector::unit(ring, e.module.rank(), l)));
                }
            }
        }
    }
}

TEST(Homalg, ExtFrobeniusMapsWellDefined) {
    for (const auto& fx : fixtures()) {
        auto ring = make_ring(2, fx.n);
        const Submodule c = I(ring, fx.gens);
        for (std::size_t j = 0; j <= fx.n; ++j) {
            const ExtFrobenius f = ext_frobenius_map(j, c);
            EXPECT_TRUE(f.map.is_well_defined()) << fx.name << " j=" << j;
            EXPECT_EQ(f.map.target.relations, bracket_power(f.map.source.relations, 1));
        }
    }
}

TEST(Homalg, ExtIndependentOfResolution) {
    for (const auto& fx : fixtures()) {
        auto ring = make_ring(2, fx.n);
        const auto gens = Ps(ring, fx.gens);
        // a second presentation: redundant generators make a different (non-minimal) resolution
        std::vector<Polynomial> more = gens;
        more.push_back(gens[0] * Polynomial::variable(ring, 0) + gens.back());
        more.push_back(gens[0] + gens.back());
        const FreeResolution r1 = free_resolution(Submodule::ideal(ring, gens), fx.n + 1);
        FreeResolution r2;
        r2.d.push_back(PolyMatrix::from_rows(ring, {more}));
        // continue r2 by syzygies without pruning
        while (r2.d.size() < fx.n + 1) {
            const PolyMatrix& cur = r2.d.back();
            const Submodule syz = column_span(cur).syzygies();
            if (syz.is_zero()) {
                break;
            }
            r2.d.push_back(PolyMatrix::from_columns(ring, cur.cols(), syz.generators()));
        }
        for (std::size_t j = 0; j <= fx.n; ++j) {
            const ExtModule e1 = ext_module(j, r1, ring), e2 = ext_module(j, r2, ring);
            EXPECT_EQ(e1.module.is_zero(), e2.module.is_zero()) << fx.name << " j=" << j;
            if (e1.module.is_zero() || e2.module.is_zero()) {
                continue;
            }
            EXPECT_EQ(annihilator(e1.module), annihilator(e2.module)) << fx.name << " j=" << j;
            EXPECT_EQ(socle_dimension(e1.module.as_subquotient()), socle_dimension(e2.module.as_subquotient()))
                << fx.name << " j=" << j;
        }
    }
}

TEST(Homalg, KernelAndAnnihilator) {
    auto ring = make_ring(2, std::vector<std::string>{"x", "y"});
    const FPModule src{I(ring, "x")};
    const FPModule tgt{I(ring, "x^2")};
    const FPModuleMap mul{src, tgt, PolyMatrix::from_rows(ring, {{P(ring, "x")}})};
    EXPECT_TRUE(mul.is_well_defined());
    EXPECT_EQ(kernel_of_map(mul), I(ring, "x"));
    const FPModuleMap by_y{src, tgt, PolyMatrix::from_rows(ring, {{P(ring, "y")}})};
    EXPECT_FALSE(by_y.is_well_defined());
    EXPECT_EQ(annihilator(FPModule{Submodule(ring, 2, {vec(ring, "x, 0"), vec(ring, "0, y^2")})}), I(ring, "x*y^2"));
}
